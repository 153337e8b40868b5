"""Seeded random instances for oracle cross-checks.

Every function takes a :class:`random.Random` so campaigns are
reproducible from a single seed. Colors are drawn from ``0..n`` unless a
``max_color`` is given.
"""

from itertools import combinations

from . import constructors as cons
from .digraph import ColoredDigraph


def colors(rng, n, max_color=None):
    top = n if max_color is None else max_color
    return [rng.randint(0, top) for _ in range(n)]


def relabel(D, perm):
    """Move vertex ``v`` to ``perm[v]``."""
    inv = sorted(range(D.n), key=lambda v: perm[v])
    return ColoredDigraph([D.color(v) for v in inv],
                          [(perm[u], perm[v]) for u, v in D.arcs])


def shuffled(rng, D):
    perm = list(range(D.n))
    rng.shuffle(perm)
    return relabel(D, perm)


def digraph(rng, n, p=0.3, max_color=None):
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < p]
    return ColoredDigraph(colors(rng, n, max_color), arcs)


def forest(rng, n, max_color=None, p_edge=0.85):
    """Random oriented forest: each vertex after the first joins a random
    earlier vertex with probability ``p_edge``, in a random direction."""
    arcs = []
    for v in range(1, n):
        if rng.random() < p_edge:
            u = rng.randrange(v)
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return shuffled(rng, ColoredDigraph(colors(rng, n, max_color), arcs))


def wheel(rng, rim, max_color=None):
    spokes = [rng.choice((cons.SPOKE_IN, cons.SPOKE_OUT, cons.SPOKE_BOTH))
              for _ in range(rim)]
    D = cons.wheel(rim, spokes)
    return shuffled(rng, D.with_colors(colors(rng, D.n, max_color)))


def pendant(rng, max_h=6, max_pendants=3, p=0.35, max_color=None):
    """``(D, H, pendants)`` with the pendant tips numbered after ``H``."""
    nh = rng.randint(1, max_h)
    H = digraph(rng, nh, p, max_color)
    k = rng.randint(1, max_pendants)
    n = nh + k
    top = n if max_color is None else max_color
    pend = [(rng.randrange(nh), nh + i) for i in range(k)]
    D = ColoredDigraph(list(H.colors) + [rng.randint(0, top)
                                         for _ in range(k)],
                       list(H.arcs) + pend)
    return D, H, pend


def cycle_with_pendant(rng, cycle_len, max_color=None):
    C = cons.directed_cycle(cycle_len)
    n = cycle_len + 1
    w = rng.randrange(cycle_len)
    D = ColoredDigraph(colors(rng, n, max_color),
                       list(C.arcs) + [(w, cycle_len)])
    H, _ = D.remove([cycle_len])
    return D, H, [(w, cycle_len)]


def odd_cycle_chord(rng, n, max_color=None, digon=None):
    C = cons.directed_cycle(n)
    pairs = [(u, v) for u, v in combinations(range(n), 2)
             if (u - v) % n not in (1, n - 1)]
    u, v = rng.choice(pairs)
    if digon is None:
        digon = rng.random() < 0.3
    if digon:
        chord = [(u, v), (v, u)]
    else:
        chord = [(u, v)] if rng.random() < 0.5 else [(v, u)]
    D = ColoredDigraph(colors(rng, n, max_color), list(C.arcs) + chord)
    return shuffled(rng, D)


def tournament(rng, n, max_color=None, complete=None, transitive=None):
    if complete is None:
        complete = rng.random() < 0.25
    if transitive is None:
        transitive = rng.random() < 0.4
    arcs = []
    order = list(range(n))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    for u, v in combinations(range(n), 2):
        if complete:
            arcs += [(u, v), (v, u)]
        elif transitive:
            arcs.append((u, v) if rank[u] > rank[v] else (v, u))
        else:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return ColoredDigraph(colors(rng, n, max_color), arcs)


def family(rng, count, max_size=2, p=0.4, max_color=None, min_size=1):
    return [digraph(rng, rng.randint(min_size, max_size), p, max_color)
            for _ in range(count)]


def crown(rng, max_total=14, max_base=5, max_satellites=3, p=0.35,
          max_color=None):
    """``(D, H, attachments)`` for a random crown of bounded total size."""
    nd = rng.randint(1, max_base)
    D = digraph(rng, nd, p, max_color)
    H, total = [], nd
    for _ in range(rng.randint(0, max_satellites)):
        size = rng.randint(2, 3)
        if total + size > max_total:
            break
        H.append(digraph(rng, size, p + 0.1, max_color))
        total += size
    attachments = []
    for part in H:
        entries = []
        for x in rng.sample(range(nd), rng.randint(1, min(2, nd))):
            if rng.random() < 0.6:
                ys = list(range(part.n))
            else:
                ys = rng.sample(range(part.n), rng.randint(1, part.n))
            entries.append((x, ys))
        attachments.append(entries)
    return D, H, attachments
