"""Deciders for products, Zykov sums and crowns.

Product deciders take the product digraph together with the parameters of
its factors and refuse inputs that are not exactly that product in the
canonical labeling of :mod:`upkernel.constructors`. All of the product
families here are acyclic except the torus, so the candidate kernel is
forced by the structure and only the coloring decides.
"""

from dataclasses import dataclass
from itertools import product as _cartesian

from . import constructors as cons
from . import core
from .errors import InconsistencyError, ShapeError
from .families import confirm, cycle_order, path_order, reject


@dataclass(frozen=True)
class LevelDecomposition:
    D0: frozenset
    levels: tuple  # levels[i]: vertices at distance i from the sink

    def parity_union(self, parity):
        out = set()
        for i in range(parity, len(self.levels), 2):
            out |= self.levels[i]
        return frozenset(out)


def _expect(D, expected, what):
    if D.n != expected.n or D.arcs != expected.arcs:
        raise ShapeError(f"digraph is not {what}")


def _absorbent_decision(D, witness, clause, tags=None):
    """Verdict for a structurally forced witness: true iff it is up-color
    absorbent."""
    zero = sorted(v for v in witness if D.color(v) == 0)
    if zero:
        return reject("zero-color", zero, clause,
                      f"kernel vertex {D.label(zero[0])} has color 0")
    bad = core.unabsorbed(D, witness)
    if bad:
        v = bad[0]
        tag = tags(v) if tags else "not-absorbed"
        return reject(tag, bad, clause,
                      f"{D.label(v)} (color {D.color(v)}) has no "
                      "out-neighbor of greater color in the kernel")
    return confirm(D, witness, clause)


def _check_kernel_structure(D, witness, clause):
    if not core.is_kernel(D, witness):
        raise InconsistencyError(
            f"{clause}: structural witness is not a kernel of the product")


def _sizes(shape, minimum=1):
    shape = [int(k) for k in shape]
    if not shape or min(shape) < minimum:
        raise ShapeError(f"factor sizes must be at least {minimum}")
    return shape


# -- grids -----------------------------------------------------------------------

def grid(shape, colors=None, strong=False):
    shape = _sizes(shape)
    build = cons.strong_product if strong else cons.cartesian_product
    return build([cons.directed_path(k) for k in shape], colors)


def grid_levels(shape, strong=False):
    """Distance-to-sink levels of a grid of directed paths: coordinate sums
    for the Cartesian product, maximum coordinates for the strong one."""
    shape = _sizes(shape)
    dist = max if strong else sum
    coords = cons.product_coordinates(shape)
    top = max(dist(c) for c in coords)
    levels = [set() for _ in range(top + 1)]
    for i, c in enumerate(coords):
        levels[dist(c)].add(i)
    levels = tuple(frozenset(s) for s in levels)
    return LevelDecomposition(levels[0], levels)


def grid_witness(shape):
    return grid_levels(shape).parity_union(0)


def decide_grid(D, shape):
    """Cartesian product of directed paths; the even levels form the only
    kernel, so the grid has an up-color kernel iff each odd-level vertex
    has a greater-colored out-neighbor one level down."""
    _expect(D, grid(shape), f"the Cartesian grid {tuple(shape)}")
    levels = grid_levels(shape)
    witness = levels.parity_union(0)
    return _absorbent_decision(D, witness, "grid theorem")


def greedy_independent(D, vertices):
    chosen = set()
    for v in sorted(vertices):
        if not D.neighbors(v) & chosen:
            chosen.add(v)
    return frozenset(chosen)


def strong_grid_witness(shape, choose=greedy_independent):
    G = grid(shape, strong=True)
    levels = grid_levels(shape, strong=True)
    out = set()
    for i in range(0, len(levels.levels), 2):
        out |= choose(G, levels.levels[i])
    return frozenset(out)


def decide_strong_grid(D, shape, choose=greedy_independent):
    """Strong product of directed paths.

    ``choose(D, level)`` picks the maximal independent subset of each even
    level (greedy by index by default). The union of the picks must be the
    kernel of the product; the verdict is whether it up-color absorbs every
    other vertex, including the unpicked vertices of even levels.
    """
    _expect(D, grid(shape, strong=True), f"the strong grid {tuple(shape)}")
    levels = grid_levels(shape, strong=True)
    witness = set()
    for i in range(0, len(levels.levels), 2):
        witness |= choose(D, levels.levels[i])
    witness = frozenset(witness)
    _check_kernel_structure(D, witness, "strong grid theorem")
    level_of = {v: i for i, lv in enumerate(levels.levels) for v in lv}

    def tag(v):
        return "odd-level" if level_of[v] % 2 else "even-level-unpicked"

    return _absorbent_decision(D, witness, "strong grid theorem", tag)


# -- star products ---------------------------------------------------------------------

def _star(kind, k):
    if kind == "in":
        return cons.in_star(k)
    if kind == "out":
        return cons.out_star(k)
    raise ShapeError(f"star kind must be 'in' or 'out', got {kind!r}")


def _stars(stars):
    stars = [(str(kind), int(k)) for kind, k in stars]
    if not stars:
        raise ShapeError("need at least one star factor")
    return stars


def star_product(stars, colors=None, strong=False):
    stars = _stars(stars)
    build = cons.strong_product if strong else cons.cartesian_product
    return build([_star(kind, k) for kind, k in stars], colors)


def star_levels(stars):
    """``(y, x)`` per vertex: nonzero coordinates among in-star factors and
    zero coordinates among out-star factors."""
    stars = _stars(stars)
    out = []
    for c in cons.product_coordinates([k + 1 for _, k in stars]):
        y = sum(1 for (kind, _), a in zip(stars, c) if kind == "in" and a)
        x = sum(1 for (kind, _), a in zip(stars, c)
                if kind == "out" and not a)
        out.append((y, x))
    return out


def star_cartesian_witness(stars):
    return frozenset(v for v, (y, x) in enumerate(star_levels(stars))
                     if (x + y) % 2 == 0)


def decide_star_cartesian(D, stars):
    """Cartesian product of in- and out-stars, given as ``[("in", k),
    ("out", k), ...]`` in factor order."""
    _expect(D, star_product(stars), "the given Cartesian star product")
    witness = star_cartesian_witness(stars)
    return _absorbent_decision(D, witness, "star product theorem")


def star_strong_witness(stars):
    G = star_product(stars, strong=True)
    return frozenset(G.sinks())


def decide_star_strong(D, stars):
    _expect(D, star_product(stars, strong=True),
            "the given strong star product")
    witness = frozenset(D.sinks())
    return _absorbent_decision(D, witness, "strong star theorem")


# -- path times oriented complete bipartite ------------------------------------------------

def path_bipartite(k, m, n, colors=None):
    """``P_k`` times ``K_{m,n}`` with the bipartite arcs pointing into the
    m-side, so the m-side vertices of the first row are sinks."""
    return cons.cartesian(cons.directed_path(k),
                          cons.oriented_complete_bipartite(m, n, toward="m"),
                          colors)


def path_bipartite_witness(k, m, n):
    """m-side vertices on even rows and n-side vertices on odd rows
    (rows counted from the sink row 0)."""
    width = m + n
    return frozenset(r * width + z for r in range(k) for z in range(width)
                     if (z < m) == (r % 2 == 0))


def decide_path_bipartite(D, k, m, n):
    _expect(D, path_bipartite(k, m, n), f"P_{k} x K_{{{m},{n}}}")
    witness = path_bipartite_witness(k, m, n)
    width = m + n

    def tag(v):
        return "m-side" if v % width < m else "n-side"

    return _absorbent_decision(D, witness, "path-bipartite theorem", tag)


# -- torus ------------------------------------------------------------------------------

def torus(a, b, colors=None):
    return cons.cartesian(cons.directed_cycle(a), cons.directed_cycle(b),
                          colors)


def torus_witnesses(a, b):
    """The two diagonal parity classes of ``C_a x C_b``."""
    even = frozenset(i * b + j for i in range(a) for j in range(b)
                     if (i + j) % 2 == 0)
    odd = frozenset(range(a * b)) - even
    return even, odd


def decide_torus(D, a, b):
    if a % 2 or b % 2 or a < 2 or b < 2:
        raise ShapeError("torus factors must be even directed cycles")
    _expect(D, torus(a, b), f"C_{a} x C_{b}")
    failures = []
    for name, witness in zip(("first", "second"), torus_witnesses(a, b)):
        bad = [v for v in witness if D.color(v) == 0]
        bad += core.unabsorbed(D, witness)
        if not bad:
            return confirm(D, witness, "torus proposition",
                           f"{name} parity class")
        failures.append(bad)
    return reject("both-classes", sorted(failures[0]), "torus proposition",
                  "neither diagonal class up-color absorbs the other")


# -- Zykov sums ---------------------------------------------------------------------------

def _best_kernel(part, limit):
    """Up-color kernel of ``part`` with the largest top color, or None."""
    kernels = core.up_color_kernels(part, limit=limit)
    if not kernels:
        return None
    best, top = None, -1
    for K in kernels:
        t = max(part.color(v) for v in K)
        if t > top:
            best, top = K, t
    return best


def decide_zykov_path(G, H, limit=None):
    """Zykov sum over a directed path; ``H[v]`` replaces vertex ``v`` of
    ``G``. The witness refers to vertices of ``zykov(G, H)``."""
    H = list(H)
    order = path_order(G)
    D = cons.zykov(G, H)
    blocks = cons.zykov_blocks(G, H)
    n = len(order)
    witness = set()
    for p in range(0, n, 2):
        part = H[order[p]]
        K = _best_kernel(part, limit)
        if K is None:
            return reject("component-kernel", [order[p]],
                          "Zykov path proposition",
                          f"component {G.label(order[p])} has no up-color "
                          "kernel")
        if p + 1 < n:
            top = max(part.color(v) for v in K)
            above = H[order[p + 1]]
            if max(above.colors) >= top:
                return reject(
                    "component-absorb", [order[p], order[p + 1]],
                    "Zykov path proposition",
                    f"no kernel of {G.label(order[p])} absorbs every vertex "
                    f"of {G.label(order[p + 1])}")
        witness |= {blocks[order[p]][v] for v in K}
    return confirm(D, witness, "Zykov path proposition")


def decide_zykov_cycle(G, H, limit=None):
    H = list(H)
    order = cycle_order(G)
    D = cons.zykov(G, H)
    n = len(order)
    if n % 2:
        return reject("odd-cycle", order, "Zykov odd-cycle corollary",
                      "a Zykov sum over an odd cycle has no up-color kernel")
    blocks = cons.zykov_blocks(G, H)
    for start in (0, 1):
        witness = set()
        ok = True
        for p in range(start, n, 2):
            part = H[order[p]]
            K = _best_kernel(part, limit)
            nxt = H[order[(p + 1) % n]]
            if K is None or max(nxt.colors) >= max(part.color(v) for v in K):
                ok = False
                break
            witness |= {blocks[order[p]][v] for v in K}
        if ok:
            return confirm(D, witness, "Zykov even-cycle corollary",
                           f"rotation {start}")
    return reject("rotation", order, "Zykov even-cycle corollary",
                  "neither rotation has absorbing component kernels")


# -- crowns -------------------------------------------------------------------------------

def _satellite_kernel(D, block, blocked, absorbed, limit):
    """Up-color kernel of the satellite (a block of ``D``) minus the
    ``absorbed`` vertices, avoiding ``blocked``. Returns global indices or
    None."""
    part, keep = D.induced(v for v in block if v not in absorbed)
    index = {v: i for i, v in enumerate(keep)}
    avoid = [index[v] for v in blocked if v in index]
    kernels = core.up_color_kernels(part, avoid=avoid, limit=limit)
    if not kernels:
        return None
    return {keep[i] for i in kernels[0]}


def decide_in_crown(D, H, attachments, limit=None):
    """In-crown ``D`` with satellites ``H``.

    Tries every up-color kernel ``K`` of ``D``. A satellite vertex with an
    arc into ``K`` is outside the kernel and is absorbed when one of those
    arcs goes to a greater color; everything else in the satellite needs a
    kernel of its own that avoids the vertices pointing into ``K``. When
    each satellite attaches uniformly to at most one vertex of ``K`` this
    is exactly the condition on ``K`` and the ``N_i``.
    """
    H = list(H)
    G = cons.in_crown(D, H, attachments)
    blocks = cons.crown_blocks(D, H)
    base = list(D.vertices)
    kernels = core.up_color_kernels(D, limit=limit)
    if not kernels:
        return reject("base-kernel", base, "in-crown theorem",
                      "the base digraph has no up-color kernel")
    last = None
    for K in kernels:
        witness = set(K)
        for i, block in enumerate(blocks):
            into = {y for y in block if G.out_neighbors(y) & K}
            absorbed = {y for y in into if any(
                G.color(x) > G.color(y) for x in G.out_neighbors(y) & K)}
            N = _satellite_kernel(G, block, into - absorbed, absorbed, limit)
            if N is None:
                last = (sorted(K), i)
                witness = None
                break
            witness |= N
        if witness is not None:
            return confirm(G, witness, "in-crown theorem",
                           f"base kernel {sorted(K)}")
    K, i = last
    return reject("satellite", list(blocks[i]), "in-crown theorem",
                  f"satellite {i} cannot be completed for any base kernel "
                  f"(last tried {K})")


def decide_ex_crown(D, H, attachments, limit=None):
    """Ex-crown ``D`` with satellites ``H``.

    Satellites receive arcs but send none to ``D``, so each keeps an
    up-color kernel ``N_i`` of its own. Given the ``N_i``, a base vertex
    with an arc into them is outside the kernel, absorbed when such an arc
    reaches a greater color; the rest of the base needs an up-color kernel
    avoiding the unabsorbed ones. All combinations of ``N_i`` are tried.
    """
    H = list(H)
    G = cons.ex_crown(D, H, attachments)
    blocks = cons.crown_blocks(D, H)
    options = []
    for i, (part, block) in enumerate(zip(H, blocks)):
        ks = core.up_color_kernels(part, limit=limit)
        if not ks:
            return reject("satellite-kernel", list(block), "ex-crown theorem",
                          f"satellite {i} has no up-color kernel")
        options.append([{block[v] for v in K} for K in ks])
    base = range(D.n)
    for combo in _cartesian(*options):
        N = set().union(*combo) if combo else set()
        into = {x for x in base if G.out_neighbors(x) & N}
        absorbed = {x for x in into if any(
            G.color(y) > G.color(x) for y in G.out_neighbors(x) & N)}
        K = _satellite_kernel(G, base, into - absorbed, absorbed, limit)
        if K is not None:
            return confirm(G, K | N, "ex-crown theorem")
    return reject("base", list(base), "ex-crown theorem",
                  "no choice of satellite kernels leaves the base an "
                  "up-color kernel")
