"""Deciders for paths, cycles, forests, wheels, pendant arcs, odd cycles
with a chord, tournaments and complete digraphs.

Each decider validates the shape of its input first and raises
:class:`~upkernel.errors.ShapeError` on anything outside its family. A
positive verdict always carries a witness that has been re-checked with
:func:`~upkernel.core.is_up_color_kernel`.
"""

from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from . import core
from .errors import InconsistencyError, ShapeError

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class FamilyDecision:
    verdict: bool
    witness: frozenset = None
    violated: tuple = None  # (tag, (vertex, ...))
    clause: str = ""
    detail: str = ""

    def __bool__(self):
        return self.verdict


def confirm(D, witness, clause, detail=""):
    """Positive decision, after checking ``witness`` really is a kernel."""
    witness = frozenset(witness)
    if not core.is_up_color_kernel(D, witness):
        raise InconsistencyError(
            f"{clause}: condition held but {sorted(witness)} "
            "is not an up-color kernel")
    return FamilyDecision(True, witness, None, clause, detail)


def reject(tag, vertices, clause, detail=""):
    return FamilyDecision(False, None, (tag, tuple(vertices)), clause, detail)


def _c(D, v):
    return f"c({D.label(v)})"


# -- shape recognition -------------------------------------------------------

def weak_components(D, vertices=None):
    vertices = set(D.vertices if vertices is None else vertices)
    seen, comps = set(), []
    for s in sorted(vertices):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in D.neighbors(v):
                if w in vertices and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def path_order(D):
    """Vertices of a directed path listed from the sink: ``[x0, x1, ...]``
    with arcs ``x_i -> x_{i-1}``."""
    n = D.n
    if n == 0:
        raise ShapeError("not a path: no vertices")
    if len(D.arcs) != n - 1:
        raise ShapeError(f"not a path: {len(D.arcs)} arcs on {n} vertices")
    sinks = D.sinks()
    if len(sinks) != 1:
        raise ShapeError(f"not a path: {len(sinks)} sinks")
    order = [sinks[0]]
    while len(order) < n:
        preds = D.in_neighbors(order[-1])
        if len(preds) != 1:
            raise ShapeError(
                f"not a path: vertex {D.label(order[-1])} has in-degree "
                f"{len(preds)}")
        (p,) = preds
        if p in order:
            raise ShapeError("not a path: contains a cycle")
        order.append(p)
    if D.in_degree(order[-1]) != 0:
        raise ShapeError("not a path: the last vertex has an in-arc")
    return order


def cycle_order(D):
    """Vertices of a directed cycle ``[x0, x1, ...]`` with arcs
    ``x_i -> x_{i-1}`` (indices mod n), starting from the lowest index."""
    n = D.n
    if n < 2:
        raise ShapeError("not a cycle: fewer than 2 vertices")
    if len(D.arcs) != n:
        raise ShapeError(f"not a cycle: {len(D.arcs)} arcs on {n} vertices")
    for v in D.vertices:
        if D.in_degree(v) != 1 or D.out_degree(v) != 1:
            raise ShapeError(
                f"not a cycle: vertex {D.label(v)} has in/out-degree "
                f"{D.in_degree(v)}/{D.out_degree(v)}")
    order = [0]
    while True:
        (p,) = D.in_neighbors(order[-1])
        if p == 0:
            break
        order.append(p)
    if len(order) != n:
        raise ShapeError("not a cycle: several disjoint cycles")
    return order


def is_forest(D):
    parent = list(D.vertices)

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in D.underlying_edges():
        u, v = tuple(e)
        if D.has_arc(u, v) and D.has_arc(v, u):
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def acyclic_kernel(D, vertices=None):
    """The unique kernel of an acyclic digraph (or of its induced part on
    ``vertices``), built from the sinks backwards."""
    vertices = set(D.vertices if vertices is None else vertices)
    graph = {v: D.out_neighbors(v) & vertices for v in vertices}
    try:
        order = list(TopologicalSorter(graph).static_order())
    except CycleError:
        raise ShapeError("digraph is not acyclic") from None
    kernel = set()
    for v in order:  # out-neighbors come first
        if not graph[v] & kernel:
            kernel.add(v)
    return frozenset(kernel)


# -- paths and cycles ----------------------------------------------------------

def decide_path(D):
    order = path_order(D)
    n = len(order)
    for i in range(0, n, 2):
        a = order[i]
        if i + 1 < n:
            b = order[i + 1]
            if not D.color(a) > D.color(b):
                return reject(
                    "path-pair", (a, b), "path proposition",
                    f"{_c(D, a)}>{_c(D, b)} violated "
                    f"({D.color(a)} ≤ {D.color(b)})")
        elif D.color(a) == 0:
            # an unpaired source at even position stays in every kernel
            return reject("zero-color", (a,), "path proposition",
                          f"{_c(D, a)}>0 violated")
    return confirm(D, order[0::2], "path proposition")


def decide_even_cycle(D):
    order = cycle_order(D)
    n = len(order)
    if n % 2:
        return reject("odd-cycle", order, "even-cycle corollary",
                      f"directed cycle of odd length {n} has no kernel")
    first_failure = None
    for start in (0, 1):
        keep = order[start::2]
        bad = [order[(i + 1) % n] for i in range(start, n, 2)
               if not D.color(order[(i + 1) % n]) < D.color(order[i])]
        if not bad:
            return confirm(D, keep, "even-cycle corollary",
                           f"parity class {start}")
        if first_failure is None:
            first_failure = bad
    return reject("alternation", first_failure, "even-cycle corollary",
                  "neither parity class up-color absorbs the other")


# -- forests -------------------------------------------------------------------

@dataclass(frozen=True)
class ForestLeveling:
    parity: tuple  # EVEN or ODD per vertex
    trace: tuple   # per vertex: ((depth, level), ...)

    @property
    def even(self):
        return frozenset(v for v, p in enumerate(self.parity) if p == EVEN)

    @property
    def odd(self):
        return frozenset(v for v, p in enumerate(self.parity) if p == ODD)


def _levels(D, members):
    """Backward breadth-first levels from the sinks of ``D[members]``."""
    level = {v: 0 for v in members if not D.out_neighbors(v) & members}
    frontier = sorted(level)
    k = 0
    while frontier:
        k += 1
        nxt = set()
        for v in frontier:
            for u in D.in_neighbors(v) & members:
                if u not in level:
                    nxt.add(u)
        for u in nxt:
            level[u] = k
        frontier = sorted(nxt)
    return level


def level_forest(D):
    """Recursive sink-first leveling of an oriented forest.

    Level the current subforest from its sinks, keep the even levels, and
    repeat on the subforest they induce until it has no arcs. A vertex is
    even-leveled when it was even at every depth.
    """
    if not is_forest(D):
        raise ShapeError("not a forest")
    trace = [[] for _ in D.vertices]
    members = set(D.vertices)
    depth = 0
    while True:
        level = _levels(D, members)
        for v, k in level.items():
            trace[v].append((depth, k))
        members = {v for v, k in level.items() if k % 2 == 0}
        if not any(D.out_neighbors(v) & members for v in members):
            break
        depth += 1
    parity = tuple(EVEN if v in members else ODD for v in D.vertices)
    return ForestLeveling(parity, tuple(tuple(t) for t in trace))


def decide_forest(D):
    """Forest decider.

    An oriented forest is acyclic, so it has exactly one kernel; the
    forest has an up-color kernel iff every vertex outside that kernel has a
    greater-colored out-neighbor inside it (and no member is colored 0).
    The recursive leveling of :func:`level_forest` yields this kernel on
    most inputs but can mislabel a vertex whose only even out-neighbor is
    demoted at a deeper recursion, so the kernel is computed directly.
    """
    if not is_forest(D):
        raise ShapeError("not a forest")
    kernel = acyclic_kernel(D)
    zero = sorted(v for v in kernel if D.color(v) == 0)
    if zero:
        return reject("zero-color", zero, "forest theorem",
                      f"even-leveled vertex {D.label(zero[0])} has color 0")
    bad = core.unabsorbed(D, kernel)
    if bad:
        v = bad[0]
        return reject("not-absorbed", bad, "forest theorem",
                      f"odd-leveled vertex {D.label(v)} has no even-leveled "
                      "out-neighbor of greater color")
    return confirm(D, kernel, "forest theorem")


# -- wheels --------------------------------------------------------------------

def wheel_parts(D):
    """Return ``(hub, rim_order)`` for an oriented wheel.

    The rim must be a directed cycle of length at least 3 and the hub must
    be adjacent to every rim vertex; spokes may point either way or both.
    """
    n = D.n
    if n < 4:
        raise ShapeError("not a wheel: fewer than 4 vertices")
    for h in D.vertices:
        if len(D.neighbors(h)) != n - 1:
            continue
        rim, keep = D.remove([h])
        try:
            order = cycle_order(rim)
        except ShapeError:
            continue
        return h, [keep[i] for i in order]
    raise ShapeError("not a wheel: no hub whose removal leaves a directed "
                     "cycle")


def decide_wheel(D):
    h, rim = wheel_parts(D)
    ch = D.color(h)
    others = [v for v in D.vertices if v != h]
    if all(D.has_arc(r, h) and D.color(r) < ch for r in others):
        return confirm(D, [h], "wheel (a)", "hub absorbs every rim vertex "
                       "and has the greatest color")
    n = len(rim)
    if n % 2:
        return reject("odd-rim", rim, "wheel",
                      "hub does not absorb every rim vertex and the rim is "
                      "odd")
    for start in (0, 1):
        keep = rim[start::2]
        ok = all(D.color(rim[(i + 1) % n]) < D.color(rim[i])
                 for i in range(start, n, 2))
        if not ok:
            continue
        for w in keep:
            if D.has_arc(h, w) and ch < D.color(w):
                return confirm(D, keep, "wheel (b)",
                               f"hub absorbed by {D.label(w)}")
    return reject("wheel", [h], "wheel",
                  "hub is neither the kernel nor absorbed by a rim kernel")


# -- pendant arcs --------------------------------------------------------------

def decide_pendant(D, H, pendants, limit=None):
    """Decide a digraph made of ``H`` plus outward pendant arcs.

    ``pendants`` lists pairs ``(w, v)`` of vertices of ``D``: each ``v`` is
    a new sink whose only arc is ``(w, v)``. ``H`` must be ``D`` with the
    ``v`` removed (vertex order preserved); pass ``None`` to derive it.

    Every ``v`` lies in every kernel, so no ``w`` can. A ``w`` whose pendant
    has greater color is already absorbed; the rest of ``H`` then needs an
    up-color kernel of ``H`` minus those absorbed ``w`` that avoids the
    remaining ``w``. With all pendants absorbing this is the first
    corollary, with none it is the second.
    """
    pendants = [(int(w), int(v)) for w, v in pendants]
    tips = {v for _, v in pendants}
    if len(tips) != len(pendants):
        raise ShapeError("pendant vertices must be distinct")
    for w, v in pendants:
        if (D.out_neighbors(v) or D.in_neighbors(v) != {w}):
            raise ShapeError(
                f"pendant {D.label(v)} must have exactly the arc from "
                f"{D.label(w)}")
        if w in tips:
            raise ShapeError("a pendant vertex cannot carry another pendant")
    base, keep = D.remove(tips)
    if H is not None and H != base:
        raise ShapeError("H is not D with the pendant vertices removed")
    zero = [v for _, v in pendants if D.color(v) == 0]
    if zero:
        return reject("zero-color-pendant", zero, "pendant corollaries",
                      f"pendant {D.label(zero[0])} is a sink colored 0")
    attach = {w for w, _ in pendants}
    absorbed = {w for w, v in pendants if D.color(v) > D.color(w)}
    if absorbed == attach:
        clause = "pendant corollary (i)"
    elif not absorbed:
        clause = "pendant corollary (ii)"
    else:
        clause = "pendant corollaries (mixed)"
    rest, rest_keep = D.induced(v for v in keep if v not in absorbed)
    index = {v: i for i, v in enumerate(rest_keep)}
    avoid = [index[w] for w in attach - absorbed]
    kernels = core.up_color_kernels(rest, avoid=avoid, limit=limit)
    if not kernels:
        return reject("sub-kernel", sorted(attach), clause,
                      "no up-color kernel of the remainder avoids the "
                      "attachment vertices")
    witness = {rest_keep[i] for i in kernels[0]} | tips
    return confirm(D, witness, clause)


# -- odd cycle with a chord ----------------------------------------------------

def chord_parts(D):
    """Split ``D`` into an odd directed cycle and one chord.

    Returns ``(cycle_order, chord_arcs)``; the chord is one arc or a digon
    between two vertices that are not consecutive on the cycle.
    """
    n = D.n
    arcs = D.arcs
    if n < 5 or n % 2 == 0:
        raise ShapeError("not an odd cycle with a chord: need an odd number "
                         "of vertices, at least 5")
    if len(arcs) == n + 1:
        candidates = [frozenset([a]) for a in sorted(arcs)]
    elif len(arcs) == n + 2:
        candidates = [frozenset([(u, v), (v, u)]) for u, v in sorted(arcs)
                      if u < v and (v, u) in arcs]
    else:
        raise ShapeError("not an odd cycle with a chord: wrong arc count")
    for chord in candidates:
        rest = type(D)(D.colors, arcs - chord)
        try:
            order = cycle_order(rest)
        except ShapeError:
            continue
        pos = {v: i for i, v in enumerate(order)}
        u, v = next(iter(chord))
        if (pos[u] - pos[v]) % n in (1, n - 1):
            continue
        return order, chord
    raise ShapeError("not an odd cycle with a chord")


def decide_odd_cycle_chord(D, limit=None):
    """Odd cycle plus chord: some in-degree-2 vertex ``v`` must up-color
    absorb both in-neighbors, and the remaining paths need up-color kernels.

    The remaining paths start at ``v``'s out-neighbor, which cannot join
    ``v`` in a kernel, so the path kernels must also avoid it.
    """
    chord_parts(D)
    failures = []
    for v in D.vertices:
        if D.in_degree(v) != 2:
            continue
        u, w = sorted(D.in_neighbors(v))
        if not (D.color(u) < D.color(v) and D.color(w) < D.color(v)):
            failures.append(v)
            continue
        rest, keep = D.remove([u, v, w])
        blocked = D.out_neighbors(v) - {u, w}
        witness = {v}
        ok = True
        for comp in weak_components(rest):
            sub, sub_keep = rest.induced(comp)
            decision = decide_path(sub)
            if not decision:
                ok = False
                break
            witness |= {keep[sub_keep[i]] for i in decision.witness}
        if ok and not witness & blocked:
            return confirm(D, witness, "chord theorem",
                           f"{D.label(v)} absorbs {D.label(u)} and "
                           f"{D.label(w)}")
        failures.append(v)
    return reject("chord", failures, "chord theorem",
                  "no in-degree-2 vertex absorbs both in-neighbors with a "
                  "kernel of the remaining paths")


# -- tournaments and complete digraphs -----------------------------------------

def tournament_kind(D):
    n = D.n
    both = one = 0
    for u in range(n):
        for v in range(u + 1, n):
            a, b = D.has_arc(u, v), D.has_arc(v, u)
            if a and b:
                both += 1
            elif a or b:
                one += 1
            else:
                raise ShapeError(
                    f"not a tournament: {D.label(u)} and {D.label(v)} are "
                    "not adjacent")
    if one == 0:
        return "complete"
    if both == 0:
        return "tournament"
    raise ShapeError("neither a tournament nor a complete digraph")


def decide_tournament(D):
    """A kernel here is a single vertex; it must be a sink (or anything, in
    a complete digraph) whose color is strictly the largest."""
    kind = tournament_kind(D)
    if D.n == 0:
        return confirm(D, [], kind)
    top = max(D.colors)
    tops = [v for v in D.vertices if D.color(v) == top]
    if kind == "complete":
        pick = tops[0]
    else:
        sinks = [v for v in tops if D.out_degree(v) == 0]
        if not sinks:
            return reject("max-not-sink", tops, "tournament lemma",
                          "no vertex of greatest color has out-degree 0")
        pick = sinks[0]
    if len(tops) > 1:
        return reject("tied-maximum", tops, f"{kind} lemma",
                      f"greatest color {top} is shared by {len(tops)} "
                      "vertices")
    if top == 0:
        return reject("zero-color", tops, f"{kind} lemma",
                      "greatest color is 0")
    return confirm(D, [pick], f"{kind} lemma")
