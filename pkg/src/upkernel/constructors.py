"""Graph operations and stock generators.

Canonical labelings (also used by the JSON format):

* ``directed_path(n)``: ``x_0 .. x_{n-1}`` with arcs ``x_i -> x_{i-1}``
* ``directed_cycle(n)``: the same, modulo ``n``
* stars: center ``0``, leaves ``1 .. k``
* ``oriented_complete_bipartite(m, n)``: indices ``0 .. m-1`` are the m-side
* products: row-major over the factors' vertex orders
"""

from dataclasses import dataclass, field
from itertools import product as _cartesian

from .digraph import ColoredDigraph
from .errors import GraphError, RecipeError

OPERATIONS = ("cartesian", "strong", "zykov", "in-crown", "ex-crown",
              "line-outer", "line-inner")


# -- generators ------------------------------------------------------------------

def _positive(name, value, minimum=1):
    if int(value) < minimum:
        raise GraphError(f"{name} must be at least {minimum}, got {value}")
    return int(value)


def directed_path(n, colors=None):
    n = _positive("n", n)
    D = ColoredDigraph([0] * n, [(i, i - 1) for i in range(1, n)],
                       [f"x{i}" for i in range(n)])
    return D if colors is None else D.with_colors(colors)


def directed_cycle(n, colors=None):
    n = _positive("n", n, 2)
    D = ColoredDigraph([0] * n, [(i, (i - 1) % n) for i in range(n)],
                       [f"x{i}" for i in range(n)])
    return D if colors is None else D.with_colors(colors)


def in_star(k, colors=None):
    """S^-_k: every leaf points to the center."""
    k = _positive("k", k)
    D = ColoredDigraph([0] * (k + 1), [(i, 0) for i in range(1, k + 1)])
    return D if colors is None else D.with_colors(colors)


def out_star(k, colors=None):
    """S^+_k: the center points to every leaf."""
    k = _positive("k", k)
    D = ColoredDigraph([0] * (k + 1), [(0, i) for i in range(1, k + 1)])
    return D if colors is None else D.with_colors(colors)


def oriented_complete_bipartite(m, n, toward="n", colors=None):
    """Complete bipartite digraph with every arc from one side to the other.

    ``toward="n"`` orients arcs from the m-side to the n-side; ``"m"``
    reverses them.
    """
    m, n = _positive("m", m), _positive("n", n)
    if toward == "n":
        arcs = [(x, m + y) for x in range(m) for y in range(n)]
    elif toward == "m":
        arcs = [(m + y, x) for x in range(m) for y in range(n)]
    else:
        raise GraphError(f"toward must be 'm' or 'n', got {toward!r}")
    D = ColoredDigraph([0] * (m + n), arcs)
    return D if colors is None else D.with_colors(colors)


SPOKE_IN = "in"      # rim vertex -> hub
SPOKE_OUT = "out"    # hub -> rim vertex
SPOKE_BOTH = "both"


def wheel(n, spokes=SPOKE_IN, colors=None):
    """Oriented wheel: hub ``0``, rim ``1..n`` a directed cycle with arcs
    ``i -> i-1`` (and ``1 -> n``).

    ``spokes`` is one orientation for all spokes or a sequence of ``n``.
    """
    n = _positive("n", n, 3)
    if isinstance(spokes, str):
        spokes = [spokes] * n
    if len(spokes) != n:
        raise GraphError("need one spoke orientation per rim vertex")
    arcs = [(r, r - 1 if r > 1 else n) for r in range(1, n + 1)]
    for r, s in zip(range(1, n + 1), spokes):
        if s not in (SPOKE_IN, SPOKE_OUT, SPOKE_BOTH):
            raise GraphError(f"unknown spoke orientation {s!r}")
        if s in (SPOKE_IN, SPOKE_BOTH):
            arcs.append((r, 0))
        if s in (SPOKE_OUT, SPOKE_BOTH):
            arcs.append((0, r))
    D = ColoredDigraph([0] * (n + 1), arcs)
    return D if colors is None else D.with_colors(colors)


# -- products --------------------------------------------------------------------

def product_label(coords):
    return "(" + ",".join(str(c) for c in coords) + ")"


def _product(factors, strong, colors):
    factors = list(factors)
    if not factors:
        raise GraphError("a product needs at least one factor")
    sizes = [F.n for F in factors]
    coords = list(_cartesian(*[range(s) for s in sizes]))
    index = {c: i for i, c in enumerate(coords)}
    arcs = set()
    for c in coords:
        # per-coordinate options: stay put or move along an arc
        moves = []
        for F, x in zip(factors, c):
            moves.append([None] + sorted(F.out_neighbors(x)))
        for choice in _cartesian(*moves):
            moved = [m for m in choice if m is not None]
            if not moved:
                continue
            if not strong and len(moved) != 1:
                continue
            target = tuple(x if m is None else m for x, m in zip(c, choice))
            arcs.add((index[c], index[target]))
    D = ColoredDigraph([0] * len(coords), arcs,
                       [product_label(c) for c in coords])
    if colors is not None:
        if callable(colors):
            D = D.with_colors([colors(c) for c in coords])
        elif isinstance(colors, dict):
            D = D.with_colors([colors[c] for c in coords])
        else:
            D = D.with_colors(colors)
    return D


def product_coordinates(sizes):
    """Row-major coordinate tuples for factors of the given sizes."""
    return list(_cartesian(*[range(s) for s in sizes]))


def cartesian_product(factors, colors=None):
    """Cartesian product of any number of factors.

    ``colors`` may be a row-major sequence, a dict keyed by coordinate
    tuples, or a callable on coordinate tuples; omitted colors are 0.
    """
    return _product(factors, False, colors)


def strong_product(factors, colors=None):
    return _product(factors, True, colors)


def cartesian(D1, D2, colors=None):
    return _product([D1, D2], False, colors)


def strong(D1, D2, colors=None):
    return _product([D1, D2], True, colors)


# -- Zykov sum and crowns ------------------------------------------------------------

def _disjoint_union(parts, tags):
    colors, arcs, labels, offsets = [], [], [], []
    for part, tag in zip(parts, tags):
        off = len(colors)
        offsets.append(off)
        colors.extend(part.colors)
        arcs.extend((u + off, v + off) for u, v in part.arcs)
        labels.extend(f"{tag}{part.label(v)}" for v in part.vertices)
    return colors, arcs, labels, offsets


def zykov(G, H):
    """Replace each vertex ``v`` of ``G`` by ``H[v]``; every arc ``(u, v)``
    of ``G`` becomes all arcs from ``H[u]`` to ``H[v]``.

    Vertices are numbered block by block in the order of ``G``'s vertices.
    """
    H = list(H)
    if len(H) != G.n:
        raise RecipeError(
            f"Zykov sum needs {G.n} digraphs, one per base vertex, got "
            f"{len(H)}")
    for i, part in enumerate(H):
        if part.n == 0:
            raise RecipeError(f"Zykov component {i} is empty")
    colors, arcs, labels, offsets = _disjoint_union(
        H, [f"{G.label(v)}:" for v in G.vertices])
    for u, v in G.arcs:
        for a in range(H[u].n):
            for b in range(H[v].n):
                arcs.append((offsets[u] + a, offsets[v] + b))
    return ColoredDigraph(colors, arcs, labels)


def zykov_blocks(G, H):
    """Index ranges of each component inside ``zykov(G, H)``."""
    blocks, off = [], 0
    for part in H:
        blocks.append(range(off, off + part.n))
        off += part.n
    return blocks


def _normalize_attachments(D, H, attachments):
    attachments = list(attachments)
    if len(attachments) != len(H):
        raise RecipeError("need one attachment list per satellite digraph")
    norm = []
    for i, (part, att) in enumerate(zip(H, attachments)):
        if part.n < 2:
            raise RecipeError(
                f"satellite {i} has {part.n} vertices; at least 2 required")
        entries = []
        for x, ys in att:
            x = int(x)
            if not 0 <= x < D.n:
                raise RecipeError(
                    f"satellite {i} attaches to unknown vertex {x}")
            ys = sorted({int(y) for y in ys})
            for y in ys:
                if not 0 <= y < part.n:
                    raise RecipeError(
                        f"satellite {i} has no vertex {y}")
            entries.append((x, ys))
        norm.append(entries)
    return norm


def _crown(D, H, attachments, inward):
    H = list(H)
    att = _normalize_attachments(D, H, attachments)
    colors, arcs, labels, offsets = _disjoint_union(
        [D] + H, [""] + [f"H{i}:" for i in range(len(H))])
    for i, entries in enumerate(att):
        off = offsets[i + 1]
        for x, ys in entries:
            for y in ys:
                arcs.append((off + y, x) if inward else (x, off + y))
    return ColoredDigraph(colors, arcs, labels)


def in_crown(D, H, attachments):
    """Disjoint union of ``D`` and the satellites ``H`` plus arcs from
    satellite vertices into ``D``.

    ``attachments[i]`` is a list of ``(x, ys)``: every vertex ``y`` in
    ``ys`` (indices of ``H[i]``) gets an arc to vertex ``x`` of ``D``.
    Satellite ``i`` occupies indices following ``D`` and the earlier
    satellites.
    """
    return _crown(D, H, attachments, inward=True)


def ex_crown(D, H, attachments):
    """Mirror of :func:`in_crown`: arcs go from ``x`` to each ``y``."""
    return _crown(D, H, attachments, inward=False)


def crown_blocks(D, H):
    blocks, off = [], D.n
    for part in H:
        blocks.append(range(off, off + part.n))
        off += part.n
    return blocks


# -- line digraph ------------------------------------------------------------------

OUTER = "outer"
INNER = "inner"


def line_digraph(D, coloration=OUTER):
    """Line digraph of ``D``.

    Returns ``(L, origin)`` where ``origin[k]`` is the arc of ``D`` that
    vertex ``k`` of ``L`` stands for. Arcs are numbered in sorted order.
    The outer coloration takes the color of each arc's head, the inner one
    that of its tail.
    """
    if coloration not in (OUTER, INNER):
        raise GraphError(f"unknown coloration {coloration!r}")
    origin = tuple(D.sorted_arcs())
    by_tail = {}
    for k, (u, _) in enumerate(origin):
        by_tail.setdefault(u, []).append(k)
    arcs = [(h, k) for h, (_, v) in enumerate(origin)
            for k in by_tail.get(v, ())]
    pick = 1 if coloration == OUTER else 0
    colors = [D.color(a[pick]) for a in origin]
    labels = [f"({D.label(u)},{D.label(v)})" for u, v in origin]
    return ColoredDigraph(colors, arcs, labels), origin


# -- recipes -------------------------------------------------------------------------

@dataclass(frozen=True)
class ProductRecipe:
    """Declarative description of a composite digraph.

    For ``zykov`` and the crowns, ``factors[0]`` is the base digraph and the
    rest is the family. Line digraphs take a single factor.
    """
    operation: str
    factors: tuple
    attachments: tuple = ()
    colors: object = None
    name: str = ""
    meta: dict = field(default_factory=dict)

    def build(self):
        op = self.operation
        factors = list(self.factors)
        if op not in OPERATIONS:
            raise RecipeError(f"unknown operation {op!r}")
        if not factors:
            raise RecipeError("recipe has no factors")
        if op in ("cartesian", "strong"):
            build = cartesian_product if op == "cartesian" else strong_product
            return build(factors, self.colors)
        if op in ("line-outer", "line-inner"):
            if len(factors) != 1:
                raise RecipeError("a line digraph takes exactly one factor")
            L, _ = line_digraph(factors[0], op.split("-")[1])
            return L
        base, family = factors[0], factors[1:]
        if op == "zykov":
            D = zykov(base, family)
        else:
            crown = in_crown if op == "in-crown" else ex_crown
            D = crown(base, family, self.attachments)
        return D if self.colors is None else D.with_colors(self.colors)
