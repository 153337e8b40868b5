"""Immutable vertex-colored digraph on dense 0-based vertex indices."""

from .errors import GraphError, InvalidSetError


class ColoredDigraph:
    """A digraph with a total coloring by non-negative integers.

    Vertices are ``0 .. n-1``. Arcs are ordered pairs without self-loops;
    opposite pairs (digons) are allowed. ``labels`` is optional display
    metadata (product coordinates, figure names) and plays no role in any
    algorithm or in equality.
    """

    __slots__ = ("_colors", "_arcs", "_succ", "_pred", "_out_mask",
                 "_in_mask", "labels")

    def __init__(self, colors, arcs=(), labels=None):
        colors = tuple(int(c) for c in colors)
        for v, c in enumerate(colors):
            if c < 0:
                raise GraphError(f"vertex {v} has negative color {c}")
        n = len(colors)
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        succ = [set() for _ in range(n)]
        pred = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) has an undeclared endpoint")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            succ[u].add(v)
            pred[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("labels must name every vertex")
        self._colors = colors
        self._arcs = arcs
        self._succ = tuple(frozenset(s) for s in succ)
        self._pred = tuple(frozenset(p) for p in pred)
        self._out_mask = tuple(_mask(s) for s in succ)
        self._in_mask = tuple(_mask(p) for p in pred)
        self.labels = labels

    @classmethod
    def empty(cls, n=0, color=0):
        return cls([color] * n)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self):
        return len(self._colors)

    def __len__(self):
        return len(self._colors)

    @property
    def vertices(self):
        return range(len(self._colors))

    @property
    def colors(self):
        return self._colors

    @property
    def arcs(self):
        return self._arcs

    def sorted_arcs(self):
        return sorted(self._arcs)

    def color(self, v):
        return self._colors[v]

    def has_arc(self, u, v):
        return (u, v) in self._arcs

    def adjacent(self, u, v):
        return (u, v) in self._arcs or (v, u) in self._arcs

    def out_neighbors(self, v):
        return self._succ[v]

    def in_neighbors(self, v):
        return self._pred[v]

    def neighbors(self, v):
        return self._succ[v] | self._pred[v]

    def out_degree(self, v):
        return len(self._succ[v])

    def in_degree(self, v):
        return len(self._pred[v])

    def sinks(self):
        return [v for v in self.vertices if not self._succ[v]]

    def sources(self):
        return [v for v in self.vertices if not self._pred[v]]

    def out_mask(self, v):
        return self._out_mask[v]

    def in_mask(self, v):
        return self._in_mask[v]

    def label(self, v):
        return self.labels[v] if self.labels is not None else str(v)

    # -- derived digraphs ------------------------------------------------

    def with_colors(self, colors):
        if callable(colors):
            colors = [colors(v) for v in self.vertices]
        colors = list(colors)
        if len(colors) != self.n:
            raise GraphError(
                f"expected {self.n} colors, got {len(colors)}")
        return ColoredDigraph(colors, self._arcs, self.labels)

    def with_labels(self, labels):
        return ColoredDigraph(self._colors, self._arcs, labels)

    def reverse(self):
        return ColoredDigraph(self._colors, ((v, u) for u, v in self._arcs),
                              self.labels)

    def induced(self, vertices):
        """Subdigraph induced by ``vertices``, relabeled in increasing order.

        Returns ``(sub, keep)`` where ``keep[i]`` is the original index of
        vertex ``i`` of ``sub``.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[u], index[v]) for u, v in self._arcs
                if u in index and v in index]
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in keep]
        sub = ColoredDigraph([self._colors[v] for v in keep], arcs, labels)
        return sub, keep

    def remove(self, vertices):
        drop = set(vertices)
        return self.induced(v for v in self.vertices if v not in drop)

    def underlying_edges(self):
        return {frozenset(a) for a in self._arcs}

    # -- helpers ---------------------------------------------------------

    def _check_vertex(self, v):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidSetError(f"unknown vertex {v!r}")

    def vertex_set(self, members):
        """Validate ``members`` against this digraph and return a frozenset."""
        members = frozenset(members)
        for v in members:
            self._check_vertex(v)
        return members

    def __eq__(self, other):
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return self._colors == other._colors and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._colors, self._arcs))

    def __repr__(self):
        return (f"ColoredDigraph(colors={list(self._colors)}, "
                f"arcs={sorted(self._arcs)})")


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_mask(vertices):
    return _mask(vertices)


def from_mask(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out
