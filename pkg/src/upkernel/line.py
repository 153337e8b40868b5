"""Kernels of a digraph versus kernels of its line digraph.

Arc subsets of ``D`` double as vertex subsets of ``L(D)``; they are
represented as frozensets of ``(tail, head)`` pairs. Use
:func:`arcs_to_line_vertices` to turn one into indices of the digraph
returned by :func:`~upkernel.constructors.line_digraph`.
"""

from dataclasses import dataclass

from . import core
from .constructors import OUTER, line_digraph
from .errors import InvalidSetError


def _arc_set(D, H):
    H = frozenset((int(u), int(v)) for u, v in H)
    for a in H:
        if a not in D.arcs:
            raise InvalidSetError(f"{a} is not an arc of the digraph")
    return H


def map_f(D, Z):
    """Arcs of ``D`` whose head lies in ``Z``."""
    Z = D.vertex_set(Z)
    return frozenset((u, v) for u, v in D.arcs if v in Z)


def heads(D, H):
    """Head-set of an arc subset; equals the preimage under ``map_f`` for
    subsets in the image of ``map_f``."""
    return frozenset(v for _, v in _arc_set(D, H))


def map_g(D, H):
    """Head-set of ``H`` plus the sources of ``D`` not adjacent to it."""
    Z = heads(D, H)
    extra = {x for x in D.sources() if x not in Z and not D.neighbors(x) & Z}
    return Z | extra


def arcs_to_line_vertices(origin, H):
    index = {a: k for k, a in enumerate(origin)}
    return frozenset(index[a] for a in H)


def line_vertices_to_arcs(origin, ks):
    return frozenset(origin[k] for k in ks)


def independence_transfer_check(D, Z, L=None):
    """``(Z independent in D, f(Z) independent in L(D))``."""
    if L is None:
        L = line_digraph(D)
    Lg, origin = L
    fz = arcs_to_line_vertices(origin, map_f(D, Z))
    return core.is_independent(D, Z), core.is_independent(Lg, fz)


def source_hypothesis_holds(D):
    """Every in-degree-0 vertex has a smaller color than each out-neighbor."""
    return all(D.color(u) < D.color(v)
               for u in D.sources() for v in D.out_neighbors(u))


def nonzero_sources(D):
    return all(D.color(u) > 0 for u in D.sources())


@dataclass(frozen=True)
class CountReport:
    countD: int
    countL: int
    hypothesis: bool
    nonzero_sources: bool

    @property
    def consistent(self):
        return not self.hypothesis or self.countD == self.countL


def verify_count_theorem(D, limit=None):
    """Count up-color kernels of ``D`` and of its outer-colored line digraph.

    ``consistent`` only demands equal counts when the source hypothesis
    holds. ``nonzero_sources`` is reported separately: a source colored 0
    that is forced into every kernel of ``D`` breaks the equality even
    under the hypothesis.
    """
    L, _ = line_digraph(D, OUTER)
    return CountReport(
        core.count_up_color_kernels(D, limit=limit),
        core.count_up_color_kernels(L, limit=limit),
        source_hypothesis_holds(D),
        nonzero_sources(D),
    )


def kernel_images(D, limit=None):
    """Kernels of ``D``, kernels of ``L(D)``-outer, and the images of each
    under ``map_f`` and ``map_g`` (as arc sets / vertex sets)."""
    L, origin = line_digraph(D, OUTER)
    kd = core.up_color_kernels(D, limit=limit)
    kl = [line_vertices_to_arcs(origin, K)
          for K in core.up_color_kernels(L, limit=limit)]
    return {
        "kernels_D": kd,
        "kernels_L": kl,
        "f_images": [map_f(D, Z) for Z in kd],
        "g_images": [map_g(D, H) for H in kl],
    }
