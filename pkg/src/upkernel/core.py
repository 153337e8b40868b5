"""Kernel predicates and the exhaustive enumeration oracle.

Every theorem-based decider in this package is checked against
:func:`enumerate_up_color_kernels`, so this module stays deliberately
simple: bitmask backtracking whose pruning only discards branches that
cannot end in a valid set.
"""

import os
from dataclasses import dataclass, field

from .digraph import from_mask, to_mask
from .errors import OracleLimitError

DEFAULT_ORACLE_LIMIT = 22
ORACLE_LIMIT_ENV = "UPKERNEL_ORACLE_LIMIT"

NOT_ABSORBED = "not-absorbed"
ZERO_COLOR_FORCED = "zero-color-forced"
INDEPENDENCE_CONFLICT = "independence-conflict"


def oracle_limit(limit=None):
    if limit is not None:
        return int(limit)
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env:
        return int(env)
    return DEFAULT_ORACLE_LIMIT


@dataclass(frozen=True)
class KernelReport:
    kernels: tuple
    diagnostics: dict = field(default_factory=dict)

    @property
    def count(self):
        return len(self.kernels)

    @property
    def exists(self):
        return bool(self.kernels)


# -- predicates -------------------------------------------------------------

def is_independent(D, N):
    N = D.vertex_set(N)
    for v in N:
        if D.out_neighbors(v) & N:
            return False
    return True


def is_up_color_absorbent(D, N):
    N = D.vertex_set(N)
    if any(D.color(v) == 0 for v in N):
        return False
    for v in D.vertices:
        if v in N:
            continue
        cv = D.color(v)
        if not any(D.color(w) > cv for w in D.out_neighbors(v) & N):
            return False
    return True


def is_absorbent(D, N):
    """Plain (colorless) absorbency."""
    N = D.vertex_set(N)
    return all(v in N or D.out_neighbors(v) & N for v in D.vertices)


def is_up_color_kernel(D, N):
    return is_independent(D, N) and is_up_color_absorbent(D, N)


def is_kernel(D, N):
    return is_independent(D, N) and is_absorbent(D, N)


def unabsorbed(D, N):
    """Vertices outside ``N`` with no greater-colored out-neighbor in ``N``."""
    N = D.vertex_set(N)
    return [v for v in D.vertices if v not in N and not any(
        D.color(w) > D.color(v) for w in D.out_neighbors(v) & N)]


# -- oracle -----------------------------------------------------------------

def _up_masks(D):
    return [to_mask(w for w in D.out_neighbors(v) if D.color(w) > D.color(v))
            for v in D.vertices]


def _adj_masks(D):
    return [D.out_mask(v) | D.in_mask(v) for v in D.vertices]


def _search(n, adj, absorbers, allowed):
    """All independent sets S within ``allowed`` such that every vertex
    outside S has a member of ``absorbers[v]`` in S."""
    found = []

    def viable(exc):
        rest = exc
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            if not absorbers[u] & ~exc:
                return False
            rest ^= low
        return True

    def rec(i, inc, exc):
        if i == n:
            found.append(inc)
            return
        bit = 1 << i
        if exc & bit:
            rec(i + 1, inc, exc)
            return
        if allowed & bit:
            new_exc = exc | (adj[i] & ~inc)
            if viable(new_exc):
                rec(i + 1, inc | bit, new_exc)
        new_exc = exc | bit
        if viable(new_exc):
            rec(i + 1, inc, new_exc)

    full = (1 << n) - 1
    # a vertex outside ``allowed`` is excluded from the start
    start_exc = full & ~allowed
    if viable(start_exc):
        rec(0, 0, start_exc)
    return found


def _ordered(masks):
    sets = [tuple(from_mask(m)) for m in masks]
    sets.sort()
    return tuple(frozenset(s) for s in sets)


def _check_limit(D, limit):
    limit = oracle_limit(limit)
    if D.n > limit:
        raise OracleLimitError(D.n, limit)


def up_color_kernels(D, avoid=(), limit=None):
    """Up-color kernels of ``D`` that contain no vertex of ``avoid``."""
    _check_limit(D, limit)
    allowed = to_mask(v for v in D.vertices
                      if D.color(v) > 0) & ~to_mask(D.vertex_set(avoid))
    return _ordered(_search(D.n, _adj_masks(D), _up_masks(D), allowed))


def enumerate_up_color_kernels(D, limit=None):
    kernels = up_color_kernels(D, limit=limit)
    diagnostics = {} if kernels else failure_certificate(D)
    return KernelReport(kernels, diagnostics)


def enumerate_classic_kernels(D, limit=None):
    _check_limit(D, limit)
    out = [D.out_mask(v) for v in D.vertices]
    masks = _search(D.n, _adj_masks(D), out, (1 << D.n) - 1)
    return KernelReport(_ordered(masks))


def count_up_color_kernels(D, limit=None):
    return len(up_color_kernels(D, limit=limit))


def has_up_color_kernel(D, limit=None):
    return bool(up_color_kernels(D, limit=limit))


def failure_certificate(D):
    """Reasons one maximal candidate fails, keyed by vertex.

    The candidate is built greedily: sinks first, then by decreasing color,
    skipping color-0 vertices and anything adjacent to a chosen vertex.
    """
    order = sorted(D.vertices,
                   key=lambda v: (D.out_degree(v) > 0, -D.color(v), v))
    chosen = set()
    for v in order:
        if D.color(v) > 0 and not (D.neighbors(v) & chosen):
            chosen.add(v)
    reasons = {}
    for v in D.vertices:
        if v in chosen:
            continue
        if any(D.color(w) > D.color(v) for w in D.out_neighbors(v) & chosen):
            continue
        has_up = any(D.color(w) > D.color(v) for w in D.out_neighbors(v))
        if D.color(v) == 0 and not has_up:
            reasons[v] = ZERO_COLOR_FORCED
        elif D.neighbors(v) & chosen:
            reasons[v] = INDEPENDENCE_CONFLICT
        else:
            reasons[v] = NOT_ABSORBED
    return reasons
