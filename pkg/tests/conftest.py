"""Shared helpers: a naive subset-sweep oracle and hypothesis strategies.

The naive oracle re-implements the kernel definitions straight from
their wording over plain Python sets, with no pruning, so that it can
serve as an independent check of the library's search.
"""

from itertools import chain, combinations

from hypothesis import strategies as st

from upkernel.digraph import ColoredDigraph


def all_subsets(n):
    return chain.from_iterable(combinations(range(n), k)
                               for k in range(n + 1))


def naive_is_up_kernel(colors, arcs, N):
    N = set(N)
    if any(colors[v] == 0 for v in N):
        return False
    if any(u in N and v in N for u, v in arcs):
        return False
    for v in range(len(colors)):
        if v in N:
            continue
        if not any(u == v and w in N and colors[v] < colors[w]
                   for u, w in arcs):
            return False
    return True


def naive_is_kernel(n, arcs, N):
    N = set(N)
    if any(u in N and v in N for u, v in arcs):
        return False
    return all(v in N or any(u == v and w in N for u, w in arcs)
               for v in range(n))


def naive_up_kernels(D):
    colors, arcs = list(D.colors), list(D.arcs)
    return sorted(tuple(S) for S in all_subsets(D.n)
                  if naive_is_up_kernel(colors, arcs, S))


def naive_classic_kernels(D):
    arcs = list(D.arcs)
    return sorted(tuple(S) for S in all_subsets(D.n)
                  if naive_is_kernel(D.n, arcs, S))


def as_tuples(kernels):
    return sorted(tuple(sorted(K)) for K in kernels)


@st.composite
def digraphs(draw, min_n=0, max_n=7, max_color=None, digons=True):
    n = draw(st.integers(min_n, max_n))
    top = n if max_color is None else max_color
    colors = draw(st.lists(st.integers(0, top), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs \
        else []
    if not digons:
        seen, kept = set(), []
        for u, v in arcs:
            if (v, u) not in seen:
                kept.append((u, v))
                seen.add((u, v))
        arcs = kept
    return ColoredDigraph(colors, arcs)


@st.composite
def digraph_and_subset(draw, **kw):
    D = draw(digraphs(**kw))
    N = draw(st.sets(st.integers(0, D.n - 1))) if D.n else set()
    return D, N
