import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from upkernel import core, io, line
from upkernel import constructors as cons
from upkernel.digraph import ColoredDigraph
from upkernel.errors import InvalidSetError

from conftest import all_subsets, digraphs


def test_map_f_collects_in_arcs():
    D = ColoredDigraph([1, 2, 3], [(0, 1), (2, 1), (1, 2)])
    assert line.map_f(D, {1}) == {(0, 1), (2, 1)}
    assert line.map_f(D, set()) == frozenset()
    with pytest.raises(InvalidSetError):
        line.map_f(D, {4})


def test_map_g_adds_free_sources():
    D = ColoredDigraph([1, 2, 1, 3], [(0, 1), (2, 3)])
    assert line.map_g(D, {(0, 1)}) == {1, 2}
    with pytest.raises(InvalidSetError):
        line.map_g(D, {(1, 0)})


def test_transfer_fails_on_arc_from_source():
    # Z = both ends of one arc; its only image arc stands alone in L(D)
    D = ColoredDigraph([1, 1], [(0, 1)])
    assert line.independence_transfer_check(D, {0, 1}) == (False, True)


@settings(max_examples=150)
@given(digraphs(max_n=5))
def test_transfer_forward_direction(D):
    L = cons.line_digraph(D)
    for Z in all_subsets(D.n):
        zi, fi = line.independence_transfer_check(D, Z, L)
        if zi:
            assert fi


@settings(max_examples=150)
@given(digraphs(max_n=5))
def test_transfer_reverse_when_members_have_in_arcs(D):
    L = cons.line_digraph(D)
    for Z in all_subsets(D.n):
        if all(D.in_neighbors(z) for z in Z):
            zi, fi = line.independence_transfer_check(D, Z, L)
            assert zi == fi


def test_source_hypothesis_examples():
    assert line.source_hypothesis_holds(io.load_digraph("fig9"))
    assert not line.source_hypothesis_holds(io.load_digraph("fig8"))
    assert line.source_hypothesis_holds(cons.directed_cycle(3, [0, 0, 0]))


def test_figure_eight_counts():
    rep = line.verify_count_theorem(io.load_digraph("fig8"))
    assert (rep.countD, rep.countL, rep.hypothesis) == (0, 1, False)
    assert rep.consistent


def test_figure_nine_inner_coloration_breaks_counts():
    D = io.load_digraph("fig9")
    Li, _ = cons.line_digraph(D, cons.INNER)
    Lo, _ = cons.line_digraph(D, cons.OUTER)
    assert core.count_up_color_kernels(D) == 1
    assert core.count_up_color_kernels(Li) == 0
    assert core.count_up_color_kernels(Lo) == 1


def test_zero_colored_source_breaks_count_equality():
    # an isolated vertex colored 0 is a source satisfying the hypothesis
    D = ColoredDigraph([0])
    rep = line.verify_count_theorem(D)
    assert rep.hypothesis and not rep.nonzero_sources
    assert (rep.countD, rep.countL) == (0, 1)
    assert not rep.consistent


@st.composite
def hypothesis_digraphs(draw, max_n=6):
    """Digraphs meeting the source hypothesis with nonzero sources."""
    D = draw(digraphs(max_n=max_n))
    colors = list(D.colors)
    for u in D.sources():
        outs = [colors[v] for v in D.out_neighbors(u)]
        top = min(outs) - 1 if outs else max(colors + [1])
        if top < 1:
            # lift the whole out-neighborhood above a source colored 1
            for v in D.out_neighbors(u):
                colors[v] = max(colors[v], 2)
            top = 1
        colors[u] = draw(st.integers(1, top))
    D = D.with_colors(colors)
    if not line.source_hypothesis_holds(D):
        # lifting may break another source's condition; fall back safely
        D = D.with_colors([c + 1 if v not in D.sources() else c
                           for v, c in enumerate(D.colors)])
    return D


@settings(max_examples=150)
@given(hypothesis_digraphs())
def test_counts_agree_with_nonzero_sources(D):
    assume(line.source_hypothesis_holds(D))
    rep = line.verify_count_theorem(D)
    assert rep.nonzero_sources
    assert rep.countD == rep.countL


@settings(max_examples=150)
@given(hypothesis_digraphs())
def test_images_of_kernels(D):
    assume(line.source_hypothesis_holds(D))
    imgs = line.kernel_images(D)
    kl = set(imgs["kernels_L"])
    # f maps kernels of D injectively into kernels of L(D)
    assert len(set(imgs["f_images"])) == len(imgs["kernels_D"])
    for H in imgs["f_images"]:
        assert H in kl
    # g maps kernels of L(D) into kernels of D
    for Z in imgs["g_images"]:
        assert core.is_up_color_kernel(D, Z)


def test_zero_colored_source_on_a_path():
    # u -> v -> w colored 0, 1, 2: the arc (u, v) is absorbed in L(D) by
    # (v, w), while in D the vertex u has no kernel out-neighbor
    D = ColoredDigraph([0, 1, 2], [(0, 1), (1, 2)])
    rep = line.verify_count_theorem(D)
    assert rep.hypothesis
    assert (rep.countD, rep.countL) == (0, 1)
