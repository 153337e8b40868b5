import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from upkernel import core, families, generate, io
from upkernel import constructors as cons
from upkernel.digraph import ColoredDigraph
from upkernel.errors import ShapeError

from conftest import naive_up_kernels


def oracle_says(D):
    return bool(naive_up_kernels(D))


def check_against_oracle(decision, D):
    assert decision.verdict == oracle_says(D)
    if decision.verdict:
        assert core.is_up_color_kernel(D, decision.witness)
    else:
        assert decision.violated is not None


# -- paths ----------------------------------------------------------------------

def test_figure_one_path():
    D = io.load_digraph("fig1")
    dec = families.decide_path(D)
    assert not dec
    assert dec.violated == ("path-pair", (0, 1))
    assert dec.detail == "c(x0)>c(x1) violated (0 ≤ 1)"


def test_path_examples():
    dec = families.decide_path(cons.directed_path(4, [3, 1, 2, 0]))
    # 2 > 0 holds for the pair (x2, x3); the kernel is {x0, x2}
    assert dec and dec.witness == {0, 2}
    dec = families.decide_path(cons.directed_path(1, [1]))
    assert dec and dec.witness == {0}


def test_unpaired_zero_end_is_rejected():
    dec = families.decide_path(cons.directed_path(3, [2, 1, 0]))
    assert not dec and dec.violated == ("zero-color", (2,))
    assert not oracle_says(cons.directed_path(3, [2, 1, 0]))


def test_path_shape_errors():
    with pytest.raises(ShapeError):
        families.decide_path(cons.directed_cycle(3, [1, 1, 1]))
    with pytest.raises(ShapeError):
        families.decide_path(cons.in_star(2))
    with pytest.raises(ShapeError):
        families.decide_path(ColoredDigraph([]))


@pytest.mark.parametrize("n", range(1, 6))
def test_path_exhaustive(n):
    for colors in product(range(4), repeat=n):
        D = cons.directed_path(n, colors)
        check_against_oracle(families.decide_path(D), D)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=8))
def test_path_verdict_invariant_under_relabeling(colors):
    D = cons.directed_path(len(colors), colors)
    perm = list(reversed(range(len(colors))))
    assert families.decide_path(D).verdict == \
        families.decide_path(generate.relabel(D, perm)).verdict


# -- cycles ----------------------------------------------------------------------

def test_even_cycle_examples():
    assert families.decide_even_cycle(cons.directed_cycle(4, [1, 2, 1, 2]))
    assert not families.decide_even_cycle(cons.directed_cycle(4, [1] * 4))
    dec = families.decide_even_cycle(cons.directed_cycle(3, [5, 6, 7]))
    assert not dec and dec.violated[0] == "odd-cycle"


@pytest.mark.parametrize("n", range(2, 6))
def test_cycle_exhaustive(n):
    for colors in product(range(4), repeat=n):
        D = cons.directed_cycle(n, colors)
        check_against_oracle(families.decide_even_cycle(D), D)


@given(st.lists(st.integers(0, 5), min_size=2, max_size=8),
       st.integers(0, 7))
def test_even_cycle_rotation_invariance(colors, shift):
    n = len(colors)
    D = cons.directed_cycle(n, colors)
    rotated = cons.directed_cycle(n, colors[shift % n:] + colors[:shift % n])
    assert families.decide_even_cycle(D).verdict == \
        families.decide_even_cycle(rotated).verdict


# -- forests ----------------------------------------------------------------------

def test_figure_two_leveling():
    D = io.load_digraph("fig2")
    lev = families.level_forest(D)
    black = {v for v in D.vertices if D.label(v) in
             {"10", "1", "3", "9", "50", "60", "70", "80"}}
    assert lev.even == black
    assert core.is_independent(D, lev.even)
    assert all(t[0] == (0, t[0][1]) for t in lev.trace)


def test_leveling_small_cases():
    lev = families.level_forest(ColoredDigraph([1, 1], [(0, 1)]))
    assert lev.even == {1} and lev.odd == {0}
    lev = families.level_forest(cons.directed_path(5))
    assert lev.even == {0, 2, 4}


def test_leveling_can_disagree_with_the_kernel():
    # a vertex whose only even out-neighbor is demoted one recursion deeper
    D = ColoredDigraph([2, 1, 2, 1, 1, 2, 1],
                       [(1, 0), (2, 1), (3, 2), (3, 4), (4, 5), (6, 3)])
    assert families.acyclic_kernel(D) == {0, 2, 5, 6}
    assert 6 in families.level_forest(D).odd
    check_against_oracle(families.decide_forest(D), D)


def test_forest_examples():
    star = cons.in_star(3, [5, 1, 2, 3])
    dec = families.decide_forest(star)
    assert dec and dec.witness == {0}
    assert not families.decide_forest(ColoredDigraph([2, 1], [(0, 1)]))
    assert not families.decide_forest(io.load_digraph("fig1"))
    with pytest.raises(ShapeError):
        families.decide_forest(cons.directed_cycle(3))
    with pytest.raises(ShapeError):
        families.decide_forest(ColoredDigraph([1, 1], [(0, 1), (1, 0)]))


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_forest_matches_oracle(seed):
    rng = random.Random(seed)
    D = generate.forest(rng, rng.randint(1, 9))
    check_against_oracle(families.decide_forest(D), D)
    lev = families.level_forest(D)
    assert core.is_independent(D, lev.even)


# -- wheels -----------------------------------------------------------------------

def test_wheel_examples():
    D = cons.wheel(4, colors=[10, 1, 2, 3, 4])
    dec = families.decide_wheel(D)
    assert dec and dec.witness == {0} and dec.clause == "wheel (a)"
    D = cons.wheel(4, cons.SPOKE_OUT, colors=[1, 1, 2, 1, 2])
    dec = families.decide_wheel(D)
    assert dec and dec.clause == "wheel (b)"
    D = cons.wheel(3, cons.SPOKE_OUT, colors=[1, 1, 2, 3])
    assert not families.decide_wheel(D)
    with pytest.raises(ShapeError):
        families.decide_wheel(cons.directed_cycle(5))


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_wheel_matches_oracle(seed):
    rng = random.Random(seed)
    D = generate.wheel(rng, rng.randint(3, 8))
    check_against_oracle(families.decide_wheel(D), D)


# -- pendant arcs -----------------------------------------------------------------

def test_pendant_on_odd_cycle():
    C3 = cons.directed_cycle(3, [1, 2, 3])
    # pendant at x1 (color 2); without x1 the rest is x0 -> x2, colors 1 < 3
    D = ColoredDigraph([1, 2, 3, 4], list(C3.arcs) + [(1, 3)])
    dec = families.decide_pendant(D, C3, [(1, 3)])
    check_against_oracle(dec, D)
    assert dec and dec.clause == "pendant corollary (i)"


def test_pendant_zero_color():
    D = ColoredDigraph([3, 0], [(0, 1)])
    dec = families.decide_pendant(D, None, [(0, 1)])
    assert not dec and dec.violated[0] == "zero-color-pendant"


def test_pendant_single_vertex():
    D = ColoredDigraph([3, 1], [(0, 1)])
    dec = families.decide_pendant(D, ColoredDigraph([3]), [(0, 1)])
    check_against_oracle(dec, D)
    assert not dec


def test_pendant_shape_errors():
    D = ColoredDigraph([1, 1, 1], [(0, 1), (1, 2)])
    with pytest.raises(ShapeError):
        families.decide_pendant(D, None, [(0, 1)])
    with pytest.raises(ShapeError):
        families.decide_pendant(D, ColoredDigraph([1]), [(1, 2)])


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_pendant_matches_oracle(seed):
    rng = random.Random(seed)
    D, H, pend = generate.pendant(rng)
    check_against_oracle(families.decide_pendant(D, H, pend), D)


# -- odd cycle with a chord -------------------------------------------------------

def test_chord_example():
    # C5 x0..x4 (x_i -> x_{i-1}); chord x3 -> x0 gives x0 in-degree 2
    D = ColoredDigraph([9, 1, 3, 5, 2],
                       list(cons.directed_cycle(5).arcs) + [(3, 0)])
    check_against_oracle(families.decide_odd_cycle_chord(D), D)


def test_chord_digon_and_shape():
    D = ColoredDigraph([2, 1, 3, 1, 2],
                       list(cons.directed_cycle(5).arcs) + [(0, 2), (2, 0)])
    check_against_oracle(families.decide_odd_cycle_chord(D), D)
    with pytest.raises(ShapeError):
        families.decide_odd_cycle_chord(cons.directed_cycle(5))
    with pytest.raises(ShapeError):
        families.decide_odd_cycle_chord(cons.wheel(4))


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_chord_matches_oracle(seed):
    rng = random.Random(seed)
    D = generate.odd_cycle_chord(rng, rng.choice((5, 7, 9)))
    check_against_oracle(families.decide_odd_cycle_chord(D), D)


# -- tournaments ------------------------------------------------------------------

def complete(colors):
    n = len(colors)
    return ColoredDigraph(colors, [(u, v) for u in range(n) for v in range(n)
                                   if u != v])


def transitive(colors):
    """Vertex i beats every vertex j > i, so the last vertex is the sink."""
    n = len(colors)
    return ColoredDigraph(colors, [(u, v) for u in range(n)
                                   for v in range(u + 1, n)])


def test_tournament_examples():
    dec = families.decide_tournament(complete([1, 5, 2]))
    assert dec and dec.witness == {1}
    assert families.decide_tournament(transitive([1, 2, 7]))
    dec = families.decide_tournament(transitive([7, 2, 1]))
    assert not dec and dec.violated[0] == "max-not-sink"


def test_complete_with_tied_maximum_has_no_kernel():
    D = complete([4, 4, 1])
    dec = families.decide_tournament(D)
    assert not dec and dec.violated[0] == "tied-maximum"
    assert not oracle_says(D)


def test_tournament_shape_error():
    with pytest.raises(ShapeError):
        families.decide_tournament(cons.directed_path(3))
    mixed = ColoredDigraph([1, 1, 1], [(0, 1), (1, 0), (1, 2), (0, 2)])
    with pytest.raises(ShapeError):
        families.decide_tournament(mixed)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_tournament_matches_oracle(seed):
    rng = random.Random(seed)
    D = generate.tournament(rng, rng.randint(1, 7))
    check_against_oracle(families.decide_tournament(D), D)
