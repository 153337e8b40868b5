"""Seeded verification campaigns: deciders and theorems against the oracle.

Each suite returns a list of :class:`PropertyResult`. Results depend only
on ``seed`` and ``samples``, so a failing run can be replayed exactly and
its first counterexample inspected.
"""

import random
from dataclasses import dataclass, field
from itertools import chain, combinations, product

from . import constructors as cons
from . import core, families, generate, line, products
from .digraph import ColoredDigraph


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: ColoredDigraph = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.failures == 0

    def record(self, ok, D=None, note=""):
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = D
                self.note = note

    def summary(self):
        status = "pass" if self.passed else "FAIL"
        return (f"{self.name}: {self.checked - self.failures}/{self.checked} "
                f"{status}")


def _agrees(decision, D, limit=None):
    """Decider verdict equals oracle existence."""
    return bool(decision.verdict) == core.has_up_color_kernel(D, limit)


# -- Lemma on independence transfer ---------------------------------------------

def _subsets(n):
    return chain.from_iterable(combinations(range(n), k)
                               for k in range(n + 1))


def zind(seed=0, samples=500, max_n=5):
    """Compare independence of every ``Z`` with independence of ``f(Z)``.

    Besides the two-sided equivalence, the forward implication and the
    reverse implication restricted to sets ``Z`` whose members all have an
    in-neighbor are tracked separately: those are the parts that hold in
    general.
    """
    rng = random.Random(seed)
    both = PropertyResult("independence of Z <=> independence of f(Z)")
    forward = PropertyResult("Z independent => f(Z) independent")
    reverse = PropertyResult(
        "f(Z) independent => Z independent (members with in-arcs)")
    for _ in range(samples):
        n = rng.randint(1, max_n)
        D = generate.digraph(rng, n, rng.uniform(0.1, 0.6))
        L = cons.line_digraph(D)
        for Z in _subsets(n):
            zi, fi = line.independence_transfer_check(D, Z, L)
            both.record(zi == fi, D, f"Z = {sorted(Z)}")
            if zi:
                forward.record(fi, D, f"Z = {sorted(Z)}")
            if all(D.in_neighbors(z) for z in Z):
                reverse.record(not fi or zi, D, f"Z = {sorted(Z)}")
    return [both, forward, reverse]


# -- kernel count theorem ----------------------------------------------------------

def count_instances(seed=0, samples=200, max_n=7, nonzero=False):
    """Random digraphs with ``n <= max_n`` satisfying the source hypothesis.

    Colors come from ``0..n``; with ``nonzero`` sources are additionally
    required to be colored at least 1.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        n = rng.randint(1, max_n)
        D = generate.digraph(rng, n, rng.uniform(0.1, 0.5))
        if not line.source_hypothesis_holds(D):
            continue
        if nonzero and not line.nonzero_sources(D):
            continue
        if D.n > core.oracle_limit() or len(D.arcs) > core.oracle_limit():
            continue
        out.append(D)
    return out


def count_theorem(seed=0, samples=200, max_n=7):
    main = PropertyResult("countD = countL(D) under the source hypothesis")
    strong = PropertyResult(
        "countD = countL(D) with hypothesis and nonzero sources")
    for D in count_instances(seed, samples, max_n):
        rep = line.verify_count_theorem(D)
        main.record(rep.consistent, D,
                    f"countD = {rep.countD}, countL = {rep.countL}")
        if rep.nonzero_sources:
            strong.record(rep.countD == rep.countL, D,
                          f"countD = {rep.countD}, countL = {rep.countL}")
    for D in count_instances(seed + 1, samples, max_n, nonzero=True):
        rep = line.verify_count_theorem(D)
        strong.record(rep.countD == rep.countL, D,
                      f"countD = {rep.countD}, countL = {rep.countL}")
    return [main, strong]


# -- family deciders ------------------------------------------------------------------

def exhaustive_colorings(skeleton, palette=(0, 1, 2, 3)):
    for colors in product(palette, repeat=skeleton.n):
        yield skeleton.with_colors(colors)


def path_cycle_sweep(max_n=5, palette=(0, 1, 2, 3)):
    path = PropertyResult("decide_path == oracle (all colorings)")
    cycle = PropertyResult("decide_even_cycle == oracle (all colorings)")
    for n in range(1, max_n + 1):
        for D in exhaustive_colorings(cons.directed_path(n), palette):
            path.record(_agrees(families.decide_path(D), D), D)
        if n >= 2:
            for D in exhaustive_colorings(cons.directed_cycle(n), palette):
                cycle.record(_agrees(families.decide_even_cycle(D), D), D)
    return [path, cycle]


def family_instances(name, rng, samples):
    """``samples`` seeded instances of one family as ``(D, decide)`` pairs."""
    out = []
    for _ in range(samples):
        if name == "forest":
            D = generate.forest(rng, rng.randint(1, 9))
            out.append((D, lambda D=D: families.decide_forest(D)))
        elif name == "wheel":
            D = generate.wheel(rng, rng.randint(3, 8))
            out.append((D, lambda D=D: families.decide_wheel(D)))
        elif name == "pendant":
            D, H, pend = generate.pendant(rng)
            out.append((D, lambda D=D, H=H, p=pend:
                        families.decide_pendant(D, H, p)))
        elif name == "odd-cycle-chord":
            D = generate.odd_cycle_chord(rng, rng.choice((5, 7, 9)))
            out.append((D, lambda D=D: families.decide_odd_cycle_chord(D)))
        elif name == "tournament":
            D = generate.tournament(rng, rng.randint(1, 8))
            out.append((D, lambda D=D: families.decide_tournament(D)))
        else:
            raise ValueError(f"unknown family {name!r}")
    return out


FAMILIES = ("forest", "wheel", "pendant", "odd-cycle-chord", "tournament")


def family_oracle(seed=0, samples=1000, exhaustive=True):
    results = path_cycle_sweep() if exhaustive else []
    for i, name in enumerate(FAMILIES):
        rng = random.Random(seed * 101 + i)
        res = PropertyResult(f"decide {name} == oracle")
        for D, decide in family_instances(name, rng, samples):
            res.record(_agrees(decide(), D), D)
        results.append(res)
    return results


# -- product deciders -----------------------------------------------------------------

def _shape_cases():
    """``(name, skeleton, decide)`` for every product shape in the suite."""
    cases = []
    for shape in ((2, 2), (2, 3), (3, 3), (2, 2, 2)):
        cases.append((f"grid {shape}", products.grid(shape),
                      lambda D, s=shape: products.decide_grid(D, s)))
    for shape in ((2, 2), (3, 3)):
        cases.append((f"strong grid {shape}", products.grid(shape, strong=True),
                      lambda D, s=shape: products.decide_strong_grid(D, s)))
    for stars in ([("out", 2), ("in", 2)], [("out", 3), ("in", 2)]):
        tag = " x ".join(f"S{k}{'+' if kd == 'out' else '-'}"
                         for kd, k in stars)
        cases.append((f"star cartesian {tag}", products.star_product(stars),
                      lambda D, s=stars: products.decide_star_cartesian(D, s)))
        cases.append((f"star strong {tag}",
                      products.star_product(stars, strong=True),
                      lambda D, s=stars: products.decide_star_strong(D, s)))
    cases.append(("path-bipartite P3 x K(1,2)", products.path_bipartite(3, 1, 2),
                  lambda D: products.decide_path_bipartite(D, 3, 1, 2)))
    cases.append(("torus C4 x C4", products.torus(4, 4),
                  lambda D: products.decide_torus(D, 4, 4)))
    return cases


def product_oracle(seed=0, samples=300):
    results = []
    for i, (name, skeleton, decide) in enumerate(_shape_cases()):
        rng = random.Random(seed * 1009 + i)
        res = PropertyResult(f"{name} == oracle")
        for _ in range(samples):
            D = skeleton.with_colors(generate.colors(rng, skeleton.n, 4))
            res.record(_agrees(decide(D), D), D)
        results.append(res)
    return results


def zykov_family(rng, base_n, max_part=3):
    return generate.family(rng, base_n, max_size=max_part,
                           max_color=2 * max_part + 2)


def zykov_odd(seed=0, samples=100):
    rng = random.Random(seed)
    res = PropertyResult("Zykov sums over C3 and C5 have no up-color kernel")
    for k in range(samples):
        G = cons.directed_cycle(3 if k % 2 == 0 else 5)
        D = cons.zykov(G, zykov_family(rng, G.n, 3 if G.n == 3 else 2))
        res.record(core.count_up_color_kernels(D) == 0, D)
    return [res]


def crown_oracle(seed=0, samples=200):
    rng = random.Random(seed)
    inward = PropertyResult("decide_in_crown == oracle")
    outward = PropertyResult("decide_ex_crown == oracle")
    for _ in range(samples):
        D, H, att = generate.crown(rng)
        G = cons.in_crown(D, H, att)
        inward.record(_agrees(products.decide_in_crown(D, H, att), G), G)
        G = cons.ex_crown(D, H, att)
        outward.record(_agrees(products.decide_ex_crown(D, H, att), G), G)
    return [inward, outward]


SUITES = {
    "zind": zind,
    "count-theorem": count_theorem,
    "family-oracle": family_oracle,
    "product-oracle": product_oracle,
    "zykov-odd": zykov_odd,
    "crown-oracle": crown_oracle,
}

DEFAULT_SAMPLES = {
    "zind": 500,
    "count-theorem": 200,
    "family-oracle": 1000,
    "product-oracle": 300,
    "zykov-odd": 100,
    "crown-oracle": 200,
}


def run(suite, seed=0, samples=None):
    if suite not in SUITES:
        raise KeyError(suite)
    if samples is None:
        samples = DEFAULT_SAMPLES[suite]
    return SUITES[suite](seed=seed, samples=samples)
