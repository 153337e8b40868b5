from upkernel import campaigns, line


def test_results_are_reproducible():
    a = [(r.name, r.checked, r.failures) for r in
         campaigns.run("family-oracle", seed=5, samples=30)]
    b = [(r.name, r.checked, r.failures) for r in
         campaigns.run("family-oracle", seed=5, samples=30)]
    assert a == b


def test_family_and_product_suites_pass():
    for suite in ("family-oracle", "product-oracle", "zykov-odd",
                  "crown-oracle"):
        for res in campaigns.run(suite, seed=11, samples=40):
            assert res.passed, res.summary()


def test_count_instances_meet_the_hypothesis():
    for D in campaigns.count_instances(seed=2, samples=50):
        assert D.n <= 7 and line.source_hypothesis_holds(D)
    for D in campaigns.count_instances(seed=2, samples=50, nonzero=True):
        assert line.nonzero_sources(D)


def test_restricted_count_theorem_holds():
    results = {r.name: r for r in campaigns.count_theorem(seed=4,
                                                          samples=150)}
    strong = results["countD = countL(D) with hypothesis and nonzero "
                     "sources"]
    assert strong.passed and strong.checked >= 150


def test_restricted_transfer_directions_hold():
    both, forward, reverse = campaigns.zind(seed=9, samples=120)
    assert forward.passed and reverse.passed
    assert forward.checked and reverse.checked


def test_counterexample_is_recorded():
    both = campaigns.zind(seed=0, samples=50)[0]
    assert not both.passed
    D = both.counterexample
    assert D is not None and any(not D.in_neighbors(u) for u, _ in D.arcs)
