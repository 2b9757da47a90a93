"""Binding smoke tests: graph type, constructions, spectral + factor calls."""

import math
import random

import pytest

import specfactor as sf


def star(leaves):
    g = sf.Graph(leaves + 1)
    for i in range(1, leaves + 1):
        g.add_edge(0, i)
    return g


def test_graph_basics():
    g = sf.Graph(4)
    assert g.n == 4 and g.size == 0
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    assert g.size == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(0) == 1
    assert g.edges() == [(0, 1), (2, 3)]
    assert not g.is_connected()
    g.remove_edge(2, 3)
    assert g.size == 1 and g.min_degree() == 0
    assert repr(g) == "<Graph n=4 m=1>"


def test_graph6_round_trip():
    assert sf.to_graph6(sf.complete_graph(3)) == "Bw"
    assert sf.to_graph6(sf.complete_graph(2)) == "A_"
    assert sf.to_graph6(sf.Graph(3)) == "B?"
    assert sf.from_graph6("Bw").edges() == [(0, 1), (0, 2), (1, 2)]

    rng = random.Random(7)
    for _ in range(100):
        n = rng.randrange(1, 30)
        g = sf.Graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.4:
                    g.add_edge(u, v)
        s = sf.to_graph6(g)
        h = sf.from_graph6(s)
        assert sf.to_graph6(h) == s
        assert h.edges() == g.edges()


def test_constructions():
    h = sf.h_na(6, 1)
    assert h.n == 6 and not h.is_connected()

    t = sf.t_graph(20, 1, 2)
    assert t.n == 20 and t.size == 142
    assert t.min_degree() == 2 and t.is_connected()

    gp = sf.g_unique_pm(6)
    assert gp.size == 9
    assert sf.count_perfect_matchings(gp, 100) == 1

    gk = sf.g_unique_kfactor(6, 1)
    assert sf.canonical_code(gk) == sf.canonical_code(gp)

    octa = sf.circulant(6, [1, 2])
    assert all(octa.degree(v) == 4 for v in range(6))


def test_spectral_radius_and_comparison():
    sp = sf.spectral_radius(sf.complete_graph(5))
    assert math.isclose(sp["rho"], 4.0, abs_tol=1e-9)
    assert sp["residual"] <= 1e-8
    assert sp["iterations"] >= 1

    verdict, margin = sf.compare_rho(sf.complete_graph(4), sf.complete_graph(3))
    assert verdict == "Greater"
    assert math.isclose(margin, 1.0, abs_tol=1e-9)
    verdict, _ = sf.compare_rho(sf.circulant(5, [1]), sf.circulant(5, [2]))
    assert verdict == "Tie"


def test_matching_and_factors():
    pm = sf.perfect_matching(sf.complete_graph(4))
    assert pm["outcome"] == "Found"
    assert len(pm["factor_edges"]) == 2
    assert pm["method"] == "blossom"

    ref = sf.perfect_matching(star(3))
    assert ref["outcome"] == "Refuted"
    assert ref["witness"] == [0]

    two_factor = sf.ab_factor(sf.circulant(6, [1]), a=2, b=2)
    assert two_factor["outcome"] == "Found"
    assert len(two_factor["factor_edges"]) == 6

    odd = sf.ab_factor(star(4), a=1, b=3, odd=True)
    assert odd["outcome"] == "Refuted"
    assert odd["witness"] == [0]

    assert sf.max_matching_size(sf.circulant(6, [1])) == 3
    assert sf.count_perfect_matchings(sf.complete_graph(6), 100) == 15


def test_fractional_matching_weights():
    fr = sf.fractional_pm(sf.circulant(5, [1]))
    assert fr["outcome"] == "Found"
    assert sorted(w for (_, _, w) in fr["weights"]) == [0.5] * 5

    integral = sf.fractional_pm(sf.complete_graph(4))
    assert {(u, v): w for (u, v, w) in integral["weights"]} == {
        (0, 1): 1.0,
        (2, 3): 1.0,
    }

    missing = sf.fractional_pm(star(3))
    assert missing["outcome"] == "Refuted"
    assert missing["witness"] == [0]
    assert "weights" not in missing


def test_errors():
    with pytest.raises(sf.CapacityError):
        sf.Graph(65)
    with pytest.raises(ValueError):
        sf.circulant(6, [4])
    with pytest.raises(ValueError):
        sf.ab_factor(sf.complete_graph(4), a=3, b=2)
    with pytest.raises(ValueError):
        sf.verify("no-such-theorem")


def test_verify_reports():
    rep = sf.verify("cor1.1", n=4, k=1)
    assert rep["theorem"] == "cor1.1"
    assert rep["verdict"] == "pass"
    assert rep["checked"] == 64
    assert rep["counterexamples"] == []
    assert float(rep["threshold_rho"]) == pytest.approx(2.0, abs=1e-9)

    lem = sf.verify("lemmas", n_max=3)
    assert lem["verdict"] == "pass"
    assert lem["checked"] == 11

    sampled = sf.verify("thm1.2", n=16, b=1, delta=1, samples=20, seed=7)
    assert sampled["verdict"] == "no_counterexample_in_samples"
    assert sampled["sampled"] is True
    assert sampled["samples"] == 20
    assert sampled["notes"][-1] == "sampled evidence, not an exhaustive proof"
