from fractions import Fraction

import pytest

import tuza


def test_small_cliques():
    k4, k5 = tuza.complete_graph(4), tuza.complete_graph(5)
    assert tuza.exact_cover(k4)["size"] == 2
    assert tuza.exact_packing(k4)["size"] == 1
    assert tuza.exact_cover(k5)["size"] == 4
    assert tuza.exact_packing(k5)["size"] == 2
    lp = tuza.fractional_cover(k5)
    assert lp["tau_star"] == lp["nu_star"] == Fraction(10, 3)
    assert lp["slackness_ok"]
    assert all(isinstance(w, Fraction) for w in lp["weights"])


def test_graph_round_trip():
    g = tuza.Graph.parse("n 4\n0 1\n1 2 # comment\n2 0\n")
    assert (g.n, g.m) == (4, 3)
    assert tuza.Graph.parse(g.to_edge_list()).edges == g.edges
    assert tuza.density(g) == Fraction(3, 16)
    assert tuza.targets(g) == [(0, 1, 2)]


def test_errors_map_to_tuza_error():
    with pytest.raises(tuza.TuzaError):
        tuza.Graph.parse("0 0\n")
    with pytest.raises(tuza.TuzaError):
        tuza.count_targets(tuza.complete_graph(4), "C4")
    assert issubclass(tuza.TuzaError, ValueError)


def test_odd_cycles():
    assert tuza.count_targets(tuza.complete_graph(5), "C5") == 12
    assert tuza.exact_cover(tuza.cycle_graph(5), "C5")["size"] == 1
    lp = tuza.fractional_cover(tuza.petersen_graph(), "C5")
    assert lp["tau_star"] == lp["nu_star"]


def test_reports_use_fractions():
    k6 = tuza.complete_graph(6)
    h = tuza.hardness(k6)
    assert h["tau_upper"] == 6
    assert h["delta_interval"] == [Fraction(1, 5), Fraction(1, 5)]
    assert tuza.rho(k6)["rho"] == [9, 9]
    check = tuza.verify_main(tuza.complete_graph(13), solve_lp=False)
    assert check["nu_lower"] == 26 and check["nu_passes"]
    trace = tuza.cover_process(tuza.complete_graph(7), k=4)["trace"]
    assert all(s["weight"] >= Fraction(1, 4) for s in trace["steps"])


def test_cuts_and_witness():
    g = tuza.gnp(12, 0.5, seed=3)
    assert len(tuza.bipartize(g, seed=1)) <= g.m // 2
    assert len(tuza.kpartition_cover(g, 4, seed=1)) <= g.m // 3
    value, sides, optimal = tuza.max_cut(g)
    assert optimal and len(sides) == 12
    w = tuza.witness(tuza.bipartite_gnp(100, 100, 0.25, seed=1), Fraction(1, 5))
    assert w["verified"] and w["threshold_met"]


def test_sweep_is_deterministic():
    config = {"solvers": ["exact", "lp"], "seeds": [1, 2],
              "generators": [{"type": "gnp", "n": 9, "p": 0.5}]}
    strip = lambda csv: [line.rsplit(",", 1)[0] for line in csv.splitlines()]
    first, second = tuza.sweep(config), tuza.sweep(config)
    assert strip(first) == strip(second)
    assert tuza.load_csv(first) == 2
