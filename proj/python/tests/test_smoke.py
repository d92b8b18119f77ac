import math

import networkx as nx
import pytest

import gaindex


def nx_ga1(graph):
    return sum(2 * math.sqrt(graph.degree(u) * graph.degree(v)) / (graph.degree(u) + graph.degree(v))
               for u, v in graph.edges())


def from_nx(graph):
    index = {v: i for i, v in enumerate(graph.nodes())}
    return gaindex.Graph(graph.number_of_nodes(), [(index[u], index[v]) for u, v in graph.edges()])


def test_exact_values():
    assert gaindex.ga1(gaindex.Graph.named("S5"))["exact"] == "16/5"
    assert gaindex.ga1(gaindex.Graph.named("C4"))["exact"] == "4"
    assert gaindex.m1(gaindex.Graph.named("C4"))["exact"] == "16"


@pytest.mark.parametrize("seed", range(10))
def test_ga1_matches_networkx(seed):
    graph = nx.connected_watts_strogatz_graph(10, 4, 0.3, seed=seed)
    assert gaindex.ga1(from_nx(graph))["approx"] == pytest.approx(nx_ga1(graph), rel=1e-12)


def test_line_graph_matches_networkx():
    graph = nx.complete_bipartite_graph(2, 3)
    ours = gaindex.line_graph(from_nx(graph))
    theirs = nx.line_graph(graph)
    assert (ours.n, ours.m) == (theirs.number_of_nodes(), theirs.number_of_edges())
    assert ours.is_isomorphic(from_nx(theirs))


def test_graph6_round_trip():
    g = gaindex.Graph.named("paw")
    assert gaindex.Graph.from_graph6(g.graph6()) == g
    with pytest.raises(gaindex.ParseError):
        gaindex.Graph.from_graph6("")


def test_trivial_line_graph_rejected():
    with pytest.raises(gaindex.StandingAssumptionError):
        gaindex.line_graph(gaindex.Graph.named("P2"))


def test_checks():
    (report,) = gaindex.check(gaindex.Graph.named("S5"), ["t_end"])
    assert report["holds"] and report["equality"]
    assert "gam20" in gaindex.checker_ids()
    with pytest.raises(ValueError):
        gaindex.check(gaindex.Graph.named("C4"), ["nope"])


def test_enumeration_counts():
    assert [len(gaindex.enumerate_connected(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 5 and nx.is_connected(g)]
    assert len(atlas) == len(gaindex.enumerate_connected(5))


def test_buckets():
    buckets = gaindex.classify_small_values(6)
    assert [m["name"] for m in buckets[0]["members"]] == ["P2"]
    assert sorted(m["name"] for m in buckets[2]["members"]) == ["C3", "P4", "S4"]


def test_sweep_runs():
    summary = gaindex.sweep(nmax=4, trials=20, seed=3, theorems=["t_end"])
    assert summary["tallies"]["t_end"]["violations"] == 0
