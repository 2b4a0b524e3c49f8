import json

import pytest

import rbx

K4 = rbx.complete_graph(4)
K5 = rbx.complete_graph(5)
BOWTIE = {"n": 5, "r": 2, "edges": [[0, 1], [0, 2], [1, 2], [2, 3], [2, 4], [3, 4]]}
K3 = rbx.complete_graph(3)


def test_chromatic_and_criticality():
    assert rbx.chromatic_number(K4) == 4
    assert rbx.chromatic_number(json.dumps(K4)) == 4
    rep = rbx.doubly_critical_report(BOWTIE, 3)
    assert rep["doubly_critical"] is True
    assert rep["chi"] == 3


def test_class_and_witness():
    c = rbx.class_of(K5, 4)
    assert c["class"] == 2
    assert c["index_vector"] == [1, 1, 0]
    w = rbx.config_witness(BOWTIE, 3)
    assert w is not None
    inside = [sum(1 for a, b in BOWTIE["edges"] if a in blk and b in blk) for blk in w["blocks"]]
    assert sorted(inside) == [0, 2]
    assert rbx.config_witness(K5, 4) is None


def test_constructions():
    t = rbx.turan_hypergraph(6, 4, 3)
    assert t["t"] == 8 and len(t["edges"]) == 8
    assert rbx.turan_count(10, 5, 4) == 36
    c = rbx.lower_bound_coloring_r3(15, 4, 2)
    assert len({x["color"] for x in c["colors"]}) == 126
    assert rbx.expansion(K3, 3)["n"] == 6


def test_rainbow_search():
    c = rbx.lower_bound_coloring_r3(15, 4, 2)
    res = rbx.find_rainbow_copy(c, K5, expand=True)
    assert res["found"] is False
    assert res["nodes_explored"] > 0
    with pytest.raises(rbx.BudgetExceeded):
        rbx.find_rainbow_copy(c, K5, expand=True, budget=50)


def test_oracles():
    assert rbx.ar_bruteforce(4, 2, K3)["value"] == 4
    assert rbx.ar_bruteforce(5, 2, K3)["value"] == 5
    assert rbx.ex_bruteforce(4, 2, [K3])["value"] == 4
    assert rbx.f_maximize(rbx.complete_graph(4), 2, mode="exact")["value"] == 10
    assert rbx.closeness_to_turan(rbx.turan_hypergraph(8, 4, 3), 4)["distance"] == 0


def test_verification():
    rep = rbx.verify_lower_bound(15, 4, 3, 2, K5)
    assert rep["pass"] is True
    assert rbx.verify_small_case(4, 2, K3)["pass"] is True
    scan = rbx.scan_doubly_critical(5, 3)
    assert scan["graphs_examined"] > 0
    assert rbx.nonisomorphic_graph_count(5) == 34


def test_errors():
    with pytest.raises(rbx.ParseError):
        rbx.chromatic_number('{"n": 3, "r": 2, "edges": [[0, 1], [0, 1]]}')
    with pytest.raises(rbx.PreconditionFailed):
        rbx.verify_lower_bound(15, 4, 3, 3, K5)
    with pytest.raises(rbx.RbxError):
        rbx.class_of(rbx.turan_hypergraph(6, 4, 3), 3)
