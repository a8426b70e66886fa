from fractions import Fraction

import pytest

import flowpoly


def test_fixture_polynomials():
    assert flowpoly.flow(flowpoly.family("z3")) == [2, -3, 1]
    assert flowpoly.flow(flowpoly.family("k4"), method="oracle") == [-6, 11, -6, 1]
    assert flowpoly.flow(flowpoly.Graph(2, [(0, 1)])) == []
    assert flowpoly.tau(flowpoly.family("l4")) == [4, 8, 5, 1]


def test_graph_construction():
    g = flowpoly.Graph(4, [(0, 1, 2), (1, 2), (2, 3, 2), (3, 0)])
    assert g.order == 4 and g.size == 6
    assert g.is_cubic() and g.is_bridgeless()
    assert g.is_isomorphic(flowpoly.family("l4"))
    assert g.canonical_key() == flowpoly.family("necklace", 4).canonical_key()
    assert flowpoly.read_graphs(g.to_text())[0] == g
    with pytest.raises(flowpoly.InvalidEdge):
        flowpoly.Graph(2, [(0, 5)])


def test_big_coefficients_are_python_ints():
    coeffs = flowpoly.flow(flowpoly.family("necklace", 40))
    assert coeffs[-1] == 1
    assert abs(coeffs[0]) == 2 ** 20


def test_roots_and_decomposition():
    prism = flowpoly.family("prism")
    assert flowpoly.rational_roots(flowpoly.flow(prism)) == [(Fraction(1), 1), (Fraction(2), 1), (Fraction(3), 2)]
    pieces, k = flowpoly.decompose(flowpoly.family("gstar", 10))
    assert k == 2
    assert sorted(p.order for p in pieces) == [2, 4, 4]
    assert flowpoly.real_root_count([10, -6, 1]) == 0


def test_enumeration_and_checks():
    graphs = flowpoly.enumerate_cubic(6, bridgeless=True)
    assert len(graphs) == 5
    records, summary = flowpoly.sweep(7, graphs, jobs=2)
    assert summary["pass"] == "5"
    assert [r["key"] for r in records] == sorted(r["key"] for r in records)
    report = flowpoly.check(5, flowpoly.family("gstar", 8))
    assert report["verdict"] == "pass" and report["equality"] is True
    clauses = {c["clause"]: c["status"] for c in flowpoly.audit(flowpoly.family("k4"))}
    assert clauses["cubic-3ec-simple-root-2"] == "pass"


def test_errors():
    with pytest.raises(flowpoly.LimitExceeded):
        flowpoly.flow(flowpoly.family("necklace", 20), method="oracle")
    with pytest.raises(flowpoly.DomainError):
        flowpoly.enumerate_cubic(5)
    with pytest.raises(ValueError):
        flowpoly.family("nope")
