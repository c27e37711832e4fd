from fractions import Fraction
from itertools import combinations

import pytest

from oracles import naive_classes_no_isolated_upto
from ramseykit import build_from_text, density_report, m2, m2_pair, rho, threshold_p

b = build_from_text


def _all_subgraph_max(X, min_size, score):
    """Maximize over every subgraph: all vertex subsets and all edge subsets
    of the induced graph. Independent of the library's induced-only path."""
    best = None
    verts = range(X.n)
    for k in range(1, X.n + 1):
        for vs in combinations(verts, k):
            sub = X.induced(vs)
            edges = sub.edges()
            for r in range(len(edges) + 1):
                for es in combinations(edges, r):
                    if k < min_size:
                        continue
                    val = score(len(es), k)
                    if val is not None and (best is None or val > best):
                        best = val
    return best


def test_rho_values():
    assert rho(b("C5")).value == 1
    assert rho(b("K6")).value == Fraction(5, 2)
    assert rho(b("3K2")).value == Fraction(1, 2)


def test_m2_values():
    assert m2(b("K3")).value == 2
    assert m2(b("K4")).value == Fraction(5, 2)
    assert m2(b("C4")).value == Fraction(3, 2)
    assert m2(b("C5")).value == Fraction(4, 3)


def test_m2_absent_for_acyclic():
    assert m2(b("P4")) is None
    assert m2(b("S5+3K2")) is None


def test_m2_pair_values():
    assert m2_pair(b("K3"), b("K3")).value == 2
    # computed by the subset oracle: J=K4 gives 6/(2+1/2) = 12/5
    assert m2_pair(b("K4"), b("K3")).value == Fraction(12, 5)


def test_m2_pair_symmetric_value_with_swap_flag():
    ab = m2_pair(b("K4"), b("K3"))
    ba = m2_pair(b("K3"), b("K4"))
    assert ab.value == ba.value
    assert not ab.swapped
    assert ba.swapped


def test_m2_pair_rejects_acyclic():
    with pytest.raises(ValueError):
        m2_pair(b("K3"), b("P4"))
    with pytest.raises(ValueError):
        m2_pair(b("S3"), b("S3"))


def test_witnesses_reevaluate():
    g = b("K4+C5")
    r = rho(g)
    sub = g.induced(r.witness)
    assert Fraction(sub.edge_count, sub.n) == r.value
    m = m2(g)
    sub = g.induced(m.witness)
    assert Fraction(sub.edge_count - 1, sub.n - 2) == m.value


def test_induced_subsets_match_all_subgraphs_small():
    for X in naive_classes_no_isolated_upto(5):
        assert rho(X).value == _all_subgraph_max(X, 1, lambda e, v: Fraction(e, v))
        if X.has_cycle():
            oracle = _all_subgraph_max(
                X, 3, lambda e, v: Fraction(e - 1, v - 2) if v > 2 else None
            )
            assert m2(X).value == oracle


def test_rho_monotone_under_subgraphs():
    g = b("K5")
    for u, v in g.edges():
        assert rho(g.delete_edge(u, v)).value <= rho(g).value


def test_threshold_p():
    assert threshold_p(b("K3"), b("K3"), 100, 1) == pytest.approx(0.1)
    assert threshold_p(b("K3"), b("K3"), 4, Fraction(100)) == 1.0  # clamped
    with pytest.raises(ValueError):
        threshold_p(b("K3"), b("K3"), 1, 1)
    with pytest.raises(ValueError):
        threshold_p(b("K3"), b("K3"), 10, 0)
    with pytest.raises(ValueError):
        threshold_p(b("P4"), b("K3"), 10, 1)


def test_density_report_bundle():
    rep = density_report(b("K4"), pair_with=b("K3"))
    assert rep.rho.value == Fraction(3, 2)
    assert rep.m2.value == Fraction(5, 2)
    assert rep.m2_pair.value == Fraction(12, 5)


def test_subset_cap_enforced():
    from ramseykit import Graph

    big = Graph.from_edges(25, [(0, 1)])
    with pytest.raises(ValueError):
        rho(big)
