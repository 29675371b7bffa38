"""The verdict engine: statuses, applicability, charted discrepancies."""

import pytest

import wnc
from wnc.theorems import AGREE, DISAGREE, NOT_APPLICABLE, THEOREM_IDS

from corpus import ACCEPTANCE_CORPUS, realize


def suite_for(expr):
    ring, cls, graph = realize(expr)
    return {v.theorem: v for v in wnc.theorem_suite(ring, cls, graph)}


def test_verdict_order_is_fixed():
    ring, cls, graph = realize("Z10")
    verdicts = wnc.theorem_suite(ring, cls, graph)
    assert tuple(v.theorem for v in verdicts) == THEOREM_IDS


def test_z10_all_applicable_agree():
    for v in suite_for("Z10").values():
        assert v.status in (AGREE, NOT_APPLICABLE), (v.theorem, v.computed)


def test_z12_completeness_and_diameter():
    verdicts = suite_for("Z12")
    assert verdicts["completeness"].status == AGREE
    assert verdicts["completeness"].predicted == "complete"
    assert verdicts["diameter-2k3l"].status == AGREE
    assert verdicts["quotient-lifting"].status == AGREE


def test_gf4_charted_disagreements():
    verdicts = suite_for("GF(4)")
    for theorem in ("girth", "not-bipartite", "clique-field"):
        assert verdicts[theorem].status == DISAGREE
        assert verdicts[theorem].known_discrepancy
    assert verdicts["diameter-field"].status == AGREE  # inf as predicted
    assert verdicts["class-1"].status == AGREE  # perfect matching is class 1


def test_z3_class1_disagreement_is_charted():
    verdicts = suite_for("Z3")
    v = verdicts["class-1"]
    assert v.status == DISAGREE and v.known_discrepancy
    assert verdicts["clique-zp"].status == AGREE
    assert verdicts["diameter-zp"].status == AGREE  # (3-1)/2 = 1


def test_z9_and_z27_odd_complete_class2_charted():
    for expr in ("Z9", "Z27"):
        v = suite_for(expr)["class-1"]
        assert v.status == DISAGREE and v.known_discrepancy


def test_z2_small_ring_hypotheses_not_applicable():
    verdicts = suite_for("Z2")
    for theorem in ("girth", "not-bipartite", "not-star"):
        assert verdicts[theorem].status == NOT_APPLICABLE
    assert verdicts["completeness"].status == AGREE
    assert verdicts["class-1"].status == AGREE  # K_2 has chi' = 1 = Delta


def test_connectedness_applicability():
    assert suite_for("Z10")["connectedness"].status == AGREE
    assert suite_for("M2(Z2)")["connectedness"].status == AGREE
    # M_2 over Z_3 is not the M_n(Z_n) shape
    assert suite_for("M2(Z3)")["connectedness"].status == NOT_APPLICABLE
    assert suite_for("GF(25)")["connectedness"].status == NOT_APPLICABLE


def test_noncommutative_skips_quotient_lifting():
    assert suite_for("M2(Z2)")["quotient-lifting"].status == NOT_APPLICABLE


def test_product_diameter_hypothesis():
    verdicts = suite_for("Z3 x Z3")
    assert verdicts["diameter-product"].status == AGREE  # diam 2 is in {2, 3}
    # Z_2 is nil clean, so the product hypothesis fails
    assert suite_for("Z2 x Z3")["diameter-product"].status == NOT_APPLICABLE
    assert suite_for("Z10")["diameter-product"].status == NOT_APPLICABLE


def test_four_clique_verdict_lists_the_sets():
    v = suite_for("Z10")["four-cliques"]
    assert v.status == AGREE
    for clique in ("{0,1,4,5}", "{0,1,5,9}", "{0,4,5,6}", "{0,5,6,9}", "{2,3,7,8}"):
        assert clique in v.computed


@pytest.mark.parametrize("expr", ACCEPTANCE_CORPUS)
def test_no_uncharted_disagreements_in_corpus(expr):
    # every DISAGREE in the corpus is one of the charted failure modes
    for v in suite_for(expr).values():
        if v.status == DISAGREE:
            assert v.known_discrepancy, (expr, v.theorem, v.computed)


def test_mismatched_inputs_are_rejected():
    ring, cls, graph = realize("Z10")
    other_ring, other_cls, other_graph = realize("Z12")
    with pytest.raises(ValueError):
        wnc.theorem_suite(ring, other_cls, graph)
    with pytest.raises(ValueError):
        wnc.theorem_suite(ring, cls, other_graph)
    nc_graph = wnc.build_nc_graph(ring, cls)
    with pytest.raises(ValueError):
        wnc.theorem_suite(ring, cls, nc_graph)  # wrong clean set


def test_report_bundles_everything():
    ring, cls, graph = realize("Z10")
    report = wnc.compute_report(ring, cls, graph, want_four_cliques=True)
    assert report.component_sizes == [10]
    assert report.diameter == 2
    assert report.girth == 3
    assert report.clique_number == 4
    assert report.max_degree == 6
    assert report.chromatic_index == 6
    assert report.vizing_class == 1
    assert report.sum_coloring_colors == 6
    assert report.four_cliques == [
        (0, 1, 4, 5), (0, 1, 5, 9), (0, 4, 5, 6), (0, 5, 6, 9), (2, 3, 7, 8)]
    assert tuple(v.theorem for v in report.theorem_verdicts) == THEOREM_IDS
