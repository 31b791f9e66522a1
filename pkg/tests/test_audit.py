import json
from fractions import Fraction

import pytest

from maxwiener.audit import (
    AuditRecord,
    audit_instance,
    audit_sweep,
    bound_verdict,
    exhaustive_tree_check,
    exhaustive_tree_max,
    greedy_verdict,
    reproduce_example_1_3,
    set_verdict,
    weight_vectors,
)
from maxwiener.errors import InstanceTooLarge
from maxwiener.graph import validate_degree_sequence


def test_verdicts_are_pure():
    assert set_verdict(5, [(1,)], 4, [(1,)]) == "value_mismatch"
    assert set_verdict(5, [(1,), (2,)], 5, [(2,), (1,)]) == "value_match_set_match"
    assert set_verdict(5, [(1,)], 5, [(1,), (2,)]) == "value_match_set_mismatch"
    assert greedy_verdict(10, 10) == "greedy_optimal"
    assert greedy_verdict(10, 9) == "greedy_suboptimal"
    assert greedy_verdict(10, 11) == "value_mismatch"
    assert bound_verdict(29, Fraction(29), True, 2) == "bound_ok"
    assert bound_verdict(29, Fraction(29), False, 2) == "bound_violated"
    assert bound_verdict(30, Fraction(29), False, 3) == "bound_violated"
    assert bound_verdict(25, Fraction(25), False, 1) == "bound_ok"


def test_weight_vector_counts():
    assert len(weight_vectors(6, 4)) == 84
    assert [len(weight_vectors(k, 5)) for k in range(2, 7)] == [15, 35, 70, 126, 210]
    assert all(list(w) == sorted(w, reverse=True) for w in weight_vectors(4, 3))


def test_k2_sweep_all_match():
    rep = audit_sweep([2], 7)
    claims = [r for r in rep.records if r.claim_source in ("T3.1", "T2.7")]
    assert claims and all(r.verdict == "value_match_set_match" for r in claims)


def test_k6_cap4_case_coverage():
    rep = audit_sweep([6], 4)
    assert rep.sweep["n_instances"] == 84
    assert rep.summary["value_mismatch"] == 0
    # cases 3, 7 and 11 need weights above 4
    assert sorted(int(c.split(".")[1]) for c in rep.details["case_counts"]) == [1, 2, 4, 5, 6, 8, 9, 10]


def test_k5_sweep_finds_boundary_mismatches():
    rep = audit_sweep([5], 5)
    mism = rep.by_verdict("value_match_set_mismatch")
    assert rep.summary["value_mismatch"] == 0
    assert {r.instance for r in mism} == {(4, 2, 2, 2, 1), (5, 2, 2, 2, 1), (5, 3, 2, 2, 1)}
    assert all(r.claim_source == "T3.2" for r in mism)


def test_report_structure_and_determinism():
    a = audit_sweep([3, 2], 3)
    b = audit_sweep([2, 3], 3, workers=2)
    assert a.to_json() == b.to_json()
    doc = json.loads(a.to_json())
    assert sum(doc["summary"].values()) == doc["n_records"] == len(doc["records"])
    keys = [(r.k, r.instance, r.claim_source) for r in a.records]
    assert keys == sorted(keys)


def test_records_preserve_mismatches():
    rec = AuditRecord((3, 2), "T3.1", 6, ((3, 2),), 5, ((2, 3),), "value_mismatch")
    assert rec.to_dict()["verdict"] == "value_mismatch"


def test_sweep_rejects_large_k():
    with pytest.raises(InstanceTooLarge):
        audit_sweep([10], 2)
    with pytest.raises(ValueError):
        audit_sweep([2], 0)


def test_audit_instance_sources():
    sources = [r.claim_source for r in audit_instance((3, 3, 2, 2, 1, 1))]
    assert sources == ["C2.6", "T1.2-greedy", "T2.4-bound", "T2.7", "T3.3"]
    assert [r.claim_source for r in audit_instance((2,))] == ["T1.2-greedy", "T2.4-bound", "T2.7"]


def test_example_report():
    rep = reproduce_example_1_3()
    det = rep.details
    assert det["ok"] and all(det["checks"].values())
    assert (det["w_t1"], det["w_t2"], det["gap"]) == (1786, 1770, 16)
    assert (det["printed_w_t1"], det["printed_w_t2"]) == (9886, 9870)
    assert det["greedy_chain"] == [13, 5, 5, 5, 4, 3]
    assert [12, 2, 3, 4, 4, 4] in det["oracle"]["argmax"]
    assert rep.summary["greedy_suboptimal"] == 1


@pytest.mark.parametrize(
    "degrees, best",
    [((3, 2, 2, 1, 1, 1), 32), ((3, 3, 1, 1, 1, 1), 29), ((2, 2, 1, 1), 10), ((4, 2, 2, 1, 1, 1, 1), 46)],
)
def test_exhaustive_tree_max(degrees, best):
    chk = exhaustive_tree_max(validate_degree_sequence(degrees))
    assert chk.tree_max == chk.caterpillar_max == best
    assert chk.ok


def test_exhaustive_tree_check_non_caterpillar_family():
    # also realized by the spider with three legs of length two
    d = validate_degree_sequence([3, 2, 2, 2, 1, 1, 1])
    chk = exhaustive_tree_max(d)
    assert chk.trees_enumerated == 5 * 4 * 3 * 2 // 2
    assert exhaustive_tree_check(d)


def test_exhaustive_tree_cap():
    with pytest.raises(InstanceTooLarge):
        exhaustive_tree_check(validate_degree_sequence([2] * 11 + [1, 1]))


def test_sweep_with_trees():
    rep = audit_sweep([2, 3], 2, trees=True)
    assert rep.tree_checks and all(c["ok"] for c in rep.tree_checks)
    assert rep.hard_failures == 0


@pytest.mark.parametrize("degrees", [(3, 3, 2, 1, 1, 1, 1), (3, 3, 2, 2, 1, 1, 1, 1), (4, 3, 2, 1, 1, 1, 1, 1)])
def test_exhaustive_tree_check_nearby_sequences(degrees):
    assert exhaustive_tree_check(validate_degree_sequence(degrees))
