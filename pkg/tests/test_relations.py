import pytest

from flaghilb.fixed_points import injected_fault
from flaghilb.relations import (
    builtin_relations,
    check_relation,
    get_relation,
    relation_ids,
    reports_from_json,
    reports_to_json,
    run_suite,
)


def test_catalog_size_and_unique_ids():
    ids = relation_ids()
    assert len(ids) == len(set(ids))
    assert len(ids) >= 20
    assert {"commrel", "qt_twist", "hecke_braid", "N_dplus"} <= set(ids)


def test_indexed_families_cover_every_index():
    assert len(get_relation("hecke_quadratic").instantiate(4)) == 3
    assert len(get_relation("hecke_braid").instantiate(4)) == 2
    assert len(get_relation("z_commute").instantiate(4)) == 6


def test_qt_twist_needs_k_at_least_one():
    spec = get_relation("qt_twist")
    assert spec.instantiate(0) == []
    assert spec.instantiate(1)


def test_instances_have_matching_grade_shift():
    for spec in builtin_relations():
        for k in range(4):
            for inst in spec.instantiate(k):
                shifts = {w.grade_shift() for _, w in inst.lhs + inst.rhs}
                assert len(shifts) == 1, (spec.id, inst.label)


def test_unknown_relation():
    with pytest.raises(KeyError):
        get_relation("no_such_relation")


def test_commrel_and_braid():
    assert check_relation(get_relation("commrel"), 2, 1).passed
    assert check_relation(get_relation("hecke_braid"), 5, 3).passed


def test_suite_up_to_4_2():
    reports = run_suite(4, 2)
    bad = [r for r in reports if not r.passed]
    assert not bad, bad[0].counterexample


def test_report_json_round_trip():
    reports = run_suite(2, 1, [get_relation("commrel"), get_relation("dplus_T")])
    assert reports_from_json(reports_to_json(reports)) == reports


@pytest.mark.parametrize("kind, rel_id, grade", [
    ("T", "hecke_quadratic", (2, 2)),
    ("d+", "phi_commutator", (1, 1)),
    ("pieri", "dplus_square_T", (2, 0)),
])
def test_corrupted_operator_is_caught(kind, rel_id, grade):
    with injected_fault(kind):
        rep = check_relation(get_relation(rel_id), *grade)
    assert not rep.passed
    assert rep.counterexample["flag"] is not None
    assert check_relation(get_relation(rel_id), *grade).passed
