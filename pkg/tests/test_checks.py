from __future__ import annotations

from slicegroupoids import GroupoidFunctor, cyclic_group, parse_file
from slicegroupoids.checks import document_suites, functor_suite, groupoid_suite, subgroupoid_suite
from slicegroupoids.groupoid import SubgroupoidSelection, from_tables

from conftest import FIXTURES


def test_all_fixture_suites_pass():
    for name in ("z4_mod2.gd", "pair2.gd", "trivial_z2.gd"):
        suites = document_suites(parse_file(FIXTURES / name))
        failed = [(s.subject, n) for s in suites for n, v in s.checks if not v]
        assert failed == []


def test_suite_kinds_cover_every_module(mod2_doc):
    kinds = {s.suite for s in document_suites(mod2_doc)}
    assert kinds == {"groupoid", "slice", "action", "functor", "coset"}


def test_seeded_table_failure_has_witness():
    # Z3 table with one wrong entry, built without validation
    bad = from_tables(
        "Z3bad", ["o"], [("e", 0, 0), ("b", 0, 0), ("b2", 0, 0)],
        lambda g, f: 0 if (g, f) == (1, 1) else (g + f) % 3, [0], [0, 2, 1], validate=False,
    )
    r = groupoid_suite(bad)
    assert not r.passed
    name, v = next((n, v) for n, v in r.checks if not v)
    assert name == "axioms" and v.witness


def test_seeded_functor_failure_has_witness():
    Z4, Z2 = cyclic_group(4), cyclic_group(2)
    F = GroupoidFunctor(Z4, Z2, [0], [0, 1, 1, 1], name="broken")
    r = functor_suite(F)
    failed = [(n, v) for n, v in r.checks if not v]
    assert failed and failed[0][0] == "functor laws" and "CompositionViolation" in failed[0][1].witness[0]


def test_seeded_subgroupoid_failure_is_reported():
    Z4 = cyclic_group(4)
    K = SubgroupoidSelection(Z4, frozenset({0, 1}), "notclosed")
    r = subgroupoid_suite(K)
    assert not r.passed
