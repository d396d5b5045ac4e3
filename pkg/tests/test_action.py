from __future__ import annotations

import pytest

from slicegroupoids import (
    action_groupoid,
    check_faithful,
    check_full,
    cyclic_group,
    direct_product,
    embeddings,
    hom_action,
    hom_action_map,
    opposite,
    pair_groupoid,
    slice_groupoid,
    source_functor_action,
    source_functor_slice,
    symmetric_group_3,
)
from slicegroupoids.action import check_hom_action_laws, embed_slice_co, embed_slice_contra
from slicegroupoids.functor import check_injective_on_objects, compose_functors, functor_violations
from slicegroupoids.groupoid import groupoid_table_violations

import oracles

INSTANCES = [cyclic_group(4), pair_groupoid(2), symmetric_group_3(), direct_product(cyclic_group(2), pair_groupoid(3))]


@pytest.mark.parametrize("G", INSTANCES, ids=lambda g: g.name)
def test_counts_match_brute_force(G):
    A = action_groupoid(G)
    assert (A.groupoid.n_objects, A.groupoid.n_morphisms) == oracles.action_counts(G)
    assert groupoid_table_violations(A.groupoid) == []


def test_pair2_counts(pair2):
    A = action_groupoid(pair2)
    assert (A.groupoid.n_objects, A.groupoid.n_morphisms) == (4, 8)


def test_morphism_endpoints_and_composition(z4):
    A = action_groupoid(z4)
    G = A.groupoid
    m = A.morphism_id("a", "a2")
    assert (G.oname(G.src(m)), G.oname(G.tgt(m))) == ("a", "a3")
    m2 = A.morphism_id("a3", "a")
    # (a3, a) . (a, a2) = (a, a2 . a)
    assert A.pair(G.compose(m2, m)) == (z4.morphism("a"), z4.morphism("a3"))
    with pytest.raises(ValueError):
        action_groupoid(pair2_local()).morphism_id("O1_to_O2", "O1_to_O2")


def pair2_local():
    return pair_groupoid(2)


def test_hom_action(pair2):
    v = hom_action(pair2, "O1")
    assert [pair2.mname(f) for f in v.carrier] == ["id_O1", "O1_to_O2"]
    f = pair2.morphism("O2_to_O1")
    m = hom_action_map(pair2, f)
    assert {pair2.mname(k): pair2.mname(x) for k, x in m.items()} == {"id_O1": "O2_to_O1", "O1_to_O2": "id_O2"}
    assert check_hom_action_laws(pair2)


@pytest.mark.parametrize("G", INSTANCES, ids=lambda g: g.name)
def test_embeddings_are_injective_full_faithful(G):
    A = action_groupoid(G)
    for x in range(G.n_objects):
        S = slice_groupoid(G, x)
        for F in (embed_slice_contra(S, A), embed_slice_co(S, A)):
            assert functor_violations(F) == []
            assert check_injective_on_objects(F)
            assert check_full(F) and oracles.is_full(F)
            assert check_faithful(F) and oracles.is_faithful(F)


def test_contravariant_functoriality(z4):
    iota, _ = embeddings(z4, "o")
    S = iota.source
    for g in range(S.n_morphisms):
        for h in S.out_of(S.tgt(g)):
            assert iota(S.compose(h, g)) == iota.target.compose(iota(g), iota(h))


def test_opposite_is_involutive(pair2):
    S = slice_groupoid(pair2, "O1").groupoid
    assert opposite(opposite(S)) == S
    assert opposite(S).name.endswith("^op")


def test_source_triangle(z4):
    S = slice_groupoid(z4, "o")
    op = opposite(S.groupoid)
    A = action_groupoid(z4)
    lhs = compose_functors(source_functor_action(A), embed_slice_co(S, A, op))
    rhs = source_functor_slice(S, op)
    assert lhs.object_map.tolist() == rhs.object_map.tolist()
    assert lhs.morphism_map.tolist() == rhs.morphism_map.tolist()


def test_opposite_swaps_composition_and_satisfies_the_axioms(z4, pair2):
    for G in (z4, pair2, action_groupoid(pair2).groupoid):
        op = opposite(G)
        assert not groupoid_table_violations(op)
        for g in range(G.n_morphisms):
            assert (op.src(g), op.tgt(g)) == (G.tgt(g), G.src(g))
            for f in range(G.n_morphisms):
                if G.tgt(g) == G.src(f):
                    assert op.compose(g, f) == G.compose(f, g)
