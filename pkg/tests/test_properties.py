"""Property-based checks over randomly assembled groupoids."""
from __future__ import annotations

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from slicegroupoids import (
    Document,
    action_groupoid,
    check_faithful,
    check_full,
    closure,
    coset_relation,
    direct_product,
    disjoint_union,
    group_library,
    pair_groupoid,
    parse,
    serialize,
    slice_groupoid,
    source_functors_and_diagram,
    validate_groupoid,
    zero_object,
)
from slicegroupoids.action import embed_slice_co, embed_slice_contra
from slicegroupoids.builders import mutate
from slicegroupoids.coset import check_equivalence, check_rho_H_laws
from slicegroupoids.functor import check_injective_on_objects
from slicegroupoids.groupoid import groupoid_table_violations, groupoid_violations
from slicegroupoids.slice import is_zero_object

import oracles

GROUPS = group_library(6)


@st.composite
def connected(draw):
    G = draw(st.sampled_from(GROUPS))
    n = draw(st.integers(1, 3))
    return G if n == 1 else direct_product(G, pair_groupoid(n))


@st.composite
def groupoids(draw):
    G = draw(connected())
    if draw(st.booleans()):
        G = disjoint_union(G, draw(connected()))
    return G


@st.composite
def with_subgroupoid(draw):
    G = draw(groupoids())
    gens = draw(st.lists(st.integers(0, G.n_morphisms - 1), max_size=2))
    return G, closure(G, gens, "K")


FAST = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@FAST
@given(groupoids())
def test_generated_groupoids_are_valid(G):
    assert groupoid_table_violations(G) == []


@FAST
@given(groupoids(), st.integers(0, 2**32 - 1))
def test_mutations_are_detected(G, seed):
    assert groupoid_violations(mutate(random.Random(seed), G.to_data()))


@FAST
@given(groupoids())
def test_slice_hom_sets_are_singletons(G):
    for x in range(G.n_objects):
        S = slice_groupoid(G, x)
        p = S.n_objects
        assert all(len(S.groupoid.hom(a, b)) == 1 for a in range(p) for b in range(p))
        z = zero_object(S)
        assert z.object == G.identity(x)
        assert is_zero_object(S.groupoid, S.index(z.object))


@FAST
@given(groupoids())
def test_action_counts(G):
    A = action_groupoid(G)
    assert (A.groupoid.n_objects, A.groupoid.n_morphisms) == oracles.action_counts(G)


@FAST
@given(connected())
def test_embeddings(G):
    A = action_groupoid(G)
    for x in range(G.n_objects):
        S = slice_groupoid(G, x)
        for F in (embed_slice_contra(S, A), embed_slice_co(S, A)):
            assert check_injective_on_objects(F) and check_full(F) and check_faithful(F)


@FAST
@given(with_subgroupoid())
def test_coset_laws(pair):
    G, K = pair
    rel = coset_relation(G, K)
    assert check_equivalence(rel) and check_rho_H_laws(rel)
    for x in range(G.n_objects):
        assert source_functors_and_diagram(G, K, x).holds


@FAST
@given(groupoids())
def test_serialize_round_trip(G):
    data = G.to_data()
    data.name = "G"
    doc = Document(groupoids={"G": validate_groupoid(data)})
    assert parse(serialize(doc)) == doc
