"""Acceptance gate: ten criteria, each printing one PASS/FAIL line.

Generated instances come from a fixed seed so that runs are reproducible.
"""
from __future__ import annotations

import random
import re
import subprocess
import sys
import time

import jsonschema
import numpy as np
import pytest

from slicegroupoids import (
    ParseError,
    action_groupoid,
    closure,
    coset_action_groupoid,
    coset_relation,
    cyclic_group,
    explore_question,
    group_homomorphisms,
    group_library,
    identities_only,
    identity_functor,
    image_and_partition,
    induced_functor,
    is_full_at,
    kernel,
    pair_groupoid,
    parse,
    parse_file,
    random_groupoid,
    serialize,
    slice_groupoid,
    validate_functor,
    validate_groupoid,
    whole,
    zero_object,
)
from slicegroupoids.action import embed_slice_co, embed_slice_contra, opposite, source_functor_action, source_functor_slice
from slicegroupoids.builders import mutate, random_wide_subgroupoid
from slicegroupoids.coset import (
    CosetActionGroupoid,
    check_class_sources,
    check_equivalence,
    check_rho_H_laws,
    is_isomorphism_to_action,
    projection,
    projection_checks,
    source_functor_coset,
)
from slicegroupoids.emit import EXPLORE_REPORT_SCHEMA
from slicegroupoids.functor import (
    GroupoidFunctor,
    check_faithful,
    check_full,
    check_injective_on_objects,
    compose_functors,
    functor_violations,
)
from slicegroupoids.groupoid import groupoid_violations
from slicegroupoids.kernel import check_image_of_identity, check_kernel_properties

import oracles
from conftest import FIXTURES, ROOT

SEED = 20240601
N_GENERATED = 200
RESULTS: list[str] = []


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)


@pytest.fixture(scope="module")
def generated():
    rng = random.Random(SEED)
    return [random_groupoid(rng, max_order=8, max_objects=4, union_probability=0.3) for _ in range(N_GENERATED)]


def _slice_hom_counts(G, x) -> np.ndarray:
    """For every pair of slice objects, how many ``g`` satisfy ``f == f' . g`` (exhaustive over Mor(G))."""
    objs = np.array(G.into(x))
    m = G.n_morphisms
    g = np.arange(m)
    counts = np.zeros((len(objs), len(objs)), dtype=np.int64)
    for j, f2 in enumerate(objs):
        cand = g[G.target == G.source[f2]]  # g must end where f' starts
        comp = G.compose_arrays(np.full(len(cand), f2), cand)
        for i, f in enumerate(objs):
            counts[i, j] = int(((comp == f) & (G.source[cand] == G.source[f])).sum())
    return counts


def test_criterion_01_axiom_suite(generated):
    t = time.perf_counter()
    valid = 0
    for G in generated:
        validate_groupoid(G.to_data())
        valid += 1
    rng = random.Random(SEED + 1)
    detected = 0
    for i in range(100):
        data = generated[i].to_data()
        if groupoid_violations(mutate(rng, data)):
            detected += 1
    dt = time.perf_counter() - t
    ok = valid == N_GENERATED and detected == 100 and dt < 30
    report(1, ok, f"{valid}/{N_GENERATED} valid, {detected}/100 mutations detected, {dt:.1f}s (< 30s)")
    assert ok


def test_criterion_02_slice_lemma(generated):
    t = time.perf_counter()
    bad = []
    for k, G in enumerate(generated):
        for x in range(G.n_objects):
            counts = _slice_hom_counts(G, x)
            S = slice_groupoid(G, x)
            p = S.n_objects
            built = all(len(S.groupoid.hom(a, b)) == 1 for a in range(p) for b in range(p))
            z = zero_object(S)
            zi = S.index(z.object)
            unique = all(len(S.groupoid.hom(zi, b)) == 1 and len(S.groupoid.hom(b, zi)) == 1 for b in range(p))
            if not ((counts == 1).all() and built and z.object == G.identity(x) and unique):
                bad.append((k, x))
    dt = time.perf_counter() - t
    ok = not bad and dt < 30
    report(2, ok, f"{len(bad)} failing (G, X) pairs, {dt:.1f}s (< 30s)")
    assert ok


def test_criterion_03_exact_counts():
    P, Z4 = pair_groupoid(2), cyclic_group(4)
    got = {
        "slice(pair2, O1)": (lambda S: (S.n_objects, S.groupoid.n_morphisms))(slice_groupoid(P, "O1")),
        "slice(Z4, o)": (lambda S: (S.n_objects, S.groupoid.n_morphisms))(slice_groupoid(Z4, "o")),
        "action(pair2)": (lambda A: (A.n_objects, A.n_morphisms))(action_groupoid(P).groupoid),
        "coset(pair2, whole)": (lambda C: (C.n_objects, C.n_morphisms))(coset_action_groupoid(P, whole(P)).groupoid),
        "coset(Z4, {e,a2})": (lambda C: (C.n_objects, C.n_morphisms))(
            coset_action_groupoid(Z4, closure(Z4, ["a2"])).groupoid
        ),
    }
    want = {
        "slice(pair2, O1)": (2, 4),
        "slice(Z4, o)": (4, 16),
        "action(pair2)": (4, 8),
        "coset(pair2, whole)": (2, 4),
        "coset(Z4, {e,a2})": (2, 8),
    }
    ok = got == want
    report(3, ok, ", ".join(f"{k}={v[0]}/{v[1]}" for k, v in got.items()))
    assert ok


def test_criterion_04_kernel_partition():
    doc = parse_file(FIXTURES / "z4_mod2.gd")
    F = doc.functors["mod2"]
    G, H = F.source, F.target
    FX = induced_functor(F, "o")
    ker = [G.mname(f) for f in kernel(FX)]
    part = image_and_partition(FX)
    classes = [sorted(G.mname(f) for f in part.classes[u]) for u in part.image]
    bij = part.verify(FX.source.objects)
    props = check_kernel_properties(FX)
    ok = (
        ker == ["e", "a2"]
        and len(part.image) == 2
        and classes == [["a2", "e"], ["a", "a3"]]
        and bij.holds
        and [H.mname(u) for u in part.image] == ["e", "a"]
        and props.holds
        and len(props.pairs) == 4
    )
    report(4, ok, f"kernel={ker}, image size {len(part.image)}, classes={classes}, kernel properties over {len(props.pairs)} pairs")
    assert ok


def test_criterion_05_one_object_oracle():
    t = time.perf_counter()
    lib = group_library(8)
    checked = mismatched = 0
    for G in lib:
        for H in lib:
            for mm in group_homomorphisms(G, H):
                F = validate_functor(G, H, [0], mm)
                FX = induced_functor(F, 0, validate=False)
                ker = oracles.group_kernel(F)
                classes = {frozenset(c) for c in image_and_partition(FX).classes.values()}
                cosets = oracles.right_cosets(G, ker)
                if kernel(FX) != ker or classes != cosets or any(len(c) != len(ker) for c in classes):
                    mismatched += 1
                checked += 1
    dt = time.perf_counter() - t
    ok = mismatched == 0 and checked > 0 and dt < 60
    report(5, ok, f"{checked} homomorphisms among {len(lib)} groups, {mismatched} mismatches, {dt:.1f}s (< 60s)")
    assert ok


def test_criterion_06_embedding_lemma(generated):
    t = time.perf_counter()
    failures = []
    n = 0
    for k, G in enumerate(generated):
        A = action_groupoid(G, validate=False)
        for x in range(G.n_objects):
            S = slice_groupoid(G, x, validate=False)
            contra = embed_slice_contra(S, A)
            co = embed_slice_co(S, A)
            for F in (contra, co):
                if functor_violations(F) or not (check_injective_on_objects(F) and check_full(F) and check_faithful(F)):
                    failures.append((k, x, F.name))
            # iota(<g> . <g'>) == iota(<g>) . iota(<g'>), contravariantly: for composable g' then g
            sg, sf, sgf = S.groupoid.pair_arrays()
            lhs = contra.morphism_map[sgf]
            rhs = A.groupoid.compose_arrays(contra.morphism_map[sf], contra.morphism_map[sg])
            if not np.array_equal(lhs, rhs):
                failures.append((k, x, "contravariance"))
            n += 1
    dt = time.perf_counter() - t
    ok = not failures
    report(6, ok, f"{n} (G, X) instances, both embeddings injective/full/faithful, {len(failures)} failures, {dt:.1f}s")
    assert ok


def test_criterion_07_coset_suite(generated):
    t = time.perf_counter()
    rng = random.Random(SEED + 7)
    failures = []
    cases = 0
    for k, G in enumerate(generated):
        A = action_groupoid(G, validate=False)
        s_action = source_functor_action(A)
        slices = []
        for x in range(G.n_objects):
            S = slice_groupoid(G, x, validate=False)
            op = opposite(S.groupoid)
            iota = embed_slice_co(S, A, op)
            s_slice = source_functor_slice(S, op)
            if compose_functors(s_action, iota).morphism_map.tolist() != s_slice.morphism_map.tolist():
                failures.append((k, x, "s . iota* != s"))
            slices.append(iota)
        for Hsel in (identities_only(G), whole(G), random_wide_subgroupoid(rng, G)):
            cases += 1
            rel = coset_relation(G, Hsel)
            C = CosetActionGroupoid(rel, validate=True)
            checks = {
                "equivalence": check_equivalence(rel),
                "class sources": check_class_sources(rel),
                "rho laws": check_rho_H_laws(rel),
            }
            pc = projection_checks(A, C)
            checks.update({f"pi {name}": v for name, v in pc.items() if name != "hom_set_full"})
            P = projection(A, C)
            sp = compose_functors(source_functor_coset(C), P)
            checks["s . pi == s"] = (
                sp.object_map.tolist() == s_action.object_map.tolist()
                and sp.morphism_map.tolist() == s_action.morphism_map.tolist()
            )
            if Hsel.morphisms == identities_only(G).morphisms:
                checks["iso to action groupoid"] = is_isomorphism_to_action(C, A)
                checks["pi hom-set full"] = pc["hom_set_full"]
            for name, v in checks.items():
                if not v:
                    failures.append((k, Hsel.name, name))
    dt = time.perf_counter() - t
    ok = not failures and dt < 60
    report(7, ok, f"{cases} (G, H) cases over all X, {len(failures)} failures, {dt:.1f}s (< 60s)")
    assert ok


def test_criterion_08_image_of_identity(generated):
    pairs = []
    for G in generated[:50]:
        pairs.append(identity_functor(G))
        Z1 = cyclic_group(1)
        pairs.append(validate_functor(G, Z1, [0] * G.n_objects, [0] * G.n_morphisms, name="collapse"))
    lib = group_library(6)
    for G in lib:
        for H in lib:
            for mm in group_homomorphisms(G, H):
                pairs.append(validate_functor(G, H, [0], mm))
    hyp = violations = 0
    for F in pairs:
        for x in range(F.source.n_objects):
            iid = check_image_of_identity(F, x)
            if iid.full_at.holds:
                hyp += 1
                if not iid.conclusion:
                    violations += 1
    Z2 = cyclic_group(2)
    triv = validate_functor(Z2, Z2, [0], [0, 0], name="trivial")
    witness = check_image_of_identity(triv, "o")
    exhibited = (not witness.full_at.holds) and witness.conclusion
    ok = violations == 0 and hyp > 0 and exhibited
    report(8, ok, f"{hyp} (F, X) with full-at-X, {violations} violations; trivial Z2->Z2: full-at-X="
                  f"{witness.full_at.holds}, F id = id: {witness.conclusion}")
    assert ok


def test_criterion_09_explore_question():
    t = time.perf_counter()
    mod2 = parse_file(FIXTURES / "z4_mod2.gd").functors["mod2"]
    triv = parse_file(FIXTURES / "trivial_z2.gd").functors["triv"]
    Z4 = cyclic_group(4)
    examples = [
        (mod2, ["e", "a2"]),
        (identity_functor(Z4), ["e"]),
        (triv, ["e", "a"]),
    ]
    problems = []
    for F, want in examples:
        r = explore_question(F, 0, budget=10_000)
        jsonschema.validate(r, EXPLORE_REPORT_SCHEMA)
        if want not in r["satisfying"]:
            problems.append(F.name)
    lib = group_library(6)
    surj = 0
    for G in lib:
        for H in lib:
            for mm in group_homomorphisms(G, H):
                F = validate_functor(G, H, [0], mm)
                if not is_full_at(F, 0):
                    continue
                surj += 1
                r = explore_question(F, 0, budget=10_000)
                jsonschema.validate(r, EXPLORE_REPORT_SCHEMA)
                if not r["satisfying"]:
                    problems.append(f"{G.name}->{H.name}")
    dt = time.perf_counter() - t
    ok = not problems and dt < 120
    report(9, ok, f"3 listed examples and {surj} surjective homomorphisms, {len(problems)} without a K, {dt:.1f}s (< 120s)")
    assert ok


def _cli(*argv) -> bytes:
    return subprocess.run([sys.executable, "-m", "slicegroupoids", *argv], capture_output=True, cwd=ROOT).stdout


def test_criterion_10_gdsl_round_trip():
    good = [p for p in sorted(FIXTURES.glob("*.gd")) if p.name != "bad_assoc.gd"]
    round_trips = sum(1 for p in good if parse(serialize(parse_file(p))) == parse_file(p))
    errors = sorted((FIXTURES / "errors").glob("*.gd"))
    matched = 0
    for p in errors:
        kind, line, col = re.match(r"# expect: (\w+) (\d+):(\d+)", p.read_text()).groups()
        try:
            parse_file(p)
        except ParseError as exc:
            if (kind, int(line), int(col)) in [(d.kind, d.span.line, d.span.column) for d in exc.diagnostics]:
                matched += 1
    try:
        parse_file(FIXTURES / "bad_assoc.gd")
        assoc = False
    except ParseError as exc:
        assoc = exc.kinds[0] == "AssociativityViolation"
    runs = [
        ("slice", "fixtures/pair2.gd", "-g", "P", "-x", "O1", "--format", "dot"),
        ("coset", "fixtures/z4_mod2.gd", "-g", "Z4", "-s", "Even", "--format", "dot"),
        ("kernel", "fixtures/z4_mod2.gd", "-f", "mod2", "-x", "o", "--format", "json"),
        ("explore-question", "fixtures/z4_mod2.gd", "-f", "mod2", "-x", "o", "--format", "json"),
        ("check", "fixtures/z4_mod2.gd", "--format", "json"),
    ]
    deterministic = sum(1 for argv in runs if (a := _cli(*argv)) and a == _cli(*argv))
    ok = round_trips == len(good) and matched == len(errors) and assoc and deterministic == len(runs)
    report(10, ok, f"{round_trips}/{len(good)} fixtures round-trip, {matched}/{len(errors)} crafted errors at the "
                   f"expected span, {deterministic}/{len(runs)} outputs byte-identical across two runs")
    assert ok
