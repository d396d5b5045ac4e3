"""Invariant suites, one per kind of entity, as run by the ``check`` command.

Each suite returns a :class:`SuiteResult`: named verdicts with witnesses and,
where useful, a data payload (for instance the kernel report).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .action import (
    action_groupoid,
    check_hom_action_laws,
    embed_slice_co,
    embed_slice_contra,
    opposite,
    source_functor_action,
    source_functor_slice,
)
from .coset import (
    CosetActionGroupoid,
    check_class_sources,
    check_equivalence,
    check_rho_H_laws,
    check_sliced,
    coset_relation,
    is_isomorphism_to_action,
    projection_checks,
    sliced_coset_groupoid,
    source_functor_coset,
    projection,
)
from .functor import (
    GroupoidFunctor,
    Verdict,
    check_faithful,
    check_full,
    check_injective_on_objects,
    compose_functors,
    functor_violations,
    preserves_inverses,
)
from .groupoid import Groupoid, SubgroupoidSelection, groupoid_table_violations, identities_only, subgroupoid_violations, whole
from .kernel import (
    carriers_agree,
    check_image_of_identity,
    check_kernel_properties,
    image_and_partition,
    induced_functor,
    kernel,
    kernel_report,
)
from .slice import is_zero_object, slice_groupoid, zero_object


@dataclass
class SuiteResult:
    suite: str
    subject: str
    checks: list[tuple[str, Verdict]] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.holds for _, v in self.checks)

    def add(self, name: str, verdict: Verdict | bool, detail: str = "") -> None:
        if not isinstance(verdict, Verdict):
            verdict = Verdict(bool(verdict), (), "" if verdict else detail)
        self.checks.append((name, verdict))

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "subject": self.subject,
            "checks": [
                {"name": n, "holds": v.holds, "witness": list(v.witness), "detail": v.detail} for n, v in self.checks
            ],
        }
        if self.data:
            out["data"] = self.data
        return out


def _violations(vs) -> Verdict:
    return Verdict(not vs, tuple(str(v) for v in vs[:1]))


def _equal_functors(F1: GroupoidFunctor, F2: GroupoidFunctor) -> Verdict:
    same = (F1.object_map.tolist() == F2.object_map.tolist()) and (F1.morphism_map.tolist() == F2.morphism_map.tolist())
    return Verdict(same, (), "" if same else "functors differ")


def groupoid_suite(G: Groupoid) -> SuiteResult:
    r = SuiteResult("groupoid", G.name)
    r.add("axioms", _violations(groupoid_table_violations(G)))
    invol = all(G.inverse(G.inverse(f)) == f for f in range(G.n_morphisms))
    r.add("inverse is an involution", invol, "inv(inv f) != f")
    comps = G.components()
    r.add("components partition the objects", sorted(x for c in comps for x in c) == list(range(G.n_objects)))
    r.data = {"objects": G.n_objects, "morphisms": G.n_morphisms, "components": len(comps)}
    return r


def slice_suite(G: Groupoid, x: int) -> SuiteResult:
    S = slice_groupoid(G, x)
    r = SuiteResult("slice", f"{G.name}/{G.oname(x)}")
    r.add("axioms", _violations(groupoid_table_violations(S.groupoid)))
    p = S.n_objects
    bad = [(a, b) for a in range(p) for b in range(p) if len(S.groupoid.hom(a, b)) != 1]
    r.add(
        "exactly one triangle between any two objects",
        Verdict(not bad, tuple(S.groupoid.oname(i) for i in (bad[0] if bad else ()))),
    )
    carriers = all(
        G.compose(m.target, m.underlying) == m.source for m in S.morphisms()
    )
    r.add("triangles commute", carriers, "f != f' . g")
    z = zero_object(S)
    zi = S.index(z.object)
    r.add("identity of the apex is a zero object", is_zero_object(S.groupoid, zi))
    r.add(
        "zero object maps are carried by g and inv(g)",
        all(z.incoming[g].underlying == g and z.outgoing[g].underlying == G.inverse(g) for g in S.objects),
    )
    r.add("slice is connected", S.groupoid.is_connected())
    r.data = {"objects": p, "morphisms": S.groupoid.n_morphisms}
    return r


def action_suite(G: Groupoid) -> SuiteResult:
    A = action_groupoid(G)
    r = SuiteResult("action", A.groupoid.name)
    r.add("axioms", _violations(groupoid_table_violations(A.groupoid)))
    r.add("hom action is a contravariant functor", check_hom_action_laws(G))
    s_action = source_functor_action(A)
    r.add("source functor is a functor", _violations(functor_violations(s_action)))
    for x in range(G.n_objects):
        S = slice_groupoid(G, x)
        op = opposite(S.groupoid)
        X = G.oname(x)
        for F in (embed_slice_contra(S, A), embed_slice_co(S, A, op)):
            r.add(f"{F.name} is a functor", _violations(functor_violations(F)))
            r.add(f"{F.name} is injective on objects", check_injective_on_objects(F))
            r.add(f"{F.name} is full", check_full(F))
            r.add(f"{F.name} is faithful", check_faithful(F))
        iota_star = embed_slice_co(S, A, op)
        r.add(f"s . iota*_{X} == s", _equal_functors(compose_functors(s_action, iota_star), source_functor_slice(S, op)))
    r.data = {"objects": A.groupoid.n_objects, "morphisms": A.groupoid.n_morphisms}
    return r


def _one_object_kernel_oracle(F: GroupoidFunctor) -> Verdict:
    """Textbook group kernel and right cosets, straight from the tables."""
    G, H = F.source, F.target
    e = H.identity(0)
    ker = [g for g in range(G.n_morphisms) if F(g) == e]
    cosets = {frozenset(G.compose(k, g) for k in ker) for g in range(G.n_morphisms)}
    FX = induced_functor(F, 0)
    if kernel(FX) != ker:
        return Verdict(False, tuple(G.mname(g) for g in kernel(FX)), "kernel differs from the group kernel")
    part = image_and_partition(FX)
    classes = {frozenset(c) for c in part.classes.values()}
    if classes != cosets:
        return Verdict(False, (), "preimage classes differ from the right cosets of the kernel")
    if any(len(c) != len(ker) for c in classes):
        return Verdict(False, (), "a class has the wrong size")
    return Verdict(True)


def functor_suite(F: GroupoidFunctor) -> SuiteResult:
    G, H = F.source, F.target
    r = SuiteResult("functor", F.name)
    r.add("functor laws", _violations(functor_violations(F)))
    r.add("preserves inverses", preserves_inverses(F))
    reports = {}
    for x in range(G.n_objects):
        X = G.oname(x)
        FX = induced_functor(F, x)
        r.add(f"{FX.functor.name} is a functor", _violations(functor_violations(FX.functor)))
        r.add(f"{FX.functor.name} carries <g> to <F g>", carriers_agree(FX))
        iid = check_image_of_identity(F, x)
        r.add(f"full at {X} implies F id = id", Verdict(iid.consistent, (X,) if not iid.consistent else ()))
        r.add(f"kernel properties at {X}", check_kernel_properties(FX).holds)
        part = image_and_partition(FX)
        r.add(f"preimage classes partition {G.name}/{X}", part.verify(FX.source.objects))
        reports[X] = kernel_report(FX)
    if G.n_objects == 1 and H.n_objects == 1:
        r.add("matches the group kernel and its cosets", _one_object_kernel_oracle(F))
    r.data = {"kernel_reports": reports}
    return r


def _one_object_coset_oracle(rel) -> Verdict:
    G = rel.parent
    H = sorted(rel.sub.morphisms)
    expected = {tuple(sorted({G.compose(h, g) for h in H})) for g in range(G.n_morphisms)}
    got = {c.members for c in rel.classes}
    return Verdict(got == expected, (), "" if got == expected else "classes differ from right cosets")


def subgroupoid_suite(K: SubgroupoidSelection) -> SuiteResult:
    G = K.parent
    r = SuiteResult("coset", f"{K.name} in {G.name}")
    closed = subgroupoid_violations(G, K.morphisms)
    r.add("wide and closed", _violations(closed))
    if closed:
        return r
    rel = coset_relation(G, K)
    r.add("~ is an equivalence relation", check_equivalence(rel))
    r.add("classes have a single source", check_class_sources(rel))
    r.add("rho is a contravariant functor", check_rho_H_laws(rel))
    A = action_groupoid(G)
    C = CosetActionGroupoid(rel)
    r.add("coset action groupoid axioms", _violations(groupoid_table_violations(C.groupoid)))
    for name, v in projection_checks(A, C).items():
        if name != "hom_set_full":
            r.add(f"pi {name.replace('_', ' ')}", v)
    r.add(
        "s . pi == s",
        _equal_functors(compose_functors(source_functor_coset(C), projection(A, C)), source_functor_action(A)),
    )
    for x in range(G.n_objects):
        sc = sliced_coset_groupoid(G, K, x)
        r.add(f"sliced coset groupoid at {G.oname(x)} is connected and full", check_sliced(sc))
    if all(len(c.members) == 1 for c in rel.classes):
        r.add("isomorphic to the action groupoid", is_isomorphism_to_action(C, A))
    if G.n_objects == 1:
        r.add("classes are the right cosets", _one_object_coset_oracle(rel))
    r.data = {
        "classes": [[G.mname(g) for g in c.members] for c in rel.classes],
        "objects": C.groupoid.n_objects,
        "morphisms": C.groupoid.n_morphisms,
    }
    return r


def document_suites(doc) -> list[SuiteResult]:
    """Every applicable suite for every entity, in declaration order."""
    out: list[SuiteResult] = []
    for G in doc.groupoids.values():
        out.append(groupoid_suite(G))
        out.extend(slice_suite(G, x) for x in range(G.n_objects))
        out.append(action_suite(G))
        out.append(subgroupoid_suite(identities_only(G, "identities")))
        out.append(subgroupoid_suite(whole(G, "whole")))
    for F in doc.functors.values():
        out.append(functor_suite(F))
    for K in doc.subgroupoids.values():
        out.append(subgroupoid_suite(K))
    return out
