"""Search for wide subgroupoids whose sliced coset classes match the image of an induced functor.

For ``F: G -> H`` and an object ``X``, a wide subgroupoid ``K`` of ``G`` is
reported as satisfying when the classes of ``~_K`` that meet ``G/X``
correspond one to one with ``im F_X`` via ``[f] -> F f``.  This is one
reading of "behaves like the quotient by the kernel"; the report says so and
decides nothing beyond the instances it enumerates.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coset import coset_relation
from .functor import GroupoidFunctor
from .groupoid import Groupoid, GroupoidError, Ref, SubgroupoidSelection

CRITERION = (
    "exact bijection: [f] -> F f must be well defined on the classes of ~K that contain a morphism into the apex "
    "(using only those members) and injective; an experimental reading, not a settled definition"
)


class BudgetExceeded(GroupoidError):
    pass


def _extend(G: Groupoid, base: frozenset[int], f: int) -> frozenset[int]:
    """Smallest wide subgroupoid containing ``base`` (already closed) and ``f``."""
    S = set(base)
    frontier = [f]
    while frontier:
        g = frontier.pop()
        if g in S:
            continue
        S.add(g)
        frontier.append(G.inverse(g))
        for h in list(S):
            if G.src(h) == G.tgt(g):
                frontier.append(G.compose(h, g))
            if G.src(g) == G.tgt(h):
                frontier.append(G.compose(g, h))
    return frozenset(S)


def wide_subgroupoids(G: Groupoid, budget: int = 10_000) -> list[frozenset[int]]:
    """Every wide closed subgroupoid, by breadth-first closure from the identities.

    Each subgroupoid is the closure of a predecessor and one more morphism, so
    the search reaches all of them; memoization keeps each one once.
    Ordered by size, then by sorted member ids.
    """
    start = frozenset(int(e) for e in G.identities)
    seen = {start}
    layer = [start]
    while layer:
        nxt = []
        for K in layer:
            for f in range(G.n_morphisms):
                if f in K:
                    continue
                K2 = _extend(G, K, f)
                if K2 not in seen:
                    seen.add(K2)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"more than {budget} wide subgroupoids of {G.name}")
                    nxt.append(K2)
        layer = nxt
    return sorted(seen, key=lambda K: (len(K), sorted(K)))


@dataclass(frozen=True)
class Candidate:
    functor: GroupoidFunctor
    subgroupoid: SubgroupoidSelection
    holds: bool
    classes: list[list[int]]  # sliced classes, members into the apex only
    bijection: list[tuple[int, int]]  # (class index, image morphism)
    witness: dict

    def to_json(self) -> dict:
        G = self.subgroupoid.parent
        out = {
            "subgroupoid": self.subgroupoid.names(),
            "verdict": self.holds,
            "classes": [[G.mname(f) for f in c] for c in self.classes],
        }
        if self.holds:
            out["bijection"] = [
                {"class": [G.mname(f) for f in self.classes[i]], "image": self.functor.target.mname(u)}
                for i, u in self.bijection
            ]
        else:
            out["witness"] = self.witness
        return out


def evaluate_candidate(F: GroupoidFunctor, x: int, K: SubgroupoidSelection) -> Candidate:
    G, H = F.source, F.target
    rel = coset_relation(G, K)
    groups: dict[int, list[int]] = {}
    for f in G.into(x):
        groups.setdefault(rel.cls(f), []).append(f)
    class_ids = sorted(groups)
    classes = [groups[c] for c in class_ids]
    holds, witness, bij = True, {}, []
    owner: dict[int, int] = {}
    for i, members in enumerate(classes):
        images = {F(f) for f in members}
        if len(images) > 1:
            a = members[0]
            b = next(f for f in members if F(f) != F(a))
            holds = False
            witness = {"kind": "not well defined", "morphisms": [G.mname(a), G.mname(b)],
                       "images": [H.mname(F(a)), H.mname(F(b))]}
            break
        u = images.pop()
        if u in owner:
            holds = False
            witness = {"kind": "not injective", "classes": [[G.mname(f) for f in classes[owner[u]]],
                                                             [G.mname(f) for f in members]], "image": H.mname(u)}
            break
        owner[u] = i
        bij.append((i, u))
    return Candidate(F, K, holds, classes, bij if holds else [], witness)


def explore_question(F: GroupoidFunctor, x: Ref, budget: int = 10_000) -> dict:
    """Evaluate every wide subgroupoid of ``F.source``; raise :class:`BudgetExceeded` past ``budget``."""
    if F.contravariant:
        raise ValueError("needs a covariant functor")
    G, H = F.source, F.target
    x = G.object(x)
    image = sorted({F(f) for f in G.into(x)})
    subs = wide_subgroupoids(G, budget)
    cands = [evaluate_candidate(F, x, SubgroupoidSelection(G, K, f"K{i}")) for i, K in enumerate(subs)]
    return {
        "functor": F.name,
        "apex": G.oname(x),
        "criterion": CRITERION,
        "image": [H.mname(u) for u in image],
        "candidates_examined": len(cands),
        "satisfying": [c.subgroupoid.names() for c in cands if c.holds],
        "candidates": [c.to_json() for c in cands],
    }
