"""Constructors for test instances: groups, pair groupoids, unions, products.

Every finite connected groupoid is isomorphic to (group) x (pair groupoid),
so ``direct_product(group, pair_groupoid(n))`` together with
``disjoint_union`` reaches every finite groupoid up to isomorphism.
"""
from __future__ import annotations

import itertools
import random
from typing import Sequence

import numpy as np

from .groupoid import (
    Groupoid,
    GroupoidData,
    SubgroupoidSelection,
    ValidationError,
    Violation,
    closure,
    from_tables,
    validate_groupoid,
)


class InvalidCayleyTable(ValidationError):
    pass


def one_object_from_table(
    cayley: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    object_name: str = "o",
    name: str = "G",
) -> Groupoid:
    """One-object groupoid from a Cayley table, ``cayley[g][f] == g . f``."""
    table = np.asarray(cayley, dtype=np.int64)
    k = len(table)
    if table.shape != (k, k) or k == 0:
        raise InvalidCayleyTable([Violation("InvalidCayleyTable", (name,), "table must be square and nonempty")])
    if table.min() < 0 or table.max() >= k:
        raise InvalidCayleyTable([Violation("InvalidCayleyTable", (name,), "entries out of range")])
    names = list(names) if names is not None else [f"g{i}" for i in range(k)]
    ids = [e for e in range(k) if (table[e] == np.arange(k)).all() and (table[:, e] == np.arange(k)).all()]
    if not ids:
        raise InvalidCayleyTable([Violation("InvalidCayleyTable", (name,), "no identity element")])
    e = ids[0]
    inverse = {}
    for g in range(k):
        inv = [h for h in range(k) if table[h, g] == e and table[g, h] == e]
        if inv:
            inverse[g] = inv[0]
    data = GroupoidData(
        objects=[object_name],
        morphisms=[(nm, 0, 0) for nm in names],
        compose={(g, f): int(table[g, f]) for g in range(k) for f in range(k)},
        identity={0: e},
        inverse=inverse,
        name=name,
    )
    try:
        return validate_groupoid(data)
    except ValidationError as exc:
        raise InvalidCayleyTable(exc.violations) from None


def cyclic_group(n: int, generator: str = "a", identity: str = "e", name: str | None = None) -> Groupoid:
    """Z/n with elements ``e, a, a2, a3, ...`` (``a^i . a^j = a^(i+j)``)."""
    names = [identity] + [generator if i == 1 else f"{generator}{i}" for i in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return one_object_from_table(table, names, name=name or f"Z{n}")


def permutation_group(generators: Sequence[Sequence[int]], name: str = "G", prefix: str = "p") -> Groupoid:
    """Group generated by permutations (tuples of images), identity first, BFS order."""
    deg = len(generators[0])
    ident = tuple(range(deg))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        for s in generators:
            # s . x: apply x first
            y = tuple(s[x] for x in elems[i])
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    table = [[index[tuple(a[x] for x in b)] for b in elems] for a in elems]
    names = ["e"] + [f"{prefix}{j}" for j in range(1, len(elems))]
    return one_object_from_table(table, names, name=name)


def symmetric_group_3() -> Groupoid:
    return permutation_group([(1, 0, 2), (1, 2, 0)], name="S3")


def dihedral_group(n: int) -> Groupoid:
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], name=f"D{n}")


def quaternion_group() -> Groupoid:
    # units +-1, +-i, +-j, +-k encoded as (sign, axis), axis 0 = 1
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, a) for a in range(4) for s in (1, -1)]
    names = ["e", "m1", "i", "mi", "j", "mj", "k", "mk"]
    idx = {x: n for n, x in enumerate(elems)}

    def mul(x, y):
        s, a = mult[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    table = [[idx[mul(x, y)] for y in elems] for x in elems]
    return one_object_from_table(table, names, name="Q8")


def group_library(max_order: int = 8) -> list[Groupoid]:
    """One representative of every group of order <= 8 (plus Z/1)."""
    out = [cyclic_group(n) for n in range(1, max_order + 1)]
    if max_order >= 4:
        out.append(direct_product(cyclic_group(2), cyclic_group(2, "b"), name="Z2xZ2"))
    if max_order >= 6:
        out.append(symmetric_group_3())
    if max_order >= 8:
        out.append(direct_product(cyclic_group(4), cyclic_group(2, "b"), name="Z4xZ2"))
        out.append(
            direct_product(
                direct_product(cyclic_group(2), cyclic_group(2, "b")), cyclic_group(2, "c"), name="Z2xZ2xZ2"
            )
        )
        out.append(dihedral_group(4))
        out.append(quaternion_group())
    return out


def pair_groupoid(n: int, name: str | None = None) -> Groupoid:
    """Objects ``O1..On``, exactly one morphism per ordered pair of objects.

    Morphisms are ordered by (source, target); identities are ``id_Oi`` and
    the rest ``Oi_to_Oj``.
    """
    objs = [f"O{i + 1}" for i in range(n)]
    mors = []
    for s in range(n):
        for t in range(n):
            mors.append((f"id_{objs[s]}" if s == t else f"{objs[s]}_to_{objs[t]}", s, t))
    return from_tables(
        name or f"Pair{n}",
        objs,
        mors,
        lambda g, f: (f // n) * n + g % n,
        [x * n + x for x in range(n)],
        [(f % n) * n + f // n for f in range(n * n)],
    )


def disjoint_union(G1: Groupoid, G2: Groupoid, name: str | None = None) -> Groupoid:
    """``G1`` ids first, then ``G2``; names get ``L_``/``R_`` prefixes only on a clash."""
    o1, o2 = [o.name for o in G1.objects], [o.name for o in G2.objects]
    m1, m2 = [m.name for m in G1.morphisms], [m.name for m in G2.morphisms]
    if set(o1) & set(o2) or set(m1) & set(m2):
        o1, o2 = [f"L_{x}" for x in o1], [f"R_{x}" for x in o2]
        m1, m2 = [f"L_{x}" for x in m1], [f"R_{x}" for x in m2]
    n1, k1 = G1.n_objects, G1.n_morphisms
    mors = [(m1[f.id], f.source, f.target) for f in G1.morphisms]
    mors += [(m2[f.id], f.source + n1, f.target + n1) for f in G2.morphisms]

    def comp(g: int, f: int) -> int:
        if f < k1:
            return G1.compose(g, f)
        return G2.compose(g - k1, f - k1) + k1

    return from_tables(
        name or f"{G1.name}+{G2.name}",
        o1 + o2,
        mors,
        comp,
        [int(e) for e in G1.identities] + [int(e) + k1 for e in G2.identities],
        [int(i) for i in G1.inverses] + [int(i) + k1 for i in G2.inverses],
        validate=False,
    )


def direct_product(G1: Groupoid, G2: Groupoid, name: str | None = None) -> Groupoid:
    """Componentwise product; ids ordered lexicographically by (left, right)."""
    n2, k2 = G2.n_objects, G2.n_morphisms
    if G1.n_objects == 1:
        objs = [b.name for b in G2.objects]
    elif n2 == 1:
        objs = [a.name for a in G1.objects]
    else:
        objs = [f"{a.name}_{b.name}" for a in G1.objects for b in G2.objects]
    mors = [
        (_pair_name(G1, a, G2, b), a.source * n2 + b.source, a.target * n2 + b.target)
        for a in G1.morphisms
        for b in G2.morphisms
    ]

    if len({m[0] for m in mors}) < len(mors):
        mors = [(f"{a.name}_{b.name}", s, t) for a in G1.morphisms for b in G2.morphisms for _, s, t in [mors[a.id * k2 + b.id]]]
    if len({m[0] for m in mors}) < len(mors):
        mors = [(f"m{i}", s, t) for i, (_, s, t) in enumerate(mors)]
    if len(set(objs)) < len(objs):
        objs = [f"x{i}" for i in range(len(objs))]

    def comp(g: int, f: int) -> int:
        return G1.compose(g // k2, f // k2) * k2 + G2.compose(g % k2, f % k2)

    return from_tables(
        name or f"{G1.name}x{G2.name}",
        objs,
        mors,
        comp,
        [int(G1.identities[x // n2]) * k2 + int(G2.identities[x % n2]) for x in range(len(objs))],
        [int(G1.inverses[f // k2]) * k2 + int(G2.inverses[f % k2]) for f in range(len(mors))],
        validate=False,
    )


def _pair_name(G1: Groupoid, a, G2: Groupoid, b) -> str:
    # readable names for group x group: (e,e) -> e, (a,e) -> a, (e,b) -> b, (a,b) -> ab
    if G1.n_objects == 1 and G2.n_objects == 1:
        ea, eb = G1.is_identity(a.id), G2.is_identity(b.id)
        if ea and eb:
            return "e"
        if eb:
            return a.name
        if ea:
            return b.name
        return f"{a.name}{b.name}"
    return f"{a.name}_{b.name}"


# -- random instances ------------------------------------------------------


def random_groupoid(
    rng: random.Random,
    max_order: int = 8,
    max_objects: int = 4,
    union_probability: float = 0.3,
) -> Groupoid:
    """(group of order <= max_order) x (pair groupoid), sometimes unioned with a second one."""
    groups = group_library(max_order)

    def component() -> Groupoid:
        grp = rng.choice(groups)
        n = rng.randint(1, max_objects)
        if n == 1:
            return grp
        return direct_product(grp, pair_groupoid(n))

    G = component()
    if rng.random() < union_probability:
        G = disjoint_union(G, component())
    return G


def random_wide_subgroupoid(rng: random.Random, G: Groupoid, max_generators: int = 2) -> SubgroupoidSelection:
    k = rng.randint(0, max_generators)
    gens = rng.sample(range(G.n_morphisms), min(k, G.n_morphisms))
    return closure(G, gens, name="K")


def mutate(rng: random.Random, data: GroupoidData) -> GroupoidData:
    """Corrupt exactly one entry of the compose, identity or inverse table."""
    out = data.copy()
    m = len(out.morphisms)
    which = rng.choices(["compose", "identity", "inverse"], weights=[len(out.compose), len(out.identity), len(out.inverse)])[0]
    table = getattr(out, which)
    key = rng.choice(sorted(table))
    if m == 1 or rng.random() < 0.1:
        del table[key]
    else:
        table[key] = rng.choice([x for x in range(m) if x != table[key]])
    return out


def group_homomorphisms(G: Groupoid, H: Groupoid) -> list[list[int]]:
    """All homomorphisms between one-object groupoids, as morphism maps.

    Images of a greedy generating set are enumerated and extended along
    words; inconsistent extensions are discarded.
    """
    assert G.n_objects == 1 and H.n_objects == 1
    gens: list[int] = []
    span = {G.identity(0)}
    for x in range(G.n_morphisms):
        if x not in span:
            gens.append(x)
            span = set(closure(G, gens).morphisms)
    out = []
    for images in itertools.product(range(H.n_morphisms), repeat=len(gens)):
        fmap = {G.identity(0): H.identity(0)}
        frontier = [G.identity(0)]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for s, t in zip(gens, images):
                y = G.compose(s, x)
                fy = H.compose(t, fmap[x])
                if y in fmap:
                    ok = fmap[y] == fy
                    if not ok:
                        break
                else:
                    fmap[y] = fy
                    frontier.append(y)
        if ok and all(
            fmap[G.compose(a, b)] == H.compose(fmap[a], fmap[b]) for a in fmap for b in fmap
        ):
            out.append([fmap[x] for x in range(G.n_morphisms)])
    return out
