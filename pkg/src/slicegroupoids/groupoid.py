"""Finite groupoids stored as explicit composition tables.

Composition is written ``g . f`` (``compose(g, f)``) and always means
"apply ``f`` first, then ``g``"; it is defined exactly when
``source(g) == target(f)``.

Internally every morphism ``g`` with source ``Y`` has a *slot*: its position
in the sorted list of morphisms leaving ``Y``.  The composite ``g . f`` is
stored at ``table[f, slot[g]]``, so the table is ``m x D`` where ``D`` is the
largest out-degree.  This keeps derived groupoids such as the action groupoid
(quadratic in the base) compact, and lets the axiom checks run vectorized.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

DEFAULT_SIZE_LIMIT = 10_000

Ref = Union[int, str]


def size_limit() -> int:
    """Morphism-count guardrail for derived constructions (env ``GDSL_SIZE_LIMIT``)."""
    return int(os.environ.get("GDSL_SIZE_LIMIT", DEFAULT_SIZE_LIMIT))


class GroupoidError(Exception):
    pass


class UnknownRef(GroupoidError, LookupError):
    pass


class NotComposable(GroupoidError, ValueError):
    pass


class SizeLimitError(GroupoidError):
    pass


@dataclass(frozen=True)
class Violation:
    """One broken law, with the names of the morphisms/objects that witness it."""

    kind: str
    witnesses: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        s = f"{self.kind}({', '.join(self.witnesses)})"
        return f"{s}: {self.detail}" if self.detail else s


class ValidationError(GroupoidError):
    def __init__(self, violations: Iterable[Violation]):
        self.violations = list(violations)
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            shown += f"; ... ({more} more)"
        super().__init__(shown)

    @property
    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


@dataclass(frozen=True)
class ObjectRef:
    id: int
    name: str


@dataclass(frozen=True)
class MorphismRef:
    id: int
    name: str
    source: int
    target: int


@dataclass
class GroupoidData:
    """Unchecked groupoid tables, indexed by dense integer ids.

    ``compose`` maps ``(g, f)`` to ``g . f``; ``identity`` maps object ids to
    morphism ids; ``inverse`` maps morphism ids to morphism ids.  Nothing is
    checked until :func:`validate_groupoid`.
    """

    objects: list[str]
    morphisms: list[tuple[str, int, int]]
    compose: dict[tuple[int, int], int] = field(default_factory=dict)
    identity: dict[int, int] = field(default_factory=dict)
    inverse: dict[int, int] = field(default_factory=dict)
    name: str = "G"

    @classmethod
    def from_names(
        cls,
        objects: Sequence[str],
        morphisms: Sequence[tuple[str, str, str]],
        compose: Mapping[tuple[str, str], str],
        identity: Mapping[str, str],
        inverse: Mapping[str, str],
        name: str = "G",
    ) -> "GroupoidData":
        oid = {o: i for i, o in enumerate(objects)}
        mid = {m[0]: i for i, m in enumerate(morphisms)}
        return cls(
            objects=list(objects),
            morphisms=[(n, oid[s], oid[t]) for n, s, t in morphisms],
            compose={(mid[g], mid[f]): mid[h] for (g, f), h in compose.items()},
            identity={oid[x]: mid[e] for x, e in identity.items()},
            inverse={mid[f]: mid[g] for f, g in inverse.items()},
            name=name,
        )

    def copy(self) -> "GroupoidData":
        return GroupoidData(
            list(self.objects),
            list(self.morphisms),
            dict(self.compose),
            dict(self.identity),
            dict(self.inverse),
            self.name,
        )


class Groupoid:
    """A validated finite groupoid. Immutable; build with :func:`validate_groupoid`."""

    def __init__(
        self,
        name: str,
        objects: Sequence[str],
        morphisms: Sequence[tuple[str, int, int]],
        table: np.ndarray,
        identities: np.ndarray,
        inverses: np.ndarray,
    ):
        self.name = name
        self.objects = tuple(ObjectRef(i, o) for i, o in enumerate(objects))
        self.morphisms = tuple(
            MorphismRef(i, n, s, t) for i, (n, s, t) in enumerate(morphisms)
        )
        self.source = np.array([m[1] for m in morphisms], dtype=np.int64)
        self.target = np.array([m[2] for m in morphisms], dtype=np.int64)
        self._out, self._slot = _out_slots(len(objects), self.source)
        self._table = table
        self.identities = identities
        self.inverses = inverses
        for a in (self.source, self.target, self._slot, table, identities, inverses):
            a.flags.writeable = False
        self._obj_index = {o.name: o.id for o in self.objects}
        self._mor_index = {m.name: m.id for m in self.morphisms}
        self._homs: dict[tuple[int, int], list[int]] | None = None

    # -- lookups ---------------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def object(self, ref: Ref) -> int:
        if isinstance(ref, str):
            try:
                return self._obj_index[ref]
            except KeyError:
                raise UnknownRef(f"no object {ref!r} in {self.name}") from None
        if not 0 <= ref < len(self.objects):
            raise UnknownRef(f"no object #{ref} in {self.name}")
        return int(ref)

    def morphism(self, ref: Ref) -> int:
        if isinstance(ref, str):
            try:
                return self._mor_index[ref]
            except KeyError:
                raise UnknownRef(f"no morphism {ref!r} in {self.name}") from None
        if not 0 <= ref < len(self.morphisms):
            raise UnknownRef(f"no morphism #{ref} in {self.name}")
        return int(ref)

    def mname(self, ref: Ref) -> str:
        return self.morphisms[self.morphism(ref)].name

    def oname(self, ref: Ref) -> str:
        return self.objects[self.object(ref)].name

    def src(self, f: Ref) -> int:
        return int(self.source[self.morphism(f)])

    def tgt(self, f: Ref) -> int:
        return int(self.target[self.morphism(f)])

    # -- structure -------------------------------------------------------

    def compose(self, g: Ref, f: Ref) -> int:
        """``g . f``: apply ``f`` then ``g``."""
        g, f = self.morphism(g), self.morphism(f)
        if self.source[g] != self.target[f]:
            raise NotComposable(
                f"{self.mname(g)} . {self.mname(f)}: source of "
                f"{self.mname(g)} is not the target of {self.mname(f)}"
            )
        return int(self._table[f, self._slot[g]])

    def compose_path(self, *ms: Ref) -> int:
        """``compose_path(h, g, f) == h . g . f``."""
        out = self.morphism(ms[-1])
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def inverse(self, f: Ref) -> int:
        return int(self.inverses[self.morphism(f)])

    def identity(self, x: Ref) -> int:
        return int(self.identities[self.object(x)])

    def is_identity(self, f: Ref) -> bool:
        f = self.morphism(f)
        return int(self.identities[self.source[f]]) == f

    def out_of(self, x: Ref) -> list[int]:
        """Morphisms with source ``x``, ascending id."""
        return [int(i) for i in self._out[self.object(x)]]

    def into(self, x: Ref) -> list[int]:
        """Morphisms with target ``x``, ascending id."""
        x = self.object(x)
        return [int(i) for i in np.flatnonzero(self.target == x)]

    def hom(self, x: Ref, y: Ref) -> list[int]:
        """Morphisms ``x -> y``, ascending id."""
        if self._homs is None:
            homs: dict[tuple[int, int], list[int]] = {}
            for m in self.morphisms:
                homs.setdefault((m.source, m.target), []).append(m.id)
            self._homs = homs
        return list(self._homs.get((self.object(x), self.object(y)), ()))

    def composable_pairs(self) -> Iterable[tuple[int, int]]:
        """All ``(g, f)`` with ``source(g) == target(f)``, ordered by ``(f, g)``."""
        for f in range(self.n_morphisms):
            for g in self._out[self.target[f]]:
                yield int(g), f

    def pair_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(g, f, g.f)`` for every composable pair, as parallel arrays."""
        counts = np.array([len(self._out[t]) for t in self.target], dtype=np.int64)
        f = np.repeat(np.arange(self.n_morphisms), counts)
        k = np.arange(len(f)) - np.repeat(np.cumsum(counts) - counts, counts)
        g = np.concatenate([self._out[t] for t in self.target]) if len(f) else f
        return g.astype(np.int64), f, self._table[f, k]

    def compose_arrays(self, g: np.ndarray, f: np.ndarray) -> np.ndarray:
        """Vectorized ``g . f``; caller guarantees composability."""
        return self._table[f, self._slot[g]]

    def components(self) -> list[list[int]]:
        """Object ids of each connected component, ordered by smallest member."""
        parent = list(range(self.n_objects))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in zip(self.source.tolist(), self.target.tolist()):
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for x in range(self.n_objects):
            groups.setdefault(find(x), []).append(x)
        return [groups[k] for k in sorted(groups)]

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def to_data(self) -> GroupoidData:
        return GroupoidData(
            objects=[o.name for o in self.objects],
            morphisms=[(m.name, m.source, m.target) for m in self.morphisms],
            compose={(g, f): int(self._table[f, self._slot[g]]) for g, f in self.composable_pairs()},
            identity={x: int(e) for x, e in enumerate(self.identities)},
            inverse={f: int(g) for f, g in enumerate(self.inverses)},
            name=self.name,
        )

    def _key(self):
        return (
            tuple(o.name for o in self.objects),
            tuple((m.name, m.source, m.target) for m in self.morphisms),
            self._table.tobytes(),
            self.identities.tobytes(),
            self.inverses.tobytes(),
        )

    def __eq__(self, other: object) -> bool:
        # the groupoid's own label is not part of its structure
        if not isinstance(other, Groupoid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Groupoid({self.name!r}, objects={self.n_objects}, morphisms={self.n_morphisms})"


def _out_slots(n: int, source: np.ndarray) -> tuple[list[np.ndarray], np.ndarray]:
    order = np.argsort(source, kind="stable")
    counts = np.bincount(source, minlength=n) if len(source) else np.zeros(n, dtype=np.int64)
    starts = np.concatenate([[0], np.cumsum(counts)[:-1]]) if n else np.zeros(0, dtype=np.int64)
    out = [order[starts[x] : starts[x] + counts[x]] for x in range(n)]
    slot = np.empty(len(source), dtype=np.int64)
    for ids in out:
        slot[ids] = np.arange(len(ids))
    return out, slot


# -- validation ----------------------------------------------------------


def validate_groupoid(data: GroupoidData) -> Groupoid:
    """Check every groupoid axiom; raise :class:`ValidationError` listing all failures."""
    g, violations = _check(data)
    if violations:
        raise ValidationError(violations)
    return g


def groupoid_violations(data: GroupoidData) -> list[Violation]:
    return _check(data)[1]


def _check(data: GroupoidData) -> tuple[Groupoid | None, list[Violation]]:
    v: list[Violation] = []
    n, m = len(data.objects), len(data.morphisms)
    if n == 0:
        v.append(Violation("Empty", (data.name,), "a groupoid needs at least one object"))
    for names in (data.objects, [x[0] for x in data.morphisms]):
        seen = set()
        for nm in names:
            if nm in seen:
                v.append(Violation("DuplicateName", (nm,)))
            seen.add(nm)
    for nm, s, t in data.morphisms:
        if not (0 <= s < n and 0 <= t < n):
            v.append(Violation("BadEndpoints", (nm,), "endpoint is not an object"))
    if v:
        return None, v

    mname = [x[0] for x in data.morphisms]
    oname = data.objects
    source = np.array([x[1] for x in data.morphisms], dtype=np.int64)
    target = np.array([x[2] for x in data.morphisms], dtype=np.int64)
    out, slot = _out_slots(n, source)
    width = max((len(o) for o in out), default=0)
    table = np.full((m, max(width, 1)), -1, dtype=np.int64)
    flagged = np.zeros_like(table, dtype=bool)

    for (gi, fi), h in sorted(data.compose.items()):
        if not (0 <= gi < m and 0 <= fi < m and 0 <= h < m):
            v.append(Violation("BadEndpoints", tuple(mname[i] if 0 <= i < m else f"#{i}" for i in (gi, fi, h)),
                               "composition refers to an unknown morphism"))
            continue
        if source[gi] != target[fi]:
            v.append(Violation("BadEndpoints", (mname[gi], mname[fi]), "pair is not composable"))
            continue
        table[fi, slot[gi]] = h
    v += _law_violations(mname, oname, source, target, out, slot, table, flagged,
                         _lookup(data.identity, n), _lookup(data.inverse, m))
    if v:
        return None, v
    g = Groupoid(data.name, list(data.objects), list(data.morphisms), table,
                 _lookup(data.identity, n), _lookup(data.inverse, m))
    return g, []


def _lookup(d: Mapping[int, int], size: int) -> np.ndarray:
    arr = np.full(size, -1, dtype=np.int64)
    for k, val in d.items():
        if 0 <= k < size:
            arr[k] = val if isinstance(val, (int, np.integer)) else -1
    return arr


def groupoid_table_violations(G: Groupoid) -> list[Violation]:
    """Re-check every law directly on a built groupoid's table."""
    return _law_violations(
        [x.name for x in G.morphisms], [o.name for o in G.objects], G.source, G.target,
        G._out, G._slot, G._table.copy(), np.zeros(G._table.shape, dtype=bool),
        G.identities.copy(), G.inverses.copy(),
    )


def _law_violations(mname, oname, source, target, out, slot, table, flagged, identities, inverses) -> list[Violation]:
    """Endpoint, totality, identity, inverse and associativity laws, vectorized.

    ``table`` is modified: entries with wrong endpoints are cleared so later
    laws skip them.
    """
    v: list[Violation] = []
    n, m = len(oname), len(mname)
    width = table.shape[1]
    outpad = np.full((n, width), -1, dtype=np.int64)
    for x, ids in enumerate(out):
        outpad[x, : len(ids)] = ids
    g_of = outpad[target] if m else np.zeros((0, width), dtype=np.int64)
    present = table >= 0
    hc = np.where(present, table, 0)
    f_ix = np.arange(m)[:, None]
    in_range = hc < m
    hc = np.where(in_range, hc, 0)
    gc = np.where(g_of >= 0, g_of, 0)
    bad_end = present & (~in_range | (source[hc] != source[f_ix]) | (target[hc] != target[gc]) | (g_of < 0))
    for fi, k in zip(*np.nonzero(bad_end)):
        h = int(table[fi, k])
        hn = mname[h] if 0 <= h < m else f"#{h}"
        gn = mname[g_of[fi, k]] if g_of[fi, k] >= 0 else "?"
        v.append(Violation("BadEndpoints", (gn, mname[fi], hn), f"{hn} does not run {oname[source[fi]]} -> {oname[target[gc[fi, k]]]}"))
    flagged = flagged | bad_end
    table[bad_end] = -1
    for fi, k in zip(*np.nonzero((g_of >= 0) & (table < 0) & ~flagged)):
        v.append(Violation("MissingComposite", (mname[g_of[fi, k]], mname[fi])))

    idv = identities.copy()
    for x in range(n):
        e = int(identities[x])
        if e < 0:
            v.append(Violation("IdentityViolation", (oname[x],), "no identity assigned"))
        elif e >= m or source[e] != x or target[e] != x:
            v.append(Violation("IdentityViolation", (oname[x],), "identity is not a loop at the object"))
            idv[x] = -1

    def comp(gs, fs):
        ok = (gs >= 0) & (fs >= 0)
        out_ = np.full(len(gs), -1, dtype=np.int64)
        out_[ok] = table[fs[ok], slot[gs[ok]]]
        return out_

    fs = np.arange(m)
    hi, lo = idv[target], idv[source]
    left = comp(hi, fs)
    for fi in np.flatnonzero((left >= 0) & (left != fs)):
        v.append(Violation("IdentityViolation", (mname[hi[fi]], mname[fi]), "id . f != f"))
    right = comp(fs, lo)
    for fi in np.flatnonzero((right >= 0) & (right != fs)):
        v.append(Violation("IdentityViolation", (mname[fi], mname[lo[fi]]), "f . id != f"))

    inv = inverses.copy()
    for fi in range(m):
        gi = int(inverses[fi])
        if gi < 0:
            v.append(Violation("InverseViolation", (mname[fi],), "no inverse assigned"))
        elif gi >= m or source[gi] != target[fi] or target[gi] != source[fi]:
            v.append(Violation("InverseViolation", (mname[fi],), "inverse has the wrong endpoints"))
            inv[fi] = -1
    after = comp(inv, fs)  # inv(f) . f
    bad = (after >= 0) & (lo >= 0) & (after != lo)
    for fi in np.flatnonzero(bad):
        v.append(Violation("InverseViolation", (mname[inv[fi]], mname[fi]), "inv(f) . f is not an identity"))
    before = comp(fs, inv)  # f . inv(f)
    bad = (before >= 0) & (hi >= 0) & (before != hi)
    for fi in np.flatnonzero(bad):
        v.append(Violation("InverseViolation", (mname[fi], mname[inv[fi]]), "f . inv(f) is not an identity"))

    for h, gi, fi in _associativity_failures(table, out, slot, target, n):
        v.append(Violation("AssociativityViolation", (mname[h], mname[gi], mname[fi])))
    return v


def _associativity_failures(table, out, slot, target, n, block: int = 1 << 18):
    """Yield ``(h, g, f)`` with ``h.(g.f) != (h.g).f``, skipping missing entries."""
    m, width = table.shape
    outpad = np.full((n, width), -1, dtype=np.int64)
    for x, ids in enumerate(out):
        outpad[x, : len(ids)] = ids
    rows = max(1, block // max(width * width, 1))
    for lo in range(0, m, rows):
        f = np.arange(lo, min(m, lo + rows))
        g = outpad[target[f]]  # (b, D): g ranges over out(t(f)) by slot
        gf = table[f]
        ok2 = (g >= 0) & (gf >= 0)
        gc = np.where(g >= 0, g, 0)
        gfc = np.where(gf >= 0, gf, 0)
        h = outpad[target[gc]]  # (b, D, D)
        hg = table[gc]  # h.g, h indexed by slot k
        left = table[gfc]  # h.(g.f), same h since t(g.f) = t(g)
        hgc = np.where(hg >= 0, hg, 0)
        right = table[f[:, None, None], slot[hgc]]
        ok = ok2[:, :, None] & (h >= 0) & (hg >= 0) & (left >= 0) & (right >= 0)
        bad = ok & (left != right)
        for i, j, k in zip(*np.nonzero(bad)):
            yield int(h[i, j, k]), int(g[i, j]), int(f[i])


def from_tables(
    name: str,
    objects: Sequence[str],
    morphisms: Sequence[tuple[str, int, int]],
    compose,
    identities: Sequence[int],
    inverses: Sequence[int],
    validate: bool = True,
) -> Groupoid:
    """Assemble a groupoid from a ``compose(g, f) -> int`` callable.

    Used by derived constructions; ``validate=False`` skips the axiom check
    when the caller already guarantees the laws.
    """
    source = np.array([x[1] for x in morphisms], dtype=np.int64)
    out, slot = _out_slots(len(objects), source)
    target = np.array([x[2] for x in morphisms], dtype=np.int64)
    width = max((len(o) for o in out), default=0)
    table = np.full((len(morphisms), max(width, 1)), -1, dtype=np.int64)
    for fi in range(len(morphisms)):
        for gi in out[target[fi]]:
            table[fi, slot[gi]] = compose(int(gi), fi)
    return from_array_table(name, objects, morphisms, table, identities, inverses, validate)


def from_array_table(name, objects, morphisms, table, identities, inverses, validate=True) -> Groupoid:
    """Like :func:`from_tables` but with the slot-indexed table precomputed."""
    g = Groupoid(
        name,
        list(objects),
        list(morphisms),
        np.asarray(table, dtype=np.int64),
        np.asarray(identities, dtype=np.int64),
        np.asarray(inverses, dtype=np.int64),
    )
    if validate:
        v = groupoid_table_violations(g)
        if v:
            raise ValidationError(v)
    return g


def check_size(n_morphisms: int, what: str, limit: int | None = None) -> None:
    limit = size_limit() if limit is None else limit
    if n_morphisms > limit:
        raise SizeLimitError(f"{what} would have {n_morphisms} morphisms (limit {limit}; set GDSL_SIZE_LIMIT to override)")


# -- elementary operations -----------------------------------------------


def compose(G: Groupoid, g: Ref, f: Ref) -> int:
    return G.compose(g, f)


def inverse(G: Groupoid, f: Ref) -> int:
    return G.inverse(f)


def identity(G: Groupoid, x: Ref) -> int:
    return G.identity(x)


@dataclass(frozen=True)
class Component:
    """A connected component as a groupoid, with ids back into the parent."""

    groupoid: Groupoid
    object_ids: tuple[int, ...]
    morphism_ids: tuple[int, ...]

    def parent_object(self, x: int) -> int:
        return self.object_ids[x]

    def parent_morphism(self, f: int) -> int:
        return self.morphism_ids[f]


def full_subgroupoid(G: Groupoid, object_ids: Iterable[int], name: str | None = None) -> Component:
    """Full subgroupoid on the given objects, ids renumbered in parent order."""
    objs = sorted({G.object(x) for x in object_ids})
    onew = {x: i for i, x in enumerate(objs)}
    mors = [f.id for f in G.morphisms if f.source in onew and f.target in onew]
    mnew = {f: i for i, f in enumerate(mors)}
    sub = from_tables(
        name or G.name,
        [G.objects[x].name for x in objs],
        [(G.morphisms[f].name, onew[G.morphisms[f].source], onew[G.morphisms[f].target]) for f in mors],
        lambda g, f: mnew[G.compose(mors[g], mors[f])],
        [mnew[G.identity(x)] for x in objs],
        [mnew[G.inverse(f)] for f in mors],
        validate=False,
    )
    return Component(sub, tuple(objs), tuple(mors))


def connected_component(G: Groupoid, x: Ref) -> Component:
    """Full subgroupoid on every object ``Y`` with a morphism ``Y -> x``."""
    x = G.object(x)
    objs = {int(s) for s in G.source[G.target == x]}
    return full_subgroupoid(G, objs, name=f"{G.name}_{G.objects[x].name}")


# -- wide subgroupoids ---------------------------------------------------


@dataclass(frozen=True)
class SubgroupoidSelection:
    """A wide subgroupoid, as a set of parent morphism ids."""

    parent: Groupoid
    morphisms: frozenset[int]
    name: str = "H"

    def __contains__(self, f: object) -> bool:
        return f in self.morphisms

    def sorted(self) -> list[int]:
        return sorted(self.morphisms)

    def names(self) -> list[str]:
        return [self.parent.mname(f) for f in self.sorted()]

    def as_groupoid(self) -> Component:
        mors = self.sorted()
        mnew = {f: i for i, f in enumerate(mors)}
        G = self.parent
        sub = from_tables(
            self.name,
            [o.name for o in G.objects],
            [(G.morphisms[f].name, G.morphisms[f].source, G.morphisms[f].target) for f in mors],
            lambda g, f: mnew[G.compose(mors[g], mors[f])],
            [mnew[G.identity(x)] for x in range(G.n_objects)],
            [mnew[G.inverse(f)] for f in mors],
            validate=False,
        )
        return Component(sub, tuple(range(G.n_objects)), tuple(mors))


def subgroupoid_violations(G: Groupoid, morphisms: Iterable[Ref]) -> list[Violation]:
    S = {G.morphism(f) for f in morphisms}
    v = []
    for x in range(G.n_objects):
        if G.identity(x) not in S:
            v.append(Violation("NotWide", (G.objects[x].name,)))
    for f in sorted(S):
        if G.inverse(f) not in S:
            v.append(Violation("NotClosedUnderInverse", (G.mname(f),)))
    for f in sorted(S):
        for g in G.out_of(G.tgt(f)):
            if g in S and G.compose(g, f) not in S:
                v.append(Violation("NotClosedUnderComposition", (G.mname(g), G.mname(f))))
    return v


def is_wide_closed_subgroupoid(G: Groupoid, morphisms: Iterable[Ref], name: str = "H") -> SubgroupoidSelection:
    """Return the selection if it is a wide subgroupoid, else raise with every violation."""
    morphisms = list(morphisms)
    v = subgroupoid_violations(G, morphisms)
    if v:
        raise ValidationError(v)
    return SubgroupoidSelection(G, frozenset(G.morphism(f) for f in morphisms), name)


def closure(G: Groupoid, generators: Iterable[Ref], name: str = "H") -> SubgroupoidSelection:
    """Smallest wide subgroupoid containing ``generators``."""
    S = set(int(e) for e in G.identities)
    frontier = [G.morphism(f) for f in generators]
    while frontier:
        f = frontier.pop()
        if f in S:
            continue
        S.add(f)
        frontier.append(G.inverse(f))
        for g in list(S):
            if G.src(g) == G.tgt(f):
                frontier.append(G.compose(g, f))
            if G.src(f) == G.tgt(g):
                frontier.append(G.compose(f, g))
    return SubgroupoidSelection(G, frozenset(S), name)


def identities_only(G: Groupoid, name: str = "Id") -> SubgroupoidSelection:
    return SubgroupoidSelection(G, frozenset(int(e) for e in G.identities), name)


def whole(G: Groupoid, name: str = "All") -> SubgroupoidSelection:
    return SubgroupoidSelection(G, frozenset(range(G.n_morphisms)), name)
