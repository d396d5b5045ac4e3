"""The ``.gd`` definition language for groupoids, functors and subgroupoids.

Line oriented; ``#`` starts a comment; a newline or ``;`` ends a statement::

    groupoid Z2 {
      objects: o
      morphism e : o -> o
      morphism a : o -> o
      identity o = e
      compose a . a = e
    }

    functor F : Z2 -> Z2 {
      object o => o
      morphism a => e
    }

    subgroupoid H of Z2 {
      morphisms: a
    }

``compose g . f = h`` means ``h = g . f``: apply ``f`` first, then ``g``.

Conveniences, all resolved before the groupoid axioms are checked:

* ``identity X = e`` names the identity of ``X``; without it a declared
  morphism ``id_X`` is used, and failing that ``id_X : X -> X`` is added
  (after the declared morphisms, in object order).
* composites with an identity on either side may be omitted.
* ``inverse f = g`` may be omitted when the composition table determines it.
* a subgroupoid always contains every identity.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .functor import GroupoidFunctor, validate_functor
from .groupoid import (
    Groupoid,
    GroupoidData,
    SubgroupoidSelection,
    ValidationError,
    Violation,
    subgroupoid_violations,
    validate_groupoid,
)

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<punct>->|=>|[{}:,;.=])")
KEYWORDS = {"groupoid", "functor", "subgroupoid", "objects", "morphism", "morphisms", "compose",
            "inverse", "identity", "object", "of"}


@dataclass(frozen=True)
class SourceSpan:
    file: str
    line: int  # 1-based
    column: int  # 1-based
    length: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    span: SourceSpan

    def __str__(self) -> str:
        return f"{self.span}: {self.kind}: {self.message}"


def _message(v) -> str:
    """A violation without its kind, which the diagnostic already shows."""
    s = f"{', '.join(v.witnesses)}"
    return f"{s}: {v.detail}" if v.detail else s


class ParseError(Exception):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("\n".join(str(d) for d in diagnostics))

    @property
    def kinds(self) -> list[str]:
        return [d.kind for d in self.diagnostics]


@dataclass
class Document:
    groupoids: dict[str, Groupoid] = field(default_factory=dict)
    functors: dict[str, GroupoidFunctor] = field(default_factory=dict)
    subgroupoids: dict[str, SubgroupoidSelection] = field(default_factory=dict)


@dataclass(frozen=True)
class _Tok:
    kind: str  # ident, punct, nl, eof
    text: str
    span: SourceSpan


def _tokenize(text: str, file: str) -> list[_Tok]:
    toks = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError([Diagnostic("SyntaxError", f"unexpected character {text[pos]!r}", SourceSpan(file, line, col, 1))])
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            toks.append(_Tok("nl", s, SourceSpan(file, line, col, 1)))
            line, col = line + 1, 1
        else:
            if kind in ("ident", "punct"):
                toks.append(_Tok(kind, s, SourceSpan(file, line, col, len(s))))
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", SourceSpan(file, line, col, 0)))
    return toks


# -- syntax ----------------------------------------------------------------


@dataclass
class _Name:
    text: str
    span: SourceSpan


@dataclass
class _GroupoidDecl:
    name: _Name
    objects: list[_Name] = field(default_factory=list)
    morphisms: list[tuple[_Name, _Name, _Name]] = field(default_factory=list)
    compose: list[tuple[_Name, _Name, _Name]] = field(default_factory=list)
    inverse: list[tuple[_Name, _Name]] = field(default_factory=list)
    identity: list[tuple[_Name, _Name]] = field(default_factory=list)


@dataclass
class _FunctorDecl:
    name: _Name
    source: _Name
    target: _Name
    objects: list[tuple[_Name, _Name]] = field(default_factory=list)
    morphisms: list[tuple[_Name, _Name]] = field(default_factory=list)


@dataclass
class _SubDecl:
    name: _Name
    parent: _Name
    morphisms: list[_Name] = field(default_factory=list)


class _Parser:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: str):
        t = self.tok
        found = {"nl": "end of line", "eof": "end of file"}.get(t.kind, repr(t.text))
        raise ParseError([Diagnostic("SyntaxError", f"expected {expected}, found {found}", t.span)])

    def skip_breaks(self) -> None:
        while self.tok.kind == "nl" or (self.tok.kind == "punct" and self.tok.text == ";"):
            self.i += 1

    def punct(self, p: str) -> _Tok:
        if self.tok.kind == "punct" and self.tok.text == p:
            t = self.tok
            self.i += 1
            return t
        self.fail(f"'{p}'")

    def is_punct(self, p: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == p

    def keyword(self, kw: str) -> None:
        if self.tok.kind == "ident" and self.tok.text == kw:
            self.i += 1
            return
        self.fail(f"'{kw}'")

    def ident(self, what: str = "identifier") -> _Name:
        if self.tok.kind == "ident":
            t = self.tok
            self.i += 1
            return _Name(t.text, t.span)
        self.fail(what)

    def end_statement(self) -> None:
        if self.tok.kind == "nl" or self.is_punct(";"):
            self.skip_breaks()
        elif not self.is_punct("}"):
            self.fail("end of statement")

    def name_list(self) -> list[_Name]:
        out = []
        if self.tok.kind != "ident":
            return out
        out.append(self.ident())
        while self.is_punct(","):
            self.i += 1
            out.append(self.ident())
        return out

    def document(self) -> list:
        decls = []
        self.skip_breaks()
        while self.tok.kind != "eof":
            if self.tok.kind == "ident" and self.tok.text == "groupoid":
                decls.append(self.groupoid())
            elif self.tok.kind == "ident" and self.tok.text == "functor":
                decls.append(self.functor())
            elif self.tok.kind == "ident" and self.tok.text == "subgroupoid":
                decls.append(self.subgroupoid())
            else:
                self.fail("'groupoid', 'functor' or 'subgroupoid'")
            self.skip_breaks()
        return decls

    def block(self, statement) -> None:
        self.punct("{")
        self.skip_breaks()
        while not self.is_punct("}"):
            if self.tok.kind == "eof":
                self.fail("'}'")
            statement()
            self.end_statement()
        self.punct("}")
        if self.tok.kind not in ("nl", "eof") and not self.is_punct(";"):
            self.fail("end of line")

    def groupoid(self) -> _GroupoidDecl:
        self.keyword("groupoid")
        d = _GroupoidDecl(self.ident("groupoid name"))

        def statement():
            t = self.tok
            if t.kind != "ident":
                self.fail("a groupoid statement")
            if t.text == "objects":
                self.i += 1
                self.punct(":")
                names = self.name_list()
                if not names:
                    self.fail("object name")
                d.objects += names
            elif t.text == "morphism":
                self.i += 1
                n = self.ident("morphism name")
                self.punct(":")
                s = self.ident("object name")
                self.punct("->")
                d.morphisms.append((n, s, self.ident("object name")))
            elif t.text == "compose":
                self.i += 1
                g = self.ident("morphism name")
                self.punct(".")
                f = self.ident("morphism name")
                self.punct("=")
                d.compose.append((g, f, self.ident("morphism name")))
            elif t.text == "inverse":
                self.i += 1
                f = self.ident("morphism name")
                self.punct("=")
                d.inverse.append((f, self.ident("morphism name")))
            elif t.text == "identity":
                self.i += 1
                x = self.ident("object name")
                self.punct("=")
                d.identity.append((x, self.ident("morphism name")))
            else:
                self.fail("'objects', 'morphism', 'compose', 'inverse' or 'identity'")

        self.block(statement)
        return d

    def functor(self) -> _FunctorDecl:
        self.keyword("functor")
        name = self.ident("functor name")
        self.punct(":")
        src = self.ident("groupoid name")
        self.punct("->")
        d = _FunctorDecl(name, src, self.ident("groupoid name"))

        def statement():
            t = self.tok
            if t.kind == "ident" and t.text in ("object", "morphism"):
                self.i += 1
                a = self.ident()
                self.punct("=>")
                (d.objects if t.text == "object" else d.morphisms).append((a, self.ident()))
            else:
                self.fail("'object' or 'morphism'")

        self.block(statement)
        return d

    def subgroupoid(self) -> _SubDecl:
        self.keyword("subgroupoid")
        name = self.ident("subgroupoid name")
        self.keyword("of")
        d = _SubDecl(name, self.ident("groupoid name"))

        def statement():
            if self.tok.kind == "ident" and self.tok.text == "morphisms":
                self.i += 1
                self.punct(":")
                d.morphisms += self.name_list()
            else:
                self.fail("'morphisms'")

        self.block(statement)
        return d


# -- semantics -------------------------------------------------------------


def parse(text: str, file: str = "<input>") -> Document:
    """Parse and validate a document; raise :class:`ParseError` with spanned diagnostics."""
    decls = _Parser(_tokenize(text, file)).document()
    doc = Document()
    diags: list[Diagnostic] = []
    header_spans: dict[str, SourceSpan] = {}
    for d in decls:
        kind_map = {_GroupoidDecl: doc.groupoids, _FunctorDecl: doc.functors, _SubDecl: doc.subgroupoids}[type(d)]
        key = f"{type(d).__name__}:{d.name.text}"
        if key in header_spans:
            diags.append(Diagnostic("DuplicateName", f"{d.name.text} is already declared", d.name.span))
            continue
        header_spans[key] = d.name.span
        try:
            if isinstance(d, _GroupoidDecl):
                kind_map[d.name.text] = _build_groupoid(d)
            elif isinstance(d, _FunctorDecl):
                kind_map[d.name.text] = _build_functor(d, doc)
            else:
                kind_map[d.name.text] = _build_sub(d, doc)
        except ParseError as exc:
            diags += exc.diagnostics
    if diags:
        raise ParseError(diags)
    return doc


def parse_file(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), str(path))


def _dup_check(names: list[_Name], what: str, diags: list[Diagnostic]) -> dict[str, _Name]:
    seen: dict[str, _Name] = {}
    for n in names:
        if n.text in seen:
            diags.append(Diagnostic("DuplicateName", f"{what} {n.text} is already declared", n.span))
        else:
            seen[n.text] = n
    return seen


def _build_groupoid(d: _GroupoidDecl) -> Groupoid:
    diags: list[Diagnostic] = []
    objs = _dup_check(d.objects, "object", diags)
    if not d.objects:
        diags.append(Diagnostic("SyntaxError", "a groupoid needs an 'objects:' line with at least one object", d.name.span))
    mors = _dup_check([m[0] for m in d.morphisms], "morphism", diags)
    mdecl = {m[0].text: m for m in d.morphisms}

    def need(n: _Name, table: dict, what: str) -> bool:
        if n.text not in table:
            diags.append(Diagnostic("UnresolvedReference", f"undeclared {what} {n.text}", n.span))
            return False
        return True

    for n, s, t in d.morphisms:
        need(s, objs, "object")
        need(t, objs, "object")
    if diags:
        raise ParseError(diags)

    onames = [o.text for o in d.objects]
    mlist = [(n.text, s.text, t.text) for n, s, t in d.morphisms]
    identity: dict[str, str] = {}
    spans: dict[object, SourceSpan] = {n.text: n.span for n in d.objects}
    spans.update({n.text: n.span for n, _, _ in d.morphisms})
    for x, e in d.identity:
        if need(x, objs, "object") and need(e, mdecl, "morphism"):
            if x.text in identity:
                diags.append(Diagnostic("DuplicateName", f"identity of {x.text} given twice", x.span))
            identity[x.text] = e.text
    for x in onames:
        if x in identity:
            continue
        idn = f"id_{x}"
        if idn not in mdecl:
            mlist.append((idn, x, x))
            spans[idn] = objs[x].span
        identity[x] = idn
    all_m = {m[0]: m for m in mlist}

    compose: dict[tuple[str, str], str] = {}
    for g, f, h in d.compose:
        if need(g, all_m, "morphism") & need(f, all_m, "morphism") & need(h, all_m, "morphism"):
            if (g.text, f.text) in compose:
                diags.append(Diagnostic("DuplicateName", f"composite {g.text} . {f.text} given twice", g.span))
            compose[(g.text, f.text)] = h.text
            spans[(g.text, f.text)] = g.span
    inverse: dict[str, str] = {}
    for f, g in d.inverse:
        if need(f, all_m, "morphism") & need(g, all_m, "morphism"):
            if f.text in inverse:
                diags.append(Diagnostic("DuplicateName", f"inverse of {f.text} given twice", f.span))
            inverse[f.text] = g.text
            spans[("inv", f.text)] = f.span
    if diags:
        raise ParseError(diags)

    ids = set(identity.values())
    for n, s, t in mlist:
        # identity composites
        compose.setdefault((identity[t], n), n)
        compose.setdefault((n, identity[s]), n)
    for n in ids:
        inverse.setdefault(n, n)
    for n, s, t in mlist:
        if n in inverse:
            continue
        cands = [g for g, gs, gt in mlist if gs == t and gt == s
                 and compose.get((g, n)) == identity[s] and compose.get((n, g)) == identity[t]]
        if len(cands) == 1:
            inverse[n] = cands[0]

    data = GroupoidData.from_names(onames, mlist, compose, identity, inverse, name=d.name.text)
    try:
        return validate_groupoid(data)
    except ValidationError as exc:
        raise ParseError([_locate(v, spans, d.name.span) for v in exc.violations]) from None


def _locate(v: Violation, spans: dict, default: SourceSpan) -> Diagnostic:
    w = v.witnesses
    keys: list[object] = []
    if v.kind in ("MissingComposite", "BadEndpoints") and len(w) >= 2:
        keys.append((w[0], w[1]))
    elif v.kind == "AssociativityViolation":
        keys += [(w[1], w[2]), (w[0], w[1])]
    elif v.kind == "InverseViolation":
        keys += [("inv", w[-1]), ("inv", w[0])]
        if len(w) == 2:
            keys.append((w[0], w[1]))
    elif v.kind == "IdentityViolation" and len(w) == 2:
        keys.append((w[0], w[1]))
    keys += list(w)
    for k in keys:
        if k in spans:
            return Diagnostic(v.kind, _message(v), spans[k])
    return Diagnostic(v.kind, _message(v), default)


def _build_functor(d: _FunctorDecl, doc: Document) -> GroupoidFunctor:
    diags: list[Diagnostic] = []
    G = doc.groupoids.get(d.source.text)
    H = doc.groupoids.get(d.target.text)
    for n, g in ((d.source, G), (d.target, H)):
        if g is None:
            diags.append(Diagnostic("UnresolvedReference", f"undeclared groupoid {n.text}", n.span))
    if diags:
        raise ParseError(diags)
    omap: dict[str, str] = {}
    mmap: dict[str, str] = {}
    spans: dict[str, SourceSpan] = {}
    for pairs, dom, cod, out, what in ((d.objects, G._obj_index, H._obj_index, omap, "object"),
                                       (d.morphisms, G._mor_index, H._mor_index, mmap, "morphism")):
        for a, b in pairs:
            ok = True
            for n, table, owner in ((a, dom, G), (b, cod, H)):
                if n.text not in table:
                    diags.append(Diagnostic("UnresolvedReference", f"{owner.name} has no {what} {n.text}", n.span))
                    ok = False
            if ok:
                if a.text in out:
                    diags.append(Diagnostic("DuplicateName", f"{what} {a.text} mapped twice", a.span))
                out[a.text] = b.text
                spans[a.text] = a.span
    # identities map to identities unless stated otherwise
    for x, y in omap.items():
        mmap.setdefault(G.mname(G.identity(x)), H.mname(H.identity(y)))
    if diags:
        raise ParseError(diags)
    try:
        return validate_functor(G, H, omap, mmap, name=d.name.text)
    except ValidationError as exc:
        out = []
        for v in exc.violations:
            span = next((spans[w] for w in v.witnesses if w in spans), d.name.span)
            out.append(Diagnostic(v.kind, _message(v), span))
        raise ParseError(out) from None


def _build_sub(d: _SubDecl, doc: Document) -> SubgroupoidSelection:
    G = doc.groupoids.get(d.parent.text)
    if G is None:
        raise ParseError([Diagnostic("UnresolvedReference", f"undeclared groupoid {d.parent.text}", d.parent.span)])
    diags = []
    chosen = set(int(e) for e in G.identities)
    spans = {}
    for n in d.morphisms:
        if n.text not in G._mor_index:
            diags.append(Diagnostic("UnresolvedReference", f"{G.name} has no morphism {n.text}", n.span))
        else:
            chosen.add(G.morphism(n.text))
            spans[n.text] = n.span
    if diags:
        raise ParseError(diags)
    v = subgroupoid_violations(G, chosen)
    if v:
        raise ParseError([
            Diagnostic(x.kind, _message(x), next((spans[w] for w in x.witnesses if w in spans), d.name.span)) for x in v
        ])
    return SubgroupoidSelection(G, frozenset(chosen), d.name.text)


# -- serialization -----------------------------------------------------------


def _ident(name: str) -> str:
    if not IDENT.fullmatch(name) or name in KEYWORDS:
        raise ValueError(f"{name!r} cannot be written as a .gd identifier")
    return name


def serialize_groupoid(G: Groupoid) -> str:
    lines = [f"groupoid {_ident(G.name)} {{", "  objects: " + ", ".join(_ident(o.name) for o in G.objects)]
    for m in G.morphisms:
        lines.append(f"  morphism {_ident(m.name)} : {G.oname(m.source)} -> {G.oname(m.target)}")
    for x in G.objects:
        e = G.mname(G.identity(x.id))
        if e != f"id_{x.name}":
            lines.append(f"  identity {x.name} = {e}")
    for g, f in G.composable_pairs():
        if not (G.is_identity(g) or G.is_identity(f)):
            lines.append(f"  compose {G.mname(g)} . {G.mname(f)} = {G.mname(G.compose(g, f))}")
    for f in range(G.n_morphisms):
        if not G.is_identity(f):
            lines.append(f"  inverse {G.mname(f)} = {G.mname(G.inverse(f))}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_functor(F: GroupoidFunctor) -> str:
    G, H = F.source, F.target
    lines = [f"functor {_ident(F.name)} : {G.name} -> {H.name} {{"]
    for x in range(G.n_objects):
        lines.append(f"  object {G.oname(x)} => {H.oname(F.obj(x))}")
    for f in range(G.n_morphisms):
        lines.append(f"  morphism {G.mname(f)} => {H.mname(F(f))}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_subgroupoid(S: SubgroupoidSelection) -> str:
    G = S.parent
    names = [G.mname(f) for f in S.sorted() if not G.is_identity(f)]
    return f"subgroupoid {_ident(S.name)} of {G.name} {{\n  morphisms: {', '.join(names)}\n}}\n"


def serialize(doc: Document) -> str:
    """Canonical text; ``parse(serialize(doc)) == doc``."""
    parts = [serialize_groupoid(G) for G in doc.groupoids.values()]
    parts += [serialize_functor(F) for F in doc.functors.values()]
    parts += [serialize_subgroupoid(S) for S in doc.subgroupoids.values()]
    return "\n".join(parts)
