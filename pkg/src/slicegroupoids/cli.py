"""Command-line front end: ``slicegroupoids <verb> <file.gd> [options]``.

Exit codes: 0 success, 1 validation or law failure, 2 usage error,
3 budget or size limit exceeded.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .action import action_groupoid
from .checks import document_suites
from .coset import coset_action_groupoid, sliced_coset_groupoid
from .emit import emit_dot, emit_json, groupoid_json, groupoid_text
from .gdsl import Document, ParseError, parse_file
from .groupoid import GroupoidError, SizeLimitError, UnknownRef, ValidationError, identities_only, whole
from .kernel import induced_functor, kernel_report
from .question import BudgetExceeded, explore_question
from .slice import slice_groupoid

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
BUILTIN_SUBGROUPOIDS = {"identities": identities_only, "whole": whole}


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slicegroupoids", description="Finite groupoid constructions and law checks.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, help: str, *opts: str) -> None:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help=".gd definition file")
        for o in opts:
            if o == "g":
                sp.add_argument("-g", "--groupoid", required=True)
            elif o == "x":
                sp.add_argument("-x", "--object", required=True)
            elif o == "f":
                sp.add_argument("-f", "--functor", required=True)
            elif o == "s":
                sp.add_argument("-s", "--subgroupoid", required=True)
            elif o == "budget":
                sp.add_argument("--budget", type=int, default=10_000)
        sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
        sp.add_argument("--out", help="write output here instead of standard output")

    verb("validate", "parse and validate every declaration")
    verb("slice", "slice groupoid G/X", "g", "x")
    verb("kernel", "kernel, image and preimage partition of F_X", "f", "x")
    verb("action", "action groupoid G//G", "g")
    verb("coset", "coset-space action groupoid (H:G)//G", "g", "s")
    verb("sliced-coset", "sliced coset groupoid (H:G/X)//G", "g", "s", "x")
    verb("check", "run every applicable invariant suite")
    verb("explore-question", "search wide subgroupoids matching the image of F_X", "f", "x", "budget")
    return p


def _lookup(table: dict, name: str, what: str):
    try:
        return table[name]
    except KeyError:
        known = ", ".join(table) or "none"
        raise UsageError(f"no {what} named {name!r} (declared: {known})") from None


def _object(G, name: str) -> int:
    try:
        return G.object(name)
    except UnknownRef:
        raise UsageError(f"{G.name} has no object {name!r}") from None


def _subgroupoid(doc: Document, G, name: str):
    """A declared subgroupoid of ``G``, or one of the built-ins ``identities`` and ``whole``."""
    if name not in doc.subgroupoids and name in BUILTIN_SUBGROUPOIDS:
        return BUILTIN_SUBGROUPOIDS[name](G, name)
    K = _lookup(doc.subgroupoids, name, "subgroupoid")
    if K.parent != G:
        raise UsageError(f"subgroupoid {K.name} is declared in {K.parent.name}, not {G.name}")
    return K


def _no_dot(args) -> None:
    if args.format == "dot":
        raise UsageError(f"--format dot is not available for {args.verb}")


def _render_groupoid(args, G, underlying=None, extra: dict | None = None) -> str:
    if args.format == "dot":
        return emit_dot(G, underlying)
    if args.format == "json":
        out = groupoid_json(G)
        if extra:
            out.update(extra)
        return emit_json(out)
    text = groupoid_text(G, underlying)
    for key, val in (extra or {}).items():
        text += f"{key}:\n" + "".join(f"  {k} = {{{', '.join(v)}}}\n" for k, v in val.items())
    return text


def _kernel_text(r: dict) -> str:
    lines = [
        f"{r['functor']}: {r['source']} -> {r['target']} at {r['apex']} (image apex {r['image_apex']})",
        f"full at apex: {'yes' if r['full_at_apex'] else 'no'}; identity preserved: {'yes' if r['identity_preserved'] else 'no'}",
        f"kernel ({r['kernel_size']}): {', '.join(r['kernel']) or '(empty)'}",
        f"image ({len(r['image'])}): {', '.join(r['image'])}",
        "partition:",
    ]
    lines += [f"  {', '.join(p['class'])}  ->  {p['image']}" for p in r["partition"]]
    lines.append(f"kernel properties: {'hold' if r['kernel_properties_hold'] else 'FAIL'}")
    lines.append(f"partition valid: {'yes' if r['partition_valid'] else 'NO'}")
    if "notice" in r:
        lines.append(f"note: {r['notice']}")
    return "\n".join(lines) + "\n"


def _check_text(path: str, suites) -> str:
    lines = []
    for s in suites:
        lines.append(f"[{'PASS' if s.passed else 'FAIL'}] {s.suite}: {s.subject}")
        for name, v in s.checks:
            if not v.holds:
                w = f" witness: {', '.join(v.witness)}" if v.witness else ""
                d = f" ({v.detail})" if v.detail else ""
                lines.append(f"    FAIL {name}{d}{w}")
        for apex, r in s.data.get("kernel_reports", {}).items():
            sizes = "x".join(str(n) for n in r["class_sizes"])
            lines.append(f"    kernel at {apex}: size {r['kernel_size']} [{', '.join(r['kernel'])}]; "
                         f"partition {len(r['class_sizes'])} classes of sizes {sizes}")
    lines.append(f"{path}: {sum(s.passed for s in suites)}/{len(suites)} suites passed")
    return "\n".join(lines) + "\n"


def _explore_text(r: dict) -> str:
    lines = [
        f"{r['functor']} at {r['apex']}: image {', '.join(r['image'])}",
        f"criterion: {r['criterion']}",
        f"wide subgroupoids examined: {r['candidates_examined']}",
        f"satisfying: {len(r['satisfying'])}",
    ]
    for c in r["candidates"]:
        if c["verdict"]:
            pairs = "; ".join(f"{{{', '.join(b['class'])}}} -> {b['image']}" for b in c["bijection"])
            lines.append(f"  K = {{{', '.join(c['subgroupoid'])}}}: {pairs}")
    return "\n".join(lines) + "\n"


def _run(args, doc: Document) -> tuple[str, int]:
    v = args.verb
    if v == "validate":
        _no_dot(args)
        summary = {
            "groupoids": {n: {"objects": G.n_objects, "morphisms": G.n_morphisms} for n, G in doc.groupoids.items()},
            "functors": {n: f"{F.source.name} -> {F.target.name}" for n, F in doc.functors.items()},
            "subgroupoids": {n: K.names() for n, K in doc.subgroupoids.items()},
        }
        if args.format == "json":
            return emit_json({"file": args.file, "valid": True, **summary}), EXIT_OK
        lines = [f"{args.file}: valid"]
        lines += [f"  groupoid {n}: {d['objects']} objects, {d['morphisms']} morphisms" for n, d in summary["groupoids"].items()]
        lines += [f"  functor {n}: {d}" for n, d in summary["functors"].items()]
        lines += [f"  subgroupoid {n}: {', '.join(d)}" for n, d in summary["subgroupoids"].items()]
        return "\n".join(lines) + "\n", EXIT_OK

    if v == "slice":
        G = _lookup(doc.groupoids, args.groupoid, "groupoid")
        S = slice_groupoid(G, _object(G, args.object))
        under = [G.mname(int(u)) for u in S.underlying]
        return _render_groupoid(args, S.groupoid, under), EXIT_OK

    if v == "action":
        G = _lookup(doc.groupoids, args.groupoid, "groupoid")
        return _render_groupoid(args, action_groupoid(G).groupoid), EXIT_OK

    if v == "coset":
        G = _lookup(doc.groupoids, args.groupoid, "groupoid")
        K = _subgroupoid(doc, G, args.subgroupoid)
        C = coset_action_groupoid(G, K)
        classes = {C.relation.label(c): [G.mname(g) for g in cl.members] for c, cl in enumerate(C.relation.classes)}
        return _render_groupoid(args, C.groupoid, extra={"classes": classes}), EXIT_OK

    if v == "sliced-coset":
        G = _lookup(doc.groupoids, args.groupoid, "groupoid")
        K = _subgroupoid(doc, G, args.subgroupoid)
        sc = sliced_coset_groupoid(G, K, _object(G, args.object))
        return _render_groupoid(args, sc.groupoid), EXIT_OK

    if v == "kernel":
        _no_dot(args)
        F = _lookup(doc.functors, args.functor, "functor")
        r = kernel_report(induced_functor(F, _object(F.source, args.object)))
        ok = EXIT_OK if (r["kernel_properties_hold"] and r["partition_valid"]) else EXIT_FAIL
        return (emit_json(r) if args.format == "json" else _kernel_text(r)), ok

    if v == "check":
        _no_dot(args)
        suites = document_suites(doc)
        passed = all(s.passed for s in suites)
        if args.format == "json":
            out = emit_json({"file": args.file, "passed": passed, "suites": [s.to_json() for s in suites]})
        else:
            out = _check_text(args.file, suites)
        return out, EXIT_OK if passed else EXIT_FAIL

    if v == "explore-question":
        _no_dot(args)
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        F = _lookup(doc.functors, args.functor, "functor")
        r = explore_question(F, _object(F.source, args.object), args.budget)
        return (emit_json(r) if args.format == "json" else _explore_text(r)), EXIT_OK

    raise UsageError(f"unknown verb {v}")  # pragma: no cover


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        doc = parse_file(args.file)
        out, code = _run(args, doc)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        for d in exc.diagnostics:
            print(str(d), file=sys.stderr)
        return EXIT_FAIL
    except (SizeLimitError, BudgetExceeded) as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValidationError as exc:
        for vl in exc.violations:
            print(str(vl), file=sys.stderr)
        return EXIT_FAIL
    except GroupoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code
