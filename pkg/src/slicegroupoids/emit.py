"""Deterministic DOT and JSON output, plus the JSON schemas the reports follow."""
from __future__ import annotations

import json
from typing import Sequence

from .groupoid import Groupoid


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(G: Groupoid, edge_labels: Sequence[str] | None = None) -> str:
    """One node per object and one labelled edge per morphism, both in id order."""
    labels = edge_labels if edge_labels is not None else [m.name for m in G.morphisms]
    lines = [f"digraph {_q(G.name)} {{"]
    for o in G.objects:
        lines.append(f"  n{o.id} [label={_q(o.name)}];")
    for m in G.morphisms:
        lines.append(f"  n{m.source} -> n{m.target} [label={_q(labels[m.id])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(report) -> str:
    """Key order is whatever the report dict holds; producers fix it."""
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def groupoid_json(G: Groupoid) -> dict:
    return {
        "name": G.name,
        "objects": [o.name for o in G.objects],
        "morphisms": [
            {"name": m.name, "source": G.oname(m.source), "target": G.oname(m.target)} for m in G.morphisms
        ],
        "identities": {G.oname(x): G.mname(G.identity(x)) for x in range(G.n_objects)},
        "inverses": {m.name: G.mname(G.inverse(m.id)) for m in G.morphisms},
        "compose": [[G.mname(g), G.mname(f), G.mname(G.compose(g, f))] for g, f in G.composable_pairs()],
    }


def groupoid_text(G: Groupoid, underlying: Sequence[str] | None = None) -> str:
    """Human-oriented listing: header, objects, then one morphism per line."""
    out = [f"{G.name}: {G.n_objects} objects, {G.n_morphisms} morphisms", "objects: " + ", ".join(o.name for o in G.objects)]
    width = max((len(m.name) for m in G.morphisms), default=0)
    for m in G.morphisms:
        line = f"  {m.name:<{width}}  {G.oname(m.source)} -> {G.oname(m.target)}"
        if underlying is not None:
            line += f"  carried by {underlying[m.id]}"
        out.append(line)
    return "\n".join(out) + "\n"


_STR_LIST = {"type": "array", "items": {"type": "string"}}

GROUPOID_SCHEMA = {
    "type": "object",
    "required": ["name", "objects", "morphisms", "identities", "inverses", "compose"],
    "properties": {
        "name": {"type": "string"},
        "objects": _STR_LIST,
        "morphisms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "source", "target"],
                "properties": {"name": {"type": "string"}, "source": {"type": "string"}, "target": {"type": "string"}},
            },
        },
        "identities": {"type": "object", "additionalProperties": {"type": "string"}},
        "inverses": {"type": "object", "additionalProperties": {"type": "string"}},
        "compose": {"type": "array", "items": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3}},
    },
}

KERNEL_REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "functor", "source", "target", "apex", "image_apex", "full_at_apex", "identity_preserved",
        "kernel", "kernel_size", "kernel_properties_hold", "image", "partition", "class_sizes", "partition_valid",
    ],
    "properties": {
        "functor": {"type": "string"},
        "source": {"type": "string"},
        "target": {"type": "string"},
        "apex": {"type": "string"},
        "image_apex": {"type": "string"},
        "full_at_apex": {"type": "boolean"},
        "identity_preserved": {"type": "boolean"},
        "kernel": _STR_LIST,
        "kernel_size": {"type": "integer", "minimum": 0},
        "kernel_properties_hold": {"type": "boolean"},
        "image": _STR_LIST,
        "partition": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["image", "class"],
                "properties": {"image": {"type": "string"}, "class": _STR_LIST},
            },
        },
        "class_sizes": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "partition_valid": {"type": "boolean"},
        "notice": {"type": "string"},
    },
}

EXPLORE_REPORT_SCHEMA = {
    "type": "object",
    "required": ["functor", "apex", "criterion", "image", "candidates_examined", "satisfying", "candidates"],
    "properties": {
        "functor": {"type": "string"},
        "apex": {"type": "string"},
        "criterion": {"type": "string"},
        "image": _STR_LIST,
        "candidates_examined": {"type": "integer", "minimum": 0},
        "satisfying": {"type": "array", "items": _STR_LIST},
        "candidates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["subgroupoid", "verdict", "classes"],
                "properties": {
                    "subgroupoid": _STR_LIST,
                    "verdict": {"type": "boolean"},
                    "classes": {"type": "array", "items": _STR_LIST},
                    "bijection": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["class", "image"],
                            "properties": {"class": _STR_LIST, "image": {"type": "string"}},
                        },
                    },
                    "witness": {"type": "object"},
                },
            },
        },
    },
}

CHECK_REPORT_SCHEMA = {
    "type": "object",
    "required": ["file", "passed", "suites"],
    "properties": {
        "file": {"type": "string"},
        "passed": {"type": "boolean"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "subject", "checks"],
                "properties": {
                    "suite": {"type": "string"},
                    "subject": {"type": "string"},
                    "checks": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "holds"],
                            "properties": {
                                "name": {"type": "string"},
                                "holds": {"type": "boolean"},
                                "witness": _STR_LIST,
                                "detail": {"type": "string"},
                            },
                        },
                    },
                    "data": {"type": "object"},
                },
            },
        },
    },
}
