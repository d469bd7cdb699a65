"""Plain-text tables and the JSON report layout.

Coset names are words in the quotient free product. They are printed in
the same ``g<i>^<e>`` syntax, where ``i`` is the *source* factor index and
``e`` is the block index in ``G_i/N_i``. Blocks are numbered by their least
element, so for an untouched factor the block index equals the element.
"""

from __future__ import annotations

import json
from typing import Any

from .cosets import CosetWindow, DoubleCosetRecord
from .kurosh import DecompositionReport, Verdict
from .quotient import ProjectionMap
from .words import ReducedWord, format_word

REPORT_VERSION = 1


def format_name(p: ProjectionMap, name: ReducedWord) -> str:
    return format_word([(p.source_index[t], b) for t, b in name.letters])


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def window_table(w: CosetWindow) -> str:
    p = w.projection
    rows = [[str(c), format_name(p, n), format_word(l)] for c, (n, l) in enumerate(zip(w.names, w.lifts))]
    return _table(["coset", "name", "lift"], rows)


def double_coset_table(w: CosetWindow, i: int, records: list[DoubleCosetRecord]) -> str:
    rows = [
        [format_word(r.representative), " ".join(map(str, r.member_cosets)), "yes" if r.truncated else "no"]
        for r in records
    ]
    return f"factor {i}\n" + _table(["s", "cosets", "truncated"], rows)


def factor_table(report: DecompositionReport) -> str:
    rows = [
        [
            "N" if f.base else "K",
            str(f.factor),
            format_word(f.representative),
            "{" + ", ".join(map(str, f.subgroup.elements)) + "}",
            "yes" if f.truncated else "no",
        ]
        for f in report.factors
    ]
    return _table(["role", "factor", "s", "subgroup", "truncated"], rows)


def verdict_lines(verdicts: dict[str, Verdict]) -> list[str]:
    out = []
    for name, v in verdicts.items():
        status = "SKIP" if v.skipped else ("PASS" if v.passed else "FAIL")
        line = f"{status} {name} (checked {v.checked})"
        if v.detail:
            line += f" {v.detail}"
        if v.counterexample is not None:
            line += f" counterexample: {v.counterexample}"
        out.append(line)
    return out


def _verdict_json(v: Verdict) -> dict[str, Any]:
    d: dict[str, Any] = {"pass": v.passed, "checked": v.checked}
    if v.skipped:
        d["skipped"] = True
    if v.counterexample is not None:
        d["counterexample"] = v.counterexample
    if v.detail:
        d["detail"] = v.detail
    return d


def report_dict(report: DecompositionReport, names: list[str] | None = None,
                options: dict[str, Any] | None = None) -> dict[str, Any]:
    spec = report.spec
    p = report.projection
    w = report.window
    fam = spec.family
    names = names or [g.name or f"G{k}" for k, g in enumerate(fam)]
    counts = {"trivial": 0, "redundant": 0, "unresolved": 0}
    for e in report.free_part:
        counts[e.status] += 1
    return {
        "version": REPORT_VERSION,
        "spec": {
            "factors": [
                {"index": k, "name": n, "order": g.order, "identity": g.identity}
                for k, (n, g) in enumerate(zip(names, fam))
            ],
            "normal": [
                {"factor": j, "elements": list(spec.normals[j].elements)} for j in spec.quotiented
            ],
            "allow_multi": spec.allow_multi,
            "options": dict(options) if options else {},
        },
        "window": {
            "bound": w.bound,
            "cosets": [
                {"index": c, "name": format_name(p, n), "lift": format_word(l)}
                for c, (n, l) in enumerate(zip(w.names, w.lifts))
            ],
        },
        "double_cosets": [
            {
                "factor": r.factor,
                "representative": format_word(r.representative),
                "members": list(r.member_cosets),
                "truncated": r.truncated,
            }
            for i in sorted(report.double_cosets)
            for r in report.double_cosets[i]
        ],
        "factors": [
            {
                "role": "N" if f.base else "K",
                "factor": f.factor,
                "representative": format_word(f.representative),
                "subgroup": list(f.subgroup.elements),
                "truncated": f.truncated,
                "elements": [format_word(e) for e in f.elements()],
            }
            for f in report.factors
        ],
        "free_part": {
            **counts,
            "unresolved_words": [format_word(e.word) for e in report.unresolved],
        },
        "verdicts": {k: _verdict_json(v) for k, v in report.verdicts.items()},
        "notes": list(report.notes),
    }


def dumps(report: DecompositionReport, **kwargs: Any) -> str:
    return json.dumps(report_dict(report, **kwargs), indent=2) + "\n"
