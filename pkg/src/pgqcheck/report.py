"""Report rendering: text tables, structured documents, figures.

The text format mirrors the layout of the multiplicity tables in the
underlying case studies: line characters as rows, one column group per
candidate holding the mu(1) and mu(zeta) eigenvalue multiplicities.
The structured format is a versioned JSON document with the same
content; rendering is deterministic, so identical case files produce
byte-identical structured reports.
"""

from __future__ import annotations

import json

REPORT_FORMAT = "pgq-report"
REPORT_VERSION = 1


def _flat_layout(target):
    if target.power_block_ids:
        return (f"[u^{target.q} on {', '.join(target.power_block_ids)}"
                f" | u on {', '.join(target.support_ids)}]")
    return f"[u on {', '.join(target.support_ids)}]"


def _format_table(char_ids, groups, zeta_order):
    """Rows of line characters, one (mu(1), mu(zeta)) column group per
    candidate.  groups is a list of (label, [(mu1, muz), ...])."""
    name_w = max(len("character"), max(len(c) for c in char_ids))
    lines_top = ["character".ljust(name_w)]
    lines_mid = [" " * name_w]
    body = [[cid.ljust(name_w)] for cid in char_ids]
    h1, h2 = "mu(1)", f"mu(zeta{zeta_order})"
    for label, pairs in groups:
        w1 = max(len(h1), max(len(str(a)) for a, _ in pairs))
        w2 = max(len(h2), max(len(str(b)) for _, b in pairs))
        width = w1 + 2 + w2
        lines_top.append(label.center(width))
        lines_mid.append(h1.rjust(w1) + "  " + h2.rjust(w2))
        for row, (a, b) in zip(body, pairs):
            row.append(str(a).rjust(w1) + "  " + str(b).rjust(w2))
    sep = "   "
    out = [sep.join(lines_top).rstrip(), sep.join(lines_mid).rstrip()]
    out += [sep.join(row).rstrip() for row in body]
    return out


def render_text(report):
    """Human-readable report; one block per target."""
    out = [f"case {report.group_name}", f"source: {report.provenance}"]
    for t in report.targets:
        out.append("")
        out.append(f"target order {t.unit_order} ({t.mode})")
        for w in t.warnings:
            out.append(f"  warning: {w}")
        out.append(f"  candidates ({len(t.candidates)}), "
                   f"flat layout {_flat_layout(t)}:")
        for i, cand in enumerate(t.candidates, 1):
            out.append(f"    #{i}: {cand.flat}")
        if t.line_id is not None and t.candidates:
            out.append(f"  line {t.line_id}, component {t.component} "
                       f"(eigenvalue multiplicities at 1 and "
                       f"zeta_{t.zeta_order})")
            with_rows = [(i, c) for i, c in enumerate(t.candidates, 1)
                         if c.rows]
            if with_rows:
                char_ids = [cid for cid, _ in with_rows[0][1].rows]
                zp = t.zeta_order == t.p
                groups = [
                    (f"#{i}",
                     [(quad.mu_1, quad.mu_zp if zp else quad.mu_zq)
                      for _, quad in c.rows])
                    for i, c in with_rows
                ]
                for line in _format_table(char_ids, groups, t.zeta_order):
                    out.append("  " + line)
            out.append("  inequality (holds means lhs <= rhs):")
            for i, c in enumerate(t.candidates, 1):
                if c.theorem2 is None:
                    note = c.notes[0] if c.notes else "not evaluated"
                    out.append(f"    #{i}: {note}")
                    continue
                t2 = c.theorem2
                out.append(f"    #{i}: {t2.lhs} <= {t2.rhs} {t2.verdict}")
                if c.cross_theorem2 is not None:
                    x2 = c.cross_theorem2
                    out.append(f"        cross-check {t.cross_component}: "
                               f"{x2.lhs} <= {x2.rhs} {x2.verdict}")
            chain_bits = []
            for i, c in enumerate(t.candidates, 1):
                if c.chain is not None:
                    chain_bits.append(f"#{i} {c.chain.status}")
            if chain_bits:
                out.append("  chain search: " + ", ".join(chain_bits))
        out.append(f"  conclusion: {t.conclusion}")
    return "\n".join(out) + "\n"


def _quad_to_list(quad):
    return [quad.mu_1, quad.mu_zp, quad.mu_zq, quad.mu_zpq]


def _theorem2_to_doc(t2):
    if t2 is None:
        return None
    return {"verdict": t2.verdict, "lhs": t2.lhs, "rhs": t2.rhs}


def _chain_to_doc(chain):
    if chain is None:
        return None
    witness = None
    if chain.witness is not None:
        a_vec, mu_vec = chain.witness
        witness = {"a": list(a_vec), "mu": [list(m) for m in mu_vec]}
    return {"status": chain.status, "witness": witness}


def to_structured(report):
    """The report as a plain versioned document (nested dicts/lists)."""
    targets = []
    for t in report.targets:
        candidates = []
        for c in t.candidates:
            candidates.append({
                "flat": list(c.flat),
                "rows": None if c.rows is None else [
                    {"character": cid, "mu": _quad_to_list(quad)}
                    for cid, quad in c.rows
                ],
                "theorem2": _theorem2_to_doc(c.theorem2),
                "cross_theorem2": _theorem2_to_doc(c.cross_theorem2),
                "chain": _chain_to_doc(c.chain),
                "excluded": c.excluded,
                "notes": list(c.notes),
            })
        targets.append({
            "order": t.unit_order,
            "mode": t.mode,
            "p": t.p,
            "q": t.q,
            "power_block_classes": list(t.power_block_ids),
            "support_classes": list(t.support_ids),
            "line": t.line_id,
            "component": t.component,
            "cross_component": t.cross_component,
            "zeta_order": t.zeta_order,
            "warnings": list(t.warnings),
            "candidates": candidates,
            "conclusion": t.conclusion,
        })
    return {
        "format": REPORT_FORMAT,
        "version": REPORT_VERSION,
        "group": report.group_name,
        "provenance": report.provenance,
        "targets": targets,
    }


def render_structured(doc):
    """Serialize a structured report deterministically."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _reject_float(text):
    raise ValueError(f"non-integer number {text!r} in structured report")


def parse_structured(text):
    """Parse a rendered structured report back into the document form."""
    doc = json.loads(text, parse_float=_reject_float,
                     parse_constant=_reject_float)
    if not isinstance(doc, dict) or doc.get("format") != REPORT_FORMAT:
        raise ValueError(f"not a {REPORT_FORMAT} document")
    if doc.get("version") != REPORT_VERSION:
        raise ValueError(f"unsupported report version {doc.get('version')!r}")
    return doc


def render_figures(report, outdir):
    """Render one PNG per target into outdir; returns the written paths.

    Targets judged by the line inequality get a bar chart of the margin
    lhs - rhs per candidate (a positive margin certifies exclusion);
    targets that only enumerate get a histogram of the candidate
    coordinates; an empty candidate set gets an annotated placeholder.
    """
    import matplotlib
    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt
    from pathlib import Path

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    slug = "".join(ch for ch in report.group_name.lower() if ch.isalnum())
    paths = []
    for t in report.targets:
        path = outdir / f"{slug or 'case'}_order{t.unit_order}.png"
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        judged = [(i, c) for i, c in enumerate(t.candidates, 1)
                  if c.theorem2 is not None]
        if judged:
            labels = [f"#{i}" for i, _ in judged]
            margins = [c.theorem2.lhs - c.theorem2.rhs for _, c in judged]
            ax.bar(labels, margins, color="#88422d")
            ax.axhline(0.0, color="black", linewidth=0.8)
            ax.set_ylabel("lhs - rhs")
            ax.set_title(f"{report.group_name} order {t.unit_order}: "
                         f"inequality margin per candidate "
                         f"(component {t.component})")
        elif t.candidates:
            values = [v for c in t.candidates for v in c.flat]
            lo, hi = min(values), max(values)
            bins = [b - 0.5 for b in range(lo, hi + 2)]
            ax.hist(values, bins=bins, color="#2d5f88")
            ax.set_xlabel("partial augmentation value")
            ax.set_ylabel("occurrences")
            ax.set_title(f"{report.group_name} order {t.unit_order}: "
                         f"{len(t.candidates)} candidates")
        else:
            ax.text(0.5, 0.5, "no candidates survive\nthe eigenvalue "
                    "constraints", ha="center", va="center",
                    transform=ax.transAxes)
            ax.set_axis_off()
            ax.set_title(f"{report.group_name} order {t.unit_order}")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
        paths.append(str(path))
    return paths
