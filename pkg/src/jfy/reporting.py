"""Report output: JSONL lines plus a rendered summary figure."""
from __future__ import annotations

import json
from pathlib import Path

from .fuzz import SEMANTICS, FuzzReport


def report_jsonl(report: FuzzReport) -> str:
    """One key-sorted JSON object per checked (program, semantics) pair;
    identical bytes for identical configurations."""
    if not report.entries:
        return ""
    lines = [json.dumps(entry, sort_keys=True) for entry in report.entries]
    return "\n".join(lines) + "\n"


def summary_lines(report: FuzzReport) -> list[str]:
    lines = []
    for semantics in SEMANTICS:
        agree, total = report.agreements()[semantics]
        lines.append(f"{semantics}: {agree}/{total} agree")
    lines.append(f"defects: {report.defect_count()}")
    return lines


def write_report(report: FuzzReport, jsonl_path: str) -> str:
    """Write the JSONL file and render a PNG summary next to it;
    returns the figure path."""
    path = Path(jsonl_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report_jsonl(report), encoding="utf-8")
    figure_path = path.with_suffix(".png")
    render_figure(report, str(figure_path))
    return str(figure_path)


def render_figure(report: FuzzReport, png_path: str) -> None:
    """Two panels: agreement per semantics, and how many stable models
    the generated programs had (a shape check on the corpus)."""
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    agreements = report.agreements()
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6))

    labels = list(SEMANTICS)
    agree = [agreements[s][0] for s in labels]
    disagree = [agreements[s][1] - agreements[s][0] for s in labels]
    left.bar(labels, agree, color="#4a7ba6", label="agree")
    left.bar(labels, disagree, bottom=agree, color="#c0504d", label="disagree")
    left.set_title("engine vs oracle")
    left.set_ylabel("programs")
    left.legend(frameon=False, fontsize=8)

    counts: dict[int, int] = {}
    for entry in report.entries:
        if entry["semantics"] == "stable" and entry["engine_result"] is not None:
            n = len(entry["engine_result"])
            counts[n] = counts.get(n, 0) + 1
    xs = sorted(counts)
    right.bar([str(x) for x in xs], [counts[x] for x in xs], color="#6b8e5a")
    right.set_title("stable models per program")
    right.set_xlabel("models")
    right.set_ylabel("programs")

    fig.tight_layout()
    fig.savefig(png_path, dpi=110)
    plt.close(fig)
