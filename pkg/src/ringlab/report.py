"""Report rendering: text table, JSON file, TSV and summary figures."""

from __future__ import annotations

import os
from collections import defaultdict

from .harness import Report


def render_table(report: Report, max_width: int = 100) -> str:
    lines = []
    header = f"{'check':<12} {'ring':<38} {'verdict':<26} {'ms':>9}"
    lines.append(header)
    lines.append("-" * len(header))
    for r in report.results:
        lines.append(f"{r.check_id:<12} {r.ring:<38} {r.verdict:<26} {r.ms:>9.1f}")
        if r.failed:
            for s in r.sub_assertions:
                if not s.ok:
                    detail = f"    FAIL {s.name}"
                    if s.witness:
                        detail += f"  [{s.witness}]"
                    lines.append(detail[:max_width * 2])
    passed = sum(1 for r in report.results if r.verdict == "pass")
    failed = sum(1 for r in report.results if r.failed)
    skipped = sum(1 for r in report.results if r.skipped)
    lines.append("-" * len(header))
    lines.append(f"pass {passed}  fail {failed}  skipped {skipped}")
    return "\n".join(lines)


def write_json(report: Report, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report.json_text())
        fh.write("\n")


def write_tsv(report: Report, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("check_id\tring\tverdict\tpredicted\tobserved\tms\tfailed_assertions\n")
        for r in report.results:
            failed = "; ".join(s.name for s in r.sub_assertions if not s.ok)
            fh.write(
                f"{r.check_id}\t{r.ring}\t{r.verdict}\t{r.predicted}\t{r.observed}\t"
                f"{r.ms}\t{failed}\n"
            )


def write_figures(report: Report, directory: str) -> list[str]:
    """Write results.tsv plus verdict-matrix and timing PNGs into `directory`."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    os.makedirs(directory, exist_ok=True)
    written = []

    tsv_path = os.path.join(directory, "results.tsv")
    write_tsv(report, tsv_path)
    written.append(tsv_path)

    check_ids = sorted({r.check_id for r in report.results})
    ring_names = sorted({r.ring for r in report.results})
    code = {"pass": 2.0, "fail": 0.0}
    grid = np.full((len(check_ids), len(ring_names)), 1.0)
    for r in report.results:
        grid[check_ids.index(r.check_id), ring_names.index(r.ring)] = code.get(
            "fail" if r.failed else ("pass" if r.verdict == "pass" else "skip"), 1.0
        )
    fig, ax = plt.subplots(
        figsize=(max(6, 0.45 * len(ring_names) + 3), max(4, 0.22 * len(check_ids) + 1))
    )
    cmap = matplotlib.colors.ListedColormap(["#c0392b", "#d7d7d7", "#27ae60"])
    ax.imshow(grid, cmap=cmap, vmin=0.0, vmax=2.0, aspect="auto")
    ax.set_xticks(range(len(ring_names)))
    ax.set_xticklabels(ring_names, rotation=60, ha="right", fontsize=7)
    ax.set_yticks(range(len(check_ids)))
    ax.set_yticklabels(check_ids, fontsize=7)
    ax.set_title("verdicts (green pass, grey skipped, red fail)")
    fig.tight_layout()
    matrix_path = os.path.join(directory, "verdict_matrix.png")
    fig.savefig(matrix_path, dpi=150)
    plt.close(fig)
    written.append(matrix_path)

    totals: dict[str, float] = defaultdict(float)
    for r in report.results:
        totals[r.check_id] += r.ms
    names = sorted(totals, key=totals.get)
    fig, ax = plt.subplots(figsize=(7, max(4, 0.22 * len(names) + 1)))
    ax.barh(names, [totals[n] for n in names], color="#2d6a9f")
    ax.set_xlabel("wall time (ms)")
    ax.set_title("check wall time across the catalog")
    ax.tick_params(axis="y", labelsize=7)
    fig.tight_layout()
    times_path = os.path.join(directory, "check_times.png")
    fig.savefig(times_path, dpi=150)
    plt.close(fig)
    written.append(times_path)
    return written
