"""Rendering of distribution reports: delimited tables and bar-chart figures.

The machine-readable report JSON stays the interface of record; this module
is the bundled consumer that renders per-sense distributions the way the
usual corpus-comparison figures look (one bar group per sense, one bar per
source).
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .emit import DistributionReport
from .senses import SENSES


def write_report_tsv(reports: Sequence[DistributionReport], path: str | Path) -> None:
    """Delimited view of the reports: one row per sense, two columns per source."""
    header = ["sense"]
    for report in reports:
        header += [f"{report.source}_count", f"{report.source}_proportion"]
    rows = [header]
    for sense in SENSES:
        row = [sense.value]
        for report in reports:
            row.append(str(report.counts[sense]))
            if report.proportions is None:
                row.append("")
            else:
                row.append(f"{report.proportions[sense]:.6f}")
        rows.append(row)
    with open(path, "w", encoding="utf-8") as out:
        for row in rows:
            out.write("\t".join(row) + "\n")


def render_distribution_figure(
    reports: Sequence[DistributionReport], path: str | Path, title: str | None = None
) -> None:
    """Grouped bar chart of per-sense proportions, one series per source."""
    short_labels = [s.value.split(".", 1)[1] for s in SENSES]
    fig, ax = plt.subplots(figsize=(10, 4.5))
    n = max(len(reports), 1)
    width = 0.8 / n
    for i, report in enumerate(reports):
        values = [
            0.0 if report.proportions is None else report.proportions[s] for s in SENSES
        ]
        offsets = [x + (i - (n - 1) / 2) * width for x in range(len(SENSES))]
        ax.bar(offsets, values, width=width, label=report.source or f"set {i + 1}")
    ax.set_xticks(range(len(SENSES)))
    ax.set_xticklabels(short_labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("proportion")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
