"""Figure rendering for the bound report."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def write_report_files(rows, tsv_text: str, out_dir, n: int) -> list[str]:
    """Write the delimited report and a log-scale bar chart of measured and
    certified sizes against the closed-form values; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    tsv_path = os.path.join(out_dir, f"table1_n{n}.tsv")
    with open(tsv_path, "w") as fh:
        fh.write(tsv_text)
    labels = []
    measured = []
    formula = []
    certified = []
    for row in rows:
        labels.append(row.operation)
        measured.append(max(row.measured.values()) if row.measured else 0)
        formula.append(row.formula_value or 0)
        certified.append(row.certified or 0)
    xs = range(len(labels))
    width = 0.27
    fig, ax = plt.subplots(figsize=(9, 4.5))
    ax.bar([x - width for x in xs], formula, width, label="formula value")
    ax.bar(list(xs), measured, width, label="measured")
    ax.bar([x + width for x in xs], certified, width, label="certified bound")
    ax.set_yscale("symlog", base=2)
    ax.set_ylabel("size")
    ax.set_title(f"construction sizes at n = {n}")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = os.path.join(out_dir, f"table1_n{n}.png")
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [tsv_path, png_path]
