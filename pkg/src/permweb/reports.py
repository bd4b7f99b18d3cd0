"""CSV and figure emission for the report-producing subcommands.

Reports are written as a delimited table plus a matplotlib rendering of
the same data, side by side in the chosen directory.  matplotlib is
imported lazily so library use never pays for it.
"""

from __future__ import annotations

import csv
import os


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def write_csv(path: str, rows) -> str:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in rows:
            writer.writerow(row)
    return path


def relation_report_files(report, outdir: str, name: str) -> list[str]:
    """CSV of instances plus a bar chart of instance counts per relation."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, f"{name}.csv")
    rows = [("relation", "params", "status")]
    for inst in report.instances:
        params = ";".join(f"{k}={v}" for k, v in sorted(inst.params.items()))
        rows.append((inst.relation, params, "PASS" if inst.passed else "FAIL"))
    write_csv(csv_path, rows)

    counts: dict = {}
    fails: dict = {}
    for inst in report.instances:
        counts[inst.relation] = counts.get(inst.relation, 0) + 1
        if not inst.passed:
            fails[inst.relation] = fails.get(inst.relation, 0) + 1
    plt = _plt()
    names = sorted(counts)
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(names)), 4))
    ax.bar(range(len(names)), [counts[k] for k in names],
           color="#4878b0", label="checked")
    if fails:
        ax.bar(range(len(names)), [fails.get(k, 0) for k in names],
               color="#d65f5f", label="failed")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("instances")
    ax.set_title(report.suite)
    ax.legend()
    fig.tight_layout()
    png_path = os.path.join(outdir, f"{name}.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def schur_table_files(table, outdir: str, name: str) -> list[str]:
    """CSV of the dimension table plus a heatmap of the span dimensions."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, f"{name}.csv")
    write_csv(csv_path, table.csv_rows())

    weights = sorted({r.lam for r in table.rows})
    pos = {w: i for i, w in enumerate(weights)}
    grid = [[0] * len(weights) for _ in weights]
    for r in table.rows:
        grid[pos[r.lam]][pos[r.mu]] = r.span_dim
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(grid, cmap="viridis")
    ax.set_xticks(range(len(weights)))
    ax.set_yticks(range(len(weights)))
    labels = ["".join(map(str, w)) for w in weights]
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_yticklabels(labels, fontsize=6)
    ax.set_title(f"hom-space dimensions n={table.n} d={table.d}")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    png_path = os.path.join(outdir, f"{name}.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def duality_report_files(reports, outdir: str, name: str) -> list[str]:
    """CSV of duality rows plus grouped bars comparing span vs commutant."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, f"{name}.csv")
    rows = [("kind", "n", "d", "r", "s", "space_dim", "commutators_zero",
             "span_dim", "commutant_dim", "equal", "threshold_holds")]
    for rep in reports:
        rows.append((rep.kind, rep.n, rep.d, rep.r or "", rep.s or "",
                     rep.space_dim, rep.commutators_zero, rep.span_dim,
                     rep.commutant_dim, rep.equal, rep.threshold_holds))
    write_csv(csv_path, rows)

    plt = _plt()
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(reports)), 4))
    xs = range(len(reports))
    labels = []
    for rep in reports:
        size = f"d={rep.d}" if rep.r is None else f"r={rep.r},s={rep.s}"
        labels.append(f"{rep.kind}\nn={rep.n},{size}")
    ax.bar([x - 0.2 for x in xs], [r.span_dim for r in reports], width=0.4,
           color="#4878b0", label="word span")
    ax.bar([x + 0.2 for x in xs], [r.commutant_dim for r in reports], width=0.4,
           color="#e1933e", label="commutant")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, fontsize=8)
    ax.set_ylabel("dimension")
    ax.set_title("diagram-algebra span vs commutant")
    ax.legend()
    fig.tight_layout()
    png_path = os.path.join(outdir, f"{name}.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]
