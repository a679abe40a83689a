"""Rendering of valuation tables as text, CSV and JSON, plus a scatter plot."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .vtable import COLUMNS, VRow


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v)


def rows_to_csv(rows: list[VRow], timings: bool = False) -> str:
    cols = [c for c in COLUMNS if timings or c != "seconds"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        d = r.as_dict()
        w.writerow([_cell(d[c]) for c in cols])
    return buf.getvalue()


def rows_to_json(rows: list[VRow], timings: bool = False) -> str:
    return json.dumps({"columns": [c for c in COLUMNS if timings or c != "seconds"],
                       "rows": [r.as_dict(timings) for r in rows]}, indent=2) + "\n"


def rows_to_text(rows: list[VRow]) -> str:
    lines = [f"{'(m,p)':>10}  {'v2(tr)':>7}  {'m+p':>5}"]
    for r in rows:
        v = "?" if r.v2_trace is None else str(r.v2_trace)
        mark = "  *" if r.exceeds else ("  inconclusive" if r.status != "ok" else "")
        lines.append(f"{f'({r.m},{r.p})':>10}  {v:>7}  {r.m_plus_p:>5}{mark}")
    n_exc = sum(r.exceeds for r in rows)
    lines.append(f"{len(rows)} rows, {n_exc} with v2(tr) > m+p (marked *)")
    return "\n".join(lines) + "\n"


def render(rows: list[VRow], fmt: str, timings: bool = False) -> str:
    if fmt == "csv":
        return rows_to_csv(rows, timings)
    if fmt == "json":
        return rows_to_json(rows, timings)
    return rows_to_text(rows)


def plot_rows(rows: list[VRow], path) -> Path:
    """Scatter of v2(tr P_{m,p}) - (m + p) against m + p; points above zero
    are the exceedances."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    done = [r for r in rows if r.v2_trace is not None]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.axhline(0, color="0.5", lw=1, ls="--", label="v2 = m+p")
    ms = sorted({r.m for r in done})
    cmap = plt.get_cmap("viridis", max(len(ms), 2))
    for i, m in enumerate(ms):
        sel = [r for r in done if r.m == m]
        ax.scatter([r.m_plus_p for r in sel], [r.v2_trace - r.m_plus_p for r in sel], s=20,
                   color=cmap(i), label=f"m={m}", zorder=3)
    exc = [r for r in done if r.exceeds]
    if exc:
        ax.scatter([r.m_plus_p for r in exc], [r.v2_trace - r.m_plus_p for r in exc], s=90,
                   facecolors="none", edgecolors="red", lw=1.4, label="v2 > m+p", zorder=4)
        for k, r in enumerate(sorted(exc, key=lambda r: r.m_plus_p)):
            ax.annotate(f"({r.m},{r.p})", (r.m_plus_p, r.v2_trace - r.m_plus_p), fontsize=8,
                        xytext=(6, 6 + 10 * (k % 2)), textcoords="offset points")
    if done and max(r.m_plus_p for r in done) > 8 * min(r.m_plus_p for r in done):
        ax.set_xscale("log")
    ax.set_xlabel("m + p")
    ax.set_ylabel("v2(tr P_{m,p}) - (m + p)")
    ax.set_title("2-adic valuation of multiplier polynomial traces")
    ax.legend(fontsize=7, loc="lower left", ncol=2)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
