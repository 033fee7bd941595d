"""Optional matplotlib figures next to the textual report."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from ..orbicore import LinearSubspace, Subchart  # noqa: E402
from .report import HEADER  # noqa: E402
from .scenario import DASH, YES  # noqa: E402

COLORS = {YES: "#4c9a5b", DASH: "#c8c8c8"}
NO_COLOR = "#c0504d"


def verdict_grid(rows, path: str) -> None:
    """One coloured cell per verdict, rows in table order."""
    fig, ax = plt.subplots(figsize=(7.5, 0.45 * max(len(rows), 1) + 1.2))
    for r, row in enumerate(rows):
        for c, val in enumerate(row.verdicts):
            ax.add_patch(plt.Rectangle((c, r), 1, 1, color=COLORS.get(val, NO_COLOR), ec="white"))
            ax.text(c + 0.5, r + 0.5, val, ha="center", va="center", fontsize=9)
    ax.set_xlim(0, len(HEADER) - 1)
    ax.set_ylim(max(len(rows), 1), 0)
    ax.set_xticks([k + 0.5 for k in range(len(HEADER) - 1)])
    ax.set_xticklabels(["Suborbifold", "Full", "Saturated", "Split", "Embedding"], fontsize=9)
    ax.xaxis.tick_top()
    ax.set_yticks([k + 0.5 for k in range(len(rows))])
    ax.set_yticklabels([row.label for row in rows], fontsize=9)
    ax.tick_params(length=0)
    for s in ax.spines.values():
        s.set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _real(m) -> list[list[float]] | None:
    out = []
    for row in m.rows:
        vals = [complex(x) for x in row]
        if any(abs(v.imag) > 1e-12 for v in vals):
            return None
        out.append([v.real for v in vals])
    return out


def chart_portrait(sub: Subchart, path: str) -> bool:
    """Draw the images of the subchart under every chart element.

    Images under lambda are drawn solid, the others dashed.  Returns False
    (writing nothing) unless the chart is a real plane chart.
    """
    g = sub.chart.group
    if sub.chart.dim != 2:
        return False
    mats = [_real(m) for m in g.elements]
    if any(m is None for m in mats):
        return False
    if isinstance(sub.shape, LinearSubspace):
        if sub.shape.space.dim == 2:
            return False
        d = [complex(x).real for x in sub.shape.space.basis[0]] if sub.shape.space.dim else [0.0, 0.0]
        pts = [(s * d[0], s * d[1]) for s in (-1.5, 1.5)]
    else:
        ts = [-1.5 + 3 * k / 120 for k in range(121)]
        pts = [(t, float(sub.shape.poly(t))) for t in ts]
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for k, m in enumerate(mats):
        xs = [m[0][0] * x + m[0][1] * y for x, y in pts]
        ys = [m[1][0] * x + m[1][1] * y for x, y in pts]
        inside = k in sub.lam
        ax.plot(xs, ys, color="#1f4e79" if inside else "#999999", ls="-" if inside else "--",
                lw=2 if inside else 1)
    ax.plot([0], [0], "ko", ms=4)
    ax.set_aspect("equal")
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    ax.set_title(f"{sub.name}: |lambda|={len(sub.lam)} of |G|={g.order}", fontsize=10)
    ax.axhline(0, color="#dddddd", lw=0.5, zorder=0)
    ax.axvline(0, color="#dddddd", lw=0.5, zorder=0)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return True
