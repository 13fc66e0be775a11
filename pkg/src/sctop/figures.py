"""Matplotlib rendering: Hasse diagrams and verification summaries.

Figures are written straight to files (Agg backend); the format follows
the file extension. Layout is the usual layered drawing: height is the
longest chain below a point, points share a layer left to right in
carrier order.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .dot import _as_poset


def hasse_layout(poset) -> list[tuple[float, float]]:
    n = poset.size
    height = [0] * n
    for i in sorted(range(n), key=lambda i: poset.down[i].bit_count()):
        below = [j for j in range(n) if j != i and poset.leq(j, i)]
        height[i] = 1 + max((height[j] for j in below), default=-1)
    layers: dict[int, list[int]] = {}
    for i in range(n):
        layers.setdefault(height[i], []).append(i)
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * n
    for h, members in layers.items():
        width = len(members)
        for k, i in enumerate(sorted(members)):
            pos[i] = (k - (width - 1) / 2.0, float(h))
    return pos


def render_hasse(target, path: str, title: str | None = None) -> None:
    poset, names = _as_poset(target)
    pos = hasse_layout(poset)
    fig, ax = plt.subplots(figsize=(max(3.0, poset.size * 0.9), max(3.0, poset.size * 0.7)))
    for i, j in poset.covers():
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.4", lw=1.2, zorder=1)
    if poset.size:
        xs, ys = zip(*pos)
        ax.scatter(xs, ys, s=900, facecolor="white", edgecolor="0.2", zorder=2)
        for i, (x, y) in enumerate(pos):
            ax.annotate(names[i], (x, y), ha="center", va="center", fontsize=9, zorder=3)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_check_summary(results, path: str, title: str = "verification suites") -> None:
    """Stacked pass/fail counts per suite for a list of CheckResult."""
    suites: dict[str, list[int]] = {}
    for r in results:
        entry = suites.setdefault(r.suite, [0, 0])
        entry[0 if r.passed else 1] += 1
    names = sorted(suites)
    passed = [suites[s][0] for s in names]
    failed = [suites[s][1] for s in names]
    fig, ax = plt.subplots(figsize=(max(4.0, len(names) * 1.4), 3.5))
    xs = range(len(names))
    ax.bar(xs, passed, color="#4a7c59", label="passed")
    ax.bar(xs, failed, bottom=passed, color="#b3432b", label="failed")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("checks")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
