"""Figures for ``bench --plot``."""
from __future__ import annotations

import os
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402


def bench_figures(rows: list[dict], traces: list[dict], outdir: str) -> list[str]:
    """Runtime per algorithm against instance size, and the per-round trace of the solver."""
    os.makedirs(outdir, exist_ok=True)
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    # x axis: edges, unless the sweep held m fixed
    key = "m" if len({r["m"] for r in rows}) > 1 else "n"
    by_algo = defaultdict(list)
    for r in rows:
        by_algo[r["algo"]].append((r[key], r["seconds"]))
    for algo, pts in sorted(by_algo.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o", label=algo, alpha=0.7)
    ax.set_xlabel("edges m" if key == "m" else "vertices n")
    ax.set_ylabel("seconds")
    ax.set_yscale("log")
    ax.legend()
    ax.set_title("runtime by algorithm")
    fig.tight_layout()
    paths.append(os.path.join(outdir, "runtime.png"))
    fig.savefig(paths[-1], dpi=120)
    plt.close(fig)

    top = [(t["params"], [it for it in t["trace"]["iterations"] if it["depth"] == 0]) for t in traces]
    top = [(p, its) for p, its in top if its]
    if top:
        fig, (a1, a2) = plt.subplots(1, 2, figsize=(10, 4))
        for p, its in top:
            xs = [0] + [it["iteration"] for it in its]
            a1.plot(xs, [its[0]["h_before"]] + [it["h_after"] for it in its], "-", alpha=0.5)
            a2.plot([it["iteration"] for it in its], [it["m_after"] for it in its], "-", alpha=0.5)
        a1.set_xlabel("round")
        a1.set_ylabel("hop bound h")
        a1.set_title("hop bound per round")
        a2.set_xlabel("round")
        a2.set_ylabel("edges after round")
        a2.set_yscale("log")
        a2.set_title("graph size per round")
        for a in (a1, a2):
            a.xaxis.set_major_locator(MaxNLocator(integer=True))
        fig.tight_layout()
        paths.append(os.path.join(outdir, "rounds.png"))
        fig.savefig(paths[-1], dpi=120)
        plt.close(fig)
    return paths
