#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Plot per-timeslot deafness and AoA success curves from a records.csv.

Usage:
    plot_results.py RESULTS_DIR [-o OUTPUT.png]

RESULTS_DIR is the --out directory of a `thztrack run` (must contain
records.csv). Produces one figure with two panels: average deafness over
successful estimations, and the probability of successful AoA estimation,
both per timeslot and per algorithm, averaged over stations and seeds.
"""

import argparse
import pathlib
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

ALGO_STYLE = {
    "fct": dict(color="tab:gray", marker="s", label="FCT"),
    "proposed-no-coop": dict(color="tab:blue", marker="o", label="proposed, no cooperation"),
    "proposed-coop": dict(color="tab:red", marker="^", label="proposed, cooperative"),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("results_dir", type=pathlib.Path)
    ap.add_argument("-o", "--output", type=pathlib.Path, default=None,
                    help="output image (default: RESULTS_DIR/curves.png)")
    args = ap.parse_args()

    csv = args.results_dir / "records.csv"
    if not csv.is_file():
        print(f"error: {csv} not found", file=sys.stderr)
        return 1
    out = args.output or args.results_dir / "curves.png"

    df = pd.read_csv(csv)
    fig, (ax_deaf, ax_succ) = plt.subplots(1, 2, figsize=(11, 4.2))

    for algo, grp in df.groupby("algorithm"):
        style = ALGO_STYLE.get(algo, dict(marker="x", label=algo))
        ok = grp[grp["success"] == 1]
        deaf = ok.groupby("timeslot")["deafness_pct"].mean()
        ax_deaf.plot(deaf.index, deaf.values, markersize=4, **style)
        succ = grp.groupby("timeslot")["success"].mean()
        ax_succ.plot(succ.index, 100.0 * succ.values, markersize=4, **style)

    ax_deaf.set_xlabel("timeslot")
    ax_deaf.set_ylabel("average deafness [% of half beamwidth]")
    ax_deaf.set_title("deafness of successful estimations")
    ax_deaf.grid(alpha=0.3)
    ax_deaf.legend()

    ax_succ.set_xlabel("timeslot")
    ax_succ.set_ylabel("successful AoA estimations [%]")
    ax_succ.set_title("probability of successful AoA estimation")
    ax_succ.set_ylim(0, 105)
    ax_succ.grid(alpha=0.3)
    ax_succ.legend()

    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
