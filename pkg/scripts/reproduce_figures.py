"""Write the fidelity/concurrence datasets behind Figs. 1-4 as CSV.

Every panel uses beta = 0 and alpha = pi/6 (a) or pi/4 (b):

    fig1: fidelity,    phi and zeta, codes none / local41 / nonlocal62
    fig2: concurrence, phi,          codes none / local41 / nonlocal62
    fig3: fidelity,    psi and xi,   codes none / local41 / nonlocal62
    fig4: concurrence, psi,          codes none / local41 / nonlocal62

One file per (family, alpha, code) with columns gamma,fidelity,concurrence;
``index.csv`` maps figure panels onto files.

    python scripts/reproduce_figures.py --out data/figures --steps 201
"""

import argparse
import csv
import time
from pathlib import Path

import numpy as np

from esdqec.experiments import CODES, SweepConfig, run_sweep

PANELS = {"a": ("pi6", np.pi / 6), "b": ("pi4", np.pi / 4)}
FIGURES = {
    "fig1": ("fidelity", ("phi", "zeta")),
    "fig2": ("concurrence", ("phi",)),
    "fig3": ("fidelity", ("psi", "xi")),
    "fig4": ("concurrence", ("psi",)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="data/figures")
    parser.add_argument("--steps", type=int, default=201)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    index = []
    done = set()
    for fig, (quantity, families) in FIGURES.items():
        for panel, (tag, alpha) in PANELS.items():
            for family in families:
                for code in CODES:
                    name = f"{family}_alpha-{tag}_{code}.csv"
                    index.append((fig + panel, quantity, family, tag, code, name))
                    if name in done:
                        continue
                    t0 = time.perf_counter()
                    res = run_sweep(SweepConfig(family, alpha, 0.0, code, gamma_steps=args.steps))
                    (out / name).write_text(res.to_csv())
                    done.add(name)
                    print(f"{name}: {time.perf_counter() - t0:.1f}s")

    with open(out / "index.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["panel", "quantity", "family", "alpha", "code", "file"])
        writer.writerows(index)


if __name__ == "__main__":
    main()
