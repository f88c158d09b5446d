"""ESD threshold against alpha for every family/code pair with entanglement.

    python scripts/esd_scan.py --points 17 > esd_scan.csv
"""

import argparse
import sys

import numpy as np

from esdqec.experiments import CODES, concurrence_fn
from esdqec.measures import esd_threshold


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=17)
    parser.add_argument("--beta", type=float, default=0.0)
    args = parser.parse_args()

    alphas = np.linspace(0, np.pi / 2, args.points + 2)[1:-1]
    print("family,alpha,code,gamma_star")
    for family in ("phi", "psi"):
        for alpha in alphas:
            for code in CODES:
                t = esd_threshold(concurrence_fn(family, alpha, args.beta, code), tol=1e-5, step=5e-3)
                print(f"{family},{alpha:.17g},{code},{t:.8f}")
                sys.stdout.flush()


if __name__ == "__main__":
    main()
