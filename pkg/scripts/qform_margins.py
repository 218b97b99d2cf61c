#!/usr/bin/env python3
"""Margins of the mode-n quadratic forms over the definiteness region.

For each mode n != 0, 1 the script records the minimum over the (lam, rho)
grid of A_n, B_n and the discriminant A_n B_n - C_n^2; all three stay
strictly positive for rho >= sqrt(7) and 0 < lam <= 1, which is what makes
the large-radius integral inequality termwise verifiable.

    python scripts/qform_margins.py --nmax 64 --out margins.csv
"""
import argparse
import math

import numpy as np

from ringmin import qform_coeffs
from ringmin.verify import SQRT7


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="margins.csv")
    ap.add_argument("--nmax", type=int, default=64)
    ap.add_argument("--rho-max", type=float, default=20.0)
    args = ap.parse_args()

    lams = np.arange(1, 21) * 0.05
    rhos = np.exp(np.linspace(math.log(SQRT7), math.log(args.rho_max), 50))
    rows = ["n,min_A,min_B,min_disc,arg_lam,arg_rho"]
    overall = math.inf
    for n in range(-args.nmax, args.nmax + 1):
        if n in (0, 1):
            continue
        best = (math.inf, math.inf, math.inf)
        arg = (None, None)
        for lam in lams:
            for rho in rhos:
                q = qform_coeffs(n, float(rho), float(lam))
                if q.discriminant < best[2]:
                    arg = (float(lam), float(rho))
                best = (
                    min(best[0], q.A),
                    min(best[1], q.B),
                    min(best[2], q.discriminant),
                )
        overall = min(overall, *best)
        rows.append(f"{n},{best[0]!r},{best[1]!r},{best[2]!r},{arg[0]!r},{arg[1]!r}")
    with open(args.out, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} modes to {args.out}; overall min {overall:.6e}")


if __name__ == "__main__":
    main()
