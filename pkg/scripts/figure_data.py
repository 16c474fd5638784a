#!/usr/bin/env python3
"""Regenerate the CSV datasets behind the standard plots.

Writes one file per dataset into --outdir (default ./out):
  elasticity scatter and delta-set scatter for <7,10,12>,
  delta-set scatter for <6,9,20>,
  max/min factorization lengths for <7,10,12>,
  length-multiset histograms for 1400 in <5,7,8> and 3960 in <5,8,9,11>.
"""

import argparse
import csv
import pathlib

from numsgps import (
    NumericalSemigroup,
    delta_sequence,
    elasticity_profile,
    length_multiset,
    max_length,
    min_length,
)


def write_csv(path, header, rows):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out")
    parser.add_argument("--elasticity-max", type=int, default=2000)
    parser.add_argument("--delta-max", type=int, default=1500)
    args = parser.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    s712 = NumericalSemigroup.from_generators([7, 10, 12])
    mcnugget = NumericalSemigroup.from_generators([6, 9, 20])

    write_csv(
        outdir / "elasticity_7_10_12.csv",
        ("n", "rho_num", "rho_den", "rho_float"),
        [
            (n, r.numerator, r.denominator, float(r))
            for n, r in elasticity_profile(s712, args.elasticity_max)
        ],
    )

    for S, name in ((s712, "7_10_12"), (mcnugget, "6_9_20")):
        write_csv(
            outdir / f"delta_scatter_{name}.csv",
            ("n", "d"),
            [
                (n, d)
                for n, deltas in delta_sequence(S, args.delta_max)
                for d in deltas
            ],
        )

    write_csv(
        outdir / "lengths_7_10_12.csv",
        ("n", "min_len", "max_len"),
        [
            (n, min_length(s712, n), max_length(s712, n))
            for n in range(1, 101)
            if s712.contains(n)
        ],
    )

    for gens, element in (([5, 7, 8], 1400), ([5, 8, 9, 11], 3960)):
        S = NumericalSemigroup.from_generators(gens)
        ms = length_multiset(S, element)
        name = "_".join(map(str, gens))
        write_csv(
            outdir / f"multiset_{name}_at_{element}.csv",
            ("length", "multiplicity"),
            sorted(ms.counts.items()),
        )


if __name__ == "__main__":
    main()
