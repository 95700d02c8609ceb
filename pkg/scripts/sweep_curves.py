"""Generate the standard overlap-sweep CSV bundle.

Reproduces the three curve families discussed in the package docs:
pure two-mode splits, balanced even mixtures for n = 3..6, and
balanced odd mixtures for n = 3..8. Output columns come straight
from the `catcorr sweep` command so downstream plotting scripts can
consume either source interchangeably.
"""

import argparse
import pathlib
import sys

from catcorr.cli import main as cli_main


def run_sweep(args: list[str], out_path: pathlib.Path) -> None:
    code = cli_main([*args, "--out", str(out_path)])
    if code != 0:
        raise SystemExit(f"sweep failed ({code}): {' '.join(args)}")
    print(f"wrote {out_path}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=pathlib.Path,
                        default=pathlib.Path("sweeps"))
    parser.add_argument("--steps", type=int, default=401)
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    steps = [str(args.steps)]

    run_sweep(["sweep", "--pure", "--k", "1", "--n", "2", "--parity", "even",
               "--steps", *steps],
              args.out_dir / "pure_even_n2.csv")
    run_sweep(["sweep", "--pure", "--k", "1", "--n", "2", "--parity", "odd",
               "--p-stop", "0.999999", "--steps", *steps],
              args.out_dir / "pure_odd_n2.csv")
    for n in range(3, 7):
        run_sweep(["sweep", "--n", str(n), "--parity", "even", "--pair", "1", "2",
                   "--steps", *steps],
                  args.out_dir / f"mixed_even_n{n}.csv")
    for n in range(3, 9):
        run_sweep(["sweep", "--n", str(n), "--parity", "odd", "--pair", "1", "2",
                   "--p-stop", "0.999999", "--steps", *steps],
                  args.out_dir / f"mixed_odd_n{n}.csv")


if __name__ == "__main__":
    sys.exit(main())
