"""Solve w(tau, y) = kappa for seeded random inputs and report timing and failures."""
import argparse
import time

from plroots.constructions import BumpConfig, kappa_y, random_equation_inputs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--breakpoints", type=int, default=3)
    ap.add_argument("--denominator", type=int, default=64)
    args = ap.parse_args()
    cfg = BumpConfig(args.breakpoints, args.denominator)
    start = time.perf_counter()
    bad = []
    for seed in range(args.seed, args.seed + args.trials):
        b = kappa_y(*random_equation_inputs(seed, cfg))
        if not b.verdict:
            bad.append((seed, [r.name for r in b.rows if not r.ok]))
    dt = time.perf_counter() - start
    print(f"{args.trials - len(bad)}/{args.trials} pass in {dt:.2f}s ({dt / args.trials * 1000:.0f} ms per trial)")
    for seed, names in bad:
        print(f"seed {seed}: {names}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
