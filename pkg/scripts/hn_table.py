"""Print commutators [s_i, s_j] and their skew images in a chosen quotient of the Hall-Neumann group."""
import argparse

from plroots.hallneumann import HNContext, hn_commutator, hn_print, hn_skew_image, s_gen


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--X", default="", help="comma-separated indices k with u_k killed")
    ap.add_argument("--cofinite", action="store_true")
    args = ap.parse_args()
    X = {int(k) for k in args.X.split(",") if k.strip()}
    ctx = HNContext(frozenset(X), args.cofinite)
    print(f"context {ctx}")
    r = range(-args.bound, args.bound + 1)
    for i in r:
        for j in r:
            if i < j:
                c = hn_commutator(s_gen(i), s_gen(j), ctx)
                print(f"[s_{i}, s_{j}] = {hn_print(c):12s} skew: {hn_print(hn_skew_image(c, ctx))}")


if __name__ == "__main__":
    main()
