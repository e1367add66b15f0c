"""Build several n-th roots of one bump from different choices and show where they differ."""
import argparse
import random
from fractions import Fraction

from plroots.constructions import random_pushing_bump
from plroots.constructions.inputs import random_root
from plroots.plcore import IntervalQ, disagreement


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--choices", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    base = random_pushing_bump(rng, 0, 1)
    print(f"base: {base}")
    roots = [random_root(rng, base, args.n) for _ in range(args.choices)]
    for i, r in enumerate(roots):
        ok = r.fundamental_domain_check() is None
        print(f"choice {i}: anchor {r.anchor}, divisions {[str(s) for s in r.divisions]}, g^{args.n} = base: {ok}")
    ref = roots[0]
    for i, r in enumerate(roots[1:], 1):
        D = IntervalQ.closed(min(ref.divisions[0], r.divisions[0]), max(ref.divisions[-1], r.divisions[-1]))
        x = disagreement(ref, r, D)
        if x is None:
            print(f"choice {i} equals choice 0")
        else:
            print(f"choice {i} vs 0 at {x}: {ref(x)} != {r(x)}")
    x = Fraction(1, 3)
    print(f"orbit of {x} under choice 0:", [str(v) for v in _orbit(ref, x, 2 * args.n)])


def _orbit(f, x, k):
    out = [x]
    for _ in range(k):
        out.append(f(out[-1]))
    return out


if __name__ == "__main__":
    main()
