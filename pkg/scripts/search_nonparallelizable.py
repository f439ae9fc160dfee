"""Random search for the frozen non-parallelizable fixture.

Looks for three almost vertical segments A, B, C (white ends below) whose
endpoints satisfy the wedge pattern for (A, B, C) reported by
`nonpar_orientation_pattern`, plus three auxiliary vertical segments,
such that the six segments form a linear matching that is the only
matching of its points.
Prints the coordinate rows to paste into testlab._NONPAR.
"""

import argparse
import random
from dataclasses import dataclass

from bimatch.classify import Linear, classify
from bimatch.geom import InputError, Point, PointSet, Color
from bimatch.matching import BRMatching, MatchingError
from bimatch.testlab import Instance, enumerate_all_matchings, nonpar_orientation_pattern


def candidate(rng, bound):
    rows = []
    for cx in (0, bound, 2 * bound):
        lo = rng.randint(-bound, 0)
        hi = rng.randint(1, bound)
        rows.append((cx + rng.randint(-3, 3), lo, "W"))
        rows.append((cx + rng.randint(-3, 3), hi, "B"))
    for _ in range(3):
        x = rng.randint(-bound, 3 * bound)
        lo = rng.randint(-2 * bound, 2 * bound)
        rows.append((x, lo, "W"))
        rows.append((x + rng.randint(-2, 2), lo + rng.randint(1, bound), "B"))
    return rows


@dataclass
class Config:
    seed: int = 0
    bound: int = 20
    tries: int = 200000


def search(cfg: Config):
    """First candidate rows that pass every filter, with the try count."""
    rng = random.Random(cfg.seed)
    for k in range(cfg.tries):
        rows = candidate(rng, cfg.bound)
        try:
            ps = PointSet([Point(x, y, Color(c)) for x, y, c in rows])
            m = BRMatching(ps, [(2 * i, 2 * i + 1) for i in range(6)])
        except (InputError, MatchingError):
            continue
        if not all(nonpar_orientation_pattern(Instance(ps, m))[:2]):
            continue
        if not isinstance(classify(m), Linear):
            continue
        if enumerate_all_matchings(ps).count != 1:
            continue
        return rows, k
    return None, cfg.tries


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--bound", type=int, default=Config.bound)
    ap.add_argument("--tries", type=int, default=Config.tries)
    args = ap.parse_args()
    rows, k = search(Config(args.seed, args.bound, args.tries))
    if rows is None:
        print("nothing found")
        return
    print("# found after %d tries" % k)
    for r in rows:
        print("    %r," % (r,))


if __name__ == "__main__":
    main()
