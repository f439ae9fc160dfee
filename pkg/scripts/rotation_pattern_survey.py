"""How often do random cut-free segment triples show the wedge pattern?

For each sampled triple A, B, C of pairwise non-crossing segments with
A ⊴ B ⊴ C, test the orientation pair ([x1, y1, z2] counterclockwise,
[x2, y2, z1] clockwise) for the three rotations (A,B,C), (B,C,A),
(C,A,B), where x1 is the black and x2 the white end. Also counts the
same-orientation variants. Prints how many triples satisfy the pattern
for one, two and all three rotations.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from bimatch.geom import orient_xy, segments_cross_xy


@dataclass
class Config:
    samples: int = 200_000
    bound: int = 50
    seed: int = 0


def _precedes(a, b):
    (aw, ab), (bw, bb) = a, b
    return (orient_xy(aw, ab, bw) < 0 and orient_xy(aw, ab, bb) < 0
            and orient_xy(bw, bb, aw) > 0 and orient_xy(bw, bb, ab) > 0)


def _pattern(x, y, z, s1, s2):
    return orient_xy(x[1], y[1], z[0]) == s1 and orient_xy(x[0], y[0], z[1]) == s2


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    b = cfg.bound

    def seg():
        w = (rng.randint(-b, b), rng.randint(-b, b))
        return (w, (w[0] + rng.randint(-b // 5, b // 5), w[1] + rng.randint(1, b)))

    tallies = {"ccw/cw": Counter(), "ccw/ccw": Counter(), "cw/cw": Counter()}
    linear = 0
    for _ in range(cfg.samples):
        t = [seg() for _ in range(3)]
        pts = [p for s in t for p in s]
        if len(set(pts)) < 6 or any(orient_xy(pts[i], pts[j], pts[k]) == 0
                                    for i in range(6) for j in range(i + 1, 6)
                                    for k in range(j + 1, 6)):
            continue
        if any(segments_cross_xy(*t[i], *t[j]) for i in range(3) for j in range(i + 1, 3)):
            continue
        t.sort(key=lambda s: sum(_precedes(s, o) for o in t), reverse=True)
        if not (_precedes(t[0], t[1]) and _precedes(t[1], t[2])):
            continue
        linear += 1
        rots = [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])]
        for name, (s1, s2) in (("ccw/cw", (1, -1)), ("ccw/ccw", (1, 1)), ("cw/cw", (-1, -1))):
            tallies[name][sum(_pattern(x, y, z, s1, s2) for x, y, z in rots)] += 1
    return {"linear": linear, **tallies}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--bound", type=int, default=Config.bound)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    res = run(Config(args.samples, args.bound, args.seed))
    print("linear triples sampled: %d" % res["linear"])
    for name in ("ccw/cw", "ccw/ccw", "cw/cw"):
        c = res[name]
        print("%-8s rotations satisfied: 1 -> %d, 2 -> %d, 3 -> %d" % (name, c[1], c[2], c[3]))


if __name__ == "__main__":
    main()
