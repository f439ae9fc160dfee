"""Timing of the uniqueness test on parallel instances.

Reports construction and decision time per n (best of --reps runs, GC
paused) and the decision-time ratio between consecutive sizes. With
--shuffle the constructed matching is presented to the sorter in random
order, which defeats the presorted fast path of the sort and shows its
n log n behaviour.
"""

import argparse
import gc
import random
import time
from dataclasses import dataclass, field

from bimatch.classify import drum_property_check, is_unique, sort_by_sidedness
from bimatch.construct import build_matching
from bimatch.matching import BRMatching
from bimatch.testlab import gen_parallel


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [1000, 10_000, 100_000])
    reps: int = 3
    shuffle: bool = False
    seed: int = 0


def _best(fn, reps):
    best = None
    for _ in range(reps):
        gc.collect()
        gc.disable()
        try:
            out = fn()
        finally:
            gc.enable()
        best = out if best is None else tuple(min(a, b) for a, b in zip(best, out))
    return best


def measure(n: int, cfg: Config) -> tuple[float, float]:
    ps = gen_parallel(n).points
    if not cfg.shuffle:
        def once():
            r = is_unique(ps)
            assert r.unique
            return r.timings["build"], r.timings["decide"]
        return _best(once, cfg.reps)

    def shuffled():
        t0 = time.perf_counter()
        m = build_matching(ps)
        segs = list(m.segments)
        random.Random(cfg.seed).shuffle(segs)
        m = BRMatching(ps, segs, validate=False)
        t1 = time.perf_counter()
        assert drum_property_check(m, sort_by_sidedness(m))
        return t1 - t0, time.perf_counter() - t1
    return _best(shuffled, cfg.reps)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=Config().sizes)
    ap.add_argument("--reps", type=int, default=Config.reps)
    ap.add_argument("--shuffle", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.sizes, args.reps, args.shuffle)
    prev = None
    print("%8s %9s %9s %7s" % ("n", "build s", "decide s", "ratio"))
    for n in cfg.sizes:
        b, d = measure(n, cfg)
        ratio = "" if prev is None else "%.1f" % (d / prev)
        print("%8d %9.3f %9.3f %7s" % (n, b, d, ratio))
        prev = d


if __name__ == "__main__":
    main()
