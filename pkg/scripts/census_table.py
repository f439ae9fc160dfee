"""Count distinct circular sidedness relations of radial matchings.

Prints n, the count, the closed form 2^(n-1) - n and the time taken.
"""

import argparse
import time
from dataclasses import dataclass

from bimatch.classify import census_sidedness_relations


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 14


def run(cfg: Config) -> list[tuple[int, int, float]]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        c = census_sidedness_relations(n)
        rows.append((n, c, time.perf_counter() - t0))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    args = ap.parse_args()
    print("%3s %8s %8s %8s" % ("n", "count", "formula", "seconds"))
    for n, c, dt in run(Config(args.n_min, args.n_max)):
        print("%3d %8d %8d %8.2f" % (n, c, 2 ** (n - 1) - n, dt))


if __name__ == "__main__":
    main()
