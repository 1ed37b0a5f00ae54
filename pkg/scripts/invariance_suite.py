#!/usr/bin/env python3
"""Randomized invariance experiment for the pointing relation.

Draws random precubical sets, refines each along random per-edge
counts, and compares the pointing relation between every ordered pair
of homology generators before and after the refinement.  The two
relations must agree exactly; any disagreement is printed and counted.

Run from the repository root:  python3 scripts/invariance_suite.py
"""
import argparse
import itertools
import os
import random
import sys
import time
from dataclasses import dataclass

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hdahomology.homology import (homology_presentation, pushforward_class,
                                  zero_class)
from hdahomology.hograph import points_to
from hdahomology.randgen import random_precubical, random_subdivision


@dataclass(frozen=True)
class SuiteConfig:
    instances: int = 200
    seed: int = 0
    max_cells: int = 12
    max_count: int = 3
    verbose: bool = False


def named_classes(P):
    out = [("zero", zero_class(P))]
    out += [(name, cls) for name, cls, _ in
            homology_presentation(P).generators()]
    return out


def run_instance(cfg, index):
    P = random_precubical(random.Random(cfg.seed + index),
                          max_cells=cfg.max_cells)
    Q, f = random_subdivision(random.Random(cfg.seed + index + 1_000_000),
                              P, max_count=cfg.max_count)
    named = named_classes(P)
    mismatches = []
    for (na, a), (nb, b) in itertools.product(named, repeat=2):
        src = points_to(P, a, b)
        tgt = points_to(Q, pushforward_class(f, a), pushforward_class(f, b))
        if src != tgt:
            mismatches.append((na, nb, src, tgt))
    size = sum(len(P.cells(n)) for n in range(P.dim + 1))
    refined = sum(len(Q.cells(n)) for n in range(Q.dim + 1))
    return size, refined, len(named) ** 2, mismatches


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-cells", type=int, default=12)
    parser.add_argument("--max-count", type=int, default=3)
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args(argv)
    cfg = SuiteConfig(args.instances, args.seed, args.max_cells,
                      args.max_count, args.verbose)

    t0 = time.time()
    pairs = 0
    cells = 0
    refined_cells = 0
    failures = 0
    for i in range(cfg.instances):
        size, refined, compared, mismatches = run_instance(cfg, i)
        pairs += compared
        cells += size
        refined_cells += refined
        if mismatches:
            failures += 1
            for na, nb, src, tgt in mismatches:
                print(f"instance {i}: ({na}, {nb}) points_to "
                      f"{src} in the source but {tgt} in the refinement")
        elif cfg.verbose:
            print(f"instance {i}: {size} -> {refined} cells, "
                  f"{compared} pairs agree")
    dt = time.time() - t0

    print(f"instances        {cfg.instances}")
    print(f"ordered pairs    {pairs}")
    print(f"avg cells        {cells / max(1, cfg.instances):.1f} -> "
          f"{refined_cells / max(1, cfg.instances):.1f}")
    print(f"failures         {failures}")
    print(f"elapsed          {dt:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
