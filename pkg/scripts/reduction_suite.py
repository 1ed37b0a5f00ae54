#!/usr/bin/env python3
"""Randomized experiment for the broken-cube removal engine.

Draws random refinements together with past-complete subsets of the
refined complex, runs the removal loop to its fixed point, and checks
that every step preserves Betti numbers and that the fixed point is
the image of its own carrier complex.  Prints a step histogram.

Run from the repository root:  python3 scripts/reduction_suite.py
"""
import argparse
import os
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hdahomology.homology import betti_numbers
from hdahomology.randgen import (past_complete_subset, random_precubical,
                                 random_subdivision)
from hdahomology.reduction import reduce_with_trace
from hdahomology.subdivision import carrier_complex, image_subset


@dataclass(frozen=True)
class SuiteConfig:
    instances: int = 100
    seed: int = 0
    max_cells: int = 14
    max_count: int = 3
    boxes: int = 4


def padded_betti(X, top_dim):
    b = betti_numbers(X.to_precubical_set())
    return b + (0,) * (top_dim + 1 - len(b))


def run_instance(cfg, index):
    rng = random.Random(cfg.seed + index)
    P = random_precubical(rng, max_cells=cfg.max_cells, max_vertices=8,
                          acyclic=index % 2 == 0)
    Q, f = random_subdivision(rng, P, max_count=cfg.max_count)
    A = past_complete_subset(rng, f, seeds=cfg.boxes)

    top_dim = Q.dim
    before = padded_betti(A, top_dim)
    final, trace = reduce_with_trace(f, A)
    after = padded_betti(final, top_dim)
    if before != after:
        raise AssertionError(
            f"instance {index}: Betti changed {before} -> {after}")
    fixed = image_subset(f, carrier_complex(f, final))
    if fixed.members != final.members:
        raise AssertionError(f"instance {index}: fixed point is not the "
                             f"image of its carrier complex")
    return len(A.members), len(final.members), len(trace)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-cells", type=int, default=14)
    parser.add_argument("--max-count", type=int, default=3)
    parser.add_argument("--boxes", type=int, default=4)
    args = parser.parse_args(argv)
    cfg = SuiteConfig(args.instances, args.seed, args.max_cells,
                      args.max_count, args.boxes)

    t0 = time.time()
    histogram = Counter()
    shed = 0
    for i in range(cfg.instances):
        start, end, steps = run_instance(cfg, i)
        histogram[steps] += 1
        shed += start - end
    dt = time.time() - t0

    print(f"instances        {cfg.instances}")
    print("steps histogram  " + "  ".join(
        f"{k}:{histogram[k]}" for k in sorted(histogram)))
    print(f"cells removed    {shed}")
    print(f"elapsed          {dt:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
