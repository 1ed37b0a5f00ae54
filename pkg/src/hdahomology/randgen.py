"""Seeded random generators for the property suites.

Everything takes an explicit random.Random so runs are reproducible.
Random complexes are built from parts that are valid by construction:
vertices, arbitrary edges (loops allowed), and squares assembled from
edge quadruples that satisfy the corner identities.  Edge counts for
subdivisions are drawn per parallel-edge class, and label words get the
exact length of their class count so they split on subdivision.
"""
from __future__ import annotations

import random
import string
from typing import Mapping, Optional

from .grid import grid_vertices, lower_box
from .hda import HDA, validate_hda
from .intlinalg import IntMatrix
from .precubical import Path, PrecubicalSet, PrecubicalSubset, build_precubical
from .reduction import is_past_complete, past_complete_violations
from .subdivision import SubdivisionMorphism, carrier_complex, subdivide


def random_matrix(rng: random.Random, rows: int, cols: int,
                  lo: int = -9, hi: int = 9) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)]
                      for _ in range(rows)], ncols=cols)


def random_precubical(rng: random.Random, max_cells: int = 12,
                      dim: int = 2, max_vertices: int = 4,
                      acyclic: bool = False) -> PrecubicalSet:
    """A valid random complex: vertices, then edges, then squares glued
    from compatible edge quadruples.  With `acyclic`, edges only run
    from lower to higher vertex index, so reachability is a partial
    order."""
    n_vertices = rng.randint(1, max(1, min(max_vertices, max_cells)))
    records = [(f"v{i}", 0, (), ()) for i in range(n_vertices)]
    vertices = [r[0] for r in records]
    budget = max_cells - n_vertices
    edges = []
    if dim >= 1 and budget > 0:
        n_edges = rng.randint(0, budget)
        for i in range(n_edges):
            a, b = rng.choice(vertices), rng.choice(vertices)
            if acyclic:
                if n_vertices == 1:
                    break
                while a == b:
                    a, b = rng.choice(vertices), rng.choice(vertices)
                if a > b:
                    a, b = b, a
            records.append((f"e{i}", 1, (a,), (b,)))
            edges.append((f"e{i}", a, b))
        budget -= n_edges
    if dim >= 2 and budget > 0 and edges:
        wanted = rng.randint(0, budget)
        made = 0
        for _ in range(40 * wanted):
            if made >= wanted:
                break
            # Axis 1 faces are L (at x=0) and R (at x=1); axis 2 faces
            # are B (at y=0) and T (at y=1).  Corners must chain.
            L, Lsrc, Ltgt = rng.choice(edges)
            bottoms = [e for e in edges if e[1] == Lsrc]
            if not bottoms:
                continue
            B, Bsrc, Btgt = rng.choice(bottoms)
            rights = [e for e in edges if e[1] == Btgt]
            if not rights:
                continue
            R, Rsrc, Rtgt = rng.choice(rights)
            tops = [e for e in edges if e[1] == Ltgt and e[2] == Rtgt]
            if not tops:
                continue
            T = rng.choice(tops)[0]
            records.append((f"s{made}", 2, (L, B), (R, T)))
            made += 1
    return build_precubical(records)


def _parallel_classes(P: PrecubicalSet) -> dict:
    """Union-find over edges: opposite faces of every square united."""
    parent = {e: e for e in P.cells(1)}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for s in P.cells(2):
        d0, d1 = P.faces_of(s)
        for a, b in ((d0[0], d1[0]), (d0[1], d1[1])):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return {e: find(e) for e in P.cells(1)}


def random_counts(rng: random.Random, P: PrecubicalSet,
                  max_count: int = 3) -> dict:
    """Per-edge subdivision counts, constant on parallel classes."""
    classes = _parallel_classes(P)
    choice = {root: rng.randint(1, max_count)
              for root in sorted(set(classes.values()))}
    return {e: choice[root] for e, root in classes.items()}


def random_subdivision(rng: random.Random, P: PrecubicalSet,
                       max_count: int = 3):
    return subdivide(P, random_counts(rng, P, max_count))


def random_labelled_hda(rng: random.Random, P: PrecubicalSet,
                        counts: Optional[Mapping[str, int]] = None) -> HDA:
    """Labels drawn per parallel class; when counts are supplied, each
    word has exactly the class length so it splits on subdivision."""
    classes = _parallel_classes(P)
    words = {}
    for root in sorted(set(classes.values())):
        length = counts[root] if counts else rng.randint(1, 3)
        words[root] = "".join(rng.choice(string.ascii_lowercase[:6])
                              for _ in range(length))
    labels = {e: words[root] for e, root in classes.items()}
    vertices = P.cells(0)
    initial = {rng.choice(vertices)} if vertices else set()
    final = {rng.choice(vertices)} if vertices else set()
    return validate_hda(P, initial, final, labels)


def random_path(rng: random.Random, P: PrecubicalSet,
                max_len: int = 6) -> Path:
    vertices = P.cells(0)
    if not vertices:
        raise ValueError("no vertices to start from")
    out = {v: [] for v in vertices}
    for e in P.cells(1):
        out[P.source(e)].append(e)
    start = rng.choice(vertices)
    at = start
    edges = []
    for _ in range(rng.randint(0, max_len)):
        choices = sorted(out[at])
        if not choices:
            break
        e = rng.choice(choices)
        edges.append(e)
        at = P.target(e)
    return Path(P, start, tuple(edges))


def _box_image(f: SubdivisionMorphism, x: str, w) -> set:
    """All target cells of the lower grid box of x below vertex w."""
    if f.source.degree(x) == 0:
        return {f.vertex_map[x]}
    cmap = f.cell_maps[x]
    return {cmap[cell] for cell in lower_box(w)}


def past_complete_subset(rng: random.Random, f: SubdivisionMorphism,
                         seeds: int = 2) -> PrecubicalSubset:
    """Union of random lower-box images, repaired to past-completeness.

    Starting from a few random boxes, any carrier cube with a grid
    vertex inside the set but an incomplete lower box gets that box
    added, until no violation remains.  The result is face-closed and
    past-complete by construction; both are asserted.

    A cube whose grid is trivial (every count 1) can never end up
    broken, so the sampling leans on cubes with a genuine grid and on
    strict lower boxes; full boxes still arise from other seeds and
    from the repair loop."""
    P, Q = f.source, f.target
    members: set = set()
    cubes = [x for n in range(P.dim + 1) for x in P.cells(n)]
    breakable = [x for x in cubes
                 if P.degree(x) >= 1 and any(l > 1 for l in f.shapes[x])]
    for _ in range(rng.randint(1, max(1, seeds))):
        if not cubes:
            break
        pool = breakable if breakable and rng.random() < 0.8 else cubes
        x = rng.choice(pool)
        n = P.degree(x)
        if n == 0:
            members |= _box_image(f, x, ())
        else:
            shape = f.shapes[x]
            w = tuple(rng.randint(0, l) for l in shape)
            if w == shape and any(l > 1 for l in shape):
                axis = rng.choice([i for i, l in enumerate(shape) if l > 1])
                w = w[:axis] + (rng.randint(1, shape[axis] - 1),) \
                    + w[axis + 1:]
            members |= _box_image(f, x, w)
    changed = True
    while changed:
        changed = False
        A = PrecubicalSubset(Q, members)
        for x in sorted(carrier_complex(f, A).members):
            if P.degree(x) == 0 or is_past_complete(f, x, A):
                continue
            cmap = f.cell_maps[x]
            for w in sorted(grid_vertices(f.shapes[x])):
                if cmap[w] in members:
                    box = _box_image(f, x, w)
                    if not box <= members:
                        members |= box
                        changed = True
    A = PrecubicalSubset(Q, members)
    assert not past_complete_violations(f, A)
    return A
