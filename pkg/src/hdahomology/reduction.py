"""Removal of broken cubes from subdivided images.

Given a validated subdivision f: P -> Q and a finite subset A of Q, the
carrier complex c(A) collects the source cubes whose interiors meet A.
A cube x is broken when it lies in c(A) but the image of its closure is
not fully inside A; past-completeness asks that whenever a grid vertex
of R_x has its image in A, the whole lower grid box below that vertex
does too.  Under the past-completeness hypothesis, repeatedly removing
the cells carried by a broken top cube (A minus "everything whose
carrier is z") terminates in a subset with no broken cubes at all, and
each step preserves the homotopy type of the realisation; tests verify
Betti numbers across every step.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotTopCube, PreconditionViolated
from .grid import grid_vertices, lower_box
from .precubical import PrecubicalSubset, faces_closure
from .subdivision import SubdivisionMorphism, carrier_complex, image_subset


def top_cubes(X: PrecubicalSubset) -> frozenset:
    """Members of X not below any strictly higher member of X."""
    covered = set()
    for x in X.members:
        covered.update(X.parent.closure_cells(x) - {x})
    return frozenset(X.members - covered)


@lru_cache(maxsize=None)
def _closure_image(f: SubdivisionMorphism, x: str) -> frozenset:
    X = PrecubicalSubset(f.source, faces_closure(f.source, {x}))
    return image_subset(f, X).members


def is_broken(f: SubdivisionMorphism, x: str, A: PrecubicalSubset) -> bool:
    """In the carrier complex of A, but with closure image sticking out."""
    if x not in carrier_complex(f, A).members:
        return False
    return not _closure_image(f, x) <= A.members


def is_past_complete(f: SubdivisionMorphism, x: str, A: PrecubicalSubset) -> bool:
    """Every grid vertex of R_x whose image lies in A pulls its whole
    lower grid box into A.  Vertices are vacuously past-complete."""
    n = f.source.degree(x)
    if n == 0:
        return True
    shape = f.shapes[x]
    cmap = f.cell_maps[x]
    for w in grid_vertices(shape):
        if cmap[w] in A.members:
            if any(cmap[cell] not in A.members for cell in lower_box(w)):
                return False
    return True


def past_complete_violations(f: SubdivisionMorphism,
                             A: PrecubicalSubset) -> tuple[str, ...]:
    cA = carrier_complex(f, A)
    return tuple(sorted(x for x in cA.members
                        if not is_past_complete(f, x, A)))


def remove_top(f: SubdivisionMorphism, A: PrecubicalSubset,
               z: str) -> PrecubicalSubset:
    """A minus every cell carried by z; z must be a top cube of c(A)."""
    if z not in top_cubes(carrier_complex(f, A)):
        raise NotTopCube(f"{z!r} is not a top cube of the carrier complex")
    members = {a for a in A.members if f.carrier_table[a][0] != z}
    return PrecubicalSubset(f.target, members)


@dataclass(frozen=True)
class StepRecord:
    cube: str
    degree: int
    cells_before: int
    cells_after: int


def _broken_cubes(f, A):
    cA = carrier_complex(f, A)
    return cA, {x for x in cA.members if not _closure_image(f, x) <= A.members}


def reduce_with_trace(f: SubdivisionMorphism, A: PrecubicalSubset):
    """Run the removal loop; return the final subset and one record per
    removal, selecting the broken top cube of highest degree (then
    smallest identifier) at each step."""
    violations = past_complete_violations(f, A)
    if violations:
        raise PreconditionViolated(violations)
    trace = []
    for _ in range(len(A.members) + 1):
        cA, broken = _broken_cubes(f, A)
        if not broken:
            return A, tuple(trace)
        tops = top_cubes(cA)
        candidates = sorted(broken & tops,
                            key=lambda x: (-f.source.degree(x), x))
        if not candidates:
            raise AssertionError("broken cubes but no broken top cube")
        z = candidates[0]
        before = len(A.members)
        A = remove_top(f, A, z)
        trace.append(StepRecord(z, f.source.degree(z), before, len(A.members)))
    raise AssertionError("removal loop failed to terminate")


def reduce(f: SubdivisionMorphism, A: PrecubicalSubset) -> PrecubicalSubset:
    """The fixed point itself: no cube of P is broken in the result."""
    return reduce_with_trace(f, A)[0]
