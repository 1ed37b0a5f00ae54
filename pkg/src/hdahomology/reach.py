"""Vertex reachability and its Galois concepts.

Reachability is the reflexive-transitive closure of the edge relation
(source of an edge reaches its target).  A concept is a pair of vertex
sets (S, T) closed under the induced Galois connection:

    sigma(T) = vertices that reach everything in T,
    tau(S)   = vertices reached from everything in S,

with S = sigma(T) and T = tau(S).  Every rectangle S' x T' inside the
reachability relation extends to a concept, which is why the pointing
relation only has to scan concepts.  Enumeration uses the NextClosure
scheme over extents in lectic order, so the output order is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConceptLimitExceeded, UnknownCube
from .precubical import PrecubicalSet


class ReachRelation:
    """Which vertex reaches which, as rows of reachable sets."""

    __slots__ = ("vertices", "_row", "_index")

    def __init__(self, vertices, rows):
        self.vertices = tuple(vertices)
        self._row = {v: frozenset(r) for v, r in zip(self.vertices, rows)}
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def reaches(self, x: str, y: str) -> bool:
        if x not in self._row:
            raise UnknownCube(repr(x))
        if y not in self._index:
            raise UnknownCube(repr(y))
        return y in self._row[x]

    def reachable_from(self, x: str) -> frozenset:
        if x not in self._row:
            raise UnknownCube(repr(x))
        return self._row[x]

    def pairs(self):
        for x in self.vertices:
            for y in sorted(self._row[x]):
                yield (x, y)


@lru_cache(maxsize=None)
def reachability(P: PrecubicalSet) -> ReachRelation:
    verts = P.cells(0)
    succ = {v: {v} for v in verts}
    for e in P.cells(1):
        succ[P.source(e)].add(P.target(e))
    rows = {}
    for v in verts:
        seen = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in succ[u]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        rows[v] = seen
    return ReachRelation(verts, [rows[v] for v in verts])


def sigma(R: ReachRelation, targets) -> frozenset:
    """Vertices that reach every vertex of `targets`."""
    targets = tuple(targets)
    return frozenset(v for v in R.vertices
                     if all(R.reaches(v, t) for t in targets))


def tau(R: ReachRelation, sources) -> frozenset:
    """Vertices reached from every vertex of `sources`."""
    sources = tuple(sources)
    return frozenset(w for w in R.vertices
                     if all(R.reaches(s, w) for s in sources))


@dataclass(frozen=True)
class Concept:
    extent: frozenset
    intent: frozenset

    def sorted_extent(self):
        return tuple(sorted(self.extent))

    def sorted_intent(self):
        return tuple(sorted(self.intent))


def concepts(R: ReachRelation, limit: int = 100_000) -> tuple[Concept, ...]:
    """All Galois-closed pairs, in lectic order of extents.

    The first concept has intent = all vertices, the last has extent =
    all vertices (they coincide on one-vertex strongly connected data).
    """
    verts = R.vertices
    n = len(verts)
    full = frozenset(range(n))

    def close(idx: frozenset) -> frozenset:
        t = tau(R, (verts[i] for i in idx))
        return frozenset(R._index[v] for v in sigma(R, t))

    def emit(idx: frozenset) -> Concept:
        extent = frozenset(verts[i] for i in idx)
        return Concept(extent, tau(R, extent))

    out = []
    current = close(frozenset())
    out.append(emit(current))
    while current != full:
        for i in reversed(range(n)):
            if i in current:
                continue
            below = frozenset(j for j in current if j < i)
            closed = close(below | {i})
            if all(j in below for j in closed if j < i):
                current = closed
                break
        else:
            raise AssertionError("lectic successor search failed")
        out.append(emit(current))
        if len(out) > limit:
            raise ConceptLimitExceeded(
                f"more than {limit} concepts; raise the limit to proceed")
    return tuple(out)


@lru_cache(maxsize=None)
def concepts_of(P: PrecubicalSet, limit: int = 100_000) -> tuple[Concept, ...]:
    return concepts(reachability(P), limit)
