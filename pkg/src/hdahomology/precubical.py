"""Finite precubical sets.

A precubical set is a graded set of cubes together with face maps

    d_i^k : P_n -> P_{n-1},   1 <= i <= n,  k in {0, 1},

subject to d_i^k d_j^l = d_{j-1}^l d_i^k for i < j.  Cubes are identified
by strings; the total order (degree, identifier) fixes every matrix basis
and every tie-break in the package.

>>> P = build_precubical([("v", 0, (), ()), ("a", 1, ("v",), ("v",))])
>>> P.degree("a"), P.face("a", 1, 0)
(1, 'v')
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (DegreeMismatch, DuplicateId, EndpointMismatch,
                     IdentityViolation, MissingFace, NotFaceClosed, TooLarge,
                     UnknownCube)

DEFAULT_CUBE_LIMIT = 100_000


class PrecubicalSet:
    """Validated, immutable precubical set.

    Construct through :func:`build_precubical`; direct instantiation skips
    validation and is reserved for internal use.
    """

    __slots__ = ("_degree", "_faces", "_by_degree", "_closure_cache")

    def __init__(self, degree, faces, by_degree):
        self._degree = degree          # id -> n
        self._faces = faces            # id -> (d0 tuple, d1 tuple), degree >= 1
        self._by_degree = by_degree    # n -> sorted id tuple
        self._closure_cache = {}

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return len(self._degree)

    def __contains__(self, cube):
        return cube in self._degree

    def __iter__(self) -> Iterator[str]:
        for n in sorted(self._by_degree):
            yield from self._by_degree[n]

    @property
    def dim(self) -> int:
        return max(self._by_degree) if self._by_degree else -1

    def degree(self, cube: str) -> int:
        try:
            return self._degree[cube]
        except KeyError:
            raise UnknownCube(cube) from None

    def cells(self, n: int) -> tuple[str, ...]:
        """All degree-n cubes in identifier order."""
        return self._by_degree.get(n, ())

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.cells(0)

    @property
    def edges(self) -> tuple[str, ...]:
        return self.cells(1)

    def face(self, cube: str, i: int, k: int) -> str:
        """d_i^k of a positive-degree cube, i in 1..degree."""
        n = self.degree(cube)
        if not 1 <= i <= n:
            raise DegreeMismatch(f"axis {i} out of range for {cube!r} (degree {n})")
        return self._faces[cube][k][i - 1]

    def faces_of(self, cube: str):
        """(d0 tuple, d1 tuple) of a cube, both empty for vertices."""
        return self._faces.get(cube, ((), ()))

    def source(self, edge: str) -> str:
        return self.face(edge, 1, 0)

    def target(self, edge: str) -> str:
        return self.face(edge, 1, 1)

    def closure_cells(self, cube: str) -> frozenset[str]:
        """All iterated faces of a cube, the cube included."""
        cached = self._closure_cache.get(cube)
        if cached is None:
            seen = {cube}
            stack = [cube]
            while stack:
                d0, d1 = self.faces_of(stack.pop())
                for y in d0 + d1:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            cached = self._closure_cache[cube] = frozenset(seen)
        return cached

    def closure_vertices(self, cube: str) -> frozenset[str]:
        return frozenset(y for y in self.closure_cells(cube)
                         if self._degree[y] == 0)


def build_precubical(declaration: Iterable, limit: int = DEFAULT_CUBE_LIMIT) -> PrecubicalSet:
    """Validate a cube declaration and return the precubical set.

    Each record is either a mapping with keys ``id``, ``dim``, ``d0``,
    ``d1`` or a tuple ``(id, dim, d0, d1)``; the face lists give
    ``d_1^k .. d_n^k`` and are omitted or empty for vertices.
    """
    degree: dict[str, int] = {}
    faces: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {}
    for rec in declaration:
        if isinstance(rec, Mapping):
            cid, n = rec["id"], rec["dim"]
            d0, d1 = rec.get("d0", ()), rec.get("d1", ())
        else:
            cid, n, d0, d1 = rec
        cid = str(cid)
        if cid in degree:
            raise DuplicateId(cid)
        if not isinstance(n, int) or n < 0:
            raise DegreeMismatch(f"{cid!r}: bad degree {n!r}")
        d0, d1 = tuple(d0), tuple(d1)
        if len(d0) != n or len(d1) != n:
            raise DegreeMismatch(
                f"{cid!r}: degree {n} needs {n} faces per side, "
                f"got {len(d0)}/{len(d1)}")
        degree[cid] = n
        if n > 0:
            faces[cid] = (d0, d1)
    if len(degree) > limit:
        raise TooLarge(f"{len(degree)} cubes exceeds limit {limit}")

    for cid, (d0, d1) in faces.items():
        for y in d0 + d1:
            if y not in degree:
                raise MissingFace(f"{cid!r} -> {y!r}")
            if degree[y] != degree[cid] - 1:
                raise DegreeMismatch(
                    f"{cid!r} (degree {degree[cid]}) has face {y!r} "
                    f"of degree {degree[y]}")

    def fc(x, i, k):
        return faces[x][k][i - 1]

    for cid in faces:
        n = degree[cid]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in (0, 1):
                    for l in (0, 1):
                        left = fc(fc(cid, j, l), i, k)
                        right = fc(fc(cid, i, k), j - 1, l)
                        if left != right:
                            raise IdentityViolation(cid, i, j, k, l, left, right)

    by_degree = {}
    for cid, n in degree.items():
        by_degree.setdefault(n, []).append(cid)
    by_degree = {n: tuple(sorted(ids)) for n, ids in by_degree.items()}
    return PrecubicalSet(degree, faces, by_degree)


def subcube(P: PrecubicalSet, x: str, coords: Sequence) -> str:
    """Evaluate the characteristic morphism of x on a unit-cube cell.

    ``coords`` has one entry per axis of x: an integer 0 or 1 applies the
    corresponding face operator, anything else keeps the axis.  With all
    entries 0 this is the minimal corner of x.
    """
    n = P.degree(x)
    if len(coords) != n:
        raise DegreeMismatch(f"{x!r}: expected {n} coordinates")
    # Apply faces from the highest axis down so lower indices stay valid.
    for i in range(n, 0, -1):
        c = coords[i - 1]
        if isinstance(c, int):
            x = P.face(x, i, c)
    return x


class PrecubicalSubset:
    """A subset of cubes closed under all face maps."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: PrecubicalSet, members: Iterable[str]):
        members = frozenset(members)
        for x in members:
            if x not in parent:
                raise UnknownCube(x)
            d0, d1 = parent.faces_of(x)
            for y in d0 + d1:
                if y not in members:
                    raise NotFaceClosed(f"{x!r} in subset but face {y!r} is not")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", members)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __len__(self):
        return len(self.members)

    def __contains__(self, cube):
        return cube in self.members

    def __iter__(self):
        return iter(sorted(self.members,
                           key=lambda c: (self.parent.degree(c), c)))

    def __eq__(self, other):
        return (isinstance(other, PrecubicalSubset)
                and self.parent is other.parent
                and self.members == other.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __le__(self, other):
        if self.parent is not other.parent:
            raise ValueError("subsets of different parents")
        return self.members <= other.members

    def cells(self, n: int) -> tuple[str, ...]:
        return tuple(c for c in self.parent.cells(n) if c in self.members)

    @property
    def dim(self) -> int:
        return max((self.parent.degree(c) for c in self.members), default=-1)

    def union(self, other: "PrecubicalSubset") -> "PrecubicalSubset":
        if self.parent is not other.parent:
            raise ValueError("subsets of different parents")
        return PrecubicalSubset(self.parent, self.members | other.members)

    def intersection(self, other: "PrecubicalSubset") -> "PrecubicalSubset":
        if self.parent is not other.parent:
            raise ValueError("subsets of different parents")
        return PrecubicalSubset(self.parent, self.members & other.members)

    def to_precubical_set(self) -> PrecubicalSet:
        """The subset as a standalone complex (identifiers preserved)."""
        P = self.parent
        records = []
        for c in self:
            d0, d1 = P.faces_of(c)
            records.append((c, P.degree(c), d0, d1))
        return build_precubical(records)


def faces_closure(P: PrecubicalSet, seeds: Iterable[str]) -> PrecubicalSubset:
    """Smallest precubical subset of P containing the seeds."""
    out = set()
    for s in seeds:
        if s not in P:
            raise UnknownCube(s)
        out |= P.closure_cells(s)
    return PrecubicalSubset(P, out)


def full_subcomplex(P: PrecubicalSet, S: Iterable[str]) -> PrecubicalSubset:
    """Largest precubical subset all of whose vertices lie in S."""
    S = frozenset(S)
    for v in S:
        if v not in P or P.degree(v) != 0:
            raise UnknownCube(f"not a vertex: {v!r}")
    return PrecubicalSubset(
        P, (x for x in P if P.closure_vertices(x) <= S))


def interval(k: int, l: int) -> PrecubicalSet:
    """The complex of the integer interval from k to l.

    Vertices "k".."l"; edge "j+" runs from vertex j to vertex j+1.
    """
    if l < k:
        raise ValueError("empty interval")
    records = [(str(j), 0, (), ()) for j in range(k, l + 1)]
    records += [(f"{j}+", 1, (str(j),), (str(j + 1),)) for j in range(k, l)]
    return build_precubical(records)


def tensor(P: PrecubicalSet, Q: PrecubicalSet,
           limit: int = DEFAULT_CUBE_LIMIT) -> PrecubicalSet:
    """Tensor product.  Cells are pairs, degree adds, and the boundary acts
    on the left factor for axes up to deg(x) and on the right factor above.

    Pair identifiers are "(p,q)"; the builder rejects the rare id collision.
    """
    if len(P) * len(Q) > limit:
        raise TooLarge(f"{len(P)}*{len(Q)} cells exceeds limit {limit}")

    def pid(p, q):
        return f"({p},{q})"

    records = []
    for p in P:
        np_ = P.degree(p)
        pd0, pd1 = P.faces_of(p)
        for q in Q:
            nq = Q.degree(q)
            qd0, qd1 = Q.faces_of(q)
            d0 = tuple(pid(pd0[i], q) for i in range(np_)) + \
                tuple(pid(p, qd0[i]) for i in range(nq))
            d1 = tuple(pid(pd1[i], q) for i in range(np_)) + \
                tuple(pid(p, qd1[i]) for i in range(nq))
            records.append((pid(p, q), np_ + nq, d0, d1))
    return build_precubical(records)


@dataclass(frozen=True)
class Path:
    """A combinatorial path: a start vertex plus a chain of edges."""

    base: PrecubicalSet
    start: str
    edges: tuple[str, ...] = ()

    def __post_init__(self):
        P = self.base
        if P.degree(self.start) != 0:
            raise EndpointMismatch(f"start {self.start!r} is not a vertex")
        at = self.start
        for e in self.edges:
            if P.degree(e) != 1:
                raise EndpointMismatch(f"{e!r} is not an edge")
            if P.source(e) != at:
                raise EndpointMismatch(
                    f"edge {e!r} starts at {P.source(e)!r}, expected {at!r}")
            at = P.target(e)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> str:
        return self.start

    @property
    def target(self) -> str:
        return self.base.target(self.edges[-1]) if self.edges else self.start


def concat(omega: Path, nu: Path) -> Path:
    """Concatenation; the endpoints must match."""
    if omega.base is not nu.base:
        raise EndpointMismatch("paths live in different complexes")
    if omega.target != nu.source:
        raise EndpointMismatch(
            f"target {omega.target!r} != source {nu.source!r}")
    return Path(omega.base, omega.start, omega.edges + nu.edges)
