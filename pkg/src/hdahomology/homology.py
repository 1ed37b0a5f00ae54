"""Cellular homology of precubical sets.

The chain complex has one generator per cube and the boundary

    d x = sum_i (-1)^i (d_i^0 x - d_i^1 x),

so for an edge the boundary is target - source.  Coefficients are the
integers by default; a prime field is available through the Ring value.
Presentations (Betti numbers, torsion, generator cycles) come from Smith
normal form and are cached per complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional, Sequence

from .errors import (DegreeMismatch, InvalidMorphism, NotACycle,
                     SubsetMismatch)
from .intlinalg import (FpRowSpace, IntegerLattice, IntMatrix, fp_kernel_basis,
                        fp_solve, is_prime, kernel_basis, lattice_member, snf)
from .precubical import PrecubicalSet, PrecubicalSubset


@dataclass(frozen=True)
class Ring:
    """char 0 means the integers; a prime p means the field Z/p."""

    char: int = 0

    def __post_init__(self):
        if self.char and not is_prime(self.char):
            raise ValueError(f"characteristic {self.char} is not prime")

    def __str__(self):
        return "z" if self.char == 0 else f"fp:{self.char}"


ZZ = Ring(0)


def parse_ring(text: str) -> Ring:
    if text == "z":
        return ZZ
    if text.startswith("fp:"):
        return Ring(int(text[3:]))
    raise ValueError(f"unknown ring {text!r} (use 'z' or 'fp:<p>')")


@lru_cache(maxsize=None)
def boundary_matrix(P: PrecubicalSet, n: int) -> IntMatrix:
    """Matrix of the degree-n boundary, rows P_{n-1}, columns P_n."""
    if n < 1:
        raise DegreeMismatch("boundary_matrix needs n >= 1")
    lower = {c: i for i, c in enumerate(P.cells(n - 1))}
    cols = []
    for x in P.cells(n):
        col = [0] * len(lower)
        d0, d1 = P.faces_of(x)
        for i in range(1, n + 1):
            sign = -1 if i % 2 else 1
            col[lower[d0[i - 1]]] += sign
            col[lower[d1[i - 1]]] -= sign
        cols.append(col)
    return IntMatrix.from_columns(cols, len(lower))


@dataclass(frozen=True)
class ChainComplex:
    """Ordered bases with their boundary matrices; dd = 0 checked."""

    complex: PrecubicalSet
    bases: tuple[tuple[str, ...], ...]
    boundaries: tuple[IntMatrix, ...]   # boundaries[n] maps degree n+1 to n


def chain_complex(P: PrecubicalSet) -> ChainComplex:
    dim = P.dim
    bases = tuple(P.cells(n) for n in range(dim + 1))
    mats = tuple(boundary_matrix(P, n + 1) for n in range(dim))
    for n in range(len(mats) - 1):
        if not mats[n].mul(mats[n + 1]).is_zero():
            raise AssertionError(f"dd != 0 between degrees {n + 2} and {n}")
    return ChainComplex(P, bases, mats)


@dataclass(frozen=True)
class HomologyClass:
    """A chain with its cycle flag; equality of classes is tested modulo
    boundaries via class_reduce, not by vector equality."""

    complex: PrecubicalSet
    degree: int
    vector: tuple[int, ...]
    ring: Ring = ZZ
    is_cycle: bool = True


def homology_class(P: PrecubicalSet, degree: int, vector: Sequence[int],
                   ring: Ring = ZZ) -> HomologyClass:
    vector = tuple(int(v) for v in vector)
    if len(vector) != len(P.cells(degree)):
        raise DegreeMismatch(
            f"vector length {len(vector)} vs {len(P.cells(degree))} cells "
            f"in degree {degree}")
    if ring.char:
        vector = tuple(v % ring.char for v in vector)
    if degree > 0 and any(vector):
        image = boundary_matrix(P, degree).mul_vec(vector)
        if ring.char:
            image = tuple(v % ring.char for v in image)
        cycle = not any(image)
    else:
        cycle = True
    return HomologyClass(P, degree, vector, ring, cycle)


def class_from_cells(P: PrecubicalSet, degree: int,
                     coeffs: Mapping[str, int], ring: Ring = ZZ) -> HomologyClass:
    index = {c: i for i, c in enumerate(P.cells(degree))}
    vec = [0] * len(index)
    for cell, v in coeffs.items():
        vec[index[cell]] = v
    return homology_class(P, degree, vec, ring)


def zero_class(P: PrecubicalSet, degree: int = 0, ring: Ring = ZZ) -> HomologyClass:
    return HomologyClass(P, degree, (0,) * len(P.cells(degree)), ring, True)


def scale_class(alpha: HomologyClass, r: int) -> HomologyClass:
    vec = tuple(r * v for v in alpha.vector)
    if alpha.ring.char:
        vec = tuple(v % alpha.ring.char for v in vec)
    return HomologyClass(alpha.complex, alpha.degree, vec, alpha.ring,
                         alpha.is_cycle)


def add_classes(alpha: HomologyClass, beta: HomologyClass) -> HomologyClass:
    if alpha.complex is not beta.complex or alpha.degree != beta.degree \
            or alpha.ring != beta.ring:
        raise DegreeMismatch("classes are not addable")
    vec = tuple(a + b for a, b in zip(alpha.vector, beta.vector))
    if alpha.ring.char:
        vec = tuple(v % alpha.ring.char for v in vec)
    return HomologyClass(alpha.complex, alpha.degree, vec, alpha.ring,
                         alpha.is_cycle and beta.is_cycle)


@lru_cache(maxsize=None)
def boundary_lattice(P: PrecubicalSet, n: int, ring: Ring = ZZ):
    """The lattice (or row space) spanned by degree-(n+1) boundaries,
    inside the degree-n chain group."""
    width = len(P.cells(n))
    cols = boundary_matrix(P, n + 1).columns() if n < P.dim else []
    if ring.char:
        return FpRowSpace(width, ring.char, cols)
    return IntegerLattice(width, cols)


def class_reduce(P: PrecubicalSet, c: HomologyClass) -> tuple[int, ...]:
    """Canonical coset representative modulo boundaries.

    Two cycles get the same reduction exactly when their difference is a
    boundary, so this is an equality test for homology classes.
    """
    if c.complex is not P:
        raise SubsetMismatch("class belongs to a different complex")
    if not c.is_cycle:
        raise NotACycle("class_reduce needs a cycle")
    return boundary_lattice(P, c.degree, c.ring).reduce(c.vector)


# --------------------------------------------------------- presentations

@dataclass(frozen=True)
class DegreeData:
    degree: int
    betti: int
    torsion: tuple[int, ...]
    free_generators: tuple[tuple[int, ...], ...]
    torsion_generators: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class HomologyPresentation:
    complex: PrecubicalSet
    ring: Ring
    data: tuple[DegreeData, ...]

    def degree(self, n: int) -> DegreeData:
        if 0 <= n < len(self.data):
            return self.data[n]
        return DegreeData(n, 0, (), (), ())

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(d.betti for d in self.data)

    def generators(self):
        """(name, class, order) triples; order 0 means infinite."""
        out = []
        for d in self.data:
            vectors = [(v, 0) for v in d.free_generators]
            vectors += [(v, t) for t, v in d.torsion_generators]
            for i, (vec, order) in enumerate(vectors):
                cls = HomologyClass(self.complex, d.degree, vec, self.ring, True)
                out.append((f"H{d.degree}.g{i}", cls, order))
        return tuple(out)

    def class_by_name(self, name: str) -> HomologyClass:
        for gname, cls, _ in self.generators():
            if gname == name:
                return cls
        raise KeyError(name)


def _vector_norm(vec):
    support = sum(1 for x in vec if x)
    return (support, sum(abs(x) for x in vec), tuple(abs(x) for x in vec), vec)


def _lead_index(vec):
    return next((i for i, x in enumerate(vec) if x), len(vec))


def _canon_sign(lat, vec):
    vec = lat.reduce(vec)
    lead = next((x for x in vec if x), 0)
    if lead < 0:
        vec = lat.reduce([-x for x in vec])
    return vec


def _reduce_free_basis(lat, vectors):
    """Deterministic Gauss-style cleanup of the free generators.

    Any elementary transform keeps a valid basis of the free part, so we
    greedily replace g_i by the reduction of g_i +- g_j whenever that
    shrinks the (support, magnitude) norm.  This tends to split generators
    with disjoint geometric supports apart and makes output readable.
    """
    free = [_canon_sign(lat, v) for v in vectors]
    for _ in range(100):
        changed = False
        for i in range(len(free)):
            for j in range(len(free)):
                if i == j:
                    continue
                for sign in (1, -1):
                    cand = _canon_sign(
                        lat, [a + sign * b for a, b in zip(free[i], free[j])])
                    if _vector_norm(cand) < _vector_norm(free[i]):
                        free[i] = cand
                        changed = True
        if not changed:
            break
    free.sort(key=lambda v: (_lead_index(v), v))
    return free


def _presentation_degree_z(P, n):
    cells = P.cells(n)
    if not cells:
        return DegreeData(n, 0, (), (), ())
    if n == 0:
        K = IntMatrix.identity(len(cells))
    else:
        K = kernel_basis(boundary_matrix(P, n))
    k = K.ncols
    if n < P.dim:
        B = boundary_matrix(P, n + 1)
    else:
        B = IntMatrix.zero(len(cells), 0)
    # Coordinates of the boundary columns in the kernel basis; solvable
    # because the kernel basis is saturated and boundaries are cycles.
    coords = []
    for j in range(B.ncols):
        dec = lattice_member(K, B.column(j))
        if not dec.solvable:
            raise AssertionError("boundary escaped the kernel lattice")
        coords.append(dec.witness)
    M = IntMatrix.from_columns(coords, k)
    s = snf(M)
    diag = s.diagonal
    W = K.mul(s.uinv)
    lat = boundary_lattice(P, n, ZZ)
    free_idx = [j for j in range(k) if j >= len(diag) or diag[j] == 0]
    tors_idx = [j for j, d in enumerate(diag) if d > 1]
    free = _reduce_free_basis(lat, [W.column(j) for j in free_idx])
    torsion = tuple((diag[j], _canon_sign(lat, W.column(j))) for j in tors_idx)
    return DegreeData(n, len(free_idx), tuple(diag[j] for j in tors_idx),
                      tuple(free), torsion)


def _presentation_degree_fp(P, n, p):
    cells = P.cells(n)
    if not cells:
        return DegreeData(n, 0, (), (), ())
    if n == 0:
        K = IntMatrix.identity(len(cells))
    else:
        K = fp_kernel_basis(boundary_matrix(P, n), p)
    space = boundary_lattice(P, n, Ring(p))
    rank_b = space.rank
    gens = []
    probe = FpRowSpace(len(cells), p)
    for col in boundary_matrix(P, n + 1).columns() if n < P.dim else []:
        probe.add(col)
    for j in range(K.ncols):
        v = K.column(j)
        if probe.add(v):
            gens.append(_canon_sign(space, v))
    gens.sort(key=lambda v: (_lead_index(v), v))
    betti = K.ncols - rank_b
    if len(gens) != betti:
        raise AssertionError("prime-field rank bookkeeping failed")
    return DegreeData(n, betti, (), tuple(gens), ())


@lru_cache(maxsize=None)
def homology_presentation(P: PrecubicalSet, ring: Ring = ZZ) -> HomologyPresentation:
    data = []
    for n in range(P.dim + 1):
        if ring.char:
            data.append(_presentation_degree_fp(P, n, ring.char))
        else:
            data.append(_presentation_degree_z(P, n))
    return HomologyPresentation(P, ring, tuple(data))


def betti_numbers(P: PrecubicalSet, ring: Ring = ZZ) -> tuple[int, ...]:
    return homology_presentation(P, ring).betti


def euler_characteristic(P: PrecubicalSet) -> int:
    return sum((-1) ** n * len(P.cells(n)) for n in range(P.dim + 1))


# ----------------------------------------------------- image membership

@lru_cache(maxsize=None)
def _subset_complex(X: PrecubicalSubset) -> PrecubicalSet:
    return X.to_precubical_set()


@lru_cache(maxsize=None)
def image_cycle_matrix(P: PrecubicalSet, X: PrecubicalSubset, n: int,
                       ring: Ring = ZZ) -> IntMatrix:
    """Kernel basis of X's degree-n boundary, scattered into P coordinates.

    Its columns generate (modulo boundaries of P) the image of the
    degree-n homology of X inside that of P.
    """
    position = {c: i for i, c in enumerate(P.cells(n))}
    sub_cells = X.cells(n)
    if not sub_cells:
        return IntMatrix.zero(len(position), 0)
    Xc = _subset_complex(X)
    if n == 0:
        K_local = IntMatrix.identity(len(sub_cells))
    elif ring.char:
        K_local = fp_kernel_basis(boundary_matrix(Xc, n), ring.char)
    else:
        K_local = kernel_basis(boundary_matrix(Xc, n))
    cols = []
    for j in range(K_local.ncols):
        col = [0] * len(position)
        for cell, v in zip(sub_cells, K_local.column(j)):
            col[position[cell]] = v
        cols.append(col)
    return IntMatrix.from_columns(cols, len(position))


@lru_cache(maxsize=None)
def _image_matrix(P: PrecubicalSet, X: PrecubicalSubset, n: int,
                  ring: Ring) -> IntMatrix:
    """[cycles of X included into P | boundaries of P] in degree n."""
    K = image_cycle_matrix(P, X, n, ring)
    B = boundary_matrix(P, n + 1) if n < P.dim else IntMatrix.zero(K.nrows, 0)
    return K.hstack(B)


def image_membership(P: PrecubicalSet, X: PrecubicalSubset,
                     alpha: HomologyClass, ring: Optional[Ring] = None) -> bool:
    """Is alpha in the image of the homology of X inside the homology of P?

    Decided by integer (or mod-p) solvability of [cycles(X) | boundaries(P)]
    against alpha's vector.
    """
    if X.parent is not P:
        raise SubsetMismatch("subset of a different complex")
    if alpha.complex is not P:
        raise SubsetMismatch("class of a different complex")
    if not alpha.is_cycle:
        raise NotACycle("image_membership needs a cycle")
    ring = alpha.ring if ring is None else ring
    W = _image_matrix(P, X, alpha.degree, ring)
    if ring.char:
        return fp_solve(W, alpha.vector, ring.char) is not None
    return lattice_member(W, alpha.vector).solvable


# ------------------------------------------------------- pushforwards

@lru_cache(maxsize=None)
def pushforward_matrix(f, n: int) -> IntMatrix:
    """Chain map of a subdivision in degree n: each source cube goes to the
    sum of the degree-n cells of its subdivided image, coefficient +1."""
    from .grid import top_cells
    P, Q = f.source, f.target
    position = {c: i for i, c in enumerate(Q.cells(n))}
    cols = []
    for x in P.cells(n):
        col = [0] * len(position)
        if n == 0:
            col[position[f.vertex_map[x]]] += 1
        else:
            cmap = f.cell_maps[x]
            for cell in top_cells(f.shapes[x]):
                col[position[cmap[cell]]] += 1
        cols.append(col)
    return IntMatrix.from_columns(cols, len(position))


def pushforward_class(f, alpha: HomologyClass) -> HomologyClass:
    """Image of a class under the subdivision chain map."""
    if alpha.complex is not f.source:
        raise InvalidMorphism("class does not live in the source complex")
    vec = pushforward_matrix(f, alpha.degree).mul_vec(alpha.vector)
    out = homology_class(f.target, alpha.degree, vec, alpha.ring)
    if alpha.is_cycle and not out.is_cycle:
        raise AssertionError("pushforward broke a cycle")
    return out
