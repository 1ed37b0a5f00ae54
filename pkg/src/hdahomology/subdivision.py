"""Grid subdivisions: weak morphisms that are homeomorphisms.

A morphism here sends each n-cube x of the source to a grid of cells in
the target: x gets a shape (l_1..l_n), and a cell map x_flat from the
combinatorial grid [0,l_1] x ... x [0,l_n] into the target complex.
Grid cells use the conventions of the grid module: integer coordinates
are vertices of an axis, pairs (m, m+1) are its edges.

Validation certifies a homeomorphism combinatorially: each cell map
commutes with boundaries, agrees with the cell maps of the faces along
the grid boundary, is injective on the open grid interior, and the
vertex images together with all interior images partition the target.
The partition gives a total carrier function: every target cell comes
from exactly one source cube, which drives carriers, images, path
lifting, and the reduction machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .errors import (EdgeEndpointMismatch, FaceShapeMismatch, FinalMismatch,
                     InconsistentCounts, InitialMismatch, InteriorCollision,
                     InvalidMorphism, LabelMismatch, NotGridMorphism,
                     SubsetMismatch, Uncovered, UnknownCube)
from .grid import (cell_degree, cell_face, cell_key, cells_of_shape,
                   insert_coord, interval_axes, is_interior, is_interval)
from .hda import HDA, validate_hda
from .precubical import (Path, PrecubicalSet, PrecubicalSubset, build_precubical,
                         faces_closure, subcube)


@dataclass(frozen=True, eq=False)
class SubdivisionMorphism:
    """Validated grid subdivision; treat all fields as read-only."""

    source: PrecubicalSet
    target: PrecubicalSet
    vertex_map: Mapping[str, str]
    shapes: Mapping[str, tuple[int, ...]]
    cell_maps: Mapping[str, Mapping[tuple, str]]
    carrier_table: Mapping[str, tuple[str, tuple]]

    def apply(self, x: str, cell: tuple) -> str:
        """Image of a grid cell of R_x in the target."""
        if self.source.degree(x) == 0:
            return self.vertex_map[x]
        return self.cell_maps[x][cell]


def validate_subdivision(source: PrecubicalSet, target: PrecubicalSet,
                         vertex_map: Mapping[str, str],
                         shapes: Mapping[str, Sequence[int]],
                         cell_maps: Mapping[str, Mapping[tuple, str]],
                         ) -> SubdivisionMorphism:
    """Check every invariant and return the morphism with its carrier table."""
    P, Q = source, target
    higher = [x for n in range(1, P.dim + 1) for x in P.cells(n)]

    for x in shapes:
        if x not in P or P.degree(x) == 0:
            raise UnknownCube(f"shape given for {x!r}")
    for x in cell_maps:
        if x not in P or P.degree(x) == 0:
            raise UnknownCube(f"cell map given for {x!r}")

    vmap = {}
    for v in P.cells(0):
        if v not in vertex_map:
            raise NotGridMorphism(f"vertex {v!r} has no image")
        q = vertex_map[v]
        if q not in Q or Q.degree(q) != 0:
            raise NotGridMorphism(f"vertex {v!r} maps to non-vertex {q!r}")
        vmap[v] = q

    norm_shapes = {}
    norm_maps = {}
    for x in higher:
        n = P.degree(x)
        if x not in shapes:
            raise FaceShapeMismatch(f"no shape for {x!r}")
        shape = tuple(shapes[x])
        if len(shape) != n or any(not isinstance(l, int) or l < 1 for l in shape):
            raise FaceShapeMismatch(f"bad shape {shape!r} for {x!r}")
        norm_shapes[x] = shape
        cmap = dict(cell_maps.get(x, {}))
        expected = set(cells_of_shape(shape))
        if set(cmap) != expected:
            missing = expected - set(cmap)
            extra = set(cmap) - expected
            raise NotGridMorphism(
                f"cell map of {x!r}: missing {sorted(map(cell_key, missing))}, "
                f"extra {sorted(map(str, extra))}")
        for cell, q in cmap.items():
            if q not in Q:
                raise NotGridMorphism(f"{x!r} maps {cell_key(cell)} to "
                                      f"unknown cell {q!r}")
            if Q.degree(q) != cell_degree(cell):
                raise NotGridMorphism(
                    f"{x!r} maps {cell_key(cell)} (degree {cell_degree(cell)}) "
                    f"to {q!r} of degree {Q.degree(q)}")
        norm_maps[x] = cmap

    # Boundary commutation inside each grid.
    for x in higher:
        cmap = norm_maps[x]
        for cell, q in cmap.items():
            d = cell_degree(cell)
            for i in range(1, d + 1):
                for k in (0, 1):
                    want = cmap[cell_face(cell, i, k)]
                    got = Q.face(q, i, k)
                    if want != got:
                        raise NotGridMorphism(
                            f"{x!r} at {cell_key(cell)}: face ({i},{k}) is "
                            f"{got!r}, grid says {want!r}")

    # Agreement with the faces along the grid boundary.
    for x in higher:
        n = P.degree(x)
        shape = norm_shapes[x]
        cmap = norm_maps[x]
        if n == 1:
            lo, hi = P.face(x, 1, 0), P.face(x, 1, 1)
            if cmap[(0,)] != vmap[lo]:
                raise EdgeEndpointMismatch(
                    f"{x!r}: grid start {cmap[(0,)]!r} is not f0({lo!r})")
            if cmap[(shape[0],)] != vmap[hi]:
                raise EdgeEndpointMismatch(
                    f"{x!r}: grid end {cmap[(shape[0],)]!r} is not f0({hi!r})")
            continue
        for i in range(1, n + 1):
            for k in (0, 1):
                y = P.face(x, i, k)
                sub_shape = shape[:i - 1] + shape[i:]
                if norm_shapes[y] != sub_shape:
                    raise FaceShapeMismatch(
                        f"face ({i},{k}) of {x!r} is {y!r} with shape "
                        f"{norm_shapes[y]!r}, expected {sub_shape!r}")
                value = 0 if k == 0 else shape[i - 1]
                for cell in cells_of_shape(sub_shape):
                    outer = insert_coord(cell, i - 1, value)
                    if norm_maps[y][cell] != cmap[outer]:
                        raise FaceShapeMismatch(
                            f"{x!r} restricted to face ({i},{k}) disagrees "
                            f"with {y!r} at {cell_key(cell)}")

    # Interior injectivity and the partition of the target.
    claimed: dict[str, tuple[str, tuple]] = {}

    def claim(q, owner, cell):
        if q in claimed:
            prev = claimed[q]
            raise InteriorCollision(
                f"target cell {q!r} claimed by {prev[0]!r} at "
                f"{cell_key(prev[1])!r} and by {owner!r} at {cell_key(cell)!r}")
        claimed[q] = (owner, cell)

    for v in P.cells(0):
        claim(vmap[v], v, ())
    for x in higher:
        shape = norm_shapes[x]
        for cell, q in norm_maps[x].items():
            if is_interior(cell, shape):
                claim(q, x, cell)
    for n in range(Q.dim + 1):
        for q in Q.cells(n):
            if q not in claimed:
                raise Uncovered(f"target cell {q!r} is in no interior image")

    return SubdivisionMorphism(P, Q, vmap, norm_shapes, norm_maps, claimed)


def identity_subdivision(P: PrecubicalSet) -> SubdivisionMorphism:
    """Every shape 1; each cell map is evaluation of the cube itself."""
    vmap = {v: v for v in P.cells(0)}
    shapes = {}
    cmaps = {}
    for n in range(1, P.dim + 1):
        for x in P.cells(n):
            shapes[x] = (1,) * n
            cmaps[x] = {cell: subcube(P, x, cell)
                        for cell in cells_of_shape(shapes[x])}
    return validate_subdivision(P, P, vmap, shapes, cmaps)


# ------------------------------------------------------------ subdivide

def _edge_table(P: PrecubicalSet, counts) -> dict[str, int]:
    table = {e: 1 for e in P.cells(1)}
    if isinstance(counts, int):
        table = {e: counts for e in table}
    else:
        for e, l in counts.items():
            if e not in table:
                raise UnknownCube(f"count given for non-edge {e!r}")
            table[e] = l
    for e, l in table.items():
        if not isinstance(l, int) or l < 1:
            raise InconsistentCounts(f"edge {e!r} has invalid count {l!r}")
    for s in P.cells(2):
        d0, d1 = P.faces_of(s)
        for axis in (0, 1):
            if table[d0[axis]] != table[d1[axis]]:
                raise InconsistentCounts(
                    f"square {s!r}: opposite edges {d0[axis]!r} and "
                    f"{d1[axis]!r} have counts {table[d0[axis]]} and "
                    f"{table[d1[axis]]}")
    return table


def _cube_shapes(P: PrecubicalSet, table) -> dict[str, tuple[int, ...]]:
    shapes = {}
    for n in range(1, P.dim + 1):
        for x in P.cells(n):
            shape = []
            for i in range(n):
                coords = tuple(None if j == i else 0 for j in range(n))
                shape.append(table[subcube(P, x, coords)])
            shapes[x] = tuple(shape)
    return shapes


def _canonical(P, shapes, x, cell):
    """Representative (cube, interior cell) of a grid cell: grid-boundary
    integer coordinates turn into face operators of the cube."""
    n = P.degree(x)
    if n == 0:
        return x, ()
    shape = shapes[x]
    drop = {j: (0 if cell[j] == 0 else 1)
            for j in range(n)
            if not is_interval(cell[j]) and cell[j] in (0, shape[j])}
    if not drop:
        return x, cell
    y = x
    for j in sorted(drop, reverse=True):
        y = P.face(y, j + 1, drop[j])
    rest = tuple(c for j, c in enumerate(cell) if j not in drop)
    return y, rest


def subdivide(P: PrecubicalSet, counts: Union[int, Mapping[str, int]],
              limit: int = 100_000):
    """Refine every cube on a grid given by per-edge segment counts.

    Counts must agree on opposite edges of every square.  Returns the
    refined complex and the validated morphism onto it.  Source vertices
    keep their identifiers; a fresh cell owned by cube x at grid cell c
    is named "x:<key of c>" (primed on the rare name clash).
    """
    table = _edge_table(P, counts)
    shapes = _cube_shapes(P, table)

    qname = {}
    used = set()
    for v in P.cells(0):
        qname[(v, ())] = v
        used.add(v)
    for n in range(1, P.dim + 1):
        for x in P.cells(n):
            for cell in cells_of_shape(shapes[x]):
                if is_interior(cell, shapes[x]):
                    name = f"{x}:{cell_key(cell)}"
                    while name in used:
                        name += "'"
                    used.add(name)
                    qname[(x, cell)] = name

    records = [(v, 0, (), ()) for v in P.cells(0)]
    for n in range(1, P.dim + 1):
        for x in P.cells(n):
            for cell in cells_of_shape(shapes[x]):
                if not is_interior(cell, shapes[x]):
                    continue
                d = cell_degree(cell)
                d0 = tuple(qname[_canonical(P, shapes, x, cell_face(cell, i, 0))]
                           for i in range(1, d + 1))
                d1 = tuple(qname[_canonical(P, shapes, x, cell_face(cell, i, 1))]
                           for i in range(1, d + 1))
                records.append((qname[(x, cell)], d, d0, d1))
    Q = build_precubical(records, limit=limit)

    vmap = {v: v for v in P.cells(0)}
    cmaps = {}
    for x in shapes:
        cmaps[x] = {cell: qname[_canonical(P, shapes, x, cell)]
                    for cell in cells_of_shape(shapes[x])}
    f = validate_subdivision(P, Q, vmap, shapes, cmaps)
    return Q, f


def _split_label(word, pieces: int, edge: str):
    if pieces == 1:
        return [word]
    if isinstance(word, (str, list, tuple)) and len(word) == pieces:
        return list(word)
    raise LabelMismatch(
        f"label {word!r} of edge {edge!r} does not split into {pieces} pieces")


def subdivide_hda(A: HDA, counts: Union[int, Mapping[str, int]],
                  limit: int = 100_000):
    """Subdivide the underlying complex and distribute edge labels.

    An edge of count l needs a label that is a length-l string (or
    sequence); segment m receives piece m.  Fresh edges inside higher
    cells take the piece of the parallel boundary edge, which keeps the
    square label conditions valid.
    """
    P = A.complex
    Q, f = subdivide(P, counts, limit)
    labels = {}
    for b in Q.cells(1):
        z, c = f.carrier_table[b]
        pos = interval_axes(c)[0]
        m = c[pos][0]
        base = subcube(P, z, tuple(None if j == pos else 0
                                   for j in range(P.degree(z))))
        labels[b] = _split_label(A.labels[base], f.shapes[z][pos], base)[m]
    B = validate_hda(Q, set(A.initial), set(A.final), labels, A.monoid)
    return B, f


# ------------------------------------------------- carriers and images

def carrier(f: SubdivisionMorphism, a: str) -> str:
    """The unique source cube whose interior image (or vertex image)
    contains the target cell a."""
    return f.carrier_table[a][0]


def carrier_cell(f: SubdivisionMorphism, a: str) -> tuple[str, tuple]:
    return f.carrier_table[a]


def carrier_complex(f: SubdivisionMorphism, A: PrecubicalSubset) -> PrecubicalSubset:
    """Union of the face closures of the carriers of A's cells."""
    if A.parent is not f.target:
        raise SubsetMismatch("subset of a different complex")
    seeds = {f.carrier_table[a][0] for a in A.members}
    return PrecubicalSubset(f.source, faces_closure(f.source, seeds))


def image_subset(f: SubdivisionMorphism, X: PrecubicalSubset) -> PrecubicalSubset:
    """f_0(X_0) together with the full grid images of X's higher cubes."""
    if X.parent is not f.source:
        raise SubsetMismatch("subset of a different complex")
    members = set()
    for x in X.members:
        if f.source.degree(x) == 0:
            members.add(f.vertex_map[x])
        else:
            members.update(f.cell_maps[x].values())
    return PrecubicalSubset(f.target, members)


# ------------------------------------------------------------- paths

def map_path(f: SubdivisionMorphism, omega: Path) -> Path:
    """Replace each edge by its grid chain; endpoints map through f_0."""
    if omega.base is not f.source:
        raise InvalidMorphism("path does not live in the source complex")
    edges = []
    for e in omega.edges:
        l = f.shapes[e][0]
        edges.extend(f.cell_maps[e][((m, m + 1),)] for m in range(l))
    return Path(f.target, f.vertex_map[omega.start], tuple(edges))


def lift_path(f: SubdivisionMorphism, omega: Path) -> Path:
    """Right-inverse on endpoints: the lift runs from the minimal corner
    of the carrier of omega's start to that of its end.

    A target edge contributes a source edge exactly when its grid
    interval reaches the far face of its axis; otherwise the lift stays
    at the same minimal corner and the edge contributes nothing.
    """
    if omega.base is not f.target:
        raise InvalidMorphism("path does not live in the target complex")
    x0 = f.carrier_table[omega.start][0]
    start = subcube(f.source, x0, (0,) * f.source.degree(x0))
    edges = []
    for b in omega.edges:
        z, c = f.carrier_table[b]
        pos = interval_axes(c)[0]
        if c[pos][1] == f.shapes[z][pos]:
            n = f.source.degree(z)
            edges.append(subcube(f.source, z,
                                 tuple(None if j == pos else 0 for j in range(n))))
    return Path(f.source, start, tuple(edges))


# ------------------------------------------------------- HDA abstraction

@dataclass(frozen=True)
class AbstractionReport:
    edges_checked: int
    initial: frozenset
    final: frozenset


def check_abstraction(f: SubdivisionMorphism, A: HDA, B: HDA) -> AbstractionReport:
    """Certify that A is an abstraction of B along f: start and accept
    states correspond under f_0 and every source edge label equals the
    product of the labels along its grid chain."""
    if f.source is not A.complex or f.target is not B.complex:
        raise InvalidMorphism("morphism does not connect these automata")
    image_initial = {f.vertex_map[v] for v in A.initial}
    if image_initial != set(B.initial):
        raise InitialMismatch(
            f"f0(initial) = {sorted(image_initial)} but target has "
            f"{sorted(B.initial)}")
    image_final = {f.vertex_map[v] for v in A.final}
    if image_final != set(B.final):
        raise FinalMismatch(
            f"f0(final) = {sorted(image_final)} but target has "
            f"{sorted(B.final)}")
    checked = 0
    for e in A.complex.cells(1):
        l = f.shapes[e][0]
        word = B.monoid.unit
        for m in range(l):
            word = B.monoid.product(word, B.labels[f.cell_maps[e][((m, m + 1),)]])
        if word != A.labels[e]:
            raise LabelMismatch(
                f"edge {e!r}: label {A.labels[e]!r} but image path spells "
                f"{word!r}")
        checked += 1
    return AbstractionReport(checked, frozenset(A.initial), frozenset(A.final))
