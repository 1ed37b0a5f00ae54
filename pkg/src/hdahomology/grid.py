"""Coordinate cells of grid complexes.

The grid of shape (l_1, .., l_n) is the tensor product of the intervals
from 0 to l_i.  Its cells are coordinate tuples whose entries are either
an integer m (a point) or the pair (m, m+1) (a unit interval); the degree
is the number of interval entries.  This flat encoding replaces quotient
constructions everywhere subdivisions are handled.

Keys render an integer entry as "m" and an interval entry as "m+", joined
by commas: (0, (1, 2)) has key "0,1+".

>>> [cell_key(c) for c in cells_of_shape((2,)) ]
['0', '0+', '1', '1+', '2']
>>> cell_face((0, (1, 2)), 1, 1)
(0, 2)
"""
from __future__ import annotations

import re
from itertools import product
from typing import Iterator, Sequence

from .precubical import PrecubicalSet, build_precubical

Coord = "int | tuple[int, int]"
Cell = "tuple"

_KEY_TOKEN = re.compile(r"^(\d+)(\+?)$")


def is_interval(coord) -> bool:
    return isinstance(coord, tuple)


def coord_key(coord) -> int:
    """Total order on coordinates: m -> 2m, (m, m+1) -> 2m+1."""
    return 2 * coord[0] + 1 if is_interval(coord) else 2 * coord


def cell_sort_key(cell):
    return tuple(coord_key(c) for c in cell)


def cell_degree(cell) -> int:
    return sum(1 for c in cell if is_interval(c))


def cell_key(cell) -> str:
    return ",".join(f"{c[0]}+" if is_interval(c) else str(c) for c in cell)


def parse_cell_key(key: str):
    if key == "":
        return ()
    coords = []
    for token in key.split(","):
        m = _KEY_TOKEN.match(token)
        if not m:
            raise ValueError(f"bad grid cell token {token!r}")
        v = int(m.group(1))
        coords.append((v, v + 1) if m.group(2) else v)
    return tuple(coords)


def axis_tokens(l: int) -> list:
    """All coordinates of one axis of length l, in position order."""
    out = []
    for m in range(l):
        out.append(m)
        out.append((m, m + 1))
    out.append(l)
    return out


def cells_of_shape(shape: Sequence[int]) -> Iterator[tuple]:
    """Every cell of the grid, in coordinatewise position order."""
    yield from product(*(axis_tokens(l) for l in shape))


def cell_face(cell, i: int, k: int):
    """Boundary on the i-th interval coordinate (i is 1-based)."""
    seen = 0
    for pos, c in enumerate(cell):
        if is_interval(c):
            seen += 1
            if seen == i:
                return cell[:pos] + (c[k],) + cell[pos + 1:]
    raise ValueError(f"cell {cell!r} has no axis {i}")


def interval_axes(cell) -> tuple[int, ...]:
    """Tuple positions (0-based) of the interval coordinates."""
    return tuple(p for p, c in enumerate(cell) if is_interval(c))


def is_interior(cell, shape) -> bool:
    """Interior cells have no integer coordinate on the grid boundary."""
    return all(is_interval(c) or 0 < c < l for c, l in zip(cell, shape))


def grid_vertices(shape) -> Iterator[tuple]:
    yield from product(*(range(l + 1) for l in shape))


def top_cells(shape) -> Iterator[tuple]:
    yield from product(*(((m, m + 1) for m in range(l)) for l in shape))


def lower_box(vertex) -> Iterator[tuple]:
    """All cells of the sub-grid from the origin up to the given vertex."""
    yield from cells_of_shape(vertex)


def cell_min_corner(cell) -> tuple[int, ...]:
    return tuple(c[0] if is_interval(c) else c for c in cell)


def kappa(vertex, shape) -> tuple[int, ...]:
    """Unit-cube corner of a grid vertex: 1 where it sits at the far face."""
    return tuple(1 if v == l else 0 for v, l in zip(vertex, shape))


def insert_coord(cell, pos: int, value):
    """Reinsert a dropped coordinate at tuple position pos (0-based)."""
    return cell[:pos] + (value,) + cell[pos:]


def grid_complex(shape) -> PrecubicalSet:
    """The grid as an actual precubical set with cell keys as identifiers."""
    records = []
    for cell in cells_of_shape(shape):
        n = cell_degree(cell)
        d0 = tuple(cell_key(cell_face(cell, i, 0)) for i in range(1, n + 1))
        d1 = tuple(cell_key(cell_face(cell, i, 1)) for i in range(1, n + 1))
        records.append((cell_key(cell), n, d0, d1))
    return build_precubical(records)
