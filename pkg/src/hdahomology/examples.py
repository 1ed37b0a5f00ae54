"""Small named complexes and automata used by fixtures and tests.

Grid naming convention for the 3x3 examples: vertices p{x}{y}; h{x}{y}
is the horizontal edge from p{x}{y} to p{x+1}{y}; v{x}{y} the vertical
edge from p{x}{y} to p{x}{y+1}; s{x}{y} the square with lower-left
corner p{x}{y}.  Axis 1 of a square is horizontal, so its d_1 faces are
the vertical edges and its d_2 faces the horizontal ones.
"""
from __future__ import annotations

from .hda import HDA, validate_hda
from .precubical import PrecubicalSet, build_precubical


def circle_loop() -> PrecubicalSet:
    """One vertex with one directed loop."""
    return build_precubical([
        ("v", 0, (), ()),
        ("a", 1, ("v",), ("v",)),
    ])


def digon() -> PrecubicalSet:
    """Two vertices joined by two parallel edges."""
    return build_precubical([
        ("v", 0, (), ()),
        ("w", 0, (), ()),
        ("a", 1, ("v",), ("w",)),
        ("b", 1, ("v",), ("w",)),
    ])


def torus_square() -> PrecubicalSet:
    """One vertex, two loops, one square with equal opposite faces."""
    return build_precubical([
        ("u", 0, (), ()),
        ("a", 1, ("u",), ("u",)),
        ("b", 1, ("u",), ("u",)),
        ("s", 2, ("a", "b"), ("a", "b")),
    ])


def klein_square() -> PrecubicalSet:
    """One vertex, two loops, one twisted square; carries 2-torsion."""
    return build_precubical([
        ("u", 0, (), ()),
        ("a", 1, ("u",), ("u",)),
        ("b", 1, ("u",), ("u",)),
        ("s", 2, ("a", "b"), ("b", "a")),
    ])


def single_edge() -> PrecubicalSet:
    """Two vertices and the edge between them."""
    return build_precubical([
        ("v0", 0, (), ()),
        ("v1", 0, (), ()),
        ("e", 1, ("v0",), ("v1",)),
    ])


def grid_rect(nx: int = 2, ny: int = 2, filled=()) -> PrecubicalSet:
    """A directed nx-by-ny grid of squares, filling only those whose
    lower-left corner is listed in `filled`."""
    records = []
    for x in range(nx + 1):
        for y in range(ny + 1):
            records.append((f"p{x}{y}", 0, (), ()))
    for x in range(nx):
        for y in range(ny + 1):
            records.append((f"h{x}{y}", 1, (f"p{x}{y}",), (f"p{x + 1}{y}",)))
    for x in range(nx + 1):
        for y in range(ny):
            records.append((f"v{x}{y}", 1, (f"p{x}{y}",), (f"p{x}{y + 1}",)))
    for (x, y) in filled:
        records.append((f"s{x}{y}", 2,
                        (f"v{x}{y}", f"h{x}{y}"),
                        (f"v{x + 1}{y}", f"h{x}{y + 1}")))
    return build_precubical(records)


def grid_holes_diagonal() -> PrecubicalSet:
    """3x3 vertex grid, squares filled off the main diagonal, so the two
    holes sit at the lower-left and upper-right.  The lower hole class
    points to the upper one."""
    return grid_rect(2, 2, filled=[(0, 1), (1, 0)])


def grid_holes_antidiagonal() -> PrecubicalSet:
    """Same grid with the complementary squares filled; holes at the
    upper-left and lower-right, no pointing between the hole classes."""
    return grid_rect(2, 2, filled=[(0, 0), (1, 1)])


def isolated_hole() -> PrecubicalSet:
    """Two source vertices each reaching two sink vertices; the single
    1-dimensional hole has no pointing edge to or from any nonzero
    class because no vertex set both reaches and is reached."""
    return build_precubical([
        ("s1", 0, (), ()),
        ("s2", 0, (), ()),
        ("t1", 0, (), ()),
        ("t2", 0, (), ()),
        ("a1", 1, ("s1",), ("t1",)),
        ("a2", 1, ("s1",), ("t2",)),
        ("b1", 1, ("s2",), ("t1",)),
        ("b2", 1, ("s2",), ("t2",)),
    ])


def labelled_grid() -> HDA:
    """The diagonal-hole grid as an automaton: two concurrent two-letter
    processes, start at the lower-left, accept at the upper-right."""
    P = grid_holes_diagonal()
    labels = {}
    for e in P.cells(1):
        kind, x, y = e[0], int(e[1]), int(e[2])
        if kind == "h":
            labels[e] = "ab" if x == 0 else "cd"
        else:
            labels[e] = "uv" if y == 0 else "wx"
    return validate_hda(P, {"p00"}, {"p22"}, labels)


def broken_square_records():
    """Cube records of a square whose top edge runs backwards; building
    them raises IdentityViolation."""
    return [
        ("u", 0, (), ()),
        ("v", 0, (), ()),
        ("w", 0, (), ()),
        ("z", 0, (), ()),
        ("L", 1, ("u",), ("v",)),
        ("R", 1, ("w",), ("z",)),
        ("B", 1, ("u",), ("w",)),
        ("T", 1, ("z",), ("v",)),
        ("s", 2, ("L", "B"), ("R", "T")),
    ]


def empty_complex() -> PrecubicalSet:
    return build_precubical([])
