import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hdahomology.errors import (DegreeMismatch, DuplicateId, EndpointMismatch,
                                IdentityViolation, MissingFace, NotFaceClosed,
                                TooLarge, UnknownCube)
from hdahomology.examples import (broken_square_records, circle_loop, digon,
                                  empty_complex, grid_holes_diagonal,
                                  isolated_hole, klein_square, labelled_grid,
                                  single_edge, torus_square)
from hdahomology.precubical import (Path, PrecubicalSubset, build_precubical,
                                    concat, faces_closure, full_subcomplex,
                                    interval, subcube, tensor)
from hdahomology.randgen import random_precubical

ALL_EXAMPLES = [circle_loop, digon, torus_square, klein_square,
                grid_holes_diagonal, isolated_hole, single_edge,
                empty_complex, lambda: labelled_grid().complex]


def check_precubical_identities(P):
    """d_i^k d_j^l x = d_{j-1}^l d_i^k x for i < j, on every cube."""
    for x in P:
        n = P.degree(x)
        for j in range(2, n + 1):
            for i in range(1, j):
                for k in (0, 1):
                    for l in (0, 1):
                        left = P.face(P.face(x, j, l), i, k)
                        right = P.face(P.face(x, i, k), j - 1, l)
                        assert left == right, (x, i, j, k, l)


@pytest.mark.parametrize("make", ALL_EXAMPLES)
def test_examples_satisfy_identities(make):
    check_precubical_identities(make())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_random_complexes_satisfy_identities(seed):
    check_precubical_identities(random_precubical(random.Random(seed)))


def test_degree_counts():
    assert [len(circle_loop().cells(n)) for n in range(2)] == [1, 1]
    assert [len(digon().cells(n)) for n in range(2)] == [2, 2]
    assert [len(torus_square().cells(n)) for n in range(3)] == [1, 2, 1]
    P = grid_holes_diagonal()
    assert [len(P.cells(n)) for n in range(3)] == [9, 12, 2]
    assert len(empty_complex()) == 0


def test_iteration_and_lookup():
    P = digon()
    assert set(P) == {"v", "w", "a", "b"}
    assert "a" in P and "nope" not in P
    assert P.degree("a") == 1
    assert P.source("a") == "v" and P.target("a") == "w"
    assert P.dim == 1
    with pytest.raises(UnknownCube):
        P.degree("nope")
    with pytest.raises(UnknownCube):
        P.face("nope", 1, 0)
    with pytest.raises(DegreeMismatch):
        P.face("a", 2, 0)


def test_build_rejects_duplicate_ids():
    with pytest.raises(DuplicateId):
        build_precubical([("v", 0, (), ()), ("v", 0, (), ())])


def test_build_rejects_missing_faces():
    with pytest.raises(MissingFace):
        build_precubical([("e", 1, ("v",), ("w",))])


def test_build_rejects_wrong_arity():
    with pytest.raises(DegreeMismatch):
        build_precubical([("v", 0, (), ()), ("e", 1, ("v", "v"), ("v",))])


def test_build_rejects_face_of_wrong_degree():
    records = [("v", 0, (), ()), ("e", 1, ("v",), ("v",)),
               ("s", 2, ("e", "e"), ("e", "v"))]
    with pytest.raises(DegreeMismatch):
        build_precubical(records)


def test_build_rejects_broken_square():
    with pytest.raises(IdentityViolation):
        build_precubical(broken_square_records())


def test_build_respects_limit():
    records = [(f"v{i}", 0, (), ()) for i in range(10)]
    with pytest.raises(TooLarge):
        build_precubical(records, limit=5)


def test_subcube_on_squares():
    P = grid_holes_diagonal()
    # Square s01 sits over grid position x=0, y=1.  Axis 1 runs
    # horizontally, so its axis-1 faces are the vertical edges.
    assert subcube(P, "s01", (None, None)) == "s01"
    assert subcube(P, "s01", (0, None)) == P.face("s01", 1, 0)
    assert subcube(P, "s01", (None, 1)) == P.face("s01", 2, 1)
    # Integer corners reach the four vertices.
    corners = {subcube(P, "s01", (a, b)) for a in (0, 1) for b in (0, 1)}
    assert corners == {"p01", "p11", "p02", "p12"}
    with pytest.raises(DegreeMismatch):
        subcube(P, "s01", (0,))


def test_subcube_order_of_application():
    # Applying (0, 1) must mean: first axis 2 face 1, then axis 1 face 0.
    P = torus_square()
    assert subcube(P, "s", (0, 1)) == P.face(P.face("s", 2, 1), 1, 0)


def test_minimal_corner_of_edges():
    P = digon()
    assert subcube(P, "a", (0,)) == "v"
    assert subcube(P, "a", (1,)) == "w"


def test_subset_requires_face_closure():
    P = single_edge()
    with pytest.raises(NotFaceClosed):
        PrecubicalSubset(P, {"e", "v0"})
    ok = PrecubicalSubset(P, {"e", "v0", "v1"})
    assert len(ok) == 3


def test_subset_set_operations():
    P = grid_holes_diagonal()
    X = faces_closure(P, ["s01"])
    Y = faces_closure(P, ["s10"])
    both = X.union(Y)
    assert set(X.members) <= set(both.members)
    meet = X.intersection(Y)
    assert all(x in X.members and x in Y.members for x in meet.members)
    assert X <= both and Y <= both
    assert not both <= X


def test_subset_to_precubical_set():
    P = grid_holes_diagonal()
    X = faces_closure(P, ["s01"])
    Q = X.to_precubical_set()
    assert sorted(Q) == sorted(X.members)
    for x in Q:
        if Q.degree(x):
            assert Q.faces_of(x) == P.faces_of(x)
    check_precubical_identities(Q)


def test_faces_closure_is_face_closed():
    P = grid_holes_diagonal()
    X = faces_closure(P, ["s01"])
    assert len(X) == 9  # square + 4 edges + 4 vertices
    for x in X.members:
        assert P.closure_cells(x) <= X.members
    with pytest.raises(UnknownCube):
        faces_closure(P, ["nope"])


def test_full_subcomplex_extremes():
    P = digon()
    assert set(full_subcomplex(P, {"v", "w"}).members) == {"v", "w", "a", "b"}
    assert set(full_subcomplex(P, {"v"}).members) == {"v"}
    assert set(full_subcomplex(P, set()).members) == set()
    with pytest.raises(UnknownCube):
        full_subcomplex(P, {"a"})


def test_full_subcomplex_is_maximal():
    P = grid_holes_diagonal()
    S = frozenset({"p00", "p10", "p01", "p11"})
    X = full_subcomplex(P, S)
    for x in P:
        inside = P.closure_vertices(x) <= S
        assert (x in X.members) == inside


def test_interval_shape():
    I = interval(0, 3)
    assert len(I.cells(0)) == 4 and len(I.cells(1)) == 3
    assert I.source("1+") == "1" and I.target("1+") == "2"
    assert len(interval(2, 2).cells(1)) == 0
    with pytest.raises(ValueError):
        interval(3, 2)


def test_tensor_counts_multiply():
    I, J = interval(0, 2), interval(0, 1)
    T = tensor(I, J)
    # Cell counts convolve: degree n of the product sums products of
    # matching degrees of the factors.
    for n in range(3):
        want = sum(len(I.cells(a)) * len(J.cells(n - a))
                   for a in range(n + 1))
        assert len(T.cells(n)) == want
    check_precubical_identities(T)


def test_tensor_boundary_split():
    I, J = interval(0, 1), interval(0, 1)
    T = tensor(I, J)
    s = "(0+,0+)"
    # Axis 1 touches the left factor, axis 2 the right one.
    assert T.face(s, 1, 0) == "(0,0+)"
    assert T.face(s, 1, 1) == "(1,0+)"
    assert T.face(s, 2, 0) == "(0+,0)"
    assert T.face(s, 2, 1) == "(0+,1)"


def test_tensor_respects_limit():
    I = interval(0, 5)
    with pytest.raises(TooLarge):
        tensor(I, I, limit=10)


def test_path_validation():
    P = labelled_grid().complex
    p = Path(P, "p00", ("h00", "h10", "v20"))
    assert p.length == 3
    assert p.source == "p00" and p.target == "p21"
    with pytest.raises(EndpointMismatch):
        Path(P, "p00", ("h10",))
    with pytest.raises(EndpointMismatch):
        Path(P, "h00", ())
    with pytest.raises(EndpointMismatch):
        Path(P, "p00", ("p00",))


def test_empty_path():
    P = digon()
    p = Path(P, "w")
    assert p.length == 0 and p.source == p.target == "w"


def test_concat_paths():
    P = labelled_grid().complex
    a = Path(P, "p00", ("h00",))
    b = Path(P, "p10", ("v10", "v11"))
    ab = concat(a, b)
    assert ab.edges == ("h00", "v10", "v11")
    assert ab.source == "p00" and ab.target == "p12"
    with pytest.raises(EndpointMismatch):
        concat(b, a)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_concat_associative(seed):
    rng = random.Random(seed)
    from hdahomology.randgen import random_path
    P = random_precubical(rng)
    p = random_path(rng, P)
    cut1 = rng.randint(0, p.length)
    cut2 = rng.randint(cut1, p.length)
    at = [p.start]
    for e in p.edges:
        at.append(P.target(e))
    a = Path(P, p.start, p.edges[:cut1])
    b = Path(P, at[cut1], p.edges[cut1:cut2])
    c = Path(P, at[cut2], p.edges[cut2:])
    assert concat(concat(a, b), c) == concat(a, concat(b, c)) == p


def test_closure_vertices():
    P = grid_holes_diagonal()
    assert P.closure_vertices("s01") == {"p01", "p11", "p02", "p12"}
    assert P.closure_vertices("p00") == {"p00"}
