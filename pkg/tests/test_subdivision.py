import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from checks import (check_carrier_laws, check_label_preservation,
                    check_pushforward_chain_map)
from hdahomology.errors import (EdgeEndpointMismatch, FaceShapeMismatch,
                                FinalMismatch, InconsistentCounts,
                                InitialMismatch, InteriorCollision,
                                InvalidMorphism, LabelMismatch,
                                NotGridMorphism, Uncovered, UnknownCube)
from hdahomology.examples import (circle_loop, digon, labelled_grid,
                                  single_edge, torus_square)
from hdahomology.hda import FREE_MONOID, path_label, validate_hda
from hdahomology.precubical import (Path, PrecubicalSubset, build_precubical,
                                    concat, faces_closure)
from hdahomology.randgen import (random_counts, random_labelled_hda,
                                 random_path, random_precubical,
                                 random_subdivision)
from hdahomology.subdivision import (carrier, carrier_cell, carrier_complex,
                                     check_abstraction, identity_subdivision,
                                     image_subset, lift_path, map_path,
                                     subdivide, subdivide_hda,
                                     validate_subdivision)


def halved_edge():
    return subdivide(single_edge(), 2)


def segment_data(f):
    """Raw validation inputs recovered from a built morphism."""
    return (dict(f.vertex_map),
            {x: f.shapes[x] for x in f.shapes},
            {x: dict(f.cell_maps[x]) for x in f.cell_maps})


# --------------------------------------------------- the halved edge

def test_halved_edge_cells():
    Q, f = halved_edge()
    assert sorted(Q.cells(0)) == ["e:1", "v0", "v1"]
    assert sorted(Q.cells(1)) == ["e:0+", "e:1+"]
    assert Q.source("e:0+") == "v0" and Q.target("e:0+") == "e:1"
    assert Q.source("e:1+") == "e:1" and Q.target("e:1+") == "v1"


def test_halved_edge_carriers():
    Q, f = halved_edge()
    assert carrier(f, "v0") == "v0"
    assert carrier(f, "v1") == "v1"
    assert carrier(f, "e:1") == "e"
    assert carrier(f, "e:0+") == "e"
    assert carrier_cell(f, "e:1") == ("e", (1,))
    assert carrier_cell(f, "e:0+") == ("e", ((0, 1),))
    assert f.apply("e", ((1, 2),)) == "e:1+"
    assert f.apply("v0", ()) == "v0"


def test_halved_edge_paths():
    Q, f = halved_edge()
    full = Path(f.source, "v0", ("e",))
    image = map_path(f, full)
    assert image.edges == ("e:0+", "e:1+")
    assert image.start == "v0" and image.target == "v1"
    back = lift_path(f, image)
    assert back.edges == ("e",) and back.start == "v0"
    half = lift_path(f, Path(Q, "v0", ("e:0+",)))
    assert half.edges == () and half.start == "v0"
    second = lift_path(f, Path(Q, "e:1", ("e:1+",)))
    assert second.edges == ("e",)


def test_lift_of_image_keeps_endpoints():
    rng = random.Random(5)
    for seed in range(20):
        P = random_precubical(random.Random(seed))
        if not P.cells(0):
            continue
        Q, f = random_subdivision(rng, P)
        nu = random_path(rng, P)
        lifted = lift_path(f, map_path(f, nu))
        assert lifted.start == nu.start and lifted.target == nu.target


def test_map_path_length_and_concat():
    rng = random.Random(9)
    for seed in range(15):
        P = random_precubical(random.Random(seed + 100))
        if not P.cells(0):
            continue
        Q, f = random_subdivision(rng, P)
        nu = random_path(rng, P)
        image = map_path(f, nu)
        assert len(image.edges) == sum(f.shapes[e][0] for e in nu.edges)
        cut = rng.randint(0, len(nu.edges))
        first = Path(P, nu.start, nu.edges[:cut])
        second = Path(P, first.target, nu.edges[cut:])
        assert concat(map_path(f, first), map_path(f, second)) == image


def test_path_guards():
    Q, f = halved_edge()
    with pytest.raises(InvalidMorphism):
        map_path(f, Path(Q, "v0", ()))
    with pytest.raises(InvalidMorphism):
        lift_path(f, Path(f.source, "v0", ()))


# ------------------------------------------------ identity morphism

def test_identity_subdivision_is_trivial():
    P = digon()
    f = identity_subdivision(P)
    assert f.target is P
    for x in P:
        assert carrier(f, x) == x
    X = faces_closure(P, {"a"})
    assert image_subset(f, X).members == X.members
    nu = Path(P, "v", ("a",))
    assert map_path(f, nu) == nu
    assert lift_path(f, nu) == nu


# ----------------------------------------------------- input errors

def test_counts_must_agree_on_opposite_edges():
    P = labelled_grid().complex
    with pytest.raises(InconsistentCounts):
        subdivide(P, {"h00": 2, "h01": 3})
    with pytest.raises(InconsistentCounts):
        subdivide(P, 0)
    with pytest.raises(UnknownCube):
        subdivide(P, {"nope": 2})
    with pytest.raises(UnknownCube):
        subdivide(P, {"p00": 2})


def test_validate_rejects_shape_for_unknown_or_vertex():
    Q, f = halved_edge()
    vmap, shapes, cmaps = segment_data(f)
    with pytest.raises(UnknownCube):
        validate_subdivision(f.source, Q, vmap, {**shapes, "zzz": (1,)}, cmaps)
    with pytest.raises(UnknownCube):
        validate_subdivision(f.source, Q, vmap, {**shapes, "v0": (1,)}, cmaps)
    with pytest.raises(UnknownCube):
        validate_subdivision(f.source, Q, vmap, shapes,
                             {**cmaps, "v0": {(): "v0"}})


def test_validate_rejects_bad_vertex_map():
    Q, f = halved_edge()
    vmap, shapes, cmaps = segment_data(f)
    with pytest.raises(NotGridMorphism):
        validate_subdivision(f.source, Q, {"v0": "v0"}, shapes, cmaps)
    with pytest.raises(NotGridMorphism):
        validate_subdivision(f.source, Q, {**vmap, "v1": "e:1+"},
                             shapes, cmaps)


def test_validate_rejects_bad_shapes():
    Q, f = halved_edge()
    vmap, shapes, cmaps = segment_data(f)
    with pytest.raises(FaceShapeMismatch):
        validate_subdivision(f.source, Q, vmap, {}, cmaps)
    with pytest.raises(FaceShapeMismatch):
        validate_subdivision(f.source, Q, vmap, {"e": (0,)}, cmaps)
    with pytest.raises(FaceShapeMismatch):
        validate_subdivision(f.source, Q, vmap, {"e": (2, 2)}, cmaps)


def test_validate_rejects_bad_cell_maps():
    Q, f = halved_edge()
    vmap, shapes, cmaps = segment_data(f)
    partial = {k: v for k, v in cmaps["e"].items() if k != (1,)}
    with pytest.raises(NotGridMorphism):
        validate_subdivision(f.source, Q, vmap, shapes, {"e": partial})
    wrong_cell = {**cmaps["e"], (1,): "ghost"}
    with pytest.raises(NotGridMorphism):
        validate_subdivision(f.source, Q, vmap, shapes, {"e": wrong_cell})
    wrong_degree = {**cmaps["e"], (1,): "e:0+"}
    with pytest.raises(NotGridMorphism):
        validate_subdivision(f.source, Q, vmap, shapes, {"e": wrong_degree})
    not_commuting = {**cmaps["e"], (1,): "v1"}
    with pytest.raises(NotGridMorphism):
        validate_subdivision(f.source, Q, vmap, shapes, {"e": not_commuting})


def test_validate_rejects_swapped_endpoints():
    Q, f = halved_edge()
    vmap, shapes, cmaps = segment_data(f)
    with pytest.raises(EdgeEndpointMismatch):
        validate_subdivision(f.source, Q, {"v0": "v1", "v1": "v0"},
                             shapes, cmaps)


def test_validate_rejects_face_restriction_disagreement():
    P = torus_square()
    Q, f = subdivide(P, 2)
    vmap, shapes, cmaps = segment_data(f)
    # Internally a valid grid for the edge a, but it disagrees with the
    # boundary rows of the square's own map.
    fake_a = {cell: q.replace("a", "b") for cell, q in cmaps["a"].items()}
    with pytest.raises(FaceShapeMismatch):
        validate_subdivision(P, Q, vmap, shapes, {**cmaps, "a": fake_a})


def test_validate_rejects_interior_collision():
    P = digon()
    f = identity_subdivision(P)
    vmap, shapes, cmaps = segment_data(f)
    cmaps["b"] = {**cmaps["b"], ((0, 1),): "a"}
    with pytest.raises(InteriorCollision):
        validate_subdivision(P, P, vmap, shapes, cmaps)


def test_validate_rejects_uncovered_target():
    P = single_edge()
    Q, f = halved_edge()
    vmap, shapes, cmaps = segment_data(f)
    padded = build_precubical([
        ("v0", 0, (), ()), ("v1", 0, (), ()), ("e:1", 0, (), ()),
        ("x", 0, (), ()),
        ("e:0+", 1, ("v0",), ("e:1",)),
        ("e:1+", 1, ("e:1",), ("v1",)),
    ])
    with pytest.raises(Uncovered):
        validate_subdivision(P, padded, vmap, shapes, cmaps)


# ------------------------------------------------------ carrier laws

@pytest.mark.parametrize("make,counts", [
    (single_edge, 2),
    (single_edge, 3),
    (digon, 2),
    (circle_loop, 4),
    (torus_square, 2),
    (lambda: labelled_grid().complex, 2),
    (lambda: labelled_grid().complex, {"h01": 3, "h02": 3, "h10": 2,
                                       "h11": 2, "v01": 2, "v11": 2,
                                       "v10": 3, "v20": 3, "h00": 1,
                                       "h12": 2, "v00": 2, "v21": 1}),
])
def test_carrier_laws_on_worked_subdivisions(make, counts):
    Q, f = subdivide(make(), counts)
    check_carrier_laws(f)
    check_pushforward_chain_map(f)


@pytest.mark.parametrize("make", [digon, circle_loop, torus_square])
def test_carrier_laws_on_identity(make):
    check_carrier_laws(identity_subdivision(make()))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_carrier_laws_random(seed_p, seed_f):
    P = random_precubical(random.Random(seed_p))
    Q, f = random_subdivision(random.Random(seed_f), P)
    check_carrier_laws(f, random.Random(seed_f + 1))


def test_image_subset_commutes_with_union():
    P = labelled_grid().complex
    Q, f = subdivide(P, 2)
    X = faces_closure(P, {"s01"})
    Y = faces_closure(P, {"s10", "h02"})
    both = image_subset(f, X.union(Y))
    assert both.members == image_subset(f, X).union(
        image_subset(f, Y)).members
    empty = PrecubicalSubset(P, frozenset())
    assert image_subset(f, empty).members == frozenset()


# ------------------------------------------------- labelled automata

def test_subdivide_hda_splits_labels():
    A = labelled_grid()
    B, f = subdivide_hda(A, 2)
    assert B.labels[f.cell_maps["h00"][((0, 1),)]] == "a"
    assert B.labels[f.cell_maps["h00"][((1, 2),)]] == "b"
    assert B.labels[f.cell_maps["v00"][((0, 1),)]] == "u"
    assert set(B.initial) == {f.vertex_map[v] for v in A.initial}
    assert set(B.final) == {f.vertex_map[v] for v in A.final}
    report = check_abstraction(f, A, B)
    assert report.edges_checked == len(A.complex.cells(1))


def test_subdivide_hda_rejects_short_labels():
    with pytest.raises(LabelMismatch):
        subdivide_hda(labelled_grid(), 3)


def test_label_preservation_on_the_grid_pair():
    A = labelled_grid()
    B, f = subdivide_hda(A, 2)
    check_label_preservation(f, A, B, random.Random(3), n_paths=25)


def test_label_preservation_random():
    rng = random.Random(11)
    done = 0
    seed = 0
    while done < 15:
        seed += 1
        P = random_precubical(random.Random(seed))
        if not P.cells(0):
            continue
        counts = random_counts(rng, P)
        A = random_labelled_hda(rng, P, counts)
        B, f = subdivide_hda(A, counts)
        check_label_preservation(f, A, B, rng, n_paths=5)
        done += 1


def test_abstraction_mismatches():
    P = single_edge()
    A = validate_hda(P, {"v0"}, {"v1"}, {"e": "ab"})
    B, f = subdivide_hda(A, 2)
    with pytest.raises(InvalidMorphism):
        check_abstraction(f, A, A)
    moved = validate_hda(B.complex, {"e:1"}, set(B.final), dict(B.labels))
    with pytest.raises(InitialMismatch):
        check_abstraction(f, A, moved)
    ended = validate_hda(B.complex, set(B.initial), {"v0"}, dict(B.labels))
    with pytest.raises(FinalMismatch):
        check_abstraction(f, A, ended)
    relabel = validate_hda(B.complex, set(B.initial), set(B.final),
                           {"e:0+": "a", "e:1+": "x"})
    with pytest.raises(LabelMismatch):
        check_abstraction(f, A, relabel)


def test_abstraction_unit_on_free_monoid():
    assert FREE_MONOID.unit == ""
    assert FREE_MONOID.product("ab", "cd") == "abcd"
    A = labelled_grid()
    B, f = subdivide_hda(A, 2)
    omega = Path(A.complex, "p00", ("h00", "v10"))
    assert path_label(B, map_path(f, omega)) == path_label(A, omega) == "abuv"
