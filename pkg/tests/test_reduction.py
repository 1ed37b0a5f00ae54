import random

import pytest

from checks import check_reduction_instance, random_reduction_instance
from hdahomology.errors import NotTopCube, PreconditionViolated
from hdahomology.examples import digon, labelled_grid, single_edge
from hdahomology.homology import homology_presentation
from hdahomology.precubical import PrecubicalSubset, faces_closure
from hdahomology.reduction import (is_broken, is_past_complete,
                                   past_complete_violations, reduce,
                                   reduce_with_trace, remove_top, top_cubes)
from hdahomology.subdivision import (carrier_complex, image_subset, subdivide,
                                     subdivide_hda)


def halved_edge():
    return subdivide(single_edge(), 2)


def members(Q, names):
    return PrecubicalSubset(Q, frozenset(names))


# --------------------------------------------------------- top cubes

def test_top_cubes():
    P = digon()
    assert top_cubes(faces_closure(P, {"a", "b"})) == {"a", "b"}
    assert top_cubes(faces_closure(P, {"v", "w"})) == {"v", "w"}
    assert top_cubes(faces_closure(P, {"a", "w"})) == {"a"}
    Q = labelled_grid().complex
    X = faces_closure(Q, {"s01", "h01", "p00"})
    assert top_cubes(X) == {"s01", "p00"}


# ------------------------------------------- the halved-edge example

def test_halved_edge_broken_and_past_complete():
    Q, f = halved_edge()
    A = members(Q, {"v0", "e:0+", "e:1"})
    assert is_past_complete(f, "e", A)
    assert is_broken(f, "e", A)
    assert is_broken(f, "v1", A)
    assert not is_broken(f, "v0", A)
    whole = members(Q, set(iter(Q)))
    assert not is_broken(f, "e", whole)

    cut = members(Q, {"v0", "e:1"})
    assert not is_past_complete(f, "e", cut)
    assert past_complete_violations(f, cut) == ("e",)
    with pytest.raises(PreconditionViolated) as err:
        reduce(f, cut)
    assert err.value.cubes == ("e",)


def test_halved_edge_removal():
    Q, f = halved_edge()
    A = members(Q, {"v0", "e:0+", "e:1"})
    A2 = remove_top(f, A, "e")
    assert A2.members == {"v0"}
    final, trace = reduce_with_trace(f, A)
    assert final.members == {"v0"}
    assert len(trace) == 1
    assert trace[0].cube == "e" and trace[0].degree == 1
    assert trace[0].cells_before == 3 and trace[0].cells_after == 1


def test_remove_top_requires_a_top_cube():
    Q, f = halved_edge()
    A = members(Q, {"v0", "e:0+", "e:1"})
    with pytest.raises(NotTopCube):
        remove_top(f, A, "v0")
    with pytest.raises(NotTopCube):
        remove_top(f, A, "v1")
    with pytest.raises(NotTopCube):
        remove_top(f, A, "ghost")


def test_whole_image_is_a_fixed_point():
    Q, f = halved_edge()
    whole = members(Q, set(iter(Q)))
    final, trace = reduce_with_trace(f, whole)
    assert final.members == whole.members
    assert trace == ()


def test_empty_subset_is_a_fixed_point():
    Q, f = halved_edge()
    empty = members(Q, set())
    assert reduce(f, empty).members == frozenset()
    assert check_reduction_instance(f, empty) == 0


# ------------------------------------------ a two-dimensional prune

def test_dangling_half_edge_is_pruned():
    A = labelled_grid()
    B, f = subdivide_hda(A, 2)
    P, Q = f.source, f.target
    kept = image_subset(f, faces_closure(P, {"s01"}))
    half = f.cell_maps["h00"][((0, 1),)]
    mid = f.cell_maps["h00"][(1,)]
    start = members(Q, set(kept.members) | {"p00", half, mid})
    assert past_complete_violations(f, start) == ()
    assert is_broken(f, "h00", start)

    final, trace = reduce_with_trace(f, start)
    assert final.members == kept.members | {"p00"}
    assert [r.cube for r in trace] == ["h00"]
    check_reduction_instance(f, start)


def test_prune_keeps_homology():
    A = labelled_grid()
    B, f = subdivide_hda(A, 2)
    P, Q = f.source, f.target
    kept = image_subset(f, faces_closure(P, {"s01", "s10", "h00", "v00"}))
    assert past_complete_violations(f, kept) == ()
    steps = check_reduction_instance(f, kept)
    assert steps == 0  # full cube images are never broken
    pres = homology_presentation(kept.to_precubical_set())
    assert pres.degree(0).betti == 1


def test_reduced_subset_has_no_broken_cubes():
    rng = random.Random(2)
    for seed in range(8):
        f, A = random_reduction_instance(seed)
        final = reduce(f, A)
        cA = carrier_complex(f, final)
        assert not any(is_broken(f, x, final) for x in cA.members)
        assert image_subset(f, cA).members == final.members


def test_random_instances_pass_every_step_invariant():
    total = 0
    for seed in range(25):
        f, A = random_reduction_instance(seed)
        total += check_reduction_instance(f, A)
    assert total >= 1, "no instance exercised a removal step"
