"""The pointing relation between homology classes and its graph.

Class alpha points to class beta when some pair of face-closed subsets
(X, Y) has alpha in the image of X's homology, beta in the image of Y's,
and every vertex of X reaches every vertex of Y.  Any such pair enlarges
to a Galois concept over full subcomplexes without shrinking the images,
so the decision procedure only scans concepts.  brute_points_to checks
the raw definition by enumerating subset pairs and is the oracle for the
concept-based procedure on tiny complexes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotACycle, TooLarge
from .homology import (HomologyClass, HomologyPresentation, Ring, ZZ,
                       boundary_lattice, homology_presentation,
                       image_cycle_matrix, image_membership, zero_class)
from .precubical import PrecubicalSet, PrecubicalSubset, full_subcomplex
from .reach import Concept, concepts_of, reachability


@lru_cache(maxsize=None)
def _full_sub(P: PrecubicalSet, vertices: frozenset) -> PrecubicalSubset:
    return full_subcomplex(P, vertices)


@lru_cache(maxsize=None)
def _membership(P: PrecubicalSet, vertices: frozenset, degree: int,
                vector: tuple, ring: Ring) -> bool:
    cls = HomologyClass(P, degree, vector, ring, True)
    return image_membership(P, _full_sub(P, vertices), cls)


def _check_pair(alpha: HomologyClass, beta: HomologyClass):
    if alpha.complex is not beta.complex:
        raise ValueError("classes live in different complexes")
    if alpha.ring != beta.ring:
        raise ValueError("classes use different coefficient rings")
    if not (alpha.is_cycle and beta.is_cycle):
        raise NotACycle("pointing is defined on cycles")


def points_to(P: PrecubicalSet, alpha: HomologyClass,
              beta: HomologyClass, limit: int = 100_000) -> bool:
    """Does alpha point to beta?  Scans the Galois concepts of P."""
    _check_pair(alpha, beta)
    if alpha.complex is not P:
        raise ValueError("classes do not live in the given complex")
    for concept in concepts_of(P, limit):
        if _membership(P, concept.extent, alpha.degree, alpha.vector,
                       alpha.ring) and \
           _membership(P, concept.intent, beta.degree, beta.vector,
                       beta.ring):
            return True
    return False


# ------------------------------------------------------------ the graph

@dataclass(frozen=True)
class GraphNode:
    name: str
    degree: int
    order: int            # 0 = infinite order, 1 = the zero class, else torsion
    vector: tuple


@dataclass(frozen=True)
class ConceptRecord:
    concept: Concept
    source_nodes: tuple     # node names passing the extent membership test
    target_nodes: tuple     # node names passing the intent membership test
    source_generators: tuple  # (degree, canonical vector) generating the image
    target_generators: tuple


@dataclass(frozen=True)
class HomologyGraph:
    complex: PrecubicalSet
    ring: Ring
    presentation: HomologyPresentation
    nodes: tuple
    edges: tuple            # ordered (source name, target name) pairs
    concept_records: tuple

    def node(self, name: str) -> GraphNode:
        for n in self.nodes:
            if n.name == name:
                return n
        raise KeyError(name)

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in set(self.edges)


def _image_generators(P, vertices, ring):
    """Canonical nonzero generators of the image subgroup, all degrees."""
    X = _full_sub(P, vertices)
    out = []
    seen = set()
    for n in range(P.dim + 1):
        lat = boundary_lattice(P, n, ring)
        M = image_cycle_matrix(P, X, n, ring)
        for j in range(M.ncols):
            vec = lat.reduce(M.column(j))
            if any(vec) and (n, vec) not in seen:
                seen.add((n, vec))
                out.append((n, vec))
    return tuple(out)


def homology_graph(P: PrecubicalSet, ring: Ring = ZZ,
                   limit: int = 100_000) -> HomologyGraph:
    """Finite projection of the pointing relation onto the presentation
    generators plus the zero class, with the full concept table."""
    pres = homology_presentation(P, ring)
    zero = zero_class(P, 0, ring)
    nodes = [GraphNode("zero", 0, 1, zero.vector)]
    classes = {"zero": zero}
    for name, cls, order in pres.generators():
        nodes.append(GraphNode(name, cls.degree, order, cls.vector))
        classes[name] = cls
    edges = []
    for a in nodes:
        for b in nodes:
            if points_to(P, classes[a.name], classes[b.name], limit):
                edges.append((a.name, b.name))
    records = []
    for concept in concepts_of(P, limit):
        src = tuple(n.name for n in nodes
                    if _membership(P, concept.extent, n.degree,
                                   n.vector, ring))
        tgt = tuple(n.name for n in nodes
                    if _membership(P, concept.intent, n.degree,
                                   n.vector, ring))
        records.append(ConceptRecord(
            concept, src, tgt,
            _image_generators(P, concept.extent, ring),
            _image_generators(P, concept.intent, ring)))
    return HomologyGraph(P, ring, pres, tuple(nodes), tuple(edges),
                         tuple(records))


# ------------------------------------------------------------ the oracle

def _closed_subsets(P: PrecubicalSet):
    cells = [c for n in range(P.dim + 1) for c in P.cells(n)]
    index = {c: i for i, c in enumerate(cells)}
    face_mask = []
    for c in cells:
        mask = 0
        for side in P.faces_of(c):
            for f in side:
                mask |= 1 << index[f]
        face_mask.append(mask)
    for mask in range(1 << len(cells)):
        ok = True
        probe = mask
        while probe:
            i = (probe & -probe).bit_length() - 1
            if face_mask[i] & ~mask:
                ok = False
                break
            probe &= probe - 1
        if ok:
            members = frozenset(c for i, c in enumerate(cells) if mask >> i & 1)
            yield PrecubicalSubset(P, members)


def brute_points_to(P: PrecubicalSet, alpha: HomologyClass,
                    beta: HomologyClass, limit: int = 10) -> bool:
    """Literal defining condition of the pointing relation, by exhaustive
    enumeration of face-closed subset pairs.  Test oracle only."""
    _check_pair(alpha, beta)
    total = sum(len(P.cells(n)) for n in range(P.dim + 1))
    if total > limit:
        raise TooLarge(f"{total} cubes exceeds the oracle limit {limit}")
    R = reachability(P)
    sources = []
    targets = []
    for X in _closed_subsets(P):
        if image_membership(P, X, alpha):
            sources.append(X.cells(0))
        if image_membership(P, X, beta):
            targets.append(X.cells(0))
    for xs in sources:
        for ys in targets:
            if all(R.reaches(x, y) for x in xs for y in ys):
                return True
    return False
