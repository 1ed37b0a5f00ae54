#!/usr/bin/env python3
"""Regenerate every JSON fixture deterministically from the builders.

Run from the repository root:  python3 scripts/build_fixtures.py
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hdahomology.examples import (broken_square_records, circle_loop, digon,
                                  empty_complex, grid_holes_antidiagonal,
                                  grid_holes_diagonal, isolated_hole,
                                  klein_square, labelled_grid, single_edge,
                                  torus_square)
from hdahomology.formats import (ComplexDocument, CubeRecord, document_of,
                                 save_document)
from hdahomology.subdivision import subdivide, subdivide_hda

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def emit(doc):
    path = os.path.join(FIXTURES, f"{doc.name}.json")
    save_document(doc, path)
    print(f"wrote {os.path.relpath(path)}")


def main():
    os.makedirs(FIXTURES, exist_ok=True)

    emit(document_of("circle", circle_loop()))
    emit(document_of("digon", digon()))
    emit(document_of("torus", torus_square()))
    emit(document_of("klein", klein_square()))
    emit(document_of("grid-diag", grid_holes_diagonal()))
    emit(document_of("grid-antidiag", grid_holes_antidiagonal()))
    emit(document_of("isolated-hole", isolated_hole()))
    emit(document_of("empty", empty_complex()))

    A = labelled_grid()
    coarse = document_of("labelled-grid", A.complex, hda=A)
    emit(coarse)

    B, f = subdivide_hda(A, 2)
    emit(document_of("labelled-grid-fine", B.complex, hda=B,
                     subdivision=f, source_doc=coarse))

    P = single_edge()
    Q, g = subdivide(P, 2)
    emit(document_of("segment2", Q, subdivision=g,
                     source_doc=document_of("segment", P)))

    # Deliberately invalid: the top edge of the square runs backwards,
    # so validation must fail with IdentityViolation.
    records = tuple(CubeRecord(i, d, tuple(d0), tuple(d1))
                    for i, d, d0, d1 in broken_square_records())
    emit(ComplexDocument("broken-square", records))


if __name__ == "__main__":
    main()
