"""Higher dimensional automata: a precubical set with initial and final
states and monoid-valued edge labels.

The label condition requires opposite edges of every 2-cube to carry the
same label, which makes the label of any monotone path around a square
independent of the route.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import (LabelSquareMismatch, MissingLabel, StateNotVertex)
from .precubical import Path, PrecubicalSet


@dataclass(frozen=True)
class Monoid:
    """Unit element plus an associative product."""

    unit: object
    product: Callable[[object, object], object]


#: Words over strings under concatenation; the default label monoid.
FREE_MONOID = Monoid("", operator.add)


@dataclass(frozen=True)
class HDA:
    complex: PrecubicalSet
    initial: frozenset
    final: frozenset
    labels: Mapping[str, object]
    monoid: Monoid = field(default=FREE_MONOID)


def validate_hda(complex: PrecubicalSet,
                 initial: Iterable[str],
                 final: Iterable[str],
                 labels: Mapping[str, object],
                 monoid: Monoid = FREE_MONOID) -> HDA:
    """Check all automaton invariants and freeze the result."""
    initial, final = frozenset(initial), frozenset(final)
    for v in initial | final:
        if v not in complex or complex.degree(v) != 0:
            raise StateNotVertex(repr(v))
    for e in complex.edges:
        if e not in labels:
            raise MissingLabel(repr(e))
    for s in complex.cells(2):
        for i in (1, 2):
            lo, hi = labels[complex.face(s, i, 0)], labels[complex.face(s, i, 1)]
            if lo != hi:
                raise LabelSquareMismatch(s, i, lo, hi)

    # Spot-check the monoid laws on the labels actually present.
    sample = sorted({labels[e] for e in complex.edges}, key=repr)[:4]
    for a in sample:
        if monoid.product(monoid.unit, a) != a or monoid.product(a, monoid.unit) != a:
            raise ValueError(f"unit law fails on {a!r}")
        for b in sample:
            for c in sample:
                left = monoid.product(monoid.product(a, b), c)
                right = monoid.product(a, monoid.product(b, c))
                if left != right:
                    raise ValueError(f"associativity fails on {a!r}, {b!r}, {c!r}")

    return HDA(complex, initial, final,
               {e: labels[e] for e in complex.edges}, monoid)


def path_label(A: HDA, omega: Path) -> object:
    """Product of the edge labels along a path; the unit for length 0."""
    if omega.base is not A.complex:
        raise ValueError("path does not live in this automaton")
    out = A.monoid.unit
    for e in omega.edges:
        out = A.monoid.product(out, A.labels[e])
    return out
