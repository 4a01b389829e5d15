"""Exhaustive enumeration of admissible cover types, up to chosen symmetries."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .covers import CoverSpec
from .groups import FiniteAbelianGroup, GroupElement, automorphisms

DEFAULT_ENUM_LIMIT = 10_000_000

SYMMETRY_MODES = ("none", "permute-points", "permute-and-aut")


class EnumerationBoundError(RuntimeError):
    """The requested enumeration exceeds the configured search limit."""


@dataclass(frozen=True)
class EnumerationQuery:
    orders: tuple[int, ...]
    genus: int
    branch_count: int
    symmetry: str = "permute-points"
    limit: int = DEFAULT_ENUM_LIMIT

    def __post_init__(self) -> None:
        if self.symmetry not in SYMMETRY_MODES:
            raise ValueError(
                f"symmetry must be one of {SYMMETRY_MODES}, got {self.symmetry!r}"
            )
        if self.genus < 0 or self.branch_count < 0:
            raise ValueError("genus and branch count must be non-negative")


def iterate_classes(query: EnumerationQuery) -> Iterator[CoverSpec]:
    """Admissible cover types for the query, one canonical representative each.

    Classes and their representatives are emitted in lexicographic order of
    the label coordinate sequences, so repeated runs are byte-identical.
    With symmetry "none" every admissible ordered label tuple is its own
    class; "permute-points" identifies reorderings; "permute-and-aut"
    additionally identifies label tuples differing by a group automorphism.
    """
    group = FiniteAbelianGroup(query.orders)
    if group.order**query.branch_count > query.limit:
        raise EnumerationBoundError(
            f"|G|^r = {group.order}**{query.branch_count} exceeds limit {query.limit}"
        )
    nonzero = [e for e in group.elements() if not e.is_zero]
    if query.symmetry == "none":
        pool = itertools.product(nonzero, repeat=query.branch_count)
    else:
        pool = itertools.combinations_with_replacement(nonzero, query.branch_count)
    aut_maps = (
        automorphisms(group, bound=max(group.order, 1))
        if query.symmetry == "permute-and-aut"
        else None
    )
    for labels in pool:
        spec = CoverSpec(group, query.genus, labels)
        if not spec.validate().admissible:
            continue
        if aut_maps is not None and canonical_labels(labels, aut_maps) != labels:
            continue
        yield spec


def canonical_labels(
    labels: tuple[GroupElement, ...],
    aut_maps: list[dict[GroupElement, GroupElement]],
) -> tuple[GroupElement, ...]:
    """Lexicographically minimal sorted image of the labels under Aut(G)."""
    best: tuple[GroupElement, ...] | None = None
    for phi in aut_maps:
        image = tuple(sorted((phi[label] for label in labels), key=lambda e: e.coords))
        if best is None or [e.coords for e in image] < [e.coords for e in best]:
            best = image
    assert best is not None
    return best
