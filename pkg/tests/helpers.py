"""Shared construction and enumeration helpers for the test suite."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from prymcover import CoverSpec, FiniteAbelianGroup, MetabelianPresentation


def make_group(orders: Iterable[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


def make_spec(orders: Iterable[int], genus: int, labels: Iterable[Iterable[int]]) -> CoverSpec:
    group = make_group(orders)
    return CoverSpec(group, genus, tuple(group.element(c) for c in labels))


def group_presentations(max_order: int, *, min_factor: int = 2) -> list[tuple[int, ...]]:
    """All sorted cyclic-factor tuples with product <= max_order, incl. the
    empty tuple (trivial group)."""
    found: list[tuple[int, ...]] = [()]

    def extend(prefix: tuple[int, ...], start: int, product: int) -> None:
        for m in range(start, max_order + 1):
            if product * m > max_order:
                break
            found.append(prefix + (m,))
            extend(prefix + (m,), m, product * m)

    extend((), min_factor, 1)
    return found


def iter_admissible_specs(
    max_order: int,
    genera: Iterable[int],
    max_branch: int,
    *,
    presentations: Iterable[tuple[int, ...]] | None = None,
) -> Iterator[CoverSpec]:
    """Every admissible cover type, branch labels up to reordering.

    Label multisets are enumerated in lexicographic order, filtered by the
    library's own admissibility check.
    """
    genera = tuple(genera)
    if presentations is None:
        presentations = group_presentations(max_order)
    for orders in presentations:
        group = FiniteAbelianGroup(orders)
        nonzero = [e for e in group.elements() if not e.is_zero]
        for r in range(max_branch + 1):
            for labels in itertools.combinations_with_replacement(nonzero, r):
                total = group.zero()
                for label in labels:
                    total = total + label
                if not total.is_zero:
                    continue
                for genus in genera:
                    spec = CoverSpec(group, genus, labels)
                    if spec.validate().admissible:
                        yield spec


def presentation_corpus() -> list[MetabelianPresentation]:
    """Metabelian presentations exercised across the suite.

    Includes the symmetric-group-on-three-letters model (order-3 kernel with
    an inverting involution), larger cyclic twists, a coordinate swap, and a
    plain direct product.
    """
    return [
        # order-3 kernel, inverting involution (symmetric group on 3 letters)
        MetabelianPresentation((3,), (2,), (((2,),),), ((0,),)),
        # order-5 kernel with a full order-4 twist
        MetabelianPresentation((5,), (4,), (((2,),),), ((0,),)),
        # order-7 kernel, order-3 twist by doubling
        MetabelianPresentation((7,), (3,), (((2,),),), ((0,),)),
        # order-8 kernel, involution by cubing
        MetabelianPresentation((8,), (2,), (((3,),),), ((0,),)),
        # rank-2 kernel, coordinate swap
        MetabelianPresentation(
            (3, 3), (2,), ((((0, 1), (1, 0)),)), ((0, 0),)
        ),
        # rank-2 kernel, two commuting involutions: swap and inversion
        MetabelianPresentation(
            (3, 3),
            (2, 2),
            (
                ((0, 1), (1, 0)),
                ((2, 0), (0, 2)),
            ),
            ((0, 0), (0, 0)),
        ),
        # nontrivial lift power fixed by the swap; multipliers carried inert
        MetabelianPresentation(
            (3, 3), (2,), ((((0, 1), (1, 0)),)), ((1, 1),), multipliers=((0, 0),)
        ),
        # direct product (trivial conjugation)
        MetabelianPresentation(
            (4, 2), (3,), ((((1, 0), (0, 1)),)), ((0, 0),)
        ),
    ]
