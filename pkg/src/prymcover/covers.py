"""Ramified abelian cover types and their character-degree combinatorics.

A cover type is recorded purely combinatorially: the Galois group, the genus
of the base curve, and one nonzero group element per branch point (the local
monodromy, i.e. the distinguished generator of the inertia subgroup there).
Divisors never carry coordinates; everything downstream depends only on
degrees, so branch points are identified with their indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .groups import Character, FiniteAbelianGroup, GroupElement, _same_group


class InadmissibleCoverError(ValueError):
    """The combinatorial data cannot come from a connected Galois cover."""

    def __init__(self, message: str, report: "ValidationReport | None" = None) -> None:
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the admissibility check for a cover type."""

    admissible: bool
    label_sum_is_zero: bool
    generates: bool
    connectivity: str
    problems: tuple[str, ...]


@dataclass(frozen=True)
class CoverSpec:
    """Type of a ramified abelian Galois cover of a genus-g curve.

    ``branch_labels[i]`` is the inertia generator attached to the i-th branch
    point; its order is the local ramification index.
    """

    group: FiniteAbelianGroup
    base_genus: int
    branch_labels: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        genus = int(self.base_genus)
        if genus < 0:
            raise ValueError(f"base genus must be >= 0, got {genus}")
        labels = tuple(self.branch_labels)
        for label in labels:
            _same_group(self.group, label.group)
        object.__setattr__(self, "base_genus", genus)
        object.__setattr__(self, "branch_labels", labels)
        # cached pairing data: weights[j][i] = c_i(h_j) * (exponent / m_i), so
        # <chi, h_j> = sum_i k_i * weights[j][i] / exponent
        exponent = self.group.exponent
        object.__setattr__(self, "_exponent", exponent)
        object.__setattr__(
            self, "_branch_orders", tuple(label.order() for label in labels)
        )
        object.__setattr__(
            self,
            "_weights",
            tuple(
                tuple(
                    c * (exponent // m)
                    for c, m in zip(label.coords, self.group.orders)
                )
                for label in labels
            ),
        )

    @property
    def branch_count(self) -> int:
        return len(self.branch_labels)

    @property
    def degree(self) -> int:
        return self.group.order

    def branch_orders(self) -> tuple[int, ...]:
        return self._branch_orders

    # -- admissibility ----------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check that the data can come from a connected cover.

        Requires every label nonzero and the labels to sum to zero (the
        product of all local monodromies is trivial).  For a genus-0 base
        the labels must generate the whole group; for positive genus the
        handle generators can always be chosen to make the cover connected.
        """
        problems: list[str] = []
        for index, label in enumerate(self.branch_labels):
            if label.is_zero:
                problems.append(f"branch label {index} is the identity")
        total = self.group.zero()
        for label in self.branch_labels:
            total = total + label
        sum_ok = total.is_zero
        if not sum_ok:
            problems.append(f"branch labels sum to {total}, not zero")
        if self.base_genus == 0:
            generates = _generated_subgroup_size(self.group, self.branch_labels) == (
                self.group.order
            )
            if generates:
                connectivity = "branch labels generate the group"
            else:
                connectivity = "branch labels generate a proper subgroup"
                problems.append(
                    "genus-0 base: branch labels do not generate the group"
                )
        else:
            generates = True
            connectivity = "ok (handle generators absorb)"
        return ValidationReport(
            admissible=not problems,
            label_sum_is_zero=sum_ok,
            generates=generates,
            connectivity=connectivity,
            problems=tuple(problems),
        )

    def require_admissible(self) -> None:
        report = self.validate()
        if not report.admissible:
            raise InadmissibleCoverError("; ".join(report.problems), report)

    # -- local data at branch points --------------------------------------

    def local_exponent(self, chi: Character, index: int) -> int:
        """The integer a in {0, ..., n_i - 1} with <chi, h_i> = a / n_i.

        n_i is the order of the i-th branch label.  The representative 0 is
        used when chi is trivial on the inertia subgroup.
        """
        n_i = self._branch_orders[index]
        m = self._exponent
        total = sum(k * w for k, w in zip(chi.coords, self._weights[index])) % m
        # total / m has denominator dividing n_i, so this division is exact
        return total * n_i // m

    def carry(self, chi: Character, other: Character, index: int) -> int:
        """Carry bit: 1 iff the local exponents of chi and other overflow n_i."""
        n_i = self._branch_orders[index]
        return (self.local_exponent(chi, index) + self.local_exponent(other, index)) // n_i

    def correction_degree(self, chi: Character, other: Character) -> int:
        """Degree of the correction divisor in the multiplication rule.

        Symmetric in the two characters; for other = chi^{-1} it counts the
        branch points where chi is nontrivial on inertia.
        """
        return sum(self.carry(chi, other, i) for i in range(self.branch_count))

    def eigenbundle_degree(self, chi: Character) -> int:
        """Degree of the character eigensheaf: the integer sum of a_i / n_i.

        The sum is integral exactly when chi pairs to zero with the sum of
        the branch labels, which the admissibility check guarantees.
        """
        if not self.branch_labels:
            return 0
        common = math.lcm(*self._branch_orders)
        total = sum(
            self.local_exponent(chi, index) * (common // n_i)
            for index, n_i in enumerate(self._branch_orders)
        )
        quotient, remainder = divmod(total, common)
        if remainder:
            raise InadmissibleCoverError(
                f"non-integral eigensheaf degree {Fraction(total, common)} for"
                f" character {chi.coords}; branch labels do not sum to zero"
            )
        return quotient

    def degree_table(self) -> dict[Character, int]:
        return {chi: self.eigenbundle_degree(chi) for chi in self.group.characters()}

    # -- assembled data ----------------------------------------------------

    def building_data(self) -> BuildingData:
        degrees = self.degree_table()
        carries: dict[tuple[Character, Character, int], int] = {}
        characters = list(self.group.characters())
        for chi in characters:
            for other in characters:
                for index in range(self.branch_count):
                    carries[(chi, other, index)] = self.carry(chi, other, index)
        return BuildingData(
            degrees=degrees, carries=carries, branch_orders=self.branch_orders()
        )

    def reduced_building_data(self) -> ReducedBuildingData:
        """Generator-indexed data: one divisor row per distinguished generator.

        Row i lists, per branch point, the i-th coordinate of its label; the
        row sum is the degree of the divisor supporting the n_i-th power of
        the i-th generator eigensheaf.
        """
        matrix = tuple(
            tuple(label.coords[i] for label in self.branch_labels)
            for i in range(self.group.rank)
        )
        row_sums = tuple(sum(row) for row in matrix)
        generator_orders = self.group.orders
        for i in range(self.group.rank):
            dual = self.group.dual(self.group.generator(i))
            if generator_orders[i] * self.eigenbundle_degree(dual) != row_sums[i]:
                raise InadmissibleCoverError(
                    f"reduced data inconsistency at generator {i}:"
                    f" {generator_orders[i]} * deg != {row_sums[i]}"
                )
        return ReducedBuildingData(
            matrix=matrix, row_sums=row_sums, generator_orders=generator_orders
        )


@dataclass(frozen=True)
class BuildingData:
    """Full character-indexed degree data of a cover type.

    Satisfies, for all characters chi, eta and the trivial character 1:
    deg(1) = 0, deg(chi) + deg(eta) = deg(chi*eta) + correction(chi, eta),
    and deg(chi) + deg(chi^{-1}) = #{branch points where chi is nontrivial
    on inertia}.
    """

    degrees: Mapping[Character, int]
    carries: Mapping[tuple[Character, Character, int], int]
    branch_orders: tuple[int, ...]


@dataclass(frozen=True)
class ReducedBuildingData:
    """Generator-indexed divisor rows; entry (i, j) is coordinate i of label j."""

    matrix: tuple[tuple[int, ...], ...]
    row_sums: tuple[int, ...]
    generator_orders: tuple[int, ...]


def _generated_subgroup_size(
    group: FiniteAbelianGroup, generators: Iterable[GroupElement]
) -> int:
    span = {group.zero()}
    frontier = [group.zero()]
    gens = list(generators)
    while frontier:
        current = frontier.pop()
        for gen in gens:
            candidate = current + gen
            if candidate not in span:
                span.add(candidate)
                frontier.append(candidate)
    return len(span)
