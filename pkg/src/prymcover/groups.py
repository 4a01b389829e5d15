"""Exact arithmetic for finite abelian groups, their characters, and Z[G].

Groups are presented as explicit direct sums of cyclic factors.  The
presentation is part of the data: ``Z/6`` and ``Z/2 (+) Z/3`` are abstractly
isomorphic but carry different distinguished generators, and everything
downstream (branch labels, reduced cover data, deck-transformation
bookkeeping) is phrased in terms of those generators.

All values are immutable and all operations are pure functions, so they can
be shared freely across threads.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

DEFAULT_GROUP_BOUND = 64


class GroupBoundError(RuntimeError):
    """An exhaustive group computation would exceed its configured size bound."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/m_1 (+) ... (+) Z/m_h with the coordinate vectors as generators.

    ``orders`` may be empty; that is the trivial group.
    """

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(m) for m in self.orders)
        if any(m < 2 for m in orders):
            raise ValueError(f"cyclic factor orders must be >= 2, got {orders!r}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    def element(self, coords: Iterable[int]) -> GroupElement:
        return GroupElement(self, tuple(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def generator(self, index: int) -> GroupElement:
        coords = [0] * self.rank
        coords[index] = 1
        return GroupElement(self, tuple(coords))

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic coordinate order (identity first)."""
        for coords in itertools.product(*(range(m) for m in self.orders)):
            yield GroupElement(self, coords)

    def character(self, coords: Iterable[int]) -> Character:
        return Character(self, tuple(coords))

    def trivial_character(self) -> Character:
        return Character(self, (0,) * self.rank)

    def characters(self) -> Iterator[Character]:
        """All |G| characters exactly once; the trivial character comes first."""
        for coords in itertools.product(*(range(m) for m in self.orders)):
            yield Character(self, coords)

    def dual(self, element: GroupElement) -> Character:
        """The character with the same coordinates as ``element``."""
        _same_group(self, element.group)
        return Character(self, element.coords)

    def __str__(self) -> str:
        if not self.orders:
            return "Z/1"
        return " + ".join(f"Z/{m}" for m in self.orders)


def _same_group(left: FiniteAbelianGroup, right: FiniteAbelianGroup) -> None:
    if left != right:
        raise ValueError(f"group mismatch: {left} vs {right}")


def _reduced(coords: tuple[int, ...], orders: tuple[int, ...]) -> tuple[int, ...]:
    if len(coords) != len(orders):
        raise ValueError(
            f"coordinate vector of length {len(coords)} for a rank-{len(orders)} group"
        )
    return tuple(int(c) % m for c, m in zip(coords, orders))


@dataclass(frozen=True)
class GroupElement:
    """Element of a :class:`FiniteAbelianGroup`, coordinates reduced mod m_i."""

    group: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _reduced(self.coords, self.group.orders))

    def __add__(self, other: GroupElement) -> GroupElement:
        _same_group(self.group, other.group)
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(self.group, tuple(-c for c in self.coords))

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def scaled(self, k: int) -> GroupElement:
        return GroupElement(self.group, tuple(k * c for c in self.coords))

    def order(self) -> int:
        """Smallest k >= 1 with k * self = 0; equals 1 iff self is the identity."""
        factors = (
            m // math.gcd(m, c) for m, c in zip(self.group.orders, self.coords)
        )
        return math.lcm(*factors) if self.group.orders else 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Character:
    """Character of a finite abelian group, written multiplicatively.

    The coordinates (k_1, ..., k_h) give the character sending the i-th
    generator to the rotation k_i / m_i of the circle.
    """

    group: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _reduced(self.coords, self.group.orders))

    def __mul__(self, other: Character) -> Character:
        _same_group(self.group, other.group)
        return Character(
            self.group, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __pow__(self, k: int) -> Character:
        return Character(self.group, tuple(k * c for c in self.coords))

    def inverse(self) -> Character:
        return Character(self.group, tuple(-c for c in self.coords))

    def order(self) -> int:
        factors = (
            m // math.gcd(m, c) for m, c in zip(self.group.orders, self.coords)
        )
        return math.lcm(*factors) if self.group.orders else 1

    @property
    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coords)

    def pair(self, element: GroupElement) -> RationalRotation:
        return pairing(self, element)


@dataclass(frozen=True)
class RationalRotation:
    """An element of Q/Z stored as its reduced representative in [0, 1)."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        value = Fraction(self.numerator, self.denominator) % 1
        object.__setattr__(self, "numerator", value.numerator)
        object.__setattr__(self, "denominator", value.denominator)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> RationalRotation:
        as_fraction = Fraction(value)
        return cls(as_fraction.numerator, as_fraction.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def __add__(self, other: RationalRotation) -> RationalRotation:
        return RationalRotation.from_fraction(self.fraction + other.fraction)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def pairing(chi: Character, element: GroupElement) -> RationalRotation:
    """The exact pairing <chi, g> = sum k_i c_i / m_i in Q/Z.

    Bilinear in both arguments and nondegenerate: pairing(chi, .) vanishes
    identically iff chi is trivial.
    """
    _same_group(chi.group, element.group)
    total = sum(
        (
            Fraction(k * c, m)
            for k, c, m in zip(chi.coords, element.coords, chi.group.orders)
        ),
        Fraction(0),
    )
    return RationalRotation.from_fraction(total)


class GroupRingElement:
    """Sparse element of the integral group ring Z[G].

    Stored as a coefficient map without explicit zeros; the product is the
    convolution induced by the group law.
    """

    __slots__ = ("group", "coefficients")

    def __init__(
        self,
        group: FiniteAbelianGroup,
        coefficients: Mapping[GroupElement, int] | None = None,
    ) -> None:
        cleaned: dict[GroupElement, int] = {}
        for elem, coeff in (coefficients or {}).items():
            _same_group(group, elem.group)
            value = int(coeff)
            if value:
                cleaned[elem] = value
        self.group = group
        self.coefficients = cleaned

    @classmethod
    def zero(cls, group: FiniteAbelianGroup) -> GroupRingElement:
        return cls(group)

    @classmethod
    def one(cls, group: FiniteAbelianGroup) -> GroupRingElement:
        return cls(group, {group.zero(): 1})

    @classmethod
    def basis(cls, element: GroupElement) -> GroupRingElement:
        return cls(element.group, {element: 1})

    def coefficient(self, element: GroupElement) -> int:
        return self.coefficients.get(element, 0)

    @property
    def support(self) -> frozenset[GroupElement]:
        return frozenset(self.coefficients)

    def augmentation(self) -> int:
        """Sum of coefficients; a ring homomorphism Z[G] -> Z."""
        return sum(self.coefficients.values())

    def positive_part(self) -> GroupRingElement:
        return GroupRingElement(
            self.group, {g: c for g, c in self.coefficients.items() if c > 0}
        )

    def negative_part(self) -> GroupRingElement:
        return GroupRingElement(
            self.group, {g: -c for g, c in self.coefficients.items() if c < 0}
        )

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        _same_group(self.group, other.group)
        merged = dict(self.coefficients)
        for elem, coeff in other.coefficients.items():
            merged[elem] = merged.get(elem, 0) + coeff
        return GroupRingElement(self.group, merged)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(
            self.group, {g: -c for g, c in self.coefficients.items()}
        )

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other: GroupRingElement | int) -> GroupRingElement:
        if isinstance(other, int):
            return GroupRingElement(
                self.group, {g: other * c for g, c in self.coefficients.items()}
            )
        _same_group(self.group, other.group)
        product: dict[GroupElement, int] = {}
        for left, a in self.coefficients.items():
            for right, b in other.coefficients.items():
                key = left + right
                product[key] = product.get(key, 0) + a * b
        return GroupRingElement(self.group, product)

    def __rmul__(self, other: int) -> GroupRingElement:
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self.coefficients == other.coefficients

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for elem in sorted(self.coefficients, key=lambda e: e.coords):
            coeff = self.coefficients[elem]
            terms.append(f"{coeff:+d}*{elem}")
        return " ".join(terms)


def automorphisms(
    group: FiniteAbelianGroup, *, bound: int = DEFAULT_GROUP_BOUND
) -> list[dict[GroupElement, GroupElement]]:
    """All automorphisms of ``group``, each as an element-indexed bijection.

    Brute-force over generator images with incremental injectivity pruning;
    guarded by ``bound`` because the search is exponential in the rank.
    """
    if group.order > bound:
        raise GroupBoundError(
            f"automorphism enumeration needs |G| <= {bound}, got {group.order}"
        )
    elements = list(group.elements())
    element_order = {e: e.order() for e in elements}
    found: list[dict[GroupElement, GroupElement]] = []

    def extend(index: int, partial: dict[GroupElement, GroupElement]) -> None:
        # partial maps the subgroup generated by the first `index` generators
        if index == group.rank:
            found.append(dict(partial))
            return
        m = group.orders[index]
        gen = group.generator(index)
        for candidate in elements:
            if m % element_order[candidate]:
                continue
            extended = dict(partial)
            for k in range(1, m):
                source_shift = gen.scaled(k)
                image_shift = candidate.scaled(k)
                for source, image in partial.items():
                    extended[source + source_shift] = image + image_shift
            if len(set(extended.values())) != len(extended):
                continue
            extend(index + 1, extended)

    extend(0, {group.zero(): group.zero()})
    return found
