"""Metabelian cover data: presentation, twisted characters, and the
pushforward section-count condition.

A metabelian group is an extension of an abelian quotient by an abelian
normal subgroup; the corresponding cover factors through an intermediate
curve, and both stages are abelian covers.  Conjugation by lifts of the
quotient generators acts on the normal subgroup, twisting its characters
and permuting the branch data of the top stage.  That action is all the
exact bookkeeping needed here; the top-stage section counts feeding the
injectivity condition are either supplied by the caller or estimated with
an explicit generic-position flag.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .covers import CoverSpec
from .groups import Character, FiniteAbelianGroup, GroupElement, pairing
from .invariants import cover_genus


@dataclass(frozen=True)
class MetabelianPresentation:
    """Presentation data of a metabelian group.

    ``abelian_orders`` give the normal subgroup A, ``quotient_orders`` the
    abelian quotient N.  ``conjugation[j][i]`` is the exponent vector of the
    conjugate of the i-th A-generator by a lift of the j-th N-generator, and
    ``powers[j]`` is the exponent vector in A of that lift raised to the
    order of its image in N.  ``multipliers`` are the per-(i, j) eigenvalue
    exponents of the lift powers acting on local data; they are carried as
    inert metadata.
    """

    abelian_orders: tuple[int, ...]
    quotient_orders: tuple[int, ...]
    conjugation: tuple[tuple[tuple[int, ...], ...], ...]
    powers: tuple[tuple[int, ...], ...]
    multipliers: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "abelian_orders", tuple(int(m) for m in self.abelian_orders))
        object.__setattr__(self, "quotient_orders", tuple(int(a) for a in self.quotient_orders))
        conjugation = tuple(
            tuple(tuple(int(r) for r in row) for row in block)
            for block in self.conjugation
        )
        powers = tuple(tuple(int(k) for k in vec) for vec in self.powers)
        object.__setattr__(self, "conjugation", conjugation)
        object.__setattr__(self, "powers", powers)
        if self.multipliers is not None:
            object.__setattr__(
                self,
                "multipliers",
                tuple(tuple(int(d) for d in row) for row in self.multipliers),
            )
        s, l = len(self.abelian_orders), len(self.quotient_orders)
        if len(conjugation) != l or len(powers) != l:
            raise ValueError(
                f"need one conjugation block and one power vector per quotient"
                f" generator ({l}), got {len(conjugation)} and {len(powers)}"
            )
        for block in conjugation:
            if len(block) != s or any(len(row) != s for row in block):
                raise ValueError(f"conjugation blocks must be {s} x {s}")
        if any(len(vec) != s for vec in powers):
            raise ValueError(f"power vectors must have length {s}")

    @property
    def abelian_group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.abelian_orders)

    @property
    def quotient_group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.quotient_orders)

    def conjugation_image(self, j: int, i: int) -> GroupElement:
        """Conjugate of the i-th A-generator by the j-th lift."""
        return self.abelian_group.element(self.conjugation[j][i])

    def conjugated(self, element: GroupElement, j: int, power: int = 1) -> GroupElement:
        """Conjugate of an A-element by the ``power``-th power of the j-th lift.

        Applied literally, power times; a consistent presentation makes the
        result periodic in the power, but that is a checked property rather
        than something built in here.
        """
        if not 0 <= j < len(self.quotient_orders):
            raise ValueError(f"no quotient generator with index {j}")
        if power < 0:
            raise ValueError(f"power must be non-negative, got {power}")
        result = element
        for _ in range(power):
            acc = self.abelian_group.zero()
            for i, c in enumerate(result.coords):
                acc = acc + self.conjugation_image(j, i).scaled(c)
            result = acc
        return result


@dataclass(frozen=True)
class PresentationReport:
    valid: bool
    problems: tuple[str, ...]


def validate_presentation(presentation: MetabelianPresentation) -> PresentationReport:
    """Check the relations that make the presentation a consistent group.

    Conjugation by each lift must be an automorphism of the normal subgroup,
    the automorphisms must commute (the quotient is abelian), each must have
    the order of its quotient generator, and each must fix all lift powers.
    The first failing relation is reported.
    """
    problems: list[str] = []
    A = presentation.abelian_group
    elements = list(A.elements())
    maps: list[dict[GroupElement, GroupElement]] = []
    for j, order in enumerate(presentation.quotient_orders):
        for i, m in enumerate(presentation.abelian_orders):
            image_order = presentation.conjugation_image(j, i).order()
            if m % image_order:
                problems.append(
                    f"conjugation {j}: image of generator {i} has order"
                    f" {image_order}, not dividing {m}"
                )
        full = {e: presentation.conjugated(e, j) for e in elements}
        if len(set(full.values())) != len(elements):
            problems.append(f"conjugation {j} is not a bijection of the subgroup")
        maps.append(full)
        if not problems:
            iterated = {e: presentation.conjugated(e, j, order) for e in elements}
            if any(iterated[e] != e for e in elements):
                problems.append(
                    f"conjugation {j} does not have order dividing {order}"
                )
        if problems:
            return PresentationReport(valid=False, problems=tuple(problems))
    for j in range(len(maps)):
        for k in range(j + 1, len(maps)):
            if any(maps[j][maps[k][e]] != maps[k][maps[j][e]] for e in elements):
                problems.append(f"conjugations {j} and {k} do not commute")
                return PresentationReport(valid=False, problems=tuple(problems))
    for j in range(len(maps)):
        for u, vec in enumerate(presentation.powers):
            power_element = A.element(vec)
            if maps[j][power_element] != power_element:
                problems.append(
                    f"conjugation {j} moves the power vector of lift {u}"
                )
                return PresentationReport(valid=False, problems=tuple(problems))
    return PresentationReport(valid=True, problems=())


def twisted_character(
    presentation: MetabelianPresentation,
    chi: Character,
    j: int,
    power: int = 1,
) -> Character:
    """Precompose a character of the normal subgroup with conjugation.

    Twisting by the order of the j-th quotient generator returns the
    original character.
    """
    A = presentation.abelian_group
    coords = []
    for u in range(A.rank):
        image = presentation.conjugated(A.generator(u), j, power)
        rotation = pairing(chi, image)
        coords.append(rotation.numerator * (A.orders[u] // rotation.denominator))
    return A.character(coords)


def twisted_label(
    presentation: MetabelianPresentation, label: GroupElement, j: int
) -> GroupElement:
    """Transport a branch label the way the quotient action moves divisors.

    The moved label is the element whose coordinate-dual character is the
    twist of the original label's dual.
    """
    A = presentation.abelian_group
    twisted = twisted_character(presentation, A.dual(label), j)
    return A.element(twisted.coords)


def character_orbits(
    presentation: MetabelianPresentation,
) -> tuple[tuple[Character, ...], ...]:
    """Partition of the dual of the normal subgroup under all twists.

    Orbit sizes divide the quotient order; the trivial character is always a
    fixed point.  Orbits are listed, and internally ordered, by first
    appearance in the standard character enumeration.
    """
    A = presentation.abelian_group
    characters = list(A.characters())
    index = {chi: pos for pos, chi in enumerate(characters)}
    seen: set[Character] = set()
    orbits: list[tuple[Character, ...]] = []
    for chi in characters:
        if chi in seen:
            continue
        orbit = {chi}
        frontier = [chi]
        while frontier:
            current = frontier.pop()
            for j in range(len(presentation.quotient_orders)):
                moved = twisted_character(presentation, current, j)
                if moved not in orbit:
                    orbit.add(moved)
                    frontier.append(moved)
        seen |= orbit
        orbits.append(tuple(sorted(orbit, key=index.__getitem__)))
    return tuple(orbits)


@dataclass(frozen=True)
class MetabelianCoverData:
    """Degree-level data of a two-stage cover X -> Z -> Y.

    The bottom stage is the quotient cover of the genus-``base_genus`` curve
    with the quotient group and ``quotient_branch`` labels.  The top stage
    is an abelian cover of the intermediate curve whose branch labels are
    grouped into orbits of the quotient action; each orbit lists the labels
    at the points it contains.
    """

    presentation: MetabelianPresentation
    base_genus: int
    quotient_branch: tuple[GroupElement, ...]
    fiber_orbits: tuple[tuple[GroupElement, ...], ...]

    @property
    def degree(self) -> int:
        """Degree of the bottom stage."""
        return self.presentation.quotient_group.order

    def quotient_cover(self) -> CoverSpec:
        return CoverSpec(
            self.presentation.quotient_group, self.base_genus, self.quotient_branch
        )

    def middle_genus(self) -> int:
        return cover_genus(self.quotient_cover())

    def fiber_cover(self) -> CoverSpec:
        labels = tuple(label for orbit in self.fiber_orbits for label in orbit)
        return CoverSpec(self.presentation.abelian_group, self.middle_genus(), labels)

    def top_genus(self) -> int:
        return cover_genus(self.fiber_cover())

    def validate(self) -> PresentationReport:
        problems: list[str] = []
        pres_report = validate_presentation(self.presentation)
        problems.extend(pres_report.problems)
        quotient_report = self.quotient_cover().validate()
        problems.extend(f"bottom stage: {p}" for p in quotient_report.problems)
        if not problems:
            fiber_report = self.fiber_cover().validate()
            problems.extend(f"top stage: {p}" for p in fiber_report.problems)
        t = self.degree
        for idx, orbit in enumerate(self.fiber_orbits):
            if not orbit:
                problems.append(f"orbit {idx} is empty")
                continue
            if t % len(orbit):
                problems.append(
                    f"orbit {idx} has size {len(orbit)}, not dividing {t}"
                )
            counted = Counter(orbit)
            for j in range(len(self.presentation.quotient_orders)):
                moved = Counter(
                    twisted_label(self.presentation, label, j) for label in orbit
                )
                if moved != counted:
                    problems.append(
                        f"orbit {idx} labels are not stable under quotient"
                        f" generator {j}"
                    )
                    break
        return PresentationReport(valid=not problems, problems=tuple(problems))


@dataclass(frozen=True)
class SectionCountEstimate:
    """A section count, either exact or a flagged generic-position estimate.

    When ``exact`` both bounds agree and no positional assumption was made.
    Otherwise ``lower`` is the generic value (vanishing higher cohomology)
    and ``upper``, when known, is the special-divisor ceiling.
    """

    lower: int
    upper: int | None
    exact: bool
    generic: bool
    detail: str

    @property
    def value(self) -> int:
        return self.lower


def pushforward_section_count(
    data: MetabelianCoverData, chi: Character
) -> SectionCountEstimate:
    """Sections of the canonical-twist pushforward attached to a character.

    By the projection formula this is a line-bundle count on the
    intermediate curve: the canonical bundle there twisted by the character
    eigensheaf of the top stage.  The count is exact once the twist has
    positive degree; at degree zero it is pinched between the two
    cohomology bounds and flagged.
    """
    fiber = data.fiber_cover()
    genus_mid = fiber.base_genus
    degree = 2 * genus_mid - 2 + fiber.eigenbundle_degree(chi)
    if degree < 0:
        return SectionCountEstimate(
            lower=0, upper=0, exact=True, generic=False, detail="negative degree"
        )
    if degree > 2 * genus_mid - 2:
        value = degree + 1 - genus_mid
        return SectionCountEstimate(
            lower=value,
            upper=value,
            exact=True,
            generic=False,
            detail=f"degree {degree} exceeds 2g-2 = {2 * genus_mid - 2}",
        )
    return SectionCountEstimate(
        lower=max(degree + 1 - genus_mid, 0),
        upper=degree // 2 + 1,
        exact=False,
        generic=True,
        detail=f"degree {degree} in the special range; generic value used",
    )


def product_section_estimate(
    data: MetabelianCoverData, chi: Character
) -> SectionCountEstimate:
    """Euler-characteristic estimate for the paired pushforward product.

    The tensor product of the two pushforwards is not itself a pushforward,
    so no exact degree-level count exists; assuming vanishing higher
    cohomology gives the flagged value below.
    """
    t = data.degree
    genus_mid = data.middle_genus()
    fiber = data.fiber_cover()
    d_chi = fiber.eigenbundle_degree(chi)
    d_inv = fiber.eigenbundle_degree(chi.inverse())
    euler = t * (2 * genus_mid - 2 + d_chi + d_inv) + t * t * (data.base_genus - 1)
    return SectionCountEstimate(
        lower=max(euler, 0),
        upper=None,
        exact=False,
        generic=True,
        detail="euler characteristic with vanishing higher cohomology assumed",
    )


@dataclass(frozen=True)
class ConditionReport:
    """Verdict of the pushforward section-count inequality for one orbit."""

    holds: bool
    lhs: int
    rhs: int
    degree: int
    exact: bool
    generic: bool
    orbit: tuple[Character, ...]
    assumptions: tuple[str, ...]


def check_pushforward_inequality(
    data: MetabelianCoverData,
    chi: Character,
    *,
    h0_triple: Sequence[int] | None = None,
    section_asserted: bool = False,
    global_generation_asserted: bool = False,
) -> ConditionReport:
    """Decide the section-count inequality certifying differential injectivity.

    ``h0_triple`` lists the section counts of the two canonical-twist
    pushforwards for the character and its inverse, then of their paired
    product.  When omitted the counts are estimated with generic-position
    flags; the verdict is never silently treated as exact in that case.
    The global-generation hypotheses cannot be read off the degree data and
    are echoed as caller assertions.
    """
    t = data.degree
    orbits = character_orbits(data.presentation)
    orbit = next(o for o in orbits if chi in o)
    assumptions: list[str] = []
    if section_asserted:
        assumptions.append("canonical twist has a nonzero global section (asserted)")
    if global_generation_asserted:
        assumptions.append("pushforwards globally generated (asserted)")
    if h0_triple is None:
        first = pushforward_section_count(data, chi)
        second = pushforward_section_count(data, chi.inverse())
        product = product_section_estimate(data, chi)
        h0_first, h0_second, h0_product = first.value, second.value, product.value
        exact = False
        generic = True
        assumptions.append("generic-position section-count estimates")
    else:
        if len(h0_triple) != 3:
            raise ValueError("h0_triple must list exactly three section counts")
        h0_first, h0_second, h0_product = (int(v) for v in h0_triple)
        if min(h0_first, h0_second, h0_product) < 0:
            raise ValueError("section counts must be non-negative")
        exact = True
        generic = False
    rhs = t * (h0_first + h0_second) - t * t
    return ConditionReport(
        holds=h0_product <= rhs,
        lhs=h0_product,
        rhs=rhs,
        degree=t,
        exact=exact,
        generic=generic,
        orbit=orbit,
        assumptions=tuple(assumptions),
    )


def section_count_total(data: MetabelianCoverData) -> int | None:
    """Sum the exact per-character counts into a genus of the top curve.

    The trivial character always sits at the degree boundary, so its term is
    taken to be the intermediate genus (the count for the canonical bundle
    itself).  Returns None when any nontrivial count is inexact.
    """
    A = data.presentation.abelian_group
    total = data.middle_genus()
    for chi in A.characters():
        if chi.is_trivial:
            continue
        estimate = pushforward_section_count(data, chi)
        if not estimate.exact:
            return None
        total += estimate.value
    return total
