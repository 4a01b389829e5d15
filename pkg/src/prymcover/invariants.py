"""Numerical invariants of an abelian cover and of its Prym variety.

The cover genus is computed twice, by independent routes: the ramification
formula, and an explicit orbit count for the translation action of each
branch label on the group.  Eigenspace dimensions of the space of
differentials refine the genus and feed the symmetric-square dimension
audit used by the injectivity criteria.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .covers import CoverSpec, InadmissibleCoverError
from .groups import Character, GroupBoundError

DEFAULT_MONODROMY_BOUND = 4096


class FormulaRangeError(ValueError):
    """The polarization-type formula was evaluated outside its range."""


class UnsupportedGenusError(ValueError):
    """The requested computation needs a base curve of genus >= 2."""


def cover_genus(spec: CoverSpec) -> int:
    """Genus of the covering curve via the ramification formula.

    2g' - 2 = n(2g - 2) + sum_j (n / n_j)(n_j - 1) over branch points, where
    n_j is the local ramification index.
    """
    n = spec.degree
    correction = sum((n // n_j) * (n_j - 1) for n_j in spec.branch_orders())
    doubled = n * (2 * spec.base_genus - 2) + correction
    if doubled % 2:
        raise InadmissibleCoverError(
            f"ramification count {doubled} is odd; no such cover exists"
        )
    genus = doubled // 2 + 1
    if genus < 0:
        raise InadmissibleCoverError(
            f"ramification formula gives negative genus {genus}"
        )
    return genus


def cover_genus_from_monodromy(
    spec: CoverSpec, *, bound: int = DEFAULT_MONODROMY_BOUND
) -> int:
    """Independent genus computation by counting monodromy orbits.

    The regular action of the group on itself realizes each branch label as
    a permutation of the sheets; the Euler characteristic of the cover is
    n * chi(base) minus one defect per merged sheet, counted by the actual
    cycles of each translation.
    """
    if spec.group.order > bound:
        raise GroupBoundError(
            f"orbit counting needs |G| <= {bound}, got {spec.group.order}"
        )
    n = spec.degree
    elements = list(spec.group.elements())
    euler = n * (2 - 2 * spec.base_genus)
    for label in spec.branch_labels:
        seen: set = set()
        cycles = 0
        for start in elements:
            if start in seen:
                continue
            cycles += 1
            current = start
            while current not in seen:
                seen.add(current)
                current = current + label
        euler -= n - cycles
    if euler % 2:
        raise InadmissibleCoverError(f"odd Euler characteristic {euler}")
    return (2 - euler) // 2


def eigenspace_dimensions(spec: CoverSpec) -> dict[Character, int]:
    """Dimension of each character eigenspace of the differentials upstairs.

    The trivial character contributes the base genus.  A nontrivial
    character chi contributes the section count of the canonical bundle
    twisted by the inverse-character eigensheaf: g - 1 + d for degree d
    (the degree-zero case is a nontrivial torsion twist on a connected
    cover, so no extra section appears), and max(d - 1, 0) on a rational
    base.
    """
    g = spec.base_genus
    dims: dict[Character, int] = {}
    for chi in spec.group.characters():
        if chi.is_trivial:
            dims[chi] = g
            continue
        degree = spec.eigenbundle_degree(chi.inverse())
        if g == 0:
            dims[chi] = max(degree - 1, 0)
        else:
            dims[chi] = g - 1 + degree
    return dims


def prym_dimension(spec: CoverSpec) -> int:
    """Dimension of the Prym variety: cover genus minus base genus."""
    return cover_genus(spec) - spec.base_genus


def polarization_type(spec: CoverSpec) -> tuple[int, ...]:
    """Type of the induced polarization on the Prym variety.

    For an unramified cover the type is (1, ..., 1, n, ..., n) with g - 1
    copies of n; with branch points, g copies of n.  The remaining entries
    are 1 and the length is the Prym dimension.  Negative multiplicities are
    reported as errors rather than clamped.
    """
    p = prym_dimension(spec)
    g = spec.base_genus
    n = spec.degree
    if spec.branch_count == 0:
        big, ones = g - 1, p - (g - 1)
    else:
        big, ones = g, p - g
    if big < 0 or ones < 0:
        raise FormulaRangeError(
            f"polarization formula out of range: prym dimension {p},"
            f" base genus {g}, {spec.branch_count} branch points"
        )
    return (1,) * ones + (n,) * big


@dataclass(frozen=True)
class SymSquareAudit:
    """Dimension audit of the symmetric square of the anti-invariant forms.

    ``per_character`` maps each character psi to the dimension of the psi
    eigenspace of the symmetric square.  ``verdict`` is "impossible" when
    the invariant block (pairs chi, chi^{-1}) is too small to surject onto
    the quadratic differentials of the base, a necessary condition for the
    codifferential to be injective; "possible" is never a proof.
    """

    source_dim: int
    target_dim: int
    per_character: Mapping[Character, int]
    invariant_block_dim: int
    verdict: str


def sym_square_audit(spec: CoverSpec) -> SymSquareAudit:
    if spec.base_genus < 2:
        raise UnsupportedGenusError(
            f"symmetric-square audit needs base genus >= 2, got {spec.base_genus}"
        )
    dims = eigenspace_dimensions(spec)
    nontrivial = [chi for chi in spec.group.characters() if not chi.is_trivial]
    per: dict[Character, int] = {psi: 0 for psi in spec.group.characters()}
    for chi in nontrivial:
        t = dims[chi]
        per[chi * chi] += t * (t + 1) // 2
    for chi, eta in itertools.combinations(nontrivial, 2):
        per[chi * eta] += dims[chi] * dims[eta]
    source = sum(per.values())
    target = 3 * spec.base_genus - 3 + spec.branch_count
    invariant_block = per[spec.group.trivial_character()]
    verdict = "impossible" if invariant_block < target else "possible"
    return SymSquareAudit(
        source_dim=source,
        target_dim=target,
        per_character=per,
        invariant_block_dim=invariant_block,
        verdict=verdict,
    )


@dataclass(frozen=True)
class InvariantsReport:
    cover_genus: int
    prym_dim: int
    polarization: tuple[int, ...] | None
    polarization_error: str | None
    eigendims: Mapping[Character, int]
    total_check: bool
    notes: tuple[str, ...]


def invariants_report(spec: CoverSpec) -> InvariantsReport:
    """Assemble the numerical invariants of an admissible cover type."""
    genus = cover_genus(spec)
    dims = eigenspace_dimensions(spec)
    notes: list[str] = []
    if spec.base_genus == 0:
        notes.append("genus-0 base: eigenspace dimensions use rational-curve counts")
    elif any(
        spec.eigenbundle_degree(chi.inverse()) == 0
        for chi in spec.group.characters()
        if not chi.is_trivial
    ):
        notes.append(
            "degree-zero eigensheaf present: counted as a nontrivial torsion twist"
        )
    polarization: tuple[int, ...] | None
    polarization_error: str | None
    try:
        polarization = polarization_type(spec)
        polarization_error = None
    except FormulaRangeError as exc:
        polarization = None
        polarization_error = str(exc)
    return InvariantsReport(
        cover_genus=genus,
        prym_dim=genus - spec.base_genus,
        polarization=polarization,
        polarization_error=polarization_error,
        eigendims=dims,
        total_check=sum(dims.values()) == genus,
        notes=tuple(notes),
    )
