"""JSON cover-description files: strict parsing and round-trip emission.

The file format is a single JSON object:

    {
      "schema": 1,                      # optional, must be 1 when present
      "group": [m_1, ..., m_h],         # cyclic factor orders, each >= 2
      "genus": g,                       # genus of the base curve
      "branch": [[c_1, ..., c_h], ...], # one coordinate vector per branch point
      "assumptions": {                  # optional caller-asserted facts
        "clifford_index": int,
        "not_g1_2h": bool,
        "global_sections": bool
      },
      "metabelian": { ... }             # optional two-stage block, see below
    }

When the metabelian block is present, the top-level group, genus, and branch
data describe the bottom stage (the quotient cover), and the block adds the
presentation plus the orbit-grouped branch labels of the top stage:

    {
      "abelian_orders": [...], "quotient_orders": [...],
      "conjugation": [[[r, ...], ...], ...], "powers": [[k, ...], ...],
      "multipliers": [[d, ...], ...],   # optional, inert metadata
      "fiber_orbits": [[[c, ...], ...], ...]
    }

Unknown keys are rejected everywhere and all integers must be non-negative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .covers import CoverSpec
from .groups import FiniteAbelianGroup
from .metabelian import MetabelianCoverData, MetabelianPresentation


class SpecFileError(ValueError):
    """The file is not a valid cover description."""


@dataclass(frozen=True)
class Assumptions:
    clifford_index: int | None = None
    not_g1_2h: bool | None = None
    global_sections: bool = False


@dataclass(frozen=True)
class LoadedSpec:
    cover: CoverSpec
    assumptions: Assumptions
    metabelian: MetabelianCoverData | None


def load_spec(path: str | Path) -> LoadedSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"malformed JSON in {path}: {exc}") from exc
    return parse_spec(payload)


def parse_spec(payload: object) -> LoadedSpec:
    obj = _require_object(payload, "top level")
    _check_keys(obj, "top level", {"group", "genus", "branch"}, {"schema", "assumptions", "metabelian"})
    if "schema" in obj and obj["schema"] != 1:
        raise SpecFileError(f"unsupported schema {obj['schema']!r}")
    orders = _int_list(obj.get("group"), "group")
    if any(m < 2 for m in orders):
        raise SpecFileError(f"group orders must be >= 2, got {orders}")
    try:
        group = FiniteAbelianGroup(tuple(orders))
    except ValueError as exc:
        raise SpecFileError(str(exc)) from exc
    genus = _non_negative_int(obj.get("genus"), "genus")
    branch_raw = obj.get("branch")
    if not isinstance(branch_raw, list):
        raise SpecFileError("branch must be a list of coordinate vectors")
    labels = []
    for pos, vec in enumerate(branch_raw):
        coords = _int_list(vec, f"branch[{pos}]")
        if len(coords) != group.rank:
            raise SpecFileError(
                f"branch[{pos}] has {len(coords)} coordinates for a rank-{group.rank} group"
            )
        if any(c >= m for c, m in zip(coords, orders)):
            raise SpecFileError(f"branch[{pos}] coordinates not reduced: {coords}")
        labels.append(group.element(coords))
    cover = CoverSpec(group, genus, tuple(labels))
    assumptions = _parse_assumptions(obj.get("assumptions"))
    metabelian = None
    if "metabelian" in obj:
        metabelian = _parse_metabelian(obj["metabelian"], cover)
    return LoadedSpec(cover=cover, assumptions=assumptions, metabelian=metabelian)


def spec_to_payload(spec: CoverSpec) -> dict:
    return {
        "schema": 1,
        "group": list(spec.group.orders),
        "genus": spec.base_genus,
        "branch": [list(label.coords) for label in spec.branch_labels],
    }


def _parse_assumptions(raw: object) -> Assumptions:
    if raw is None:
        return Assumptions()
    obj = _require_object(raw, "assumptions")
    _check_keys(obj, "assumptions", set(), {"clifford_index", "not_g1_2h", "global_sections"})
    clifford = None
    if "clifford_index" in obj:
        clifford = _non_negative_int(obj["clifford_index"], "assumptions.clifford_index")
    not_g1_2h = None
    if "not_g1_2h" in obj:
        not_g1_2h = _require_bool(obj["not_g1_2h"], "assumptions.not_g1_2h")
    global_sections = False
    if "global_sections" in obj:
        global_sections = _require_bool(obj["global_sections"], "assumptions.global_sections")
    return Assumptions(
        clifford_index=clifford, not_g1_2h=not_g1_2h, global_sections=global_sections
    )


def _parse_metabelian(raw: object, cover: CoverSpec) -> MetabelianCoverData:
    obj = _require_object(raw, "metabelian")
    _check_keys(
        obj,
        "metabelian",
        {"abelian_orders", "quotient_orders", "conjugation", "powers", "fiber_orbits"},
        {"multipliers"},
    )
    abelian_orders = _int_list(obj["abelian_orders"], "metabelian.abelian_orders")
    quotient_orders = _int_list(obj["quotient_orders"], "metabelian.quotient_orders")
    if tuple(quotient_orders) != cover.group.orders:
        raise SpecFileError(
            "metabelian.quotient_orders must match the top-level group"
            f" (got {quotient_orders}, group {list(cover.group.orders)})"
        )
    conjugation = []
    blocks = obj["conjugation"]
    if not isinstance(blocks, list):
        raise SpecFileError("metabelian.conjugation must be a list of blocks")
    for j, block in enumerate(blocks):
        if not isinstance(block, list):
            raise SpecFileError(f"metabelian.conjugation[{j}] must be a list of rows")
        conjugation.append(
            tuple(
                tuple(_int_list(row, f"metabelian.conjugation[{j}][{i}]"))
                for i, row in enumerate(block)
            )
        )
    powers = obj["powers"]
    if not isinstance(powers, list):
        raise SpecFileError("metabelian.powers must be a list of vectors")
    power_vectors = tuple(
        tuple(_int_list(vec, f"metabelian.powers[{j}]")) for j, vec in enumerate(powers)
    )
    multipliers = None
    if "multipliers" in obj:
        rows = obj["multipliers"]
        if not isinstance(rows, list):
            raise SpecFileError("metabelian.multipliers must be a list of rows")
        multipliers = tuple(
            tuple(_int_list(row, f"metabelian.multipliers[{i}]"))
            for i, row in enumerate(rows)
        )
    try:
        presentation = MetabelianPresentation(
            abelian_orders=tuple(abelian_orders),
            quotient_orders=tuple(quotient_orders),
            conjugation=tuple(conjugation),
            powers=power_vectors,
            multipliers=multipliers,
        )
    except ValueError as exc:
        raise SpecFileError(f"metabelian presentation: {exc}") from exc
    abelian = presentation.abelian_group
    orbits_raw = obj["fiber_orbits"]
    if not isinstance(orbits_raw, list):
        raise SpecFileError("metabelian.fiber_orbits must be a list of orbits")
    orbits = []
    for o, orbit in enumerate(orbits_raw):
        if not isinstance(orbit, list):
            raise SpecFileError(f"metabelian.fiber_orbits[{o}] must be a list of labels")
        labels = []
        for pos, vec in enumerate(orbit):
            coords = _int_list(vec, f"metabelian.fiber_orbits[{o}][{pos}]")
            if len(coords) != abelian.rank:
                raise SpecFileError(
                    f"metabelian.fiber_orbits[{o}][{pos}] has {len(coords)}"
                    f" coordinates for a rank-{abelian.rank} group"
                )
            if any(c >= m for c, m in zip(coords, abelian.orders)):
                raise SpecFileError(
                    f"metabelian.fiber_orbits[{o}][{pos}] coordinates not reduced"
                )
            labels.append(abelian.element(coords))
        orbits.append(tuple(labels))
    return MetabelianCoverData(
        presentation=presentation,
        base_genus=cover.base_genus,
        quotient_branch=cover.branch_labels,
        fiber_orbits=tuple(orbits),
    )


def _require_object(value: object, where: str) -> dict:
    if not isinstance(value, dict):
        raise SpecFileError(f"{where} must be a JSON object")
    return value


def _check_keys(obj: dict, where: str, required: set[str], optional: set[str]) -> None:
    keys = set(obj)
    missing = required - keys
    if missing:
        raise SpecFileError(f"{where}: missing keys {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise SpecFileError(f"{where}: unknown keys {sorted(unknown)}")


def _require_bool(value: object, where: str) -> bool:
    if not isinstance(value, bool):
        raise SpecFileError(f"{where} must be a boolean")
    return value


def _non_negative_int(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecFileError(f"{where} must be an integer")
    if value < 0:
        raise SpecFileError(f"{where} must be non-negative, got {value}")
    return value


def _int_list(value: object, where: str) -> list[int]:
    if not isinstance(value, list):
        raise SpecFileError(f"{where} must be a list of integers")
    return [_non_negative_int(item, f"{where}[{pos}]") for pos, item in enumerate(value)]
