"""Command-line interface: batch reports as JSON on stdout.

Exit codes: 0 success, 1 parse/usage error, 2 inadmissible cover data,
3 search bound exceeded, 4 internal consistency check failed (``verify``).
Diagnostics go to stderr; stdout carries JSON only.  ``enumerate`` streams
newline-delimited records; the other commands print a single document.
The environment variable PRYMCOVER_SEARCH_LIMIT overrides the enumeration
search limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import invariants as inv
from .covers import CoverSpec, InadmissibleCoverError
from .criteria import (
    Verdict,
    abel_prym_collisions,
    abel_prym_report,
    criteria_report,
)
from .enumeration import (
    DEFAULT_ENUM_LIMIT,
    EnumerationBoundError,
    EnumerationQuery,
    iterate_classes,
)
from .groups import FiniteAbelianGroup, GroupBoundError
from .metabelian import character_orbits, check_pushforward_inequality
from .specfile import LoadedSpec, SpecFileError, load_spec

ENV_SEARCH_LIMIT = "PRYMCOVER_SEARCH_LIMIT"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INADMISSIBLE = 2
EXIT_BOUND = 3
EXIT_INCONSISTENT = 4


class _Parser(argparse.ArgumentParser):
    # usage problems are parse errors: keep exit code 1, stderr-only
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _emit(document: Any) -> None:
    print(json.dumps(document, sort_keys=True))


def _fail(code: int, kind: str, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    print(json.dumps({"schema": 1, "error": kind, "message": message}, sort_keys=True))
    return code


def _load(path: str) -> LoadedSpec:
    loaded = load_spec(path)
    loaded.cover.require_admissible()
    return loaded


def _spec_header(spec: CoverSpec) -> dict[str, Any]:
    return {
        "schema": 1,
        "group": list(spec.group.orders),
        "genus": spec.base_genus,
        "branch": [list(label.coords) for label in spec.branch_labels],
    }


def _invariants_document(spec: CoverSpec) -> dict[str, Any]:
    report = inv.invariants_report(spec)
    genus_monodromy = inv.cover_genus_from_monodromy(spec)
    characters = [
        {
            "chi": list(chi.coords),
            "order": chi.order(),
            "degree": spec.eigenbundle_degree(chi),
            "eigendim": report.eigendims[chi],
        }
        for chi in spec.group.characters()
    ]
    document = _spec_header(spec)
    document.update(
        {
            "genus_cover": report.cover_genus,
            "prym_dim": report.prym_dim,
            "polarization": list(report.polarization)
            if report.polarization is not None
            else None,
            "polarization_error": report.polarization_error,
            "characters": characters,
            "checks": {
                "genus_matches_monodromy": report.cover_genus == genus_monodromy,
                "eigendims_sum_to_cover_genus": report.total_check,
            },
            "notes": list(report.notes),
        }
    )
    return document


def cmd_invariants(args: argparse.Namespace) -> int:
    loaded = _load(args.file)
    _emit(_invariants_document(loaded.cover))
    return EXIT_OK


def _criterion_json(result) -> dict[str, Any]:
    witness = result.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    return {
        "verdict": result.verdict.value,
        "detail": result.detail,
        "witness": witness,
        "assumptions": list(result.assumptions),
    }


def cmd_check(args: argparse.Namespace) -> int:
    loaded = _load(args.file)
    spec = loaded.cover
    assumptions = loaded.assumptions
    report = criteria_report(
        spec,
        clifford_index=assumptions.clifford_index,
        sections_asserted=assumptions.global_sections,
    )
    document = _spec_header(spec)
    document["criteria"] = {
        result.name: _criterion_json(result) for result in report.results()
    }
    document["assumptions_used"] = list(report.assumptions_used)
    some_hold = report.some_condition_holds
    metabelian_entries = None
    if loaded.metabelian is not None:
        data = loaded.metabelian
        validation = data.validate()
        if not validation.valid:
            raise InadmissibleCoverError("; ".join(validation.problems))
        metabelian_entries = []
        for orbit in character_orbits(data.presentation):
            verdict = check_pushforward_inequality(
                data,
                orbit[0],
                section_asserted=assumptions.global_sections,
                global_generation_asserted=assumptions.global_sections,
            )
            metabelian_entries.append(
                {
                    "orbit_rep": list(orbit[0].coords),
                    "orbit_size": len(orbit),
                    "holds": verdict.holds,
                    "lhs": verdict.lhs,
                    "rhs": verdict.rhs,
                    "generic": verdict.generic,
                    "assumptions": list(verdict.assumptions),
                }
            )
            if verdict.holds and not verdict.generic:
                some_hold = True
    document["metabelian"] = metabelian_entries
    document["some_sufficient_condition_holds"] = some_hold
    _emit(document)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    orders = _parse_orders(args.group)
    limit = args.limit
    env_limit = os.environ.get(ENV_SEARCH_LIMIT)
    if env_limit is not None:
        limit = int(env_limit)
    query = EnumerationQuery(
        orders=orders,
        genus=args.genus,
        branch_count=args.branch,
        symmetry=args.sym,
        limit=limit,
    )
    for spec in iterate_classes(query):
        report = inv.invariants_report(spec)
        record = _spec_header(spec)
        record.update(
            {
                "genus_cover": report.cover_genus,
                "prym_dim": report.prym_dim,
                "polarization": list(report.polarization)
                if report.polarization is not None
                else None,
                "polarization_error": report.polarization_error,
            }
        )
        print(json.dumps(record, sort_keys=True, separators=(",", ":")))
    return EXIT_OK


def cmd_abel_prym(args: argparse.Namespace) -> int:
    orders = _parse_orders(args.orders)
    group = FiniteAbelianGroup(orders)
    report = abel_prym_collisions(group, bound=args.bound)
    _emit(
        {
            "schema": 1,
            "group": list(orders),
            "collisions": [list(g.coords) for g in report.collisions],
            "strict_collisions": [list(g.coords) for g in report.strict_collisions],
            "injective_on_unramified": report.injective_on_unramified,
            "orders_exceed_two": report.orders_exceed_two,
        }
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    loaded = _load(args.file)
    spec = loaded.cover
    checks = _consistency_checks(spec)
    document = _spec_header(spec)
    document["checks"] = checks
    document["all_ok"] = all(checks.values())
    _emit(document)
    return EXIT_OK if document["all_ok"] else EXIT_INCONSISTENT


def _consistency_checks(spec: CoverSpec) -> dict[str, bool]:
    characters = list(spec.group.characters())
    degrees = {chi: spec.eigenbundle_degree(chi) for chi in characters}
    cocycle = all(
        degrees[chi] + degrees[eta]
        == degrees[chi * eta] + spec.correction_degree(chi, eta)
        for chi in characters
        for eta in characters
    )
    inverse_rule = all(
        degrees[chi] + degrees[chi.inverse()]
        == sum(
            1
            for label in spec.branch_labels
            if not chi.pair(label).is_zero
        )
        for chi in characters
    )
    carry_symmetric = all(
        spec.carry(chi, eta, i) == spec.carry(eta, chi, i)
        for chi in characters
        for eta in characters
        for i in range(spec.branch_count)
    )
    genus = inv.cover_genus(spec)
    dims = inv.eigenspace_dimensions(spec)
    checks = {
        "admissible": spec.validate().admissible,
        "degree_cocycle": cocycle,
        "inverse_degree_rule": inverse_rule,
        "carry_symmetric": carry_symmetric,
        "trivial_character_degree_zero": degrees[spec.group.trivial_character()] == 0,
        "genus_matches_monodromy": genus == inv.cover_genus_from_monodromy(spec),
        "eigendims_sum_to_cover_genus": sum(dims.values()) == genus,
        "reduced_data_consistent": _reduced_ok(spec),
    }
    try:
        polarization = inv.polarization_type(spec)
        checks["polarization_length"] = len(polarization) == genus - spec.base_genus
    except inv.FormulaRangeError:
        checks["polarization_length"] = True  # documented out-of-range case
    if spec.base_genus >= 2:
        audit = inv.sym_square_audit(spec)
        p = genus - spec.base_genus
        checks["sym_square_total"] = audit.source_dim == p * (p + 1) // 2
    return checks


def _reduced_ok(spec: CoverSpec) -> bool:
    try:
        spec.reduced_building_data()
    except InadmissibleCoverError:
        return False
    return True


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise SpecFileError(f"cannot parse group orders {text!r}") from exc
    if any(m < 2 for m in orders):
        raise SpecFileError(f"group orders must be >= 2, got {list(orders)}")
    return orders


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prymcover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="numerical invariants of a cover file")
    p_inv.add_argument("file")
    p_inv.set_defaults(func=cmd_invariants)

    p_check = sub.add_parser("check", help="injectivity criteria for a cover file")
    p_check.add_argument("file")
    p_check.set_defaults(func=cmd_check)

    p_enum = sub.add_parser("enumerate", help="stream admissible cover classes")
    p_enum.add_argument("--group", required=True, help="cyclic orders, e.g. 2,2")
    p_enum.add_argument("--genus", required=True, type=int)
    p_enum.add_argument("--branch", required=True, type=int)
    p_enum.add_argument(
        "--sym",
        default="permute-points",
        choices=("none", "permute-points", "permute-and-aut"),
    )
    p_enum.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)
    p_enum.set_defaults(func=cmd_enumerate)

    p_ap = sub.add_parser("abel-prym", help="collision analysis for a group")
    p_ap.add_argument("orders", help="cyclic orders, e.g. 2,2")
    p_ap.add_argument("--bound", type=int, default=1024)
    p_ap.set_defaults(func=cmd_abel_prym)

    p_verify = sub.add_parser("verify", help="run internal consistency identities")
    p_verify.add_argument("file")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SpecFileError as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    except InadmissibleCoverError as exc:
        return _fail(EXIT_INADMISSIBLE, "inadmissible", str(exc))
    except (EnumerationBoundError, GroupBoundError) as exc:
        return _fail(EXIT_BOUND, "bound", str(exc))


def run() -> None:
    raise SystemExit(main())
