"""Command-line contract: golden outputs, determinism, exit codes."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from prymcover.cli import main

DATA = Path(__file__).parent / "data"

WORKED_SPECS = ["z2_etale_g2", "z3_g0_r4", "z2z2_g0_r4"]


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariantsCommand:
    @pytest.mark.parametrize("name", WORKED_SPECS)
    def test_golden_output(self, capsys, name):
        code, out, _ = run_cli(capsys, "invariants", str(DATA / f"{name}.json"))
        assert code == 0
        golden = (DATA / f"{name}.invariants.golden").read_text(encoding="utf-8")
        assert out == golden

    def test_key_values(self, capsys):
        _, out, _ = run_cli(capsys, "invariants", str(DATA / "z3_g0_r4.json"))
        document = json.loads(out)
        assert document["genus_cover"] == 2
        assert document["prym_dim"] == 2
        assert document["polarization"] == [1, 1]
        assert document["checks"] == {
            "eigendims_sum_to_cover_genus": True,
            "genus_matches_monodromy": True,
        }


class TestCheckCommand:
    def test_character_condition_via_file(self, capsys, tmp_path):
        payload = {
            "group": [3],
            "genus": 2,
            "branch": [[1], [1], [1], [2], [2], [2]],
        }
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        code, out, _ = run_cli(capsys, "check", str(path))
        assert code == 0
        document = json.loads(out)
        assert document["criteria"]["character_condition"]["verdict"] == "holds"
        assert document["criteria"]["character_condition"]["witness"] == [1]
        assert document["some_sufficient_condition_holds"] is True

    def test_etale_generic_finiteness(self, capsys, tmp_path):
        payload = {"group": [2], "genus": 7, "branch": []}
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        _, out, _ = run_cli(capsys, "check", str(path))
        document = json.loads(out)
        assert document["criteria"]["generic_finiteness"]["verdict"] == "holds"
        assert document["criteria"]["etale_even_clifford"]["verdict"] == "not-applicable"
        assert document["some_sufficient_condition_holds"] is False

    def test_clifford_assumption_applies(self, capsys, tmp_path):
        payload = {
            "group": [2],
            "genus": 7,
            "branch": [],
            "assumptions": {"clifford_index": 3},
        }
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        _, out, _ = run_cli(capsys, "check", str(path))
        document = json.loads(out)
        assert document["criteria"]["etale_even_clifford"]["verdict"] == "holds"
        assert document["some_sufficient_condition_holds"] is True
        assert "clifford_index=3 (asserted)" in document["assumptions_used"]

    def test_metabelian_entries(self, capsys, tmp_path):
        payload = {
            "group": [2],
            "genus": 0,
            "branch": [[1], [1], [1], [1]],
            "metabelian": {
                "abelian_orders": [3],
                "quotient_orders": [2],
                "conjugation": [[[2]]],
                "powers": [[0]],
                "fiber_orbits": [[[1], [2]]],
            },
        }
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        code, out, _ = run_cli(capsys, "check", str(path))
        assert code == 0
        document = json.loads(out)
        entries = document["metabelian"]
        assert len(entries) == 2  # one per character orbit
        nontrivial = next(e for e in entries if e["orbit_rep"] == [1])
        assert nontrivial["holds"] is True
        assert nontrivial["generic"] is True
        assert (nontrivial["lhs"], nontrivial["rhs"]) == (0, 0)
        # generic estimates never flip the certified overall flag
        assert document["some_sufficient_condition_holds"] is False


class TestEnumerateCommand:
    def test_single_class(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--group", "2", "--genus", "0", "--branch", "4"
        )
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 1
        record = json.loads(lines[0])
        assert record["branch"] == [[1], [1], [1], [1]]
        assert record["genus_cover"] == 1
        assert record["prym_dim"] == 1
        assert record["polarization"] == [1]

    def test_deterministic_output(self, capsys):
        args = ("enumerate", "--group", "3", "--genus", "1", "--branch", "3")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second
        assert len(first.splitlines()) > 1

    def test_point_permutation_classes(self, capsys):
        _, out, _ = run_cli(
            capsys, "enumerate", "--group", "3", "--genus", "0", "--branch", "3"
        )
        labels = [json.loads(line)["branch"] for line in out.splitlines()]
        assert labels == [[[1], [1], [1]], [[2], [2], [2]]]

    def test_automorphism_classes(self, capsys):
        _, out, _ = run_cli(
            capsys,
            "enumerate",
            "--group",
            "3",
            "--genus",
            "0",
            "--branch",
            "3",
            "--sym",
            "permute-and-aut",
        )
        labels = [json.loads(line)["branch"] for line in out.splitlines()]
        assert labels == [[[1], [1], [1]]]

    def test_ordered_mode(self, capsys):
        _, out, _ = run_cli(
            capsys,
            "enumerate",
            "--group",
            "3",
            "--genus",
            "0",
            "--branch",
            "3",
            "--sym",
            "none",
        )
        assert len(out.splitlines()) == 2

    def test_unramified_single_class(self, capsys):
        _, out, _ = run_cli(
            capsys, "enumerate", "--group", "2,3", "--genus", "1", "--branch", "0"
        )
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 1
        assert records[0]["branch"] == []


class TestExitCodes:
    def test_malformed_json_is_parse_error(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, out, err = run_cli(capsys, "invariants", str(path))
        assert code == 1
        assert json.loads(out)["error"] == "parse"
        assert "error" in err

    def test_missing_file_is_parse_error(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "invariants", str(tmp_path / "absent.json"))
        assert code == 1

    def test_inadmissible_spec(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps({"group": [2], "genus": 0, "branch": [[1], [1], [1]]}),
            encoding="utf-8",
        )
        code, out, _ = run_cli(capsys, "invariants", str(path))
        assert code == 2
        document = json.loads(out)
        assert document["error"] == "inadmissible"
        assert "sum" in document["message"]

    def test_enumeration_bound(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "enumerate",
            "--group",
            "2",
            "--genus",
            "0",
            "--branch",
            "10",
            "--limit",
            "100",
        )
        assert code == 3
        assert json.loads(out)["error"] == "bound"

    def test_environment_override(self, capsys, monkeypatch):
        monkeypatch.setenv("PRYMCOVER_SEARCH_LIMIT", "10")
        code, _, _ = run_cli(
            capsys, "enumerate", "--group", "2", "--genus", "0", "--branch", "4"
        )
        assert code == 3

    def test_usage_error(self, capsys):
        assert run_cli(capsys, "no-such-command")[0] == 1


class TestAbelPrymCommand:
    def test_rank_two_involutions(self, capsys):
        code, out, _ = run_cli(capsys, "abel-prym", "2,2")
        assert code == 0
        document = json.loads(out)
        assert [1, 1] in document["collisions"]
        assert document["strict_collisions"] == [[1, 1]]
        assert document["injective_on_unramified"] is False

    @pytest.mark.parametrize("orders", ["3,3", "5"])
    def test_empty_collision_sets(self, capsys, orders):
        _, out, _ = run_cli(capsys, "abel-prym", orders)
        document = json.loads(out)
        assert document["collisions"] == []
        assert document["injective_on_unramified"] is True

    def test_bound(self, capsys):
        code, _, _ = run_cli(capsys, "abel-prym", "7,7", "--bound", "10")
        assert code == 3


class TestVerifyCommand:
    @pytest.mark.parametrize("name", WORKED_SPECS)
    def test_identities_hold(self, capsys, name):
        code, out, _ = run_cli(capsys, "verify", str(DATA / f"{name}.json"))
        assert code == 0
        document = json.loads(out)
        assert document["all_ok"] is True
        assert document["checks"]["degree_cocycle"] is True
        assert document["checks"]["genus_matches_monodromy"] is True
