import json
import xml.etree.ElementTree as ET

import pytest

from delannoy_kit import enumerate_delannoy, sample_delannoy_stream, schroder
from delannoy_kit import harness
from delannoy_kit.cli import parse_vertex_text, run

WORKED_WORD = "NEEDNNNEDDEEN"
WORKED_JSON = "[[0,0],[1,1],[3,1],[4,5],[5,7],[8,7],[9,8]]"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMapUnmap:
    def test_map_worked_example(self, capsys):
        code, out, err = invoke(capsys, "map", WORKED_WORD)
        assert code == 0
        assert json.loads(out) == json.loads(WORKED_JSON)
        assert "n=8 k=5" in err

    def test_map_compact(self, capsys):
        code, out, _ = invoke(capsys, "map", "EN", "--compact")
        assert code == 0
        assert out.strip() == "(0,0);(1,0);(2,1)"

    def test_map_debug_labels(self, capsys):
        code, out, _ = invoke(capsys, "map", WORKED_WORD, "--debug")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 8 and payload["k"] == 5
        assert payload["labels"] == {
            "north": [1, 3, 4, 5, 8],
            "east": [1, 1, 5, 7, 7],
            "diagonal": [2, 6, 7],
        }

    def test_unmap_json_input(self, capsys):
        code, out, err = invoke(capsys, "unmap", WORKED_JSON)
        assert code == 0
        assert out.strip() == WORKED_WORD
        assert "n=8 k=5" in err

    def test_unmap_compact_input(self, capsys):
        code, out, _ = invoke(capsys, "unmap", "(0,0);(1,1);(2,1)")
        assert code == 0
        assert out.strip() == "NE"

    def test_unmap_debug_decomposition(self, capsys):
        code, out, _ = invoke(capsys, "unmap", WORKED_JSON, "--debug")
        assert code == 0
        payload = json.loads(out)
        assert payload["word"] == WORKED_WORD
        assert payload["A"] == [1, 3, 4, 5, 8]
        assert payload["B"] == [1, 1, 5, 7, 7]
        assert payload["C"] == [2, 6, 7]
        assert payload["merged"] == [
            "1A", "1B", "1B", "2C", "3A", "4A", "5A",
            "5B", "6C", "7C", "7B", "7B", "8A",
        ]

    @pytest.mark.parametrize("n", range(6))
    def test_unmap_of_map_is_identity_textually(self, capsys, n):
        for path in enumerate_delannoy(n):
            code, out, _ = invoke(capsys, "map", path.word)
            assert code == 0
            code, out, _ = invoke(capsys, "unmap", out.strip())
            assert code == 0
            assert out.strip() == path.word

    def test_map_rejects_bad_word(self, capsys):
        code, _, err = invoke(capsys, "map", "NXE")
        assert code == 2
        assert "position 2" in err

    def test_map_rejects_noncentral(self, capsys):
        code, _, _ = invoke(capsys, "map", "NNE")
        assert code == 2

    def test_unmap_rejects_bad_endpoint(self, capsys):
        code, _, err = invoke(capsys, "unmap", "[[0,0],[2,2]]")
        assert code == 2
        assert "(2, 2)" in err

    def test_unmap_rejects_malformed_json(self, capsys):
        code, _, _ = invoke(capsys, "unmap", "[[0,0],[1,")
        assert code == 2

    def test_parse_vertex_text_forms(self):
        assert parse_vertex_text("[[0,0],[1,0]]").vertices == ((0, 0), (1, 0))
        assert parse_vertex_text(" (0,0) ; (1,0) ").vertices == ((0, 0), (1, 0))
        with pytest.raises(Exception):
            parse_vertex_text("(0,0);(oops)")


class TestCount:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (("count", "schroder", "--n", "0"), "1"),
            (("count", "schroder", "--n", "8"), "41586"),
            (("count", "delannoy", "--n", "8"), "265729"),
            (("count", "delannoy", "--n", "8", "--k", "5"), "72072"),
            (("count", "kimberling", "--i", "2", "--j", "1"), "3"),
            (("count", "kimberling", "--i", "9", "--j", "8", "--k", "5"), "72072"),
        ],
    )
    def test_values(self, capsys, argv, expected):
        code, out, _ = invoke(capsys, *argv)
        assert code == 0
        assert out.strip() == expected

    def test_missing_required_flag(self, capsys):
        code, _, err = invoke(capsys, "count", "delannoy")
        assert code == 2
        assert "--n" in err

    def test_kimberling_needs_both_endpoints(self, capsys):
        code, _, _ = invoke(capsys, "count", "kimberling", "--i", "3")
        assert code == 2


class TestEnumerate:
    def test_delannoy_golden(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "delannoy", "--n", "1")
        assert code == 0
        assert out.split() == ["D", "EN", "NE"]

    def test_delannoy_subdiagonal_filter(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "delannoy", "--n", "2", "--subdiagonal")
        assert code == 0
        assert len(out.split()) == schroder(2)

    def test_delannoy_k_only(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "delannoy", "--n", "2", "--k-only", "2")
        assert code == 0
        assert out.split() == ["EENN", "ENEN", "ENNE", "NEEN", "NENE", "NNEE"]

    def test_kimberling_golden(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "kimberling", "--i", "2", "--j", "1")
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows == [
            [[0, 0], [2, 1]],
            [[0, 0], [1, 0], [2, 1]],
            [[0, 0], [1, 1], [2, 1]],
        ]

    def test_kimberling_compact_and_filter(self, capsys):
        code, out, _ = invoke(
            capsys, "enumerate", "kimberling", "--i", "2", "--j", "1",
            "--subdiagonal", "--compact",
        )
        assert code == 0
        assert out.split() == ["(0,0);(2,1)", "(0,0);(1,0);(2,1)"]

    def test_requires_family_endpoints(self, capsys):
        assert invoke(capsys, "enumerate", "delannoy")[0] == 2
        assert invoke(capsys, "enumerate", "kimberling", "--i", "2")[0] == 2


class TestSample:
    def test_deterministic_replay(self, capsys):
        first = invoke(capsys, "sample", "--n", "5", "--count", "4", "--seed", "9")
        second = invoke(capsys, "sample", "--n", "5", "--count", "4", "--seed", "9")
        assert first == second
        assert first[0] == 0
        assert len(first[1].split()) == 4

    def test_matches_library_stream(self, capsys):
        _, out, _ = invoke(capsys, "sample", "--n", "4", "--count", "6", "--seed", "123")
        expected = [p.word for p in sample_delannoy_stream(4, 6, seed=123)]
        assert out.split() == expected

    def test_rejects_negative_count(self, capsys):
        assert invoke(capsys, "sample", "--n", "2", "--count", "-1")[0] == 2


class TestClassify:
    def test_fields(self, capsys):
        code, out, _ = invoke(capsys, "classify", "--word", "EDN")
        assert code == 0
        payload = json.loads(out)
        assert payload["word"] == "EDN"
        assert (payload["n"], payload["k"]) == (2, 1)
        assert payload["subdiagonal_delannoy"] is True
        assert payload["subdiagonal_kimberling"] is True
        step = payload["east_steps"][0]
        assert step["east_end"] == [1, 0]
        assert step["east_weakly_above"] is False
        assert step["vertex_strictly_above"] is False
        assert step["interior_vertex"] == [2, 0]
        assert (step["d_before_north"], step["d_before_east"]) == (1, 0)
        assert step["case"] == "more_before_north"

    def test_requires_central(self, capsys):
        assert invoke(capsys, "classify", "--word", "NEN")[0] == 2


class TestVerify:
    def test_passes_small(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--n-max", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4
        assert all(line.startswith("PASS") for line in lines)

    def test_single_check_json(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "--n-max", "1", "--check", "roundtrip", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert len(payload["reports"]) == 1
        assert payload["reports"][0]["check_name"] == "roundtrip"
        assert payload["reports"][0]["total_cases"] == 8

    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(harness, "schroder", lambda n: 999)
        code, out, _ = invoke(capsys, "verify", "--n-max", "1", "--check", "subdiagonal")
        assert code == 1
        assert "FAIL" in out
        assert "counterexample" in out

    def test_rejects_unknown_check(self, capsys):
        assert invoke(capsys, "verify", "--check", "bogus")[0] == 2


class TestRender:
    def test_well_formed_for_random_paths(self, capsys):
        paths = list(sample_delannoy_stream(5, 50, seed=2024))
        for path in paths:
            code, out, _ = invoke(capsys, "render", "--word", path.word)
            assert code == 0
            root = ET.fromstring(out)
            assert root.tag.endswith("svg")

    def test_empty_word_renders(self, capsys):
        code, out, _ = invoke(capsys, "render", "--word", "")
        assert code == 0
        ET.fromstring(out)

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "pair.svg"
        code, _, err = invoke(capsys, "render", "--word", "EN", "--out", str(target))
        assert code == 0
        assert "wrote" in err
        ET.fromstring(target.read_text())

    def test_flags_change_output(self, capsys):
        _, full, _ = invoke(capsys, "render", "--word", "EN", "--labels")
        _, bare, _ = invoke(capsys, "render", "--word", "EN", "--no-grid", "--no-diagonal")
        assert len(bare) < len(full)
        assert "<text" in full and "<text" not in bare

    def test_cell_minimum_enforced(self, capsys):
        assert invoke(capsys, "render", "--word", "EN", "--cell", "3")[0] == 2

    def test_rejects_noncentral_word(self, capsys):
        assert invoke(capsys, "render", "--word", "NNE")[0] == 2


class TestTopLevel:
    def test_no_arguments_is_usage_error(self, capsys):
        assert run([]) == 2

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0
        assert run(["map", "--help"]) == 0
