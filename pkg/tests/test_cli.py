"""Tests for the command-line front end."""

import json
from pathlib import Path

import pytest

from kbh import cli
from kbh.mma import from_json
from kbh.tangle import parse_tangle, zeta_of_tangle

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestZeta:
    def test_trefoil_text(self, capsys):
        code, out, err = run(
            capsys, "zeta", str(FIXTURES / "trefoil.tangle"), "--degree", "4"
        )
        assert code == 0 and not err
        assert out.splitlines() == [
            "tails: 1",
            "head 1: 3 1",
            "wheels: (11) - 5/12 (1111)",
        ]

    def test_single_crossing(self, capsys, tmp_path):
        path = tmp_path / "x.tangle"
        path.write_text("X+ a b\n")
        code, out, _ = run(capsys, "zeta", str(path), "--degree", "3")
        assert code == 0
        assert out.splitlines() == [
            "tails: a b",
            "head a: 0",
            "head b: a",
            "wheels: 0",
        ]

    def test_show_truncates(self, capsys):
        code, out, _ = run(
            capsys,
            "zeta",
            str(FIXTURES / "trefoil.tangle"),
            "--degree",
            "4",
            "--show",
            "2",
        )
        assert code == 0
        assert out.splitlines()[-1] == "wheels: (11)"

    def test_wheels_only(self, capsys):
        code, out, _ = run(
            capsys,
            "zeta",
            str(FIXTURES / "borromean.tangle"),
            "--wheels-only",
        )
        assert code == 0
        assert out.splitlines() == ["wheels: (bgbr) + (bgrg) + (brgr)"]

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(
            capsys, "zeta", str(FIXTURES / "trefoil.tangle"), "--json"
        )
        assert code == 0
        fixture = parse_tangle((FIXTURES / "trefoil.tangle").read_text())
        assert from_json(json.loads(out)) == zeta_of_tangle(fixture, 4)

    def test_json_file_input(self, capsys, tmp_path):
        path = tmp_path / "kink.json"
        path.write_text(
            json.dumps(
                {
                    "crossings": [{"sign": "+", "over": "1", "under": "2"}],
                    "strands": [],
                    "plan": [["1", "2", "1"]],
                }
            )
        )
        code, out, _ = run(capsys, "zeta", str(path), "--degree", "2")
        assert code == 0
        assert out.splitlines()[0] == "tails: 1"

    @pytest.mark.parametrize(
        "extra",
        [
            ("--degree", "0"),
            ("--show", "5"),
            ("--show", "-1"),
        ],
    )
    def test_bad_numbers(self, capsys, extra):
        code, _, err = run(
            capsys, "zeta", str(FIXTURES / "unknot.tangle"), *extra
        )
        assert code == 2
        assert err.startswith("error:")

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "zeta", "no-such-file.tangle")
        assert code == 2
        assert "cannot read" in err

    def test_bad_json_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "zeta", str(path))
        assert code == 2

    def test_parse_error_diagnostics(self, capsys, tmp_path):
        path = tmp_path / "bad.tangle"
        path.write_text("X+ a b\nfrob c\n")
        code, _, err = run(capsys, "zeta", str(path))
        assert code == 2
        assert "line 2" in err


class TestAlexander:
    @pytest.mark.parametrize(
        "name,expect",
        [
            ("unknot.tangle", "1"),
            ("trefoil.tangle", "t^-1 - 1 + t"),
            (
                "8_17.tangle",
                "-t^-3 + 4 t^-2 - 8 t^-1 + 11 - 8 t + 4 t^2 - t^3",
            ),
        ],
    )
    def test_fixtures(self, capsys, name, expect):
        code, out, err = run(capsys, "alexander", str(FIXTURES / name))
        assert code == 0 and not err
        assert out.strip() == expect

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "alexander", str(FIXTURES / "trefoil.tangle"), "--json"
        )
        assert code == 0
        assert json.loads(out) == {
            "coefficients": [[-1, 1], [0, -1], [1, 1]],
            "rendered": "t^-1 - 1 + t",
        }

    def test_multi_strand_rejected(self, capsys):
        code, _, err = run(
            capsys, "alexander", str(FIXTURES / "borromean.tangle")
        )
        assert code == 2
        assert "one open strand" in err


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run(
            capsys, "selftest", "--degree", "3", "--samples", "1"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("identity suites at degree 3")
        assert [l for l in lines if l.startswith("ok    ")] == [
            "ok    mma axioms",
            "ok    generator relations",
            "ok    j identities",
            "ok    div identities",
            "ok    beta axioms",
        ]
        assert lines[-1] == "all suites passed"

    def test_reports_failures(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli, "all_checks", lambda *a: [("stub", ["boom"])]
        )
        code, out, _ = run(capsys, "selftest")
        assert code == 1
        assert "FAIL  stub" in out
        assert "boom" in out
        assert "1 suite(s) failed" in out

    def test_bad_samples(self, capsys):
        code, _, err = run(capsys, "selftest", "--samples", "0")
        assert code == 2


class TestParser:
    def test_no_command_exits_two(self):
        with pytest.raises(SystemExit) as info:
            cli.main([])
        assert info.value.code == 2

    def test_unknown_command_exits_two(self):
        with pytest.raises(SystemExit) as info:
            cli.main(["frobnicate"])
        assert info.value.code == 2
