import json
import subprocess
import sys

import pytest

from borelreg.cli import main
from borelreg.errors import ParseError
from borelreg.io import format_ideal, ideal_from_json, ideal_to_json, parse_ideal
from borelreg.monomials import MonomialIdeal

from conftest import ideal

WORKED_EXAMPLE = "ring n=2\nI = x1^2, x2^2\n"


class TestParse:
    def test_basic(self):
        assert parse_ideal(WORKED_EXAMPLE) == ideal(2, (2, 0), (0, 2))

    def test_comments_products_and_minimalization(self):
        text = "# a comment\n\nring n=3\n\nI = x1*x2^2, x1 * x2^3 , x3\n"
        assert parse_ideal(text) == ideal(3, (1, 2, 0), (0, 0, 1))

    def test_repeated_variable_accumulates(self):
        assert parse_ideal("ring n=1\nI = x1*x1^2") == ideal(1, (3,))

    def test_zero_and_unit(self):
        assert parse_ideal("ring n=2\nI =").is_zero
        assert parse_ideal("ring n=2\nI = 1, x1").is_unit

    @pytest.mark.parametrize("text, line, column", [
        ("", 1, 1),
        ("ring m=2\nI = x1", 1, 1),
        ("ring n=0\nI = x1", 1, 8),
        ("ring n=2\nI = x3", 2, 6),
        ("ring n=2\nI = x1^0", 2, 8),
        ("ring n=2\nI = x1 x2", 2, 8),
        ("ring n=2\nI = y1", 2, 5),
        ("ring n=2", 2, 1),
        ("ring n=2\nI = x1\nI = x2", 3, 1),
    ])
    def test_errors_carry_position(self, text, line, column):
        with pytest.raises(ParseError) as err:
            parse_ideal(text)
        assert (err.value.line, err.value.column) == (line, column)
        assert str(err.value).startswith(f"line {line}, column {column}:")

    def test_format_round_trip(self):
        I = ideal(3, (2, 0, 1), (0, 1, 0))
        assert parse_ideal(format_ideal(I)) == I
        assert format_ideal(I) == "ring n=3\nI = x1^2*x3, x2\n"

    def test_json_round_trip(self):
        I = ideal(3, (2, 0, 1), (0, 1, 0))
        data = json.loads(json.dumps(ideal_to_json(I)))
        assert ideal_from_json(data) == I
        assert ideal_from_json(ideal_to_json(MonomialIdeal.zero(2))).is_zero


@pytest.fixture
def write(tmp_path):
    def _write(text, name="ideal.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCli:
    def test_analyze_worked_example(self, capsys, write):
        code, out, _ = run(capsys, "analyze", "--json", write(WORKED_EXAMPLE))
        data = json.loads(out)
        assert code == 0 and data["schema"] == 1
        assert data["stats"] == {"deg": 2, "m": 2, "q": 3}
        assert data["regularity"] == {"value": 3, "method": "oracle"}
        assert data["bound"]["stable_truncation_degree"] == 3
        assert data["ass"] == [[1, 2]]
        assert "timings_ms" not in data

    def test_analyze_text_and_timings(self, capsys, write):
        code, out, _ = run(capsys, "analyze", write(WORKED_EXAMPLE))
        assert code == 0 and "regularity:     3  (oracle)" in out
        code, out, _ = run(capsys, "analyze", "--json", "--timings", write(WORKED_EXAMPLE))
        assert "timings_ms" in json.loads(out)

    def test_reg_modes(self, capsys, write):
        stable = write("ring n=2\nI = x1^2, x1*x2, x2^2")
        code, out, _ = run(capsys, "reg", stable)
        assert code == 0 and out.strip() == "2  (fast-path)"
        code, out, _ = run(capsys, "reg", "--oracle-only", "--json", stable)
        assert json.loads(out)["method"] == "oracle"
        code, _, err = run(capsys, "reg", "--fast-only", write(WORKED_EXAMPLE))
        assert code == 3 and "not stable" in err

    def test_betti(self, capsys, write):
        code, out, _ = run(capsys, "betti", "--json", "--field", "f2", write(WORKED_EXAMPLE))
        data = json.loads(out)["betti"]
        assert code == 0 and data["field"] == "GF(2)"
        assert data["graded"] == [{"i": 0, "j": 2, "value": 2}, {"i": 1, "j": 4, "value": 1}]
        code, out, _ = run(capsys, "betti", write(WORKED_EXAMPLE))
        assert "regularity: 3" in out

    def test_decompose(self, capsys, write):
        code, out, _ = run(capsys, "decompose", "--json", write("ring n=2\nI = x1^2, x1*x2"))
        data = json.loads(out)
        assert code == 0
        assert data["decomposition"] == [[[1, 1]], [[1, 2], [2, 1]]]
        assert data["ass"] == [[1], [1, 2]]

    def test_check_theorem(self, capsys, write):
        code, out, _ = run(capsys, "check-theorem", "--json", write("ring n=2\nI = x2"))
        data = json.loads(out)
        assert code == 0 and data["consistent"]
        assert not (data["is_borel_type"] or data["ass_all_prefix"] or data["truncation_stable"])

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "koszul")
        data = json.loads(out)
        assert code == 0 and data["passed"]
        code, out, _ = run(capsys, "verify", "--suite", "char-random", "--count", "20",
                           "--seed", "3", "--gmax", "9")
        data = json.loads(out)
        assert code == 0 and data["params"]["count"] == 20

    @pytest.mark.parametrize("text, argv, expected", [
        ("ring n=2\nI = x3", ["analyze"], 2),
        ("ring n=2\nI = 1", ["analyze"], 3),
        ("ring n=2\nI =", ["reg"], 3),
        ("ring n=2\nI = x1", ["betti", "--field", "f4"], 2),
        ("ring n=2\nI = x1^5, x2^5", ["betti", "--budget", "10"], 4),
    ])
    def test_exit_codes(self, capsys, write, text, argv, expected):
        code, _, _ = run(capsys, *argv, write(text))
        assert code == expected

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "analyze", str(tmp_path / "nope"))[0] == 2

    def test_budget_env(self, capsys, write, monkeypatch):
        monkeypatch.setenv("BORELREG_BUDGET", "3")
        assert run(capsys, "betti", write(WORKED_EXAMPLE))[0] == 4

    def test_deterministic_output(self, capsys, write):
        path = write("ring n=3\nI = x1^2*x3, x2^3, x1*x2*x3^2")
        outs = {run(capsys, "analyze", "--json", path)[1] for _ in range(3)}
        assert len(outs) == 1

    def test_console_script_via_module(self, write):
        proc = subprocess.run([sys.executable, "-m", "borelreg.cli", "reg", write(WORKED_EXAMPLE)],
                              capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0 and proc.stdout.strip() == "3  (oracle)"
