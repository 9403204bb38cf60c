import io
import json

import pytest

from balloonstar.cli import parse_complex, parse_complex_list, parse_scalar, run, UsageError


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestParsing:
    @pytest.mark.parametrize("text,value", [("i", 1j), ("-i", -1j), ("2-3i", 2 - 3j), ("1+2j", 1 + 2j), (" 0.5 ", 0.5)])
    def test_complex(self, text, value):
        assert parse_complex(text) == value

    def test_lists_and_scalars(self):
        assert parse_complex_list("i,0,0") == [1j, 0, 0]
        assert parse_complex_list("") == []
        assert parse_scalar("0.5,-1") == 0.5 - 1j
        assert parse_scalar("0.75") == 0.75

    @pytest.mark.parametrize("bad", ["", "abc", "1,2,3"])
    def test_errors(self, bad):
        with pytest.raises(UsageError):
            parse_scalar(bad)


class TestCommands:
    def test_extremal_text(self):
        code, out, _ = invoke("extremal", "f1", "--order", "5")
        assert code == 0
        values = [line.split()[1] for line in out.splitlines()[1:]]
        assert values == ["1", "1", "0.75", "0.5277778", "0.3506944"]

    def test_functional_t23(self):
        code, out, _ = invoke("functional", "T23", "--schwarz", "i,0,0")
        assert code == 0 and "0.8410494" in out

    def test_functional_json_round_trip(self):
        code, out, _ = invoke("functional", "H22", "--zeta", "0,1,0", "--format", "json")
        data = json.loads(out)
        assert data["values"]["H22"] == {"re": -0.25, "im": 0.0}

    def test_fs_requires_mu(self):
        code, _, err = invoke("functional", "FS", "--zeta", "0,1,0")
        assert code == 2 and "mu" in err

    def test_a5_needs_b4(self):
        assert invoke("functional", "a5", "--schwarz", "1,0,0")[0] == 2
        code, out, _ = invoke("functional", "a5", "--schwarz", "1,0,0,0")
        assert code == 0 and "0.3506944" in out

    def test_coeffs_sources(self):
        assert invoke("coeffs")[0] == 2
        assert invoke("coeffs", "--schwarz", "1,0,0", "--zeta", "1,0,0")[0] == 2
        code, out, _ = invoke("coeffs", "--zeta", "1,0,0", "--format", "csv")
        assert code == 0 and out.splitlines()[1] == "a2,1,0"

    def test_schwarz_violation_is_usage_error(self):
        code, _, err = invoke("coeffs", "--schwarz", "2,0,0")
        assert code == 2 and err

    def test_kernel(self):
        code, out, _ = invoke("kernel", "--order", "4", "--format", "csv")
        rows = [line.split(",") for line in out.splitlines()[1:]]
        assert [r[0] for r in rows] == ["c0", "c1", "c2", "c3", "c4"]
        assert [float(r[1]) for r in rows] == pytest.approx([1, 1, 1 / 2, 1 / 3, 1 / 6], abs=1e-15)
        assert all(r[2] == "0" for r in rows)

    def test_y_lemma(self):
        code, out, _ = invoke("y-lemma", "--abc", "1,1,-1", "--format", "json")
        rec = json.loads(out)[0]
        assert code == 0 and rec["branch"] == "R:sqrt"
        code, out, _ = invoke("y-lemma", "--random", "5", "--seed", "3", "--format", "csv")
        assert code == 0 and len(out.splitlines()) == 6
        assert invoke("y-lemma")[0] == 2

    def test_boundary_csv(self, tmp_path):
        path = tmp_path / "b.csv"
        code, out, _ = invoke("boundary", "--samples", "16", "--format", "csv", "--out", str(path))
        assert code == 0 and out == ""
        lines = path.read_text().splitlines()
        assert lines[0] == "theta,re_w,im_w" and len(lines) == 17

    def test_verify_subset(self):
        code, out, _ = invoke("verify", "--only", "H22,T21", "--grid", "6x16")
        assert code == 0 and "certified" in out

    def test_verify_violation_exit_code(self):
        code, out, _ = invoke("verify", "--only", "FS", "--mu", "0", "--grid", "6x16", "--format", "csv")
        assert code == 1 and "violated" in out

    def test_verify_deterministic_json(self):
        a = invoke("verify", "--only", "gamma2,T22", "--grid", "6x16", "--format", "json")[1]
        b = invoke("verify", "--only", "gamma2,T22", "--grid", "6x16", "--format", "json")[1]
        assert a == b and json.loads(a)["checks"]

    def test_usage_errors(self):
        assert invoke()[0] == 2
        assert invoke("bogus")[0] == 2
        assert invoke("extremal", "f9")[0] == 2
        assert invoke("verify", "--grid", "banana")[0] == 2
        assert invoke("verify", "--only", "H99")[0] == 2

    def test_full_verify_exit_status(self):
        """The complete certification run, as the command-line example states, exits 0."""
        code, out, _ = invoke("verify")
        assert code == 0, out
