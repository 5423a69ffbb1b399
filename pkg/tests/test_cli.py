import json

import pytest

from walksum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sum_all_methods(capsys):
    code, out, _ = run(capsys, "sum", "--r", "3", "--n", "2", "--method", "all", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "r,n,method,value"
    assert [row.split(",")[-1] for row in rows[1:]] == ["24"] * 4


def test_sum_genfunc_rejects_odd_r(capsys):
    code, _, err = run(capsys, "sum", "--r", "3", "--n", "2", "--method", "genfunc")
    assert code == 2
    assert "even" in err


def test_sum_empty_walk(capsys):
    code, out, _ = run(capsys, "sum", "--r", "0", "--n", "0", "--method", "recursive", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"r": 0, "n": 0, "method": "recursive", "value": "1"}


def test_sum_big_values_are_full_decimal(capsys):
    code, out, _ = run(capsys, "sum", "--r", "12", "--n", "40", "--method", "brute", "--format", "json")
    from walksum.abssum import sum_bruteforce

    assert json.loads(out)["value"] == str(sum_bruteforce(12, 40))


def test_sum_bad_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "sum", "--r", "-1", "--n", "2")
    assert code == 2


def test_table_gandhi_text(capsys):
    code, out, _ = run(capsys, "table", "--family", "gandhi", "--max-r", "6", "--format", "text")
    assert code == 0
    lines = out.rstrip("\n").splitlines()
    assert lines[-1].strip() == "720 4200 10248 12840 8146 2073"
    assert lines[0].strip() == "1"
    assert len(lines[0]) > len(lines[0].strip())  # centered


def test_table_qtilde_text(capsys):
    _, out, _ = run(capsys, "table", "--family", "qtilde", "--max-r", "6", "--format", "text")
    assert out.splitlines()[-1].strip() == "10395 51975 107415 111705 56958 11056"


def test_table_P_zero(capsys):
    code, out, _ = run(capsys, "table", "--family", "P", "--max-r", "0", "--format", "text")
    assert code == 0
    assert out == "P_0 = 1\n"


def test_table_json_low_to_high(capsys):
    _, out, _ = run(capsys, "table", "--family", "Q", "--max-r", "2", "--format", "json")
    d = json.loads(out)
    assert d["orientation"] == "low-to-high"
    assert d["polys"][2] == {"r": 2, "coeffs": ["0", "-1", "3"]}


def test_table_df_formats(capsys):
    _, out, _ = run(capsys, "table", "--family", "df", "--max-r", "2", "--format", "csv")
    assert out.splitlines() == ["r,a,b,c,coeff", "1,0,0,0,1", "2,1,1,0,1", "2,1,0,1,1", "2,0,1,1,1"]
    _, out, _ = run(capsys, "table", "--family", "df", "--max-r", "2", "--format", "text")
    assert out.splitlines()[1] == "F_2 = xy + xz + yz"


def test_table_bad_family(capsys):
    code, _, _ = run(capsys, "table", "--family", "bogus", "--max-r", "3")
    assert code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-r", "4", "--max-n", "6", "--format", "text")
    assert code == 0
    assert "OVERALL: PASS" in out
    assert "PASS (proved identity)" in out
    assert "PASS (conjectural, verified in range r <= 4)" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-r", "3", "--max-n", "4", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["passed"]
    assert set(d["sections"]) >= {"oracle equality", "author's conjecture"}


def test_walk_fields(capsys):
    code, out, _ = run(capsys, "walk", "--n", "1", "--r", "1", "--samples", "1000", "--seed", "1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["exact"] == "1"


def test_walk_r0(capsys):
    code, out, _ = run(capsys, "walk", "--n", "16", "--r", "0", "--samples", "10", "--seed", "0",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["mc_estimate"] == 1.0


def test_walk_exact_field(capsys):
    from fractions import Fraction

    from walksum.abssum import sum_bruteforce

    code, out, _ = run(capsys, "walk", "--n", "8", "--r", "4", "--samples", "100000", "--seed", "3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["exact"] == str(Fraction(2) ** (4 - 16) * sum_bruteforce(4, 8))


def test_walk_bad_flags(capsys):
    assert run(capsys, "walk", "--n", "2", "--r", "1", "--samples", "1")[0] == 2
    assert run(capsys, "walk", "--n", "2", "--r", "1", "--samples", "3", "--shards", "4")[0] == 2
    assert run(capsys, "walk", "--n", "0", "--r", "1")[0] == 2


def test_oeis(capsys):
    _, out, _ = run(capsys, "oeis", "--sequence", "genocchi", "--upto-r", "6")
    assert out.splitlines()[-1] == "6 2073"
    _, out, _ = run(capsys, "oeis", "--sequence", "genocchi", "--upto-r", "1")
    assert [ln for ln in out.splitlines() if not ln.startswith("#")] == ["1 -1"]
    _, out, _ = run(capsys, "oeis", "--sequence", "scaled", "--upto-r", "3")
    assert out.splitlines()[-1] in ("3 -4", "3 4")
    assert run(capsys, "oeis", "--sequence", "tangent", "--upto-r", "3")[0] == 2


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("WALKSUM_FORMAT", "json")
    _, out, _ = run(capsys, "sum", "--r", "1", "--n", "1", "--method", "brute")
    assert json.loads(out)["value"] == "2"


@pytest.mark.parametrize("argv", [
    ("sum", "--r", "5", "--n", "7", "--format", "csv"),
    ("table", "--family", "df", "--max-r", "4", "--format", "json"),
    ("walk", "--n", "4", "--r", "3", "--samples", "500", "--seed", "9", "--shards", "2", "--format", "json"),
    ("oeis", "--sequence", "scaled", "--upto-r", "8"),
])
def test_machine_output_is_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
