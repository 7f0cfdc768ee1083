import json
import subprocess
import sys

import pytest

from erpart.cli import main, table_rows


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    _, err = capsys.readouterr()
    return info.value.code, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["classify", "--e", "1", "--r", "2", "2+3+4"], '{"partition":"2+3+4","m":9,"is_er":true,"minimal":true}'),
        (["count", "--m", "9", "--e", "1", "--r", "2"], '{"count":23}'),
        (["count", "--m", "9", "--e", "1", "--r", "2", "--minimal", "--method", "series"], '{"count":5}'),
    ],
)
def test_documented_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_classify_variants(capsys):
    code, out, _ = run(capsys, "classify", "--e", "1", "--r", "2", "3+3+3", "--oracle")
    assert code == 0 and json.loads(out) == {"partition": "3+3+3", "m": 9, "is_er": False, "minimal": False}
    code, out, _ = run(capsys, "classify", "--e", "1", "--r", "2", "1+1+1+6", "--format", "plain")
    assert out == "1+1+1+6 m=9 is_er=true minimal=false\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["classify", "--e", "1", "--r", "2", "3+2"],
        ["classify", "--e", "1", "--r", "2", "1++2"],
        ["classify", "--e", "-1", "--r", "2", "1"],
        ["count", "--m", "9", "--e", "0", "--r", "0"],
        ["count", "--m", "0", "--e", "0", "--r", "1"],
        ["count", "--m", "9", "--e", "0", "--r", "1", "--method", "magic"],
        ["enumerate", "--m", "9", "--e", "0", "--r", "1", "--parts", "0"],
        ["series", "--kind", "D", "--n", "2", "--e", "0", "--r", "2", "--order", "5"],
        ["series", "--kind", "F", "--n", "2", "--e", "0", "--r", "2"],
        ["table", "--m", "5..3", "--e", "0", "--r", "1"],
        ["table", "--m", "0..3", "--e", "0", "--r", "1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, err = run_usage(capsys, *argv)
    assert code == 2 and err


def test_size_guard_exits_1(capsys, monkeypatch):
    monkeypatch.setenv("ERPART_ORACLE_LIMIT", "10")
    code, out, err = run(capsys, "classify", "--e", "1", "--r", "2", "2+3+4", "--oracle")
    assert code == 1 and out == "" and "10" in err
    monkeypatch.setenv("ERPART_ORACLE_LIMIT", "18")
    code, _, _ = run(capsys, "classify", "--e", "1", "--r", "2", "2+3+4", "--oracle")
    assert code == 0


def test_enumerate_limit_exits_1_with_partial(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "9", "--e", "1", "--r", "2", "--limit", "3")
    assert code == 1
    assert json.loads(out) == {"partial": ["1+1+1+1+1+1+1+1+1", "1+1+1+1+1+1+1+2", "1+1+1+1+1+1+3"], "limit_exceeded": True}


def test_enumerate_minimal(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "9", "--e", "1", "--r", "2", "--minimal")
    assert code == 0 and json.loads(out) == ["1+2+6", "1+3+5", "1+4+4", "2+2+5", "2+3+4"]
    code, out, _ = run(capsys, "enumerate", "--m", "40", "--e", "0", "--r", "2", "--minimal", "--format", "plain")
    assert out == "1+3+9+27\n"


def test_enumerate_classify_round_trip(capsys):
    for e, r in [(0, 1), (1, 2), (2, 3)]:
        code, out, _ = run(capsys, "enumerate", "--m", "12", "--e", str(e), "--r", str(r))
        parts = json.loads(out)
        _, count_out, _ = run(capsys, "count", "--m", "12", "--e", str(e), "--r", str(r))
        assert len(parts) == json.loads(count_out)["count"]
        for text in parts:
            _, res, _ = run(capsys, "classify", "--e", str(e), "--r", str(r), text, "--oracle")
            assert json.loads(res)["is_er"] is True


def test_methods_agree_byte_for_byte(capsys):
    for m in (1, 7, 9, 16, 20):
        for e in range(3):
            for r in (1, 2, 3):
                for minimal in ([], ["--minimal"]):
                    outs = set()
                    for method in ("dp", "series", "brute"):
                        base = ["count", "--m", str(m), "--e", str(e), "--r", str(r), "--method", method]
                        code, out, _ = run(capsys, *base, *minimal)
                        assert code == 0
                        outs.add(out)
                    assert len(outs) == 1, (m, e, r, minimal)


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "--m", "40", "--e", "0", "--r", "2", "--minimal")
    assert out.splitlines() == ["m,e,r,count", "40,0,2,1"]
    code, out, _ = run(capsys, "table", "--m", "1..1", "--e", "0", "--r", "1")
    assert out.splitlines()[1] == "1,0,1,1"
    code, out, _ = run(capsys, "table", "--m", "1..10", "--e", "1", "--r", "2", "--verify")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11 and lines[-1] == "10,1,2,34"


def test_table_order_is_m_then_e_then_r():
    rows = table_rows(range(1, 3), range(0, 2), range(1, 3))
    keys = [tuple(int(x) for x in row.split(",")[:3]) for row in rows[1:]]
    assert keys == sorted(keys) and len(keys) == 8


def test_table_dump_e(capsys):
    code, out, _ = run(capsys, "table", "--m", "1..6", "--e", "1", "--r", "2", "--dump-e")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "m,k,E"
    assert "2,2,1" in lines and "3,3,0" in lines and "5,4,1" in lines and "6,4,2" in lines
    # k above (r*m + e + 1) // (r + 1) is structurally zero and not listed
    assert not any(line.startswith("6,5,") for line in lines)
    code, err = run_usage(capsys, "table", "--m", "3", "--e", "0..1", "--r", "2", "--dump-e")
    assert code == 2


def test_series_outputs(capsys):
    code, out, _ = run(capsys, "series", "--kind", "R", "--n", "2", "--e", "1", "--r", "2")
    doc = json.loads(out)
    assert doc["order"] == 18 and doc["coeffs"][17] == "5"
    code, out, _ = run(capsys, "series", "--kind", "F", "--n", "2", "--e", "0", "--r", "2", "--order", "19", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "k,value" and lines[18] == "17,9" and lines[19] == "18,12"
    code, out, _ = run(capsys, "series", "--kind", "G", "--n", "2", "--e", "0", "--r", "2", "--order", "5", "--format", "plain")
    assert out == "1 + 1*x + 3*x^2 + 3*x^3 + 4*x^4 + O(x^5)\n"
    code, out, _ = run(capsys, "series", "--kind", "Dstar", "--n", "1", "--e", "0", "--r", "1", "--order", "6")
    assert code == 0 and json.loads(out)["coeffs"] == ["1", "1", "2", "3", "4", "5"]


def test_output_is_deterministic(capsys):
    argv = ["enumerate", "--m", "14", "--e", "1", "--r", "2"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "erpart", "count", "--m", "9", "--e", "1", "--r", "2"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0 and done.stdout == '{"count":23}\n'
    done = subprocess.run([sys.executable, "-m", "erpart", "nope"], capture_output=True, text=True)
    assert done.returncode == 2 and "usage" in done.stderr
