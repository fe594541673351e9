import io
import json
import pathlib
import subprocess
import sys

import pytest

from rectlift.cli import run

GOLDEN = pathlib.Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def call_json(*argv):
    status, out, _ = call(*argv)
    return status, json.loads(out)


def assert_contains(actual, expected):
    # golden files pin existing keys; new keys may be added freely
    for key, value in expected.items():
        assert key in actual
        if isinstance(value, dict):
            assert_contains(actual[key], value)
        else:
            assert actual[key] == value, key


@pytest.mark.parametrize("name,argv", [
    ("classify_43251", ["classify", "43251"]),
    ("lift_43251_w1", ["lift", "43251", "--lambda=1,0,0,0"]),
    ("lift_2143", ["lift", "2143", "--lambda=1,0,1"]),
    ("verify_43251_w2", ["verify", "43251", "--lambda=0,1,0,0"]),
    ("dim_w0_rho", ["dim", "4321", "--lambda=1,1,1"]),
    ("count_tri_4", ["count", "--class=triangular", "--n=4"]),
])
def test_golden(name, argv):
    status, data = call_json(*argv)
    assert status == 0
    expected = json.loads((GOLDEN / f"{name}.json").read_text())
    assert_contains(data, expected)
    assert data["schema"] == 1


def test_classify():
    _, data = call_json("classify", "43251")
    assert (data["rectangular"], data["triangular"], data["irreducible"]) == (True, True, True)
    _, data = call_json("classify", "s1 s3 s2")
    assert data["perm"] == "2413" and data["rectangular"] is False and data["irreducible"] is None
    _, data = call_json("classify", "2143")
    assert data["irreducible"] is False


def test_count():
    assert call_json("count", "--class=rectangular", "--n=4")[1]["count"] == 20


def test_lift_running_example():
    status, data = call_json("lift", "43251", "--lambda=1,0,0,0")
    assert status == 0
    assert data["tau_tilde"] == "15263784"
    assert data["lambda_tilde"] == [0, 1, 0, 0, 0, 0, 0]
    assert all(data["checks"].values())


def test_lift_reducible_lists_components():
    _, data = call_json("lift", "2143", "--lambda=1,0,1")
    assert data["tau_tilde"] is None
    assert [c["interval"] for c in data["components"]] == [[1, 1], [3, 3]]


def test_verify_exit_zero():
    status, data = call_json("verify", "43251", "--lambda=1,0,0,0")
    assert status == 0 and data["pass"] is True
    assert data["dims"] == {"demazure": 4, "lifted": 4, "polytope": 4}


def test_sweep_n4():
    status, data = call_json("verify", "--sweep", "--n=4", "--max-coeff=1")
    assert status == 0
    assert data["total"] == 20 * 8 and data["failures"] == []


def test_dim_oracles():
    _, data = call_json("dim", "43251", "--lambda=1,0,0,0", "--oracle=demazure")
    assert data["demazure"] == 4 and data["polytope"] is None and data["equal"] is None
    _, data = call_json("dim", "2413", "--lambda=1,0,0")
    assert data["polytope"] is None and data["demazure"] == 2


def test_enumerate():
    status, out, _ = call("enumerate", "--class=rectangular", "--n=3")
    assert status == 0 and out.split() == ["123", "132", "213", "231", "312", "321"]
    assert call("enumerate", "--class=triangular", "--n=1")[1] == "1\n"


def test_tsv():
    status, out, _ = call("count", "--class=rectangular", "--n=4", "--format=tsv")
    assert status == 0
    assert dict(line.split("\t") for line in out.splitlines())["count"] == "20"


def test_output_is_deterministic():
    first = call("verify", "43251", "--lambda=1,1,0,0")[1]
    assert first == call("verify", "43251", "--lambda=1,1,0,0")[1]
    keys = list(json.loads(first))
    assert keys == sorted(keys)


@pytest.mark.parametrize("argv,needle", [
    (["classify", "43x"], "perm"),
    (["lift", "43251", "--lambda=1,0"], "--lambda"),
    (["lift", "43251", "--lambda=a,b,c,d"], "--lambda"),
    (["lift", "2413", "--lambda=1,0,0"], "perm"),
    (["dim", "2413", "--lambda=1,0,0", "--oracle=polytope"], "perm"),
    (["dim", "321", "--lambda=1,-1"], "--lambda"),
    (["verify", "--sweep"], "--n"),
    (["verify"], "perm"),
    (["count", "--class=rectangular", "--n=9"], "limit"),
])
def test_usage_errors(argv, needle):
    status, out, err = call(*argv)
    assert status == 2 and out == ""
    assert len(err.strip().splitlines()) == 1 and needle in err


def test_argparse_errors_exit_two():
    assert call("count", "--class=square", "--n=3")[0] == 2
    assert call("frobnicate")[0] == 2


def test_subprocess_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rectlift", "count", "--class=rectangular", "--n=5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 68
    proc = subprocess.run([sys.executable, "-m", "rectlift", "classify", "1,1"], capture_output=True, text=True)
    assert proc.returncode == 2 and "perm" in proc.stderr
