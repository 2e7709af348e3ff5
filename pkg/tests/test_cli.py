import json

import pytest

from forestcalc.cli import main
from forestcalc.trees import set_orientation_convention


@pytest.fixture(autouse=True)
def _plane_convention():
    set_orientation_convention("plane")
    yield
    set_orientation_convention("plane")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_example(capsys):
    code, out, _ = run(capsys, "group", "--m", "1", "--order", "1", "--flavor", "framed")
    assert code == 0
    assert out == "Z^0 + Z/2\n"


def test_obstruct_zero(capsys):
    code, out, _ = run(
        capsys,
        "obstruct", "--m", "2", "--order", "0", "--flavor", "framed",
        "+1*<1,2> + -1*<1,2>",
    )
    assert code == 0
    assert out == "ZERO\n"


def test_obstruct_nonzero_witness(capsys):
    code, out, _ = run(
        capsys,
        "obstruct", "--m", "2", "--order", "0", "--flavor", "framed", "+1*<1,2>",
    )
    assert code == 0
    assert out.splitlines()[0] == "NONZERO"
    assert out.splitlines()[1].startswith("witness:")


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "--m", "3", "+1*<(2,1),3>")
    assert code == 0
    assert out == "-1*<(1,2),3>\n"


def test_milnor_longitudes(capsys, tmp_path):
    path = tmp_path / "hopf.lnk"
    path.write_text("m = 2\nl1: x2\nl2: x1\n")
    code, out, _ = run(capsys, "milnor", "--longitudes", str(path))
    assert code == 0
    assert out.splitlines()[0] == "order 0; mu(12)=1 mu(21)=1"


def test_milnor_forest(capsys):
    code, out, _ = run(capsys, "milnor", "--m", "2", "--order", "0", "+1*<1,2>")
    assert code == 0
    assert "x1 (x) x2" in out


def test_lie(capsys):
    code, out, _ = run(capsys, "lie", "--m", "2", "--order", "2")
    assert code == 0
    assert out == "[x1,x2]\n"


def test_arf(capsys):
    code, out, _ = run(capsys, "arf", "--m", "1", "--order", "1", "--k", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "classes: (1,1)^inf"
    assert lines[1] == "kernel: 2"


def test_collapse(capsys):
    code, out, _ = run(capsys, "collapse", "--m", "3", "+1*<(1,2),3>", "3")
    assert code == 0
    assert out == "+1*<1,2> + -1*<1,2>\n"


def test_monoize(capsys):
    code, out, _ = run(capsys, "monoize", "--m", "2", "--k", "1", "+1*<(1,2),2>")
    assert code == 0
    assert out.splitlines()[-1] == "result: 0"


def test_json_mirror(capsys):
    code, out, _ = run(
        capsys, "group", "--m", "2", "--order", "0", "--flavor", "framed", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["group"] == "Z^3"
    assert data["free_rank"] == 3


def test_parse_error_exit_2(capsys):
    code, out, err = run(capsys, "normalize", "--m", "2", "+1*<1,4>")
    assert code == 2
    assert err.startswith("error[label-out-of-range]")


def test_domain_error_exit_1(capsys):
    code, out, err = run(capsys, "collapse", "--m", "2", "+1*<1,2>", "1")
    assert code == 1
    assert err.startswith("error[domain-error]")


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "milnor", "--longitudes", "/nonexistent.lnk")
    assert code == 1
    assert err.startswith("error[io-error]")


def test_determinism_three_runs(capsys):
    outs = set()
    for _ in range(3):
        _, out, _ = run(
            capsys, "group", "--m", "2", "--order", "2", "--flavor", "twisted", "--json"
        )
        outs.add(out)
    assert len(outs) == 1


def test_sign_robust_across_conventions(capsys):
    results = []
    for convention in ("plane", "mirror"):
        set_orientation_convention(convention)
        from forestcalc.eta import eta_matrix

        eta_matrix.cache_clear()
        _, out_group, _ = run(
            capsys, "group", "--m", "2", "--order", "1", "--flavor", "twisted"
        )
        _, out_arf, _ = run(capsys, "arf", "--m", "2", "--order", "1", "--k", "4")
        _, out_obstruct, _ = run(
            capsys,
            "obstruct", "--m", "1", "--order", "1", "--flavor", "framed",
            "+2*<(1,1),1>",
        )
        results.append((out_group, out_arf.splitlines()[:2], out_obstruct))
    assert results[0] == results[1]
