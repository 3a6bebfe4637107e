import io
import json

import pytest

from khoskein.cli import run
from khoskein.corpus import HOPF_NEGATIVE_PD, HOPF_POSITIVE_PD, TREFOIL_LEFT_PD
from khoskein.diagram import parse_pd, to_json
from khoskein.laurent import LaurentPoly, d, q, t


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue()


def test_poincare_hopf():
    code, out, _ = call("poincare", HOPF_POSITIVE_PD)
    assert code == 0 and out == "t^2*q^6 + t^2*q^4 + q^2 + 1"


def test_defect_term_list():
    code, out, _ = call("defect", "--crossing", "0", "--terms", TREFOIL_LEFT_PD)
    assert code == 0
    expected = (t + 1) * (t * q**2 - 1 - q**2) * t**-2 * q**-5
    assert LaurentPoly.from_term_lines(out) == expected
    assert out == expected.to_term_lines()


def test_theta_unlink():
    assert call("theta", "-d", "2", "U;U")[1] == "2*q + 2*q^-1"


def test_theta_symbolic():
    code, out, _ = call("theta", "-d", "d", "--json", HOPF_NEGATIVE_PD)
    value = LaurentPoly.from_json(json.loads(out)["result"])
    assert value == d * (q**-3 + q**-5) + q**-1 - q**-3


@pytest.mark.parametrize("verb", ["poincare", "jones"])
def test_json_round_trip(verb):
    code, out, _ = call(verb, "--json", TREFOIL_LEFT_PD)
    obj = json.loads(out)
    code2, text, _ = call(verb, TREFOIL_LEFT_PD)
    assert str(LaurentPoly.from_json(obj["result"])) == text == obj["text"]


def test_homology_json():
    code, out, _ = call("homology", "--json", HOPF_NEGATIVE_PD)
    assert sorted(map(tuple, json.loads(out)["dims"])) == [(-2, -6, 1), (-2, -4, 1), (0, -2, 1), (0, 0, 1)]


def test_homology_grid():
    code, out, _ = call("homology", HOPF_NEGATIVE_PD)
    assert code == 0 and out.splitlines()[0].split() == ["j\\i", "-2", "-1", "0"]


def test_triple_and_verify():
    code, out, _ = call("triple", "--crossing", "1", TREFOIL_LEFT_PD)
    assert code == 0 and "c+: " in out
    code, out, _ = call("verify-skein", "--json", TREFOIL_LEFT_PD)
    reports = json.loads(out)["reports"]
    assert code == 0 and len(reports) == 3 and all(all(r["checks"].values()) for r in reports)


def test_khd_and_khdd():
    assert call("khd", "-d", "3", HOPF_NEGATIVE_PD)[1] == str(9 * parse_kh(HOPF_NEGATIVE_PD))
    code, out, _ = call("khdd", "-d", "2", "--dprime", "2", "--assume-minimal", HOPF_NEGATIVE_PD)
    assert out == str(4 * parse_kh(HOPF_NEGATIVE_PD))
    code, out, _ = call("khdd", "-d", "2", "--dprime", "1/2", "--crossing", "0", "--ordering", "2,1",
                        HOPF_NEGATIVE_PD)
    assert code in (0, 2)


def parse_kh(pd):
    from khoskein.homology import kh

    return kh(parse_pd(pd))


def test_gamma_file(tmp_path):
    f = tmp_path / "gamma.txt"
    f.write_text(HOPF_NEGATIVE_PD + "\n")
    code, out, _ = call("khdd", "-d", "2", "--dprime", "1", "--gamma-file", str(f), HOPF_NEGATIVE_PD)
    code2, out2, _ = call("khdd", "-d", "2", "--dprime", "1", "--assume-minimal", HOPF_NEGATIVE_PD)
    assert code == code2 == 0 and out == out2


def test_file_inputs(tmp_path):
    pd = tmp_path / "k.pd"
    pd.write_text(TREFOIL_LEFT_PD)
    js = tmp_path / "k.json"
    js.write_text(to_json(parse_pd(TREFOIL_LEFT_PD)))
    assert call("poincare", str(pd))[1] == call("poincare", str(js))[1] == call("poincare", TREFOIL_LEFT_PD)[1]


@pytest.mark.parametrize("argv", [
    ["poincare", "X(1,2,3"],
    ["defect", TREFOIL_LEFT_PD],
    ["defect", "--crossing", "9", TREFOIL_LEFT_PD],
    ["theta", "U"],
    ["theta", "-d", "x", "U"],
    ["khdd", "-d", "2", "--dprime", "1", HOPF_NEGATIVE_PD],
    ["khdd", "-d", "2", "--dprime", "1", "--crossing", "0", "--ordering", "1,1", HOPF_NEGATIVE_PD],
    ["nosuchverb", "U"],
])
def test_input_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_cube_cap_env(monkeypatch):
    monkeypatch.setenv("KHOSKEIN_MAX_CROSSINGS", "1")
    code, _, err = call("poincare", TREFOIL_LEFT_PD)
    assert code == 2 and "KHOSKEIN_MAX_CROSSINGS" in err


def test_consistency_error_exit_3(monkeypatch):
    from khoskein import cli
    from khoskein.errors import SkeinViolation

    def broken(*a, **k):
        raise SkeinViolation("forced")

    monkeypatch.setattr(cli, "verify_skein", broken)
    assert call("verify-skein", HOPF_NEGATIVE_PD)[0] == 3


def test_bad_cap_env(monkeypatch):
    monkeypatch.setenv("KHOSKEIN_MAX_CROSSINGS", "many")
    assert call("poincare", TREFOIL_LEFT_PD)[0] == 2
