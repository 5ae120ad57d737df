import io
import json

import pytest

from thetalift.cli import JobConfig, UsageError, cache_key, run


def call(*argv, cache=None):
    out, err = io.StringIO(), io.StringIO()
    args = list(argv) + (["--cache-dir", str(cache)] if cache else ["--no-cache"])
    code = run(args, out, err)
    return code, out.getvalue(), err.getvalue()


def test_normratio_report():
    code, out, _ = call("normratio", "--p", "10", "--q", "2", "--ell", "6", "--weight", "12")
    assert code == 0
    assert "mu: pi/64 (exact)" in out
    assert "verdict: injective" in out


def test_normratio_vanishing():
    code, out, _ = call("normratio", "--p", "1", "--q", "9", "--ell", "7")
    assert code == 0
    assert "verdict: vanishes_identically" in out


def test_verify_weilrep():
    code, out, _ = call("verify", "weilrep", "--lattice", "A2")
    assert code == 0
    assert "S^4 = 1       pass" in out
    assert "(ST)^3 = S^2  pass" in out


def test_borcherds_product_table(tmp_path):
    code, out, _ = call("borcherds", "product", "--lattice", "UU", "--input", "J", "--order", "6", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.split("\n\n")[1].strip().splitlines()[1:]]
    from thetalift.borcherds import j_difference

    expected = {(int(a), int(b)): c for (a, b), c in j_difference(6).coeffs.items()}
    assert {(int(a), int(b)): int(c) for a, b, c in rows} == expected
    assert "weight,0" in out


def test_cache_transparency(tmp_path):
    cold = call("theta", "expand", "--lattice", "A2", "--order", "6", cache=tmp_path)
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    entry = json.loads(files[0].read_text())
    assert entry["version"].startswith("thetalift-")
    warm = call("theta", "expand", "--lattice", "A2", "--order", "6", cache=tmp_path)
    nocache = call("theta", "expand", "--lattice", "A2", "--order", "6")
    assert cold == warm == nocache


def test_cache_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("THETALIFT_CACHE_DIR", str(tmp_path / "c"))
    out, err = io.StringIO(), io.StringIO()
    assert run(["modforms", "eigenforms", "--weight", "24", "--order", "5"], out, err) == 0
    assert len(list((tmp_path / "c").glob("*.json"))) == 1


def test_determinism():
    a = call("lattice", "info", "--lattice", "A2+U")
    b = call("lattice", "info", "--lattice", "A2+U")
    assert a == b and a[0] == 0


def test_verification_failure_exit_code():
    code, out, _ = call("verify", "fock", "--lemma", "decomp", "--p", "2", "--q", "1", "--ell", "1")
    assert code == 1
    assert "FAIL" in out and "monomial" in out


def test_verify_fock_pass():
    code, out, _ = call("verify", "fock", "--lemma", "brauer", "--p", "2", "--q", "1", "--ell", "3")
    assert code == 0 and "pass" in out


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["lattice", "info", "--lattice", "Z9"], "--lattice"),
        (["lattice", "info"], "--lattice"),
        (["verify", "fock", "--lemma", "bogus"], "--lemma"),
        (["normratio", "--p", "10", "--q", "2", "--ell", "6", "--weight", "14"], "--weight"),
        (["theta", "expand", "--lattice", "U"], "--lattice"),
    ],
)
def test_usage_errors_name_the_flag(argv, flag):
    code, _, err = call(*argv)
    assert code == 2
    assert flag in err


def test_argparse_errors_exit_2(capsys):
    assert run(["theta", "expand", "--order", "-3"]) == 2
    assert run(["nonsense"]) == 2
    assert "--order" in capsys.readouterr().err


def test_job_config_validation():
    with pytest.raises(UsageError):
        JobConfig(("lvalue",), precision_bits=0)
    with pytest.raises(UsageError):
        JobConfig(("lvalue",), output_format="xml")


def test_cache_key_depends_on_description():
    assert cache_key({"a": 1}) != cache_key({"a": 2})
    assert cache_key({"a": 1, "b": 2}) == cache_key({"b": 2, "a": 1})


def test_modularity_command():
    code, out, _ = call(
        "theta", "check-modularity", "--lattice", "diag(2,-2)", "--plane", "0,1", "--tau=0.1+1.1j", "--tau=-0.3+0.8j"
    )
    assert code == 0
    assert out.count("pass") == 2


def test_lvalue_routes_agree():
    code, out, _ = call("lvalue", "--weight", "12", "--s", "5", "--prime-bound", "2000", "--nmax", "100")
    assert code == 0
    assert "routes_agree: true" in out
