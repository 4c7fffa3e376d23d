"""CLI surface tests: grammar, determinism, exit codes, output formats."""

import json

import pytest

from hypseries.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_calB_text(capsys):
    code, out, _ = run_cli(capsys, "poly", "calB", "--m", "1")
    assert code == 0
    assert out.strip() == "-11/90 * phi^4 - 4/9 * phi^2 * pi^2 + 8/45 * pi^4"


def test_poly_calS_all_rows(capsys):
    code, out, _ = run_cli(capsys, "poly", "calS", "--m", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "S_0 = 1/6 * phi^4 * pi^-2 + 2/3 * phi^2"
    assert lines[1] == "S_1 = 1/16 * phi^4 * pi^-4"


def test_poly_frak_b_json(capsys):
    code, out, _ = run_cli(capsys, "poly", "frak-b", "--i", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[0] == [{"num": 1, "den": 64, "pi_pow": -4}]
    assert data[1] == [{"num": 3, "den": 2048, "pi_pow": -8}]


def test_poly_json_round_trip(capsys):
    from hypseries.polynomials import PiPolynomial, calB

    code, out, _ = run_cli(capsys, "poly", "calB", "--m", "2", "--format", "json")
    assert code == 0
    assert PiPolynomial.from_json(out.strip()) == calB(2)


def test_coeffs_text(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "c", "--m", "2")
    assert code == 0
    assert out.strip().splitlines() == ["c_1 = 4", "c_3 = -5", "c_5 = 1"]


def test_coeffs_harmonic_route_omits_entries(capsys):
    code, out, _ = run_cli(
        capsys, "coeffs", "c", "--m", "5", "--route", "harmonic-closed-form",
        "--format", "json",
    )
    assert code == 0
    vals = json.loads(out)["values"]
    assert vals[4] is None and vals[0] == "-14400"


def test_bernoulli_subcommands(capsys):
    code, out, _ = run_cli(capsys, "bernoulli", "number", "--m", "12")
    assert code == 0 and out.strip() == "-691/2730"
    code, out, _ = run_cli(capsys, "bernoulli", "poly", "--m", "2")
    assert code == 0 and out.strip() == "1 * t^2 - 1 * t^1 + 1/6"
    code, out, _ = run_cli(capsys, "bernoulli", "reduced-even", "--i", "4", "--m", "1")
    assert code == 0 and out.strip() == "11/30"
    code, out, _ = run_cli(capsys, "bernoulli", "gamma-ratio", "--s", "2", "--r", "1")
    assert code == 0 and out.strip() == "1 * z^3 - 1 * z^1"


def test_eval_S_json(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "S", "--m", "0", "--phi", "1", "--prec", "64", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["value"][0].startswith("4.7464")  # 1/6 + 2 pi^2/3 - 2 - ...
    assert data["terms_used"] > 10


def test_eval_zeta(capsys):
    code, out, _ = run_cli(capsys, "eval", "zeta", "--s", "2", "--prec", "64")
    assert code == 0
    assert out.strip().startswith("1.64493")


def test_output_determinism(capsys):
    args = ("verify", "funcrel-S", "--m", "1", "--phi", "1", "--prec", "64",
            "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    args = ("zeros", "--m-max", "1", "--prec", "64", "--format", "csv")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_verify_single_relation_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "funcrel-S", "--m", "0", "--phi", "1", "--prec", "128",
        "--format", "json",
    )
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["pass"] is True
    assert set(reports[0]) == {"relation_id", "m", "phi", "prec", "residual", "pass"}


def test_verify_identities(capsys):
    code, out, _ = run_cli(capsys, "verify", "identities", "--m-max", "4")
    assert code == 0
    assert all(line.startswith("[PASS]") for line in out.strip().splitlines())


def test_verify_reduction(capsys):
    code, out, _ = run_cli(capsys, "verify", "reduction", "--prec", "96")
    assert code == 0
    assert out.count("[PASS]") == 3


def test_zeros_csv(capsys):
    code, out, _ = run_cli(capsys, "zeros", "--m-max", "1", "--prec", "64",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,re,im,residual"
    assert len(lines) == 1 + 2 + 4


def test_zeros_out_file(tmp_path, capsys):
    target = tmp_path / "zeros.csv"
    code, out, _ = run_cli(capsys, "zeros", "--m", "0", "--prec", "64",
                           "--format", "csv", "--out", str(target))
    assert code == 0
    assert target.read_text().splitlines()[0] == "m,re,im,residual"


def test_exit_code_2_on_domain_error(capsys):
    code, _, err = run_cli(capsys, "eval", "S", "--m", "0", "--phi", "0,1")
    assert code == 2
    assert "diverges" in err


def test_exit_code_2_on_bad_phi(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "S", "--phi", "1,2,3"])
    assert exc.value.code == 2


def test_exit_code_1_on_failed_report(capsys, monkeypatch):
    import hypseries.cli as cli_mod

    real = cli_mod.rel.check_funcrel_S

    def failing(m, phi, prec):
        rep = real(m, phi, prec)
        rep.passed = False
        return rep

    monkeypatch.setattr(cli_mod.rel, "check_funcrel_S", failing)
    code, out, _ = run_cli(capsys, "verify", "funcrel-S", "--m", "0", "--phi", "1",
                           "--prec", "64")
    assert code == 1
    assert "[FAIL]" in out


def test_verify_all_exits_zero(capsys):
    """The full verification battery at m_max = 6 must come back all-pass."""
    code, out, _ = run_cli(capsys, "verify", "all", "--m-max", "6", "--prec", "128")
    assert code == 0
    assert "[FAIL]" not in out
    assert out.count("[PASS]") > 30
