import json

import pytest

from dhankel.cli import RunConfig, main
from dhankel.specfun import DomainError


def test_indices_output(capsys):
    code = main(["indices", "--modulus", "power_log:gamma=0.5,theta=1.0"])
    out = capsys.readouterr().out
    assert code == 0
    m = float(out.split()[0].split("=")[1])
    big_m = float(out.split()[1].split("=")[1])
    assert abs(m - 0.5) <= 0.05
    assert abs(big_m - 0.5) <= 0.05


def test_modulus_check_divergent_exit_code(capsys):
    code = main(["modulus-check", "--modulus", "log_inverse:beta=2.0",
                 "--condition", "Z0"])
    out = capsys.readouterr().out
    assert code == 2
    assert "Z0=divergent" in out


def test_modulus_check_finite(capsys):
    code = main(["modulus-check", "--modulus", "power:gamma=0.5"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("Z0=2")
    assert "Z1=1.99" in out


def test_usage_error_bad_modulus(capsys):
    code = main(["indices", "--modulus", "not-a-family"])
    err = capsys.readouterr().err
    assert code == 1
    assert "grammar" in err


def test_usage_error_unknown_subcommand():
    assert main(["frobnicate"]) == 1


def test_titchmarsh_matched_verdict(tmp_path, capsys):
    out_file = tmp_path / "rep.json"
    code = main(["titchmarsh", "--theorem", "main1_part1",
                 "--modulus", "power:gamma=0.5", "--p", "2", "--alpha", "0.5",
                 "--synth", "matched", "--radius-lambda", "8192",
                 "--format", "json", "--output", str(out_file)])
    out = capsys.readouterr().out
    assert code == 0
    assert "VERDICT=bounded" in out
    payload = json.loads(out_file.read_text())
    assert payload["verdict"] == "bounded"
    assert payload["extra"]["config"]["modulus"] == "power:gamma=0.5"


def test_titchmarsh_precondition_exit(capsys):
    code = main(["titchmarsh", "--theorem", "main1_part1",
                 "--modulus", "log_inverse:beta=2.0", "--synth", "matched",
                 "--radius-lambda", "8192"])
    err = capsys.readouterr().err
    assert code == 2
    assert "Z0" in err


def test_titchmarsh_deterministic_reports(tmp_path, capsys):
    args = ["titchmarsh", "--theorem", "equivalence",
            "--modulus", "power:gamma=0.5", "--synth", "matched",
            "--radius-lambda", "8192", "--format", "csv"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--output", str(a)]) == 0
    assert main(args + ["--output", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_synth_csv(tmp_path, capsys):
    out_file = tmp_path / "synth.csv"
    code = main(["synth", "--modulus", "power:gamma=0.5",
                 "--radius-lambda", "64", "--output", str(out_file)])
    capsys.readouterr()
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "# alpha=0.5 radius=64.0"
    assert lines[1] == "lambda,value"
    lam, val = lines[2].split(",")
    float(lam), float(val)


def test_transform_csv(tmp_path, capsys):
    out_file = tmp_path / "spec.csv"
    code = main(["transform", "--function", "gauss", "--panels", "16",
                 "--order", "8", "--output", str(out_file)])
    capsys.readouterr()
    assert code == 0
    assert out_file.read_text().startswith("# alpha=0.5 radius=64.0")


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig(alpha=0.2)
    with pytest.raises(DomainError):
        RunConfig(p=2.5)
    with pytest.raises(DomainError):
        RunConfig(h_max_exp=8, h_min_exp=3)
    with pytest.raises(DomainError):
        RunConfig(format="xml")
