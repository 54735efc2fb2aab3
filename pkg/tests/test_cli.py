"""Command-line interface: schemas, exit codes, byte-stable output."""

from __future__ import annotations

import json

import pytest

from projheat.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_json_n3(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--n", "3", "--nu", "0", "--J", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 3 and payload["twoNu"] == 0 and payload["J"] == 6
    assert payload["c"][:3] == ["1/1", "-1/4", "1/32"]
    assert payload["b"][0] == {"factor": "32/3", "piPower": 3}
    assert isinstance(payload["paper_reported_diffs"], list)


def test_coeffs_volume_b0_n2(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--n", "2", "--nu", "0", "--J", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["b"] == [{"factor": "8/1", "piPower": 2}]  # 8 pi^2


def test_coeffs_exact_rationals_n1_nu3(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--n", "1", "--nu", "3", "--J", "4")
    assert code == 0
    payload = json.loads(out)
    for s in payload["c"]:
        num, den = s.split("/")
        int(num), int(den)


def test_coeffs_csv(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--n", "1", "--nu", "1", "--J", "2",
                           "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "j,c,b_factor,b_pi_power"
    assert len(lines) == 4
    assert lines[1].startswith("0,1/1,4/1,1")


def test_json_round_trip_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "coeffs", "--n", "2", "--nu", "1", "--J", "5")
    reparsed = json.loads(out1)
    assert json.dumps(reparsed, indent=2) + "\n" == out1
    _, out2, _ = run_cli(capsys, "coeffs", "--n", "2", "--nu", "1", "--J", "5")
    assert out1 == out2


def test_dims_table(capsys):
    code, out, _ = run_cli(capsys, "dims", "--n", "2", "--two-nu", "1", "--m-max", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][0] == {"m": 0, "dimension": 3}
    code, out, _ = run_cli(capsys, "dims", "--n", "1", "--two-nu", "0", "--m-max", "2",
                           "--format", "csv")
    assert out.splitlines() == ["m,dimension", "0,1", "1,3", "2,5"]


def test_decomp_command(capsys):
    code, out, _ = run_cli(capsys, "decomp", "--n", "4", "--two-nu", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["parity"] == "even"
    assert payload["coeffs"] == ["0/1", "4/1", "-5/1", "1/1"]


def test_kernel_command(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--n", "1", "--two-nu", "2", "--m", "1",
                           "--z", "0.3+0.2j", "--w", "0.1-0.4j")
    assert code == 0
    payload = json.loads(out)
    assert payload["termsUsed"] == 0
    assert payload["errorBound"] == 0.0
    assert set(payload["value"]) == {"re", "im"}


def test_heat_eval_both_methods(capsys):
    code, out, _ = run_cli(capsys, "heat-eval", "--n", "1", "--two-nu", "1",
                           "--t", "0.5", "--z", "0.3", "--w", "0.1j")
    assert code == 0
    payload = json.loads(out)
    assert payload["relDifference"] < 1e-6
    vs, vi = payload["series"]["value"], payload["integral"]["value"]
    assert vs["re"] == pytest.approx(vi["re"], rel=1e-6)


def test_trace_compare_scaled_column(capsys):
    code, out, _ = run_cli(capsys, "trace-compare", "--n", "1", "--nu", "1",
                           "--J", "6", "--t", "0.1,0.05,0.02")
    assert code == 0
    payload = json.loads(out)
    scaled = [row["scaledErr"] for row in payload["rows"]]
    assert len(scaled) == 3
    # roughly constant: successive values within a factor 4 (J=6 resolvable here)
    for a, b in zip(scaled, scaled[1:]):
        assert max(a / b, b / a) < 4.0


def test_trace_compare_rejects_bad_time(capsys):
    code, _, err = run_cli(capsys, "trace-compare", "--n", "1", "--nu", "0",
                           "--J", "4", "--t", "-1")
    assert code == 2
    assert "error" in err


def test_bad_flag_values_exit_2(capsys):
    assert run_cli(capsys, "coeffs", "--n", "0", "--nu", "0", "--J", "1")[0] == 2
    assert run_cli(capsys, "heat-eval", "--n", "1", "--two-nu", "1", "--t", "-0.5",
                   "--z", "0", "--w", "0.1")[0] == 2
    assert run_cli(capsys, "kernel", "--n", "1", "--two-nu", "0", "--m", "0",
                   "--z", "bogus", "--w", "0")[0] == 2
    # half-integer nu is rejected by the coefficient theorem gate upstream
    assert run_cli(capsys, "coeffs", "--n", "2", "--nu", "-1", "--J", "3")[0] == 2


def test_unknown_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "--bogus", "1"])
    assert exc.value.code == 2


def test_verify_single_scope(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "bernoulli")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"]["fail"] == 0
    assert all(c["status"] == "PASS" for c in payload["checks"])


def test_verify_paper8_warns_but_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "paper8")
    assert code == 0
    payload = json.loads(out)
    statuses = {c["status"] for c in payload["checks"]}
    assert "WARN" in statuses and "FAIL" not in statuses


def test_verify_dims_scope_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "dims", "--nmax", "3",
                           "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,status,detail"
    assert lines[1].startswith("dims.triple_agreement,PASS")


def test_output_to_file(tmp_path, capsys):
    target = tmp_path / "coeffs.json"
    code, out, _ = run_cli(capsys, "coeffs", "--n", "1", "--nu", "0", "--J", "2",
                           "--out", str(target))
    assert code == 0 and out == ""
    payload = json.loads(target.read_text())
    assert payload["c"] == ["1/1", "1/12", "7/480"]
