"""Command layer: exit codes, the JSON envelope, and output formats."""

import json

import pytest

import qleech.cli as cli
from qleech.cli import main
from qleech.observations import CongruenceReport


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    assert err == ""
    return code, json.loads(out)


def assert_payload_strings(node):
    """Every leaf inside a payload is str or bool, never a bare number."""
    if isinstance(node, dict):
        for v in node.values():
            assert_payload_strings(v)
    elif isinstance(node, list):
        for v in node:
            assert_payload_strings(v)
    else:
        assert isinstance(node, (str, bool))


def strip_elapsed(parsed):
    trimmed = dict(parsed)
    assert isinstance(trimmed.pop("elapsedMillis"), int)
    return trimmed


# -- coeffs --------------------------------------------------------------------


def test_coeffs_j_envelope(capsys):
    code, parsed = run_json(capsys, ["coeffs", "--series", "j", "--order", "3"])
    assert code == 0
    assert parsed["command"] == "coeffs"
    assert parsed["ok"] is True
    assert isinstance(parsed["elapsedMillis"], int)
    payload = parsed["payload"]
    assert payload["coefficients"] == {
        "-1": "1",
        "0": "744",
        "1": "196884",
        "2": "21493760",
    }
    assert payload["valuation"] == "-1"
    assert_payload_strings(payload)


def test_coeffs_delta_values(capsys):
    code, parsed = run_json(capsys, ["coeffs", "--series", "delta", "--order", "6"])
    assert code == 0
    assert parsed["payload"]["coefficients"] == {
        "1": "1",
        "2": "-24",
        "3": "252",
        "4": "-1472",
        "5": "4830",
    }


def test_coeffs_json_roundtrip_idempotent(capsys):
    code, out, _ = run(capsys, ["coeffs", "--series", "euler", "--order", "8"])
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_coeffs_csv(capsys):
    code, out, err = run(
        capsys, ["coeffs", "--series", "j", "--order", "2", "--format", "csv"]
    )
    assert code == 0 and err == ""
    assert out == "-1,1\n0,744\n1,196884\n"


def test_coeffs_text_mentions_window(capsys):
    code, out, _ = run(
        capsys, ["coeffs", "--series", "delta", "--order", "5", "--format", "text"]
    )
    assert code == 0
    assert "delta" in out and "-1472" in out


def test_coeffs_out_file(tmp_path, capsys):
    target = tmp_path / "payload.json"
    code, out, _ = run(
        capsys,
        ["coeffs", "--series", "j", "--order", "2", "--out", str(target)],
    )
    assert code == 0
    parsed = json.loads(out)
    assert json.loads(target.read_text()) == parsed["payload"]


def test_coeffs_out_unwritable(tmp_path, capsys):
    code, _, err = run(
        capsys,
        ["coeffs", "--series", "j", "--order", "2", "--out", str(tmp_path / "x" / "y")],
    )
    assert code == 2
    assert "cannot write" in err


def test_coeffs_rejects_unknown_series(capsys):
    code, _, err = run(capsys, ["coeffs", "--series", "zeta", "--order", "3"])
    assert code == 2
    assert err


def test_coeffs_rejects_bad_order(capsys):
    code, _, err = run(capsys, ["coeffs", "--series", "delta", "--order", "1"])
    assert code == 2
    assert err


def test_order_ceiling(capsys):
    code, _, err = run(capsys, ["coeffs", "--series", "euler", "--order", "5001"])
    assert code == 2
    assert "ceiling" in err
    code, parsed = run_json(
        capsys, ["coeffs", "--series", "euler", "--order", "5001", "--unsafe-order"]
    )
    assert code == 0
    assert parsed["payload"]["order"] == "5001"


def test_seed_order_padding_hidden_but_functional(capsys):
    code, a = run_json(capsys, ["coeffs", "--series", "j", "--order", "5"])
    assert code == 0
    code, b = run_json(
        capsys,
        ["coeffs", "--series", "j", "--order", "5", "--seed-order-padding", "9"],
    )
    assert code == 0
    assert strip_elapsed(a) == strip_elapsed(b)
    _, out, _ = run(capsys, ["coeffs", "--help"])
    assert "--seed-order-padding" not in out


def test_seed_order_padding_domain(capsys):
    code, _, err = run(
        capsys,
        ["coeffs", "--series", "j", "--order", "5", "--seed-order-padding", "1"],
    )
    assert code == 2
    assert err


# -- verify --------------------------------------------------------------------


def test_verify_both(capsys):
    code, parsed = run_json(capsys, ["verify"])
    assert code == 0
    assert parsed["ok"] is True
    obs = parsed["payload"]["observations"]
    assert [o["name"] for o in obs] == ["jm", "yhh"]
    for o in obs:
        assert o["residue"] == "42"
        assert o["expectedResidue"] == "42"
        assert o["holds"] is True
    assert obs[0]["sumOfSquares"] == (
        "1354122807420479577276982518165534609358397061559942"
    )
    assert obs[1]["sumOfSquares"] == "1205975842063062"
    assert_payload_strings(parsed["payload"])


def test_verify_single_observation(capsys):
    code, parsed = run_json(capsys, ["verify", "--observation", "yhh"])
    assert code == 0
    obs = parsed["payload"]["observations"]
    assert len(obs) == 1 and obs[0]["sequence"] == "delta"


def test_verify_rejects_unknown_observation(capsys):
    code, _, err = run(capsys, ["verify", "--observation", "qq"])
    assert code == 2
    assert err


def test_verify_failure_exits_one(monkeypatch, capsys):
    # exercise the exit-1 plumbing with a stubbed residue
    def fake(sequence, lo, hi, modulus):
        return CongruenceReport(sequence, lo, hi, modulus, 41, 41)

    monkeypatch.setattr(cli, "check_congruence", fake)
    code, out, _ = run(capsys, ["verify", "--observation", "jm"])
    assert code == 1
    parsed = json.loads(out)
    assert parsed["ok"] is False
    assert parsed["payload"]["observations"][0]["holds"] is False


# -- cannonball ----------------------------------------------------------------


def test_cannonball_command(capsys):
    code, parsed = run_json(capsys, ["cannonball", "--max-n", "100"])
    assert code == 0
    sols = parsed["payload"]["solutions"]
    assert sols == [
        {"n": "1", "m": "1", "trivial": True},
        {"n": "24", "m": "70", "trivial": False},
    ]


def test_cannonball_domain(capsys):
    for bad in ("0", "-5"):
        code, _, err = run(capsys, ["cannonball", "--max-n", bad])
        assert code == 2
        assert err


# -- leech ---------------------------------------------------------------------


def test_leech_gram_command(capsys):
    code, parsed = run_json(capsys, ["leech", "gram"])
    assert code == 0
    payload = parsed["payload"]
    assert payload["determinant"] == "1"
    assert payload["even"] is True
    assert payload["positiveDefinite"] is True
    assert payload["gram"]["dim"] == "24"
    assert len(payload["gram"]["entries"]) == 24
    assert_payload_strings(payload)


def test_leech_min_command(capsys):
    code, parsed = run_json(capsys, ["leech", "min"])
    assert code == 0
    assert parsed["payload"]["normTwoCount"] == "0"
    assert parsed["payload"]["counts"] == {"1": "0", "2": "0"}


def test_leech_min_jobs_do_not_change_output(capsys):
    code, a = run_json(capsys, ["leech", "min"])
    assert code == 0
    code, b = run_json(capsys, ["leech", "min", "--jobs", "2"])
    assert code == 0
    assert strip_elapsed(a) == strip_elapsed(b)


def test_leech_rejects_bad_check(capsys):
    code, _, err = run(capsys, ["leech", "shortest"])
    assert code == 2
    assert err


def test_leech_rejects_bad_jobs(capsys):
    code, _, err = run(capsys, ["leech", "min", "--jobs", "0"])
    assert code == 2
    assert err


def test_leech_kissing_command(capsys):
    code, parsed = run_json(capsys, ["leech", "kissing"])
    assert code == 0
    payload = parsed["payload"]
    assert payload["combination"] == {"e4CubedWeight": "1", "deltaWeight": "-720"}
    rows = payload["comparisons"]
    assert {"norm": "4", "enumerated": "196560", "seriesCoefficient": "196560",
            "matches": True} in rows
    assert_payload_strings(payload)


def test_leech_kissing_rejects_odd_norm(capsys):
    code, _, err = run(capsys, ["leech", "kissing", "--max-norm", "3"])
    assert code == 2
    assert err


# -- e8 ------------------------------------------------------------------------


def test_e8_command(capsys):
    code, parsed = run_json(capsys, ["e8", "--max-norm", "4"])
    assert code == 0
    payload = parsed["payload"]
    assert payload["countsByNorm"]["2"] == "240"
    assert payload["countsByNorm"]["4"] == "2160"
    assert all(row["matches"] is True for row in payload["comparisons"])
    assert_payload_strings(payload)


def test_e8_jobs_do_not_change_output(capsys):
    code, a = run_json(capsys, ["e8", "--max-norm", "4"])
    code2, b = run_json(capsys, ["e8", "--max-norm", "4", "--jobs", "3"])
    assert code == code2 == 0
    assert strip_elapsed(a) == strip_elapsed(b)


def test_e8_rejects_out_of_contract_norms(capsys):
    for bad in ("3", "0", "10", "-2"):
        code, _, err = run(capsys, ["e8", "--max-norm", bad])
        assert code == 2
        assert err


# -- envelope details ----------------------------------------------------------


def test_no_command_is_usage_error(capsys):
    code, _, err = run(capsys, [])
    assert code == 2


def test_unknown_command_is_usage_error(capsys):
    code, _, err = run(capsys, ["spectrum"])
    assert code == 2


def test_elapsed_is_native_int(capsys):
    _, out, _ = run(capsys, ["coeffs", "--series", "euler", "--order", "3"])
    assert '"elapsedMillis": ' in out
    parsed = json.loads(out)
    assert isinstance(parsed["elapsedMillis"], int)
    assert not isinstance(parsed["elapsedMillis"], bool)
