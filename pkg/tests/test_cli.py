import json
from pathlib import Path

import pytest

from teamlogic.cli import main

DATA = Path(__file__).parent / "data"

CHAIN = str(DATA / "chain_model.json")
SINGLETON = str(DATA / "singleton_model.json")
CYCLIC = str(DATA / "cyclic_model.json")
BAD = str(DATA / "bad_model.json")
UNIVERSE = str(DATA / "universe.txt")
LABEL = str(DATA / "label.circ")
ORDER = str(DATA / "order.circ")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_true(capsys):
    code, out, err = run(
        capsys,
        "eval", "--vars", "p,q,r", "--team", "100;010", "--formula", "dep(p;q)",
    )
    assert (code, out, err) == (0, "true\n", "")


def test_eval_false(capsys):
    code, out, _ = run(
        capsys,
        "eval", "--vars", "p,q,r", "--team", "100;010", "--formula", "dep(p)",
    )
    assert (code, out) == (1, "false\n")


def test_eval_empty_team(capsys):
    code, out, _ = run(capsys, "eval", "--vars", "p", "--team", "", "--formula", "F")
    assert (code, out) == (0, "true\n")


def test_eval_engine_choices(capsys):
    for engine in ("generic", "flat", "oracle"):
        code, out, _ = run(
            capsys,
            "eval", "--vars", "p", "--team", "1", "--formula", "p",
            "--engine", engine,
        )
        assert (code, out) == (0, "true\n")


def test_eval_parse_error(capsys):
    code, out, err = run(
        capsys, "eval", "--vars", "p", "--team", "1", "--formula", "p &"
    )
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert "syntax error at position 4" in err


def test_eval_json_output(capsys):
    code, out, _ = run(
        capsys,
        "--json", "eval", "--vars", "p", "--team", "1", "--formula", "p",
    )
    assert code == 0
    assert json.loads(out) == {"result": True}


def test_quiet_still_sets_exit_code(capsys):
    code, out, _ = run(
        capsys,
        "--quiet", "eval", "--vars", "p", "--team", "01", "--formula", "p",
    )
    assert code == 2  # bitstring length mismatch is an input error
    code, out, _ = run(
        capsys,
        "--quiet", "eval", "--vars", "p", "--team", "0", "--formula", "p",
    )
    assert (code, out) == (1, "")


def test_entail_true(capsys):
    code, out, _ = run(capsys, "entail", CHAIN, "T", "p")
    assert (code, out) == (0, "true\n")


def test_entail_false_names_witness(capsys):
    code, out, _ = run(capsys, "entail", CHAIN, "T", "q")
    assert code == 1
    assert out == "false\nviolating minimal state: s0\n"


def test_entail_oracle_engine(capsys):
    code, out, _ = run(capsys, "entail", CHAIN, "T", "p", "--engine", "oracle")
    assert (code, out) == (0, "true\n")


def test_entail_singleton_reduction(capsys):
    code, out, _ = run(capsys, "entail", SINGLETON, "T", "p & q & r")
    assert (code, out) == (0, "true\n")


def test_entail_verify_warns(capsys):
    code, out, err = run(capsys, "entail", CYCLIC, "p", "p", "--verify")
    assert code == 0
    assert out == "true\n"
    assert "warning: not cumulative for p" in err


def test_entail_bad_model_file(capsys):
    # the unknown key is rejected at the payload boundary and named
    code, _, err = run(capsys, "entail", BAD, "T", "p")
    assert code == 2
    assert "comment" in err


def test_entail_missing_file(capsys):
    code, _, err = run(capsys, "entail", str(DATA / "nope.json"), "T", "p")
    assert code == 2
    assert "cannot read" in err


def test_entail_invalid_json(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{oops")
    code, _, err = run(capsys, "entail", str(path), "T", "p")
    assert code == 2
    assert "not valid JSON" in err


def test_verify_all_subsets_pass(capsys):
    code, out, _ = run(capsys, "verify", CHAIN, "--mode", "all-subsets")
    assert (code, out) == (0, "pass\n")


def test_verify_cyclic_fails_with_witness(capsys):
    code, out, _ = run(capsys, "verify", CYCLIC, "--mode", "all-subsets")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "fail"
    assert any("a, b" in ln and "no minimal state below" in ln for ln in lines[1:])


def test_verify_universe_mode(capsys):
    code, out, _ = run(capsys, "verify", CHAIN, "--universe", UNIVERSE)
    assert (code, out) == (0, "pass\n")


def test_verify_universe_missing(capsys):
    code, _, err = run(capsys, "verify", CHAIN)
    assert code == 2
    assert "universe" in err


def test_verify_strong_pass(capsys):
    # each universe formula picks out a unique minimal chain state
    code, out, _ = run(capsys, "verify", CHAIN, "--strong", "--universe", UNIVERSE)
    assert (code, out) == (0, "pass\n")


def test_verify_strong_fail(tmp_path, capsys):
    uni = tmp_path / "u.txt"
    uni.write_text("T\n")
    code, out, _ = run(capsys, "verify", CYCLIC, "--strong", "--universe", str(uni))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "fail"
    assert any("asymmetry" in ln for ln in lines)
    assert any("exactly one minimal state" in ln for ln in lines)


def test_verify_strong_needs_universe(capsys):
    code, _, err = run(capsys, "verify", CHAIN, "--strong")
    assert code == 2
    assert "universe" in err


def test_systemc_pass(capsys):
    code, out, _ = run(capsys, "systemc", CHAIN, UNIVERSE, "--close", "2")
    assert (code, out) == (0, "pass\n")


def test_systemc_needs_closure(capsys):
    code, _, err = run(capsys, "systemc", CHAIN, UNIVERSE)
    assert code == 2
    assert "conjunction-closed" in err


def test_succ_entail_true(capsys):
    code, out, _ = run(
        capsys,
        "succ-entail", "--label", LABEL, "--order", ORDER,
        "--vars", "p", "--state-bits", "1", "T", "~p",
    )
    assert (code, out) == (0, "true\n")


def test_succ_entail_false_names_state(capsys):
    code, out, _ = run(
        capsys,
        "succ-entail", "--label", LABEL, "--order", ORDER,
        "--vars", "p", "--state-bits", "1", "T", "p",
    )
    assert code == 1
    assert out == "false\nviolating minimal state: 0\n"


def test_succ_entail_rejects_bad_circuit(tmp_path, capsys):
    bad = tmp_path / "bad.circ"
    bad.write_text("inputs 3\noutputs i1 i2\n")
    code, _, err = run(
        capsys,
        "succ-entail", "--label", str(bad), "--order", ORDER,
        "--vars", "p", "--state-bits", "1", "T", "p",
    )
    assert code == 2
    assert "invalid succinct model" in err


def test_bench_output_and_determinism(capsys):
    argv = ("bench", "--max-team-size", "4", "--trials", "1", "--seed", "9")
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    lines = out1.splitlines()
    assert lines[0].split() == ["logic", "team_size", "formula_size", "median_ns"]
    assert len(lines) == 4
    assert lines[-1].startswith("# cases sha256 ")
    code, out2, _ = run(capsys, *argv)
    assert out1.splitlines()[-1] == out2.splitlines()[-1]


def test_bench_validation_error(capsys):
    code, _, err = run(capsys, "bench", "--max-team-size", "1")
    assert code == 2
    assert "2..20" in err


def test_unknown_command_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
