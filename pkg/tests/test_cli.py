import json

from charfield.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_pretty_c4(capsys):
    code, out, _ = run(capsys, "table", "C4", "--format", "pretty")
    assert code == 0
    assert "E(4)" in out and "order 4" in out


def test_table_json_a5(capsys):
    code, out, _ = run(capsys, "table", "A5", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert sorted(irr["degree"] for irr in obj["irreducibles"]) == [1, 3, 3, 4, 5]
    assert obj["order"] == 60


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "S3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "class,1a,2a,3a"


def test_fov_json_psl28(capsys):
    code, out, _ = run(capsys, "fov", "PSL(2,8)", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["f"] == 3 and obj["rational"] == 3


def test_fov_trivial(capsys):
    code, out, _ = run(capsys, "fov", "C1", "--format", "json")
    assert code == 0
    assert json.loads(out)["f"] == 1


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "table", "Q5")
    assert code == 2 and "parse error" in err


def test_exit_code_semantic_error(capsys):
    code, _, err = run(capsys, "table", "D9")
    assert code == 3 and "construction error" in err
    code, _, err = run(capsys, "fov", "F15")
    assert code == 3


def test_verify_exclusions_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "exclusions")
    assert code == 0
    assert "exclusions: 8 passed, 0 failed" in out


def test_verify_omega_warns_not_fails(capsys):
    code, out, _ = run(capsys, "verify", "omega")
    assert code == 0
    assert "WARN omega-quadratic" in out and "r=12" in out


def test_verify_jobs_transcript_identical(capsys):
    _, serial, _ = run(capsys, "verify", "subfields", "--jobs", "1")
    _, parallel, _ = run(capsys, "verify", "subfields", "--jobs", "4")
    assert serial == parallel


def test_byte_determinism(capsys):
    _, a, _ = run(capsys, "table", "D18", "--format", "json")
    _, b, _ = run(capsys, "table", "D18", "--format", "json")
    assert a == b
    _, c, _ = run(capsys, "fov", "F52", "--format", "json")
    _, d, _ = run(capsys, "fov", "F52", "--format", "json")
    assert c == d


def test_omega_range(capsys):
    code, out, _ = run(capsys, "omega", "3..20", "--format", "csv")
    assert code == 0
    degrees = [int(line.split(",")[1]) for line in out.splitlines()[1:]]
    assert degrees == [1, 1, 2, 1, 3, 2, 3, 2, 5, 2, 6, 3, 4, 4, 8, 3, 9, 4]


def test_omega_range_errors(capsys):
    code, _, err = run(capsys, "omega", "2..5")
    assert code == 2 and "range error" in err
    code, _, err = run(capsys, "omega", "3..20000")
    assert code == 2


def test_subfields_values(capsys):
    code, out, _ = run(capsys, "subfields", "9", "--d", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "9,3,1"
    code, out, _ = run(capsys, "subfields", "7", "--d", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "7,3,1"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "c4.json"
    code, out, _ = run(capsys, "table", "C4", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["order"] == 4


def test_seed_flag_accepted(capsys):
    code, out, _ = run(capsys, "--seed", "7", "fov", "C2", "--format", "json")
    assert code == 0 and json.loads(out)["f"] == 2
