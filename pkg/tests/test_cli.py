from importlib import resources

import pytest

from setorbits.cli import run


@pytest.fixture
def capout(capsys):
    def get(argv, expect=0):
        code = run(argv)
        captured = capsys.readouterr()
        assert code == expect, (code, captured.out, captured.err)
        return captured
    return get


# ---------------------------------------------------------------------------
# orbits

def test_orbits_catalog_id(capout):
    out = capout(["orbits", "--group", "12P2"]).out
    assert out.strip() == "s=14"


def test_orbits_inline_per_size(capout):
    out = capout(["orbits", "--group", 'gens:(1,2,3,4)', "--per-size"]).out
    assert out.strip() == "1 1 2 1 1 | s=6"


def test_orbits_dump(capout):
    out = capout(["orbits", "--group", 'gens:(1,2,3,4)', "--dump"]).out
    lines = out.strip().splitlines()
    assert lines[0] == "s=6"
    assert "{1,3} {2,4}" in lines


def test_orbits_unknown_id_is_usage_error(capout):
    cap = capout(["orbits", "--group", "99ZZ"], expect=2)
    assert "unknown catalog id" in cap.err


def test_unknown_flag_is_usage_error(capout):
    cap = capout(["orbits", "--group", "12P2", "--frobnicate"], expect=2)
    assert "frobnicate" in cap.err


def test_missing_subcommand_is_usage_error():
    assert run([]) == 2


# ---------------------------------------------------------------------------
# prune

def test_prune_output_format(capout):
    out = capout(["prune", "--r", "2", "--max-degree", "24"]).out
    lines = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert lines["24"] == "step2\tmiller=1x19+5,p=17"
    assert lines["18"] == "step1\tp=11"
    assert lines["12"] == "survived\t-"
    assert lines["7"] == "parity\t-"


def test_prune_full_range_has_81_degrees(capout):
    out = capout(["prune", "--r", "2"]).out
    assert len(out.strip().splitlines()) == 80  # degrees 2..81


# ---------------------------------------------------------------------------
# subgroups

def test_subgroups_listing(capout):
    out = capout(["subgroups", "--degree", "4"]).out
    lines = [l.split("\t") for l in out.strip().splitlines()]
    assert len(lines) == 11
    assert [l[1] for l in lines] == sorted((l[1] for l in lines), key=int)
    total = sum(int(l[2]) for l in lines)
    assert total == 30
    trans = [l for l in lines if l[3] == "yes"]
    assert len(trans) == 5


def test_subgroups_transitive_only(capout):
    out = capout(["subgroups", "--degree", "4", "--transitive"]).out
    assert len(out.strip().splitlines()) == 5


def test_subgroups_cap_error(capout):
    cap = capout(["subgroups", "--degree", "9"], expect=1)
    assert "cap" in cap.err


# ---------------------------------------------------------------------------
# catalog-verify

def test_catalog_verify_passes(capout):
    out = capout(["catalog-verify"]).out
    assert "manifest ok" in out


def test_catalog_verify_parallel(capout):
    out = capout(["--jobs", "2", "catalog-verify"]).out
    assert "manifest ok" in out


# ---------------------------------------------------------------------------
# classify

def test_classify_r2_tsv_golden(tmp_path, capout):
    golden = resources.files("setorbits").joinpath("data/tables/r2.tsv")
    path = tmp_path / "r2.tsv"
    path.write_bytes(golden.read_bytes())
    cap = capout(["classify", "--r", "2", "--format", "tsv",
                  "--golden", str(path)])
    assert "empty diff" in cap.err
    lines = cap.out.strip().splitlines()
    assert lines[0] == "r\tdegree\tlabel\tname\torder\ts"
    assert len(lines) == 10


def test_classify_golden_mismatch_exit_code(tmp_path, capout):
    bad = "r\tdegree\tlabel\tname\torder\ts\n2\t4\tx\tfake\t99\t6\n"
    path = tmp_path / "bad.tsv"
    path.write_text(bad)
    cap = capout(["classify", "--r", "2", "--golden", str(path)], expect=1)
    assert "missing" in cap.err


def test_classify_pretty(capout):
    out = capout(["classify", "--r", "3"]).out
    assert "M11" in out and "8 group(s)" in out


def test_classify_gap_failure_names_resource(capout):
    cap = capout(["classify", "--r", "7"], expect=1)
    assert "S_9" in cap.err


def test_classify_allow_gaps(capout):
    out = capout(["classify", "--r", "7", "--allow-gaps"], expect=1).out
    assert "gaps:" in out


def test_element_cap_env_override(capout, monkeypatch):
    monkeypatch.setenv("SETORBITS_ELEMENT_CAP", "10")
    # M12 exceeds a cap of 10 and has no symmetric/alternating shortcut
    cap = capout(["orbits", "--group", "12P2"], expect=1)
    assert cap.err.startswith("error:")


def test_element_cap_flag(capout):
    cap = capout(["--element-cap", "10", "orbits", "--group", "12P2"],
                 expect=1)
    assert "cap" in cap.err
