import json
from importlib import resources

import pytest

from cablefloer.cli import SCHEMA, emit, load, read_dims, read_grading, run
from cablefloer.cables import Grading
from cablefloer.homology import GradedDim
from cablefloer.presets import TABLE_PRESETS


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("preset", TABLE_PRESETS)
def test_table_golden(capsys, preset):
    code, out, _ = call(capsys, "table", "--preset", preset)
    assert code == 0
    golden = resources.files("cablefloer").joinpath(f"golden/table_{preset}.tsv").read_text(encoding="utf-8")
    assert out == golden


def test_golden_pins_annotations():
    text = resources.files("cablefloer").joinpath("golden/table_CABLE-TREFOIL-46.tsv").read_text(encoding="utf-8")
    assert "k ≥ 10" in text and "# note:" in text
    text = resources.files("cablefloer").joinpath("golden/table_T46.tsv").read_text(encoding="utf-8")
    assert "F(-12)" in text and "F(-14)" in text


def test_table_json_and_svg(capsys, tmp_path):
    code, out, _ = call(capsys, "table", "--preset", "T46", "--format", "json")
    assert code == 0 and load(out)["preset"] == "T46"
    path = tmp_path / "t46.svg"
    assert run(["table", "--preset", "T46", "--format", "svg", "--out", str(path)]) == 0
    svg = path.read_text()
    assert svg.startswith("<svg") and "<circle" in svg
    code, out, _ = call(capsys, "table", "--preset", "T33", "--format", "svg")
    assert code == 0 and "<svg" in out


def test_table_unknown(capsys):
    code, _, err = call(capsys, "table", "--preset", "T55")
    assert code == 2 and "no table" in err


def test_hfl_boundary(capsys):
    code, out, _ = call(capsys, "hfl", "--knot", "trefoil", "--r", "2", "--m", "1", "--n", "1",
                        "--grading", "1/2,1/2")
    assert code == 0
    rec = load(out)
    assert rec["maslov_dims"] == {"-1": 1}
    assert rec["link"]["regime"] == "boundary"
    assert read_grading(rec["grading"]) == Grading.of("1/2", "1/2")


def test_hfl_tsv(capsys):
    code, out, _ = call(capsys, "hfl", "--preset", "T33", "--grading", "0,0,0", "--format", "tsv")
    assert code == 0
    assert out.strip() == "(0,0,0)\t-2:1 -3:2"


def test_hflhat_boundary_exit_3(capsys):
    code, _, err = call(capsys, "hflhat", "--knot", "trefoil", "--r", "2", "--m", "1", "--n", "1",
                        "--grading", "1/2,1/2")
    assert code == 3 and "unsupported" in err


def test_exit_codes(capsys):
    assert call(capsys, "hfl", "--preset", "T22", "--grading", "0,0")[0] == 2
    assert call(capsys, "hfl", "--knot", "trefoil", "--r", "2", "--m", "2", "--n", "4", "--grading", "0,0")[0] == 2
    assert call(capsys, "hfl", "--knot", "bogus", "--r", "2", "--m", "1", "--n", "1", "--grading", "0,0")[0] == 2
    assert call(capsys, "profile", "--knot", "trefoil")[0] == 2
    with pytest.raises(SystemExit) as info:
        run(["nonsense"])
    assert info.value.code == 2


def test_decompose(capsys):
    code, out, _ = call(capsys, "decompose", "--preset", "T46")
    assert code == 0 and out.strip() == "5·M0 + M(1,1) + M(1,inf)"
    code, out, _ = call(capsys, "decompose", "--preset", "CABLE-TREFOIL-46", "--format", "json")
    assert load(out)["decomposition"] == "4·M0 + M(1,1) + M(1,2) + M(1,inf)"
    assert call(capsys, "decompose", "--preset", "CABLE-TREFOIL-22")[0] == 3


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--preset", "T46", "--hat")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = call(capsys, "verify", "--preset", "CABLE-TREFOIL-22", "--window=-3:3")
    assert code == 0 and out.startswith("PASS")


def test_profile_env_window(capsys, monkeypatch):
    monkeypatch.setenv("CABLEFLOER_WINDOW", "-1:2")
    code, out, _ = call(capsys, "profile", "--preset", "T46")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k\th\tbeta"
    assert [l.split("\t")[0] for l in lines[1:]] == ["2", "1", "0", "-1"]
    # an explicit flag wins over the environment
    code, out, _ = call(capsys, "profile", "--preset", "T46", "--window", "0:0", "--format", "json")
    assert [row["k"] for row in load(out)["profile"]] == ["0"]


def test_surgery(capsys):
    code, out, _ = call(capsys, "surgery", "--preset", "T46", "--p", "6,7")
    rec = load(out)
    assert code == 0 and rec["det"] == 6
    assert rec["description"]["text"] == "S^3_{3/2}(unknot) # L(2,3) # L(1,1)"
    code, out, _ = call(capsys, "surgery", "--preset", "T46", "--p", "7,7")
    rec = load(out)
    assert rec["description"] is None and rec["positive_cone"] is True


def test_chi(capsys):
    code, out, _ = call(capsys, "chi", "--preset", "CABLE-TREFOIL-46")
    assert load(out)["chi"] == "t^6 + t^3 + t^2 + t^-1 + t^-2 + t^-5"
    code, out, _ = call(capsys, "chi", "--preset", "T22", "--grading", "1/2,1/2")
    assert load(out)["chi"] == 1


def test_json_round_trip():
    rec = {"command": "hfl", "grading": ["1/2", "-3/2"], "maslov_dims": {"-2": 1, "-3": 2}}
    text = emit(rec)
    assert json.loads(text)["schema"] == SCHEMA
    assert load(text) == rec
    assert emit(load(text)) == text
    assert read_dims(rec["maslov_dims"]) == GradedDim({-2: 1, -3: 2})
    with pytest.raises(ValueError):
        load(json.dumps({"schema": "other/9"}))
