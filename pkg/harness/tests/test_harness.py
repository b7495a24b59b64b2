import json
import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from snappy_harness import cli, engine, volumes
from snappy_harness.table import EXPECTED_VOLUMES

ROW1 = 17.509452564

PD_TEXT = """X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]
# marked meridian component: 0
# components: 1
"""


class FakeManifold:
    def __init__(self, volume, fill_volumes):
        self._volume = volume
        self._fill_volumes = fill_volumes
        self._filled = None

    def volume(self):
        if self._filled is None:
            return self._volume
        if self._filled in self._fill_volumes:
            return self._fill_volumes[self._filled]
        raise RuntimeError("no hyperbolic structure found")

    def dehn_fill(self, slope, cusp):
        assert isinstance(cusp, int)
        self._filled = tuple(slope)


class FakeLink:
    def __init__(self, manifold):
        self._m = manifold

    def exterior(self):
        return self._m


class FakeEngine:
    def __init__(self, volume=ROW1, fill_volumes=None):
        self.volume_value = volume
        self.fill_volumes = fill_volumes or {}

    def Link(self, pd):
        assert all(len(row) == 4 for row in pd)
        return FakeLink(FakeManifold(self.volume_value, self.fill_volumes))


@pytest.fixture
def pd_file(tmp_path):
    path = tmp_path / "row1.pd"
    path.write_text(PD_TEXT)
    return str(path)


def test_pd_file_parsing(pd_file):
    parsed = engine.parse_pd_file(Path(pd_file).read_text())
    assert parsed.crossing_count == 3
    assert parsed.marked_component == 0


def test_malformed_pd_rejected():
    with pytest.raises(ValueError):
        engine.parse_pd_file("X[1,2,3,4] X[1,2,3,5]")
    with pytest.raises(ValueError):
        engine.parse_pd_file("no tuples here")


def test_verify_volume_pass(pd_file):
    check = volumes.verify_volume(pd_file, ROW1, engine=FakeEngine())
    assert check.passed
    assert math.isclose(check.computed_volume, ROW1)


def test_verify_volume_negative_control(pd_file):
    check = volumes.verify_volume(pd_file, 0.0, engine=FakeEngine())
    assert check.verdict == "fail"
    assert check.computed_volume == pytest.approx(ROW1)


def test_equal_volume_rows_both_pass(pd_file):
    # two distinct links can share a reference volume
    for row in (3, 4):
        check = volumes.verify_volume(pd_file, EXPECTED_VOLUMES[row], engine=FakeEngine(20.068375558))
        assert check.passed


def test_tolerance_validation(pd_file):
    with pytest.raises(ValueError):
        volumes.verify_volume(pd_file, ROW1, tolerance=0.0, engine=FakeEngine())


def test_skip_with_warning_when_engine_missing(pd_file, monkeypatch):
    monkeypatch.setattr(volumes, "load_engine", lambda: (_ for _ in ()).throw(
        engine.EngineUnavailable("missing")
    ))
    check = volumes.verify_volume(pd_file, ROW1)
    assert check.verdict == "skip"
    assert check.warnings


def test_non_coprime_filling_rejected(pd_file):
    with pytest.raises(ValueError):
        volumes.survey_fillings(pd_file, [(2, 4)], engine=FakeEngine())


def test_survey_reports_positive_and_degenerate(pd_file):
    fills = {(1, 3): 15.2, (5, 2): 14.9, (3, 4): 0.0}
    check = volumes.survey_fillings(pd_file, [(1, 3), (5, 2), (3, 4)], engine=FakeEngine(ROW1, fills))
    verdicts = {f.slope: f.verdict for f in check.fillings}
    assert verdicts[(1, 3)] == volumes.POSITIVE
    assert verdicts[(5, 2)] == volumes.POSITIVE
    assert verdicts[(3, 4)] == volumes.DEGENERATE
    assert not check.warnings  # filled volumes stay below the unfilled one


def test_survey_flags_volume_monotonicity_violations(pd_file):
    check = volumes.survey_fillings(pd_file, [(1, 3)], engine=FakeEngine(ROW1, {(1, 3): 99.0}))
    assert check.warnings


def test_survey_engine_error_is_a_verdict(pd_file):
    check = volumes.survey_fillings(pd_file, [(1, 3)], engine=FakeEngine(ROW1, {}))
    assert check.fillings[0].verdict == volumes.ENGINE_ERROR


def test_coprime_sweep():
    sweep = volumes.coprime_sweep(5)
    assert (2, 4) not in sweep
    assert (1, 1) in sweep and (5, 2) in sweep
    assert all(math.gcd(p, q) == 1 for p, q in sweep)


def test_cli_verify_skip(pd_file, monkeypatch, capsys, tmp_path):
    monkeypatch.setattr(volumes, "load_engine", lambda: (_ for _ in ()).throw(
        engine.EngineUnavailable("missing")
    ))
    out = tmp_path / "patch.json"
    rc = cli.main(["verify", pd_file, "--row", "1", "--skip-if-missing", "--out", str(out)])
    assert rc == 0
    patch = json.loads(out.read_text())
    assert patch["verdict"] == "skip"
    assert "engine missing" in capsys.readouterr().err


def test_cli_rows_manifest(pd_file, monkeypatch, tmp_path):
    monkeypatch.setattr(volumes, "load_engine", lambda: FakeEngine())
    manifest = tmp_path / "rows.json"
    manifest.write_text(json.dumps([{"file": pd_file, "row": 1, "word": "y"}]))
    out = tmp_path / "rows.out.json"
    rc = cli.main(["rows", str(manifest), "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())["rows"]
    assert rows[0]["verdict"] == "pass"
    assert rows[0]["tangle_word"] == "y"


def test_cli_survey(pd_file, monkeypatch, tmp_path):
    monkeypatch.setattr(
        volumes, "load_engine", lambda: FakeEngine(ROW1, {(1, 3): 15.0, (5, 2): 14.0, (3, 4): 13.0})
    )
    out = tmp_path / "survey.json"
    rc = cli.main(["survey", pd_file, "--fillings", "1,3 5,2 3,4", "--out", str(out)])
    assert rc == 0
    patch = json.loads(out.read_text())
    assert patch["exceptional_slopes"] == []


def has_engine() -> bool:
    try:
        engine.load_engine()
        return True
    except engine.EngineUnavailable:
        return False


@pytest.mark.skipif(not has_engine(), reason="engine not installed")
def test_real_engine_row_volumes():
    """With the engine installed: exported ribbon rows match the references."""
    root = Path(__file__).resolve().parents[2]
    sys.path.insert(0, str(root / "src"))
    from surflink import families, pd as pdmod

    words = {1: "y", 2: "xx", 3: "yx", 4: "yX", 5: "yy", 6: "xX"}
    for row, word in words.items():
        bundle = families.generate("knotted-ribbon", tangle=word)
        code = pdmod.diagram_to_pd(bundle.export_diagram)
        path = Path("/tmp") / f"row{row}.pd"
        path.write_text(pdmod.pd_text(code) + f"\n# marked meridian component: {bundle.marked_component}\n")
        check = volumes.verify_volume(str(path), EXPECTED_VOLUMES[row])
        assert check.computed_volume is not None
