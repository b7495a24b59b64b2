import json

from surflink.cli import main


def test_generate_check_roundtrip(tmp_path):
    out = tmp_path / "k.json"
    assert main(["generate", "--family", "square-torus", "--genus", "1", "--twists", "0",
                 "--out", str(out)]) == 0
    report_path = tmp_path / "k.report.json"
    assert main(["check", "--in", str(out), "--out", str(report_path)]) == 0
    body = json.loads(report_path.read_text())["report"]
    assert body["obviously_prime"]["value"] is True
    assert body["cellular"]["value"] is True


def test_orbifold_subcommand(tmp_path):
    out = tmp_path / "orb.json"
    assert main(["orbifold", "--family", "square-torus", "--genus", "1", "--twists", "0",
                 "--out", str(out)]) == 0
    body = json.loads(out.read_text())["report"]
    assert body["reduced_signature"]["notation"] == "D(;2,4,inf)"
    assert body["rigid"] is True
    assert body["totally_geodesic"] == "rigid-orbifold"


def test_export_formats(tmp_path):
    gauss = tmp_path / "k.gauss"
    assert main(["export", "--family", "square-torus", "--format", "gauss",
                 "--out", str(gauss)]) == 0
    assert len(gauss.read_text().splitlines()[0].split()) == 8
    pd_file = tmp_path / "chain.pd"
    assert main(["export", "--family", "chain", "--cover", "1", "--format", "pd",
                 "--out", str(pd_file)]) == 0
    assert "components: 6" in pd_file.read_text()
    svg_file = tmp_path / "k.svg"
    assert main(["export", "--family", "square-torus", "--format", "svg",
                 "--out", str(svg_file)]) == 0
    assert svg_file.read_text().startswith("<svg")


def test_unsupported_ambient_is_usage_error():
    assert main(["export", "--family", "layer-cake", "--format", "pd"]) == 2


def test_missing_file_is_io_error(tmp_path):
    assert main(["check", "--in", str(tmp_path / "absent.json")]) == 2


def test_invalid_file_is_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["check", "--in", str(bad)]) == 2


def test_report_subcommand_runs_pipeline(tmp_path):
    out = tmp_path / "k.json"
    main(["generate", "--family", "square-torus", "--genus", "2", "--twists", "1",
          "--out", str(out)])
    report_path = tmp_path / "full.json"
    assert main(["report", "--in", str(out), "--out", str(report_path)]) == 0
    body = json.loads(report_path.read_text())["report"]
    assert body["pipeline"]["reduced_signature"]["notation"] == "D(;2,8,inf)"
    assert body["pipeline"]["hyperbolicity"]["passed"] is True


def test_failed_check_exits_one(tmp_path):
    # the knotted-ribbon diagram is not alternating: check reports it and
    # exits 1 rather than crashing
    out = tmp_path / "rib.json"
    assert main(["generate", "--family", "knotted-ribbon", "--tangle", "y",
                 "--out", str(out)]) == 0
    assert main(["check", "--in", str(out)]) == 1


def test_orbifold_from_file(tmp_path):
    out = tmp_path / "k.json"
    main(["generate", "--family", "square-torus", "--genus", "1", "--twists", "0",
          "--out", str(out)])
    orb_out = tmp_path / "orb.json"
    assert main(["orbifold", "--in", str(out), "--out", str(orb_out)]) == 0
    body = json.loads(orb_out.read_text())["report"]
    assert body["reduced_signature"]["notation"] == "D(;2,4,inf)"


def test_orbifold_from_file_roundtrips_every_family(tmp_path):
    for i, args in enumerate((
        ["--family", "hexagon-torus", "--genus", "1", "--twists", "1"],
        ["--family", "layer-cake", "--layers", "1", "--polygon", "2"],
        ["--family", "lens-layer-cake", "--lens", "2", "3"],
        ["--family", "knotted-ribbon", "--tangle", "y"],
        ["--family", "chain", "--cover", "1", "--twisted"],
    )):
        out = tmp_path / f"f{i}.json"
        assert main(["generate", *args, "--out", str(out)]) == 0
        rc = main(["orbifold", "--in", str(out), "--out", str(tmp_path / f"o{i}.json")])
        assert rc in (0, 1)  # verdict depends on the family's route
