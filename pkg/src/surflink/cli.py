"""Command-line interface.

Subcommands: generate, check, orbifold, export, report.  Exit codes: 0 when
every verdict is positive, 1 when a check failed or returned indeterminate
(details in the report on stdout or --out), 2 for usage or IO errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families, fileio, report as report_mod, svg
from .families.common import FamilyError
from .pipeline import full_pipeline


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise SystemExit(_usage_error(f"cannot read {path}: {exc}"))


def _write(path: str | None, text: str) -> None:
    if path:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise SystemExit(_usage_error(f"cannot write {path}: {exc}"))
    else:
        sys.stdout.write(text)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _family_params(args) -> dict:
    params = {}
    if args.genus is not None:
        params["genus"] = args.genus
    if args.twists is not None:
        params["twists"] = args.twists
    if args.layers is not None:
        params["layers"] = args.layers
    if args.polygon is not None:
        params["polygon"] = args.polygon
    if args.lens is not None:
        params["lens"] = tuple(args.lens)
    if args.tangle is not None:
        params["tangle"] = args.tangle
    if args.cover is not None:
        params["cover"] = args.cover
    if args.twisted:
        params["twisted"] = True
    return params


def _bundle_metadata(bundle) -> dict:
    meta = {"family": bundle.family, "parameters": bundle.parameters, "ambient": bundle.ambient}
    if "representativity_classes" in bundle.expected:
        meta["representativity_classes"] = [
            list(c) for c in bundle.expected["representativity_classes"]
        ]
    return meta


def cmd_generate(args) -> int:
    try:
        bundle = families.generate(args.family, **_family_params(args))
    except FamilyError as exc:
        return _usage_error(str(exc))
    text = fileio.serialize_diagram(bundle.diagram, _bundle_metadata(bundle))
    _write(args.out, text)
    return 0


def cmd_check(args) -> int:
    text = _read(args.infile)
    rep = report_mod.diagram_report(text)
    _write(args.out, report_mod.finalize(rep))
    return 0 if report_mod.all_positive(rep) else 1


def _bundle_from_file(path: str):
    meta = fileio.diagram_metadata(_read(path))
    if not meta.get("family"):
        raise FamilyError(
            "diagram file carries no family metadata; regenerate it with `generate`"
        )
    params = {
        k: (tuple(v) if isinstance(v, list) else v)
        for k, v in meta.get("parameters", {}).items()
    }
    return families.generate(meta["family"], **params)


def cmd_orbifold(args) -> int:
    try:
        if args.infile:
            bundle = _bundle_from_file(args.infile)
        else:
            bundle = families.generate(args.family, **_family_params(args))
    except FamilyError as exc:
        return _usage_error(str(exc))
    result = full_pipeline(bundle)
    rep = report_mod.pipeline_report(result)
    _write(args.out, report_mod.finalize(rep))
    positive = result.rigid is True or result.totally_geodesic is not None
    return 0 if positive else 1


def cmd_export(args) -> int:
    if args.format == "json":
        if args.infile:
            text = _read(args.infile)
            fileio.parse_diagram(text)  # validates
            _write(args.out, text)
            return 0
        return cmd_generate(args)
    try:
        bundle = families.generate(args.family, **_family_params(args))
    except FamilyError as exc:
        return _usage_error(str(exc))
    if args.format == "gauss":
        try:
            _write(args.out, fileio.export_gauss_code(bundle.diagram))
        except Exception as exc:
            return _usage_error(str(exc))
        return 0
    if args.format == "pd":
        try:
            _write(args.out, fileio.export_link_file(bundle))
        except fileio.UnsupportedAmbientError as exc:
            return _usage_error(f"unsupported-ambient: {exc}")
        return 0
    if args.format == "svg":
        _write(args.out, svg.render_svg(bundle.diagram, bundle.symmetries, title=bundle.family))
        return 0
    return _usage_error(f"unknown format {args.format!r}")


def cmd_report(args) -> int:
    text = _read(args.infile)
    rep = report_mod.diagram_report(text)
    meta = fileio.diagram_metadata(text)
    if meta.get("family"):
        try:
            bundle = families.generate(meta["family"], **{
                k: (tuple(v) if isinstance(v, list) else v)
                for k, v in meta.get("parameters", {}).items()
            })
            rep["pipeline"] = report_mod.pipeline_report(full_pipeline(bundle))
        except FamilyError:
            pass
    _write(args.out, report_mod.finalize(rep))
    ok = report_mod.all_positive(rep)
    if "pipeline" in rep:
        ok = ok and rep["pipeline"]["totally_geodesic"] is not None
    return 0 if ok else 1


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=families.FAMILIES, default="square-torus")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--twists", type=int, default=None)
    p.add_argument("--layers", type=int, default=None, help="layer pairs for the layer cake")
    p.add_argument("--polygon", type=int, default=None, help="half the layer polygon width")
    p.add_argument("--lens", type=int, nargs=2, metavar=("P", "Q"), default=None)
    p.add_argument("--tangle", type=str, default=None, help="ribbon tangle word over x,X,y,Y")
    p.add_argument("--cover", type=int, default=None, help="chain cover degree")
    p.add_argument("--twisted", action="store_true", help="chain family: merge the rungs")
    p.add_argument("--out", type=str, default=None)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="surflink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a family diagram file")
    _add_family_flags(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="run the precondition checkers on a diagram file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbifold", help="run the quotient pipeline on a family or diagram file")
    _add_family_flags(p)
    p.add_argument("--in", dest="infile", default=None)
    p.set_defaults(func=cmd_orbifold)

    p = sub.add_parser("export", help="export a family in another format")
    _add_family_flags(p)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--format", choices=("json", "gauss", "pd", "svg"), default="json")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("report", help="full verification report for a diagram file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_report)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except fileio.DiagramFormatError as exc:
        print(f"invalid diagram file: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
