"""Verification reports: every verdict traceable to an operation and inputs hash."""

from __future__ import annotations

import json
import time
from fractions import Fraction
from typing import Any

from . import __version__, criteria, fileio, orbifold
from .gluing import HomologyClass
from .pipeline import PipelineResult


def _rational(x: Fraction | None) -> str | None:
    if x is None:
        return None
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def signature_json(sig: orbifold.OrbifoldSignature | None) -> dict | None:
    if sig is None:
        return None
    sig = sig.canonical()
    return {
        "notation": sig.notation(),
        "underlying_genus": sig.underlying_genus,
        "orientable": sig.orientable,
        "cone_points": list(sig.cone_points),
        "boundary": [
            {
                "corners": ["inf" if c == orbifold.INF else int(c) for c in circle.corners],
                "segments": list(circle.segments),
            }
            for circle in sig.boundary
        ],
    }


def diagram_report(text: str, run_checks: bool = True) -> dict:
    """Full verification report for a serialized diagram file."""
    diagram = fileio.parse_diagram(text)
    metadata = fileio.diagram_metadata(text)
    report: dict[str, Any] = {
        "toolkit_version": __version__,
        "inputs_hash": fileio.inputs_hash(text),
        "metadata": metadata,
        "crossings": diagram.crossing_count,
        "components": len(diagram.components),
        "face_sizes": list(diagram.face_sizes),
        "euler_characteristic": {
            "operation": "euler_characteristic",
            "value": diagram.euler_characteristic,
        },
        "alternating": {"operation": "is_alternating", "value": diagram.is_alternating()},
        "cellular": {"operation": "is_cellular", "value": diagram.is_cellular()},
    }
    if run_checks and diagram.is_cellular() and diagram.is_alternating():
        prime = criteria.check_obviously_prime(diagram)
        report["obviously_prime"] = {
            "operation": "check_obviously_prime",
            "value": prime.prime,
            "curves_examined": prime.curves_examined,
            "witnesses": [
                {
                    "arcs": list(c.arcs),
                    "faces": list(c.faces),
                    "word": [list(w) for w in c.word],
                    "verdict": c.verdict,
                }
                for c in prime.witnesses
            ],
        }
    classes = metadata.get("representativity_classes")
    if run_checks and classes and diagram.surface.genus == 1:
        query = criteria.RepresentativityQuery(tuple(HomologyClass(tuple(c)) for c in classes))
        rep = criteria.representativity_lower_bound(diagram, query, max_depth=8)
        report["representativity"] = {
            "operation": "representativity_lower_bound",
            "bound": rep.bound,
            "per_class": list(rep.per_class),
            "classes": classes,
            "coefficient_bound": rep.coefficient_bound,
            "floor_only": list(rep.floor_only),
            "note": "minima are certified for curves with side-pair coefficients "
            "within the stated bound",
        }
    return report


def pipeline_report(result: PipelineResult) -> dict:
    return {
        "toolkit_version": __version__,
        "family": result.family,
        "parameters": result.parameters,
        "certificates": result.certificate_log,
        "signature": signature_json(result.signature),
        "reduced_signature": signature_json(result.reduced_signature),
        "rigid": result.rigid,
        "reciprocal_sum": _rational(result.reciprocal_sum),
        "chi_orb": _rational(result.chi_orb),
        "hyperbolicity": {
            "route": result.hyperbolicity_route,
            "passed": result.hyperbolicity_passed,
        },
        "surface": result.surface_characteristics,
        "thrice_punctured_sphere": result.thrice_punctured_sphere,
        "totally_geodesic": result.totally_geodesic,
        "notes": result.notes,
    }


def finalize(report: dict, with_timestamp: bool = True) -> str:
    """Serialize a report; the timestamp stays outside the reproducible body."""
    body = json.dumps(report, sort_keys=True, separators=(",", ":"))
    envelope = {"report": json.loads(body)}
    if with_timestamp:
        envelope["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    return json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n"


def all_positive(report: dict) -> bool:
    """Whether every verdict in a report is affirmative (exit-code policy)."""
    verdicts = []
    for key in ("alternating", "cellular"):
        if key in report:
            verdicts.append(report[key]["value"] is True)
    if "obviously_prime" in report:
        verdicts.append(report["obviously_prime"]["value"] is True)
    if "representativity" in report:
        verdicts.append(report["representativity"]["bound"] > 4)
    if "rigid" in report:
        verdicts.append(report["rigid"] is True)
    if "totally_geodesic" in report:
        verdicts.append(report["totally_geodesic"] is not None)
    return all(verdicts) if verdicts else True
