"""End-to-end certification of a family bundle.

Runs the hyperbolicity preconditions appropriate to the bundle's ambient
space, verifies the supplied symmetry certificates, quotients the spanning
surface, reduces infinite corners and tests triangle-orbifold rigidity.  A
totally-geodesic certificate is issued only when the reduced quotient is
rigid AND the combinatorial hyperbolicity route for that ambient passed;
surfaces recognized as thrice-punctured spheres are reported as totally
geodesic conditional on external verification of hyperbolicity (the engine
route), since that check has no combinatorial counterpart here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import criteria, orbifold
from .families.common import FamilyBundle
from .gluing import HomologyClass
from .spanning import SpanningSurfaceSpec
from .symmetry import certificate_problem


@dataclass
class PipelineResult:
    family: str
    parameters: dict[str, Any]
    certificate_log: list[dict]
    signature: orbifold.OrbifoldSignature | None
    reduced_signature: orbifold.OrbifoldSignature | None
    rigid: bool | str | None
    reciprocal_sum: Fraction | None
    chi_orb: Fraction | None
    hyperbolicity_route: str
    hyperbolicity_passed: bool | None
    surface_characteristics: dict
    thrice_punctured_sphere: bool
    totally_geodesic: str | None
    notes: list[str] = field(default_factory=list)


def hyperbolicity_checks(bundle: FamilyBundle) -> tuple[str, bool | None, list[str]]:
    d = bundle.diagram
    notes: list[str] = []
    if bundle.ambient == "thickened-surface":
        route = "cellular-alternating-prime"
        if not d.is_cellular() or not d.is_alternating():
            return route, False, ["projection is not cellular alternating"]
        report = criteria.check_obviously_prime(d)
        if report.prime is True:
            return route, True, notes
        notes.append(f"obviously-prime verdict: {report.prime}")
        return route, False, notes
    if bundle.ambient == "sphere-cross-circle" or bundle.ambient.startswith("lens-space"):
        route = "disk-regions-representativity"
        if not d.is_cellular():
            return route, False, ["complementary regions are not disks"]
        classes = tuple(
            HomologyClass(tuple(c)) for c in bundle.expected.get("representativity_classes", ())
        )
        if not classes:
            return route, None, ["no compressing classes supplied"]
        result = criteria.representativity_lower_bound(
            d, criteria.RepresentativityQuery(classes), max_depth=6
        )
        notes.append(f"representativity bound {result.bound} (per class {result.per_class})")
        return route, result.bound > 4, notes
    route = "external-engine"
    notes.append("hyperbolicity is delegated to the external engine on the exported link")
    return route, None, notes


def full_pipeline(bundle: FamilyBundle) -> PipelineResult:
    cert_log = []
    all_valid = True
    surface = bundle.spanning_surface
    for cert in bundle.symmetries:
        problem = (
            certificate_problem(surface, cert)
            if isinstance(surface, SpanningSurfaceSpec)
            else "template surfaces carry no certificates"
        )
        cert_log.append(
            {
                "label": cert.label,
                "kind": cert.kind,
                "order": cert.order,
                "valid": problem is None,
                "problem": problem,
            }
        )
        all_valid = all_valid and problem is None

    sig = reduced = None
    rigid = None
    total = chi = None
    notes: list[str] = []
    if isinstance(surface, SpanningSurfaceSpec) and all_valid and bundle.symmetries:
        sig, log = orbifold.quotient_with_log(surface, bundle.symmetries)
        notes.append(log["note"])
        reduced = orbifold.reduce_infinite_corners(sig)
        verdict = orbifold.is_rigid_hyperbolic(reduced)
        rigid, total, chi = verdict.rigid, verdict.reciprocal_sum, verdict.chi_orb
    elif isinstance(surface, SpanningSurfaceSpec):
        sig = orbifold.quotient(surface, ())
        reduced = sig
        verdict = orbifold.is_rigid_hyperbolic(reduced)
        rigid, total, chi = verdict.rigid, verdict.reciprocal_sum, verdict.chi_orb

    route, passed, route_notes = hyperbolicity_checks(bundle)
    notes.extend(route_notes)

    chars = surface.characteristics()
    tps = criteria.recognize_thrice_punctured_sphere(chars)
    geodesic_route = None
    if rigid is True and passed is True:
        geodesic_route = "rigid-orbifold"
    elif tps and passed is True:
        geodesic_route = "thrice-punctured-sphere"
    elif tps and passed is None:
        geodesic_route = "thrice-punctured-sphere (conditional on external hyperbolicity)"
        notes.append(
            "surface is a thrice-punctured sphere; total geodesy follows once the "
            "complement is verified hyperbolic by the external engine"
        )
    if "surface_count_note" in bundle.expected:
        notes.append(bundle.expected["surface_count_note"])

    return PipelineResult(
        family=bundle.family,
        parameters=bundle.parameters,
        certificate_log=cert_log,
        signature=sig,
        reduced_signature=reduced,
        rigid=rigid,
        reciprocal_sum=total,
        chi_orb=chi,
        hyperbolicity_route=route,
        hyperbolicity_passed=passed,
        surface_characteristics={
            "euler": chars.euler,
            "boundary_components": chars.boundary_components,
            "orientable": chars.orientable,
            "genus": chars.genus if chars.orientable else None,
            "crosscaps": None if chars.orientable else chars.crosscaps,
        },
        thrice_punctured_sphere=tps,
        totally_geodesic=geodesic_route,
        notes=notes,
    )
