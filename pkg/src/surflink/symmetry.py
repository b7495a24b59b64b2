"""Symmetry certificates: supplied involutions/rotations on spanning-surface flags.

A certificate is never auto-detected: a family generator names a symmetry at
the dart level (a permutation compatible with the rotation, edge involution
and over/under data), and the flag action on the realized surface is induced
mechanically.  Verification re-checks everything from scratch, so a bundle's
certificates can always be re-validated independently of how they were built.

Reflections conjugate the vertex rotation to its inverse and swap the two
orientation classes of the flag system; pi-rotations and higher-order
rotations preserve both.  Over/under data must be preserved either on the
nose or uniformly swapped (the latter corresponds to composing with the flip
of the thickening direction, which acts trivially on the surface).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import SurfaceLinkDiagram
from .spanning import RealizedSurface, SpanningSurfaceSpec


class CertificateError(ValueError):
    """Raised when a symmetry certificate fails verification."""


@dataclass(frozen=True)
class DiagramSymmetry:
    """A symmetry of the diagram itself, given on darts."""

    dart_map: tuple[int, ...]
    reverses_orientation: bool
    label: str = ""

    def check(self, diagram: SurfaceLinkDiagram) -> bool:
        """Validate against the diagram; returns whether over/under is flipped."""
        dm = self.dart_map
        m = diagram.dart_count
        if len(dm) != m or sorted(dm) != list(range(m)):
            raise CertificateError(f"{self.label}: dart map is not a permutation")
        sig = diagram.sigma_inv if self.reverses_orientation else diagram.sigma
        for d in range(m):
            if dm[diagram.sigma(d)] != sig(dm[d]):
                raise CertificateError(f"{self.label}: dart map incompatible with rotation at dart {d}")
            if dm[diagram.alpha[d]] != diagram.alpha[dm[d]]:
                raise CertificateError(f"{self.label}: dart map incompatible with arcs at dart {d}")
        flips = None
        for d in range(m):
            same = diagram.is_over(dm[d]) == diagram.is_over(d)
            if flips is None:
                flips = not same
            elif flips == same:
                raise CertificateError(f"{self.label}: over/under neither preserved nor uniformly swapped")
        return bool(flips)


@dataclass(frozen=True)
class SymmetryCertificate:
    """A verified (or verifiable) symmetry of a realized spanning surface."""

    kind: str  # reflection | pi-rotation | rotation
    label: str
    flag_map: tuple[int, ...]
    order: int = 2
    dart_map: tuple[int, ...] | None = None
    reverses_orientation: bool = False
    flips_thickening: bool = False
    fixed_sides: tuple[tuple[int, int], ...] = ()

    def permutation_power(self, k: int) -> tuple[int, ...]:
        out = tuple(range(len(self.flag_map)))
        for _ in range(k):
            out = tuple(self.flag_map[x] for x in out)
        return out


def _fixed_sides(realized: RealizedSurface, flag_map: Sequence[int]) -> tuple[tuple[int, int], ...]:
    cx = realized.complex
    out = []
    for cell, n in enumerate(cx.side_counts):
        for side in range(n):
            f0 = cx.flag_id(cell, side, 0)
            f1 = cx.flag_id(cell, side, 1)
            if {flag_map[f0], flag_map[f1]} == {f0, f1}:
                out.append((cell, side))
    return tuple(out)


def induce_certificate(
    realized: RealizedSurface,
    symmetry: DiagramSymmetry,
    kind: str,
    label: str = "",
) -> SymmetryCertificate:
    """Lift a diagram symmetry to a flag permutation of the realized surface."""
    spec = realized.spec
    diagram = spec.diagram
    flips = symmetry.check(diagram)
    dm = symmetry.dart_map
    rev = symmetry.reverses_orientation
    cx = realized.complex
    label = label or symmetry.label

    corner_lookup = spec.corner_to_piece

    def image_corner(lead: int) -> int:
        # corner (d, sigma d) maps to the corner led by psi(d) (preserving)
        # or psi(sigma d) (reversing)
        return dm[diagram.sigma(lead)] if rev else dm[lead]

    flag_map = [-1] * cx.flag_count
    # pieces first: locate the image circuit and its traversal direction
    # (caps carry an arbitrary circuit orientation, so the direction is read
    # off the image of an exit dart rather than assumed)
    for pi, circuit in enumerate(spec.circuits):
        r = len(circuit.corners)
        img_leads = [image_corner(c) for c in circuit.corners]
        if img_leads[0] not in corner_lookup:
            raise CertificateError(f"{label}: image corner {img_leads[0]} is not on the surface")
        qi, j = corner_lookup[img_leads[0]]
        target = spec.circuits[qi]
        if len(target.corners) != r or type(spec.pieces[qi]) is not type(spec.pieces[pi]):
            raise CertificateError(f"{label}: piece {pi} maps to incompatible piece {qi}")
        img_exit = dm[circuit.exits[0]]
        if img_exit == target.exits[j]:
            flip = False
        elif img_exit == diagram.alpha[target.exits[(j - 1) % r]]:
            flip = True
        else:
            raise CertificateError(f"{label}: piece {pi} exits do not map to circuit arcs")
        for t in range(r):
            pos = (j - t) % r if flip else (j + t) % r
            if target.corners[pos] != img_leads[t]:
                raise CertificateError(f"{label}: piece {pi} circuit does not map to a circuit")
            exit_img = dm[circuit.exits[t]]
            expected = (
                diagram.alpha[target.exits[(pos - 1) % r]] if flip else target.exits[pos]
            )
            if exit_img != expected:
                raise CertificateError(f"{label}: piece {pi} arc images are inconsistent")
        for t in range(r):
            pos = (j - t) % r if flip else (j + t) % r
            att_pos = pos
            arc_pos = (pos - 1) % r if flip else pos
            for end in (0, 1):
                src = cx.flag_id(pi, 2 * t, end)
                flag_map[src] = cx.flag_id(qi, 2 * att_pos, 1 - end if flip else end)
                src = cx.flag_id(pi, 2 * t + 1, end)
                flag_map[src] = cx.flag_id(qi, 2 * arc_pos + 1, 1 - end if flip else end)
    # bands: attach flags via s2, free flags via s1
    for c in range(diagram.crossing_count):
        cell = realized.band_cell(c)
        for side in (0, 2):
            for end in (0, 1):
                f = cx.flag_id(cell, side, end)
                p = cx.s2[f]
                if flag_map[p] < 0:
                    raise CertificateError(f"{label}: band attach ordering broken at crossing {c}")
                flag_map[f] = cx.s2[flag_map[p]]
        for side in (1, 3):
            for end in (0, 1):
                f = cx.flag_id(cell, side, end)
                g = cx.s1[f]  # adjacent attach-side flag within the band cell
                if flag_map[g] < 0:
                    raise CertificateError(f"{label}: band side ordering broken at crossing {c}")
                flag_map[f] = cx.s1[flag_map[g]]
    if any(v < 0 for v in flag_map):
        raise CertificateError(f"{label}: flag map incomplete")

    if kind == "auto":
        order = _permutation_order(flag_map)
        colors = cx.orientation_class
        if order == 2 and colors is not None:
            kind = "pi-rotation" if colors[flag_map[0]] == colors[0] else "reflection"
        else:
            kind = "rotation"
    order = 2
    if kind == "rotation":
        order = _permutation_order(flag_map)
    cert = SymmetryCertificate(
        kind=kind,
        label=label,
        flag_map=tuple(flag_map),
        order=order,
        dart_map=dm,
        reverses_orientation=rev,
        flips_thickening=flips,
        fixed_sides=_fixed_sides(realized, flag_map),
    )
    problem = certificate_problem(spec, cert)
    if problem:
        raise CertificateError(f"{label}: induced certificate invalid: {problem}")
    return cert


def _permutation_order(perm: Sequence[int]) -> int:
    order = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        order = _lcm(order, length)
    return order


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def certificate_problem(spec: SpanningSurfaceSpec, cert: SymmetryCertificate) -> str | None:
    """Why the certificate fails to verify, or None when it is valid."""
    cx = spec.realized.complex
    pm = cert.flag_map
    n = cx.flag_count
    if len(pm) != n or sorted(pm) != list(range(n)):
        return "flag map is not a permutation of the flag set"
    if all(pm[f] == f for f in range(n)):
        return "identity map cannot certify a symmetry (fixed locus would be everything)"
    for s in (cx.s0, cx.s1, cx.s2):
        for f in range(n):
            if pm[s[f]] != s[pm[f]]:
                return f"does not commute with flag adjacency at flag {f}"
    for f in range(n):
        if cx.is_boundary(f) != cx.is_boundary(pm[f]):
            return "does not preserve the link boundary"
    if cert.kind in ("reflection", "pi-rotation"):
        q = tuple(pm[pm[f]] for f in range(n))
        if any(q[f] != f for f in range(n)):
            return f"{cert.kind} must be an involution"
    elif cert.kind == "rotation":
        if _permutation_order(pm) != cert.order:
            return "declared order does not match the flag permutation"
    else:
        return f"unknown certificate kind {cert.kind!r}"
    colors = cx.orientation_class
    if colors is not None:
        behaviour = {colors[pm[f]] == colors[f] for f in range(n)}
        if len(behaviour) != 1:
            return "orientation behaviour is not uniform"
        preserves = behaviour.pop()
        if cert.kind == "reflection" and preserves:
            return "reflection must reverse orientation classes"
        if cert.kind in ("pi-rotation", "rotation") and not preserves:
            return "rotation must preserve orientation classes"
    if cert.dart_map is not None:
        sym = DiagramSymmetry(cert.dart_map, cert.reverses_orientation, cert.label)
        try:
            flips = sym.check(spec.diagram)
        except CertificateError as exc:
            return str(exc)
        if flips != cert.flips_thickening:
            return "recorded thickening flip does not match the dart map"
    return None


def verify_certificate(spec: SpanningSurfaceSpec, cert: SymmetryCertificate) -> bool:
    """True iff the certificate is a valid symmetry of the realized surface."""
    return certificate_problem(spec, cert) is None
