"""Layer-cake links on the Heegaard torus of a lens space.

For coprime (m, n) the link stacks 2m(1+alpha) layer polygons along the
longitude of the second solid torus; each polygon has 2n(1+beta) sides
(octagons replace the base polygon when n < 3), and every arm carries one
half-twist plus gamma full twists, so arms keep a central crossing.  All
polygon-interior caps sit in the second solid torus (tag outer).

Certificates: the free rotation R (one meridian step of 1/n with one
longitude step of 1/m, acting as a two-layer two-corner shift), the two
polygon-diameter rotations through adjacent edge midpoints, and the
arm-piercing rotation through the central arm crossings.

Queried compressing classes are (1, 0) for the diagram-side solid torus and
(n, m) for the other side, in (contour-direction, layer-direction) winding
coordinates.
"""

from __future__ import annotations

from math import gcd

from ..diagram import SurfaceLinkDiagram
from ..spanning import CapPiece, OUTER, SpanningSurfaceSpec, build_spanning_surface
from ..symmetry import DiagramSymmetry, induce_certificate
from . import layer_cake as lc
from .common import FamilyBundle, FamilyError


def polygon_sides(n: int, beta: int) -> int:
    base = 2 * n if n >= 3 else 8
    return base + 2 * n * beta


def build_diagram(m: int, n: int, alpha: int, beta: int, gamma: int) -> SurfaceLinkDiagram:
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise FamilyError("lens parameters (m, n) must be coprime positive integers")
    if min(alpha, beta, gamma) < 0:
        raise FamilyError("extension parameters must be nonnegative")
    layers = 2 * m * (1 + alpha)
    sides = polygon_sides(n, beta)
    twists = 1 + 2 * gamma
    return lc.build_diagram(layers, sides // 2, twists, sheared=False)


def spanning_surface(diagram, layers: int, width: int, twists: int) -> SpanningSurfaceSpec:
    faces = lc.arm_bigon_faces(diagram, layers, width, twists)
    caps = [CapPiece(lc.cap_corners(diagram, layers, width, t), OUTER) for t in range(layers)]
    return build_spanning_surface(diagram, faces, caps=caps)


def certificates(spec, layers: int, width: int, twists: int, m: int, n: int, alpha: int):
    certs = []
    tshift = 2 * (1 + alpha)
    jshift = width // n
    if jshift * n != width or (tshift + jshift) % 2 != 0:
        raise FamilyError("rotation symmetry incompatible with the polygon width")

    def rot_map(t, j):
        return (t + tshift) % layers, (j + jshift) % width

    dart_map = lc._assemble_dart_map(layers, width, twists, rot_map, False, False)
    sym = DiagramSymmetry(dart_map, reverses_orientation=False, label="R")
    certs.append(induce_certificate(spec.realized, sym, kind="auto", label="R"))
    for label, c1 in (("edge-rot-1", 1), ("edge-rot-2", 3)):
        dart_map = lc._assemble_dart_map(
            layers, width, twists, lambda t, j, c1=c1: ((-t) % layers, (c1 - j) % width), True, True
        )
        sym = DiagramSymmetry(dart_map, reverses_orientation=False, label=label)
        certs.append(induce_certificate(spec.realized, sym, kind="auto", label=label))
    dart_map = lc._assemble_dart_map(
        layers, width, twists, lambda t, j: ((-1 - t) % layers, (-j) % width), True, True
    )
    sym = DiagramSymmetry(dart_map, reverses_orientation=False, label="arm-piercing")
    certs.append(induce_certificate(spec.realized, sym, kind="auto", label="arm-piercing"))
    return certs


def generate(lens: tuple[int, int], alpha: int = 0, beta: int = 0, gamma: int = 0) -> FamilyBundle:
    m, n = lens
    diagram = build_diagram(m, n, alpha, beta, gamma)
    layers = 2 * m * (1 + alpha)
    width = polygon_sides(n, beta)
    twists = 1 + 2 * gamma
    spec = spanning_surface(diagram, layers, width, twists)
    bundle = FamilyBundle(
        family="lens-layer-cake",
        parameters={"lens": [m, n], "alpha": alpha, "beta": beta, "gamma": gamma},
        diagram=diagram,
        spanning_surface=spec,
        ambient=f"lens-space({m},{n})",
        expected={
            "representativity_classes": [(1, 0), (n, m)],
            "representativity_at_least": min(width, 6) if n >= 3 else width,
            "layers": layers,
            "polygon_sides": width,
        },
    )
    bundle.symmetries = certificates(spec, layers, width, twists, m, n, alpha)
    return bundle
