"""Knots with a woven central (4g+2)-gon on the genus-g translation surface.

One crossing sits at each corner of the central polygon and its two strands
run outward past the corresponding polygon vertex, one through each flanking
side.  The strands of the 4g+2 stubs meet in the two vertex regions (the
(2g+1)-gon pieces of the spanning surface).  Full twists only: the twist
parameter adds 2n crossings to each stub, so components are preserved.

Central crossing slots (counterclockwise): 0 = edge toward crossing j+1,
1 = outward-left strand (through side j), 2 = outward-right (through side
j-1), 3 = edge toward crossing j-1.  Twist crossings use the corridor
convention of the square family.
"""

from __future__ import annotations

from ..diagram import SurfaceLinkDiagram
from ..gluing import build_gluing_diagram
from ..spanning import SpanningSurfaceSpec, build_spanning_surface
from ..symmetry import DiagramSymmetry, induce_certificate
from .common import DiagramBuilder, FamilyBundle, FamilyError

_CENTRAL_MIRROR = ((0, 3), (3, 0), (1, 2), (2, 1))
_TWIST_MIRROR = ((0, 1), (1, 0), (2, 3), (3, 2))


def _central(j: int) -> str:
    return f"X{j}"


def _twist(stub: int, i: int) -> str:
    return f"T{stub}.{i}"


def build_diagram(genus: int, twists: int, half_twists_per_stub: int | None = None) -> SurfaceLinkDiagram:
    """Half twists per stub default to 2*twists (full twists only); the
    override exists to exhibit why odd counts produce links, not knots."""
    if genus < 1:
        raise FamilyError("genus must be >= 1")
    if twists < 0:
        raise FamilyError("twists must be >= 0")
    g, n = genus, twists
    per_stub = 2 * n if half_twists_per_stub is None else half_twists_per_stub
    m = 4 * g + 2
    half = 2 * g + 1
    surface = build_gluing_diagram(m)
    b = DiagramBuilder(surface)
    for j in range(m):
        b.crossing(_central(j))
    for stub in range(m):
        for i in range(1, per_stub + 1):
            b.crossing(_twist(stub, i))
    for j in range(m):
        b.join((_central(j), 0), (_central((j + 1) % m), 3))
    # stub chains: in corridor coordinates facing outward the strand through
    # side j-1 (slot 2) is on the left
    ends = {}
    for stub in range(m):
        left, right = (_central(stub), 2), (_central(stub), 1)
        for i in range(1, per_stub + 1):
            b.join(left, (_twist(stub, i), 0))
            b.join(right, (_twist(stub, i), 1))
            left, right = (_twist(stub, i), 3), (_twist(stub, i), 2)
        ends[stub] = (left, right)
    for j in range(m):
        # the side-j strand of stub j meets the side-(j-1) strand of the stub
        # whose flanking vertex identifies across that side
        _, right = ends[j]
        left, _ = ends[(j + half + 1) % m]
        b.join(right, left, [(j, 1)])
    return b.build(alternating=per_stub % 2 == 0)


def _twist_index(genus: int, twists: int, stub: int, i: int) -> int:
    m = 4 * genus + 2
    return m + stub * 2 * twists + (i - 1)


def central_face(diagram: SurfaceLinkDiagram) -> int:
    return diagram.face_of_dart[0]


def vertex_faces(diagram: SurfaceLinkDiagram, genus: int, twists: int) -> list[int]:
    """The two (2g+1)-gon regions at the identified polygon vertices."""
    g, n = genus, twists
    out = set()
    for stub in (0, 1):
        if n == 0:
            dart = 4 * stub + 2
        else:
            dart = 4 * _twist_index(g, n, stub, 2 * n) + 3
        out.add(diagram.face_of_dart[dart])
    return sorted(out)


def stub_faces(diagram: SurfaceLinkDiagram, genus: int, twists: int) -> list[int]:
    g, n = genus, twists
    m = 4 * g + 2
    out = set()
    for stub in range(m):
        out.add(diagram.face_of_dart[4 * stub + 2])
        for i in range(1, 2 * n):
            out.add(diagram.face_of_dart[4 * _twist_index(g, n, stub, i) + 3])
    return sorted(out)


def spanning_surface(diagram: SurfaceLinkDiagram, genus: int, twists: int) -> SpanningSurfaceSpec:
    faces = [central_face(diagram)] + vertex_faces(diagram, genus, twists)
    if twists:
        faces += stub_faces(diagram, genus, twists)
    return build_spanning_surface(diagram, sorted(set(faces)))


def _mirror_dart_map(genus: int, twists: int, offset: int) -> tuple[int, ...]:
    g, n = genus, twists
    m = 4 * g + 2
    total = m * (1 + 2 * n)
    dart_map = [0] * (4 * total)
    for j in range(m):
        jj = (offset - j) % m
        for s, s2 in _CENTRAL_MIRROR:
            dart_map[4 * j + s] = 4 * jj + s2
    for stub in range(m):
        image = (offset - stub) % m
        for i in range(1, 2 * n + 1):
            c = _twist_index(g, n, stub, i)
            cc = _twist_index(g, n, image, i)
            for s, s2 in _TWIST_MIRROR:
                dart_map[4 * c + s] = 4 * cc + s2
    return tuple(dart_map)


def certificates(spec: SpanningSurfaceSpec, genus: int, twists: int):
    out = []
    for label, offset in (("L1", 0), ("L2", 1), ("L3", 2)):
        sym = DiagramSymmetry(
            _mirror_dart_map(genus, twists, offset), reverses_orientation=True, label=label
        )
        out.append(induce_certificate(spec.realized, sym, kind="reflection", label=label))
    return out


def generate(genus: int, twists: int) -> FamilyBundle:
    diagram = build_diagram(genus, twists)
    spec = spanning_surface(diagram, genus, twists)
    bundle = FamilyBundle(
        family="hexagon-torus",
        parameters={"genus": genus, "twists": twists},
        diagram=diagram,
        spanning_surface=spec,
        ambient="thickened-surface",
        expected={
            "components": 1,
            "reduced_corners": (4 * genus + 2, 2 * genus + 1, "inf"),
        },
    )
    bundle.symmetries = certificates(spec, genus, twists)
    return bundle
