"""Knots with a woven central 4g-gon on the genus-g translation surface.

The central polygon has one crossing per polygon side; the two strands at
crossing j extend outward through side j, and opposite crossings' extensions
join through the identified sides into 2g closed arms.  The twist parameter
counts half-twists per pre-identification arm (the 4g outward stubs), so a
closed arm carries 2n twist crossings split evenly across the identified
side and remains a single-strand pass-through for every n: the family member
is a knot for all parameters.  Counting the straddling middle bigon with
each stub, a stub sees n+1 bigons.

Crossing slots (counterclockwise): central crossing j has 0 = edge toward
crossing j+1, 1 = edge toward j-1, 2 = outward-right arm strand, 3 =
outward-left.  Twist crossings use corridor coordinates facing away from the
lower-index end: 0 = left arrival, 1 = right arrival, 2 = right departure,
3 = left departure.
"""

from __future__ import annotations

from ..diagram import SurfaceLinkDiagram
from ..gluing import build_gluing_diagram
from ..spanning import SpanningSurfaceSpec, build_spanning_surface
from ..symmetry import DiagramSymmetry, induce_certificate
from .common import DiagramBuilder, FamilyBundle, FamilyError

# orientation-reversing slot maps (conjugate the rotation to its inverse):
# direction-preserving image of a corridor crossing swaps left/right,
# a direction-reversing image swaps arrival/departure keeping east/west
_MIRROR_KEEP = ((0, 1), (1, 0), (2, 3), (3, 2))
_MIRROR_FLIP = ((0, 3), (3, 0), (1, 2), (2, 1))


def _central(j: int) -> str:
    return f"X{j}"


def _twist(arm: int, i: int) -> str:
    return f"T{arm}.{i}"


def build_diagram(genus: int, twists: int) -> SurfaceLinkDiagram:
    if genus < 1:
        raise FamilyError("genus must be >= 1")
    if twists < 0:
        raise FamilyError("twists must be >= 0")
    g, n = genus, twists
    surface = build_gluing_diagram(4 * g)
    b = DiagramBuilder(surface)
    for j in range(4 * g):
        b.crossing(_central(j))
    for arm in range(2 * g):
        for i in range(1, 2 * n + 1):
            b.crossing(_twist(arm, i))
    for j in range(4 * g):
        b.join((_central(j), 0), (_central((j + 1) % (4 * g)), 1))
    for arm in range(2 * g):
        # chain nodes from X_arm to X_{arm+2g}; the terminus frame faces back
        # at the corridor, so its left is the corridor's right
        nodes = [_central(arm)] + [_twist(arm, i) for i in range(1, 2 * n + 1)]
        nodes.append(_central(arm + 2 * g))
        side_at = n
        for k in range(len(nodes) - 1):
            left_out = (nodes[k], 3)
            right_out = (nodes[k], 2)
            word = [(arm, 1)] if k == side_at else []
            if k + 1 == len(nodes) - 1:
                b.join(left_out, (nodes[k + 1], 2), word)
                b.join(right_out, (nodes[k + 1], 3), word)
            else:
                b.join(left_out, (nodes[k + 1], 0), word)
                b.join(right_out, (nodes[k + 1], 1), word)
    return b.build()


def _twist_index(genus: int, twists: int, arm: int, i: int) -> int:
    return 4 * genus + arm * 2 * twists + (i - 1)


def central_face(diagram: SurfaceLinkDiagram) -> int:
    """The face traced by the central polygon (owns the corner at slot 1 of X0)."""
    return diagram.face_of_dart[1]


def arm_faces(diagram: SurfaceLinkDiagram, genus: int, twists: int) -> list[int]:
    """Faces of all arm corridor bigons (n+1 per closed arm)."""
    g, n = genus, twists
    out = set()
    for arm in range(2 * g):
        chain = [arm] + [_twist_index(g, n, arm, i) for i in range(1, 2 * n + 1)]
        for c in chain:
            # corridor bigon past node c owns the corner between slots 2 and 3
            out.add(diagram.face_of_dart[4 * c + 3])
    return sorted(out)


def spanning_surface(diagram: SurfaceLinkDiagram, genus: int, twists: int) -> SpanningSurfaceSpec:
    faces = [central_face(diagram)] + arm_faces(diagram, genus, twists)
    return build_spanning_surface(diagram, faces)


def _mirror_dart_map(genus: int, twists: int, offset: int) -> tuple[int, ...]:
    """Reflection j -> offset - j on the central crossings.

    Even offsets put the axis through two opposite crossings, odd offsets
    through two opposite central edge midpoints; the index arithmetic is the
    same either way.
    """
    g, n = genus, twists
    total = 4 * g + 4 * g * n
    dart_map = [0] * (4 * total)
    for j in range(4 * g):
        jj = (offset - j) % (4 * g)
        for s, s2 in _MIRROR_KEEP:
            dart_map[4 * j + s] = 4 * jj + s2
    for arm in range(2 * g):
        raw = (offset - arm) % (4 * g)
        flipped = raw >= 2 * g
        image_arm = raw % (2 * g)
        for i in range(1, 2 * n + 1):
            c = _twist_index(g, n, arm, i)
            ii = 2 * n + 1 - i if flipped else i
            cc = _twist_index(g, n, image_arm, ii)
            mapping = _MIRROR_FLIP if flipped else _MIRROR_KEEP
            for s, s2 in mapping:
                dart_map[4 * c + s] = 4 * cc + s2
    return tuple(dart_map)


def certificates(spec: SpanningSurfaceSpec, genus: int, twists: int):
    """The three reflection certificates used by the orbifold quotient."""
    out = []
    for label, offset in (("L1", 0), ("L2", 1), ("L3", 2)):
        dart_map = _mirror_dart_map(genus, twists, offset)
        sym = DiagramSymmetry(dart_map, reverses_orientation=True, label=label)
        out.append(induce_certificate(spec.realized, sym, kind="reflection", label=label))
    return out


def generate(genus: int, twists: int) -> FamilyBundle:
    diagram = build_diagram(genus, twists)
    spec = spanning_surface(diagram, genus, twists)
    bundle = FamilyBundle(
        family="square-torus",
        parameters={"genus": genus, "twists": twists},
        diagram=diagram,
        spanning_surface=spec,
        ambient="thickened-surface",
        expected={
            "components": 1,
            "reduced_corners": (4 * genus, 2, "inf"),
        },
    )
    bundle.symmetries = certificates(spec, genus, twists)
    return bundle
