"""Layer-cake links: stacked woven polygons on a torus joined by vertical arms.

``layers`` woven 2m-gons sit at consecutive heights of the square torus;
corner j of layer t carries an arm to layer t+1 when (j+t) is even and to
layer t-1 otherwise, so arms alternate around every polygon.  Arms carry
``twists`` half-twist crossings each.  The spanning surface takes every arm
bigon on the torus plus one cap disk per layer (the polygon interior pushed
into a solid torus); cap placement alternates inner/outer for even twist
counts and stays on one side for odd ones.

The projection is recorded with one full meridian twist applied (each arc
through the identified horizontal sides also crosses the vertical pair), so
compressing curves of either solid torus meet the diagram in at least 2m
points; the twist extends over both solid tori of the sphere-cross-circle
splitting, so the link is unchanged.

Crossing slots: up-corner (arm ascending): 0 = east edge, 1 = north-east arm
strand, 2 = north-west arm strand, 3 = west edge.  Down-corner: 0 = east,
1 = west, 2 = south-west arm, 3 = south-east arm.  Twist crossings use the
corridor convention shared with the other families.
"""

from __future__ import annotations

from ..diagram import SurfaceLinkDiagram
from ..gluing import build_gluing_diagram
from ..spanning import CapPiece, INNER, OUTER, SpanningSurfaceSpec, build_spanning_surface
from ..symmetry import DiagramSymmetry, SymmetryCertificate, induce_certificate
from .common import DiagramBuilder, FamilyBundle, FamilyError

_TWIST_ROT = ((0, 2), (2, 0), (1, 3), (3, 1))  # corridor flipped, orientation kept
_TWIST_MIRROR_FLIP = ((0, 3), (3, 0), (1, 2), (2, 1))  # flipped + reversing


def _corner(t: int, j: int) -> str:
    return f"C{t}.{j}"


def _twist(t: int, j: int, i: int) -> str:
    return f"T{t}.{j}.{i}"


def is_up(t: int, j: int) -> bool:
    return (t + j) % 2 == 0


def build_diagram(
    layers: int, half_width: int, twists: int, sheared: bool = True
) -> SurfaceLinkDiagram:
    """Diagram with ``layers`` woven 2*half_width-gons and twisted arms."""
    if layers < 2 or layers % 2 != 0:
        raise FamilyError("need an even number of layers >= 2")
    if half_width < 2:
        raise FamilyError("layer polygons need at least 4 sides (half_width >= 2)")
    if twists < 0:
        raise FamilyError("twists must be >= 0")
    L, m, n = layers, half_width, twists
    w = 2 * m
    surface = build_gluing_diagram(4)
    b = DiagramBuilder(surface)
    for t in range(L):
        for j in range(w):
            b.crossing(_corner(t, j))
    for t in range(L):
        for j in range(w):
            if is_up(t, j):
                for i in range(1, n + 1):
                    b.crossing(_twist(t, j, i))
    # horizontal polygon edges; the wrap edge crosses the vertical side pair
    for t in range(L):
        for j in range(w):
            west_slot = 3 if is_up(t, (j + 1) % w) else 1
            word = [(1, 1)] if j == w - 1 else []
            b.join((_corner(t, j), 0), (_corner(t, (j + 1) % w), west_slot), word)
    # arms with twists; the top-gap arms wrap through the horizontal sides
    for t in range(L):
        for j in range(w):
            if not is_up(t, j):
                continue
            wrap = t == L - 1
            word = [(2, 1), (1, 1)] if (wrap and sheared) else ([(2, 1)] if wrap else [])
            side_at = n // 2
            left, right = (_corner(t, j), 2), (_corner(t, j), 1)
            upper = _corner((t + 1) % L, j)
            nodes = [_twist(t, j, i) for i in range(1, n + 1)]
            for k, node in enumerate(nodes):
                w_seg = word if k == side_at and wrap else []
                b.join(left, (node, 0), w_seg)
                b.join(right, (node, 1), w_seg)
                left, right = (node, 3), (node, 2)
            w_seg = word if len(nodes) == side_at else []
            if not nodes:
                w_seg = word
            # terminus faces back down at the corridor: its left is our right
            b.join(left, (upper, 2), w_seg)
            b.join(right, (upper, 3), w_seg)
    return b.build()


def _corner_index(L: int, w: int, t: int, j: int) -> int:
    return t * w + j


def _twist_base(L: int, w: int) -> int:
    return L * w


def _twist_index(L: int, w: int, n: int, t: int, j: int, i: int) -> int:
    # twists are registered layer by layer, up-corners in j order
    base = _twist_base(L, w)
    count = 0
    for tt in range(L):
        for jj in range(w):
            if not is_up(tt, jj):
                continue
            if tt == t and jj == j:
                return base + (count * n) + (i - 1)
            count += 1
    raise FamilyError("no twist at this position")


def cap_corners(diagram: SurfaceLinkDiagram, L: int, w: int, t: int) -> tuple[int, ...]:
    """Corner leads of layer t's polygon-interior cap circuit."""
    leads = []
    for j in range(w):
        c = _corner_index(L, w, t, j)
        leads.append(4 * c + (3 if is_up(t, j) else 0))
    return tuple(leads)


def arm_bigon_faces(diagram: SurfaceLinkDiagram, L: int, w: int, n: int) -> list[int]:
    out = set()
    for t in range(L):
        for j in range(w):
            if not is_up(t, j):
                continue
            c = _corner_index(L, w, t, j)
            out.add(diagram.face_of_dart[4 * c + 2])
            for i in range(1, n + 1):
                ti = _twist_index(L, w, n, t, j, i)
                out.add(diagram.face_of_dart[4 * ti + 3])
    return sorted(out)


def spanning_surface(diagram: SurfaceLinkDiagram, L: int, w: int, n: int) -> SpanningSurfaceSpec:
    faces = arm_bigon_faces(diagram, L, w, n)
    caps = []
    for t in range(L):
        if n % 2 == 0:
            tag = INNER if t % 2 == 0 else OUTER
        else:
            tag = INNER
        caps.append(CapPiece(cap_corners(diagram, L, w, t), tag))
    return build_spanning_surface(diagram, faces, caps=caps)


def _central_slot_map(src_up: bool, dst_up: bool, mirror_theta: bool, mirror_z: bool):
    """Slot map for a layer-corner crossing under an isometry that may flip
    each torus direction; derived from the compass layout of the slots."""
    up_compass = {0: "E", 1: "NE", 2: "NW", 3: "W"}
    down_compass = {0: "E", 1: "W", 2: "SW", 3: "SE"}
    flip_h = {"E": "W", "W": "E", "NE": "NW", "NW": "NE", "SE": "SW", "SW": "SE"}

    def transform(c: str) -> str:
        if mirror_theta:
            c = flip_h[c]
        if mirror_z:
            c = c.translate(str.maketrans("NS", "SN"))
        return c

    src = up_compass if src_up else down_compass
    dst_inv = {v: k for k, v in (up_compass if dst_up else down_compass).items()}
    out = []
    for s, c in src.items():
        out.append((s, dst_inv[transform(c)]))
    return tuple(out)


def _assemble_dart_map(
    L: int,
    w: int,
    n: int,
    corner_map,
    mirror_theta: bool,
    mirror_z: bool,
) -> tuple[int, ...]:
    """Dart map induced by (t, j) -> corner_map(t, j) with the given flips.

    Arms follow their lower corners; a z-flip reverses every twist chain.
    """
    total = L * w + (L * w // 2) * n
    dart_map = [0] * (4 * total)
    for t in range(L):
        for j in range(w):
            tt, jj = corner_map(t, j)
            src_up = is_up(t, j)
            dst_up = is_up(tt, jj)
            c, cc = _corner_index(L, w, t, j), _corner_index(L, w, tt, jj)
            for s, s2 in _central_slot_map(src_up, dst_up, mirror_theta, mirror_z):
                dart_map[4 * c + s] = 4 * cc + s2
            if src_up:
                # the image arm hangs from the image gap's up-corner
                at, aj = (tt, jj) if dst_up else ((tt - 1) % L, jj)
                if not is_up(at, aj):
                    raise FamilyError("arm image inconsistency")
                mapping = {
                    (False, False): ((0, 0), (1, 1), (2, 2), (3, 3)),
                    (True, True): _TWIST_ROT,
                    (False, True): _TWIST_MIRROR_FLIP,
                    (True, False): ((0, 1), (1, 0), (2, 3), (3, 2)),
                }[(mirror_theta, mirror_z)]
                for i in range(1, n + 1):
                    ci = _twist_index(L, w, n, t, j, i)
                    ii = n + 1 - i if mirror_z else i
                    cci = _twist_index(L, w, n, at, aj, ii)
                    for s, s2 in mapping:
                        dart_map[4 * ci + s] = 4 * cci + s2
    return tuple(dart_map)


def trio_certificates(spec: SpanningSurfaceSpec, L: int, w: int, n: int):
    """The two polygon-diameter rotations and the gap mirror for 2 layers."""
    if L != 2:
        raise FamilyError("the mirror trio is defined on the two-layer cake")
    certs = []
    # red / blue: (theta -> c1 - theta, z -> 1/2 - z): both directions flip,
    # so the torus orientation is preserved; the surface sees a mirror
    for label, c1 in (("red", 1), ("blue", 3)):
        dart_map = _assemble_dart_map(
            L, w, n, lambda t, j, c1=c1: ((-t) % L, (c1 - j) % w), True, True
        )
        sym = DiagramSymmetry(dart_map, reverses_orientation=False, label=label)
        certs.append(induce_certificate(spec.realized, sym, kind="auto", label=label))
    # green: (theta, z) -> (theta, 1 - z): layer t -> L-1-t, z flip only
    dart_map = _assemble_dart_map(
        L, w, n, lambda t, j: ((L - 1 - t) % L, j), False, True
    )
    sym = DiagramSymmetry(dart_map, reverses_orientation=True, label="green")
    certs.append(induce_certificate(spec.realized, sym, kind="auto", label="green"))
    return certs


def halving_certificate(spec: SpanningSurfaceSpec, L: int, w: int, n: int) -> SymmetryCertificate:
    """Free involution shifting the cake half a turn along the layer axis.

    Only cakes with L divisible by 4 carry one: shifting by an odd layer
    count must also rotate the polygons to keep arm parity, and the combined
    map is an order-4 rotation rather than an involution (its quotient would
    not be a layer cake either).
    """
    if L % 4 != 0:
        raise FamilyError("halving involutions need a layer count divisible by 4")
    half = L // 2

    def cmap(t, j):
        return (t + half) % L, j

    dart_map = _assemble_dart_map(L, w, n, cmap, False, False)
    sym = DiagramSymmetry(dart_map, reverses_orientation=False, label="layer-halving")
    return induce_certificate(spec.realized, sym, kind="auto", label="layer-halving")


def halve(bundle: FamilyBundle) -> FamilyBundle:
    """Quotient a 2k-pair cake by its layer-halving certificate.

    The certificate is re-verified, the free flag quotient is computed, and
    the result is checked isomorphic (as a labeled flag system) to the
    generated k-pair bundle, which is returned.
    """
    from .. import orbifold as orb
    from ..symmetry import certificate_problem

    p = bundle.parameters
    pairs, m, n = p["layers"], p["polygon"], p["twists"]
    if pairs % 2 != 0:
        raise FamilyError("halving needs an even number of layer pairs")
    cert = next(c for c in bundle.symmetries if c.label == "layer-halving")
    problem = certificate_problem(bundle.spanning_surface, cert)
    if problem:
        raise FamilyError(f"halving certificate invalid: {problem}")
    cx = bundle.spanning_surface.realized.complex
    group = orb.close_group(cx.flag_count, [cert.flag_map])
    quotient_system = orb.free_quotient(cx, group)
    small = generate(pairs // 2, m, n, p.get("sheared", True))
    small_cx = small.spanning_surface.realized.complex
    if orb.canonical_flag_encoding(*quotient_system) != orb.canonical_flag_encoding(
        small_cx.s0, small_cx.s1, small_cx.s2, small_cx.boundary_label
    ):
        raise FamilyError("halving quotient does not match the half-size cake")
    return small


def generate(pairs: int, half_width: int, twists: int, sheared: bool = True) -> FamilyBundle:
    """Layer cake with ``2*pairs`` layers of 2*half_width-gons."""
    if pairs < 1:
        raise FamilyError("need at least one layer pair")
    L = 2 * pairs
    w = 2 * half_width
    diagram = build_diagram(L, half_width, twists, sheared)
    spec = spanning_surface(diagram, L, w, twists)
    bundle = FamilyBundle(
        family="layer-cake",
        parameters={
            "layers": pairs,
            "polygon": half_width,
            "twists": twists,
            "sheared": sheared,
            "total_layers": L,
        },
        diagram=diagram,
        spanning_surface=spec,
        ambient="sphere-cross-circle",
        expected={
            "components": 2 * half_width if L == 2 else None,
            "representativity_classes": [(1, 0), (0, 1)],
            "representativity_at_least": 2 * half_width,
        },
    )
    syms = []
    if L == 2:
        syms.extend(trio_certificates(spec, L, w, twists))
    elif L % 4 == 0:
        syms.append(halving_certificate(spec, L, w, twists))
    else:
        bundle.expected["halving"] = "unavailable: layer count not divisible by 4"
    bundle.symmetries = syms
    return bundle
