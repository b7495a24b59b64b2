import pytest

from surflink.families import hexagon_torus, layer_cake, ribbon, square_torus
from surflink.spanning import (
    CapPiece,
    InvalidSelectionError,
    TemplateSurface,
    build_spanning_surface,
)


def orientability_oracle(cx):
    """Brute-force 2-coloring of the flag graph, written directly."""
    colors = {}
    for start in range(cx.flag_count):
        if start in colors:
            continue
        colors[start] = 0
        queue = [start]
        while queue:
            f = queue.pop()
            for s in (cx.s0, cx.s1, cx.s2):
                g = s[f]
                if g == f:
                    continue
                if g not in colors:
                    colors[g] = 1 - colors[f]
                    queue.append(g)
                elif colors[g] == colors[f]:
                    return False
    return True


def boundary_oracle(cx):
    """Independent boundary-circle count via union-find over boundary flags."""
    boundary = [f for f in range(cx.flag_count) if cx.s2[f] == f]
    parent = {f: f for f in boundary}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for f in boundary:
        union(f, cx.s0[f])
        g = cx.s1[f]
        while cx.s2[g] != g:
            g = cx.s1[cx.s2[g]]
        union(f, g)
    return len({find(f) for f in boundary})


def test_square_knot_surface():
    d = square_torus.build_diagram(1, 0)
    spec = square_torus.spanning_surface(d, 1, 0)
    ch = spec.characteristics()
    assert (ch.euler, ch.boundary_components, ch.orientable, ch.genus) == (-1, 1, True, 1)
    assert spec.band_crossings == tuple(range(4))


def test_underselection_names_the_crossing():
    d = square_torus.build_diagram(1, 0)
    central = square_torus.central_face(d)
    with pytest.raises(InvalidSelectionError, match="crossing"):
        build_spanning_surface(d, [central])


def test_hexagon_surface_valid():
    d = hexagon_torus.build_diagram(1, 0)
    spec = hexagon_torus.spanning_surface(d, 1, 0)
    assert spec.characteristics().euler == -3


def test_twisted_surfaces_keep_euler():
    for n in (1, 2, 3):
        d = square_torus.build_diagram(1, n)
        assert square_torus.spanning_surface(d, 1, n).characteristics().euler == -1


def test_layer_cake_surface_is_punctured_sphere():
    d = layer_cake.build_diagram(2, 3, 0)
    spec = layer_cake.spanning_surface(d, 2, 6, 0)
    ch = spec.characteristics()
    assert (ch.euler, ch.boundary_components, ch.orientable, ch.genus) == (-4, 6, True, 0)


def test_boundary_equals_link_components():
    for d, spec in (
        (lambda: layer_cake.build_diagram(2, 2, 0), lambda dd: layer_cake.spanning_surface(dd, 2, 4, 0)),
        (lambda: square_torus.build_diagram(2, 1), lambda dd: square_torus.spanning_surface(dd, 2, 1)),
    ):
        dd = d()
        ch = spec(dd).characteristics()
        assert ch.boundary_components == len(dd.components)


def test_chi_is_pieces_minus_bands():
    for args in ((1, 0), (1, 2), (2, 1)):
        d = square_torus.build_diagram(*args)
        spec = square_torus.spanning_surface(d, *args)
        assert spec.characteristics().euler == len(spec.pieces) - d.crossing_count


def test_orientability_matches_oracle_on_small_diagrams():
    specs = [
        square_torus.spanning_surface(square_torus.build_diagram(1, 0), 1, 0),
        square_torus.spanning_surface(square_torus.build_diagram(1, 2), 1, 2),
        hexagon_torus.spanning_surface(hexagon_torus.build_diagram(1, 0), 1, 0),
        layer_cake.spanning_surface(layer_cake.build_diagram(2, 2, 0), 2, 4, 0),
        layer_cake.spanning_surface(layer_cake.build_diagram(2, 3, 0), 2, 6, 0),
    ]
    for spec in specs:
        assert spec.diagram.crossing_count <= 12
        cx = spec.realized.complex
        assert cx.orientable == orientability_oracle(cx)
        assert len(cx.boundary_circles) == boundary_oracle(cx)


def test_template_pants_and_twisted_pants():
    pants = TemplateSurface(2, (((0, 0), (1, 0), False), ((0, 1), (1, 2), False), ((0, 2), (1, 1), False)))
    ch = pants.characteristics()
    assert (ch.euler, ch.boundary_components, ch.orientable, ch.genus) == (-1, 3, True, 0)
    twisted = TemplateSurface(2, (((0, 0), (1, 0), False), ((0, 1), (1, 2), False), ((0, 2), (1, 1), True)))
    ch = twisted.characteristics()
    assert ch.euler == -1 and not ch.orientable
    cx = twisted.complex
    assert orientability_oracle(cx) is False


def test_ribbon_template_surface():
    ch = ribbon.spanning_surface().characteristics()
    assert (ch.euler, ch.boundary_components, ch.orientable, ch.genus) == (-1, 3, True, 0)


def test_cap_circuit_rejects_disconnected_corners():
    d = layer_cake.build_diagram(2, 2, 0)
    good = layer_cake.cap_corners(d, 2, 4, 0)
    bad = good[:-1] + (good[-1] // 4 * 4 + (good[-1] + 1) % 4,)
    with pytest.raises(InvalidSelectionError):
        build_spanning_surface(d, layer_cake.arm_bigon_faces(d, 2, 4, 0), caps=[
            CapPiece(bad, "inner"),
            CapPiece(layer_cake.cap_corners(d, 2, 4, 1), "outer"),
        ])


def test_inner_outer_band_rejected():
    from surflink.spanning import INNER, OUTER

    d = layer_cake.build_diagram(2, 2, 0)
    caps = [
        CapPiece(layer_cake.cap_corners(d, 2, 4, 0), INNER),
        CapPiece(layer_cake.cap_corners(d, 2, 4, 1), INNER),
    ]
    # both caps inner is geometrically fine (odd-twist style): accepted
    build_spanning_surface(d, layer_cake.arm_bigon_faces(d, 2, 4, 0), caps=caps)
    # but a face piece placed inner against an outer cap across a band fails
    faces = layer_cake.arm_bigon_faces(d, 2, 4, 0)
    tags = {faces[0]: INNER}
    caps = [
        CapPiece(layer_cake.cap_corners(d, 2, 4, 0), OUTER),
        CapPiece(layer_cake.cap_corners(d, 2, 4, 1), OUTER),
    ]
    with pytest.raises(InvalidSelectionError, match="inner to outer"):
        build_spanning_surface(d, faces, side_tags=tags, caps=caps)
