import pytest
from hypothesis import given, settings, strategies as st

from surflink.diagram import DiagramError, SurfaceLinkDiagram
from surflink.families import hexagon_torus, layer_cake, square_torus
from surflink.gluing import build_gluing_diagram, square_torus as torus


def face_trace_oracle(alpha):
    """Independent face count: orbits of d -> sigma(alpha(d)) with explicit loops."""
    m = len(alpha)
    seen = [False] * m
    faces = 0
    for start in range(m):
        if seen[start]:
            continue
        faces += 1
        d = start
        while not seen[d]:
            seen[d] = True
            e = alpha[d]
            d = 4 * (e // 4) + (e + 1) % 4
    return faces


def test_square_knot_region_census():
    d = square_torus.build_diagram(1, 0)
    assert d.face_sizes == (2, 2, 4, 8)


def test_hexagon_knot_region_census():
    d = hexagon_torus.build_diagram(1, 0)
    assert d.face_sizes == (3, 3, 4, 4, 4, 6)


def test_face_partition_covers_darts():
    for d in (square_torus.build_diagram(1, 2), hexagon_torus.build_diagram(2, 1)):
        total = sum(f.size for f in d.faces)
        assert total == d.dart_count


def test_euler_characteristic_matches_oracle():
    for build in (
        lambda: square_torus.build_diagram(1, 0),
        lambda: square_torus.build_diagram(1, 3),
        lambda: hexagon_torus.build_diagram(1, 0),
        lambda: layer_cake.build_diagram(2, 3, 0),
    ):
        d = build()
        n = d.crossing_count
        assert d.euler_characteristic == n - 2 * n + face_trace_oracle(d.alpha)


def test_square_family_euler_zero_for_small_twists():
    for n in range(0, 7):
        d = square_torus.build_diagram(1, n)
        assert d.euler_characteristic == 0


def test_cellular_on_the_right_surface_only():
    k = square_torus.build_diagram(1, 0)
    assert k.is_cellular()
    on_genus2 = SurfaceLinkDiagram(
        build_gluing_diagram(8), k.alpha, k.over, {}
    )
    assert not on_genus2.is_cellular()
    assert on_genus2.euler_characteristic == 0  # map unchanged, surface bigger


def test_component_counts():
    assert len(square_torus.build_diagram(1, 0).components) == 1
    assert len(layer_cake.build_diagram(2, 3, 0).components) == 6


def test_half_twisted_hexagon_is_a_link():
    d = hexagon_torus.build_diagram(1, 0, half_twists_per_stub=1)
    assert len(d.components) > 1


def test_alternating_and_single_defect():
    d = square_torus.build_diagram(1, 0)
    assert d.is_alternating()
    flipped = SurfaceLinkDiagram(
        d.surface, d.alpha, (1 - d.over[0],) + d.over[1:], dict(d.arc_words)
    )
    assert not flipped.is_alternating()


def test_layer_cake_alternating():
    assert layer_cake.build_diagram(2, 3, 0).is_alternating()


def test_zero_crossings_rejected():
    with pytest.raises(DiagramError):
        SurfaceLinkDiagram(torus(), (), (), {})


def test_fixed_point_involution_rejected():
    with pytest.raises(DiagramError):
        SurfaceLinkDiagram(torus(), (0, 2, 1, 3), (0,), {})


def test_map_genus_larger_than_surface_rejected():
    k2 = square_torus.build_diagram(2, 0)  # cellular on the genus-2 surface
    with pytest.raises(DiagramError):
        SurfaceLinkDiagram(torus(), k2.alpha, k2.over, {})


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_euler_invariant_under_relabeling(data):
    d = square_torus.build_diagram(1, 1)
    n = d.crossing_count
    perm = data.draw(st.permutations(range(n)))
    rotations = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    r = d.relabeled(perm, rotations)
    assert r.euler_characteristic == d.euler_characteristic
    assert r.face_sizes == d.face_sizes
    assert len(r.components) == len(d.components)
    assert r.is_alternating() == d.is_alternating()


def test_face_corners_partition_darts_for_every_family():
    from surflink import families

    for family, kw in (
        ("square-torus", {"genus": 2, "twists": 1}),
        ("hexagon-torus", {"genus": 1, "twists": 1}),
        ("layer-cake", {"layers": 1, "polygon": 3}),
        ("lens-layer-cake", {"lens": (2, 3)}),
        ("knotted-ribbon", {"tangle": "y"}),
        ("chain", {"cover": 1, "twisted": False}),
    ):
        d = families.generate(family, **kw).diagram
        assert sum(f.size for f in d.faces) == d.dart_count, family
        seen = sorted(x for f in d.faces for x in f.darts)
        assert seen == list(range(d.dart_count)), family
