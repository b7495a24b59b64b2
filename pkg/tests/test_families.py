import pytest

from surflink import families
from surflink.families import chain, hexagon_torus, layer_cake, lens, ribbon, square_torus
from surflink.families.common import FamilyError
from surflink.fileio import serialize_diagram


def test_square_family_examples():
    b = families.generate("square-torus", genus=1, twists=0)
    assert b.diagram.crossing_count == 4
    assert len(b.diagram.components) == 1
    assert b.diagram.face_sizes == (2, 2, 4, 8)
    b2 = families.generate("square-torus", genus=2, twists=0)
    assert b2.diagram.crossing_count == 8
    assert b2.diagram.is_cellular()


def test_square_family_crossing_count_uses_four_stubs():
    for g in (1, 2):
        for n in (0, 1, 3):
            d = square_torus.build_diagram(g, n)
            assert d.crossing_count == 4 * g + 4 * g * n


def test_families_are_knots_for_all_small_parameters():
    for g in (1, 2, 3):
        for n in range(0, 7):
            assert len(square_torus.build_diagram(g, n).components) == 1
    for g in (1, 2, 3):
        for n in range(0, 5):
            assert len(hexagon_torus.build_diagram(g, n).components) == 1


def test_every_bundle_is_alternating_and_sections_cellular():
    bundles = [
        families.generate("square-torus", genus=2, twists=1),
        families.generate("hexagon-torus", genus=1, twists=2),
        families.generate("layer-cake", layers=1, polygon=3),
        families.generate("lens-layer-cake", lens=(2, 3)),
    ]
    for b in bundles:
        assert b.diagram.is_alternating()
        assert b.diagram.is_cellular()


def test_layer_cake_component_count():
    b = families.generate("layer-cake", layers=1, polygon=3)
    assert len(b.diagram.components) == 6
    assert b.expected["components"] == 6


def test_layer_cake_arm_census():
    # every layer has exactly m arms on each side
    for m in (2, 3, 4):
        d = layer_cake.build_diagram(2, m, 0)
        for t in (0, 1):
            ups = [j for j in range(2 * m) if layer_cake.is_up(t, j)]
            assert len(ups) == m


def test_layer_cake_rejects_bad_parameters():
    with pytest.raises(FamilyError):
        layer_cake.generate(0, 3, 0)
    with pytest.raises(FamilyError):
        layer_cake.build_diagram(3, 3, 0)  # odd layer count
    with pytest.raises(FamilyError):
        layer_cake.build_diagram(2, 1, 0)


def test_layer_cake_halving_requires_even_pairs():
    with pytest.raises(FamilyError):
        layer_cake.halve(layer_cake.generate(3, 2, 0))


def test_odd_twist_layer_cake_tags_inner():
    from surflink.spanning import CapPiece, INNER

    b = families.generate("layer-cake", layers=1, polygon=2, twists=1)
    caps = [p for p in b.spanning_surface.pieces if isinstance(p, CapPiece)]
    assert caps and all(c.tag == INNER for c in caps)


def test_even_twist_layer_cake_alternates_tags():
    from surflink.spanning import CapPiece

    b = families.generate("layer-cake", layers=1, polygon=2, twists=0)
    tags = [p.tag for p in b.spanning_surface.pieces if isinstance(p, CapPiece)]
    assert tags == ["inner", "outer"]


def test_lens_rejects_non_coprime():
    with pytest.raises(FamilyError):
        lens.generate((2, 4))


def test_lens_octagon_replacement():
    b = families.generate("lens-layer-cake", lens=(3, 1))
    assert b.expected["polygon_sides"] == 8
    b2 = families.generate("lens-layer-cake", lens=(2, 3))
    assert b2.expected["polygon_sides"] == 6


def test_lens_alpha_adds_layers():
    base = families.generate("lens-layer-cake", lens=(2, 3))
    extended = families.generate("lens-layer-cake", lens=(2, 3), alpha=1)
    assert extended.expected["layers"] == base.expected["layers"] + 4


def test_ribbon_rejects_empty_and_bad_words():
    with pytest.raises(FamilyError):
        ribbon.generate("")
    with pytest.raises(FamilyError):
        ribbon.generate("q")
    with pytest.raises(FamilyError):
        ribbon.generate("x")  # closes into one component, not three


def test_ribbon_rejects_odd_framing():
    with pytest.raises(FamilyError):
        ribbon.generate("y", (1, 0, 0, 0))


def test_ribbon_row_defaults_are_valid():
    for row, word in ribbon.ROW_WORDS.items():
        b = ribbon.generate(word)
        assert len(b.diagram.components) == 3, (row, word)


def test_ribbon_export_diagram_has_meridian():
    b = families.generate("knotted-ribbon", tangle="y")
    assert len(b.export_diagram.components) == 4
    assert b.marked_component is not None


def test_chain_counts():
    assert len(chain.generate(1, False).diagram.components) == 6
    assert len(chain.generate(1, True).diagram.components) == 5
    b = chain.generate(2, True)
    assert len(b.diagram.components) == 8
    assert len(b.extra_surfaces) == 2
    for s in b.extra_surfaces:
        assert not s.characteristics().orientable


def test_chain_surfaces():
    assert chain.base_surface(False).characteristics().orientable
    assert not chain.base_surface(True).characteristics().orientable


def test_generators_are_deterministic():
    for family, kw in (
        ("square-torus", {"genus": 2, "twists": 2}),
        ("hexagon-torus", {"genus": 1, "twists": 1}),
        ("layer-cake", {"layers": 2, "polygon": 2}),
        ("lens-layer-cake", {"lens": (2, 3)}),
        ("knotted-ribbon", {"tangle": "y"}),
        ("chain", {"cover": 2, "twisted": True}),
    ):
        b1 = families.generate(family, **kw)
        b2 = families.generate(family, **kw)
        meta = {"family": family}
        assert serialize_diagram(b1.diagram, meta) == serialize_diagram(b2.diagram, meta)


def test_unknown_family_rejected():
    with pytest.raises(FamilyError):
        families.generate("mystery")
