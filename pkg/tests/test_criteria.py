import pytest

from surflink import criteria as cr
from surflink.families import chain, hexagon_torus, layer_cake, lens, ribbon, square_torus
from surflink.gluing import HomologyClass


def test_free_and_cyclic_reduction():
    assert cr.free_reduce([(0, 1), (0, -1)]) == ()
    assert cr.free_reduce([(0, 1), (1, 1), (1, -1), (0, -1)]) == ()
    assert cr.cyclic_reduce([(1, 1), (0, 1), (1, -1)]) == ((0, 1),)
    assert cr.cyclic_reduce([(1, 1), (0, 1), (0, -1), (1, -1)]) == ()


def test_k_is_obviously_prime():
    rep = cr.check_obviously_prime(square_torus.build_diagram(1, 0))
    assert rep.prime is True
    assert rep.witnesses == ()


def test_twisted_members_remain_obviously_prime():
    for n in range(1, 5):
        rep = cr.check_obviously_prime(square_torus.build_diagram(1, n))
        assert rep.prime is True, n


def test_hexagon_and_higher_genus_prime():
    assert cr.check_obviously_prime(hexagon_torus.build_diagram(1, 0)).prime is True
    assert cr.check_obviously_prime(square_torus.build_diagram(2, 0)).prime is True


def test_section_two_curves_are_red_or_blue():
    # every curve through the central or bigon regions is harmless: either it
    # bounds a disk meeting the diagram in an embedded arc, or it is essential
    d = square_torus.build_diagram(1, 0)
    for curve in cr.enumerate_two_intersection_curves(d):
        assert curve.verdict in (cr.BOUNDS_DISK_EMBEDDED_ARC, cr.ESSENTIAL)


def test_connected_sum_control_fails_with_witness(conn_sum):
    assert conn_sum.is_cellular() and conn_sum.is_alternating()
    rep = cr.check_obviously_prime(conn_sum)
    assert rep.prime is False
    obstructions = [w for w in rep.witnesses if w.verdict == cr.OBSTRUCTION]
    assert obstructions
    for witness in obstructions:
        assert witness.homology.is_zero
        assert witness.word == ()


def test_witness_invariants_revalidated(conn_sum):
    face_of = conn_sum.face_of_dart
    for witness in cr.check_obviously_prime(conn_sum).witnesses:
        a, b = witness.arcs
        f1, f2 = witness.faces
        sides_a = {face_of[a], face_of[conn_sum.alpha[a]]}
        sides_b = {face_of[b], face_of[conn_sum.alpha[b]]}
        assert {f1, f2} <= sides_a and {f1, f2} <= sides_b


def test_precondition_violation_reported():
    d = ribbon.build_diagram("y")  # not alternating
    with pytest.raises(cr.HypothesisError):
        cr.check_obviously_prime(d)


def test_layer_cake_representativity_is_six():
    d = layer_cake.build_diagram(2, 3, 0)
    q = cr.RepresentativityQuery((HomologyClass((1, 0)), HomologyClass((0, 1))))
    res = cr.representativity_lower_bound(d, q)
    assert res.bound == 6
    assert res.per_class == (6, 6)


def test_lens_representativity_at_least_six():
    d = lens.build_diagram(2, 3, 0, 0, 0)
    q = cr.RepresentativityQuery((HomologyClass((1, 0)), HomologyClass((3, 2))))
    res = cr.representativity_lower_bound(d, q, max_depth=7)
    assert res.bound >= 6


def test_representativity_monotone_in_polygon_width():
    classes = (HomologyClass((1, 0)), HomologyClass((0, 1)))
    bounds = []
    for m in (3, 4, 5):
        d = layer_cake.build_diagram(2, m, 0)
        res = cr.representativity_lower_bound(
            d, cr.RepresentativityQuery(classes), max_depth=2 * m
        )
        bounds.append(res.bound)
    assert bounds == sorted(bounds)
    assert bounds[0] == 6


def test_empty_class_list_rejected():
    with pytest.raises(cr.HypothesisError):
        cr.RepresentativityQuery(())


def test_zero_class_rejected():
    with pytest.raises(cr.HypothesisError):
        cr.RepresentativityQuery((HomologyClass((0, 0)),))


def test_non_torus_surface_unsupported():
    d = square_torus.build_diagram(2, 0)
    q = cr.RepresentativityQuery((HomologyClass((1, 0, 0, 0)),))
    with pytest.raises(cr.UnsupportedSurfaceError):
        cr.representativity_lower_bound(d, q)


def test_thrice_punctured_sphere_recognition():
    assert cr.recognize_thrice_punctured_sphere(ribbon.spanning_surface())
    k_spec = square_torus.spanning_surface(square_torus.build_diagram(1, 0), 1, 0)
    assert not cr.recognize_thrice_punctured_sphere(k_spec)
    assert cr.recognize_thrice_punctured_sphere(chain.base_surface(False))
    assert not cr.recognize_thrice_punctured_sphere(chain.base_surface(True))


def test_prime_never_true_with_witnesses(conn_sum):
    diagrams = [
        square_torus.build_diagram(1, 0),
        square_torus.build_diagram(2, 1),
        hexagon_torus.build_diagram(1, 1),
        conn_sum,
    ]
    for d in diagrams:
        rep = cr.check_obviously_prime(d)
        flagged = [w for w in rep.witnesses if w.verdict in (cr.OBSTRUCTION, cr.INDETERMINATE)]
        if rep.prime is True:
            assert not flagged
        else:
            assert flagged


def test_unsheared_cake_shows_why_the_twist_is_applied():
    # without the meridian twist a vertical curve meets only the two layer
    # contours; the recorded projection closes that gap
    d = layer_cake.build_diagram(2, 3, 0, sheared=False)
    q = cr.RepresentativityQuery((HomologyClass((0, 1)),))
    res = cr.representativity_lower_bound(d, q)
    assert res.bound == 2


def test_reduction_properties_random_words():
    from hypothesis import given, strategies as st

    word = st.lists(
        st.tuples(st.integers(0, 3), st.sampled_from([1, -1])), max_size=12
    )

    @given(word)
    def check(w):
        r = cr.free_reduce(w)
        assert cr.free_reduce(r) == r
        assert all(
            not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(r, r[1:])
        )
        c = cr.cyclic_reduce(w)
        assert cr.cyclic_reduce(c) == c
        from surflink.gluing import square_torus as torus

        t = torus()
        assert t.homology_of_crossing_word(w) == t.homology_of_crossing_word(r)

    check()


def test_depth_cap_reports_floors():
    d = layer_cake.build_diagram(2, 3, 0)
    q = cr.RepresentativityQuery((HomologyClass((1, 0)),))
    res = cr.representativity_lower_bound(d, q, max_depth=3)
    assert res.bound == 3
    assert res.floor_only == (True,)
