import math
from fractions import Fraction

import pytest

from surflink import orbifold as orb
from surflink.families import hexagon_torus, layer_cake, lens, square_torus
from surflink.flags import LINK, MIRROR

INF = math.inf


def disk(*corners, segments=None):
    segs = segments or tuple(MIRROR for _ in corners)
    return orb.OrbifoldSignature(
        0, True, (orb.BoundaryCircle(tuple(corners), tuple(segs)),), ()
    )


def corner_multiset(sig):
    return tuple(sorted(sig.corner_orders, key=lambda x: (x == INF, x)))


def quotient_family(module, g, n):
    d = module.build_diagram(g, n)
    spec = module.spanning_surface(d, g, n)
    certs = module.certificates(spec, g, n)
    return orb.quotient(spec, certs)


def test_square_quotient_signature():
    sig = quotient_family(square_torus, 1, 0)
    assert corner_multiset(sig) == (2, 4, INF, INF)
    red = orb.reduce_infinite_corners(sig)
    assert corner_multiset(red) == (2, 4, INF)


def test_hexagon_quotient_contains_six_and_three():
    sig = quotient_family(hexagon_torus, 1, 0)
    orders = corner_multiset(sig)
    assert 6 in orders and 3 in orders
    assert corner_multiset(orb.reduce_infinite_corners(sig)) == (3, 6, INF)


def test_layer_cake_quotient_signature():
    d = layer_cake.build_diagram(2, 2, 0)
    spec = layer_cake.spanning_surface(d, 2, 4, 0)
    sig = orb.quotient(spec, layer_cake.trio_certificates(spec, 2, 4, 0))
    assert corner_multiset(sig) == (2, INF, INF, INF, INF)
    red = orb.reduce_infinite_corners(sig)
    assert corner_multiset(red) == (2, INF, INF)


def test_reduce_examples_and_idempotence():
    pre = disk(4, 2, INF, INF, segments=(MIRROR, MIRROR, LINK, MIRROR))
    red = orb.reduce_infinite_corners(pre)
    assert corner_multiset(red) == (2, 4, INF)
    assert orb.reduce_infinite_corners(red) == red
    five = disk(2, INF, INF, INF, INF, segments=(MIRROR, LINK, MIRROR, LINK, MIRROR))
    assert corner_multiset(orb.reduce_infinite_corners(five)) == (2, INF, INF)


def test_reduction_preserves_cones_and_genus():
    sig = orb.OrbifoldSignature(
        0,
        True,
        (orb.BoundaryCircle((INF, INF), (LINK, MIRROR)),),
        (3,),
    )
    red = orb.reduce_infinite_corners(sig)
    assert red.cone_points == (3,)
    assert red.underlying_genus == 0


def test_chi_orb_examples():
    assert orb.orbifold_euler_characteristic(disk(4, 2, INF)) == Fraction(-1, 8)
    assert orb.orbifold_euler_characteristic(disk(2, 4, 4)) == Fraction(0)
    assert orb.orbifold_euler_characteristic(disk()) == 1


def test_rigidity_examples():
    v = orb.is_rigid_hyperbolic(disk(4, 2, INF))
    assert v.rigid is True and v.reciprocal_sum == Fraction(3, 4)
    v = orb.is_rigid_hyperbolic(disk(8, 2, INF))
    assert v.rigid is True and v.reciprocal_sum == Fraction(5, 8)
    v = orb.is_rigid_hyperbolic(disk(6, 3, INF))
    assert v.rigid is True and v.reciprocal_sum == Fraction(1, 2)


def test_rigidity_euclidean_triangle_is_not_rigid():
    v = orb.is_rigid_hyperbolic(disk(2, 4, 4))
    assert v.rigid is False and v.reciprocal_sum == 1


def test_rigidity_unknown_outside_triangle_pattern():
    assert orb.is_rigid_hyperbolic(disk(4, 2, INF, INF)).rigid == "unknown"
    cone = orb.OrbifoldSignature(
        0, True, (orb.BoundaryCircle((2, INF), (MIRROR, MIRROR)),), (2,)
    )
    assert orb.is_rigid_hyperbolic(cone).rigid == "unknown"


def test_rigid_verdicts_have_negative_chi():
    for sig in (disk(4, 2, INF), disk(8, 2, INF), disk(6, 3, INF), disk(2, INF, INF)):
        v = orb.is_rigid_hyperbolic(sig)
        assert v.rigid is True
        assert v.reciprocal_sum < 1
        assert v.chi_orb < 0


def test_empty_certificate_list_returns_surface_signature():
    d = square_torus.build_diagram(1, 0)
    spec = square_torus.spanning_surface(d, 1, 0)
    sig = orb.quotient(spec, ())
    assert sig.underlying_genus == 1
    assert sig.orientable
    assert len(sig.boundary) == 1
    assert sig.boundary[0].corners == ()
    assert sig.cone_points == ()


def test_untwisting_invariance():
    for module, gmax, nmax in ((square_torus, 3, 4), (hexagon_torus, 3, 4)):
        for g in range(1, gmax + 1):
            base = orb.reduce_infinite_corners(quotient_family(module, g, 0)).canonical()
            for n in range(1, nmax + 1):
                sig = orb.reduce_infinite_corners(quotient_family(module, g, n)).canonical()
                assert sig == base, (module.__name__, g, n)


def test_layer_cake_reduction_chain():
    for pairs in (2, 4):
        bundle = layer_cake.generate(pairs, 2, 0)
        while bundle.parameters["layers"] > 1:
            bundle = layer_cake.halve(bundle)
        certs = bundle.symmetries
        sig = orb.quotient(bundle.spanning_surface, certs)
        red = orb.reduce_infinite_corners(sig)
        assert corner_multiset(red) == (2, INF, INF)


def test_group_too_large():
    n = 1000
    rotation = tuple((i + 1) % n for i in range(n))
    with pytest.raises(orb.GroupTooLargeError):
        orb.close_group(n, [rotation])


def test_lens_quotient_is_rigid_triangle():
    bundle = lens.generate((2, 3))
    sig = orb.quotient(bundle.spanning_surface, bundle.symmetries)
    red = orb.reduce_infinite_corners(sig)
    v = orb.is_rigid_hyperbolic(red)
    assert v.rigid is True
    assert corner_multiset(red) == (3, INF, INF)


def test_signature_notation_uses_inf_literal():
    # canonical form rotates the cyclic corner list to its smallest rotation
    assert orb.reduce_infinite_corners(disk(2, 4, INF)).notation() == "D(;2,4,inf)"
    assert orb.reduce_infinite_corners(disk(4, 2, INF)).notation() == "D(;2,inf,4)"


def test_hexagon_layer_quotient_signature():
    # hexagon layers put a dihedral point of order 3 at the cap centers, so
    # the honest reduced signature is (3, inf, inf); it is rigid with
    # reciprocal sum 1/3 (the printed 1/2 belongs to the square-layer drum)
    d = layer_cake.build_diagram(2, 3, 0)
    spec = layer_cake.spanning_surface(d, 2, 6, 0)
    sig = orb.quotient(spec, layer_cake.trio_certificates(spec, 2, 6, 0))
    red = orb.reduce_infinite_corners(sig)
    assert corner_multiset(red) == (3, INF, INF)
    v = orb.is_rigid_hyperbolic(red)
    assert v.rigid is True and v.reciprocal_sum == Fraction(1, 3)


def test_quotient_rejects_tampered_certificates():
    d = square_torus.build_diagram(1, 0)
    spec = square_torus.spanning_surface(d, 1, 0)
    certs = square_torus.certificates(spec, 1, 0)
    from dataclasses import replace

    fm = list(certs[0].flag_map)
    fm[0], fm[1] = fm[1], fm[0]
    bad = replace(certs[0], flag_map=tuple(fm))
    with pytest.raises(Exception) as exc:
        orb.quotient(spec, [bad])
    assert "L1" in str(exc.value)


def test_covering_degree_accounts_for_reduced_chi():
    # |certificate group| x chi_orb(reduced quotient) = chi(surface): an
    # independent arithmetic check of the whole quotient machinery
    cases = []
    for module, params in (
        (square_torus, [(1, 0), (2, 0), (3, 1), (1, 2)]),
        (hexagon_torus, [(1, 0), (2, 0), (1, 1)]),
    ):
        for g, n in params:
            d = module.build_diagram(g, n)
            spec = module.spanning_surface(d, g, n)
            cases.append((spec, module.certificates(spec, g, n)))
    for m in (2, 3):
        d = layer_cake.build_diagram(2, m, 0)
        spec = layer_cake.spanning_surface(d, 2, 2 * m, 0)
        cases.append((spec, layer_cake.trio_certificates(spec, 2, 2 * m, 0)))
    lens_bundle = lens.generate((2, 3))
    cases.append((lens_bundle.spanning_surface, lens_bundle.symmetries))
    for spec, certs in cases:
        sig, log = orb.quotient_with_log(spec, certs)
        red = orb.reduce_infinite_corners(sig)
        chi_orb = orb.orbifold_euler_characteristic(red)
        chi_surface = spec.characteristics().euler
        assert chi_orb * log["group_order"] == chi_surface


def test_reduction_drops_half_per_collapsed_corner():
    sig = disk(4, 2, INF, INF, segments=(MIRROR, MIRROR, LINK, MIRROR))
    red = orb.reduce_infinite_corners(sig)
    delta = orb.orbifold_euler_characteristic(red) - orb.orbifold_euler_characteristic(sig)
    assert delta == Fraction(1, 2)


def test_every_certificate_subset_quotient_is_chi_consistent():
    # quotients by arbitrary certificate subsets (including single mirrors,
    # whose quotients can be non-orientable) still satisfy the covering
    # arithmetic after reduction
    import itertools

    d = square_torus.build_diagram(1, 0)
    spec = square_torus.spanning_surface(d, 1, 0)
    certs = square_torus.certificates(spec, 1, 0)
    for r in range(0, 4):
        for subset in itertools.combinations(certs, r):
            sig, log = orb.quotient_with_log(spec, subset)
            red = orb.reduce_infinite_corners(sig)
            chi = orb.orbifold_euler_characteristic(red)
            assert chi * log["group_order"] == spec.characteristics().euler
