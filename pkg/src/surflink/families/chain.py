"""Chain-based links: the augmented minimally twisted 4-chain templates.

The base link has six components: two flat circles (C1, C2), two parallel
rung circles threading both of them (C3, C4), a girdle circle C5 clasping C1
once, and a large circle C6 surrounding the chain while passing through the
middle of C4 twice.  The template is hardcoded as a planar diagram (drawn in
a disk of the torus polygon), ambient the 3-sphere with C5 marked; the
solid-torus variant drops C5.

The twisted variant merges the two rung circles through a half-twisted
splice inside C2 (cut along the disk of C2, rotate, reglue), which makes the
spanning surface non-orientable.  k-fold cyclic covers unwind the template
around C5: the seam disk crosses only C1, so C1 lifts to one long component
while everything else lifts to k copies.

Spanning surfaces are emitted as template complexes (a disk region that runs
underneath over-passing strands is not a union of complementary regions):
the base surface is the twice-punctured disk inside C6, bounded by C1 and
punctured by a rung: a pair of pants.  The twisted surface replaces one band
by its half-twisted splice.
"""

from __future__ import annotations

from ..pd import PDCode, pd_to_diagram, validate_pd
from ..spanning import TemplateSurface
from .common import FamilyBundle, FamilyError

# One fundamental domain with the C5 girdle removed.  C1's strand enters at
# IN (into crossing d2) and leaves at OUT (from crossing d1); all other arcs
# are internal.  Labels are symbolic and relabeled per copy.
_IN, _OUT = "in", "out"
_DOMAIN = (
    (3, 11, 4, 12),  # a1: rung-1 over C1
    (12, 2, 13, 3),  # a2: rung-1 under C1
    (7, 13, 8, 14),  # b2: rung-1 over C2
    (14, 10, 11, 7),  # b1: rung-1 under C2
    (4, 16, _OUT, 17),  # d1: rung-2 over C1
    (17, _IN, 18, 2),  # d2: rung-2 under C1
    (8, 20, 9, 21),  # c2: rung-2 over C2
    (21, 9, 22, 10),  # c1: rung-2 under C2
    (26, 15, 23, 16),  # e1: C6 under rung-2
    (23, 19, 24, 18),  # e2
    (24, 19, 25, 20),  # e4
    (25, 15, 26, 22),  # e3
)

# Half-twisted splice inside C2: rung passes 14 (rung-1) and 21 (rung-2) are
# cut and cross-joined through one new crossing, rung-1 continuing into c1
# and rung-2 into b1.
_SPLICE_REWRITES = {(14, 10, 11, 7): (29, 10, 11, 7), (21, 9, 22, 10): (30, 9, 22, 10)}
_SPLICE_ROW = (14, 21, 30, 29)

COMPONENT_NAMES = ("C1", "C2", "C3", "C4", "C5", "C6")


def _domain_rows(twisted: bool):
    rows = []
    for row in _DOMAIN:
        rows.append(_SPLICE_REWRITES.get(row, row) if twisted else row)
    if twisted:
        rows.append(_SPLICE_ROW)
    return rows


def cover_pd(k: int, twisted: bool) -> PDCode:
    """PD code of the k-fold cyclic cover unwound around C5 (k = 1 is the
    template itself)."""
    if k < 1:
        raise FamilyError("cover degree must be >= 1")
    domain = _domain_rows(twisted)
    rows = []
    fresh = [0]

    def alloc() -> int:
        fresh[0] += 1
        return fresh[0]

    seams = [alloc() for _ in range(k)]  # seams[i]: C1 strand from copy i to i+1
    for copy in range(k):
        local = {}
        for row in domain:
            out = []
            for a in row:
                if a == _IN:
                    out.append(seams[(copy - 1) % k])
                elif a == _OUT:
                    out.append(seams[copy])
                else:
                    if a not in local:
                        local[a] = alloc()
                    out.append(local[a])
            rows.append(tuple(out))
    # C5 girdles the seam strand between the last copy and copy 0: split that
    # seam arc into (seam -> f1 -> mid -> f2 -> tail) with tail feeding d2
    girdled = seams[k - 1]
    mid, tail, c5a, c5b = alloc(), alloc(), alloc(), alloc()
    rows = [
        tuple(tail if (a == girdled and i == _d2_index(twisted, len(domain), r_i)) else a for i, a in enumerate(row))
        for r_i, row in enumerate(rows)
    ]
    rows.append((girdled, c5b, mid, c5a))  # f1: C5 over C1
    rows.append((c5b, tail, c5a, mid))  # f2: C5 under C1
    return validate_pd(_relabel(rows))


def _d2_index(twisted: bool, domain_len: int, row_index: int) -> int:
    """Slot of the IN arc in the d2 row of copy 0 (the girdled seam's target)."""
    # d2 is the 6th row of the domain (index 5) in copy 0; its IN sits at slot 1
    return 1 if row_index == 5 else -1


def _relabel(rows) -> PDCode:
    labels = sorted({a for row in rows for a in row})
    lookup = {a: i + 1 for i, a in enumerate(labels)}
    return tuple(tuple(lookup[a] for a in row) for row in rows)


def base_surface(twisted: bool) -> TemplateSurface:
    """The twice-punctured disk inside C6 (a pair of pants), or its image
    with the rung-merging half twist."""
    bands = (
        ((0, 0), (1, 0), False),
        ((0, 1), (1, 2), False),
        ((0, 2), (1, 1), twisted),
    )
    label = (
        "half-twisted pants: rungs merged through the C2 disk"
        if twisted
        else "pants: region inside C6 bounded by C1, punctured by a rung"
    )
    return TemplateSurface(2, bands, label)


def generate(cover_degree: int, twisted: bool) -> FamilyBundle:
    code = cover_pd(cover_degree, twisted)
    diagram = pd_to_diagram(code)
    surfaces = tuple(base_surface(twisted) for _ in range(cover_degree))
    expected_components = (3 if twisted else 4) * cover_degree + 2
    comp_count = len(diagram.components)
    if comp_count != expected_components:
        raise FamilyError(
            f"chain template has {comp_count} components, expected {expected_components}"
        )
    bundle = FamilyBundle(
        family="chain",
        parameters={"cover": cover_degree, "twisted": twisted},
        diagram=diagram,
        spanning_surface=surfaces[0],
        ambient="three-sphere",
        expected={
            "components": expected_components,
            "marked": "C5",
            "surface_count": cover_degree,
            "surface_count_note": "an n-fold cover is also described as carrying n+1 "
            "such surfaces; the generator emits the n it constructs",
        },
        extra_surfaces=surfaces,
        pd_code=code,
    )
    return bundle
