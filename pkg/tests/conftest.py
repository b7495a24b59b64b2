import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import pytest

from surflink.diagram import SurfaceLinkDiagram
from surflink.families.common import DiagramBuilder
from surflink.gluing import square_torus


def connected_sum_control() -> SurfaceLinkDiagram:
    """The square-torus knot with a trefoil summand spliced into one arm arc.

    One strand of the vertical arm corridor is cut after it wraps through the
    identified side and a closed 2-braid trefoil is inserted into it; the two
    splice arcs flank the inserted summand, so a curve crossing exactly those
    two arcs bounds a disk containing the trefoil and meets the projection in
    more than an embedded arc.
    """
    b = DiagramBuilder(square_torus())
    for j in range(4):
        b.crossing(f"A{j}")
    for i in (1, 2, 3):
        b.crossing(f"T{i}")
    # the host knot: central square, vertical arm, horizontal arm
    for j in range(4):
        b.join((f"A{j}", 0), (f"A{(j + 1) % 4}", 1))
    b.join(("A0", 3), ("A2", 2), [(0, 1)])
    b.join(("A1", 3), ("A3", 2), [(1, 1)])
    b.join(("A1", 2), ("A3", 3), [(1, 1)])
    # trefoil as a descending 2-braid, closed on the left
    b.join(("T1", 2), ("T2", 1))
    b.join(("T1", 3), ("T2", 0))
    b.join(("T2", 2), ("T3", 1))
    b.join(("T2", 3), ("T3", 0))
    b.join(("T1", 1), ("T3", 2))
    # splice: the remaining corridor strand runs through the trefoil
    b.join(("A0", 2), ("T1", 0), [(0, 1)])
    b.join(("T3", 3), ("A2", 3))
    return b.build()


@pytest.fixture
def conn_sum():
    return connected_sum_control()
