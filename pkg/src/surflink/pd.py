"""Planar-diagram codes: the standard 4-tuple-per-crossing convention.

A PD code lists one tuple ``X(a, b, c, d)`` per crossing: ``a`` is the
incoming under-strand arc and b, c, d follow counterclockwise, so ``c`` is
the outgoing under-strand arc.  Arc labels are 1-indexed and each label
appears exactly twice.  Orientation bookkeeping for closed components is by
arc succession: the strand entering on arc ``a`` leaves on ``c``, and the
over-strand entering on ``b`` or ``d`` leaves on the opposite slot.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .diagram import SurfaceLinkDiagram
from .gluing import square_torus


class PDError(ValueError):
    pass


PDCode = tuple[tuple[int, int, int, int], ...]


def validate_pd(code: Iterable[Sequence[int]]) -> PDCode:
    tuples = tuple(tuple(int(x) for x in entry) for entry in code)
    if not tuples:
        raise PDError("empty PD code")
    counts: dict[int, int] = {}
    for entry in tuples:
        if len(entry) != 4:
            raise PDError(f"PD entries need 4 arc labels, got {entry}")
        for label in entry:
            counts[label] = counts.get(label, 0) + 1
    bad = [l for l, c in counts.items() if c != 2]
    if bad:
        raise PDError(f"arc labels must appear exactly twice; offenders: {sorted(bad)[:8]}")
    if sorted(counts) != list(range(1, len(counts) + 1)):
        raise PDError("arc labels must be 1..2n")
    return tuples


def pd_components(code: PDCode) -> int:
    """Number of link components: arcs joined by passing through crossings."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for a, b, c, d in code:
        union(a, c)
        union(b, d)
    return len({find(x) for x in parent})


def pd_to_diagram(code: Iterable[Sequence[int]]) -> SurfaceLinkDiagram:
    """Realize a PD code as a diagram drawn inside one polygon of a torus.

    Slot s of crossing i is the s-th entry of tuple i, so the under strand
    uses slots 0/2 and the over bits are all 1.
    """
    tuples = validate_pd(code)
    ends: dict[int, list[int]] = {}
    for ci, entry in enumerate(tuples):
        for s, label in enumerate(entry):
            ends.setdefault(label, []).append(4 * ci + s)
    alpha = [0] * (4 * len(tuples))
    for label, (x, y) in ends.items():
        alpha[x] = y
        alpha[y] = x
    return SurfaceLinkDiagram(square_torus(), tuple(alpha), (1,) * len(tuples), {})


def diagram_to_pd(diagram: SurfaceLinkDiagram) -> PDCode:
    """PD code of a diagram, numbering arcs along components.

    Arc labels follow each component's strand traversal from the canonical
    dart; crossings are emitted in index order with the incoming under-arc
    first.
    """
    d = diagram
    arc_label: dict[int, int] = {}
    label = 0
    for comp in d.components:
        for exit_dart in comp:
            label += 1
            arc_label[d.arc_of(exit_dart)] = label
    exits = {dart for comp in d.components for dart in comp}
    entries = []
    for c in range(d.crossing_count):
        under_in = None
        for s in range(4):
            dart = 4 * c + s
            # incoming under end: its passage leaves via the opposite dart
            if not d.is_over(dart) and d.opposite(dart) in exits:
                under_in = s
                break
        if under_in is None:
            raise PDError("crossing without an incoming under strand")
        entry = []
        for k in range(4):
            dart = 4 * c + (under_in + k) % 4
            entry.append(arc_label[d.arc_of(dart)])
        entries.append(tuple(entry))
    return tuple(entries)


def pd_text(code: PDCode) -> str:
    return " ".join("X[{},{},{},{}]".format(*entry) for entry in code)


def parse_pd_text(text: str) -> PDCode:
    import re

    entries = re.findall(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]", text)
    if not entries:
        raise PDError("no PD tuples found")
    return validate_pd(tuple(tuple(int(x) for x in e) for e in entries))
