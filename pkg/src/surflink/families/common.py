"""Shared scaffolding for the family generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from ..diagram import DiagramError, SurfaceLinkDiagram, SideWord
from ..gluing import GluingDiagram


class FamilyError(ValueError):
    """Raised for invalid family parameters."""


End = tuple[str, int]  # (crossing name, slot 0..3)


def _opposite(dart: int) -> int:
    return 4 * (dart // 4) + (dart + 2) % 4


def alternating_over_bits(alpha: Sequence[int], seed_over: int = 0) -> tuple[int, ...]:
    """Over/under bits making the diagram alternating, fixed by a seed.

    The passage exiting dart d is 'over' iff d % 2 == over[d // 4]; alternation
    forces consecutive passages along every strand to differ.  The bits are a
    2-coloring of the resulting constraint graph, seeded per connected piece
    of the projection; a conflict means no alternating assignment exists.
    """
    n = len(alpha) // 4
    over = [-1] * n
    for start in range(n):
        if over[start] >= 0:
            continue
        over[start] = seed_over
        stack = [start]
        while stack:
            c = stack.pop()
            for s in range(4):
                d = 4 * c + s
                e = _opposite(alpha[d])  # exit dart of the following passage
                c2 = e // 4
                flag_d = 1 if d % 2 == over[c] else 0
                bit = e % 2 if flag_d == 0 else 1 - e % 2
                if over[c2] < 0:
                    over[c2] = bit
                    stack.append(c2)
                elif over[c2] != bit:
                    raise DiagramError("no alternating over/under assignment exists")
    return tuple(over)


class DiagramBuilder:
    """Assembles a SurfaceLinkDiagram from named crossings and joins.

    Slots are counterclockwise positions 0..3 at each crossing; the strands
    through a crossing are the slot pairs {0,2} and {1,3}.  Joins declare the
    edge involution one arc at a time, with the arc's side word oriented from
    the first end to the second.
    """

    def __init__(self, surface: GluingDiagram):
        self.surface = surface
        self._order: list[str] = []
        self._index: dict[str, int] = {}
        self._alpha: dict[int, int] = {}
        self._words: dict[int, SideWord] = {}

    def crossing(self, name: str) -> str:
        if name in self._index:
            raise FamilyError(f"duplicate crossing name {name!r}")
        self._index[name] = len(self._order)
        self._order.append(name)
        return name

    def crossing_index(self, name: str) -> int:
        return self._index[name]

    def dart(self, end: End) -> int:
        name, slot = end
        return 4 * self._index[name] + slot % 4

    def join(self, end_a: End, end_b: End, word: Iterable[Sequence[int]] = ()) -> None:
        a, b = self.dart(end_a), self.dart(end_b)
        if a == b or a in self._alpha or b in self._alpha:
            raise FamilyError(f"ends {end_a} and {end_b} cannot be joined")
        self._alpha[a] = b
        self._alpha[b] = a
        word = tuple((int(s), int(sg)) for s, sg in word)
        if a < b:
            self._words[a] = word
        else:
            self._words[b] = tuple((s, -sg) for s, sg in reversed(word))

    def build(self, alternating: bool = True, over: Sequence[int] | None = None) -> SurfaceLinkDiagram:
        m = 4 * len(self._order)
        if sorted(self._alpha) != list(range(m)):
            missing = [d for d in range(m) if d not in self._alpha]
            raise FamilyError(f"unjoined dart ends remain: {missing[:8]}")
        alpha = tuple(self._alpha[d] for d in range(m))
        if over is None:
            over = alternating_over_bits(alpha) if alternating else (0,) * (m // 4)
        words = {d: w for d, w in self._words.items() if w}
        return SurfaceLinkDiagram(self.surface, alpha, tuple(over), words)


@dataclass
class FamilyBundle:
    """A generated diagram with its spanning surface and symmetry data."""

    family: str
    parameters: dict[str, Any]
    diagram: SurfaceLinkDiagram
    spanning_surface: Any = None
    symmetries: list = field(default_factory=list)
    ambient: str = "thickened-surface"
    expected: dict[str, Any] = field(default_factory=dict)
    marked_component: int | None = None
    extra_surfaces: tuple = ()
    pd_code: tuple | None = None
