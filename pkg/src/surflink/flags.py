"""Flag systems for surfaces built from polygonal cells.

A cell is a closed disk with numbered boundary sides; a flag is a triple
(cell, side, end) with end 0/1 the start/finish of the side in the cell's
boundary traversal.  The three elementary involutions are

* ``s0`` - other end of the same side,
* ``s1`` - the side meeting this one at the cell corner,
* ``s2`` - the matching flag across a side gluing (identity on free sides).

Free sides are boundary; each carries a label (the spanning surfaces built
here label all genuine boundary ``link``).  A gluing may be orientation
reversing (end 0 to end 1, the surface-orientable case) or straight; one
straight end on an otherwise reversing band encodes a half twist.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

LINK = "link"
MIRROR = "mirror"


class FlagError(ValueError):
    """Raised for malformed cell complexes."""


@dataclass(frozen=True)
class FlagComplex:
    side_counts: tuple[int, ...]
    s0: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    boundary_label: tuple[str | None, ...]  # per flag; None on glued sides

    # -- construction -------------------------------------------------------

    @staticmethod
    def build(
        side_counts: Sequence[int],
        gluings: Iterable[tuple[tuple[int, int], tuple[int, int], bool]],
        free_label: str = LINK,
    ) -> "FlagComplex":
        """Build a complex from per-cell side counts and side gluings.

        Each gluing is ``((cell_a, side_a), (cell_b, side_b), reversing)``
        where ``reversing`` matches end 0 to end 1 (the orientation-coherent
        case for a band without a twist uses reversing=True at both ends;
        a half-twisted band is encoded by one straight gluing).
        """
        offsets = []
        total = 0
        for n in side_counts:
            if n < 1:
                raise FlagError("cells need at least one side")
            offsets.append(total)
            total += 2 * n

        def flag(cell: int, side: int, end: int) -> int:
            return offsets[cell] + 2 * side + end

        s0 = list(range(total))
        s1 = list(range(total))
        s2 = list(range(total))
        for cell, n in enumerate(side_counts):
            for side in range(n):
                a, b = flag(cell, side, 0), flag(cell, side, 1)
                s0[a], s0[b] = b, a
                nxt = flag(cell, (side + 1) % n, 0)
                s1[b], s1[nxt] = nxt, b
                prv = flag(cell, (side - 1) % n, 1)
                s1[a], s1[prv] = prv, a
        glued = set()
        for (ca, sa), (cb, sb), reversing in gluings:
            if (ca, sa) in glued or (cb, sb) in glued or (ca, sa) == (cb, sb):
                raise FlagError(f"side glued twice: {(ca, sa)} / {(cb, sb)}")
            glued.add((ca, sa))
            glued.add((cb, sb))
            for end in (0, 1):
                a = flag(ca, sa, end)
                b = flag(cb, sb, 1 - end if reversing else end)
                s2[a] = b
                s2[b] = a
        labels: list[str | None] = [None] * total
        for cell, n in enumerate(side_counts):
            for side in range(n):
                if (cell, side) not in glued:
                    labels[flag(cell, side, 0)] = free_label
                    labels[flag(cell, side, 1)] = free_label
        return FlagComplex(tuple(side_counts), tuple(s0), tuple(s1), tuple(s2), tuple(labels))

    # -- bookkeeping ---------------------------------------------------------

    @property
    def flag_count(self) -> int:
        return len(self.s0)

    @cached_property
    def _offsets(self) -> tuple[int, ...]:
        offsets = []
        total = 0
        for n in self.side_counts:
            offsets.append(total)
            total += 2 * n
        return tuple(offsets)

    def flag_id(self, cell: int, side: int, end: int) -> int:
        return self._offsets[cell] + 2 * side + end

    def flag_triple(self, flag: int) -> tuple[int, int, int]:
        cell = max(c for c, off in enumerate(self._offsets) if off <= flag)
        rel = flag - self._offsets[cell]
        return cell, rel // 2, rel % 2

    def cell_of_flag(self, flag: int) -> int:
        return self.flag_triple(flag)[0]

    def is_boundary(self, flag: int) -> bool:
        return self.s2[flag] == flag

    # -- invariants ----------------------------------------------------------

    def _orbit_count(self, perms: Sequence[Sequence[int]]) -> int:
        parent = list(range(self.flag_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in perms:
            for a in range(self.flag_count):
                ra, rb = find(a), find(p[a])
                if ra != rb:
                    parent[ra] = rb
        return len({find(x) for x in range(self.flag_count)})

    @cached_property
    def euler_characteristic(self) -> int:
        v = self._orbit_count([self.s1, self.s2])
        e = self._orbit_count([self.s0, self.s2])
        f = self._orbit_count([self.s0, self.s1])
        return v - e + f

    @cached_property
    def orientable(self) -> bool:
        """2-color flags so every non-trivial adjacency flips the color."""
        color = [-1] * self.flag_count
        for start in range(self.flag_count):
            if color[start] >= 0:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                f = stack.pop()
                for s in (self.s0, self.s1, self.s2):
                    g = s[f]
                    if g == f:
                        continue
                    if color[g] < 0:
                        color[g] = 1 - color[f]
                        stack.append(g)
                    elif color[g] == color[f]:
                        return False
        return True

    @cached_property
    def orientation_class(self) -> tuple[int, ...] | None:
        """The 2-coloring (per flag) when orientable, else None."""
        color = [-1] * self.flag_count
        for start in range(self.flag_count):
            if color[start] >= 0:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                f = stack.pop()
                for s in (self.s0, self.s1, self.s2):
                    g = s[f]
                    if g == f:
                        continue
                    if color[g] < 0:
                        color[g] = 1 - color[f]
                        stack.append(g)
                    elif color[g] == color[f]:
                        return None
        return tuple(color)

    @cached_property
    def boundary_circles(self) -> tuple[tuple[int, ...], ...]:
        """Boundary flags grouped into circles (as unordered orbits)."""
        boundary = [f for f in range(self.flag_count) if self.is_boundary(f)]
        parent = {f: f for f in boundary}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for f in boundary:
            union(f, self.s0[f])
            union(f, self._next_boundary_at_vertex(f))
        groups: dict[int, list[int]] = {}
        for f in boundary:
            groups.setdefault(find(f), []).append(f)
        return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))

    def _next_boundary_at_vertex(self, flag: int) -> int:
        """The other boundary flag in the vertex fan containing ``flag``."""
        g = self.s1[flag]
        while self.s2[g] != g:
            g = self.s1[self.s2[g]]
        return g

    def connected(self) -> bool:
        return self._orbit_count([self.s0, self.s1, self.s2]) == 1
