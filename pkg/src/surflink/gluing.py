"""Polygon gluing diagrams for closed orientable surfaces.

A surface is presented as a 2k-gon with sides indexed 0..2k-1 counterclockwise
and a fixed-point-free involution pairing the sides.  The only built-in
identification scheme glues opposite sides by translation (side i to side
i+k), which produces the orientable surfaces used by every generator in this
package; the scheme argument exists so other involutions can be validated
through the same invariants.

Conventions
-----------
* Side i runs tail-to-head in the counterclockwise boundary order; corner c
  is the polygon vertex between side c-1 (head end) and side c (tail end).
* A translation gluing maps the point at parameter x of side i to the point
  at parameter 1-x of its partner, i.e. tail end to head end.
* First homology is presented by one generator per identified side pair
  (pairs ordered by their smaller side index) modulo one relation per vertex
  orbit.  Classes are reported as integer vectors of length 2*genus in the
  canonical quotient basis: eliminate relations on the smallest possible
  pair, then list the surviving pair coordinates in *descending* pair order.
  On the square torus this makes crossing the bottom side once the class
  (0, 1) and crossing the right side once the class (1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

OPPOSITE_TRANSLATION = "opposite-translation"


class GluingError(ValueError):
    """Raised for invalid polygons or pairings."""


@dataclass(frozen=True)
class HomologyClass:
    """Element of H_1 of a glued surface, in the diagram's canonical basis."""

    coefficients: tuple[int, ...]

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if len(self.coefficients) != len(other.coefficients):
            raise ValueError("homology classes from different surfaces")
        return HomologyClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-a for a in self.coefficients))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def scaled(self, factor: int) -> "HomologyClass":
        return HomologyClass(tuple(factor * a for a in self.coefficients))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coefficients)


@dataclass(frozen=True)
class GluingDiagram:
    """A 2k-gon with paired sides.

    ``pairing`` must be a fixed-point-free involution on 0..2k-1 and
    ``reversing[i]`` says whether the identification of side i with its
    partner reverses the tail/head matching (False for translation gluings,
    which are the orientation-preserving case for the glued surface).
    """

    side_count: int
    pairing: tuple[int, ...]
    reversing: tuple[bool, ...]

    def __post_init__(self) -> None:
        n = self.side_count
        if n < 4 or n % 2 != 0:
            raise GluingError(f"side_count must be an even integer >= 4, got {n}")
        if len(self.pairing) != n or sorted(self.pairing) != list(range(n)):
            raise GluingError("pairing must be a permutation of the side indices")
        for i, j in enumerate(self.pairing):
            if j == i:
                raise GluingError(f"pairing fixes side {i}; sides must be glued in pairs")
            if self.pairing[j] != i:
                raise GluingError("pairing is not an involution")
            if self.reversing[i] != self.reversing[j]:
                raise GluingError("reversal flags must agree on paired sides")
        if len(self.reversing) != n:
            raise GluingError("need one reversal flag per side")

    # -- basic structure ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self.side_count // 2

    def pair_index(self, side: int) -> int:
        """Index of the identified pair containing ``side`` (by smaller side)."""
        return self._pair_lookup[side]

    def pair_sign(self, side: int) -> int:
        """+1 if ``side`` is the representative (smaller) side of its pair."""
        return 1 if side < self.pairing[side] else -1

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, self.pairing[i]) for i in range(self.side_count) if i < self.pairing[i]
        )

    @cached_property
    def _pair_lookup(self) -> tuple[int, ...]:
        lookup = [0] * self.side_count
        for idx, (a, b) in enumerate(self.pairs):
            lookup[a] = lookup[b] = idx
        return tuple(lookup)

    def glued_end(self, side: int, end: int) -> tuple[int, int]:
        """Image of a side end (0 = tail, 1 = head) under the identification."""
        j = self.pairing[side]
        return (j, end) if self.reversing[side] else (j, 1 - end)

    # -- vertices and genus ------------------------------------------------

    @cached_property
    def vertex_orbits(self) -> tuple[tuple[int, ...], ...]:
        """Corner orbits under the identification, each starting at its
        smallest corner; orbits ordered by smallest corner."""
        n = self.side_count
        seen = [False] * n
        orbits = []
        for start in range(n):
            if seen[start]:
                continue
            orbit = []
            corner = start
            end = (corner, 0)  # hop out through the tail side of the corner
            while True:
                orbit.append(corner)
                seen[corner] = True
                side, which = self.glued_end(*end)
                # the glued end sits at a corner; continue via that corner's
                # other end
                corner = side if which == 0 else (side + 1) % n
                end = (side + 1, 0) if which == 1 else ((side - 1) % n, 1)
                end = (end[0] % n, end[1])
                if corner == start:
                    break
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def euler_characteristic(self) -> int:
        return len(self.vertex_orbits) - self.edge_count + 1

    @cached_property
    def genus(self) -> int:
        chi = self.euler_characteristic
        if chi % 2 != 0 or chi > 2:
            raise GluingError(f"identification complex has invalid characteristic {chi}")
        return (2 - chi) // 2

    # -- homology ----------------------------------------------------------

    @cached_property
    def _homology_presentation(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...], dict[int, int]]:
        """Reduced relation rows, free pair columns (descending), pivot map."""
        k = self.edge_count
        rows: list[list[int]] = []
        for orbit in self.vertex_orbits:
            row = [0] * k
            for corner in orbit:
                # circling the vertex crosses the pair of the corner's tail side
                side = corner
                row[self.pair_index(side)] += self.pair_sign(side)
            if any(row):
                rows.append(row)
        pivots: dict[int, int] = {}  # column -> row index
        reduced: list[list[int]] = []
        for row in rows:
            row = row[:]
            for col, ridx in pivots.items():
                if row[col]:
                    factor = row[col]
                    row = [a - factor * b for a, b in zip(row, reduced[ridx])]
            if not any(row):
                continue
            col = next((c for c, a in enumerate(row) if a in (1, -1)), None)
            if col is None:
                raise GluingError("homology relations lack a unit pivot; scheme unsupported")
            if row[col] == -1:
                row = [-a for a in row]
            pivots[col] = len(reduced)
            reduced.append(row)
        free = tuple(c for c in range(k - 1, -1, -1) if c not in pivots)
        if len(free) != 2 * self.genus:
            raise GluingError("homology rank does not match genus")
        return tuple(tuple(r) for r in reduced), free, pivots

    @property
    def homology_rank(self) -> int:
        return 2 * self.genus

    def zero_class(self) -> HomologyClass:
        return HomologyClass((0,) * self.homology_rank)

    def class_of_pair_vector(self, vector: Sequence[int]) -> HomologyClass:
        """Quotient coordinates of a signed pair-crossing count vector."""
        reduced_rows, free, pivots = self._homology_presentation
        v = list(vector)
        for col, ridx in pivots.items():
            if v[col]:
                factor = v[col]
                v = [a - factor * b for a, b in zip(v, reduced_rows[ridx])]
        return HomologyClass(tuple(v[c] for c in free))

    def homology_of_crossing_word(self, word: Iterable[tuple[int, int]]) -> HomologyClass:
        """Class of a closed curve from its signed side-crossing word.

        Each word letter is ``(side, sign)`` with sign +1 for a crossing that
        leaves the polygon through ``side`` and -1 for the reverse crossing.
        Identified sides contribute with opposite signs.
        """
        v = [0] * self.edge_count
        for side, sign in word:
            if not 0 <= side < self.side_count:
                raise GluingError(f"side index {side} out of range")
            if sign not in (1, -1):
                raise GluingError(f"crossing sign must be +1 or -1, got {sign}")
            v[self.pair_index(side)] += sign * self.pair_sign(side)
        return self.class_of_pair_vector(v)


def build_gluing_diagram(side_count: int, scheme: str = OPPOSITE_TRANSLATION) -> GluingDiagram:
    """Construct a gluing diagram for one of the supported schemes."""
    if side_count < 4 or side_count % 2 != 0:
        raise GluingError(f"side_count must be an even integer >= 4, got {side_count}")
    if scheme != OPPOSITE_TRANSLATION:
        raise GluingError(f"unknown identification scheme {scheme!r}")
    k = side_count // 2
    pairing = tuple((i + k) % side_count for i in range(side_count))
    return GluingDiagram(side_count, pairing, (False,) * side_count)


def square_torus() -> GluingDiagram:
    return build_gluing_diagram(4)


def genus_of(diagram: GluingDiagram) -> int:
    return diagram.genus
