"""Dart-based combinatorial maps for 4-valent link projections on glued surfaces.

Darts are integers 0..4n-1 where n is the crossing count.  Crossing c owns
darts 4c..4c+3 and the vertex rotation is fixed in canonical form: sigma
cycles (4c, 4c+1, 4c+2, 4c+3) counterclockwise.  The edge involution alpha
pairs the two dart ends of every arc.  Parsers relabel arbitrary inputs into
this form, so every diagram in memory has the canonical rotation.

The two strands through crossing c are the opposite-dart pairs
{4c, 4c+2} and {4c+1, 4c+3}; ``over[c]`` selects which of them passes over
(0 for the even pair, 1 for the odd pair).

Each arc may carry a signed side-crossing word recording how it runs through
the gluing polygon; see :mod:`surflink.gluing` for the sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .gluing import GluingDiagram, HomologyClass


class DiagramError(ValueError):
    """Raised for structurally invalid link diagrams."""


SideWord = tuple[tuple[int, int], ...]


def _normalize_word(word: Iterable[Sequence[int]]) -> SideWord:
    out = []
    for entry in word:
        side, sign = entry
        out.append((int(side), int(sign)))
    return tuple(out)


@dataclass(frozen=True)
class Face:
    """A complementary region, as the cyclic dart sequence of its boundary walk."""

    index: int
    darts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class SurfaceLinkDiagram:
    surface: GluingDiagram
    alpha: tuple[int, ...]
    over: tuple[int, ...]
    arc_words: Mapping[int, SideWord] = field(default_factory=dict)

    def __post_init__(self) -> None:
        m = len(self.alpha)
        if m == 0 or m % 4 != 0:
            raise DiagramError("dart count must be a positive multiple of 4")
        if sorted(self.alpha) != list(range(m)):
            raise DiagramError("edge_involution must be a permutation of the darts")
        for d, e in enumerate(self.alpha):
            if e == d:
                raise DiagramError(f"edge_involution fixes dart {d}")
            if self.alpha[e] != d:
                raise DiagramError("edge_involution is not an involution")
        n = m // 4
        if len(self.over) != n or any(v not in (0, 1) for v in self.over):
            raise DiagramError("over_strand needs one 0/1 entry per crossing")
        words = {}
        for dart, word in dict(self.arc_words).items():
            if dart != min(dart, self.alpha[dart]):
                raise DiagramError(f"arc word keyed by non-canonical dart {dart}")
            word = _normalize_word(word)
            for side, sign in word:
                if not 0 <= side < self.surface.side_count:
                    raise DiagramError(f"arc word references side {side} out of range")
                if sign not in (1, -1):
                    raise DiagramError("arc word signs must be +1/-1")
            words[dart] = word
        object.__setattr__(self, "arc_words", words)
        if self.euler_characteristic < self.surface.euler_characteristic:
            raise DiagramError(
                "map genus exceeds surface genus: "
                f"traced characteristic {self.euler_characteristic} < "
                f"{self.surface.euler_characteristic}"
            )

    # -- elementary permutations --------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.alpha)

    @property
    def crossing_count(self) -> int:
        return len(self.alpha) // 4

    @staticmethod
    def crossing_of(dart: int) -> int:
        return dart // 4

    @staticmethod
    def sigma(dart: int) -> int:
        return 4 * (dart // 4) + (dart + 1) % 4

    @staticmethod
    def sigma_inv(dart: int) -> int:
        return 4 * (dart // 4) + (dart - 1) % 4

    @staticmethod
    def opposite(dart: int) -> int:
        return 4 * (dart // 4) + (dart + 2) % 4

    def arc_of(self, dart: int) -> int:
        """Canonical dart (smaller end) of the arc containing ``dart``."""
        return min(dart, self.alpha[dart])

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted(d for d in range(self.dart_count) if d < self.alpha[d]))

    def word_of_dart(self, dart: int) -> SideWord:
        """Side word of the arc, oriented along the traversal leaving ``dart``."""
        canonical = self.arc_of(dart)
        word = self.arc_words.get(canonical, ())
        if dart == canonical:
            return word
        return tuple((side, -sign) for side, sign in reversed(word))

    def is_over(self, dart: int) -> bool:
        return dart % 2 == self.over[dart // 4]

    # -- faces ---------------------------------------------------------------

    def face_next(self, dart: int) -> int:
        return self.sigma(self.alpha[dart])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen = [False] * self.dart_count
        out = []
        for start in range(self.dart_count):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.face_next(d)
            out.append(Face(len(out), tuple(orbit)))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        lookup = [0] * self.dart_count
        for face in self.faces:
            for d in face.darts:
                lookup[d] = face.index
        return tuple(lookup)

    def face_of_corner(self, lead: int) -> int:
        """Face owning the corner between ``lead`` and ``sigma(lead)``."""
        return self.face_of_dart[self.sigma(lead)]

    @property
    def face_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(f.size for f in self.faces))

    # -- global invariants -----------------------------------------------

    @cached_property
    def euler_characteristic(self) -> int:
        seen = [False] * self.dart_count
        nfaces = 0
        for start in range(self.dart_count):
            if seen[start]:
                continue
            nfaces += 1
            d = start
            while not seen[d]:
                seen[d] = True
                d = self.sigma(self.alpha[d])
        n = self.crossing_count
        return n - 2 * n + nfaces

    def is_cellular(self) -> bool:
        """True when every complementary region on the glued surface is a disk."""
        return self.euler_characteristic == self.surface.euler_characteristic

    # -- components ---------------------------------------------------------

    def strand_next(self, dart: int) -> int:
        return self.opposite(self.alpha[dart])

    @cached_property
    def _strand_orbits(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.dart_count
        orbits = []
        for start in range(self.dart_count):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.strand_next(d)
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """One directed traversal per link component, smallest dart first."""
        by_min: dict[int, tuple[int, ...]] = {}
        for orbit in self._strand_orbits:
            reverse_rep = min(self.alpha[d] for d in orbit)
            rep = min(min(orbit), reverse_rep)
            if rep in by_min:
                continue
            if min(orbit) == rep:
                k = orbit.index(rep)
                by_min[rep] = orbit[k:] + orbit[:k]
        return tuple(by_min[rep] for rep in sorted(by_min))

    def component_of_dart(self, dart: int) -> int:
        return self._component_lookup[dart]

    @cached_property
    def _component_lookup(self) -> tuple[int, ...]:
        lookup = [-1] * self.dart_count
        for idx, orbit in enumerate(self.components):
            for d in orbit:
                lookup[d] = idx
                lookup[self.alpha[d]] = idx
        return tuple(lookup)

    def is_alternating(self) -> bool:
        """True when every component alternates over/under at consecutive crossings."""
        for orbit in self.components:
            flags = [self.is_over(d) for d in orbit]
            if any(flags[i] == flags[(i + 1) % len(flags)] for i in range(len(flags))):
                return False
        return True

    # -- homology of arcs ---------------------------------------------------

    def arc_class(self, dart: int) -> HomologyClass:
        """Homology contribution of traversing the arc leaving ``dart``.

        Only meaningful summed over a closed walk; see the criteria module.
        """
        return self.surface.homology_of_crossing_word(self.word_of_dart(dart))

    # -- relabeling ----------------------------------------------------------

    def relabeled(self, crossing_perm: Sequence[int], rotations: Sequence[int]) -> "SurfaceLinkDiagram":
        """Diagram with crossings permuted and each rotation cycle rotated.

        ``crossing_perm[c]`` is the new index of crossing c; ``rotations[c]``
        rotates its dart slots, with the over bits adjusted so the same
        strand stays on top.
        """
        n = self.crossing_count
        if sorted(crossing_perm) != list(range(n)) or len(rotations) != n:
            raise DiagramError("invalid relabeling data")

        def dart_map(d: int) -> int:
            c, s = d // 4, d % 4
            return 4 * crossing_perm[c] + (s + rotations[c]) % 4

        alpha = [0] * self.dart_count
        for d in range(self.dart_count):
            alpha[dart_map(d)] = dart_map(self.alpha[d])
        over = [0] * n
        for c in range(n):
            over[crossing_perm[c]] = (self.over[c] + rotations[c]) % 2
        words: dict[int, SideWord] = {}
        for dart, word in self.arc_words.items():
            a, b = dart_map(dart), dart_map(self.alpha[dart])
            if a < b:
                words[a] = word
            else:
                words[b] = tuple((side, -sign) for side, sign in reversed(word))
        return SurfaceLinkDiagram(self.surface, tuple(alpha), tuple(over), words)


def trace_faces(diagram: SurfaceLinkDiagram) -> tuple[Face, ...]:
    return diagram.faces


def euler_characteristic(diagram: SurfaceLinkDiagram) -> int:
    return diagram.euler_characteristic


def is_cellular(diagram: SurfaceLinkDiagram) -> bool:
    return diagram.is_cellular()


def link_components(diagram: SurfaceLinkDiagram) -> tuple[tuple[int, ...], ...]:
    return diagram.components


def is_alternating(diagram: SurfaceLinkDiagram) -> bool:
    return diagram.is_alternating()
