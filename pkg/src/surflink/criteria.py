"""Hyperbolicity precondition checkers.

Three mechanical checks feed the certificate pipeline:

* ``check_obviously_prime`` enumerates every simple closed curve meeting the
  diagram in exactly two points, up to region-wise isotopy, and classifies
  each one.  A curve is determined by the two crossed arcs together with the
  pair of complementary faces it runs through; its side-crossing word is read
  off boundary-parallel paths inside those disk faces, so disk-bounding can
  be tested soundly by free reduction (incomplete cases are reported as
  indeterminate rather than guessed).
* ``representativity_lower_bound`` finds minimum-weight cycles in prescribed
  homology classes through the face-arc dual graph, with homology tracked
  through the same within-face words.
* ``recognize_thrice_punctured_sphere`` is a characteristic test on spanning
  surfaces.

Face adjacency always means meeting along an arc, never just at a crossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import SurfaceLinkDiagram
from .gluing import HomologyClass
from .spanning import SpanningSurfaceSpec, SurfaceCharacteristics, TemplateSurface

BOUNDS_DISK_EMBEDDED_ARC = "bounds-disk-embedded-arc"
ESSENTIAL = "essential-nonbounding"
OBSTRUCTION = "obstruction"
INDETERMINATE = "indeterminate"


class HypothesisError(ValueError):
    """A checker was invoked outside the hypotheses its verdict needs."""


class UnsupportedSurfaceError(ValueError):
    pass


Word = tuple[tuple[int, int], ...]


def free_reduce(word: Iterable[Sequence[int]]) -> Word:
    out: list[tuple[int, int]] = []
    for side, sign in word:
        if out and out[-1][0] == side and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((side, sign))
    return tuple(out)


def cyclic_reduce(word: Iterable[Sequence[int]]) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
        w = list(free_reduce(w))
    return tuple(w)


def _arc_point_at_start(diagram: SurfaceLinkDiagram, dart: int) -> bool:
    """Whether the canonical point of this arc sits at the start of the
    traversal via ``dart`` (it sits at the start of the canonical dart)."""
    return dart == diagram.arc_of(dart)


def transition_word(diagram: SurfaceLinkDiagram, face_walk: Sequence[int], u: int, w: int) -> Word:
    """Side word of the boundary-parallel path inside a face from the
    canonical point on arc(u) to the canonical point on arc(w).

    ``u`` and ``w`` are darts of the face's boundary walk; faces are disks,
    so the path is unique up to homotopy and the word up to free reduction.
    The trivial path is used when ``u == w``.
    """
    if u == w:
        return ()
    i, j = face_walk.index(u), face_walk.index(w)
    word: list[tuple[int, int]] = []
    if _arc_point_at_start(diagram, u):
        word.extend(diagram.word_of_dart(u))
    k = (i + 1) % len(face_walk)
    while k != j:
        word.extend(diagram.word_of_dart(face_walk[k]))
        k = (k + 1) % len(face_walk)
    if not _arc_point_at_start(diagram, w):
        word.extend(diagram.word_of_dart(w))
    return free_reduce(word)


@dataclass(frozen=True)
class TwoIntersectionCurve:
    """A closed curve crossing the diagram exactly twice.

    ``path`` alternates faces and arcs: (face_1, arc_a, face_2, arc_b); the
    curve crosses arc_a from face_1 into face_2 and arc_b back.
    """

    arcs: tuple[int, int]
    faces: tuple[int, int]
    word: Word
    homology: HomologyClass
    verdict: str

    @property
    def path(self) -> tuple[int, int, int, int]:
        return (self.faces[0], self.arcs[0], self.faces[1], self.arcs[1])


@dataclass(frozen=True)
class PrimalityReport:
    prime: bool | str  # True / False / "indeterminate"
    witnesses: tuple[TwoIntersectionCurve, ...]
    curves_examined: int


def enumerate_two_intersection_curves(diagram: SurfaceLinkDiagram) -> list[TwoIntersectionCurve]:
    """All two-intersection curves up to region-wise isotopy."""
    d = diagram
    walks = {f.index: f.darts for f in d.faces}
    face_of = d.face_of_dart
    curves = []
    seen = set()
    # same-arc curves: the local loop back across the arc near one endpoint
    for arc in d.arcs:
        u, v = arc, d.alpha[arc]
        curves.append(
            TwoIntersectionCurve(
                arcs=(arc, arc),
                faces=(face_of[v], face_of[u]),
                word=(),
                homology=d.surface.zero_class(),
                verdict=BOUNDS_DISK_EMBEDDED_ARC,
            )
        )
    # distinct-arc curves: cross arc(u) into face(u), cross arc(v) into face(v)
    m = d.dart_count
    for u in range(m):
        for v in range(u + 1, m):
            if d.arc_of(u) == d.arc_of(v):
                continue
            if face_of[d.alpha[u]] != face_of[v] or face_of[d.alpha[v]] != face_of[u]:
                continue
            canon = min(tuple(sorted((u, v))), tuple(sorted((d.alpha[u], d.alpha[v]))))
            if canon in seen:
                continue
            seen.add(canon)
            f2, f1 = face_of[u], face_of[v]
            word = transition_word(d, walks[f2], u, d.alpha[v]) + transition_word(
                d, walks[f1], v, d.alpha[u]
            )
            word = cyclic_reduce(word)
            cls = d.surface.homology_of_crossing_word(word)
            if not cls.is_zero:
                verdict = ESSENTIAL
            elif not word:
                verdict = OBSTRUCTION
            else:
                verdict = INDETERMINATE
            curves.append(
                TwoIntersectionCurve(
                    arcs=(d.arc_of(u), d.arc_of(v)),
                    faces=(f1, f2),
                    word=word,
                    homology=cls,
                    verdict=verdict,
                )
            )
    return curves


def check_obviously_prime(diagram: SurfaceLinkDiagram) -> PrimalityReport:
    """Primality certificate for cellular alternating projections: every
    two-intersection disk must meet the projection in an embedded arc."""
    if not diagram.is_cellular():
        raise HypothesisError("obviously-prime requires a cellular projection")
    if not diagram.is_alternating():
        raise HypothesisError("obviously-prime requires an alternating projection")
    curves = enumerate_two_intersection_curves(diagram)
    witnesses = tuple(c for c in curves if c.verdict in (OBSTRUCTION, INDETERMINATE))
    if any(c.verdict == OBSTRUCTION for c in witnesses):
        prime: bool | str = False
    elif witnesses:
        prime = "indeterminate"
    else:
        prime = True
    return PrimalityReport(prime, witnesses, len(curves))


@dataclass(frozen=True)
class RepresentativityQuery:
    """Compressing-disk boundary classes to test, one per solid-torus side."""

    compressing_classes: tuple[HomologyClass, ...]

    def __post_init__(self) -> None:
        if not self.compressing_classes:
            raise HypothesisError("representativity query needs at least one class")
        for cls in self.compressing_classes:
            if cls.is_zero:
                raise HypothesisError("compressing classes must be nonzero")


@dataclass(frozen=True)
class RepresentativityResult:
    bound: int
    per_class: tuple[int, ...]
    coefficient_bound: int
    floor_only: tuple[bool, ...] = ()  # per class: True when only depth-capped


def representativity_lower_bound(
    diagram: SurfaceLinkDiagram, query: RepresentativityQuery, max_depth: int | None = None
) -> RepresentativityResult:
    """Minimum diagram crossings of closed curves in the query classes.

    Computed as minimum-weight homologous cycles through the face-arc dual
    graph; homology coefficients are explored within +/- the arc count, which
    is emitted with the result as the certification bound.  With ``max_depth``
    the search stops early and classes without a cycle report the cap as a
    certified floor (``floor_only``).
    """
    d = diagram
    if d.surface.genus != 1:
        raise UnsupportedSurfaceError("representativity search requires a torus surface")
    walks = {f.index: f.darts for f in d.faces}
    face_of = d.face_of_dart
    coeff_bound = len(d.arcs)

    # transition classes between arc points within each face
    trans: dict[tuple[int, int], tuple[int, ...]] = {}
    for f in d.faces:
        for u in f.darts:
            for w in f.darts:
                cls = d.surface.homology_of_crossing_word(
                    transition_word(d, walks[f.index], u, w)
                )
                trans[(u, w)] = cls.coefficients

    per_class = []
    floors = []
    for target_cls in query.compressing_classes:
        target = target_cls.coefficients
        targets = {target, tuple(-x for x in target)}
        zero = (0,) * len(target)
        best: int | None = None
        for start in d.arcs:
            for start_dart in (start, d.alpha[start]):
                # state (u, acc): the curve crossed arc(start) once, wandered,
                # and most recently crossed arc(u) into face(u); acc holds the
                # accumulated class.  Cost = crossings so far.
                close_dart = d.alpha[start_dart]
                frontier = {(start_dart, zero)}
                visited = set(frontier)
                cost = 1
                while frontier:
                    if best is not None and cost >= best:
                        break
                    if max_depth is not None and cost > max_depth:
                        break
                    # closing: run back to the start point without crossing
                    for u, acc in frontier:
                        if face_of[u] == face_of[close_dart]:
                            total = tuple(
                                a + b for a, b in zip(acc, trans[(u, close_dart)])
                            )
                            if total in targets:
                                best = cost if best is None else min(best, cost)
                    if best is not None and cost >= best:
                        break
                    nxt = set()
                    for u, acc in frontier:
                        fw = walks[face_of[u]]
                        for w in fw:
                            delta = trans[(u, w)]
                            acc2 = tuple(a + b for a, b in zip(acc, delta))
                            if any(abs(x) > coeff_bound for x in acc2):
                                continue
                            state = (d.alpha[w], acc2)
                            if state not in visited:
                                visited.add(state)
                                nxt.add(state)
                    frontier = nxt
                    cost += 1
        if best is not None:
            per_class.append(best)
            floors.append(False)
        elif max_depth is not None:
            per_class.append(max_depth)
            floors.append(True)
        else:
            raise HypothesisError("no curve found in a queried class within the search bound")
    return RepresentativityResult(min(per_class), tuple(per_class), coeff_bound, tuple(floors))


def recognize_thrice_punctured_sphere(
    surface: SpanningSurfaceSpec | TemplateSurface | SurfaceCharacteristics,
) -> bool:
    chars = surface if isinstance(surface, SurfaceCharacteristics) else surface.characteristics()
    return (
        chars.euler == -1
        and chars.boundary_components == 3
        and chars.orientable
        and chars.genus == 0
    )
