"""State-style spanning surfaces: region selections plus crossing bands.

A spanning surface is assembled from *pieces* and one half-twisted band per
crossing.  A piece is either a selected complementary region (FacePiece) or a
polygon-interior disk pushed to one side of the projection surface
(CapPiece); a cap's boundary follows a closed circuit of arcs, cutting one
corner at each crossing it visits.  The layer-cake families need caps because
their layer-polygon interiors are not complementary regions of the diagram.

Validity (checked by :func:`build_spanning_surface`):

* at every crossing exactly two of the four corners belong to pieces, and
  they are opposite corners (the band there joins them);
* every arc lies on the boundary of exactly one piece (so the realized
  surface has boundary equal to the link).

Corners are named by their lead dart: corner d sits between darts d and
sigma(d) counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .diagram import SurfaceLinkDiagram
from .flags import FlagComplex

ON_SURFACE = "on-surface"
INNER = "inner"
OUTER = "outer"
_TAGS = (ON_SURFACE, INNER, OUTER)


class InvalidSelectionError(ValueError):
    """A piece selection violating the corner or boundary condition."""


@dataclass(frozen=True)
class FacePiece:
    """A selected complementary region."""

    face: int
    tag: str = ON_SURFACE

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise InvalidSelectionError(f"unknown placement tag {self.tag!r}")


@dataclass(frozen=True)
class CapPiece:
    """A disk bounded by a closed strand circuit, pushed off the surface.

    ``corners`` lists the circuit's corner leads in cyclic order; consecutive
    corners must be joined by an arc of the diagram.
    """

    corners: tuple[int, ...]
    tag: str = INNER

    def __post_init__(self) -> None:
        if self.tag not in (INNER, OUTER):
            raise InvalidSelectionError("caps must be tagged inner or outer")
        if len(self.corners) < 1:
            raise InvalidSelectionError("cap circuit is empty")


Piece = FacePiece | CapPiece


@dataclass(frozen=True)
class PieceCircuit:
    """Normalized boundary data of a piece: corner leads and exit darts.

    ``exits[t]`` is the dart along which the circuit leaves ``corners[t]``
    toward ``corners[t+1]``; the arc of ``exits[t]`` is traversed once.
    """

    corners: tuple[int, ...]
    exits: tuple[int, ...]


def _face_circuit(diagram: SurfaceLinkDiagram, face: int) -> PieceCircuit:
    orbit = diagram.faces[face].darts
    corners = tuple(diagram.alpha[e] for e in orbit)
    exits = tuple(diagram.sigma(c) for c in corners)
    return PieceCircuit(corners, exits)


def _cap_circuit(diagram: SurfaceLinkDiagram, cap: CapPiece) -> PieceCircuit:
    corners = cap.corners
    for first_exit_is_lead in (False, True):
        exits: list[int] = []
        ok = True
        for t, lead in enumerate(corners):
            pair = (lead, diagram.sigma(lead))
            if t == 0:
                exit_dart = pair[0] if first_exit_is_lead else pair[1]
            else:
                entry = diagram.alpha[exits[-1]]
                if entry not in pair:
                    ok = False
                    break
                exit_dart = pair[0] if entry == pair[1] else pair[1]
            exits.append(exit_dart)
        if ok:
            entry = diagram.alpha[exits[-1]]
            pair0 = (corners[0], diagram.sigma(corners[0]))
            if entry in pair0 and entry != exits[0]:
                return PieceCircuit(corners, tuple(exits))
    raise InvalidSelectionError(f"cap circuit {corners} is not arc-connected")


@dataclass(frozen=True)
class SurfaceCharacteristics:
    euler: int
    boundary_components: int
    orientable: bool
    genus: int | None  # orientable genus; None when non-orientable
    crosscaps: int | None  # non-orientable genus; None when orientable


@dataclass(frozen=True)
class SpanningSurfaceSpec:
    diagram: SurfaceLinkDiagram
    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        self._validate()

    # -- validation ----------------------------------------------------------

    @cached_property
    def circuits(self) -> tuple[PieceCircuit, ...]:
        out = []
        for piece in self.pieces:
            if isinstance(piece, FacePiece):
                if not 0 <= piece.face < len(self.diagram.faces):
                    raise InvalidSelectionError(f"no face with index {piece.face}")
                out.append(_face_circuit(self.diagram, piece.face))
            else:
                out.append(_cap_circuit(self.diagram, piece))
        return tuple(out)

    def _validate(self) -> None:
        d = self.diagram
        corner_owner: dict[int, int] = {}
        for pi, circuit in enumerate(self.circuits):
            for lead in circuit.corners:
                if lead in corner_owner:
                    raise InvalidSelectionError(
                        f"corner {lead} at crossing {lead // 4} claimed twice"
                    )
                corner_owner[lead] = pi
        for c in range(d.crossing_count):
            leads = [4 * c + s for s in range(4) if 4 * c + s in corner_owner]
            if len(leads) != 2:
                raise InvalidSelectionError(
                    f"crossing {c} has {len(leads)} selected corners, need 2"
                )
            if (leads[0] + 2 - leads[1]) % 4 != 0:
                raise InvalidSelectionError(
                    f"selected corners at crossing {c} are not opposite"
                )
            tags = {self.pieces[corner_owner[k]].tag for k in leads}
            if tags == {INNER, OUTER}:
                raise InvalidSelectionError(
                    f"band at crossing {c} would join inner to outer placement"
                )
        arc_cover: dict[int, int] = {}
        for circuit in self.circuits:
            for e in circuit.exits:
                arc = d.arc_of(e)
                arc_cover[arc] = arc_cover.get(arc, 0) + 1
        for arc in d.arcs:
            got = arc_cover.get(arc, 0)
            if got != 1:
                raise InvalidSelectionError(
                    f"arc {arc} lies on the surface boundary {got} times, need exactly 1"
                )

    # -- derived data ----------------------------------------------------------

    @property
    def band_crossings(self) -> tuple[int, ...]:
        return tuple(range(self.diagram.crossing_count))

    @cached_property
    def corner_to_piece(self) -> dict[int, tuple[int, int]]:
        """corner lead -> (piece index, position in circuit)."""
        out: dict[int, tuple[int, int]] = {}
        for pi, circuit in enumerate(self.circuits):
            for t, lead in enumerate(circuit.corners):
                out[lead] = (pi, t)
        return out

    @cached_property
    def realized(self) -> "RealizedSurface":
        return RealizedSurface(self)

    def characteristics(self) -> SurfaceCharacteristics:
        return self.realized.characteristics


class RealizedSurface:
    """The spanning surface as a polygonal flag complex.

    Cells are the pieces (in spec order) followed by one band rectangle per
    crossing.  Piece cell sides alternate attach/arc around the circuit: side
    2t is the corner attachment at ``corners[t]``, side 2t+1 runs along the
    arc of ``exits[t]``.  A band's two free sides must each join boundary
    pieces of the *same link strand* (the strands pass straight through the
    crossing), which pins the attach gluing orientations up to a cell gauge;
    the gauge is fixed by always gluing the smaller corner reversing.  The
    half twist every crossing band carries is implicit in that pairing.
    """

    def __init__(self, spec: SpanningSurfaceSpec):
        self.spec = spec
        d = spec.diagram
        side_counts = [2 * len(c.corners) for c in spec.circuits]
        self.band_cell_offset = len(spec.circuits)
        band_leads = []
        for c in range(d.crossing_count):
            leads = sorted(k for k in (4 * c + s for s in range(4)) if k in spec.corner_to_piece)
            band_leads.append((leads[0], leads[1]))
            side_counts.append(4)
        self.band_leads = tuple(band_leads)

        def entry_exit(lead: int) -> tuple[int, int]:
            pi, t = spec.corner_to_piece[lead]
            exit_dart = spec.circuits[pi].exits[t]
            pair = (lead, d.sigma(lead))
            entry = pair[0] if exit_dart == pair[1] else pair[1]
            return entry, exit_dart

        gluings = []
        for c, (k1, k2) in enumerate(band_leads):
            band_cell = self.band_cell_offset + c
            e_in, _ = entry_exit(k1)
            f_in, f_out = entry_exit(k2)
            # free side 1 joins the strand piece entering at k1 with its
            # straight-through continuation at the opposite corner
            r2 = d.opposite(e_in) == f_out
            p1 = spec.corner_to_piece[k1]
            p2 = spec.corner_to_piece[k2]
            gluings.append(((p1[0], 2 * p1[1]), (band_cell, 0), True))
            gluings.append(((p2[0], 2 * p2[1]), (band_cell, 2), r2))
        self.complex = FlagComplex.build(side_counts, gluings)

    # flag addressing helpers ------------------------------------------------

    def piece_attach_flag(self, piece: int, pos: int, end: int) -> int:
        return self.complex.flag_id(piece, 2 * pos, end)

    def piece_arc_flag(self, piece: int, pos: int, end: int) -> int:
        return self.complex.flag_id(piece, 2 * pos + 1, end)

    def band_cell(self, crossing: int) -> int:
        return self.band_cell_offset + crossing

    @cached_property
    def characteristics(self) -> SurfaceCharacteristics:
        spec = self.spec
        euler = len(spec.pieces) - spec.diagram.crossing_count
        orientable = self.complex.orientable
        boundary = len(self.complex.boundary_circles)
        if orientable:
            genus2 = 2 - euler - boundary
            genus = genus2 // 2
            return SurfaceCharacteristics(euler, boundary, True, genus, None)
        crosscaps = 2 - euler - boundary
        return SurfaceCharacteristics(euler, boundary, False, None, crosscaps)


def build_spanning_surface(
    diagram: SurfaceLinkDiagram,
    faces: Iterable[int] = (),
    side_tags: dict[int, str] | None = None,
    caps: Iterable[CapPiece] = (),
) -> SpanningSurfaceSpec:
    """Spanning surface from selected face ids (plus optional cap pieces).

    ``side_tags`` maps face ids to placement tags; unlisted faces are
    on-surface.  Raises :class:`InvalidSelectionError` naming the offending
    crossing or arc when the selection is not a valid spanning surface.
    """
    side_tags = side_tags or {}
    pieces: list[Piece] = [FacePiece(f, side_tags.get(f, ON_SURFACE)) for f in faces]
    pieces.extend(caps)
    return SpanningSurfaceSpec(diagram, tuple(pieces))


def surface_characteristics(spec: SpanningSurfaceSpec) -> SurfaceCharacteristics:
    return spec.characteristics()


@dataclass(frozen=True)
class TemplateSurface:
    """A directly-specified surface for families whose spanning surfaces are
    not unions of diagram regions (the chain templates).

    Pieces are disks whose boundaries alternate attachment sites and link
    arcs; ``bands`` lists ((piece_a, position_a), (piece_b, position_b),
    twisted) attachments, with positions counterclockwise around each piece.
    """

    piece_count: int
    bands: tuple[tuple[tuple[int, int], tuple[int, int], bool], ...]
    label: str = ""

    @cached_property
    def complex(self) -> FlagComplex:
        counts = [0] * self.piece_count
        for (pa, ia), (pb, ib), _tw in self.bands:
            counts[pa] = max(counts[pa], ia + 1)
            counts[pb] = max(counts[pb], ib + 1)
        side_counts = [2 * max(1, k) for k in counts]
        band_offset = self.piece_count
        side_counts.extend([4] * len(self.bands))
        gluings = []
        for bi, ((pa, ia), (pb, ib), twisted) in enumerate(self.bands):
            cell = band_offset + bi
            gluings.append(((pa, 2 * ia), (cell, 0), True))
            gluings.append(((pb, 2 * ib), (cell, 2), not twisted))
        return FlagComplex.build(side_counts, gluings)

    def characteristics(self) -> SurfaceCharacteristics:
        euler = self.piece_count - len(self.bands)
        cx = self.complex
        orientable = cx.orientable
        boundary = len(cx.boundary_circles)
        if orientable:
            return SurfaceCharacteristics(euler, boundary, True, (2 - euler - boundary) // 2, None)
        return SurfaceCharacteristics(euler, boundary, False, None, 2 - euler - boundary)
