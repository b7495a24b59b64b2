"""Quotient 2-orbifolds of spanning surfaces and the rigidity test.

The quotient works on the barycentric flag triangulation: every flag of the
realized surface is a triangle with corners V (cell-complex vertex), E (edge
midpoint) and F (cell center), and sides numbered by the adjacency that
crosses them (side i is crossed by ``s_i``).  A certificate group acts on
flags; the quotient triangles are the orbits and the induced adjacencies may
acquire fixed sides (folds), which are exactly the mirror boundary of the
quotient orbifold.  Corner orders fall out of fan-length ratios:

* interior corner: cone point of order L_orig / L_quot (1 means regular);
* corner between two mirror segments: reflector of order L_orig / (2 L_quot);
* corner where a mirror meets the link boundary: reflector of order infinity
  (the link is an open boundary of the quotient);
* corner between two link segments: regular boundary (merged away).

Signatures use ``math.inf`` for infinite reflector orders and exact
``fractions.Fraction`` arithmetic throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .flags import LINK, MIRROR, FlagComplex
from .spanning import SpanningSurfaceSpec, TemplateSurface
from .symmetry import CertificateError, SymmetryCertificate, certificate_problem

GROUP_ORDER_BOUND = 512

INF = math.inf

# corner types and the side types adjacent to each
_CORNER_SIDES = {"V": (1, 2), "E": (0, 2), "F": (0, 1)}


class GroupTooLargeError(RuntimeError):
    pass


class QuotientError(ValueError):
    pass


def _order_key(n) -> tuple[int, float]:
    return (0, float(n)) if n != INF else (1, 0.0)


@dataclass(frozen=True)
class BoundaryCircle:
    """Cyclic reflector data of one boundary circle of the quotient.

    ``segments[t]`` is the label of the boundary segment following
    ``corners[t]``; a circle without reflectors has one segment and no
    corners.
    """

    corners: tuple[float, ...]
    segments: tuple[str, ...]

    def canonical(self) -> "BoundaryCircle":
        if not self.corners:
            return self
        n = len(self.corners)
        pairs = list(zip(self.corners, self.segments))
        best = min(
            tuple(pairs[(i + t) % n] for t in range(n))
            for i in range(n)
        )
        return BoundaryCircle(tuple(c for c, _ in best), tuple(s for _, s in best))


@dataclass(frozen=True)
class OrbifoldSignature:
    underlying_genus: int
    orientable: bool
    boundary: tuple[BoundaryCircle, ...]
    cone_points: tuple[int, ...]

    def canonical(self) -> "OrbifoldSignature":
        circles = tuple(sorted((c.canonical() for c in self.boundary), key=_circle_key))
        return OrbifoldSignature(
            self.underlying_genus, self.orientable, circles, tuple(sorted(self.cone_points))
        )

    @property
    def corner_orders(self) -> tuple[float, ...]:
        out = []
        for circle in self.boundary:
            out.extend(circle.corners)
        return tuple(sorted(out, key=_order_key))

    @property
    def underlying_euler(self) -> int:
        b = len(self.boundary)
        if self.orientable:
            return 2 - 2 * self.underlying_genus - b
        return 2 - self.underlying_genus - b

    def is_disk(self) -> bool:
        return (
            self.orientable
            and self.underlying_genus == 0
            and len(self.boundary) == 1
        )

    def notation(self) -> str:
        """Canonical string, e.g. ``D(;4,2,inf)`` for a mirrored disk."""
        sig = self.canonical()
        base = "D" if sig.is_disk() else (
            f"S{sig.underlying_genus}" if sig.orientable else f"N{sig.underlying_genus}"
        )
        cones = ",".join(str(m) for m in sig.cone_points)
        circles = []
        for circle in sig.boundary:
            if not circle.corners:
                circles.append(f"[{circle.segments[0]}]")
            else:
                circles.append(",".join("inf" if c == INF else str(int(c)) for c in circle.corners))
        return f"{base}({cones};{'|'.join(circles)})" if not sig.is_disk() else f"D({cones};{circles[0]})"


def _circle_key(circle: BoundaryCircle):
    return (
        len(circle.corners),
        tuple(_order_key(c) for c in circle.corners),
        circle.segments,
    )


# ---------------------------------------------------------------------------
# group closure


def close_group(
    flag_count: int, generators: Sequence[Sequence[int]], bound: int = GROUP_ORDER_BOUND
) -> list[tuple[int, ...]]:
    identity = tuple(range(flag_count))
    group = {identity}
    frontier = [identity]
    gens = [tuple(g) for g in generators]
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = tuple(g[x] for x in current)
            if nxt not in group:
                if len(group) >= bound:
                    raise GroupTooLargeError(
                        f"certificate group exceeds the closure bound {bound}"
                    )
                group.add(nxt)
                frontier.append(nxt)
    return sorted(group)


# ---------------------------------------------------------------------------
# quotient


def quotient(
    spec: SpanningSurfaceSpec | TemplateSurface,
    certificates: Sequence[SymmetryCertificate] = (),
) -> OrbifoldSignature:
    sig, _log = quotient_with_log(spec, certificates)
    return sig


def quotient_with_log(
    spec: SpanningSurfaceSpec | TemplateSurface,
    certificates: Sequence[SymmetryCertificate] = (),
) -> tuple[OrbifoldSignature, dict]:
    if isinstance(spec, TemplateSurface):
        cx = spec.complex
        if certificates:
            raise QuotientError("template surfaces carry no certificates")
    else:
        cx = spec.realized.complex
        for cert in certificates:
            problem = certificate_problem(spec, cert)
            if problem:
                raise CertificateError(f"{cert.label}: {problem}")
    group = close_group(cx.flag_count, [c.flag_map for c in certificates])
    for g in group:
        if any(g[f] == f for f in range(cx.flag_count)) and g != tuple(range(cx.flag_count)):
            raise QuotientError(
                "certificate group does not act freely on flags; "
                "a nontrivial element fixes a flag"
            )
    sig = _extract_signature(cx, group)
    log = {
        "group_order": len(group),
        "flags": cx.flag_count,
        "orbit_count": cx.flag_count and len({min(g[f] for g in group) for f in range(cx.flag_count)}),
        "certificates": [c.label for c in certificates],
        "note": "embedding/twisting metadata on quotient edges is discarded; "
        "signatures record the combinatorial shadow only",
    }
    return sig.canonical(), log


def _extract_signature(cx: FlagComplex, group: Sequence[tuple[int, ...]]) -> OrbifoldSignature:
    n = cx.flag_count
    # orbit representatives
    rep = list(range(n))
    for g in group:
        for f in range(n):
            if g[f] < rep[f]:
                rep[f] = g[f]
    changed = True
    while changed:
        changed = False
        for f in range(n):
            if rep[rep[f]] < rep[f]:
                rep[f] = rep[rep[f]]
                changed = True
    reps = sorted({rep[f] for f in range(n)})
    idx = {r: i for i, r in enumerate(reps)}
    q = len(reps)

    def orbit_map(s: Sequence[int]) -> list[int]:
        return [idx[rep[s[reps[i]]]] for i in range(q)]

    sb = [orbit_map(cx.s0), orbit_map(cx.s1), orbit_map(cx.s2)]

    # side status per (quotient flag, adjacency index)
    # 'glued' / 'link' (original boundary) / 'mirror' (fold)
    status = [[None] * 3 for _ in range(q)]
    for i in range(q):
        f = reps[i]
        for a, s in enumerate((cx.s0, cx.s1, cx.s2)):
            if a == 2 and cx.is_boundary(f):
                status[i][a] = LINK
            elif sb[a][i] == i:
                status[i][a] = MIRROR
            else:
                status[i][a] = "glued"

    # original fan sizes per corner type
    orig_fan = {t: _fan_sizes(cx.s0, cx.s1, cx.s2, cx, t) for t in _CORNER_SIDES}

    # quotient corner classes per type
    corner_class: dict[str, list[int]] = {}
    corner_data: dict[tuple[str, int], dict] = {}
    for t, (si, sj) in _CORNER_SIDES.items():
        comp = [-1] * q
        comps = 0
        for start in range(q):
            if comp[start] >= 0:
                continue
            stack = [start]
            comp[start] = comps
            members = []
            while stack:
                x = stack.pop()
                members.append(x)
                for a in (si, sj):
                    if status[x][a] == "glued":
                        y = sb[a][x]
                        if comp[y] < 0:
                            comp[y] = comps
                            stack.append(y)
            free_slots = [
                (x, a) for x in members for a in (si, sj) if status[x][a] != "glued"
            ]
            size_orig = orig_fan[t][reps[members[0]]]
            corner_data[(t, comps)] = {
                "size": len(members),
                "orig": size_orig,
                "free": free_slots,
            }
            comps += 1
        corner_class[t] = comp

    # cone points and corner orders
    cones: list[int] = []
    corner_order: dict[tuple[str, int], float] = {}
    for (t, cid), data in corner_data.items():
        lq, lo, free = data["size"], data["orig"], data["free"]
        if not free:
            if lo % lq != 0:
                raise QuotientError("non-integral cone order; invalid group action")
            m = lo // lq
            if m > 1:
                cones.append(m)
            continue
        if len(free) != 2:
            raise QuotientError(
                f"boundary corner with {len(free)} free sides; complex is malformed"
            )
        labels = sorted(status[x][a] for x, a in free)
        if labels == [MIRROR, MIRROR]:
            if lo % (2 * lq) != 0:
                raise QuotientError("non-integral reflector order")
            order = lo // (2 * lq)
            corner_order[(t, cid)] = order if order > 1 else 1
        elif labels == [LINK, MIRROR]:
            corner_order[(t, cid)] = INF
        else:  # link-link
            if lo != lq:
                raise QuotientError("folded link boundary without a mirror")
            corner_order[(t, cid)] = 1  # regular boundary point

    # Euler characteristic of the underlying space
    v_classes = set()
    for t in _CORNER_SIDES:
        for i in range(q):
            v_classes.add((t, corner_class[t][i]))
    side_class = {}
    side_id = 0
    for i in range(q):
        for a in range(3):
            if (i, a) in side_class:
                continue
            side_class[(i, a)] = side_id
            if status[i][a] == "glued":
                side_class[(sb[a][i], a)] = side_id
            side_id += 1
    chi_underlying = len(v_classes) - side_id + q

    # orientability of the underlying space
    color = {}
    orientable = True
    for start in range(q):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for a in range(3):
                if status[x][a] != "glued":
                    continue
                y = sb[a][x]
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    orientable = False
    # boundary tracing: slots (free sides) are edges, boundary corner classes
    # are nodes of degree 2 (with multiplicity); circles are the closed walks
    slot_ends: dict[tuple[int, int], tuple[tuple[str, int], tuple[str, int]]] = {}
    incidences: dict[tuple[str, int], list[tuple[tuple[int, int], int]]] = {}
    side_corners = {0: ("E", "F"), 1: ("V", "F"), 2: ("V", "E")}
    for i in range(q):
        for a in range(3):
            if status[i][a] == "glued":
                continue
            t1, t2 = side_corners[a]
            c1 = (t1, corner_class[t1][i])
            c2 = (t2, corner_class[t2][i])
            slot_ends[(i, a)] = (c1, c2)
            incidences.setdefault(c1, []).append(((i, a), 0))
            incidences.setdefault(c2, []).append(((i, a), 1))
    for corner, inc in incidences.items():
        if len(inc) != 2:
            raise QuotientError(f"boundary corner {corner} has degree {len(inc)}")

    circles: list[BoundaryCircle] = []
    unused = set(slot_ends)
    while unused:
        start = min(unused)
        walk_slots: list[tuple[int, int]] = []
        walk_corners: list[tuple[str, int]] = []
        slot, entry_end = start, 0
        while True:
            unused.discard(slot)
            walk_slots.append(slot)
            exit_end = 1 - entry_end
            exit_corner = slot_ends[slot][exit_end]
            walk_corners.append(exit_corner)
            inc = incidences[exit_corner]
            here = (slot, exit_end)
            other = inc[1] if inc[0] == here else inc[0]
            slot, entry_end = other
            if (slot, entry_end) == (start, 0):
                break
            if slot not in unused:
                raise QuotientError("boundary trace failed to close")
        labels = [status[i][a] for i, a in walk_slots]
        orders = [corner_order[c] for c in walk_corners]
        circles.append(_assemble_circle(labels, orders))

    genus = (2 - chi_underlying - len(circles)) // 2 if orientable else (2 - chi_underlying - len(circles))
    if orientable and (2 - chi_underlying - len(circles)) % 2:
        raise QuotientError("inconsistent underlying characteristic")
    return OrbifoldSignature(genus, orientable, tuple(circles), tuple(sorted(cones)))


def _fan_sizes(s0, s1, s2, cx: FlagComplex, corner_type: str) -> list[int]:
    si, sj = _CORNER_SIDES[corner_type]
    maps = {0: s0, 1: s1, 2: s2}
    n = cx.flag_count
    comp = [-1] * n
    sizes = [0] * n
    for start in range(n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = start
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for a in (si, sj):
                if a == 2 and cx.is_boundary(x):
                    continue
                y = maps[a][x]
                if comp[y] < 0:
                    comp[y] = start
                    stack.append(y)
        for m in members:
            sizes[m] = len(members)
    return sizes


def _assemble_circle(labels: list[str], orders: list[float]) -> BoundaryCircle:
    """Merge boundary slots across regular corners into maximal segments.

    ``orders[t]`` is the corner following slot t; regular corners (order 1)
    disappear and their two neighbouring slots fuse into one segment.
    """
    k = len(labels)
    reflectors = [t for t in range(k) if orders[t] != 1]
    if not reflectors:
        if len(set(labels)) != 1:
            raise QuotientError("mixed boundary labels without a reflector corner")
        return BoundaryCircle((), (labels[0],))
    corners = []
    segments = []
    for pos, t in enumerate(reflectors):
        t_next = reflectors[(pos + 1) % len(reflectors)]
        corners.append(orders[t])
        span = (t_next - t) % k or k
        seg_labels = {labels[(t + s) % k] for s in range(1, span + 1)}
        if len(seg_labels) != 1:
            raise QuotientError("boundary segment with mixed labels")
        segments.append(seg_labels.pop())
    return BoundaryCircle(tuple(corners), tuple(segments))


def free_quotient(
    cx: FlagComplex, group: Sequence[tuple[int, ...]]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[str | None, ...]]:
    """Quotient flag system of a fold-free action (a covering of surfaces).

    Returns relabeled (s0, s1, s2, boundary labels); raises QuotientError if
    the quotient acquires mirror folds (is not itself a surface).
    """
    n = cx.flag_count
    rep = list(range(n))
    for g in group:
        for f in range(n):
            if g[f] < rep[f]:
                rep[f] = g[f]
    reps = sorted({rep[f] for f in range(n)})
    idx = {r: i for i, r in enumerate(reps)}

    def induced(s: Sequence[int]) -> tuple[int, ...]:
        return tuple(idx[rep[s[r]]] for r in reps)

    s0, s1, s2 = induced(cx.s0), induced(cx.s1), induced(cx.s2)
    labels = tuple(cx.boundary_label[r] for r in reps)
    for i, r in enumerate(reps):
        for a, s in ((0, s0), (1, s1), (2, s2)):
            original_fixed = (cx.s0, cx.s1, cx.s2)[a][r] == r
            if s[i] == i and not original_fixed:
                raise QuotientError("quotient folds a flag adjacency; not a free surface quotient")
    return s0, s1, s2, labels


def canonical_flag_encoding(
    s0: Sequence[int], s1: Sequence[int], s2: Sequence[int], labels: Sequence[str | None]
) -> tuple:
    """Isomorphism-invariant encoding of a labeled flag system (minimum over
    BFS relabelings from every start flag)."""
    n = len(s0)
    best = None
    for start in range(n):
        number = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            f = order[i]
            i += 1
            for s in (s0, s1, s2):
                g = s[f]
                if g not in number:
                    number[g] = len(order)
                    order.append(g)
        if len(order) != n:
            raise QuotientError("flag system is disconnected; canonical form undefined")
        encoding = tuple(
            (number[s0[f]], number[s1[f]], number[s2[f]], labels[f]) for f in order
        )
        if best is None or encoding < best:
            best = encoding
    return best


# ---------------------------------------------------------------------------
# reduction, characteristic, rigidity


def reduce_infinite_corners(sig: OrbifoldSignature) -> OrbifoldSignature:
    """Collapse every link segment whose two endpoint corners are infinite."""
    circles = []
    for circle in sig.boundary:
        corners = list(circle.corners)
        segments = list(circle.segments)
        changed = True
        while changed and len(corners) >= 2:
            changed = False
            n = len(corners)
            for t in range(n):
                nxt = (t + 1) % n
                if segments[t] == LINK and corners[t] == INF and corners[nxt] == INF:
                    # merge corner t and nxt across segment t
                    del segments[t]
                    del corners[nxt]
                    changed = True
                    break
        circles.append(BoundaryCircle(tuple(corners), tuple(segments)))
    return OrbifoldSignature(
        sig.underlying_genus, sig.orientable, tuple(circles), sig.cone_points
    ).canonical()


def orbifold_euler_characteristic(sig: OrbifoldSignature) -> Fraction:
    chi = Fraction(sig.underlying_euler)
    for m in sig.cone_points:
        chi -= 1 - Fraction(1, m)
    for n in sig.corner_orders:
        term = Fraction(1) if n == INF else (1 - Fraction(1, int(n)))
        chi -= Fraction(term, 2)
    return chi


@dataclass(frozen=True)
class RigidityVerdict:
    rigid: bool | str  # True / False / "unknown"
    reciprocal_sum: Fraction | None
    chi_orb: Fraction


def is_rigid_hyperbolic(sig: OrbifoldSignature) -> RigidityVerdict:
    """Triangle-orbifold rigidity: a mirrored disk with three corner
    reflectors of reciprocal sum < 1; anything else is reported unknown."""
    chi = orbifold_euler_characteristic(sig)
    if not sig.is_disk() or sig.cone_points:
        return RigidityVerdict("unknown", None, chi)
    circle = sig.boundary[0]
    if len(circle.corners) != 3 or any(s != MIRROR for s in circle.segments):
        return RigidityVerdict("unknown", None, chi)
    total = Fraction(0)
    for n in circle.corners:
        if n != INF:
            total += Fraction(1, int(n))
    return RigidityVerdict(total < 1, total, chi)
