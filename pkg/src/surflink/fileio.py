"""Canonical diagram files, Gauss codes and verification reports.

The diagram file is canonical JSON: sorted keys, compact separators, one
trailing newline, integers only.  Semantically equal diagrams serialize to
byte-identical files, and parsing validates every structural invariant
before accepting (round trips are dart-for-dart identities).  Infinite
reflector orders appear as the string "inf" wherever signatures are
serialized.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .diagram import DiagramError, SurfaceLinkDiagram
from .gluing import GluingDiagram, GluingError

SCHEMA_VERSION = "1"


class DiagramFormatError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def serialize_diagram(diagram: SurfaceLinkDiagram, metadata: dict[str, Any] | None = None) -> str:
    sigma = [diagram.sigma(d) for d in range(diagram.dart_count)]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "surface": {
            "side_count": diagram.surface.side_count,
            "pairing": list(diagram.surface.pairing),
            "reversing": [int(r) for r in diagram.surface.reversing],
        },
        "crossings": diagram.crossing_count,
        "sigma": sigma,
        "edge_involution": list(diagram.alpha),
        "over_strand": list(diagram.over),
        "side_crossings": {
            str(dart): [[s, sg] for s, sg in word]
            for dart, word in sorted(diagram.arc_words.items())
        },
        "derived": {
            "face_sizes": list(diagram.face_sizes),
            "components": len(diagram.components),
            "euler_characteristic": diagram.euler_characteristic,
        },
        "metadata": metadata or {},
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _require(payload: dict, field: str):
    if field not in payload:
        raise DiagramFormatError(field, "missing required field")
    return payload[field]


def parse_diagram(text: str) -> SurfaceLinkDiagram:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFormatError("document", f"not valid JSON: {exc}") from exc
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise DiagramFormatError("schema_version", f"unsupported version {payload.get('schema_version')!r}")
    sdata = _require(payload, "surface")
    try:
        surface = GluingDiagram(
            int(_require(sdata, "side_count")),
            tuple(int(x) for x in _require(sdata, "pairing")),
            tuple(bool(x) for x in _require(sdata, "reversing")),
        )
    except GluingError as exc:
        raise DiagramFormatError("surface", str(exc)) from exc
    alpha = tuple(int(x) for x in _require(payload, "edge_involution"))
    for d, e in enumerate(alpha):
        if not 0 <= e < len(alpha):
            raise DiagramFormatError("edge_involution", f"dart {d} maps out of range")
        if e == d:
            raise DiagramFormatError("edge_involution", f"fixed point at dart {d}")
        if alpha[e] != d:
            raise DiagramFormatError("edge_involution", f"not an involution at dart {d}")
    sigma = [int(x) for x in _require(payload, "sigma")]
    canonical = [4 * (d // 4) + (d + 1) % 4 for d in range(len(alpha))]
    if sigma != canonical:
        raise DiagramFormatError(
            "sigma", "vertex rotation must be in canonical form (4c..4c+3 cycles)"
        )
    over = tuple(int(x) for x in _require(payload, "over_strand"))
    if any(v not in (0, 1) for v in over):
        raise DiagramFormatError("over_strand", "entries must be 0 or 1")
    if len(over) != len(alpha) // 4:
        raise DiagramFormatError("over_strand", "need exactly one entry per crossing")
    if int(_require(payload, "crossings")) != len(alpha) // 4:
        raise DiagramFormatError("crossings", "does not match the dart count")
    words = {}
    for key, word in _require(payload, "side_crossings").items():
        try:
            dart = int(key)
        except ValueError:
            raise DiagramFormatError("side_crossings", f"non-integer dart key {key!r}")
        words[dart] = tuple((int(s), int(sg)) for s, sg in word)
    try:
        diagram = SurfaceLinkDiagram(surface, alpha, over, words)
    except DiagramError as exc:
        raise DiagramFormatError("diagram", str(exc)) from exc
    derived = payload.get("derived") or {}
    if derived:
        if "face_sizes" in derived and list(diagram.face_sizes) != [int(x) for x in derived["face_sizes"]]:
            raise DiagramFormatError("derived.face_sizes", "stale derived block does not match recomputation")
        if "components" in derived and len(diagram.components) != int(derived["components"]):
            raise DiagramFormatError("derived.components", "stale derived block does not match recomputation")
        if "euler_characteristic" in derived and diagram.euler_characteristic != int(
            derived["euler_characteristic"]
        ):
            raise DiagramFormatError("derived.euler_characteristic", "stale derived block")
    return diagram


def diagram_metadata(text: str) -> dict:
    try:
        return json.loads(text).get("metadata", {}) or {}
    except json.JSONDecodeError:
        return {}


def inputs_hash(text: str) -> str:
    payload = json.loads(text)
    payload.pop("metadata", None)
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


# ---------------------------------------------------------------------------
# Gauss code


def crossing_sign(diagram: SurfaceLinkDiagram, crossing: int) -> int:
    """Sign convention: +1 when the under exit is one rotation step
    counterclockwise from the over exit."""
    exits = {d for comp in diagram.components for d in comp}
    over_exit = under_exit = None
    for s in range(4):
        dart = 4 * crossing + s
        if dart in exits:
            if diagram.is_over(dart):
                over_exit = dart
            else:
                under_exit = dart
    if over_exit is None or under_exit is None:
        raise DiagramError(f"crossing {crossing} lacks over/under exits")
    return 1 if diagram.sigma(over_exit) == under_exit else -1


def export_gauss_code(diagram: SurfaceLinkDiagram) -> str:
    """Signed Gauss sequence of a one-component diagram.

    Each passage is (crossing id, O/U, sign); the surface data follows as a
    comment block so the virtual realization is reconstructible.
    """
    comps = diagram.components
    if len(comps) != 1:
        raise DiagramError(
            f"Gauss code needs a single component, diagram has {len(comps)}; "
            "export per-component instead"
        )
    signs = {c: crossing_sign(diagram, c) for c in range(diagram.crossing_count)}
    tokens = []
    for exit_dart in comps[0]:
        c = exit_dart // 4
        ou = "O" if diagram.is_over(exit_dart) else "U"
        tokens.append(f"{ou}{c + 1}{'+' if signs[c] > 0 else '-'}")
    lines = [" ".join(tokens)]
    lines.append(f"# surface: {diagram.surface.side_count}-gon, opposite sides identified")
    lines.append(f"# pairing: {' '.join(map(str, diagram.surface.pairing))}")
    for dart, word in sorted(diagram.arc_words.items()):
        if word:
            body = " ".join(f"{s}{sg:+d}" for s, sg in word)
            lines.append(f"# arc {dart} side word: {body}")
    return "\n".join(lines) + "\n"


class UnsupportedAmbientError(ValueError):
    pass


def export_link_file(bundle) -> str:
    """PD-code text for a bundle whose link lives in the 3-sphere.

    Ribbon bundles include their marked meridian component; ambients without
    a 3-sphere projection are rejected.
    """
    from . import pd

    if bundle.ambient not in ("three-sphere", "solid-torus"):
        raise UnsupportedAmbientError(
            f"{bundle.ambient} has no 3-sphere projection; "
            "link-file export covers the ribbon and chain families"
        )
    export_diagram = getattr(bundle, "export_diagram", None)
    if export_diagram is not None:
        code = pd.diagram_to_pd(export_diagram)
    else:
        code = bundle.pd_code or pd.diagram_to_pd(bundle.diagram)
    lines = [pd.pd_text(code)]
    if bundle.marked_component is not None:
        lines.append(f"# marked meridian component: {bundle.marked_component}")
    lines.append(f"# components: {pd.pd_components(code)}")
    return "\n".join(lines) + "\n"
