"""Engine discovery and the minimal scripting surface the harness uses.

The harness only needs three operations from the engine: build a manifold
from a PD code, read its volume, and Dehn-fill a cusp.  Everything is
accessed through this module so tests can substitute a stub and so a missing
engine degrades to skip-with-warning instead of failing the caller.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class EngineUnavailable(RuntimeError):
    pass


def load_engine():
    try:
        import snappy
    except ImportError as exc:
        raise EngineUnavailable(
            "the snappy engine is not importable in this environment"
        ) from exc
    return snappy


def manifold_from_pd(engine, pd_tuples):
    link = engine.Link([tuple(row) for row in pd_tuples])
    return link.exterior()


@dataclass(frozen=True)
class PDFile:
    """A parsed export file: crossing tuples plus the marked-cusp comment."""

    code: tuple[tuple[int, int, int, int], ...]
    marked_component: int | None

    @property
    def crossing_count(self) -> int:
        return len(self.code)


def parse_pd_file(text: str) -> PDFile:
    rows = re.findall(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]", text)
    if not rows:
        raise ValueError("no PD tuples found in the link file")
    code = tuple(tuple(int(x) for x in row) for row in rows)
    counts: dict[int, int] = {}
    for row in code:
        for label in row:
            counts[label] = counts.get(label, 0) + 1
    if any(v != 2 for v in counts.values()):
        raise ValueError("malformed PD code: arc labels must appear exactly twice")
    marked = None
    m = re.search(r"marked meridian component:\s*(\d+)", text)
    if m:
        marked = int(m.group(1))
    return PDFile(code, marked)
