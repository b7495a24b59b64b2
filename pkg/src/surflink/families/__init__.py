"""Deterministic generators for every link family, dispatched by request."""

from __future__ import annotations

from typing import Any

from . import chain, hexagon_torus, layer_cake, lens, ribbon, square_torus
from .common import FamilyBundle, FamilyError

FAMILIES = (
    "square-torus",
    "hexagon-torus",
    "layer-cake",
    "lens-layer-cake",
    "knotted-ribbon",
    "chain",
)


def generate(family: str, **params: Any) -> FamilyBundle:
    """Build a family bundle from request parameters.

    Identical requests produce identical bundles: every generator is a pure
    function of its parameters.
    """
    if family == "square-torus":
        return square_torus.generate(params.get("genus", 1), params.get("twists", 0))
    if family == "hexagon-torus":
        return hexagon_torus.generate(params.get("genus", 1), params.get("twists", 0))
    if family == "layer-cake":
        return layer_cake.generate(
            params.get("layers", 1),
            params.get("polygon", 2),
            params.get("twists", 0),
            params.get("sheared", True),
        )
    if family == "lens-layer-cake":
        return lens.generate(
            tuple(params.get("lens", (2, 3))),
            params.get("alpha", 0),
            params.get("beta", 0),
            params.get("gamma", 0),
        )
    if family == "knotted-ribbon":
        word = params.get("tangle") or ribbon.ROW_WORDS[1]
        framings = tuple(params.get("framings", (0, 0, 0, 0)))
        return ribbon.generate(word, framings, params.get("expected_volume"))
    if family == "chain":
        return chain.generate(params.get("cover", 1), params.get("twisted", False))
    raise FamilyError(f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")
