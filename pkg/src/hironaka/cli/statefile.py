"""Lossless JSON state documents.

One object per state: variant id, dimension, point rows (integers, or "p/q"
strings for exact rationals), optional weights and step counter. Serialization
is canonical, so equal states produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from ..engine import GameState, initial_state
from ..rules import VariantRules, variant


class StateDocumentError(ValueError):
    """Malformed or inconsistent state document."""


def _encode_scalar(value):
    if isinstance(value, int):
        return value
    return f"{value.numerator}/{value.denominator}"


def _decode_scalar(raw):
    if isinstance(raw, bool):
        raise StateDocumentError(f"bad coordinate: {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise StateDocumentError(f"bad rational {raw!r}") from exc
    raise StateDocumentError(f"bad coordinate: {raw!r}")


def serialize_state(state: GameState, rules: VariantRules) -> str:
    doc = {
        "variant": rules.variant_id,
        "dim": state.config.dim,
        "points": [[_encode_scalar(c) for c in p] for p in state.config.points],
    }
    if state.weights is not None:
        doc["weights"] = list(state.weights)
    doc["step"] = state.step
    return json.dumps(doc, separators=(", ", ": ")) + "\n"


def parse_state(text: str) -> tuple[GameState, VariantRules]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateDocumentError(f"not valid JSON: {exc}") from exc
    return state_from_document(doc)


def state_from_document(doc) -> tuple[GameState, VariantRules]:
    if not isinstance(doc, dict):
        raise StateDocumentError("state document must be a JSON object")
    try:
        rules = variant(doc["variant"])
        dim = doc["dim"]
        raw_points = doc["points"]
    except KeyError as exc:
        raise StateDocumentError(f"missing field {exc}") from exc
    if not isinstance(dim, int) or not isinstance(raw_points, list) or not raw_points:
        raise StateDocumentError("dim must be an integer, points a nonempty array")
    points = []
    for row in raw_points:
        if not isinstance(row, list) or len(row) != dim:
            raise StateDocumentError(f"point {row!r} does not match dim={dim}")
        coords = tuple(_decode_scalar(c) for c in row)
        if any(c < 0 for c in coords):
            raise StateDocumentError(f"negative coordinate in {row!r}")
        points.append(coords)
    weights = doc.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or not all(
            isinstance(w, int) and not isinstance(w, bool) and w >= 0 for w in weights
        ):
            raise StateDocumentError("weights must be nonnegative integers")
        weights = tuple(weights)
    step = doc.get("step", 0)
    if not isinstance(step, int) or step < 0:
        raise StateDocumentError("step must be a nonnegative integer")
    try:
        state = initial_state(points, rules, weights=weights, step=step)
    except (ValueError, TypeError) as exc:
        raise StateDocumentError(str(exc)) from exc
    return state, rules


def state_document(state: GameState, rules: VariantRules) -> dict:
    """The state as a plain dict (for embedding in other documents)."""
    return json.loads(serialize_state(state, rules))


def load_state_file(path: str) -> tuple[GameState, VariantRules]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_state(fh.read())


def dump_state_file(path: str, state: GameState, rules: VariantRules) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_state(state, rules))


def parse_state_with_rules(
    text: str, override: Optional[str] = None
) -> tuple[GameState, VariantRules]:
    """Parse, optionally re-interpreting the points under another variant."""
    if override is None:
        return parse_state(text)
    doc = json.loads(text)
    doc["variant"] = override
    return state_from_document(doc)
