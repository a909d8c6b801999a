"""Declarative rule sets for the game variants.

Each variant is a bundle of orthogonal knobs: the transform offset, how the
state is pruned after a move, the translation applied afterwards, when the
game ends, and which moves are legal for either player.
"""

from __future__ import annotations

from dataclasses import dataclass

PRUNE_DOMINATION = "domination"
PRUNE_VERTICES = "hull-vertices"
SHIFT_NONE = "none"
SHIFT_AXES = "axes"
SHIFT_DIAGONAL = "diagonal"
TERMINAL_SINGLETON = "singleton"
TERMINAL_SUM_LE_1 = "some-point-sum-le-1"
HOST_SIZE_2 = "size-ge-2"
HOST_SIZE_2_SUM_1 = "size-ge-2-and-sum-ge-1"
AGENT_ANY = "any-in-I"
AGENT_WEIGHT_MINIMAL = "weight-minimal-in-I"


@dataclass(frozen=True)
class VariantRules:
    variant_id: str
    transform_offset: int
    pruning: str
    shift: str
    terminal: str
    host_legality: str
    agent_legality: str
    rational_scalars: bool
    uses_weights: bool


BASIC = VariantRules(
    variant_id="basic",
    transform_offset=0,
    pruning=PRUNE_DOMINATION,
    shift=SHIFT_NONE,
    terminal=TERMINAL_SINGLETON,
    host_legality=HOST_SIZE_2,
    agent_legality=AGENT_ANY,
    rational_scalars=False,
    uses_weights=False,
)

BASIC_SHIFTED = VariantRules(
    variant_id="basic-shifted",
    transform_offset=0,
    pruning=PRUNE_DOMINATION,
    shift=SHIFT_AXES,
    terminal=TERMINAL_SINGLETON,
    host_legality=HOST_SIZE_2,
    agent_legality=AGENT_ANY,
    rational_scalars=False,
    uses_weights=False,
)

HAUSER = VariantRules(
    variant_id="hauser",
    transform_offset=0,
    pruning=PRUNE_VERTICES,
    shift=SHIFT_NONE,
    terminal=TERMINAL_SINGLETON,
    host_legality=HOST_SIZE_2,
    agent_legality=AGENT_ANY,
    rational_scalars=False,
    uses_weights=False,
)

POLYHEDRA = VariantRules(
    variant_id="polyhedra",
    transform_offset=-1,
    pruning=PRUNE_VERTICES,
    shift=SHIFT_NONE,
    terminal=TERMINAL_SUM_LE_1,
    host_legality=HOST_SIZE_2_SUM_1,
    agent_legality=AGENT_ANY,
    rational_scalars=True,
    uses_weights=False,
)

THOM = VariantRules(
    variant_id="thom",
    transform_offset=0,
    pruning=PRUNE_VERTICES,
    shift=SHIFT_DIAGONAL,
    terminal=TERMINAL_SINGLETON,
    host_legality=HOST_SIZE_2_SUM_1,
    agent_legality=AGENT_WEIGHT_MINIMAL,
    rational_scalars=False,
    uses_weights=True,
)

VARIANTS = {
    rules.variant_id: rules for rules in (BASIC, BASIC_SHIFTED, HAUSER, POLYHEDRA, THOM)
}


def variant(variant_id: str) -> VariantRules:
    try:
        return VARIANTS[variant_id]
    except KeyError:
        raise KeyError(
            f"unknown variant {variant_id!r}; known: {', '.join(sorted(VARIANTS))}"
        ) from None
