"""Restricted two-adaptive bitprobe schemes."""

from ._bitprobe import (
    Scheme,
    adversarial_pair,
    badness,
    can_store,
    compare_bounds,
    fixture,
    general_bound,
    i_universe,
    modify,
    synth_min_space,
    theorem_bound,
    two_table_contradiction,
    universe_via_paths,
)

__all__ = [
    "Scheme",
    "adversarial_pair",
    "badness",
    "can_store",
    "compare_bounds",
    "fixture",
    "general_bound",
    "i_universe",
    "modify",
    "synth_min_space",
    "theorem_bound",
    "two_table_contradiction",
    "universe_via_paths",
]
