"""Hardness gadgets: fork-tail 3-SAT compiler and the nested-pair link stack."""

from ordered_coloring.gadgets.links import Link, certify, chain, chain_all, identity_link
from ordered_coloring.gadgets.permutation import (
    Rotation,
    compose,
    decompose_rotations,
    inverse,
    permutation_gadget,
    rotation_gadget,
)
from ordered_coloring.gadgets.indicator import (
    PairSystem,
    delta_map,
    gamma_map,
    indicator_gadget,
    notcc_gadget,
)
from ordered_coloring.gadgets.nae import (
    NaeDecodeMap,
    TripleSystem,
    decode_nae,
    nae_gadget,
    notccc_gadget,
    partition_clauses,
    reduce_nae3sat,
)
from ordered_coloring.gadgets.jj1 import Jj1Layout, build_jj1_instance, decode_assignment
from ordered_coloring.gadgets.verify import (
    LinkReport,
    PinningResult,
    identity_expectation,
    indicator_expectation,
    nae_expectation,
    notcc_expectation,
    notccc_expectation,
    permutation_expectation,
    verify_link_semantics,
)

__all__ = [
    "Link",
    "certify",
    "chain",
    "chain_all",
    "identity_link",
    "Rotation",
    "compose",
    "inverse",
    "decompose_rotations",
    "rotation_gadget",
    "permutation_gadget",
    "PairSystem",
    "gamma_map",
    "delta_map",
    "indicator_gadget",
    "notcc_gadget",
    "TripleSystem",
    "notccc_gadget",
    "nae_gadget",
    "partition_clauses",
    "reduce_nae3sat",
    "NaeDecodeMap",
    "decode_nae",
    "Jj1Layout",
    "build_jj1_instance",
    "decode_assignment",
    "LinkReport",
    "PinningResult",
    "verify_link_semantics",
    "identity_expectation",
    "permutation_expectation",
    "indicator_expectation",
    "notcc_expectation",
    "notccc_expectation",
    "nae_expectation",
]
