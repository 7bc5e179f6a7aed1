"""Subdivision witnesses, oriented cycles, wheels and the constructive extractors."""

from .cycles import (Block, BlockStructure, CompositionError, FullyDirectedCycle,
                     OrientedCycle, block_count, blocks_of, close_walk, split_closed_walk)
from .extract import (BackMixedCycle, ExtractionStats, MixedCycle, classify_4block_a2,
                      extract_from_back_mixed, extract_from_mixed, extract_good_4block_a2,
                      extract_odd_cycle_a3, extract_wheel_a1, extract_wheel_a2)
from .subdivision import (ORACLE_CAP, FourBlocksWitness, oracle_find_subdivision,
                          validate_witness, witness_from_cycle)
from .wheels import WHEEL_CAP, Wheel, chordless_cycles, find_wheel, is_wheel

__all__ = [
    "BackMixedCycle", "Block", "BlockStructure", "CompositionError", "ExtractionStats",
    "FourBlocksWitness", "FullyDirectedCycle", "MixedCycle", "ORACLE_CAP", "OrientedCycle",
    "WHEEL_CAP", "Wheel", "block_count", "blocks_of", "chordless_cycles", "classify_4block_a2",
    "close_walk", "extract_from_back_mixed", "extract_from_mixed", "extract_good_4block_a2",
    "extract_odd_cycle_a3", "extract_wheel_a1", "extract_wheel_a2", "find_wheel", "is_wheel",
    "oracle_find_subdivision", "split_closed_walk", "validate_witness", "witness_from_cycle",
]
