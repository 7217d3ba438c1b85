"""Cognitive-radio channel (re)allocation via Needleman-Wunsch alignment."""
from .alignment import (
    DEFAULT_SCORING,
    Alignment,
    Direction,
    Nucleotide,
    ScoreMatrix,
    ScoringScheme,
    Sequence,
    align,
    alignment_score,
    brute_force_align,
    build_matrix,
    on_optimal_path,
    traceback,
)
from .allocator import AllocationResult, ReallocationDiff, Transition, allocate, diff, idle_channels
from .codec import ChannelSnapshot, encode_power, encode_snapshot, parse_sequence, sequence_to_string
from .simulator import Scenario, StepRecord, emit_csv, emit_text, load_scenario, parse_scenario, run

__version__ = "0.1.0"
