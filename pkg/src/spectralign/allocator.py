"""Turn a PU/SU alignment into per-SU channel assignments and measure churn.

An SU gets a channel only when the alignment places its demand symbol in the
same column as an idle (``A``) PU channel. Mismatches over busy channels and
gap columns leave the SU waiting. Channels are 1-based.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .alignment import (
    DEFAULT_SCORING,
    Alignment,
    Nucleotide,
    ScoringScheme,
    SeqLike,
    align,
    as_sequence,
)
from .errors import SpectralignError

IDLE = Nucleotide.A


def idle_channels(pu_seq: SeqLike) -> frozenset[int]:
    return frozenset(k for k, s in enumerate(as_sequence(pu_seq), start=1) if s is IDLE)


@dataclass(frozen=True)
class AllocationResult:
    """``assignments[k]`` is SU(k+1)'s channel, or ``None`` while it waits."""

    assignments: tuple[Optional[int], ...]
    score: int
    idle_set: frozenset[int]
    alignment: Optional[Alignment] = None

    @property
    def n_su(self) -> int:
        return len(self.assignments)

    @property
    def channels(self) -> tuple[int, ...]:
        return tuple(c for c in self.assignments if c is not None)

    @property
    def allocated_count(self) -> int:
        return len(self.channels)

    @property
    def waiting_count(self) -> int:
        return self.n_su - self.allocated_count

    @classmethod
    def all_waiting(cls, n_su: int) -> "AllocationResult":
        return cls((None,) * n_su, 0, frozenset())


def allocate(pu_seq: SeqLike, su_seq: SeqLike, scoring: ScoringScheme = DEFAULT_SCORING) -> AllocationResult:
    pu_seq, su_seq = as_sequence(pu_seq), as_sequence(su_seq)
    if not pu_seq or not su_seq:
        raise SpectralignError("PU and SU sequences must both be non-empty")
    al = align(pu_seq, su_seq, scoring)

    assignments: list[Optional[int]] = []
    channel = 0
    for pu, su in al.columns:
        if pu is not None:
            channel += 1
        if su is None:
            continue
        assignments.append(channel if pu is IDLE else None)

    return AllocationResult(tuple(assignments), al.score, idle_channels(pu_seq), al)


class Transition(str, enum.Enum):
    STABLE = "stable"
    MOVED = "moved"
    EVICTED = "evicted"
    ADMITTED = "admitted"
    WAITING = "waiting"


@dataclass(frozen=True)
class ReallocationDiff:
    transitions: tuple[Transition, ...]

    def _count(self, kind: Transition) -> int:
        return Counter(self.transitions)[kind]

    @property
    def stable(self) -> int:
        return self._count(Transition.STABLE)

    @property
    def moved(self) -> int:
        return self._count(Transition.MOVED)

    @property
    def evicted(self) -> int:
        return self._count(Transition.EVICTED)

    @property
    def admitted(self) -> int:
        return self._count(Transition.ADMITTED)

    @property
    def still_waiting(self) -> int:
        return self._count(Transition.WAITING)


def _classify(before: Optional[int], after: Optional[int]) -> Transition:
    if before is None:
        return Transition.WAITING if after is None else Transition.ADMITTED
    if after is None:
        return Transition.EVICTED
    return Transition.STABLE if before == after else Transition.MOVED


def diff(prev: AllocationResult, next: AllocationResult) -> ReallocationDiff:
    if prev.n_su != next.n_su:
        raise SpectralignError(f"SU count changed from {prev.n_su} to {next.n_su}")
    return ReallocationDiff(tuple(_classify(a, b) for a, b in zip(prev.assignments, next.assignments)))
