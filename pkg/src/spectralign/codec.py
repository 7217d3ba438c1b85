"""Map per-channel average power onto the four-letter channel alphabet.

Bands on the normalized 0-4 scale, each closed on its upper edge:
A = [0, 1] (idle or noise only), C = (1, 2], G = (2, 3], T = (3, 4].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .alignment import Nucleotide, Sequence
from .errors import PowerRangeError, SpectralignError

MIN_POWER = 0.0
MAX_POWER = 4.0

_BANDS = ((1.0, Nucleotide.A), (2.0, Nucleotide.C), (3.0, Nucleotide.G), (4.0, Nucleotide.T))


@dataclass(frozen=True)
class ChannelSnapshot:
    """Average power per channel F1..FM at one instant."""

    powers: tuple[float, ...]

    def __post_init__(self):
        powers = tuple(float(p) for p in self.powers)
        if not powers:
            raise SpectralignError("a snapshot needs at least one channel")
        object.__setattr__(self, "powers", powers)

    def __len__(self) -> int:
        return len(self.powers)

    @classmethod
    def from_csv(cls, text: str) -> "ChannelSnapshot":
        try:
            return cls(tuple(float(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise SpectralignError(f"bad power list {text!r}: {exc}") from None


def encode_power(p: float) -> Nucleotide:
    if math.isnan(p) or p < MIN_POWER or p > MAX_POWER:
        raise PowerRangeError(p)
    for upper, sym in _BANDS:
        if p <= upper:
            return sym
    raise AssertionError("unreachable")


def encode_snapshot(snap: ChannelSnapshot | Iterable[float]) -> Sequence:
    if not isinstance(snap, ChannelSnapshot):
        snap = ChannelSnapshot(tuple(snap))
    symbols = []
    for idx, p in enumerate(snap.powers, start=1):
        try:
            symbols.append(encode_power(p))
        except PowerRangeError:
            raise PowerRangeError(p, channel=idx) from None
    return Sequence(tuple(symbols))


def parse_sequence(text: str) -> Sequence:
    return Sequence.from_string(text)


def sequence_to_string(seq: Sequence) -> str:
    return str(seq)
