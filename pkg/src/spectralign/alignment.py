"""Needleman-Wunsch global alignment with a linear gap penalty.

The score matrix has one row per symbol of ``seq2`` (plus a leading gap row)
and one column per symbol of ``seq1`` (plus a leading gap column), so
``cells[i][j]`` is the best score aligning ``seq2[:i]`` with ``seq1[:j]``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import MalformedAlignmentError, SequenceParseError, SequenceSizeError

MAX_LENGTH = 4096
BRUTE_FORCE_MAX_LENGTH = 8
GAP_CHAR = "-"


class Nucleotide(str, enum.Enum):
    A = "A"
    C = "C"
    G = "G"
    T = "T"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Sequence:
    symbols: tuple[Nucleotide, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(Nucleotide(s) for s in self.symbols))

    @classmethod
    def from_string(cls, text: str) -> "Sequence":
        symbols = []
        for pos, ch in enumerate(text):
            try:
                symbols.append(Nucleotide(ch.upper()))
            except ValueError:
                raise SequenceParseError(text, pos) from None
        return cls(tuple(symbols))

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Nucleotide]:
        return iter(self.symbols)

    def __getitem__(self, idx):
        return self.symbols[idx]

    def __str__(self) -> str:
        return "".join(s.value for s in self.symbols)


SeqLike = Union[Sequence, str, Iterable[Nucleotide]]


def as_sequence(seq: SeqLike) -> Sequence:
    if isinstance(seq, Sequence):
        return seq
    if isinstance(seq, str):
        return Sequence.from_string(seq)
    return Sequence(tuple(seq))


@dataclass(frozen=True)
class ScoringScheme:
    match_score: int = 5
    mismatch_score: int = -3
    gap_penalty: int = -4

    def __post_init__(self):
        for name in ("match_score", "mismatch_score", "gap_penalty"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")

    def pair(self, a: Nucleotide, b: Nucleotide) -> int:
        return self.match_score if a == b else self.mismatch_score


DEFAULT_SCORING = ScoringScheme()


class Direction(enum.IntFlag):
    NONE = 0
    DIAGONAL = 1
    UP = 2
    LEFT = 4


# Traceback preference order when several predecessors tie.
TIE_BREAK = (Direction.DIAGONAL, Direction.UP, Direction.LEFT)


@dataclass(frozen=True)
class ScoreMatrix:
    cells: tuple[tuple[int, ...], ...]
    pointers: tuple[tuple[Direction, ...], ...]
    row_seq: Sequence  # seq2, length n
    col_seq: Sequence  # seq1, length m
    scoring: ScoringScheme = DEFAULT_SCORING

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), len(self.cells[0])

    @property
    def score(self) -> int:
        return self.cells[-1][-1]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i][j]

    def render(self) -> str:
        """Plain-text table of the scores, Seq1 across the top and Seq2 down the side."""
        width = max(len(str(v)) for row in self.cells for v in row) + 1
        header = " " * 2 + "".join(h.rjust(width) for h in [GAP_CHAR] + [str(s) for s in self.col_seq])
        lines = [header]
        labels = [GAP_CHAR] + [str(s) for s in self.row_seq]
        for label, row in zip(labels, self.cells):
            lines.append(label.ljust(2) + "".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


Column = tuple[Optional[Nucleotide], Optional[Nucleotide]]


@dataclass(frozen=True)
class Alignment:
    """Aligned columns as (Seq1 symbol, Seq2 symbol); ``None`` marks a gap."""

    columns: tuple[Column, ...]
    score: int = 0

    @property
    def top(self) -> str:
        return "".join(GAP_CHAR if a is None else a.value for a, _ in self.columns)

    @property
    def bottom(self) -> str:
        return "".join(GAP_CHAR if b is None else b.value for _, b in self.columns)

    def render(self) -> str:
        marks = ["|" if a is not None and a == b else " " for a, b in self.columns]
        return "\n".join([" ".join(self.top), " ".join(marks).rstrip(), " ".join(self.bottom)])

    @classmethod
    def from_strings(cls, top: str, bottom: str, scoring: ScoringScheme = DEFAULT_SCORING) -> "Alignment":
        if len(top) != len(bottom):
            raise MalformedAlignmentError("rows differ in length")

        def sym(ch):
            return None if ch == GAP_CHAR else Nucleotide(ch.upper())

        columns = tuple((sym(a), sym(b)) for a, b in zip(top, bottom))
        al = cls(columns)
        return cls(columns, alignment_score(al, scoring))


def build_matrix(seq1: SeqLike, seq2: SeqLike, scoring: ScoringScheme = DEFAULT_SCORING) -> ScoreMatrix:
    seq1, seq2 = as_sequence(seq1), as_sequence(seq2)
    m, n = len(seq1), len(seq2)
    if m > MAX_LENGTH or n > MAX_LENGTH:
        raise SequenceSizeError(f"sequence lengths ({m}, {n}) exceed {MAX_LENGTH}")
    w = scoring.gap_penalty

    cells = [[0] * (m + 1) for _ in range(n + 1)]
    ptrs = [[Direction.NONE] * (m + 1) for _ in range(n + 1)]
    for j in range(1, m + 1):
        cells[0][j] = w * j
        ptrs[0][j] = Direction.LEFT
    for i in range(1, n + 1):
        cells[i][0] = w * i
        ptrs[i][0] = Direction.UP

    for i in range(1, n + 1):
        b = seq2[i - 1]
        prev, row = cells[i - 1], cells[i]
        for j in range(1, m + 1):
            diag = prev[j - 1] + scoring.pair(seq1[j - 1], b)
            up = prev[j] + w
            left = row[j - 1] + w
            best = max(diag, up, left)
            row[j] = best
            d = Direction.NONE
            if diag == best:
                d |= Direction.DIAGONAL
            if up == best:
                d |= Direction.UP
            if left == best:
                d |= Direction.LEFT
            ptrs[i][j] = d

    return ScoreMatrix(
        cells=tuple(tuple(r) for r in cells),
        pointers=tuple(tuple(r) for r in ptrs),
        row_seq=seq2,
        col_seq=seq1,
        scoring=scoring,
    )


def traceback(matrix: ScoreMatrix) -> Alignment:
    seq1, seq2 = matrix.col_seq, matrix.row_seq
    i, j = len(seq2), len(seq1)
    columns: list[Column] = []
    while i > 0 or j > 0:
        here = matrix.pointers[i][j]
        step = next(d for d in TIE_BREAK if d & here)
        if step is Direction.DIAGONAL:
            columns.append((seq1[j - 1], seq2[i - 1]))
            i, j = i - 1, j - 1
        elif step is Direction.UP:
            columns.append((None, seq2[i - 1]))
            i -= 1
        else:
            columns.append((seq1[j - 1], None))
            j -= 1
    columns.reverse()
    return Alignment(tuple(columns), matrix.score)


def align(seq1: SeqLike, seq2: SeqLike, scoring: ScoringScheme = DEFAULT_SCORING) -> Alignment:
    return traceback(build_matrix(seq1, seq2, scoring))


def _check_structure(al: Alignment) -> None:
    for k, (a, b) in enumerate(al.columns):
        if a is None and b is None:
            raise MalformedAlignmentError(f"column {k} is gap against gap")
        for s in (a, b):
            if s is not None and not isinstance(s, Nucleotide):
                raise MalformedAlignmentError(f"column {k} holds non-nucleotide {s!r}")


def alignment_score(al: Alignment, scoring: ScoringScheme = DEFAULT_SCORING) -> int:
    """Rescore column by column, ignoring ``al.score``."""
    _check_structure(al)
    total = 0
    for a, b in al.columns:
        if a is None or b is None:
            total += scoring.gap_penalty
        else:
            total += scoring.pair(a, b)
    return total


def on_optimal_path(matrix: ScoreMatrix, al: Alignment) -> bool:
    """True if every step of ``al`` follows a stored pointer from (0, 0) to the final cell."""
    _check_structure(al)
    seq1, seq2 = matrix.col_seq, matrix.row_seq
    i = j = 0
    for a, b in al.columns:
        if a is not None and b is not None:
            i, j, d = i + 1, j + 1, Direction.DIAGONAL
        elif a is None:
            i, d = i + 1, Direction.UP
        else:
            j, d = j + 1, Direction.LEFT
        if i > len(seq2) or j > len(seq1):
            return False
        if (a is not None and a != seq1[j - 1]) or (b is not None and b != seq2[i - 1]):
            return False
        if not matrix.pointers[i][j] & d:
            return False
    return (i, j) == (len(seq2), len(seq1))


def brute_force_align(seq1: SeqLike, seq2: SeqLike, scoring: ScoringScheme = DEFAULT_SCORING) -> int:
    """Best global score by enumerating every alignment. Exponential; testing only."""
    seq1, seq2 = as_sequence(seq1), as_sequence(seq2)
    if len(seq1) > BRUTE_FORCE_MAX_LENGTH or len(seq2) > BRUTE_FORCE_MAX_LENGTH:
        raise SequenceSizeError(f"brute force limited to length {BRUTE_FORCE_MAX_LENGTH}")
    a, b = seq1.symbols, seq2.symbols
    w = scoring.gap_penalty

    # No memoisation on purpose: every alignment path is visited.
    def best(p: int, q: int) -> int:
        if p == len(a) and q == len(b):
            return 0
        options = []
        if p < len(a) and q < len(b):
            options.append(scoring.pair(a[p], b[q]) + best(p + 1, q + 1))
        if p < len(a):
            options.append(w + best(p + 1, q))
        if q < len(b):
            options.append(w + best(p, q + 1))
        return max(options)

    return best(0, 0)
