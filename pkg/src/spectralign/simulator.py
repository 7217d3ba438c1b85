"""Scenario files, the time-stepped allocation loop, and report emitters.

Scenario format (UTF-8, ``#`` starts a comment, blank lines ignored)::

    name: paper_t123        # optional
    su: AAAA
    match: 5                # optional scoring overrides
    mismatch: -3
    gap: -4
    pu: GAATTCAGTTA         # one step per pu / pu_power line, in order
    pu_power: 0.5,2.3,1.0
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from .alignment import DEFAULT_SCORING, ScoringScheme, Sequence
from .allocator import AllocationResult, allocate, diff
from .codec import ChannelSnapshot, encode_snapshot
from .errors import ScenarioParseError, SpectralignError, StepError

CSV_COLUMNS = (
    "step",
    "pu_sequence",
    "idle_count",
    "allocated_count",
    "waiting_count",
    "moved_count",
    "evicted_count",
    "admitted_count",
    "alignment_score",
)

BUNDLED = ("paper_t123", "paper_scarcity")

Step = Union[Sequence, ChannelSnapshot]


@dataclass(frozen=True)
class Scenario:
    su_demand: Sequence
    steps: tuple[Step, ...]
    scoring: ScoringScheme = DEFAULT_SCORING
    name: str = "scenario"

    def __post_init__(self):
        if not self.steps:
            raise SpectralignError("scenario has no steps")
        if not self.su_demand:
            raise SpectralignError("scenario SU demand is empty")


@dataclass(frozen=True)
class StepRecord:
    step: int
    pu_sequence: str
    idle_count: int
    allocated_count: int
    waiting_count: int
    moved_count: int
    evicted_count: int
    admitted_count: int
    alignment_score: int
    assignments: tuple[Optional[int], ...] = field(default=())
    idle_channels: tuple[int, ...] = field(default=())

    def csv_row(self) -> dict:
        return {name: getattr(self, name) for name in CSV_COLUMNS}


_SCORING_KEYS = {"match": "match_score", "mismatch": "mismatch_score", "gap": "gap_penalty"}


def parse_scenario(text: str, name: str = "scenario") -> Scenario:
    su: Optional[Sequence] = None
    steps: list[Step] = []
    scoring: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep:
            raise ScenarioParseError(f"expected 'key: value', got {line!r}", lineno)
        try:
            if key == "name":
                name = value
            elif key == "su":
                if su is not None:
                    raise ScenarioParseError("duplicate su line", lineno)
                su = Sequence.from_string(value)
                if not su:
                    raise ScenarioParseError("su demand is empty", lineno)
            elif key in _SCORING_KEYS:
                scoring[_SCORING_KEYS[key]] = int(value)
            elif key == "pu":
                seq = Sequence.from_string(value)
                if not seq:
                    raise ScenarioParseError("pu step is empty", lineno)
                steps.append(seq)
            elif key == "pu_power":
                steps.append(ChannelSnapshot.from_csv(value))
            else:
                raise ScenarioParseError(f"unknown directive {key!r}", lineno)
        except ScenarioParseError:
            raise
        except (SpectralignError, ValueError) as exc:
            raise ScenarioParseError(str(exc), lineno) from exc

    if su is None:
        raise ScenarioParseError("missing su line")
    if not steps:
        raise ScenarioParseError("scenario has zero steps")
    return Scenario(su, tuple(steps), ScoringScheme(**scoring), name)


def bundled_scenario_text(name: str) -> str:
    return resources.files("spectralign.scenarios").joinpath(f"{name}.txt").read_text("utf-8")


def load_scenario(ref: Union[str, Path]) -> Scenario:
    """Load from a file path, or by bundled fixture name (e.g. ``paper_t123``)."""
    path = Path(ref)
    if path.is_file():
        return parse_scenario(path.read_text("utf-8"), name=path.stem)
    if str(ref) in BUNDLED:
        return parse_scenario(bundled_scenario_text(str(ref)), name=str(ref))
    raise FileNotFoundError(f"no scenario file or bundled fixture named {str(ref)!r}")


def run(scenario: Scenario) -> list[StepRecord]:
    records = []
    prev = AllocationResult.all_waiting(len(scenario.su_demand))
    for k, step in enumerate(scenario.steps):
        try:
            pu = encode_snapshot(step) if isinstance(step, ChannelSnapshot) else step
            result = allocate(pu, scenario.su_demand, scenario.scoring)
            churn = diff(prev, result)
        except SpectralignError as exc:
            raise StepError(k, exc) from exc
        records.append(
            StepRecord(
                step=k,
                pu_sequence=str(pu),
                idle_count=len(result.idle_set),
                allocated_count=result.allocated_count,
                waiting_count=result.waiting_count,
                moved_count=churn.moved,
                evicted_count=churn.evicted,
                admitted_count=churn.admitted,
                alignment_score=result.score,
                assignments=result.assignments,
                idle_channels=tuple(sorted(result.idle_set)),
            )
        )
        prev = result
    return records


def emit_csv(records: Iterable[StepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def format_assignments(assignments: Iterable[Optional[int]]) -> list[str]:
    lines = []
    for k, ch in enumerate(assignments, start=1):
        lines.append(f"  SU{k:<3} -> F{ch}" if ch is not None else f"  SU{k:<3} waiting")
    return lines


def _step_block(rec: StepRecord) -> str:
    idle = set(rec.idle_channels)
    marks = " ".join("^" if c in idle else " " for c in range(1, len(rec.pu_sequence) + 1)).rstrip()
    lines = [
        f"step {rec.step}",
        f"  PU    {' '.join(rec.pu_sequence)}",
        f"  idle  {marks}",
        f"  idle channels: {', '.join(map(str, rec.idle_channels)) or 'none'}; alignment score {rec.alignment_score}",
    ]
    lines += format_assignments(rec.assignments)
    lines.append(
        f"  {rec.allocated_count} allocated, {rec.waiting_count} waiting; "
        f"moved {rec.moved_count}, evicted {rec.evicted_count}, admitted {rec.admitted_count}"
    )
    return "\n".join(lines) + "\n"


def emit_text(records: Iterable[StepRecord]) -> str:
    return "\n".join(_step_block(rec) for rec in records)
