"""Greedy two-hand partition of an alphabet by digraph association.

Letters are taken in descending frequency order. The four most frequent
seed the hands (first and fourth right, second and third left) so each
hand starts with comparable weight. Every later letter is scored against
both hands; a letter strongly associated with the left hand — higher
cumulative support AND higher cumulative confidence there — goes right,
so that the pairs it forms most often become hand alternations. Any
weaker or mixed signal defaults left.

The deterministic left bias is intentional: it keeps the procedure
reproducible with no RNG and no dependence on dict order. An optional
tiebreak mode adds the mirrored rule and sends genuinely mixed cases to
the lighter hand instead.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import AlreadyAssigned, ConfigError, TooFewLetters
from .stats import NGramTable, SideScore, ranked_monograms, side_scores

RULE_SEED = "seed"
RULE_SEED_DEGENERATE = "seed-degenerate"
RULE_LEFT_TO_RIGHT = "left-association-to-right"
RULE_RIGHT_TO_LEFT = "right-association-to-left"
RULE_DEFAULT_LEFT = "default-left"
RULE_BALANCE = "balance-to-lighter"


@dataclass(frozen=True)
class Decision:
    """One step of the assignment trace: the scores seen and the rule applied."""

    letter: str
    left: SideScore
    right: SideScore
    hand: str
    rule: str


@dataclass
class HandPartition:
    """Disjoint left/right letter lists, in assignment order, plus the trace."""

    left: list[str] = field(default_factory=list)
    right: list[str] = field(default_factory=list)
    trace: list[Decision] = field(default_factory=list)
    degenerate: bool = False

    def hand_of(self, letter: str) -> str:
        if letter in self.left:
            return "left"
        if letter in self.right:
            return "right"
        raise KeyError(f"{letter!r} is not assigned to either hand")

    def assigned(self) -> set[str]:
        return set(self.left) | set(self.right)


def _letter_of(entry) -> str:
    return entry if isinstance(entry, str) else entry[0]


def initialize(ranking: Sequence, *, allow_degenerate: bool = False) -> HandPartition:
    """Seed the hands from the top four letters of a frequency ranking.

    ``ranking`` entries may be bare letters or (letter, ...) tuples as
    produced by ranked_monograms. Ranks one and four go right, two and
    three left. Fewer than four letters is refused unless
    ``allow_degenerate`` is set, in which case the letters alternate
    right, left, ... and the partition is flagged degenerate.
    """
    letters = [_letter_of(e) for e in ranking[:4]]
    zero = SideScore(0.0, 0.0)
    if len(letters) < 4:
        if not allow_degenerate:
            raise TooFewLetters(
                f"need at least 4 distinct letters to seed both hands, got {len(letters)}")
        part = HandPartition(degenerate=True)
        for i, letter in enumerate(letters):
            hand = "right" if i % 2 == 0 else "left"
            getattr(part, hand).append(letter)
            part.trace.append(Decision(letter, zero, zero, hand, RULE_SEED_DEGENERATE))
        return part
    part = HandPartition()
    for letter, hand in zip(letters, ("right", "left", "left", "right")):
        getattr(part, hand).append(letter)
        part.trace.append(Decision(letter, zero, zero, hand, RULE_SEED))
    return part


def assign(letter: str, partition: HandPartition, mono: NGramTable,
           digraphs: NGramTable, *, balance_tiebreak: bool = False) -> HandPartition:
    """Place one letter by comparing its cumulative scores against both hands.

    Mutates and returns the partition; the decision is appended to the trace.
    """
    if letter in partition.left or letter in partition.right:
        raise AlreadyAssigned(f"{letter!r} is already on the {partition.hand_of(letter)} hand")
    left_score = side_scores(letter, partition.left, mono, digraphs)
    right_score = side_scores(letter, partition.right, mono, digraphs)
    if (left_score.cumulative_support > right_score.cumulative_support
            and left_score.cumulative_confidence > right_score.cumulative_confidence):
        hand, rule = "right", RULE_LEFT_TO_RIGHT
    elif balance_tiebreak and (
            right_score.cumulative_support > left_score.cumulative_support
            and right_score.cumulative_confidence > left_score.cumulative_confidence):
        hand, rule = "left", RULE_RIGHT_TO_LEFT
    elif balance_tiebreak:
        hand = "left" if len(partition.left) <= len(partition.right) else "right"
        rule = RULE_BALANCE
    else:
        hand, rule = "left", RULE_DEFAULT_LEFT
    getattr(partition, hand).append(letter)
    partition.trace.append(Decision(letter, left_score, right_score, hand, rule))
    return partition


def partition_all(mono: NGramTable, digraphs: NGramTable, *, coverage: int = 1,
                  balance_tiebreak: bool = False) -> HandPartition:
    """Run the full greedy partition over every letter meeting the coverage floor."""
    ranking = [r for r in ranked_monograms(mono) if r[1] >= coverage]
    if len(ranking) < 4:
        raise TooFewLetters(
            f"need at least 4 distinct letters to seed both hands, got {len(ranking)}"
            + (f" at coverage >= {coverage}" if coverage > 1 else ""))
    part = initialize(ranking)
    for letter, _count, _pct in ranking[4:]:
        assign(letter, part, mono, digraphs, balance_tiebreak=balance_tiebreak)
    return part


# ---------------------------------------------------------------------------
# JSON import/export. The file embeds the frequency ranking it was derived
# from, so downstream steps (layout building) can run from the file alone.

def write_partition_json(partition: HandPartition, mono: NGramTable, out_path: str | Path,
                         *, config_echo: dict | None = None) -> None:
    ranking = ranked_monograms(mono)
    payload = {
        "left": list(partition.left),
        "right": list(partition.right),
        "degenerate": partition.degenerate,
        "total_letters": mono.total_letters,
        "ranking": [[letter, count] for letter, count, _pct in ranking],
        "trace": [
            {
                "letter": d.letter,
                "left_support": d.left.cumulative_support,
                "left_confidence": d.left.cumulative_confidence,
                "right_support": d.right.cumulative_support,
                "right_confidence": d.right.cumulative_confidence,
                "hand": d.hand,
                "rule": d.rule,
            }
            for d in partition.trace
        ],
    }
    if config_echo is not None:
        payload["config"] = config_echo
    with open(out_path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, ensure_ascii=False, indent=2)
        handle.write("\n")


def read_partition_json(path: str | Path) -> tuple[HandPartition, NGramTable]:
    """Load a partition file; returns the partition and its embedded ranking
    as a monogram table."""
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON: {exc}") from None
    try:
        left = list(payload["left"])
        right = list(payload["right"])
        trace_rows = payload["trace"]
        ranking = payload["ranking"]
        total = int(payload["total_letters"])
    except KeyError as exc:
        raise ConfigError(f"{path}: missing field {exc}") from None
    if set(left) & set(right):
        raise ConfigError(f"{path}: hands are not disjoint")
    if len(trace_rows) != len(left) + len(right):
        raise ConfigError(f"{path}: trace length does not match assigned letters")
    part = HandPartition(left=left, right=right,
                         degenerate=bool(payload.get("degenerate", False)))
    for row in trace_rows:
        part.trace.append(Decision(
            letter=row["letter"],
            left=SideScore(row["left_support"], row["left_confidence"]),
            right=SideScore(row["right_support"], row["right_confidence"]),
            hand=row["hand"],
            rule=row["rule"],
        ))
    mono = NGramTable(n=1, counts=Counter({g: int(c) for g, c in ranking}),
                      total_letters=total)
    return part, mono
