"""Acceptance checks: the published-table fixtures, the randomized
oracle equivalences, pipeline determinism, and placement rules.

Each check prints one verdict line (run with -s to see them even on
success). The randomized checks reuse the independent oracles defined
in the per-module test files.
"""

import itertools
import json
import random
import time
from pathlib import Path

import pytest

from layoutforge.cli import main
from layoutforge.errors import TooFewLetters
from layoutforge.evaluator import (EvaluationReport, compare, evaluate,
                                   evaluate_chunked)
from layoutforge.layout import KeyPosition, KeyboardLayout, build_layout, parse_layout, serialize_layout
from layoutforge.partition import assign, initialize, partition_all
from layoutforge.stats import (NGramTable, count_ngrams, digraph_confidence,
                               ranked_monograms, side_scores, support)

from conftest import (INVOLVEMENT_K, K_LEFT_SCORE, K_RIGHT_SCORE, TABLE2_ROWS,
                      make_stream, random_tokens)
from test_evaluator import layout_from_hands, rescan
from test_layout import make_tables, partition_of
from test_partition import random_corpus, replay_partition
from test_stats import brute_windows

SAMPLE_DIR = Path(__file__).resolve().parent.parent / "data" / "bn_sample"
FOCUS = "ক"


def verdict(number, label, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {label}")
    assert ok, f"criterion {number} ({label}) failed"


def test_criterion_1_association_arithmetic(paper_digraphs):
    started = time.perf_counter()
    ok = True
    for gram, count, expected_support, expected_conf in TABLE2_ROWS:
        ok &= paper_digraphs.counts[gram] == count
        ok &= abs(support(paper_digraphs, gram) - expected_support) <= 1e-5
        ok &= abs(digraph_confidence(paper_digraphs, FOCUS, gram) - expected_conf) <= 1e-4
    elapsed = time.perf_counter() - started
    ok &= elapsed < 1.0
    verdict(1, f"published digraph support/confidence values ({elapsed:.3f}s)", ok)


def test_criterion_2_worked_example(paper_mono, paper_digraphs):
    ranking = ranked_monograms(paper_mono)
    part = initialize(ranking[:4])
    ok = part.right == ["া", "ি"] and part.left == ["ে", "র"]
    left = side_scores(FOCUS, part.left, paper_mono, paper_digraphs)
    right = side_scores(FOCUS, part.right, paper_mono, paper_digraphs)
    ok &= abs(left.cumulative_support - K_LEFT_SCORE[0]) <= 1e-5
    ok &= abs(left.cumulative_confidence - K_LEFT_SCORE[1]) <= 1e-5
    ok &= abs(right.cumulative_support - K_RIGHT_SCORE[0]) <= 1e-5
    ok &= abs(right.cumulative_confidence - K_RIGHT_SCORE[1]) <= 1e-5
    assign(FOCUS, part, paper_mono, paper_digraphs)
    ok &= part.right == ["া", "ি", FOCUS]
    verdict(2, "worked fifth-letter decision lands right", ok)


def test_criterion_3_partition_oracle():
    started = time.perf_counter()
    rng = random.Random(101)
    ok = True
    for _ in range(100):
        _alpha, mono_counts, dig_counts, total = random_corpus(
            rng, rng.randrange(12, 31), rng.randrange(200, 2001))
        mono = NGramTable(1, mono_counts, total)
        dig = NGramTable(2, dig_counts, total)
        part = partition_all(mono, dig)
        left, right, trace = replay_partition(mono_counts, dig_counts, total)
        ok &= part.left == left and part.right == right
        got = [(d.letter, d.left.cumulative_support, d.left.cumulative_confidence,
                d.right.cumulative_support, d.right.cumulative_confidence, d.hand)
               for d in part.trace[4:]]
        ok &= got == trace
    elapsed = time.perf_counter() - started
    ok &= elapsed < 10.0
    verdict(3, f"100 random partitions match the step replay ({elapsed:.2f}s)", ok)


def test_criterion_4_ngram_oracle():
    rng = random.Random(103)
    alphabet = [chr(ord("a") + i) for i in range(10)]
    ok = True
    for _ in range(200):
        tokens = random_tokens(rng, alphabet, rng.randrange(0, 1000))
        stream = make_stream(tokens)
        for n in (1, 2, 3):
            counted = count_ngrams(stream, n)
            ok &= counted.counts == brute_windows(tokens, n)
        mono = count_ngrams(stream, 1)
        if mono.total_letters:
            ok &= abs(sum(support(mono, g) for g in mono.counts) - 100.0) <= 1e-9
        dig = count_ngrams(stream, 2)
        involved = {ch for g in dig.counts for ch in g}
        for letter in involved:
            conf = sum(digraph_confidence(dig, letter, g)
                       for g in dig.counts if letter in g)
            ok &= abs(conf - 100.0) <= 1e-9
    verdict(4, "200 random streams match the window scanner; shares sum to 100", ok)


def test_criterion_5_evaluator_oracle():
    rng = random.Random(107)
    alphabet = [chr(ord("a") + i) for i in range(8)]
    ok = True
    for _ in range(200):
        known = alphabet[:rng.randrange(0, len(alphabet) + 1)]
        split = rng.randrange(0, len(known) + 1)
        hand_of = {l: ("left" if i < split else "right") for i, l in enumerate(known)}
        layout = layout_from_hands([l for l in known if hand_of[l] == "left"],
                                   [l for l in known if hand_of[l] == "right"])
        tokens = random_tokens(rng, alphabet, rng.randrange(0, 600))
        stream = make_stream(tokens)
        report = evaluate(layout, stream)
        ok &= (report.left_load + report.right_load + report.not_determined
               == report.total_letters)
        left, right, nd, switching = rescan(hand_of, tokens)
        ok &= (report.left_load, report.right_load, report.not_determined,
               report.hand_switching) == (left, right, nd, switching)
        mirrored = KeyboardLayout(
            name="m", geometry=layout.geometry,
            assignment={
                letter: KeyPosition(
                    "right" if pos.hand == "left" else "left", pos.layer, pos.row,
                    layout.geometry.columns + 1 - pos.column)
                for letter, pos in layout.assignment.items()
            })
        flipped = evaluate(mirrored, stream)
        ok &= flipped.hand_switching == report.hand_switching
        ok &= flipped.not_determined == report.not_determined
        ok &= (flipped.left_load, flipped.right_load) == (report.right_load,
                                                          report.left_load)
        chunked = evaluate_chunked(layout, stream, chunks=rng.randrange(1, 9))
        ok &= chunked == report
    verdict(5, "200 random evaluations: conservation, rescan, mirror, chunks", ok)


def test_criterion_6_pipeline_determinism(tmp_path, capsys):
    started = time.perf_counter()
    paths = [str(p) for p in sorted(SAMPLE_DIR.glob("*.txt"))]
    assert len(paths) == 3
    orderings = [paths, list(reversed(paths)), paths[1:] + paths[:1], paths]
    snapshots = []
    for i, ordering in enumerate(orderings):
        out = tmp_path / f"run{i}"
        assert main(["run-all", *ordering, "--out", str(out)]) == 0
        snapshots.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    capsys.readouterr()
    ok = all(snap == snapshots[0] for snap in snapshots[1:])
    ok &= set(snapshots[0]) >= {"monograms.tsv", "digraphs.tsv", "trigrams.tsv",
                                "partition.json", "layout.json",
                                "report-optimized.json", "comparison.txt"}
    elapsed = time.perf_counter() - started
    ok &= elapsed < 5.0
    verdict(6, f"byte-identical pipeline over reruns and orderings ({elapsed:.2f}s)", ok)


def test_criterion_7_comparison_fixture():
    reports = [
        EvaluationReport("bijoy", 358873, 475556, 242526, 138643, 856725),
        EvaluationReport("alternative", 358672, 319946, 363077, 173702, 856725),
        EvaluationReport("optimized", 410113, 380058, 340903, 133290, 854251),
    ]
    result = compare(reports)
    ok = [r.layout_name for r in result.rows] == ["optimized", "bijoy", "alternative"]
    ok &= [r.hand_switching for r in result.rows] == [410113, 358873, 358672]
    verdict(7, "published comparison rows rank the optimized layout first", ok)


def test_criterion_8_capacity_and_round_trip():
    counts = {chr(ord("a") + i): 100 - i for i in range(16)}
    counts["z"] = 1000
    letters = sorted(counts)[:16]
    hand5 = build_layout(partition_of(letters[:5], "z"), make_tables(counts))
    ok = all(hand5.assignment[l].row == 1 and hand5.assignment[l].layer == "base"
             for l in letters[:5])
    ok &= [hand5.assignment[l].column for l in letters[:5]] == [5, 4, 3, 2, 1]
    hand16 = build_layout(partition_of(letters, "z"), make_tables(counts))
    ok &= hand16.assignment[letters[15]] == KeyPosition("left", "shift", 1, 5)
    ok &= all(hand16.assignment[l].layer == "base" for l in letters[:15])
    for layout in (hand5, hand16):
        data = serialize_layout(layout)
        ok &= parse_layout(data) == layout
        ok &= serialize_layout(parse_layout(data)) == data
    verdict(8, "home-row fill, shift spill, byte-stable round-trip", ok)
