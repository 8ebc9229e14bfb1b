"""Regenerate the bundled sample corpus under data/bn_sample/.

Three files of synthetic Bangla-like words, deterministic from a fixed
seed. Two properties matter for the determinism suite:

- every file begins and ends with the same letter (the anchor word
  starts and ends with ক), so evaluation scores cannot depend on the
  order the files are ingested in: the junction between any two files
  always joins ক to ক, which is never a hand switch;
- the distinct-letter count stays well under one hand's slot capacity
  (45 under the default geometry), so the heavily left-biased partition
  can always be placed.
"""

import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "bn_sample"
SEED = 20240816
FILES = ("part1.txt", "part2.txt", "part3.txt")
TARGET_BYTES_PER_FILE = 17000

ANCHOR_WORD = "কলক"  # কলক: starts and ends with ক

CONSONANTS = [
    ("ক", 90), ("র", 85), ("ব", 70), ("ত", 65),
    ("ন", 60), ("স", 50), ("ম", 48), ("ল", 45),
    ("প", 40), ("দ", 38), ("জ", 30), ("গ", 26),
    ("চ", 24), ("হ", 22), ("শ", 20), ("থ", 14),
    ("খ", 12), ("ড", 10), ("ভ", 10), ("ট", 8),
    ("ধ", 8), ("ফ", 6), ("ছ", 6), ("য", 6),
    ("ষ", 4),
]
VOWELS = [
    ("অ", 30), ("আ", 25), ("ই", 20), ("এ", 18),
    ("ও", 10), ("উ", 8),
]
MATRAS = [
    ("া", 95), ("ে", 55), ("ি", 50), ("ী", 15),
    ("ু", 20), ("ো", 12),
]
VIRAMA = "্"


def pick(rng, weighted):
    return rng.choices([x for x, _w in weighted], weights=[w for _x, w in weighted])[0]


def make_word(rng):
    parts = []
    if rng.random() < 0.18:
        parts.append(pick(rng, VOWELS))
    for _ in range(rng.randrange(1, 4)):
        parts.append(pick(rng, CONSONANTS))
        roll = rng.random()
        if roll < 0.08:
            parts.append(VIRAMA)
            parts.append(pick(rng, CONSONANTS))
        if rng.random() < 0.55:
            parts.append(pick(rng, MATRAS))
    return "".join(parts)


def make_file_text(rng):
    chunks = [ANCHOR_WORD]
    size = len(ANCHOR_WORD.encode("utf-8"))
    anchor_cost = len((" " + ANCHOR_WORD + "\n").encode("utf-8"))
    while size < TARGET_BYTES_PER_FILE - anchor_cost:
        words = [make_word(rng) for _ in range(rng.randrange(6, 13))]
        line = " ".join(words) + ("।" if rng.random() < 0.5 else "")
        chunks.append("\n" + line)
        size += len(("\n" + line).encode("utf-8"))
    chunks.append("\n" + ANCHOR_WORD + "\n")
    return "".join(chunks)


def main():
    rng = random.Random(SEED)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for filename in FILES:
        text = make_file_text(rng)
        (OUT_DIR / filename).write_text(text, encoding="utf-8")
        print(f"{filename}: {len(text.encode('utf-8'))} bytes")


if __name__ == "__main__":
    main()
