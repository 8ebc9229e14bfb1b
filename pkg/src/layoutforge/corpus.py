"""Text ingestion: UTF-8 decoding, NFC normalization, letter-stream tokenization.

A corpus is reduced to a flat stream of letter tokens separated by word
boundaries. What counts as a letter is driven entirely by an AlphabetConfig;
every other code point becomes a boundary, and consecutive boundaries
collapse into one. The letter unit is a single code point, so dependent
vowel signs (matras) and the virama are letters in their own right.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ConfigError, InvalidEncoding

# Bangla defaults: the whole Bengali block minus its digits. The danda
# (U+0964) lives in the Devanagari block and is therefore a boundary unless
# explicitly included.
BANGLA_BLOCK = (0x0980, 0x09FF)
BANGLA_DIGITS = frozenset(chr(cp) for cp in range(0x09E6, 0x09F0))


def parse_codepoint(text: str) -> str:
    """Accept either a literal single character or a "U+XXXX" spelling."""
    if text.upper().startswith("U+"):
        try:
            return chr(int(text[2:], 16))
        except (ValueError, OverflowError) as exc:
            raise ConfigError(f"bad code point {text!r}") from exc
    if len(text) != 1:
        raise ConfigError(f"expected one character or U+XXXX, got {text!r}")
    return text


def format_codepoint(ch: str) -> str:
    return f"U+{ord(ch):04X}"


@dataclass(frozen=True)
class AlphabetConfig:
    """Defines the letter set for tokenization.

    The resolved alphabet is (union of ranges) | include - exclude. Code
    points outside it are word boundaries. ``include`` and ``exclude`` must
    not overlap; excluding something a range covers is the normal way to
    carve out digits or (optionally) the virama.
    """

    ranges: tuple[tuple[int, int], ...] = (BANGLA_BLOCK,)
    include: frozenset[str] = frozenset()
    exclude: frozenset[str] = BANGLA_DIGITS

    def __post_init__(self):
        for lo, hi in self.ranges:
            if lo > hi:
                raise ConfigError(f"empty code point range U+{lo:04X}..U+{hi:04X}")
        clash = self.include & self.exclude
        if clash:
            listed = ", ".join(sorted(format_codepoint(c) for c in clash))
            raise ConfigError(f"include and exclude overlap: {listed}")

    def resolve(self) -> frozenset[str]:
        """The concrete letter set this config denotes."""
        letters = {chr(cp) for lo, hi in self.ranges for cp in range(lo, hi + 1)}
        letters |= self.include
        letters -= self.exclude
        return frozenset(letters)

    @classmethod
    def from_dict(cls, data: dict) -> "AlphabetConfig":
        unknown = set(data) - {"ranges", "include", "exclude"}
        if unknown:
            raise ConfigError(f"unknown alphabet fields: {sorted(unknown)}")
        ranges = tuple(
            (ord(parse_codepoint(lo)), ord(parse_codepoint(hi)))
            for lo, hi in data.get("ranges", [])
        )
        include = frozenset(parse_codepoint(c) for c in data.get("include", []))
        exclude = frozenset(parse_codepoint(c) for c in data.get("exclude", []))
        return cls(ranges=ranges, include=include, exclude=exclude)

    def to_dict(self) -> dict:
        return {
            "ranges": [[f"U+{lo:04X}", f"U+{hi:04X}"] for lo, hi in self.ranges],
            "include": sorted(format_codepoint(c) for c in self.include),
            "exclude": sorted(format_codepoint(c) for c in self.exclude),
        }

    @classmethod
    def load(cls, path: str | Path) -> "AlphabetConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        return cls.from_dict(data)


# A boundary token. Letters are single-character strings; None marks the gap
# between words.
BOUNDARY = None


@dataclass
class LetterStream:
    """Ordered letter tokens with collapsed word boundaries.

    ``tokens`` holds single-character strings for letters and None for
    boundaries; no two boundaries are ever adjacent. ``source_bytes`` is the
    UTF-8 length of the text the stream came from.
    """

    tokens: list[str | None] = field(default_factory=list)
    source_bytes: int = 0
    letter_count: int = 0

    def runs(self) -> Iterator[list[str]]:
        """Yield each maximal run of letters between boundaries."""
        run: list[str] = []
        for tok in self.tokens:
            if tok is BOUNDARY:
                if run:
                    yield run
                    run = []
            else:
                run.append(tok)
        if run:
            yield run

    def letters(self) -> list[str]:
        return [tok for tok in self.tokens if tok is not BOUNDARY]


def normalize_text(raw: bytes) -> str:
    """Decode UTF-8 strictly and normalize to NFC."""
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidEncoding(exc.start) from exc
    return unicodedata.normalize("NFC", text)


def tokenize(text: str, config: AlphabetConfig | None = None) -> LetterStream:
    """Split normalized text into a LetterStream under the given alphabet.

    Unknown characters never fail; any maximal run of non-alphabet code
    points becomes one boundary token.
    """
    if config is None:
        config = AlphabetConfig()
    alphabet = config.resolve()
    tokens: list[str | None] = []
    count = 0
    for ch in text:
        if ch in alphabet:
            tokens.append(ch)
            count += 1
        elif not tokens or tokens[-1] is not BOUNDARY:
            tokens.append(BOUNDARY)
    return LetterStream(tokens=tokens, source_bytes=len(text.encode("utf-8")), letter_count=count)


def concat_streams(streams: Iterable[LetterStream]) -> LetterStream:
    """Join streams with an implicit boundary between parts.

    Digraphs therefore never span two source files, and the merged statistics
    do not depend on which file a word came from.
    """
    merged = LetterStream()
    for part in streams:
        if merged.tokens and part.tokens:
            if merged.tokens[-1] is not BOUNDARY and part.tokens[0] is not BOUNDARY:
                merged.tokens.append(BOUNDARY)
            elif merged.tokens[-1] is BOUNDARY and part.tokens[0] is BOUNDARY:
                merged.tokens.pop()
        merged.tokens.extend(part.tokens)
        merged.source_bytes += part.source_bytes
        merged.letter_count += part.letter_count
    return merged


def read_corpus(paths: Iterable[str | Path], config: AlphabetConfig | None = None) -> LetterStream:
    """Tokenize each file and concatenate the streams in the given order."""
    parts = []
    for path in paths:
        raw = Path(path).read_bytes()
        parts.append(tokenize(normalize_text(raw), config))
    return concat_streams(parts)


def reconstruct_text(stream: LetterStream) -> str:
    """Render a stream back to text, one space per boundary.

    Tokenizing the result reproduces the stream, which makes streams
    auditable with ordinary text tools.
    """
    return "".join(" " if tok is BOUNDARY else tok for tok in stream.tokens)
