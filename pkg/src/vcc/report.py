"""Scoring tables and corpus statistics.

The score matrix is a small TSV of writing systems rated 1 (poor), 2
(middling), or 3 (good) on nine fixed criteria; totals are plain sums, so
the ranking is reproducible from the file alone.  Corpus statistics count
source characters against their encoded output for quick size comparisons.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import IO

from .codec import MARK, WordList, WordToken, encode_text, is_han, segment
from .codepage import Alphabet
from .errors import DataError, SymbolNotInAlphabet
from .lexicon import Lexicon

CRITERIA = (
    "shallow_knowledge_learning",
    "shallow_vocabulary",
    "information_content",
    "ease_of_learning",
    "deep_knowledge_learning",
    "deep_vocabulary",
    "combine_vocabulary",
    "need_new_characters",
    "trade_benefit",
)


@dataclass(frozen=True)
class ScoreMatrix:
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def total(self, label: str) -> int:
        return sum(self.rows[self.labels.index(label)])

    def totals(self) -> dict[str, int]:
        return {label: sum(row) for label, row in zip(self.labels, self.rows)}

    def best(self) -> str:
        totals = self.totals()
        return max(sorted(totals), key=lambda label: totals[label])


def load_score_matrix(source: str | Path | IO[str]) -> ScoreMatrix:
    if hasattr(source, "read"):
        rows = list(csv.reader(source, delimiter="\t", quoting=csv.QUOTE_NONE))
    else:
        with open(source, encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle, delimiter="\t", quoting=csv.QUOTE_NONE))
    rows = [row for row in rows if row and any(cell.strip() for cell in row)]
    if not rows:
        raise DataError("score table is empty")
    header = tuple(cell.strip() for cell in rows[0])
    if header[0] != "label" or header[1:] != CRITERIA:
        raise DataError(f"score table header {header!r} does not match the nine criteria")
    labels: list[str] = []
    matrix: list[tuple[int, ...]] = []
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != len(CRITERIA) + 1:
            raise DataError(f"score table line {number}: expected {len(CRITERIA) + 1} columns")
        label = row[0].strip()
        if not label or label in labels:
            raise DataError(f"score table line {number}: bad or repeated label {row[0]!r}")
        cells = []
        for cell in row[1:]:
            try:
                value = int(cell)
            except ValueError:
                raise DataError(f"score table line {number}: {cell!r} is not a score") from None
            if value not in (1, 2, 3):
                raise DataError(f"score table line {number}: score {value} outside 1..3")
            cells.append(value)
        labels.append(label)
        matrix.append(tuple(cells))
    return ScoreMatrix(tuple(labels), tuple(matrix))


@dataclass(frozen=True)
class CorpusStats:
    characters: int
    symbols: int
    encoded_bytes: int | None
    tokens: int
    unknown: int
    mean_form_length: float

    def lines(self) -> list[str]:
        out = [
            f"source characters   {self.characters}",
            f"encoded symbols     {self.symbols}",
        ]
        if self.encoded_bytes is not None:
            out.append(f"encoded bytes       {self.encoded_bytes}")
        out += [
            f"word tokens         {self.tokens}",
            f"unknown characters  {self.unknown}",
            f"mean form length    {self.mean_form_length:.2f}",
        ]
        return out


def corpus_stats(
    text: str,
    lexicon: Lexicon,
    words: WordList | None = None,
    alphabet: Alphabet | None = None,
) -> CorpusStats:
    """Encode *text* (marking unknowns instead of failing) and measure it."""
    encoded = encode_text(text, lexicon, words, on_unknown="mark")
    characters = sum(1 for ch in text if is_han(ch))
    unknown = encoded.count(MARK) // 2
    tokens = 0
    form_lengths: list[int] = []
    for token in segment(text, words):
        if isinstance(token, WordToken):
            tokens += 1
            for glyph in token.glyphs:
                if glyph in lexicon:
                    form_lengths.append(len(lexicon.form(glyph).rendered))
    mean_length = sum(form_lengths) / len(form_lengths) if form_lengths else 0.0
    encoded_bytes: int | None = None
    if alphabet is not None:
        try:
            encoded_bytes = len(alphabet.encode(encoded))
        except SymbolNotInAlphabet:
            encoded_bytes = None
    return CorpusStats(
        characters=characters,
        symbols=len(encoded),
        encoded_bytes=encoded_bytes,
        tokens=tokens,
        unknown=unknown,
        mean_form_length=mean_length,
    )
