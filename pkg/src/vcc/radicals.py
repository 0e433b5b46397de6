"""The radical inventory: revised prefix pronunciations and their audit.

Each radical is either *active*, carrying a revised pronunciation used as
the prefix syllable of its characters, or *abolished*, redirecting to the
active radical that absorbed its characters.  Revised pronunciations must
be pairwise distinct except inside an explicit synonym group (variant
shapes such as 言/讠 deliberately share one pronunciation).

Table file format (UTF-8, tab-separated, one header line)::

    index  glyph  original  status  revised_or_redirect  synonym_group  default_tone  exception

* ``original`` is the dictionary pronunciation in numeric pinyin.
* ``status`` is ``active`` or ``abolished``; the next column holds the
  revised pronunciation base (1-4 letters) or the redirect glyph.
* ``default_tone`` (0-4, optional) pins the prefix tone for heavily
  populated radicals such as 人, which always opens at the second tone.
* ``exception`` (``1``, optional) marks radicals that win over position
  when a character lists several candidates (鸟, 鱼, 彡 ...).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

from .errors import (
    DanglingRedirect,
    DataError,
    DuplicateGlyph,
    MalformedSyllable,
    NoActiveRadical,
    PronunciationClash,
)
from .pinyin import Syllable, Tone, parse_syllable, render_syllable

_HEADER = [
    "index",
    "glyph",
    "original",
    "status",
    "revised_or_redirect",
    "synonym_group",
    "default_tone",
    "exception",
]


@dataclass(frozen=True)
class RadicalEntry:
    glyph: str
    index: int
    original: Syllable
    revised: Syllable | None = None  # None when abolished
    redirect_to: str | None = None  # target glyph when abolished
    synonym_group: str | None = None
    default_tone: Tone | None = None
    position_exception: bool = False

    @property
    def active(self) -> bool:
        return self.revised is not None

    def prefix_tone(self) -> Tone:
        """The tone a fresh prefix of this radical opens at."""
        return self.default_tone if self.default_tone is not None else Tone.NEUTRAL


class RadicalTable:
    """Immutable glyph-keyed radical inventory, validated on construction."""

    def __init__(self, entries: Iterable[RadicalEntry]):
        by_glyph: dict[str, RadicalEntry] = {}
        for entry in entries:
            if entry.glyph in by_glyph:
                raise DuplicateGlyph(f"radical {entry.glyph!r} appears twice")
            by_glyph[entry.glyph] = entry
        self._by_glyph = by_glyph
        self._validate()

    def _validate(self) -> None:
        rendered_owner: dict[str, RadicalEntry] = {}
        for entry in self.entries():
            if entry.active:
                rendered = render_syllable(entry.revised)
                other = rendered_owner.get(rendered)
                if other is not None and (
                    entry.synonym_group is None or entry.synonym_group != other.synonym_group
                ):
                    raise PronunciationClash(
                        f"radicals {other.glyph!r} and {entry.glyph!r} both render "
                        f"revised pronunciation {rendered!r} outside a synonym group"
                    )
                rendered_owner.setdefault(rendered, entry)
            else:
                target = self._by_glyph.get(entry.redirect_to or "")
                if target is None:
                    raise DanglingRedirect(
                        f"abolished radical {entry.glyph!r} redirects to missing "
                        f"{entry.redirect_to!r}"
                    )
                if not target.active:
                    raise DanglingRedirect(
                        f"abolished radical {entry.glyph!r} redirects to abolished "
                        f"{target.glyph!r}; redirects must resolve in one hop"
                    )

    def __contains__(self, glyph: str) -> bool:
        return glyph in self._by_glyph

    def __len__(self) -> int:
        return len(self._by_glyph)

    def get(self, glyph: str) -> RadicalEntry | None:
        return self._by_glyph.get(glyph)

    def entries(self) -> list[RadicalEntry]:
        """All entries, sorted by (index, glyph) for stable reports."""
        return sorted(self._by_glyph.values(), key=lambda e: (e.index, e.glyph))

    def resolve(self, candidates: Sequence[str]) -> RadicalEntry:
        """Pick the effective radical for a positional candidate list.

        Candidates are listed in positional preference order (top, then
        left, then the rest).  A candidate flagged as a position exception
        wins over any position; abolition redirects are followed after the
        pick.  Raises :class:`NoActiveRadical` when nothing usable remains.
        """
        if not candidates:
            raise NoActiveRadical("character lists no radical candidates")
        picked: RadicalEntry | None = None
        for glyph in candidates:
            entry = self._by_glyph.get(glyph)
            if entry is None:
                raise NoActiveRadical(f"radical candidate {glyph!r} is not in the table")
            if entry.position_exception:
                picked = entry
                break
        if picked is None:
            picked = self._by_glyph[candidates[0]]
        if not picked.active:
            picked = self._by_glyph[picked.redirect_to or ""]
        if not picked.active:  # guarded by _validate; kept as a safety net
            raise NoActiveRadical(f"no active radical among {list(candidates)!r}")
        return picked


def _parse_tone(field: str, row: int) -> Tone | None:
    if not field:
        return None
    if field not in "01234" or len(field) != 1:
        raise DataError(f"radical table row {row}: bad default_tone {field!r}")
    return Tone(int(field))


def _rows(source: str | Path | IO[str]) -> Iterator[list[str]]:
    if hasattr(source, "read"):
        yield from csv.reader(source, delimiter="\t", quoting=csv.QUOTE_NONE)
    else:
        with open(source, encoding="utf-8", newline="") as handle:
            yield from csv.reader(handle, delimiter="\t", quoting=csv.QUOTE_NONE)


def load_radical_table(source: str | Path | IO[str]) -> RadicalTable:
    """Load and validate a radical table from a TSV path or text stream."""
    entries: list[RadicalEntry] = []
    rows = _rows(source)
    header = next(rows, None)
    if header is None or [h.strip() for h in header[: len(_HEADER)]] != _HEADER:
        raise DataError("radical table: missing or wrong header line")
    for number, row in enumerate(rows, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        row = list(row) + [""] * (len(_HEADER) - len(row))
        index_s, glyph, original_s, status, revised_or_redirect = (f.strip() for f in row[:5])
        synonym = row[5].strip() or None
        default_tone = _parse_tone(row[6].strip(), number)
        exception = row[7].strip() == "1"
        if not glyph:
            raise DataError(f"radical table row {number}: empty glyph")
        try:
            index = int(index_s)
        except ValueError:
            raise DataError(f"radical table row {number}: bad index {index_s!r}") from None
        if index <= 0:
            raise DataError(f"radical table row {number}: index must be positive")
        try:
            original = parse_syllable(original_s)
        except MalformedSyllable as exc:
            raise DataError(f"radical table row {number}: {exc}") from None
        if status == "active":
            try:
                revised = parse_syllable(revised_or_redirect)
            except MalformedSyllable as exc:
                raise DataError(f"radical table row {number}: {exc}") from None
            if revised.tone is not Tone.NEUTRAL:
                raise DataError(
                    f"radical table row {number}: revised pronunciation carries a tone; "
                    "use the default_tone column instead"
                )
            if not 1 <= len(revised.base) <= 4:
                raise DataError(
                    f"radical table row {number}: revised base {revised.base!r} "
                    "must be 1-4 letters"
                )
            entries.append(
                RadicalEntry(
                    glyph=glyph,
                    index=index,
                    original=original,
                    revised=revised,
                    synonym_group=synonym,
                    default_tone=default_tone,
                    position_exception=exception,
                )
            )
        elif status == "abolished":
            if not revised_or_redirect:
                raise DanglingRedirect(
                    f"abolished radical {glyph!r} (row {number}) has no redirect target"
                )
            entries.append(
                RadicalEntry(
                    glyph=glyph,
                    index=index,
                    original=original,
                    redirect_to=revised_or_redirect,
                    synonym_group=synonym,
                    default_tone=default_tone,
                    position_exception=exception,
                )
            )
        else:
            raise DataError(f"radical table row {number}: unknown status {status!r}")
    return RadicalTable(entries)


@dataclass(frozen=True)
class RadicalAudit:
    """Repetition census over a loaded (hence already consistent) table."""

    repetition: dict[str, int]  # active glyph -> entries sharing its revised form
    original_groups: list[tuple[str, tuple[str, ...]]]  # toneless base -> glyphs
    active_count: int
    abolished_count: int

    @property
    def passed(self) -> bool:
        return True  # construction of the table already rejected clashes

    def lines(self) -> list[str]:
        out = [
            f"radicals\t{self.active_count + self.abolished_count}",
            f"active\t{self.active_count}",
            f"abolished\t{self.abolished_count}",
        ]
        for glyph in sorted(self.repetition):
            if self.repetition[glyph] > 1:
                out.append(f"repetition\t{glyph}\t{self.repetition[glyph]}")
        for base, glyphs in self.original_groups:
            out.append(f"original-group\t{base}\t{' '.join(glyphs)}")
        out.append("status\tpass" if self.passed else "status\tfail")
        return out


def audit_radicals(table: RadicalTable) -> RadicalAudit:
    """Count shared revised pronunciations and original-pronunciation groups.

    Repetition counts include the entry itself, so the two members of a
    two-radical synonym group each report 2.  Original-pronunciation groups
    collect all radicals whose dictionary pronunciations share a toneless
    base (the overcrowded families the revision exists to split up).
    """
    active = [e for e in table.entries() if e.active]
    abolished_count = len(table) - len(active)
    by_rendered: dict[str, list[str]] = {}
    for entry in active:
        by_rendered.setdefault(render_syllable(entry.revised), []).append(entry.glyph)
    repetition = {
        glyph: len(glyphs) for glyphs in by_rendered.values() for glyph in glyphs
    }
    by_original: dict[str, list[str]] = {}
    for entry in table.entries():
        by_original.setdefault(entry.original.base, []).append(entry.glyph)
    original_groups = [
        (base, tuple(glyphs))
        for base, glyphs in sorted(by_original.items())
        if len(glyphs) > 1
    ]
    return RadicalAudit(
        repetition=repetition,
        original_groups=original_groups,
        active_count=len(active),
        abolished_count=abolished_count,
    )
