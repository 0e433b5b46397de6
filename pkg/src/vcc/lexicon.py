"""Compiling a character inventory into an injective virtual-form lexicon.

Every character maps to exactly one rendered form and every rendered form
maps back to exactly one character; that bijection is the whole point of
the scheme and is certified both when a lexicon is built and when one is
loaded from disk.

Form shapes
-----------

* bare:       ``yī``                      (numerals and flagged characters)
* prefixed:   ``kou·wèi``                 (radical prefix ``·`` body)
* fallback:   ``yue'juan·téng``           (prefix ``'`` component ``·`` body)

Collision resolution
--------------------

Characters sharing a rendered form are sorted by descending frequency
(ties by code point).  The most frequent keeps the current prefix tone;
the rest re-tone the prefix in the order neutral, first, second, third,
fourth, skipping any tone whose rendering is already taken.  A prefix
whose base has no vowel (the single-letter radicals) cannot carry a mark,
so a non-neutral assignment escalates to the radical's full original base:
one-stroke 一 prefixes as "h", but a re-toned neighbour becomes "hēng·lì".
Members beyond the five tones fall back to the component-reading shape,
which requires the character to supply a component reading.

Character table file format (UTF-8, tab-separated, one header line)::

    glyph  readings  radicals  frequency  component  flags

``readings`` is one or more numeric-pinyin readings joined by ``|`` (the
first is the one compiled), ``radicals`` a comma-joined positional
candidate list, ``component`` the optional reading of the character minus
its radical, and ``flags`` a comma-joined subset of ``numeral``/``bare``.
"""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Mapping, Sequence

from .errors import (
    DataError,
    DuplicateGlyph,
    FallbackDataMissing,
    FormatVersionMismatch,
    IntegrityFailure,
    MalformedSyllable,
    UnresolvableCollision,
)
from .pinyin import (
    ABBREVIATIONS,
    TONE_ORDER,
    Syllable,
    Tone,
    abbreviate,
    has_vowel,
    parse_syllable,
    render_syllable,
)
from .radicals import RadicalEntry, RadicalTable

FORMAT_VERSION = "1"
_MAX_PASSES = 10

_CHAR_HEADER = ["glyph", "readings", "radicals", "frequency", "component", "flags"]
_KNOWN_FLAGS = {"numeral", "bare"}


@dataclass(frozen=True)
class CharacterEntry:
    glyph: str
    readings: tuple[Syllable, ...]
    radical_candidates: tuple[str, ...] = ()
    frequency: float = 0.0
    component_reading: Syllable | None = None
    is_numeral: bool = False
    is_bare: bool = False

    @property
    def primary_reading(self) -> Syllable:
        return self.readings[0]

    @property
    def bare(self) -> bool:
        return self.is_bare or self.is_numeral


@dataclass(frozen=True)
class VirtualForm:
    """One rendered token: an optional prefix / infix and a body syllable."""

    body: Syllable
    radical: Syllable | None = None
    infix: Syllable | None = None

    def __post_init__(self) -> None:
        if self.infix is not None and self.radical is None:
            raise MalformedSyllable("a fallback infix requires a radical prefix")

    @property
    def kind(self) -> str:
        if self.infix is not None:
            return "fallback"
        if self.radical is not None:
            return "prefixed"
        return "bare"

    @property
    def rendered(self) -> str:
        body = render_syllable(self.body)
        if self.radical is None:
            return body
        prefix = render_syllable(self.radical)
        if self.infix is not None:
            prefix = f"{prefix}'{render_syllable(self.infix)}"
        return f"{prefix}·{body}"

    @classmethod
    def from_rendered(cls, text: str) -> "VirtualForm":
        """Rebuild a form from its rendered string (used when loading)."""
        if text.count("·") > 1 or text.count("'") > 1:
            raise MalformedSyllable(f"too many separators in form {text!r}")
        if "·" not in text:
            if "'" in text:
                raise MalformedSyllable(f"fallback marker without prefix in {text!r}")
            return cls(body=parse_syllable(text))
        head, body = text.split("·")
        if "'" in head:
            prefix, infix = head.split("'")
            return cls(
                body=parse_syllable(body),
                radical=parse_syllable(prefix),
                infix=parse_syllable(infix),
            )
        return cls(body=parse_syllable(body), radical=parse_syllable(head))


@dataclass(frozen=True)
class CompileAudit:
    """What happened during compilation, for reports and reproducibility."""

    entry_count: int
    bare_count: int
    prefixed_count: int
    fallback_count: int
    max_group_size: int
    collision_counts: dict[str, int] = field(repr=False)  # glyph -> initial group size
    residual_collisions: int = 0

    @property
    def passed(self) -> bool:
        return self.residual_collisions == 0

    def lines(self) -> list[str]:
        colliding = sum(1 for size in self.collision_counts.values() if size > 1)
        return [
            f"entries\t{self.entry_count}",
            f"bare\t{self.bare_count}",
            f"prefixed\t{self.prefixed_count}",
            f"fallback\t{self.fallback_count}",
            f"colliding characters\t{colliding}",
            f"largest group\t{self.max_group_size}",
            f"residual collisions\t{self.residual_collisions}",
            f"result\t{'pass' if self.passed else 'FAIL'}",
        ]


class Lexicon:
    """An immutable certified bijection between glyphs and rendered forms."""

    version = FORMAT_VERSION

    def __init__(
        self,
        forward: Mapping[str, VirtualForm],
        audit: CompileAudit | None = None,
        frequencies: Mapping[str, float] | None = None,
    ):
        self._forward = dict(sorted(forward.items()))
        reverse: dict[str, str] = {}
        for glyph, form in self._forward.items():
            rendered = form.rendered
            if rendered in reverse:
                raise IntegrityFailure(
                    f"duplicate rendered form {rendered!r} for {reverse[rendered]!r} "
                    f"and {glyph!r}"
                )
            reverse[rendered] = glyph
        self._reverse = reverse
        self.audit = audit
        self.frequencies = dict(frequencies) if frequencies else {}

    def __len__(self) -> int:
        return len(self._forward)

    def __contains__(self, glyph: str) -> bool:
        return glyph in self._forward

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._forward == other._forward

    __hash__ = None  # defining __eq__ makes lexicons unhashable on purpose

    def form(self, glyph: str) -> VirtualForm:
        return self._forward[glyph]

    def glyph_for(self, rendered: str) -> str | None:
        return self._reverse.get(rendered)

    def glyphs(self) -> list[str]:
        return list(self._forward)

    def items(self) -> Iterator[tuple[str, VirtualForm]]:
        return iter(self._forward.items())


def _load_rows(source: str | Path | IO[str]) -> Iterator[list[str]]:
    if hasattr(source, "read"):
        yield from csv.reader(source, delimiter="\t", quoting=csv.QUOTE_NONE)
    else:
        with open(source, encoding="utf-8", newline="") as handle:
            yield from csv.reader(handle, delimiter="\t", quoting=csv.QUOTE_NONE)


def load_character_table(source: str | Path | IO[str]) -> list[CharacterEntry]:
    """Load character rows from TSV; glyphs must be unique."""
    rows = _load_rows(source)
    header = next(rows, None)
    if header is None or [h.strip() for h in header[: len(_CHAR_HEADER)]] != _CHAR_HEADER:
        raise DataError("character table: missing or wrong header line")
    entries: list[CharacterEntry] = []
    seen: set[str] = set()
    for number, row in enumerate(rows, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        row = list(row) + [""] * (len(_CHAR_HEADER) - len(row))
        glyph, readings_s, radicals_s, frequency_s, component_s, flags_s = (
            f.strip() for f in row[:6]
        )
        if not glyph:
            raise DataError(f"character table row {number}: empty glyph")
        if glyph in seen:
            raise DuplicateGlyph(f"character {glyph!r} appears twice (row {number})")
        seen.add(glyph)
        if not readings_s:
            raise DataError(f"character table row {number}: no readings")
        try:
            readings = tuple(parse_syllable(r) for r in readings_s.split("|"))
            component = parse_syllable(component_s) if component_s else None
        except MalformedSyllable as exc:
            raise DataError(f"character table row {number}: {exc}") from None
        try:
            frequency = float(frequency_s) if frequency_s else 0.0
        except ValueError:
            raise DataError(
                f"character table row {number}: bad frequency {frequency_s!r}"
            ) from None
        if frequency < 0:
            raise DataError(f"character table row {number}: negative frequency")
        flags = {f for f in flags_s.split(",") if f}
        unknown = flags - _KNOWN_FLAGS
        if unknown:
            raise DataError(f"character table row {number}: unknown flags {sorted(unknown)}")
        candidates = tuple(c for c in radicals_s.split(",") if c)
        entries.append(
            CharacterEntry(
                glyph=glyph,
                readings=readings,
                radical_candidates=candidates,
                frequency=frequency,
                component_reading=component,
                is_numeral="numeral" in flags,
                is_bare="bare" in flags,
            )
        )
    return entries


def _prefix_syllable(radical: RadicalEntry, tone: Tone) -> Syllable | None:
    """The prefix of *radical* at *tone*, or None if it cannot be rendered.

    Single-letter prefixes have no vowel, so any non-neutral tone switches
    to the radical's full original base ("h" -> "hēng").
    """
    base = radical.revised.base
    if tone is not Tone.NEUTRAL and not has_vowel(base):
        base = radical.original.base
    try:
        return Syllable(base, tone)
    except MalformedSyllable:
        return None


def resolve_radical(entry: CharacterEntry, table: RadicalTable) -> RadicalEntry:
    """The effective radical of *entry* (positional preference, exceptions,
    abolition redirects)."""
    return table.resolve(entry.radical_candidates)


def compile_lexicon(chars: Sequence[CharacterEntry], table: RadicalTable) -> Lexicon:
    """Build the certified lexicon for *chars* against *table*.

    Deterministic: the same inputs produce the identical lexicon, byte for
    byte once saved.  Raises :class:`FallbackDataMissing` when a collision
    group overflows five tones without component data, and
    :class:`UnresolvableCollision` if no injective fixed point is reached.
    """
    if not chars:
        raise DataError("character table is empty")
    ordered = sorted(chars, key=lambda c: c.glyph)
    seen: set[str] = set()
    for entry in ordered:
        if entry.glyph in seen:
            raise DuplicateGlyph(f"character {entry.glyph!r} appears twice")
        seen.add(entry.glyph)

    by_glyph = {c.glyph: c for c in ordered}
    radical_of: dict[str, RadicalEntry | None] = {}
    forms: dict[str, VirtualForm] = {}
    for entry in ordered:
        if entry.bare:
            radical_of[entry.glyph] = None
            forms[entry.glyph] = VirtualForm(body=entry.primary_reading)
        else:
            radical = resolve_radical(entry, table)
            radical_of[entry.glyph] = radical
            prefix = Syllable(radical.revised.base, radical.prefix_tone())
            forms[entry.glyph] = VirtualForm(body=entry.primary_reading, radical=prefix)

    collision_counts: dict[str, int] = {}
    fallback_glyphs: set[str] = set()
    for pass_number in range(_MAX_PASSES):
        groups: dict[str, list[str]] = {}
        for glyph, form in forms.items():
            groups.setdefault(form.rendered, []).append(glyph)
        if pass_number == 0:
            for members in groups.values():
                for glyph in members:
                    collision_counts[glyph] = len(members)
        collisions = {k: v for k, v in groups.items() if len(v) > 1}
        if not collisions:
            break
        used = set(groups)
        for key in sorted(collisions):
            members = sorted(
                collisions[key], key=lambda g: (-by_glyph[g].frequency, g)
            )
            for glyph in members[1:]:
                radical = radical_of[glyph]
                if radical is None:
                    raise UnresolvableCollision(
                        f"bare form {key!r} is shared by {members!r}; bare forms "
                        "have no prefix to re-tone"
                    )
                body = forms[glyph].body
                replacement: VirtualForm | None = None
                for tone in TONE_ORDER:
                    prefix = _prefix_syllable(radical, tone)
                    if prefix is None:
                        continue
                    candidate = VirtualForm(body=body, radical=prefix)
                    if candidate.rendered not in used:
                        replacement = candidate
                        break
                if replacement is None:
                    component = by_glyph[glyph].component_reading
                    if component is None:
                        raise FallbackDataMissing(
                            f"character {glyph!r} overflows the five-tone capacity of "
                            f"group {key!r} and has no component reading"
                        )
                    replacement = VirtualForm(
                        body=body,
                        radical=Syllable(radical.revised.base, radical.prefix_tone()),
                        infix=component,
                    )
                    fallback_glyphs.add(glyph)
                forms[glyph] = replacement
                used.add(replacement.rendered)
    rendered_all = [form.rendered for form in forms.values()]
    residual = len(rendered_all) - len(set(rendered_all))
    if residual:
        raise UnresolvableCollision(
            f"{residual} duplicate rendered forms remain after {_MAX_PASSES} passes"
        )

    kinds = [form.kind for form in forms.values()]
    audit = CompileAudit(
        entry_count=len(forms),
        bare_count=kinds.count("bare"),
        prefixed_count=kinds.count("prefixed"),
        fallback_count=kinds.count("fallback"),
        max_group_size=max(collision_counts.values(), default=0),
        collision_counts=collision_counts,
        residual_collisions=0,
    )
    frequencies = {c.glyph: c.frequency for c in ordered}
    return Lexicon(forms, audit=audit, frequencies=frequencies)


def audit_lexicon(lexicon: Lexicon) -> CompileAudit:
    """The audit carried by a compiled lexicon, or a recomputed census.

    A lexicon loaded from disk no longer knows the compile-time groups, so
    the recomputed counts group prefixed forms by (toneless prefix base,
    rendered body) - identical to the compile-time census except where a
    single-letter prefix escalated to its full base.
    """
    if lexicon.audit is not None:
        return lexicon.audit
    groups: dict[tuple[str, str], list[str]] = {}
    kinds: list[str] = []
    for glyph, form in lexicon.items():
        kinds.append(form.kind)
        if form.radical is None:
            key = ("", form.rendered)
        else:
            key = (form.radical.base, render_syllable(form.body))
        groups.setdefault(key, []).append(glyph)
    collision_counts: dict[str, int] = {}
    for members in groups.values():
        for glyph in members:
            collision_counts[glyph] = len(members)
    return CompileAudit(
        entry_count=len(lexicon),
        bare_count=kinds.count("bare"),
        prefixed_count=kinds.count("prefixed"),
        fallback_count=kinds.count("fallback"),
        max_group_size=max(collision_counts.values(), default=0),
        collision_counts=collision_counts,
        residual_collisions=0,
    )


def compress_lexicon(
    lexicon: Lexicon, rules: tuple[tuple[str, str], ...] | None = None
) -> Lexicon:
    """Shorten forms while preserving the bijection.

    Two passes, both deterministic and both falling back to the unshortened
    form whenever shortening would collide:

    1. abbreviation of every syllable final (``ing/ong/uang`` rewrites);
    2. greedy prefix shortening - characters in descending frequency order
       try successively longer prefixes of their radical base and keep the
       shortest rendering that stays unique.

    Total rendered length never increases.
    """
    rules = rules if rules is not None else ABBREVIATIONS

    def order(glyph: str) -> tuple[float, str]:
        return (-lexicon.frequencies.get(glyph, 0.0), glyph)

    def shorten_syllable(syllable: Syllable) -> Syllable:
        return parse_syllable(abbreviate(render_syllable(syllable), rules))

    forms = {glyph: form for glyph, form in lexicon.items()}
    glyph_order = sorted(forms, key=order)

    # pass 1: abbreviation
    current = {glyph: form.rendered for glyph, form in forms.items()}
    for glyph in glyph_order:
        form = forms[glyph]
        candidate = VirtualForm(
            body=shorten_syllable(form.body),
            radical=shorten_syllable(form.radical) if form.radical else None,
            infix=shorten_syllable(form.infix) if form.infix else None,
        )
        rendered = candidate.rendered
        if rendered != current[glyph]:
            others = set(current.values()) - {current[glyph]}
            if rendered in others:
                continue
            forms[glyph] = candidate
            current[glyph] = rendered

    # pass 2: greedy prefix shortening, shortest bases to the most frequent
    for glyph in glyph_order:
        form = forms[glyph]
        if form.radical is None:
            continue
        base = form.radical.base
        for length in range(1, len(base)):
            try:
                prefix = Syllable(base[:length], form.radical.tone)
            except MalformedSyllable:
                continue
            candidate = VirtualForm(body=form.body, radical=prefix, infix=form.infix)
            rendered = candidate.rendered
            others = set(current.values()) - {current[glyph]}
            if rendered in others:
                continue
            forms[glyph] = candidate
            current[glyph] = rendered
            break

    return Lexicon(forms, audit=None, frequencies=lexicon.frequencies)


def _serialize(lexicon: Lexicon) -> str:
    body = "".join(f"{glyph}\t{form.rendered}\n" for glyph, form in lexicon.items())
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    return f"vcclex\t{lexicon.version}\nsha256\t{digest}\n{body}"


def save_lexicon(lexicon: Lexicon, sink: str | Path | IO[str]) -> None:
    """Write the versioned, checksummed lexicon file (glyph order, UTF-8)."""
    text = _serialize(lexicon)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        Path(sink).write_text(text, encoding="utf-8", newline="")


def load_lexicon(source: str | Path | IO[str]) -> Lexicon:
    """Load a lexicon file, verifying version, checksum and injectivity."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    lines = text.split("\n")
    if len(lines) < 2:
        raise FormatVersionMismatch("not a lexicon file: missing header")
    tag = lines[0].split("\t")
    if len(tag) != 2 or tag[0] != "vcclex":
        raise FormatVersionMismatch("not a lexicon file: bad format tag")
    if tag[1] != FORMAT_VERSION:
        raise FormatVersionMismatch(
            f"lexicon format version {tag[1]!r} is not supported (expected "
            f"{FORMAT_VERSION!r})"
        )
    checksum = lines[1].split("\t")
    if len(checksum) != 2 or checksum[0] != "sha256":
        raise IntegrityFailure("missing checksum line")
    body = "\n".join(lines[2:])
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if digest != checksum[1]:
        raise IntegrityFailure("checksum mismatch: lexicon file is corrupt or edited")
    forward: dict[str, VirtualForm] = {}
    for number, line in enumerate(lines[2:], start=3):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise IntegrityFailure(f"lexicon line {number}: expected glyph<TAB>form")
        glyph, rendered = parts
        if glyph in forward:
            raise IntegrityFailure(f"lexicon line {number}: duplicate glyph {glyph!r}")
        try:
            forward[glyph] = VirtualForm.from_rendered(rendered)
        except MalformedSyllable as exc:
            raise IntegrityFailure(f"lexicon line {number}: {exc}") from None
    return Lexicon(forward)
