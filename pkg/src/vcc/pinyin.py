"""Pinyin syllables under the modified tone-mark scheme.

Tones are written as diacritics on the nucleus vowel: macron (first tone),
acute (second), circumflex (third) and grave (fourth); the neutral tone is
unmarked.  The circumflex replaces the conventional caron so that every
marked vowel has a precomposed glyph with a single-byte slot in the VCC-8
code page; carons are still accepted on input and normalized away.

"ü" is special-cased twice:

* in numeric style ("lv3") the letter "v" stands for ü;
* in rendered form every ü becomes the digraph "u" + "ü", with the tone
  mark carried by the second vowel when ü is the nucleus ("lü" + third
  tone renders as "luǚ").  There is no precomposed circumflex-ü, so the
  caron glyphs ǖǘǚǜ fill the ü column and are treated as members of the
  canonical mark classes.

Syllable bases are lowercase letters.  A base without any vowel is legal
only in the neutral tone; such bases are used by the single-letter radical
prefixes ("h", "s", "p", "d", "z").

All functions here are pure and the module-level tables are immutable, so
everything is safe for concurrent use.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import IntEnum

from .errors import MalformedSyllable

VOWELS = "aeiouü"

# vowel -> rendered glyphs for tones 1..4 (the neutral tone is unmarked)
_MARKS = {
    "a": "āáâà",
    "e": "ēéêè",
    "i": "īíîì",
    "o": "ōóôò",
    "u": "ūúûù",
    "ü": "ǖǘǚǜ",
}

# caron glyphs are accepted on input only and normalize to the circumflex class
_CARON_TO_CIRCUMFLEX = {"ǎ": "â", "ě": "ê", "ǐ": "î", "ǒ": "ô", "ǔ": "û"}

_PARSE_MARK: dict[str, tuple[str, int]] = {}
for _vowel, _glyphs in _MARKS.items():
    for _tone, _glyph in enumerate(_glyphs, start=1):
        _PARSE_MARK[_glyph] = (_vowel, _tone)
for _caron, _circ in _CARON_TO_CIRCUMFLEX.items():
    _PARSE_MARK[_caron] = _PARSE_MARK[_circ]

_NORMALIZE_TABLE = str.maketrans(_CARON_TO_CIRCUMFLEX)

#: every glyph that can appear in a rendered syllable besides a-z
RENDERED_EXTRAS = frozenset("ü") | set(_PARSE_MARK)


class Tone(IntEnum):
    """The five tones, ordered as used for collision assignment."""

    NEUTRAL = 0
    FIRST = 1
    SECOND = 2
    THIRD = 3
    FOURTH = 4


#: canonical assignment order for collision resolution
TONE_ORDER = (Tone.NEUTRAL, Tone.FIRST, Tone.SECOND, Tone.THIRD, Tone.FOURTH)


def has_vowel(base: str) -> bool:
    """True if *base* contains a vowel that could carry a tone mark."""
    return any(ch in VOWELS for ch in base)


def _nucleus(base: str) -> int:
    """Index of the tone-mark carrier: a > e > o > last of i/u/ü; -1 if none."""
    for vowel in "aeo":
        pos = base.find(vowel)
        if pos >= 0:
            return pos
    return max(base.rfind("i"), base.rfind("u"), base.rfind("ü"))


@dataclass(frozen=True)
class Syllable:
    """A toneless base plus a tone.

    The constructor validates its arguments, so every Syllable that exists
    is well formed: non-empty lowercase base, at most one ü and never in
    first position, and a vowel present whenever the tone is non-neutral.
    """

    base: str
    tone: Tone = Tone.NEUTRAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "tone", Tone(self.tone))
        if not self.base:
            raise MalformedSyllable("empty syllable base")
        for ch in self.base:
            if not ("a" <= ch <= "z" or ch == "ü"):
                raise MalformedSyllable(f"illegal letter {ch!r} in base {self.base!r}")
        if self.base.count("ü") > 1:
            raise MalformedSyllable(f"more than one ü in base {self.base!r}")
        if self.base[0] == "ü":
            raise MalformedSyllable("ü cannot start a syllable")
        if self.tone is not Tone.NEUTRAL and not has_vowel(self.base):
            raise MalformedSyllable(
                f"base {self.base!r} has no vowel to carry tone {int(self.tone)}"
            )


def parse_syllable(text: str) -> Syllable:
    """Parse numeric style ("zhi1", "lv3") or diacritic style ("zhī", "luǚ").

    A trailing digit 0-4 or exactly one marked vowel gives the tone; with
    neither the syllable is neutral.  Caron and circumflex marks both mean
    the third tone, and the rendered ü digraph "uü" collapses back to ü.
    """
    if not text:
        raise MalformedSyllable("empty syllable")
    s = unicodedata.normalize("NFC", text).lower()
    # combining third-tone marks on ü have no precomposed form
    s = s.replace("ü̂", "ǚ").replace("ǚ", "ǚ")
    tone: Tone | None = None
    if s and s[-1].isdigit():
        if s[-1] not in "01234":
            raise MalformedSyllable(f"tone digit out of range in {text!r}")
        tone = Tone(int(s[-1]))
        s = s[:-1]
    base_chars: list[str] = []
    for ch in s:
        mark = _PARSE_MARK.get(ch)
        if mark is not None:
            if tone is not None:
                raise MalformedSyllable(f"two tone indicators in {text!r}")
            tone = Tone(mark[1])
            base_chars.append(mark[0])
        else:
            base_chars.append(ch)
    base = "".join(base_chars).replace("v", "ü").replace("uü", "ü")
    try:
        return Syllable(base, tone if tone is not None else Tone.NEUTRAL)
    except MalformedSyllable as exc:
        raise MalformedSyllable(f"cannot parse syllable {text!r}: {exc}") from None


def render_syllable(syllable: Syllable) -> str:
    """Render to the canonical diacritic form; total on valid syllables."""
    nucleus = _nucleus(syllable.base)
    out: list[str] = []
    mark_at = -1
    for i, ch in enumerate(syllable.base):
        if ch == "ü":
            out.append("u")
        if i == nucleus:
            mark_at = len(out)
        out.append(ch)
    if syllable.tone is not Tone.NEUTRAL:
        out[mark_at] = _MARKS[out[mark_at]][syllable.tone - 1]
    return "".join(out)


#: final rewrites applied by :func:`abbreviate`, longest pattern first
ABBREVIATIONS: tuple[tuple[str, str], ...] = (
    ("uang", "ug"),
    ("ing", "ig"),
    ("ong", "og"),
)


def abbreviate(rendered: str, rules: tuple[tuple[str, str], ...] = ABBREVIATIONS) -> str:
    """Shorten the final of a rendered syllable, keeping its tone mark.

    "zhōng" becomes "zhōg" and "guāng" becomes "gūg" (the mark moves to the
    surviving vowel).  Syllables no rule matches are returned unchanged, so
    the function is idempotent.
    """
    syllable = parse_syllable(rendered)
    base = syllable.base
    for final, short in rules:
        if base.endswith(final):
            base = base[: -len(final)] + short
            break
    if base == syllable.base:
        return rendered
    return render_syllable(Syllable(base, syllable.tone))


def normalize_marks(text: str) -> str:
    """Rewrite caron-marked vowels to the canonical circumflex class.

    Applied before any comparison or reverse lookup of rendered text, so
    either third-tone glyph family is accepted everywhere.
    """
    s = unicodedata.normalize("NFC", text)
    s = s.replace("ü̂", "ǚ").replace("ǚ", "ǚ")
    return s.translate(_NORMALIZE_TABLE)
