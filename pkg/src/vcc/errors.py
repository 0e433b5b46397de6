"""Exception types shared across the package.

Every error raised on purpose by this package derives from :class:`VccError`,
so callers (including the CLI) can distinguish data problems from bugs.
"""

from __future__ import annotations


class VccError(Exception):
    """Base class for all errors raised by this package."""


class DataError(VccError):
    """Structurally malformed input data (bad TSV row, missing column, ...)."""


class MalformedSyllable(VccError):
    """A pinyin syllable that cannot be parsed or constructed."""


class SymbolNotInAlphabet(VccError):
    """A symbol (or byte) with no slot in the active code page."""

    def __init__(self, symbol: str, position: int):
        self.symbol = symbol
        self.position = position
        super().__init__(f"symbol {symbol!r} at position {position} is not in the alphabet")


class DuplicateGlyph(DataError):
    """The same glyph appears twice in a table that is keyed by glyph."""


class DanglingRedirect(DataError):
    """An abolished radical without a usable redirect target."""


class PronunciationClash(DataError):
    """Two radicals outside a synonym group share a revised pronunciation."""


class NoActiveRadical(VccError):
    """No radical candidate of a character resolves to an active entry."""


class FallbackDataMissing(VccError):
    """A collision group overflowed five tones and the overflow member has no
    component reading to build a fallback form from."""


class UnresolvableCollision(VccError):
    """Collision resolution could not reach an injective fixed point."""


class FormatVersionMismatch(VccError):
    """A serialized lexicon whose header does not match this format version."""


class IntegrityFailure(VccError):
    """A serialized lexicon whose checksum or injectivity check fails."""


class UnknownCharacter(VccError):
    """A character outside the lexicon encountered while encoding."""

    def __init__(self, glyph: str, position: int):
        self.glyph = glyph
        self.position = position
        super().__init__(f"unknown character {glyph!r} at position {position}")


class UnknownToken(VccError):
    """A token with no reverse-lexicon entry encountered while decoding."""

    def __init__(self, piece: str, position: int):
        self.piece = piece
        self.position = position
        super().__init__(f"unknown token {piece!r} at position {position}")


class MalformedToken(VccError):
    """A token that violates the form grammar (for example two separators)."""

    def __init__(self, piece: str, position: int):
        self.piece = piece
        self.position = position
        super().__init__(f"malformed token {piece!r} at position {position}")
