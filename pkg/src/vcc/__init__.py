"""Virtual-form transliteration for Chinese text.

Each character becomes a short alphabetic token: the pinyin of the
character's radical (cut down and re-toned so that no two characters ever
share a spelling) joined by "·" to the character's toned pinyin body.  The
compiled character-to-token table is a checked bijection, so encoding is
lossless and decoding needs no dictionary context.  An 8-bit code page
covers every symbol a token can contain.
"""

from .codec import (
    Passthrough,
    WordList,
    WordToken,
    decode_text,
    encode_text,
    load_wordlist,
    segment,
)
from .codepage import Alphabet, codepage_table, decode_bytes, encode_bytes, vcc8
from .errors import (
    DataError,
    DuplicateGlyph,
    FallbackDataMissing,
    FormatVersionMismatch,
    IntegrityFailure,
    MalformedSyllable,
    MalformedToken,
    NoActiveRadical,
    PronunciationClash,
    SymbolNotInAlphabet,
    UnknownCharacter,
    UnknownToken,
    UnresolvableCollision,
    VccError,
)
from .lexicon import (
    CharacterEntry,
    CompileAudit,
    Lexicon,
    VirtualForm,
    audit_lexicon,
    compile_lexicon,
    compress_lexicon,
    load_character_table,
    load_lexicon,
    save_lexicon,
)
from .pinyin import (
    ABBREVIATIONS,
    Syllable,
    Tone,
    abbreviate,
    normalize_marks,
    parse_syllable,
    render_syllable,
)
from .radicals import (
    RadicalAudit,
    RadicalEntry,
    RadicalTable,
    audit_radicals,
    load_radical_table,
)
from .report import CorpusStats, ScoreMatrix, corpus_stats, load_score_matrix

__version__ = "0.1.0"


def sample_path(name: str):
    """Handle on one of the bundled sample tables (``radicals.tsv``,
    ``characters.tsv``, ``words.tsv``, ``scores.tsv``)."""
    from importlib import resources

    return resources.files("vcc") / "data" / name


__all__ = [
    "ABBREVIATIONS",
    "Alphabet",
    "CharacterEntry",
    "CompileAudit",
    "CorpusStats",
    "DataError",
    "DuplicateGlyph",
    "FallbackDataMissing",
    "FormatVersionMismatch",
    "IntegrityFailure",
    "Lexicon",
    "MalformedSyllable",
    "MalformedToken",
    "NoActiveRadical",
    "Passthrough",
    "PronunciationClash",
    "RadicalAudit",
    "RadicalEntry",
    "RadicalTable",
    "ScoreMatrix",
    "Syllable",
    "SymbolNotInAlphabet",
    "Tone",
    "UnknownCharacter",
    "UnknownToken",
    "UnresolvableCollision",
    "VccError",
    "VirtualForm",
    "WordList",
    "WordToken",
    "abbreviate",
    "audit_lexicon",
    "audit_radicals",
    "codepage_table",
    "compile_lexicon",
    "compress_lexicon",
    "corpus_stats",
    "decode_bytes",
    "decode_text",
    "encode_bytes",
    "encode_text",
    "load_character_table",
    "load_lexicon",
    "load_radical_table",
    "load_score_matrix",
    "load_wordlist",
    "normalize_marks",
    "parse_syllable",
    "render_syllable",
    "sample_path",
    "save_lexicon",
    "segment",
    "vcc8",
    "__version__",
]
