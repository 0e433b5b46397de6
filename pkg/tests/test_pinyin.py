"""Syllable parsing, rendering, tone marks, and final abbreviation."""

import pytest
from hypothesis import given, strategies as st

from vcc.errors import MalformedSyllable
from vcc.pinyin import (
    ABBREVIATIONS,
    Syllable,
    Tone,
    abbreviate,
    has_vowel,
    normalize_marks,
    parse_syllable,
    render_syllable,
)


@pytest.mark.parametrize(
    "numeric,rendered",
    [
        ("ma1", "mā"),
        ("ma2", "má"),
        ("ma3", "mâ"),
        ("ma4", "mà"),
        ("ma0", "ma"),
        ("ma", "ma"),
        ("zhi1", "zhī"),
        ("zhong1", "zhōng"),
        ("xie2", "xié"),
        ("hao3", "hâo"),
        ("jian4", "jiàn"),
        # nucleus: a beats everything, e beats o, otherwise the last of i/u/ü
        ("guai1", "guāi"),
        ("shei2", "shéi"),
        ("liu2", "liú"),
        ("sui4", "suì"),
        ("hui4", "huì"),
        ("xiong2", "xióng"),
        ("lve4", "luüè"),
        # v stands for ü; rendered ü becomes the u-ü digraph
        ("lv3", "luǚ"),
        ("lv4", "luǜ"),
        ("nv3", "nuǚ"),
        ("juan0", "juan"),
        ("sui0", "sui"),
        ("o2", "ó"),
        ("er4", "èr"),
        ("e4", "è"),
    ],
)
def test_numeric_to_rendered(numeric, rendered):
    assert render_syllable(parse_syllable(numeric)) == rendered


@pytest.mark.parametrize(
    "marked,base,tone",
    [
        ("zhī", "zhi", Tone.FIRST),
        ("zhí", "zhi", Tone.SECOND),
        ("zhî", "zhi", Tone.THIRD),
        ("zhì", "zhi", Tone.FOURTH),
        ("zhi", "zhi", Tone.NEUTRAL),
        # caron input is accepted and means the third tone
        ("zhǐ", "zhi", Tone.THIRD),
        ("hǎo", "hao", Tone.THIRD),
        ("lǚ", "lü", Tone.THIRD),
        ("luǚ", "lü", Tone.THIRD),
        ("luǜ", "lü", Tone.FOURTH),
        ("nǚ", "nü", Tone.THIRD),
        ("LÜ̂", "lü", Tone.THIRD),  # combining circumflex on ü, uppercase input
    ],
)
def test_parse_marked(marked, base, tone):
    syllable = parse_syllable(marked)
    assert (syllable.base, syllable.tone) == (base, tone)


def test_parse_rejects_garbage():
    with pytest.raises(MalformedSyllable):
        parse_syllable("")
    with pytest.raises(MalformedSyllable):
        parse_syllable("ma5")
    with pytest.raises(MalformedSyllable):
        parse_syllable("mā1")  # mark and digit disagree about who sets the tone
    with pytest.raises(MalformedSyllable):
        parse_syllable("mīā")  # two marked vowels
    with pytest.raises(MalformedSyllable):
        parse_syllable("h2")  # no vowel cannot carry a tone
    with pytest.raises(MalformedSyllable):
        parse_syllable("üe")  # ü cannot open a syllable
    with pytest.raises(MalformedSyllable):
        parse_syllable("ma ")


def test_parse_rejects_two_umlauts():
    with pytest.raises(MalformedSyllable):
        Syllable("lüü")


def test_vowel_less_bases_are_neutral_only():
    assert render_syllable(Syllable("h")) == "h"
    assert render_syllable(Syllable("z")) == "z"
    with pytest.raises(MalformedSyllable):
        Syllable("h", Tone.FIRST)
    assert not has_vowel("h")
    assert has_vowel("heng")


@pytest.mark.parametrize(
    "before,after",
    [
        ("zhōng", "zhōg"),
        ("guāng", "gūg"),
        ("yīng", "yīg"),
        ("xióng", "xióg"),
        ("qiâng", "qiâng"),  # -iang is untouched; only -uang/-ing/-ong shorten
        ("mà", "mà"),
        ("zhōg", "zhōg"),
        ("gūg", "gūg"),
        ("sui", "sui"),
    ],
)
def test_abbreviate(before, after):
    assert abbreviate(before) == after


def test_abbreviate_uang_before_ang():
    # "uang" must match as a unit, not leave a stray u behind
    assert abbreviate("zhuāng") == "zhūg"
    assert abbreviate("shuāng") == "shūg"


def test_abbreviate_is_idempotent_on_goldens():
    for before, _ in [("zhōng", None), ("guāng", None), ("yīng", None)]:
        once = abbreviate(before)
        assert abbreviate(once) == once


def test_normalize_marks():
    assert normalize_marks("jǐ") == "jî"
    assert normalize_marks("hǎo mǎ") == "hâo mâ"
    assert normalize_marks("luǚ") == "luǚ"
    assert normalize_marks("â") == "â"
    assert normalize_marks("ǚ") == "ǚ"
    assert normalize_marks("plain ascii") == "plain ascii"


_CONSONANT = st.text(alphabet="bcdfghjklmnpqrstwxyz", min_size=0, max_size=2)
_FINAL = st.sampled_from(
    ["a", "e", "i", "o", "u", "ai", "ao", "ei", "ou", "an", "en", "ang",
     "eng", "ong", "ia", "iao", "ie", "iu", "in", "ing", "ua", "uo", "ui",
     "un", "uang", "üe", "ün"]
)


@st.composite
def syllables(draw):
    base = draw(_CONSONANT) + draw(_FINAL)
    if base[0] == "ü":
        base = "n" + base
    tone = draw(st.sampled_from(list(Tone)))
    return Syllable(base, tone)


@given(syllables())
def test_render_parse_round_trip(syllable):
    assert parse_syllable(render_syllable(syllable)) == syllable


@given(syllables())
def test_rendered_tones_are_distinct(syllable):
    renderings = {
        render_syllable(Syllable(syllable.base, tone)) for tone in Tone
    }
    assert len(renderings) == len(Tone)


@given(syllables())
def test_abbreviate_idempotent(syllable):
    once = abbreviate(render_syllable(syllable))
    assert abbreviate(once) == once


@given(syllables())
def test_abbreviate_never_longer(syllable):
    rendered = render_syllable(syllable)
    assert len(abbreviate(rendered)) <= len(rendered)


def test_abbreviation_table_is_suffix_keyed():
    for final, short in ABBREVIATIONS:
        assert len(short) < len(final)
