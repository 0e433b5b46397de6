"""Radical table loading, validation, candidate resolution, and the audit."""

import io

import pytest

from vcc.errors import (
    DanglingRedirect,
    DataError,
    DuplicateGlyph,
    NoActiveRadical,
    PronunciationClash,
)
from vcc.pinyin import Tone, render_syllable
from vcc.radicals import audit_radicals, load_radical_table

HEADER = "index\tglyph\toriginal\tstatus\trevised_or_redirect\tsynonym_group\tdefault_tone\texception\n"


def table_of(*rows):
    return load_radical_table(io.StringIO(HEADER + "".join(r + "\n" for r in rows)))


class TestBundledTable:
    def test_census(self, radical_table):
        audit = audit_radicals(radical_table)
        assert audit.active_count == 102
        assert audit.abolished_count == 5
        assert audit.passed

    def test_synonym_pairs_share_one_form(self, radical_table):
        audit = audit_radicals(radical_table)
        assert audit.repetition["示"] == 2
        assert audit.repetition["禘"] == 2
        assert audit.repetition["口"] == 1

    def test_original_shi_family_is_the_largest(self, radical_table):
        audit = audit_radicals(radical_table)
        groups = dict(audit.original_groups)
        assert set(groups["shi"]) == set("十士饣尸氏矢石示礻")
        assert max(len(g) for g in groups.values()) == 9
        assert len(audit.original_groups) == 13

    def test_default_tones(self, radical_table):
        assert radical_table.get("人").default_tone == Tone.SECOND
        assert radical_table.get("十").default_tone == Tone.FOURTH
        assert radical_table.get("女").default_tone == Tone.FIRST
        assert radical_table.get("口").default_tone is None
        assert radical_table.get("口").prefix_tone() is Tone.NEUTRAL

    def test_single_letter_strokes(self, radical_table):
        for glyph, base in [("一", "h"), ("丨", "s"), ("丿", "p"), ("丶", "d"), ("乙", "z")]:
            assert render_syllable(radical_table.get(glyph).revised) == base

    def test_audit_lines(self, radical_table):
        lines = audit_radicals(radical_table).lines()
        assert lines[0] == "radicals\t107"
        assert "active\t102" in lines
        assert "abolished\t5" in lines
        assert lines[-1] == "status\tpass"
        # six synonym pairs, both members of each reporting a count of 2
        assert sum(1 for line in lines if line.startswith("repetition\t")) == 12


class TestValidation:
    def test_duplicate_glyph(self):
        with pytest.raises(DuplicateGlyph):
            table_of("1\t口\tkou3\tactive\tkou\t\t\t", "2\t口\tkou3\tactive\tko\t\t\t")

    def test_pronunciation_clash_outside_synonym_group(self):
        with pytest.raises(PronunciationClash):
            table_of("1\t口\tkou3\tactive\tkou\t\t\t", "2\t囗\twei2\tactive\tkou\t\t\t")

    def test_synonym_group_allows_shared_form(self):
        table = table_of(
            "1\t言\tyan2\tactive\tyan\tyan\t\t",
            "2\t讠\tyan2\tactive\tyan\tyan\t\t",
        )
        assert len(table) == 2

    def test_different_synonym_groups_still_clash(self):
        with pytest.raises(PronunciationClash):
            table_of(
                "1\t言\tyan2\tactive\tyan\tg1\t\t",
                "2\t讠\tyan2\tactive\tyan\tg2\t\t",
            )

    def test_redirect_to_missing_glyph(self):
        with pytest.raises(DanglingRedirect):
            table_of("1\t氏\tshi4\tabolished\t乙\t\t\t")

    def test_redirect_must_resolve_in_one_hop(self):
        with pytest.raises(DanglingRedirect):
            table_of(
                "1\t乙\tyi3\tactive\tz\t\t\t",
                "2\t氏\tshi4\tabolished\t己\t\t\t",
                "3\t己\tji3\tabolished\t乙\t\t\t",
            )

    def test_redirect_without_target(self):
        with pytest.raises(DanglingRedirect):
            table_of("1\t氏\tshi4\tabolished\t\t\t\t")

    def test_bad_header(self):
        with pytest.raises(DataError):
            load_radical_table(io.StringIO("glyph\tstuff\n1\t口\tkou3\tactive\tkou\t\t\t\n"))

    def test_revised_form_may_not_carry_a_tone(self):
        with pytest.raises(DataError):
            table_of("1\t口\tkou3\tactive\tkou3\t\t\t")

    def test_revised_form_length_limit(self):
        with pytest.raises(DataError):
            table_of("1\t口\tkou3\tactive\tkouku\t\t\t")

    def test_bad_default_tone(self):
        with pytest.raises(DataError):
            table_of("1\t口\tkou3\tactive\tkou\t\t7\t")

    def test_unknown_status(self):
        with pytest.raises(DataError):
            table_of("1\t口\tkou3\tretired\tkou\t\t\t")

    def test_bad_index(self):
        with pytest.raises(DataError):
            table_of("x\t口\tkou3\tactive\tkou\t\t\t")
        with pytest.raises(DataError):
            table_of("0\t口\tkou3\tactive\tkou\t\t\t")


class TestResolve:
    def test_first_candidate_wins_by_default(self, radical_table):
        assert radical_table.resolve(["口", "土"]).glyph == "口"
        assert radical_table.resolve(["土", "口"]).glyph == "土"

    def test_exception_radical_beats_position(self, radical_table):
        # 鸟 and 鱼 carry the position-exception flag, so they win from second place
        assert radical_table.resolve(["广", "鸟"]).glyph == "鸟"
        assert radical_table.resolve(["氵", "鱼"]).glyph == "鱼"

    def test_abolished_candidate_redirects(self, radical_table):
        entry = radical_table.resolve(["氏"])
        assert entry.glyph == "乙"
        assert render_syllable(entry.revised) == "z"
        assert radical_table.resolve(["礻"]).glyph == "示"

    def test_empty_candidates(self, radical_table):
        with pytest.raises(NoActiveRadical):
            radical_table.resolve([])

    def test_unknown_candidate(self, radical_table):
        with pytest.raises(NoActiveRadical):
            radical_table.resolve(["龯"])
