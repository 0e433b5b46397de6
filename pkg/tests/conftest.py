import pytest

from vcc import (
    compile_lexicon,
    load_character_table,
    load_radical_table,
    load_wordlist,
    sample_path,
)


@pytest.fixture(scope="session")
def radical_table():
    return load_radical_table(str(sample_path("radicals.tsv")))


@pytest.fixture(scope="session")
def character_entries():
    return load_character_table(str(sample_path("characters.tsv")))


@pytest.fixture(scope="session")
def lexicon(character_entries, radical_table):
    return compile_lexicon(character_entries, radical_table)


@pytest.fixture(scope="session")
def words():
    return load_wordlist(str(sample_path("words.tsv")))
