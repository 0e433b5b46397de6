"""The ``vcc`` command-line tool.

Exit codes: 0 on success, 1 for usage mistakes (bad flags, missing
arguments), 2 for data problems (unreadable files, failed checksums,
unknown characters, collisions the compiler cannot resolve).

Every subcommand that reads text streams it line by line, so piping a
large corpus through ``vcc encode`` needs constant memory.  When no
``--lexicon`` file is given, the bundled sample tables are compiled on the
fly; ``vcc compile -o my.lex`` persists that work for later runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

from .codec import WordList, decode_text, encode_text, load_wordlist
from .codepage import codepage_table, vcc8
from .errors import VccError
from .lexicon import (
    Lexicon,
    audit_lexicon,
    compile_lexicon,
    compress_lexicon,
    load_character_table,
    load_lexicon,
    save_lexicon,
)
from .radicals import audit_radicals, load_radical_table
from .report import corpus_stats, load_score_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2 for data
    problems, so usage mistakes exit with 1 instead."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bundled(name: str) -> IO[str]:
    from importlib import resources

    return (resources.files("vcc") / "data" / name).open("r", encoding="utf-8")


@contextmanager
def _text_in(path: str | None) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as handle:
            yield handle


@contextmanager
def _text_out(path: str | None) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle


def _load_lexicon(args: argparse.Namespace) -> Lexicon:
    if getattr(args, "lexicon", None):
        return load_lexicon(args.lexicon)
    with _bundled("radicals.tsv") as radicals, _bundled("characters.tsv") as chars:
        return compile_lexicon(load_character_table(chars), load_radical_table(radicals))


def _load_words(args: argparse.Namespace) -> WordList:
    if getattr(args, "words", None):
        return load_wordlist(args.words)
    with _bundled("words.tsv") as handle:
        return load_wordlist(handle)


def _cmd_compile(args: argparse.Namespace) -> int:
    if args.radicals:
        table = load_radical_table(args.radicals)
    else:
        with _bundled("radicals.tsv") as handle:
            table = load_radical_table(handle)
    if args.chars:
        chars = load_character_table(args.chars)
    else:
        with _bundled("characters.tsv") as handle:
            chars = load_character_table(handle)
    lexicon = compile_lexicon(chars, table)
    if args.compress:
        lexicon = compress_lexicon(lexicon)
    with _text_out(args.output) as sink:
        save_lexicon(lexicon, sink)
    audit = audit_lexicon(lexicon)
    for line in audit.lines():
        print(line, file=sys.stderr)
    return EXIT_OK


def _cmd_encode(args: argparse.Namespace) -> int:
    lexicon = _load_lexicon(args)
    words = _load_words(args)
    alphabet = vcc8() if args.bytes else None
    with _text_in(args.input) as source:
        if alphabet is not None:
            out = sys.stdout.buffer if args.output in (None, "-") else open(args.output, "wb")
            try:
                for line in source:
                    encoded = encode_text(line, lexicon, words, on_unknown=args.on_unknown)
                    out.write(alphabet.encode(encoded))
                out.flush()
            finally:
                if out is not sys.stdout.buffer:
                    out.close()
        else:
            with _text_out(args.output) as sink:
                for line in source:
                    sink.write(encode_text(line, lexicon, words, on_unknown=args.on_unknown))
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace) -> int:
    lexicon = _load_lexicon(args)
    if args.bytes:
        if args.input in (None, "-"):
            data = sys.stdin.buffer.read()
        else:
            with open(args.input, "rb") as handle:
                data = handle.read()
        text = vcc8().decode(data)
        with _text_out(args.output) as sink:
            for line in text.splitlines(keepends=True):
                sink.write(decode_text(line, lexicon))
    else:
        with _text_in(args.input) as source, _text_out(args.output) as sink:
            for line in source:
                sink.write(decode_text(line, lexicon))
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    do_radicals = args.radicals or not args.lexicon
    do_lexicon = args.lexicon or not args.radicals
    failed = False
    if do_radicals:
        if args.radicals:
            table = load_radical_table(args.radicals)
        else:
            with _bundled("radicals.tsv") as handle:
                table = load_radical_table(handle)
        audit = audit_radicals(table)
        for line in audit.lines():
            print(line)
        failed = failed or not audit.passed
    if do_lexicon:
        lexicon = _load_lexicon(args)
        audit = audit_lexicon(lexicon)
        for line in audit.lines():
            print(line)
        failed = failed or not audit.passed
    return EXIT_DATA if failed else EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    lexicon = _load_lexicon(args)
    words = _load_words(args)
    with _text_in(args.input) as source:
        text = source.read()
    stats = corpus_stats(text, lexicon, words, alphabet=vcc8())
    if args.json:
        payload = {
            "characters": stats.characters,
            "symbols": stats.symbols,
            "bytes": stats.encoded_bytes,
            "tokens": stats.tokens,
            "unknown": stats.unknown,
            "mean_form_length": round(stats.mean_form_length, 4),
        }
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for line in stats.lines():
            print(line)
    return EXIT_OK


def _cmd_score(args: argparse.Namespace) -> int:
    if args.scores:
        matrix = load_score_matrix(args.scores)
    else:
        with _bundled("scores.tsv") as handle:
            matrix = load_score_matrix(handle)
    totals = matrix.totals()
    for label in matrix.labels:
        print(f"{label}\t{totals[label]}")
    print(f"best\t{matrix.best()}")
    return EXIT_OK


def _cmd_codepage(args: argparse.Namespace) -> int:
    sys.stdout.write(codepage_table())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vcc", description="Virtual-form transliteration toolkit")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("compile", help="compile character and radical tables into a lexicon")
    p.add_argument("--radicals", help="radical table TSV (default: bundled sample)")
    p.add_argument("--chars", help="character table TSV (default: bundled sample)")
    p.add_argument("-o", "--output", default="-", help="lexicon file to write (default: stdout)")
    p.add_argument("--compress", action="store_true", help="shorten forms after compiling")
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("encode", help="characters in, virtual forms out")
    p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
    p.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
    p.add_argument("--lexicon", help="compiled lexicon file (default: compile bundled tables)")
    p.add_argument("--words", help="word list TSV (default: bundled sample)")
    p.add_argument(
        "--on-unknown",
        choices=("error", "mark"),
        default="error",
        help="fail on characters outside the lexicon, or pass them through between replacement marks",
    )
    p.add_argument("--bytes", action="store_true", help="emit 8-bit code page bytes")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="virtual forms in, characters out")
    p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
    p.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
    p.add_argument("--lexicon", help="compiled lexicon file (default: compile bundled tables)")
    p.add_argument("--bytes", action="store_true", help="read 8-bit code page bytes")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("audit", help="print radical and lexicon consistency reports")
    p.add_argument("--lexicon", help="compiled lexicon file (default: compile bundled tables)")
    p.add_argument("--radicals", help="radical table TSV (default: bundled sample)")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("stats", help="measure a corpus against a lexicon")
    p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
    p.add_argument("--lexicon", help="compiled lexicon file (default: compile bundled tables)")
    p.add_argument("--words", help="word list TSV (default: bundled sample)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("score", help="total the writing-system comparison table")
    p.add_argument("--scores", help="score table TSV (default: bundled sample)")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("codepage", help="print the 8-bit code page layout")
    p.set_defaults(func=_cmd_codepage)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except (VccError, OSError) as error:
        print(f"vcc: {error}", file=sys.stderr)
        return EXIT_DATA


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
