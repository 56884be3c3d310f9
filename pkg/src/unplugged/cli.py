"""Command-line front end.

Exit status: 0 on success, 1 when the input is well-formed but wrong
(failed validation, cipher errors, machine errors), 2 on usage errors.
Every file argument accepts ``-`` for standard input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import cards, ciphers, pallino, turtle_lang
from .errors import ScriptError, ToyError
from .grid import DEFAULT_ROWS, PALLINO_COLUMNS, mosaic_parse, mosaic_render
from .worksheets import random_mosaic, worksheet_cards, worksheet_cipher


class UsageError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _out(text: str) -> None:
    if text:
        sys.stdout.write(text + "\n")


def _load_key(spec: str) -> ciphers.PegKey:
    if spec == "default":
        return ciphers.peg_default_key()
    return ciphers.peg_key_load(_read(spec))


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


# -- card ------------------------------------------------------------------

def cmd_card(args) -> int:
    if args.action == "diff":
        target = mosaic_parse(_read(args.files[0]))
        actual = mosaic_parse(_read(args.files[1]))
        mismatches = cards.diff(target, actual)
        _out(cards.format_mismatches(mismatches))
        if mismatches:
            print(f"{len(mismatches)} mismatching cell(s)", file=sys.stderr)
            return 1
        return 0
    text = _read(args.files[0])
    if args.action == "encode":
        _out(cards.card_print(cards.encode(mosaic_parse(text))))
        return 0
    if args.action == "worksheet":
        _out(worksheet_cards(mosaic_parse(text)).render(answers=args.answers))
        return 0
    card = cards.card_parse(text)
    if args.action == "exec":
        _out(mosaic_render(cards.execute(card)))
    elif args.action == "validate":
        violations = cards.validate(card)
        if violations:
            print(cards.format_violations(violations), file=sys.stderr)
            return 1
        _out("OK")
    elif args.action == "normalize":
        _out(cards.card_print(cards.normalize(card)))
    else:
        _out(cards.card_print(card))
    return 0


# -- turtle ----------------------------------------------------------------

def cmd_turtle(args) -> int:
    text = _read(args.file)
    if args.action == "compile":
        grid = turtle_lang.grid_from_mosaic(mosaic_parse(text))
        _out(turtle_lang.turtle_print(turtle_lang.compile_grid(grid)))
        return 0
    program = turtle_lang.turtle_parse(text)
    if args.action == "fmt":
        if args.compress:
            program = turtle_lang.compress(program)
        _out(turtle_lang.turtle_print(program))
        return 0
    if args.rows is None or args.cols is None:
        raise UsageError("turtle run needs --rows and --cols")
    painted = turtle_lang.interpret(program, args.cols, args.rows)
    _out(painted.render())
    print(f"cursor {painted.cursor[0]} {painted.cursor[1]}", file=sys.stderr)
    return 0


# -- ciphers ---------------------------------------------------------------

def cmd_caesar(args) -> int:
    text = _read(args.file)
    if args.action == "crack":
        table = ciphers.parse_frequency_table(_read(args.freq)) if args.freq else None
        _out(ciphers.format_ranking(ciphers.caesar_crack(text, table)))
        return 0
    fn = ciphers.caesar_encrypt if args.action == "enc" else ciphers.caesar_decrypt
    sys.stdout.write(fn(text, args.shift))
    return 0


def cmd_pigpen(args) -> int:
    text = _read(args.file)
    if args.action == "enc":
        _out(ciphers.pigpen_encode_message(text))
    else:
        _out(ciphers.pigpen_decode_message(text))
    return 0


def cmd_peg(args) -> int:
    if args.action == "keygen":
        _out(ciphers.peg_key_save(ciphers.peg_keygen(args.seed)))
        return 0
    key = _load_key(args.key)
    if args.action == "worksheet":
        words = _read(args.wordsfile).split()
        sheet = worksheet_cipher(words, key, args.backwards)
        _out(sheet.render(answers=args.answers))
        return 0
    message = " ".join(args.words)
    if args.action == "enc":
        _out(ciphers.peg_encrypt_message(message, key, args.backwards))
    else:
        _out(ciphers.peg_decrypt_message(message, key, args.backwards))
    return 0


# -- simulator and mosaics -------------------------------------------------

def cmd_sim(args) -> int:
    feed_arg = args.feed
    if feed_arg == "-" or Path(feed_arg).is_file():
        feed_arg = _read(feed_arg)
    machine = pallino.machine_new(pallino.parse_feed(feed_arg), args.rows)
    final, log = pallino.run_script(machine, _read(args.script))
    _out(pallino.format_run(final, log))
    return 0


def cmd_mosaic(args) -> int:
    _out(mosaic_render(random_mosaic(args.seed, args.rows, args.cols, args.full)))
    return 0


# -- wiring ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unplugged", description="Pallino coding and Peg Code lesson toolkit.")
    groups = parser.add_subparsers(dest="command", required=True)

    card = groups.add_parser("card", help="coding cards").add_subparsers(dest="action", required=True)
    for action in ("exec", "encode", "validate", "normalize", "print"):
        p = card.add_parser(action)
        p.add_argument("files", nargs=1, metavar="file")
        p.set_defaults(func=cmd_card)
    p = card.add_parser("diff")
    p.add_argument("files", nargs=2, metavar=("target", "actual"))
    p.set_defaults(func=cmd_card)
    p = card.add_parser("worksheet", help="mosaic exercise with its coding card as answer")
    p.add_argument("files", nargs=1, metavar="mosaicfile")
    p.add_argument("--answers", action="store_true", help="include the answer key")
    p.set_defaults(func=cmd_card)

    turtle = groups.add_parser("turtle", help="grid-drawing programs").add_subparsers(dest="action", required=True)
    for action in ("run", "fmt"):
        p = turtle.add_parser(action)
        p.add_argument("file")
        p.add_argument("--rows", type=_positive)
        p.add_argument("--cols", type=_positive)
        if action == "fmt":
            p.add_argument("--compress", action="store_true", help="fold repeated steps")
        p.set_defaults(func=cmd_turtle, compress=False)
    p = turtle.add_parser("compile")
    p.add_argument("file", metavar="mosaicfile")
    p.set_defaults(func=cmd_turtle)

    caesar = groups.add_parser("caesar", help="Caesar cipher").add_subparsers(dest="action", required=True)
    for action in ("enc", "dec"):
        p = caesar.add_parser(action)
        p.add_argument("file")
        p.add_argument("--shift", type=int, required=True)
        p.set_defaults(func=cmd_caesar)
    p = caesar.add_parser("crack")
    p.add_argument("file")
    p.add_argument("--freq", metavar="tablefile")
    p.set_defaults(func=cmd_caesar)

    pigpen = groups.add_parser("pigpen", help="Pigpen cipher").add_subparsers(dest="action", required=True)
    for action in ("enc", "dec"):
        p = pigpen.add_parser(action)
        p.add_argument("file")
        p.set_defaults(func=cmd_pigpen)

    peg = groups.add_parser("peg", help="Peg Code cipher").add_subparsers(dest="action", required=True)
    for action in ("enc", "dec"):
        p = peg.add_parser(action)
        p.add_argument("words", nargs="+", metavar="word")
        p.add_argument("--key", required=True, metavar="keyfile|default")
        p.add_argument("--backwards", action="store_true")
        p.set_defaults(func=cmd_peg)
    p = peg.add_parser("keygen")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_peg)
    p = peg.add_parser("worksheet")
    p.add_argument("wordsfile")
    p.add_argument("--key", required=True, metavar="keyfile|default")
    p.add_argument("--backwards", action="store_true")
    p.add_argument("--answers", action="store_true", help="include the answer key")
    p.set_defaults(func=cmd_peg)

    sim = groups.add_parser("sim", help="Pallino machine simulator").add_subparsers(dest="action", required=True)
    p = sim.add_parser("run")
    p.add_argument("script")
    p.add_argument("--feed", required=True, metavar="colors|file")
    p.add_argument("--rows", type=_positive, default=DEFAULT_ROWS)
    p.set_defaults(func=cmd_sim)

    mosaic = groups.add_parser("mosaic", help="lesson mosaics").add_subparsers(dest="action", required=True)
    p = mosaic.add_parser("random")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--rows", type=_positive, default=DEFAULT_ROWS)
    p.add_argument("--cols", type=_positive, default=PALLINO_COLUMNS)
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_mosaic)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScriptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ToyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
