"""Command-line front end.

Exit codes: 0 on success (for `check`: well-ordered), 3 when the
analyzed language is not well-ordered or has no least word, 2 on
malformed input, 1 when a fuzz run finds a disagreement.  Commands that
analyze an automaton trim it first; trimming never changes the
language.  The empty word prints as "(eps)".
"""

from __future__ import annotations

import argparse
import sys

from . import dfa, lexorder, oracle, ordinal, ordtype, wellorder
from .synth import synth as synthesize

EXIT_OK = 0
EXIT_FUZZ_FAILED = 1
EXIT_INPUT = 2
EXIT_NEGATIVE = 3


class InputError(Exception):
    pass


def _fmt_word(w: str) -> str:
    return w if w else "(eps)"


def _parse_word(text: str) -> str:
    if text == "(eps)":
        return ""
    try:
        return dfa.validate_word(text)
    except ValueError as e:
        raise InputError(f"bad word {text!r}: {e}") from e


def _load(path: str) -> dfa.Dfa:
    try:
        return dfa.load(path)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except OSError as e:
        raise InputError(f"{path}: {e}") from e
    except dfa.DfaFormatError as e:
        raise InputError(f"{path}: {e}") from e


def _load_trimmed(path: str) -> dfa.Dfa:
    return dfa.trim(_load(path)).trimmed


def _print_witness(w: wellorder.Witness) -> None:
    print(f"witness state: {w.state}")
    print(f"  x (start to state)   = {_fmt_word(w.access)}")
    print(f"  u (0-loop back)      = {_fmt_word(w.loop)}")
    print(f"  v (accepted after 1) = {_fmt_word(w.tail)}")
    chain = ", ".join(
        _fmt_word(wellorder.witness_chain(w, n)) for n in range(5)
    )
    print(f"  chain x(0u)^n 1v: {chain}, ...")


def _cmd_check(args) -> int:
    m = _load_trimmed(args.file)
    result = wellorder.check(m)
    if result.well_ordered:
        print("well-ordered")
        return EXIT_OK
    print("not well-ordered")
    _print_witness(result.witness)
    return EXIT_NEGATIVE


def _cmd_ordtype(args) -> int:
    m = _load_trimmed(args.file)
    try:
        table = ordtype.order_type(m)
    except ordtype.NotWellOrderedError as e:
        print("not well-ordered")
        _print_witness(e.witness)
        return EXIT_NEGATIVE
    print(ordinal.format_ordinal(table.overall))
    if args.table:
        cond = dfa.condense(m)
        print("state\theight\tordinal")
        for q in range(m.state_count):
            print(f"{q}\t{cond.height_of[q]}\t{table.per_state[q]}")
    return EXIT_OK


def _cmd_synth(args) -> int:
    try:
        a = ordinal.parse_ordinal(args.ordinal)
    except (ordinal.OrdinalParseError, ordinal.DegreeOverflowError) as e:
        raise InputError(f"bad ordinal {args.ordinal!r}: {e}") from e
    m = synthesize(a)
    text = dfa.to_json(m)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output} ({m.state_count} states)")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_enum(args) -> int:
    m = _load_trimmed(args.file)
    try:
        words = lexorder.enumerate_words(m, args.count)
    except lexorder.NoMinimumError as e:
        print(f"not well-ordered: {e}")
        return EXIT_NEGATIVE
    for w in words:
        print(_fmt_word(w))
    return EXIT_OK


def _cmd_rank(args) -> int:
    m = _load_trimmed(args.file)
    w = _parse_word(args.word)
    try:
        print(ordinal.format_ordinal(ordtype.rank(m, w)))
    except ordtype.NotWellOrderedError as e:
        print("not well-ordered")
        _print_witness(e.witness)
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_min(args) -> int:
    m = _load_trimmed(args.file)
    try:
        w = lexorder.min_word(m)
    except lexorder.NoMinimumError as e:
        print(f"no minimum: {e}")
        return EXIT_NEGATIVE
    print("(empty language)" if w is None else _fmt_word(w))
    return EXIT_OK


def _cmd_succ(args) -> int:
    m = _load_trimmed(args.file)
    w = _parse_word(args.word)
    try:
        nxt = lexorder.successor(m, w)
    except lexorder.NoMinimumError as e:
        print(f"not well-ordered: {e}")
        return EXIT_NEGATIVE
    print("(none)" if nxt is None else _fmt_word(nxt))
    return EXIT_OK


def _cmd_trim(args) -> int:
    m = _load(args.file)
    report = dfa.trim(m)
    dfa.dump(report.trimmed, args.output)
    print(f"states: {m.state_count} -> {report.trimmed.state_count}")

    def show(label, values):
        body = " ".join(str(q) for q in sorted(values)) if values else "(none)"
        print(f"{label}: {body}")

    show("removed unreachable", report.removed_unreachable)
    show("merged into sink", report.merged_into_sink)
    print(f"sink: {report.sink if report.sink is not None else '(none)'}")
    print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_witness(args) -> int:
    m = _load_trimmed(args.file)
    result = wellorder.check(m)
    if result.well_ordered:
        print("well-ordered")
        return EXIT_OK
    print("not well-ordered")
    _print_witness(result.witness)
    failure = wellorder.witness_failure(m, result.witness, args.verify)
    if failure is None:
        print(f"verified to depth {args.verify}: ok")
    else:
        print(f"verification failed: {failure}")
    return EXIT_NEGATIVE


def _read_chain(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        raise InputError(f"{path}: {e}") from e
    words = []
    for i, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        if text == "(eps)":
            words.append("")
            continue
        try:
            words.append(dfa.validate_word(text))
        except ValueError as e:
            raise InputError(f"{path}:{i}: {e}") from e
    return words


def _cmd_analyze_chain(args) -> int:
    words = _read_chain(args.file)
    try:
        analysis = lexorder.analyze_chain(words)
    except lexorder.NotStrictChainError as e:
        raise InputError(str(e)) from e
    print("# times are 1-based; positions are 0-based")
    print("active:")
    for pos, t in analysis.active:
        print(f"  time {t}: position {pos}")
    print("sequence:")
    for k, (i_k, t_k) in enumerate(analysis.sequence):
        print(f"  i_{k} = {i_k} at t_{k} = {t_k}")
    return EXIT_OK


def _cmd_dot(args) -> int:
    m = _load_trimmed(args.file)
    sys.stdout.write(render_dot(m))
    return EXIT_OK


def render_dot(m: dfa.Dfa) -> str:
    """Graphviz text for the automaton, states clustered by strong
    component (labeled with the component's height)."""
    cond = dfa.condense(m)
    snk = dfa.sink_of(m)
    lines = [
        "digraph automaton {",
        "  rankdir=LR;",
        '  __start [shape=point, label=""];',
    ]
    for cid, members in enumerate(cond.components):
        lines.append(f"  subgraph cluster_{cid} {{")
        h = cond.height_of[members[0]]
        lines.append(f'    label="C{cid} (height {h})";')
        for q in members:
            attrs = ["shape=doublecircle" if q in m.finals else "shape=circle"]
            if q == snk:
                attrs.append("style=filled")
                attrs.append("fillcolor=lightgrey")
            lines.append(f"    q{q} [{', '.join(attrs)}];")
        lines.append("  }")
    lines.append(f"  __start -> q{m.start};")
    for q in range(m.state_count):
        a, b = m.delta[q]
        if a == b:
            lines.append(f'  q{q} -> q{a} [label="0,1"];')
        else:
            lines.append(f'  q{q} -> q{a} [label="0"];')
            lines.append(f'  q{q} -> q{b} [label="1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_fuzz(args) -> int:
    try:
        report = oracle.fuzz(
            args.seeds,
            args.states,
            exhaustive=args.exhaustive,
            verify_depth=args.verify_depth,
            rank_len=args.rank_len,
        )
    except oracle.BoundTooLargeError as e:
        raise InputError(str(e)) from e
    sys.stdout.write(report.to_tsv())
    return EXIT_OK if report.ok else EXIT_FUZZ_FAILED


def _cmd_embed(args) -> int:
    try:
        print(_fmt_word(lexorder.embed3to2(args.word)))
    except ValueError as e:
        raise InputError(str(e)) from e
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ordfa",
        description="Well-ordering analysis and ordinal order types for "
        "binary DFAs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="decide whether the language is well-ordered")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_check)

    s = sub.add_parser("ordtype", help="order type in Cantor normal form")
    s.add_argument("file")
    s.add_argument("--table", action="store_true", help="also print per-state types")
    s.set_defaults(fn=_cmd_ordtype)

    s = sub.add_parser("synth", help="synthesize an automaton for an ordinal")
    s.add_argument("ordinal", help='e.g. "w^2*3 + w + 4"')
    s.add_argument("-o", "--output", help="write JSON here instead of stdout")
    s.set_defaults(fn=_cmd_synth)

    s = sub.add_parser("enum", help="first words of the language in order")
    s.add_argument("file")
    s.add_argument("-n", "--count", type=int, required=True)
    s.set_defaults(fn=_cmd_enum)

    s = sub.add_parser("rank", help="ordinal position of a word in the language")
    s.add_argument("file")
    s.add_argument("-w", "--word", required=True, help='binary word, "(eps)" for the empty word')
    s.set_defaults(fn=_cmd_rank)

    s = sub.add_parser("min", help="least accepted word")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_min)

    s = sub.add_parser("succ", help="least accepted word above the given one")
    s.add_argument("file")
    s.add_argument("-w", "--word", required=True)
    s.set_defaults(fn=_cmd_succ)

    s = sub.add_parser("trim", help="remove unreachable states, merge dead ones")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(fn=_cmd_trim)

    s = sub.add_parser("witness", help="show and replay the descending chain")
    s.add_argument("file")
    s.add_argument("--verify", type=int, default=32, metavar="N",
                   help="replay depth (default 32)")
    s.set_defaults(fn=_cmd_witness)

    s = sub.add_parser("analyze-chain", help="flip structure of a word file")
    s.add_argument("file", help='one word per line, "(eps)" for the empty word')
    s.set_defaults(fn=_cmd_analyze_chain)

    s = sub.add_parser("dot", help="Graphviz rendering with components")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_dot)

    s = sub.add_parser("fuzz", help="differential sweep against the oracles")
    s.add_argument("--seeds", type=int, default=100)
    s.add_argument("--states", type=int, default=6)
    s.add_argument("--exhaustive", action="store_true",
                   help="walk all trim automata up to --states states")
    s.add_argument("--verify-depth", type=int, default=32)
    s.add_argument("--rank-len", type=int, default=3,
                   help="max word length for rank spot checks (0 disables)")
    s.set_defaults(fn=_cmd_fuzz)

    s = sub.add_parser("embed", help="embed a ternary word into binary")
    s.add_argument("word")
    s.set_defaults(fn=_cmd_embed)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (dfa.NotTrimError, dfa.NotSimpleCycleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
