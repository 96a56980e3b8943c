#!/usr/bin/env python3
"""Synthesize automata for ordinals and read their types back.

Prints, for each ordinal given on the command line (or a default
showcase), the synthesized automaton's size, the recovered order type,
and the first few words of the language in order.

    python3 scripts/ordinal_roundtrip.py "w^3 + w*2" "w + 4"
"""

import argparse
import sys

from ordfa.lexorder import enumerate_words
from ordfa.ordinal import format_ordinal, parse_ordinal
from ordfa.ordtype import order_type
from ordfa.synth import synth

SHOWCASE = ["0", "1", "5", "w", "w + 1", "w*3", "w^2", "w^2*3 + w + 4", "w^4 + w^2*2 + 7"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ordinals", nargs="*", default=SHOWCASE, metavar="ORDINAL")
    ap.add_argument("--words", type=int, default=6, help="words to enumerate")
    args = ap.parse_args()

    width = max(len(text) for text in args.ordinals)
    failures = 0
    for text in args.ordinals:
        a = parse_ordinal(text)
        m = synth(a)
        back = order_type(m).overall
        if back != a:
            failures += 1
        words = enumerate_words(m, args.words)
        listing = ", ".join(w if w else "(eps)" for w in words) or "(empty)"
        if len(words) == args.words:
            listing += ", ..."
        mark = "ok" if back == a else "MISMATCH"
        print(
            f"{text:<{width}}  states={m.state_count:<3} "
            f"back={format_ordinal(back):<16} {mark}  {listing}"
        )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
