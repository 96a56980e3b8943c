"""Synthesis of trim automata realizing any ordinal below w^w.

Built from four combinators: the empty language (type 0), the single
empty word (type 1), an ordered sum 0 L1 + 1 L2 (type a1 + a2), and the
times-omega step {1^n 0 u : u in L} (type a * w).  Every result is trim
and passes the well-order check.
"""

from __future__ import annotations

from .dfa import Dfa, trim
from .ordinal import Ordinal


class EmptyLanguageError(ValueError):
    """The times-omega step needs a nonempty language."""


def synth_zero() -> Dfa:
    return Dfa(delta=((0, 0),), start=0, finals=frozenset())


def synth_one() -> Dfa:
    return Dfa(delta=((1, 1), (1, 1)), start=0, finals=frozenset({0}))


def synth_sum(m1: Dfa, m2: Dfa) -> Dfa:
    """Language 0 L(m1) + 1 L(m2); every 0-word comes before every 1-word."""
    n1 = m1.state_count
    n2 = m2.state_count
    rows = [(a, b) for a, b in m1.delta]
    rows += [(a + n1, b + n1) for a, b in m2.delta]
    rows.append((m1.start, m2.start + n1))
    finals = set(m1.finals) | {q + n1 for q in m2.finals}
    raw = Dfa(delta=tuple(rows), start=n1 + n2, finals=frozenset(finals))
    return trim(raw).trimmed


def synth_mul_omega(m: Dfa) -> Dfa:
    """Language {1^n 0 u : u in L(m)}, one copy of L(m) per lap count n."""
    n = m.state_count
    rows = [(a, b) for a, b in m.delta]
    rows.append((m.start, n))
    raw = Dfa(delta=tuple(rows), start=n, finals=m.finals)
    trimmed = trim(raw).trimmed
    if not trimmed.finals:
        raise EmptyLanguageError("cannot iterate an empty language")
    return trimmed


def synth(a: Ordinal) -> Dfa:
    """A trim automaton whose language has order type exactly a."""
    if a.is_zero:
        return synth_zero()
    result: Dfa | None = None
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if c == 0:
            continue
        block = synth_one()
        for _ in range(k):
            block = synth_mul_omega(block)
        for _ in range(c):
            result = block if result is None else synth_sum(result, block)
    assert result is not None
    return result
