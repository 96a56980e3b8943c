"""Deciding whether the language of a trim DFA is well-ordered.

The language fails to be well-ordered exactly when some non-sink state
q can read a 0 and stay inside its own strong component while its
1-edge still leads somewhere live.  Such a q yields the descending
chain access (0 loop)^n 1 tail of accepted words; conversely every
descending chain produces such a state.
"""

from __future__ import annotations

import dataclasses

from .dfa import Dfa, condense, ensure_trim, shortest_word, sink_of


@dataclasses.dataclass(frozen=True)
class Witness:
    """Generator of a descending chain: chain[n] = access (0 loop)^n 1 tail.

    `access` drives the start state to `state`, reading '0' then `loop`
    returns to `state`, and '1' then `tail` is accepted from it.
    """

    access: str
    loop: str
    tail: str
    state: int


@dataclasses.dataclass(frozen=True)
class CheckResult:
    well_ordered: bool
    witness: Witness | None


def witness_chain(w: Witness, n: int) -> str:
    return w.access + ("0" + w.loop) * n + "1" + w.tail


def build_witness(m: Dfa, q: int) -> Witness:
    """Deterministic witness at failing state q: breadth-first shortest
    words, ties resolved toward the letter 0."""
    access = shortest_word(m, m.start, {q})
    loop = shortest_word(m, m.delta[q][0], {q})
    tail = shortest_word(m, m.delta[q][1], m.finals)
    assert access is not None and loop is not None and tail is not None
    return Witness(access=access, loop=loop, tail=tail, state=q)


def check(m: Dfa) -> CheckResult:
    """Decide well-orderedness of L(m) for trim m.

    Uses the condensation: state q fails when q and q.0 share a strong
    component and q.1 is not the sink.  The reported witness is at the
    smallest failing state index.
    """
    ensure_trim(m)
    snk = sink_of(m)
    cond = condense(m)
    for q in range(m.state_count):
        if q == snk:
            continue
        if cond.component_of[q] == cond.component_of[m.delta[q][0]]:
            if m.delta[q][1] != snk:
                return CheckResult(False, build_witness(m, q))
    return CheckResult(True, None)


def _chain_failure(m: Dfa, w: Witness, upto: int) -> str | None:
    """First violated requirement when replaying the chain, or None.

    Checks, for n in 0..upto-1, that chain[n] is accepted and that
    chain[n+1] is strictly below chain[n].  Membership is evaluated
    incrementally along the shared prefixes so deep replays stay cheap.
    """
    zero_loop = "0" + w.loop
    one_tail = "1" + w.tail
    state = m.run(m.start, w.access)
    prefix = w.access
    prev_word: str | None = None
    for n in range(upto + 1):
        word = prefix + one_tail
        if n <= upto - 1 and m.run(state, one_tail) not in m.finals:
            return f"chain[{n}] = {word or '(eps)'} is not accepted"
        if prev_word is not None:
            # Strictly below means less and not a prefix of the previous.
            if not (word < prev_word and not prev_word.startswith(word)):
                return (
                    f"chain[{n}] = {word or '(eps)'} is not strictly below "
                    f"chain[{n - 1}] = {prev_word or '(eps)'}"
                )
        prev_word = word
        state = m.run(state, zero_loop)
        prefix = prefix + zero_loop
    return None


def verify_witness(m: Dfa, w: Witness, upto: int) -> bool:
    """Replay the chain to depth upto: membership of chain[0..upto-1]
    and strict descent of each next word."""
    return _chain_failure(m, w, upto) is None


def witness_failure(m: Dfa, w: Witness, upto: int) -> str | None:
    """Diagnostic variant of verify_witness: describes the first failure."""
    return _chain_failure(m, w, upto)
