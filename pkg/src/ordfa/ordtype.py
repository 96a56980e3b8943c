"""Exact order types of well-ordered regular languages over {0, 1}.

Every state's language gets an ordinal below w^w, computed bottom-up
over the condensation.  The sink is 0.  A non-recursive state q
contributes [q final] + type(q.0) + type(q.1), matching the split of
its language into the empty word, the 0-branch and the 1-branch.  A
recursive state's language splits into laps of its cycle: one lap
contributes, position by position, the acceptance of the prefix walked
so far plus the type of the 0-exit wherever the cycle reads a 1; the
full language is that lap type times w.
"""

from __future__ import annotations

import dataclasses

from .dfa import Dfa, condense, loop_word, sink_of
from .ordinal import Ordinal
from .wellorder import Witness, check


class NotWellOrderedError(Exception):
    """Raised when an order type is requested for a non-well-ordered language."""

    def __init__(self, witness: Witness):
        super().__init__(
            "the language is not well-ordered; a descending chain starts at "
            f"state {witness.state}"
        )
        self.witness = witness


@dataclasses.dataclass(frozen=True)
class LoopDecomposition:
    """One lap around a recursive state's cycle.

    `period` is the shortest word returning `state` to itself.
    `accept_flags[i]` says whether the prefix period[:i] is accepted
    from `state`; `exit_types[i]` is the order type of the 0-exit at
    position i when the cycle reads a 1 there (the zero ordinal at
    0-positions, whose 1-exits are dead).  `period_type` is their sum
    in position order.
    """

    state: int
    period: str
    accept_flags: tuple[bool, ...]
    exit_types: tuple[Ordinal, ...]
    period_type: Ordinal


def _decompose(m: Dfa, q: int, types: list[Ordinal | None]) -> LoopDecomposition:
    period = loop_word(m, q)
    flags = []
    exits = []
    total = Ordinal.zero()
    s = q
    for ch in period:
        flag = s in m.finals
        flags.append(flag)
        if ch == "1":
            ext = types[m.delta[s][0]]
            assert ext is not None, "exit target was not processed first"
        else:
            ext = Ordinal.zero()
        exits.append(ext)
        if flag:
            total = total + 1
        total = total + ext
        s = m.step(s, ch)
    return LoopDecomposition(
        state=q,
        period=period,
        accept_flags=tuple(flags),
        exit_types=tuple(exits),
        period_type=total,
    )


@dataclasses.dataclass(frozen=True)
class OrderTypeTable:
    """Order types per state; the automaton's overall type is the start's."""

    per_state: tuple[Ordinal, ...]
    start: int

    @property
    def overall(self) -> Ordinal:
        return self.per_state[self.start]


def order_type(m: Dfa) -> OrderTypeTable:
    """Order types of every state's language, for trim well-ordered m.

    Raises NotWellOrderedError (carrying the witness) otherwise.
    """
    result = check(m)
    if not result.well_ordered:
        raise NotWellOrderedError(result.witness)
    snk = sink_of(m)
    cond = condense(m)
    types: list[Ordinal | None] = [None] * m.state_count
    # Component numbering ascends with height, so every transition out
    # of a component lands in one already processed.
    for cid, members in enumerate(cond.components):
        if snk is not None and snk in members:
            types[snk] = Ordinal.zero()
        elif cond.nontrivial[cid]:
            for q in members:
                dec = _decompose(m, q, types)
                assert not dec.period_type.is_zero, "live recursive state"
                types[q] = dec.period_type.times_omega()
        else:
            (q,) = members
            t = types[m.delta[q][0]] + types[m.delta[q][1]]
            if q in m.finals:
                t = Ordinal.one() + t
            types[q] = t
    return OrderTypeTable(per_state=tuple(types), start=m.start)


def state_order_type(m: Dfa, q: int) -> Ordinal:
    return order_type(m).per_state[q]


def decompose_loop(m: Dfa, q: int) -> LoopDecomposition:
    """Lap decomposition at recursive state q of a well-ordered automaton."""
    table = order_type(m)
    types: list[Ordinal | None] = list(table.per_state)
    return _decompose(m, q, types)


def rank(m: Dfa, w: str, table: OrderTypeTable | None = None) -> Ordinal:
    """Ordinal position of w within the well-ordered language L(m).

    This is the order type of {v accepted : v below w}; w itself need
    not be accepted.  Walking w, every accepted proper prefix adds one,
    and every position reading a 1 adds the whole type of the 0-exit
    there, in position order.
    """
    if table is None:
        table = order_type(m)
    total = Ordinal.zero()
    q = m.start
    for ch in w:
        if q in m.finals:
            total = total + 1
        if ch == "1":
            total = total + table.per_state[m.delta[q][0]]
        q = m.step(q, ch)
    return total
