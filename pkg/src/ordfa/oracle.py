"""Independent reference implementations and differential testing.

Everything here either recomputes a result by a route the main modules
do not take (bounded enumeration, per-state breadth-first search,
length-indexed counting) or drives the main and reference routes
against each other over generated automata.
"""

from __future__ import annotations

import dataclasses
import itertools
import os
import random
from collections import deque

from .dfa import Dfa, condense, ensure_trim, sink_of, trim, validate_word
from .lexorder import enumerate_words
from .ordtype import order_type, rank
from .wellorder import CheckResult, build_witness, check, verify_witness

DEFAULT_BOUND_CAP = 20


class BoundTooLargeError(ValueError):
    """Enumeration bound beyond the configured cap."""


def _bound_cap() -> int:
    raw = os.environ.get("ORDFA_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_BOUND_CAP


def _check_bound(bound: int) -> None:
    cap = _bound_cap()
    if bound > cap:
        raise BoundTooLargeError(f"bound {bound} exceeds the cap {cap}")
    if bound < 0:
        raise ValueError("bound must be a natural")


def enum_bounded(m: Dfa, bound: int) -> list[str]:
    """All accepted words of length at most bound, in lexicographic order.

    Pure enumeration over every candidate word; desk scale only.
    """
    _check_bound(bound)
    out = []
    for length in range(bound + 1):
        for tup in itertools.product("01", repeat=length):
            w = "".join(tup)
            if m.accepts(w):
                out.append(w)
    return sorted(out)


def naive_check(m: Dfa) -> CheckResult:
    """Quadratic well-order check: per-state breadth-first reachability
    instead of a condensation.  Same verdict and witness as `check`."""
    ensure_trim(m)
    snk = sink_of(m)
    for q in range(m.state_count):
        if q == snk:
            continue
        if _reaches(m, m.delta[q][0], q) and m.delta[q][1] != snk:
            return CheckResult(False, build_witness(m, q))
    return CheckResult(True, None)


def _reaches(m: Dfa, src: int, dst: int) -> bool:
    if src == dst:
        return True
    seen = {src}
    todo = deque(seen)
    while todo:
        q = todo.popleft()
        for t in m.delta[q]:
            if t == dst:
                return True
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return False


def brute_rank(m: Dfa, w: str, bound: int) -> int:
    """|{v accepted : |v| <= bound, v below w}| by length-indexed counting.

    No ordinal machinery is involved: accepted-word counts per state and
    length are tabulated, then summed along w.  Tests pin this against a
    literal filter of enum_bounded.
    """
    _check_bound(bound)
    validate_word(w)
    n = m.state_count
    cnt = [1 if q in m.finals else 0 for q in range(n)]
    # cum[q][l] counts accepted words of length at most l from q.
    cum = [[c] for c in cnt]
    for _ in range(bound):
        cnt = [cnt[a] + cnt[b] for a, b in m.delta]
        for q in range(n):
            cum[q].append(cum[q][-1] + cnt[q])
    total = 0
    q = m.start
    for i, ch in enumerate(w):
        if i <= bound and q in m.finals:
            total += 1
        if ch == "1":
            rem = bound - i - 1
            if rem >= 0:
                total += cum[m.delta[q][0]][rem]
        q = m.step(q, ch)
    return total


def random_trim_dfa(seed: int, states: int) -> Dfa:
    """Deterministic pseudo-random trim automaton with at most `states`
    states: a uniform complete automaton (finals with chance 1/3),
    trimmed."""
    rng = random.Random(seed)
    delta = tuple(
        (rng.randrange(states), rng.randrange(states)) for _ in range(states)
    )
    finals = frozenset(q for q in range(states) if rng.random() < 1 / 3)
    return trim(Dfa(delta=delta, start=0, finals=finals)).trimmed


def _closure(rows: tuple[tuple[int, int], ...]) -> list[int]:
    """Reachability in one or more steps, as bitmasks."""
    clo = [(1 << a) | (1 << b) for a, b in rows]
    changed = True
    while changed:
        changed = False
        for q, (a, b) in enumerate(rows):
            new = clo[q] | clo[a] | clo[b]
            if new != clo[q]:
                clo[q] = new
                changed = True
    return clo


def _trim_key(rows, finals_mask, clo):
    """Canonical (delta, finals) of the trimmed automaton with start 0.

    Mirrors dfa.trim exactly: kept states keep their relative order and
    all dead states collapse onto the smallest reachable dead index.
    """
    n = len(rows)
    reach = 1 | clo[0]
    live = 0
    for q in range(n):
        if ((1 << q) | clo[q]) & finals_mask:
            live |= 1 << q
    live_r = reach & live
    dead_r = reach & ~live
    if not live_r & 1:
        return ((0, 0),), ()
    if dead_r:
        sink_old = (dead_r & -dead_r).bit_length() - 1
        kept_mask = live_r | (1 << sink_old)
    else:
        sink_old = -1
        kept_mask = live_r
    kept = [q for q in range(n) if (kept_mask >> q) & 1]
    new_index = {old: i for i, old in enumerate(kept)}
    sink_new = new_index.get(sink_old)
    out_rows = []
    for old in kept:
        if old == sink_old:
            out_rows.append((sink_new, sink_new))
        else:
            a, b = rows[old]
            out_rows.append(
                (
                    new_index[a] if (live >> a) & 1 else sink_new,
                    new_index[b] if (live >> b) & 1 else sink_new,
                )
            )
    finals_new = tuple(
        new_index[q] for q in kept if (finals_mask >> q) & 1 and (live >> q) & 1
    )
    return tuple(out_rows), finals_new


def exhaustive_trim_dfas(max_states: int):
    """Every automaton obtained by trimming a complete automaton with at
    most max_states states, each distinct result yielded exactly once.

    The raw start state is fixed at 0; every complete automaton is
    isomorphic to one with start 0, and all properties checked against
    this family are invariant under state relabeling.
    """
    seen: set = set()
    for n in range(1, max_states + 1):
        pairs = [(a, b) for a in range(n) for b in range(n)]
        for rows in itertools.product(pairs, repeat=n):
            clo = _closure(rows)
            for fmask in range(1 << n):
                key = _trim_key(rows, fmask, clo)
                if key in seen:
                    continue
                seen.add(key)
                yield Dfa(delta=key[0], start=0, finals=frozenset(key[1]))


@dataclasses.dataclass(frozen=True)
class FuzzCase:
    key: int
    states: int
    verdict: str
    checks_passed: int
    first_failure: str | None


@dataclasses.dataclass(frozen=True)
class FuzzReport:
    total: int
    well_ordered: int
    not_well_ordered: int
    failures: int
    first_failure_key: int | None
    cases: tuple[FuzzCase, ...]
    exhaustive: bool

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_tsv(self) -> str:
        lines = ["seed\tstates\tverdict\tchecks\tfirst_failure"]
        for c in self.cases:
            lines.append(
                f"{c.key}\t{c.states}\t{c.verdict}\t{c.checks_passed}\t"
                f"{c.first_failure or '-'}"
            )
        first = self.first_failure_key if self.first_failure_key is not None else "-"
        lines.append(
            f"# total={self.total} well_ordered={self.well_ordered} "
            f"not_well_ordered={self.not_well_ordered} failures={self.failures} "
            f"first_failure={first}"
        )
        return "\n".join(lines) + "\n"


def _rank_consistency(m: Dfa, table, max_len: int) -> str | None:
    finite: list[tuple[str, int]] = []
    for length in range(max_len + 1):
        for tup in itertools.product("01", repeat=length):
            w = "".join(tup)
            if not m.accepts(w):
                continue
            r = rank(m, w, table)
            if r.is_finite:
                finite.append((w, r.as_int()))
    if not finite:
        return None
    max_r = max(r for _, r in finite)
    listed = enumerate_words(m, max_r + 1)
    for a, b in zip(listed, listed[1:]):
        if not a < b:
            return "enumeration-order"
    for w, r in finite:
        if len(listed) < r:
            return "rank-enumeration"
        if any(not v < w for v in listed[:r]):
            return "rank-enumeration"
        if len(listed) > r and listed[r] < w:
            return "rank-enumeration"
        bound = len(w) + m.state_count
        if brute_rank(m, w, bound) != r or brute_rank(m, w, bound + 1) != r:
            return "rank-stabilization"
    return None


def _examine(m: Dfa, verify_depth: int, rank_len: int):
    """Run the differential checks on one automaton.

    Returns (verdict, checks_passed, first_failure).
    """
    checks = 0
    fast = check(m)
    slow = naive_check(m)
    verdict = "well-ordered" if fast.well_ordered else "not-well-ordered"
    if (fast.well_ordered, fast.witness) != (slow.well_ordered, slow.witness):
        return verdict, checks, "check-disagreement"
    checks += 1

    if not fast.well_ordered:
        if not verify_witness(m, fast.witness, verify_depth):
            return verdict, checks, "witness-verification"
        checks += 1
        return verdict, checks, None

    table = order_type(m)
    checks += 1
    cond = condense(m)
    for q in range(m.state_count):
        if table.per_state[q].degree > cond.height_of[q]:
            return verdict, checks, "height-bound"
    if table.overall.degree > m.state_count:
        return verdict, checks, "degree-bound"
    checks += 1
    for members in cond.components:
        first = table.per_state[members[0]]
        if any(table.per_state[q] != first for q in members[1:]):
            return verdict, checks, "component-constancy"
    checks += 1
    if rank_len > 0:
        failure = _rank_consistency(m, table, rank_len)
        if failure:
            return verdict, checks, failure
        checks += 1
    return verdict, checks, None


def fuzz(
    seeds: int,
    states: int,
    *,
    exhaustive: bool = False,
    verify_depth: int = 32,
    rank_len: int = 3,
) -> FuzzReport:
    """Differential sweep: fast check against naive check, witnesses
    replayed, and on well-ordered cases the order-type invariants
    (height bound, component constancy, rank consistency).

    Seeded mode generates `seeds` random automata and reports one case
    per seed.  Exhaustive mode walks every trim automaton with at most
    `states` states instead (cases are recorded only for failures).
    """
    cases: list[FuzzCase] = []
    total = wo = nwo = failures = 0
    first_failure = None

    if exhaustive:
        stream = enumerate(exhaustive_trim_dfas(states))
    else:
        stream = ((s, random_trim_dfa(s, states)) for s in range(seeds))

    for key, m in stream:
        verdict, passed, failure = _examine(m, verify_depth, rank_len)
        total += 1
        if verdict == "well-ordered":
            wo += 1
        else:
            nwo += 1
        if failure:
            failures += 1
            if first_failure is None:
                first_failure = key
        if failure or not exhaustive:
            cases.append(FuzzCase(key, m.state_count, verdict, passed, failure))
    return FuzzReport(
        total=total,
        well_ordered=wo,
        not_well_ordered=nwo,
        failures=failures,
        first_failure_key=first_failure,
        cases=tuple(cases),
        exhaustive=exhaustive,
    )
