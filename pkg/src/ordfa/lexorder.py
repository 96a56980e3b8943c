"""The lexicographic order on binary words and tools built on it.

The order is the union of the prefix order (a proper prefix comes
first) and the strict order (at the first differing position, 0 beats
1).  For words over '0'/'1' this coincides exactly with Python's string
comparison: a proper prefix sorts first and '0' < '1' charwise.  The
functions here rely on that, while the relation taxonomy is exposed
through `compare_lex`.
"""

from __future__ import annotations

import dataclasses
import enum

from .dfa import Dfa, live_states


class LexRelation(enum.Enum):
    EQUAL = "equal"
    PREFIX_LESS = "prefix-less"
    PREFIX_GREATER = "prefix-greater"
    STRICT_LESS = "strict-less"
    STRICT_GREATER = "strict-greater"


class NoMinimumError(Exception):
    """The language has no lexicographic minimum (a descending chain exists)."""


class NotDescendingError(ValueError):
    """Input words are not strictly descending in the lexicographic order."""


class NotStrictChainError(ValueError):
    """Input words are not pairwise descending in the strict order."""


def compare_lex(u: str, v: str) -> LexRelation:
    if u == v:
        return LexRelation.EQUAL
    if v.startswith(u):
        return LexRelation.PREFIX_LESS
    if u.startswith(v):
        return LexRelation.PREFIX_GREATER
    return LexRelation.STRICT_LESS if u < v else LexRelation.STRICT_GREATER


def lex_less(u: str, v: str) -> bool:
    return u < v


def _divergence(u: str, v: str) -> int:
    """Index of the first position where u and v differ."""
    for i, (a, b) in enumerate(zip(u, v)):
        if a != b:
            return i
    raise ValueError("one word is a prefix of the other")


def _min_from(m: Dfa, q: int, live: frozenset[int]) -> str:
    """Least word accepted from live state q, by greedy descent.

    Always prefers staying final (the empty word), then the 0 branch
    when it leads anywhere live.  Revisiting a state proves the descent
    never bottoms out.
    """
    letters: list[str] = []
    seen = set()
    while True:
        if q in m.finals:
            return "".join(letters)
        if q in seen:
            raise NoMinimumError(
                f"greedy descent revisits state {q}; no least word exists"
            )
        seen.add(q)
        if m.delta[q][0] in live:
            letters.append("0")
            q = m.delta[q][0]
        else:
            letters.append("1")
            q = m.delta[q][1]


def min_word(m: Dfa) -> str | None:
    """Lexicographic minimum of the language, or None when it is empty.

    Raises NoMinimumError when the language is nonempty but has no
    least element.
    """
    live = live_states(m)
    if m.start not in live:
        return None
    return _min_from(m, m.start, live)


def successor(m: Dfa, w: str) -> str | None:
    """Least accepted word strictly above w, or None when there is none.

    Expects a trim automaton with a well-ordered language; on other
    input the greedy subcalls may raise NoMinimumError.

    Anything above w either extends it or branches off at a position
    where w reads 0.  The least extension starts with the least
    nonempty continuation; among branch points, later ones give smaller
    words, so they are tried from the right.
    """
    live = live_states(m)

    q = m.run(m.start, w)
    if q in live:
        for b in (0, 1):
            t = m.delta[q][b]
            if t in live:
                return w + "01"[b] + _min_from(m, t, live)

    for i in range(len(w) - 1, -1, -1):
        if w[i] != "0":
            continue
        t = m.delta[m.run(m.start, w[:i])][1]
        if t in live:
            return w[:i] + "1" + _min_from(m, t, live)
    return None


def enumerate_words(m: Dfa, n: int) -> list[str]:
    """First n accepted words in lexicographic order (fewer if the
    language runs out)."""
    if n <= 0:
        return []
    first = min_word(m)
    if first is None:
        return []
    out = [first]
    while len(out) < n:
        nxt = successor(m, out[-1])
        if nxt is None:
            break
        out.append(nxt)
    return out


_EMBED = {"0": "0", "1": "10", "2": "11"}


def embed3to2(word: str) -> str:
    """Order-preserving embedding of ternary words into binary words.

    Letters map 0 -> 0, 1 -> 10, 2 -> 11.
    """
    try:
        return "".join(_EMBED[ch] for ch in word)
    except KeyError:
        bad = next(ch for ch in word if ch not in _EMBED)
        raise ValueError(f"letter {bad!r} is not 0, 1 or 2") from None


def extract_strict_chain(words: list[str]) -> list[str]:
    """Thin a strictly descending sequence down to strict-order drops.

    The input must descend under the full lexicographic order.  The
    result starts at words[0] and keeps, each time, the first later
    word that is strictly (not prefix) below the last kept one.
    """
    if not words:
        return []
    for i in range(len(words) - 1):
        rel = compare_lex(words[i + 1], words[i])
        if rel not in (LexRelation.PREFIX_LESS, LexRelation.STRICT_LESS):
            raise NotDescendingError(
                f"words[{i + 1}] = {words[i + 1]!r} does not descend below "
                f"words[{i}] = {words[i]!r}"
            )
    out = [words[0]]
    for w in words[1:]:
        if compare_lex(w, out[-1]) is LexRelation.STRICT_LESS:
            out.append(w)
    return out


@dataclasses.dataclass(frozen=True)
class ChainAnalysis:
    """Flip structure of a strict descending chain.

    Times are 1-based: time n is the step from the n-th word to the
    next.  Positions are 0-based indices into the words.  `active`
    lists, per step, the position where the words diverge with a 1
    turning into a 0.  `sequence` is the canonical subsequence
    (i_0, t_0), (i_1, t_1), ... where i_0 is the least position ever
    active, t_0 its (unique) time, and each next entry is the least
    larger position active after the previous time.
    """

    active: tuple[tuple[int, int], ...]
    sequence: tuple[tuple[int, int], ...]


def analyze_chain(words: list[str]) -> ChainAnalysis:
    for i in range(len(words) - 1):
        if compare_lex(words[i + 1], words[i]) is not LexRelation.STRICT_LESS:
            raise NotStrictChainError(
                f"words[{i + 1}] = {words[i + 1]!r} is not strictly below "
                f"words[{i}] = {words[i]!r}"
            )
    active = []
    for n in range(1, len(words)):
        i = _divergence(words[n - 1], words[n])
        active.append((i, n))

    sequence = []
    i_prev, t_prev = -1, 0
    while True:
        pool = [(i, t) for (i, t) in active if i > i_prev and t > t_prev]
        if not pool:
            break
        i_k = min(i for i, _ in pool)
        t_k = min(t for i, t in pool if i == i_k)
        sequence.append((i_k, t_k))
        i_prev, t_prev = i_k, t_k
    return ChainAnalysis(active=tuple(active), sequence=tuple(sequence))
