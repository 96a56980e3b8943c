"""Ordinals below w^w in Cantor normal form.

An ordinal is kept as a tuple of natural coefficients (c0, c1, ..., cd),
index = exponent, so (4, 1, 3) means w^2*3 + w*1 + 4.  The tuple never
ends in a zero; the empty tuple is the ordinal 0.
"""

from __future__ import annotations

MAX_DEGREE = 64


class DegreeOverflowError(Exception):
    """Raised when an ordinal would exceed degree MAX_DEGREE."""


class OrdinalParseError(ValueError):
    """Syntax error in ordinal notation. Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Ordinal:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"coefficients must be naturals, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) > MAX_DEGREE + 1:
            raise DegreeOverflowError(
                f"degree {len(cs) - 1} exceeds the bound {MAX_DEGREE}"
            )
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def zero(cls) -> "Ordinal":
        return cls()

    @classmethod
    def one(cls) -> "Ordinal":
        return cls((1,))

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        return cls((n,)) if n else cls()

    @classmethod
    def omega(cls) -> "Ordinal":
        return cls((0, 1))

    @classmethod
    def omega_power(cls, k: int, coeff: int = 1) -> "Ordinal":
        if k < 0:
            raise ValueError("exponent must be a natural")
        if k > MAX_DEGREE:
            raise DegreeOverflowError(f"degree {k} exceeds the bound {MAX_DEGREE}")
        return cls((0,) * k + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_finite(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def degree(self) -> int:
        """Exponent of the leading term; by convention 0 for the ordinal 0."""
        return max(len(self._coeffs) - 1, 0)

    def as_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not a finite ordinal")
        return self._coeffs[0] if self._coeffs else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        elif not isinstance(other, Ordinal):
            return NotImplemented
        if other.is_zero:
            return self
        a, b = self._coeffs, other._coeffs
        d = len(b) - 1
        # Left summand keeps only the part at or above the right's degree.
        a_d = a[d] if d < len(a) else 0
        return Ordinal(b[:d] + (a_d + b[d],) + a[d + 1 :])

    def __radd__(self, other):
        if isinstance(other, int):
            return Ordinal.from_int(other) + self
        return NotImplemented

    def times_omega(self) -> "Ordinal":
        """Ordinal product with w: 0 for 0, else w^(degree+1)."""
        if self.is_zero:
            return self
        return Ordinal.omega_power(len(self._coeffs))

    def _key(self):
        return (len(self._coeffs), self._coeffs[::-1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        elif not isinstance(other, Ordinal):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        return self._key() < other._key()

    def __le__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        return self._key() <= other._key()

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({list(self._coeffs)!r})"


def format_ordinal(o: Ordinal) -> str:
    """Canonical text: terms by descending exponent, e.g. "w^2*3 + w + 4"."""
    if o.is_zero:
        return "0"
    parts = []
    for k in range(len(o.coeffs) - 1, -1, -1):
        c = o.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            base = "w" if k == 1 else f"w^{k}"
            parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


def parse_ordinal(text: str) -> Ordinal:
    """Parse ordinal notation.

    Grammar (whitespace-insensitive):

        ord  := term ("+" term)* | "0"
        term := "w^" INT ("*" INT)? | "w" ("*" INT)? | INT

    Terms are combined left to right with ordinal addition, so the
    canonical descending form round-trips and permuted forms still
    denote a valid ordinal.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise OrdinalParseError("expected an integer", start)
        return int(text[start:pos])

    def read_term() -> Ordinal:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise OrdinalParseError("expected a term", pos)
        if text[pos] == "w":
            pos += 1
            skip_ws()
            exp = 1
            if pos < n and text[pos] == "^":
                pos += 1
                exp = read_int()
            coeff = 1
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                coeff = read_int()
            return Ordinal.omega_power(exp, coeff)
        if text[pos].isdigit():
            return Ordinal.from_int(read_int())
        raise OrdinalParseError(f"unexpected character {text[pos]!r}", pos)

    total = read_term()
    skip_ws()
    while pos < n:
        if text[pos] != "+":
            raise OrdinalParseError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
        total = total + read_term()
        skip_ws()
    return total
