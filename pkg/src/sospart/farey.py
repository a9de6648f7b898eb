"""Farey sequences, Farey intervals and mediants."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd

__all__ = [
    "FareyInterval",
    "InvalidInterval",
    "NotAdjacent",
    "OnBoundary",
    "AtEnd",
    "farey_sequence",
    "farey_intervals",
    "next_farey",
    "farey_interval_of",
    "mediant",
    "interval_from_denominators",
    "totient",
    "totient_partial_sum",
]


class InvalidInterval(ValueError):
    pass


class NotAdjacent(InvalidInterval):
    pass


class AtEnd(ValueError):
    pass


class OnBoundary(ValueError):
    """The queried value is itself a term of the Farey sequence."""

    def __init__(self, fraction: Fraction, n: int):
        super().__init__(f"{fraction} is a term of F^({n})")
        self.fraction = fraction
        self.n = n


@dataclass(frozen=True)
class FareyInterval:
    """Open interval (a/b, c/d) between consecutive terms of F^(n)."""

    lo: Fraction
    hi: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        problem = _interval_problem(self.lo, self.hi, self.n)
        if problem:
            raise InvalidInterval(f"({self.lo}, {self.hi}) in F^({self.n}): {problem}")

    @property
    def a(self) -> int:
        return self.lo.numerator

    @property
    def b(self) -> int:
        return self.lo.denominator

    @property
    def c(self) -> int:
        return self.hi.numerator

    @property
    def d(self) -> int:
        return self.hi.denominator

    @property
    def width(self) -> Fraction:
        return Fraction(1, self.b * self.d)

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi

    def valid_for(self, n: int) -> bool:
        return not _interval_problem(self.lo, self.hi, n)

    def __str__(self):
        return f"({self.a}/{self.b}, {self.c}/{self.d})"


def _interval_problem(lo: Fraction, hi: Fraction, n: int) -> str:
    a, b, c, d = lo.numerator, lo.denominator, hi.numerator, hi.denominator
    if n < 1:
        return "order must be positive"
    if not 0 <= lo < hi <= 1:
        return "endpoints must satisfy 0 <= lo < hi <= 1"
    if b * c - a * d != 1:
        return "bc - ad != 1"
    if b > n or d > n:
        return "denominator exceeds the order"
    if b + d <= n:
        return "b + d <= n, the endpoints are not consecutive"
    return ""


def totient(k: int) -> int:
    if k < 1:
        raise ValueError("totient is defined for positive integers")
    result, m, p = k, k, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def totient_partial_sum(n: int) -> int:
    """Number of Farey intervals of order n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(totient(k) for k in range(1, n + 1))


def next_farey(prev: Fraction, cur: Fraction, n: int) -> Fraction:
    """Successor of ``cur`` in F^(n), given its predecessor ``prev``."""
    if cur >= 1:
        raise AtEnd(f"{cur} is the last term of F^({n})")
    a, b = prev.numerator, prev.denominator
    c, d = cur.numerator, cur.denominator
    k = (n + b) // d
    return Fraction(k * c - a, k * d - b)


def farey_sequence(n: int) -> list[Fraction]:
    """All reduced fractions in [0, 1] with denominator at most n, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    prev, cur = Fraction(0), Fraction(1, n)
    seq = [prev, cur]
    while cur < 1:
        prev, cur = cur, next_farey(prev, cur, n)
        seq.append(cur)
    return seq


def farey_intervals(n: int) -> list[FareyInterval]:
    seq = farey_sequence(n)
    return [FareyInterval(lo, hi, n) for lo, hi in zip(seq, seq[1:])]


def mediant(iv: FareyInterval) -> Fraction:
    # bc - ad = 1 makes (a+c)/(b+d) already reduced
    return Fraction(iv.a + iv.c, iv.b + iv.d)


def farey_interval_of(alpha: Fraction, n: int) -> FareyInterval:
    """Locate the open interval of F^(n) containing ``alpha``.

    Walks down the Stern-Brocot tree, taking runs of same-direction moves in a
    single step so the cost is logarithmic in the denominator of ``alpha``.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"{alpha} is outside [0, 1]")
    if n < 1:
        raise ValueError("n must be >= 1")
    if alpha.denominator <= n:
        raise OnBoundary(alpha, n)
    a, b, c, d = 0, 1, 1, 1
    while b + d <= n:
        # alpha is strictly between a/b and c/d; neither side is a term here
        if alpha * (b + d) < a + c:
            # hi runs through (c + k a)/(d + k b); alpha < hi while k < t
            t = (c - alpha * d) / (alpha * b - a)
            k = min(ceil(t) - 1, (n - d) // b)
            c, d = c + k * a, d + k * b
        else:
            t = (alpha * b - a) / (c - alpha * d)
            k = min(ceil(t) - 1, (n - b) // d)
            a, b = a + k * c, b + k * d
    return FareyInterval(Fraction(a, b), Fraction(c, d), n)


def interval_from_denominators(b: int, d: int, n: int) -> FareyInterval:
    """The Farey interval of F^(n) whose endpoints have denominators b and d."""
    if not (1 <= b <= n and 1 <= d <= n):
        raise NotAdjacent(f"denominators {b}, {d} must lie in [1, {n}]")
    if gcd(b, d) != 1 or b + d <= n:
        raise NotAdjacent(f"no interval of F^({n}) has denominators {b}, {d}")
    a = -pow(d, -1, b) % b
    c = (1 + a * d) // b
    try:
        return FareyInterval(Fraction(a, b), Fraction(c, d), n)
    except InvalidInterval as exc:
        raise NotAdjacent(str(exc)) from None
