"""Sos permutations: direct sorting, Sos's recurrence, cyclic shifts, gaps."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .exact import frac_eval
from .farey import FareyInterval, InvalidInterval, farey_intervals, totient_partial_sum

__all__ = [
    "SosPerm",
    "GapProfile",
    "RecurrenceStep",
    "sos_permutation",
    "sos_recurrence",
    "recurrence_steps",
    "cyclic_shift",
    "sos_orbit",
    "enumerate_sos",
    "count_sos",
    "gap_profile",
]


@dataclass(frozen=True)
class SosPerm:
    """A permutation of {0, ..., n} in one-line form."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if len(entries) < 2 or sorted(entries) != list(range(len(entries))):
            raise ValueError(f"not a permutation of 0..n with n >= 1: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "SosPerm":
        """Read ``"42075316"`` (n <= 9 only) or ``"9 2 7 0 5 3 8 1 6 4"``."""
        text = text.strip()
        if any(ch in text for ch in " ,"):
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            entries = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot read a permutation from {text!r}") from None
        return cls(entries)

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.entries))
        return " ".join(map(str, self.entries))

    def __repr__(self):
        return f"SosPerm({str(self)!r})"


@dataclass(frozen=True)
class GapProfile:
    sorted_values: tuple[Fraction, ...]
    gaps: tuple[Fraction, ...]
    distinct_gaps: frozenset = field(default_factory=frozenset)


@dataclass(frozen=True)
class RecurrenceStep:
    k: int
    value: int
    step: int
    case: str  # "b", "b-d" or "-d"


def sos_permutation(alpha, beta, n: int) -> SosPerm:
    """Lexicographically first permutation sorting f(0), ..., f(n).

    Sorting by (value, index) puts tied values in increasing index order,
    which is exactly the lexicographically first sorting permutation.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha, beta = Fraction(alpha), Fraction(beta)
    # integer keys over a common denominator: f(i) * den
    den = lcm(alpha.denominator, beta.denominator)
    p = alpha.numerator * (den // alpha.denominator)
    q = beta.numerator * (den // beta.denominator)
    order = sorted(range(n + 1), key=lambda i: ((p * i + q) % den, i))
    return SosPerm(tuple(order))


def recurrence_steps(iv: FareyInterval, n: int) -> list[RecurrenceStep]:
    """Trace of Sos's recurrence from pi(0) = 0, one entry per index."""
    if not iv.valid_for(n):
        raise InvalidInterval(f"{iv} is not an interval of F^({n})")
    b, d = iv.b, iv.d
    steps = [RecurrenceStep(0, 0, 0, "start")]
    cur = 0
    for k in range(n):
        if cur <= n - b:
            step, case = b, "b"
        elif cur < d:
            step, case = b - d, "b-d"
        else:
            step, case = -d, "-d"
        cur += step
        steps.append(RecurrenceStep(k + 1, cur, step, case))
    return steps


def sos_recurrence(iv: FareyInterval, n: int) -> SosPerm:
    """The Sos permutation with pi(0) = 0 for slopes inside ``iv``."""
    return SosPerm(tuple(s.value for s in recurrence_steps(iv, n)))


def cyclic_shift(p: SosPerm, k: int) -> SosPerm:
    """p composed with c^k, where c(i) = i - 1 mod (n + 1)."""
    m = len(p)
    k %= m
    return SosPerm(p.entries[m - k:] + p.entries[:m - k])


def sos_orbit(alpha, n: int) -> list[SosPerm]:
    """All n + 1 Sos permutations for a fixed slope, in increasing-beta order.

    These are exactly the permutations met as beta sweeps [0, 1) when alpha is
    not itself a term of F^(n); at a Farey point ties merge some of them.
    """
    base = sos_permutation(alpha, 0, n)
    return [cyclic_shift(base, k) for k in range(n + 1)]


def enumerate_sos(n: int) -> list[SosPerm]:
    """Every Sos permutation of {0..n}: intervals left to right, shifts 0..n."""
    out = []
    for iv in farey_intervals(n):
        base = sos_recurrence(iv, n)
        out.extend(cyclic_shift(base, k) for k in range(n + 1))
    return out


def count_sos(n: int) -> int:
    return (n + 1) * totient_partial_sum(n)


def gap_profile(alpha, beta, n: int) -> GapProfile:
    """Sorted values of f on the circle and the n + 1 gaps between them.

    The last gap wraps around through 0, so the gaps always sum to 1.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    perm = sos_permutation(alpha, beta, n)
    values = tuple(frac_eval(alpha, beta, i) for i in perm)
    gaps = tuple(y - x for x, y in zip(values, values[1:])) + (1 - values[-1] + values[0],)
    return GapProfile(values, gaps, frozenset(gaps))
