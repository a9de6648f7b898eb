"""Domains of Sos permutations in the (alpha, beta) unit square.

The domain of a Sos permutation p for an interval (a/b, c/d) is bounded by the
two vertical lines alpha = a/b and alpha = c/d, below by the line
p(0)*alpha + beta = j_bot and above by p(n)*alpha + beta = j_top.  Everything
here is exact; polygons are lists of Fraction pairs.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .farey import (
    FareyInterval,
    InvalidInterval,
    NotAdjacent,
    farey_intervals,
    interval_from_denominators,
    mediant,
)
from .sos import SosPerm, count_sos, cyclic_shift, sos_recurrence

__all__ = [
    "Domain",
    "Partition",
    "NotSosPermutation",
    "NotInFarey",
    "DegenerateN",
    "GeometryError",
    "TRIANGLE_LEFT",
    "TRIANGLE_RIGHT",
    "TRAPEZOID",
    "shoelace_area",
    "domain_of",
    "strip_regions",
    "partition",
    "refine",
    "crossing_coordinates",
    "gap_area_integral",
    "area_extremes",
    "three_area_values",
    "interior_point",
    "check_partition",
]

TRIANGLE_LEFT = "triangle_left"
TRIANGLE_RIGHT = "triangle_right"
TRAPEZOID = "trapezoid"

Point = tuple[Fraction, Fraction]


class NotSosPermutation(ValueError):
    pass


class NotInFarey(ValueError):
    pass


class DegenerateN(ValueError):
    pass


class GeometryError(AssertionError):
    """A constructed polygon broke a guarantee it should satisfy by theory."""


@dataclass(frozen=True)
class Domain:
    perm: SosPerm
    interval: FareyInterval
    j_bot: int
    j_top: int
    vertices: tuple[Point, ...]
    shape: str
    area: Fraction

    @property
    def n(self) -> int:
        return self.perm.n

    def bottom(self, alpha) -> Fraction:
        return self.j_bot - self.perm[0] * Fraction(alpha)

    def top(self, alpha) -> Fraction:
        return self.j_top - self.perm[-1] * Fraction(alpha)

    def contains(self, alpha, beta) -> bool:
        """Half-open membership for alpha strictly inside the strip.

        The vertical edges alpha = a/b, c/d are not assigned to any domain;
        on them the direct sort in :func:`sospart.sos.sos_permutation` is the
        only answer.
        """
        return alpha in self.interval and self.bottom(alpha) <= beta < self.top(alpha)

    def beta_range_at(self, alpha) -> tuple[Fraction, Fraction]:
        """Closed beta-extent of the polygon on the vertical line at ``alpha``.

        Computed from the vertex list alone, independent of j_bot/j_top.
        """
        alpha = Fraction(alpha)
        hits = []
        verts = self.vertices
        for (x0, y0), (x1, y1) in zip(verts, verts[1:] + verts[:1]):
            if x0 == x1:
                if x0 == alpha:
                    hits += [y0, y1]
            elif min(x0, x1) <= alpha <= max(x0, x1):
                hits.append(y0 + (y1 - y0) * (alpha - x0) / (x1 - x0))
        if not hits:
            raise ValueError(f"alpha = {alpha} misses the domain of {self.perm}")
        return min(hits), max(hits)


@dataclass(frozen=True)
class Partition:
    n: int
    domains: tuple[Domain, ...]

    def __len__(self):
        return len(self.domains)

    def __iter__(self):
        return iter(self.domains)

    @property
    def total_area(self) -> Fraction:
        return sum((dom.area for dom in self.domains), Fraction(0))

    def strips(self) -> list[tuple[FareyInterval, list[Domain]]]:
        out: list[tuple[FareyInterval, list[Domain]]] = []
        for dom in self.domains:
            if not out or out[-1][0] != dom.interval:
                out.append((dom.interval, []))
            out[-1][1].append(dom)
        return out


def shoelace_area(vertices) -> Fraction:
    total = Fraction(0)
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        total += x0 * y1 - x1 * y0
    return abs(total) / 2


def three_area_values(iv: FareyInterval) -> dict[str, Fraction]:
    """Areas of the three possible domain shapes in the strip over ``iv``."""
    w = iv.width
    return {
        TRIANGLE_LEFT: iv.d * w * w / 2,
        TRIANGLE_RIGHT: iv.b * w * w / 2,
        TRAPEZOID: (iv.b + iv.d) * w * w / 2,
    }


def _dedup_cycle(points: list[Point]) -> tuple[Point, ...]:
    out: list[Point] = []
    for pt in points:
        if not out or out[-1] != pt:
            out.append(pt)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


def _build_domain(perm: SosPerm, iv: FareyInterval) -> Domain:
    n = perm.n
    p0, pn = perm[0], perm[n]
    a, b = iv.a, iv.b
    # floor(a*p/b) by integer division
    j_bot = 0 if p0 == 0 else 1 + (a * p0) // b
    j_top = 1 + (a * pn) // b

    lo, hi = iv.lo, iv.hi
    bot = lambda x: j_bot - p0 * x  # noqa: E731
    top = lambda x: j_top - pn * x  # noqa: E731
    vertices = _dedup_cycle([(lo, bot(lo)), (hi, bot(hi)), (hi, top(hi)), (lo, top(lo))])

    x_star = Fraction(j_top - j_bot, pn - p0)
    if x_star == hi:
        shape = TRIANGLE_LEFT
    elif x_star == lo:
        shape = TRIANGLE_RIGHT
    elif lo < x_star < hi:
        raise GeometryError(f"bounding lines of {perm} cross inside {iv}")
    else:
        shape = TRAPEZOID

    expected_vertices = 4 if shape == TRAPEZOID else 3
    if len(vertices) != expected_vertices:
        raise GeometryError(f"{perm}: {len(vertices)} vertices for a {shape}")
    for x, y in vertices:
        if not (0 <= x <= 1 and 0 <= y <= 1):
            raise GeometryError(f"{perm}: vertex ({x}, {y}) leaves the unit square")
    if bot(lo) > top(lo) or bot(hi) > top(hi):
        raise GeometryError(f"{perm}: bounding lines are inverted")

    area = iv.width * (j_top - j_bot + (lo + hi) * Fraction(p0 - pn, 2))
    return Domain(perm, iv, j_bot, j_top, vertices, shape, area)


def domain_of(p: SosPerm) -> Domain:
    """Exact domain of a Sos permutation, reconstructed from its entries.

    The entries either side of 0 (cyclically) are the denominators of the
    Farey interval; the permutation is then re-derived from that interval
    and rejected if it does not match.
    """
    if not isinstance(p, SosPerm):
        p = SosPerm(tuple(p))
    n = p.n
    k = p.entries.index(0)
    d = p[(k - 1) % (n + 1)]
    b = p[(k + 1) % (n + 1)]
    try:
        iv = interval_from_denominators(b, d, n)
    except NotAdjacent:
        raise NotSosPermutation(f"{p} is not a Sos permutation") from None
    if cyclic_shift(sos_recurrence(iv, n), k) != p:
        raise NotSosPermutation(f"{p} is not a Sos permutation")
    return _build_domain(p, iv)


def strip_regions(iv: FareyInterval, n: int) -> list[Domain]:
    """The n + 1 domains over one Farey interval, top to bottom."""
    if not iv.valid_for(n):
        raise InvalidInterval(f"{iv} is not an interval of F^({n})")
    if iv.n != n:
        iv = FareyInterval(iv.lo, iv.hi, n)
    base = sos_recurrence(iv, n)
    return [_build_domain(cyclic_shift(base, k), iv) for k in range(n, -1, -1)]


@lru_cache(maxsize=64)
def partition(n: int) -> Partition:
    """Every domain for size n: strips left to right, each top to bottom."""
    if n < 1:
        raise ValueError("n must be >= 1")
    domains: list[Domain] = []
    for iv in farey_intervals(n):
        domains.extend(strip_regions(iv, n))
    return Partition(n, tuple(domains))


def _in_closure(dom: Domain, pt: Point) -> bool:
    x, y = pt
    iv = dom.interval
    return iv.lo <= x <= iv.hi and dom.bottom(x) <= y <= dom.top(x)


def refine(p: SosPerm) -> list[SosPerm]:
    """Permutations of size n + 1 whose domains tile the domain of ``p``."""
    parent = domain_of(p)
    lo, hi = parent.interval.lo, parent.interval.hi
    children = [
        dom
        for dom in partition(p.n + 1)
        if lo <= dom.interval.lo and dom.interval.hi <= hi
        and all(_in_closure(parent, v) for v in dom.vertices)
    ]
    covered = sum((dom.area for dom in children), Fraction(0))
    if covered != parent.area or not 1 <= len(children) <= 3:
        raise GeometryError(
            f"refinement of {p}: {len(children)} children covering {covered} of {parent.area}"
        )
    return [dom.perm for dom in children]


def crossing_coordinates(edge_alpha, n: int) -> list[Fraction]:
    """Heights in (0, 1] where lines i*alpha + beta = j (1 <= j <= i <= n)
    meet the vertical line at ``edge_alpha``."""
    x = Fraction(edge_alpha)
    if x.denominator > n or not 0 <= x < 1:
        raise NotInFarey(f"{x} is not a left endpoint of an interval of F^({n})")
    ys = set()
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            y = j - i * x
            if 0 < y <= 1:
                ys.add(y)
    return sorted(ys)


def _integrate_linear(slope: Fraction, intercept: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return slope * (hi * hi - lo * lo) / 2 + intercept * (hi - lo)


def gap_area_integral(iv: FareyInterval, n: int, k: int) -> Fraction:
    """Integral over the interval of the k-th gap, as a function of alpha, at beta = 0.

    The first gap is b*alpha - a, the wrap gap is c - d*alpha, and every other
    gap is one of those two or their sum.
    """
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}]")
    perm = sos_recurrence(iv, n)
    a, b, c, d = iv.a, iv.b, iv.c, iv.d
    first = (Fraction(b), Fraction(-a))
    wrap = (Fraction(-d), Fraction(c))
    if k == n:
        slope, intercept = wrap
    elif perm[k] <= n - b:
        slope, intercept = first
    elif perm[k] < d:
        slope, intercept = first[0] + wrap[0], first[1] + wrap[1]
    else:
        slope, intercept = wrap
    return _integrate_linear(slope, intercept, iv.lo, iv.hi)


def area_extremes(n: int):
    """Smallest and largest domain areas for size n, with the permutations
    attaining them: ``(min_area, min_perms, max_area, max_perms)``."""
    if n < 2:
        raise DegenerateN("area extremes need n >= 2")
    domains = partition(n).domains
    lo = min(dom.area for dom in domains)
    hi = max(dom.area for dom in domains)
    return (
        lo,
        frozenset(dom.perm for dom in domains if dom.area == lo),
        hi,
        frozenset(dom.perm for dom in domains if dom.area == hi),
    )


def interior_point(dom: Domain) -> Point:
    """A point strictly inside the domain: the strip mediant, mid-height."""
    x = mediant(dom.interval)
    return x, (dom.bottom(x) + dom.top(x)) / 2


def check_partition(n: int) -> list[str]:
    """Cheap structural self-check; returns a list of problems (empty if fine)."""
    part = partition(n)
    problems = []
    if len(part) != count_sos(n):
        problems.append(f"{len(part)} domains, expected {count_sos(n)}")
    if part.total_area != 1:
        problems.append(f"total area {part.total_area}")
    for dom in part:
        if shoelace_area(dom.vertices) != dom.area:
            problems.append(f"{dom.perm}: shoelace area disagrees")
    return problems
