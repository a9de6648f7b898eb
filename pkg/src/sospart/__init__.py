"""Exact Sos permutations of x -> alpha*x + beta mod 1 and their domains."""

from .exact import frac_eval, parse_rational, rational_from_decimal_string, rational_from_parts
from .farey import (
    FareyInterval,
    farey_interval_of,
    farey_sequence,
    interval_from_denominators,
    mediant,
    next_farey,
    totient_partial_sum,
)
from .geometry import (
    Domain,
    Partition,
    area_extremes,
    crossing_coordinates,
    domain_of,
    gap_area_integral,
    partition,
    refine,
    strip_regions,
)
from .sos import (
    GapProfile,
    SosPerm,
    count_sos,
    cyclic_shift,
    enumerate_sos,
    gap_profile,
    sos_orbit,
    sos_permutation,
    sos_recurrence,
)

__version__ = "0.1.0"
