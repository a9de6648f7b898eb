"""JSON records for domains, partitions and strips.

Rationals are always written as ``[num, den]`` integer pairs so a record
round-trips without loss.  Key order is fixed, so equal inputs give equal bytes.
"""

import json
import re
from fractions import Fraction

from .farey import FareyInterval
from .geometry import Domain, Partition, three_area_values
from .sos import SosPerm

__all__ = [
    "rational_pair",
    "pair_rational",
    "domain_to_record",
    "record_to_domain",
    "partition_to_dict",
    "strip_to_dict",
    "dumps",
]


def rational_pair(x) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def pair_rational(pair) -> Fraction:
    num, den = pair
    return Fraction(int(num), int(den))


def domain_to_record(dom: Domain) -> dict:
    iv = dom.interval
    return {
        "perm": str(dom.perm),
        "n": dom.n,
        "interval": {"a": iv.a, "b": iv.b, "c": iv.c, "d": iv.d},
        "j_bot": dom.j_bot,
        "j_top": dom.j_top,
        "shape": dom.shape,
        "vertices": [[rational_pair(x), rational_pair(y)] for x, y in dom.vertices],
        "area": rational_pair(dom.area),
    }


def record_to_domain(rec: dict) -> Domain:
    n = int(rec["n"])
    iv = rec["interval"]
    return Domain(
        perm=SosPerm.parse(rec["perm"]),
        interval=FareyInterval(Fraction(iv["a"], iv["b"]), Fraction(iv["c"], iv["d"]), n),
        j_bot=int(rec["j_bot"]),
        j_top=int(rec["j_top"]),
        vertices=tuple((pair_rational(x), pair_rational(y)) for x, y in rec["vertices"]),
        shape=rec["shape"],
        area=pair_rational(rec["area"]),
    )


def partition_to_dict(part: Partition) -> dict:
    return {
        "n": part.n,
        "count": len(part),
        "total_area": rational_pair(part.total_area),
        "regions": [domain_to_record(dom) for dom in part],
    }


def strip_to_dict(iv: FareyInterval, n: int, domains: list[Domain]) -> dict:
    values = three_area_values(iv)
    occurring = sorted({dom.area for dom in domains})
    return {
        "n": n,
        "interval": {"a": iv.a, "b": iv.b, "c": iv.c, "d": iv.d},
        "width": rational_pair(iv.width),
        "regions": [domain_to_record(dom) for dom in domains],
        "three_areas": {
            "triangle_left": rational_pair(values["triangle_left"]),
            "triangle_right": rational_pair(values["triangle_right"]),
            "trapezoid": rational_pair(values["trapezoid"]),
            "occurring": [rational_pair(a) for a in occurring],
            "has_trapezoid": any(dom.shape == "trapezoid" for dom in domains),
            "total": rational_pair(sum((dom.area for dom in domains), Fraction(0))),
        },
    }


_INT_PAIR = re.compile(r"\[\s*(-?\d+),\s*(-?\d+)\s*\]")
_PAIR_PAIR = re.compile(r"\[\s*(\[-?\d+, -?\d+\]),\s*(\[-?\d+, -?\d+\])\s*\]")


def dumps(obj) -> str:
    """Indented JSON with rational pairs and points kept on one line."""
    text = json.dumps(obj, indent=2)
    text = _INT_PAIR.sub(r"[\1, \2]", text)
    text = _PAIR_PAIR.sub(r"[\1, \2]", text)
    return text + "\n"
