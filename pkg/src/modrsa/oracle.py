"""Deliberately naive reference implementations, used as ground truth.

Everything here is written the slow, obvious way, on raw integers and
stdlib math.gcd, so it shares no code with the optimized routines it
validates. The duplication is the point; keep it that way.
"""

from math import gcd as _stdlib_gcd

from .errors import UndefinedGcdError
from .modmath import Modulus, Residue


def _size(n) -> int:
    return (n if isinstance(n, Modulus) else Modulus(n)).n


def naive_pow(x: Residue, e: int) -> Residue:
    """x**e by literally multiplying e times, reducing after every step."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    n = x.modulus.n
    r = 1
    for _ in range(e):
        r = r * x.value % n
    return Residue(r, x.modulus)


def phi_brute(n) -> int:
    """Number of units modulo n: count x in [1, n) with gcd(x, n) = 1."""
    m = _size(n)
    return sum(1 for x in range(1, m) if _stdlib_gcd(x, m) == 1)


def inverse_brute(x: Residue) -> Residue | None:
    """Scan [1, n) for a y with x*y = 1; None when no reciprocal exists."""
    n = x.modulus.n
    for y in range(1, n):
        if x.value * y % n == 1:
            return Residue(y, x.modulus)
    return None


def zero_divisors(n) -> set[int]:
    """All nonzero x for which some nonzero y gives x*y = 0 mod n."""
    m = _size(n)
    return {x for x in range(1, m) if any(x * y % m == 0 for y in range(1, m))}


def gcd_scan(x: int, y: int) -> int:
    """Largest common divisor found by scanning downward; the definition itself."""
    if x < 0 or y < 0:
        raise ValueError("gcd is defined for nonnegative integers")
    if x == 0 and y == 0:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    if x == 0 or y == 0:
        return x or y
    for d in range(min(x, y), 0, -1):
        if x % d == 0 and y % d == 0:
            return d
    raise AssertionError("unreachable: 1 divides everything")
