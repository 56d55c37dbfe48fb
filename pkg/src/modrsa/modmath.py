"""Exact residue arithmetic over a runtime-chosen modulus.

All values are plain Python integers kept in canonical form 0 <= value < n.
The modulus is capped at 2**31 - 1 so that a product of two residues stays
below 2**62 before reduction; nothing here ever grows an integer beyond
that, and nothing needs arbitrary precision.

Every type in this module is an immutable value and every operation is a
pure function, so the whole surface is safe for unrestricted concurrent use.
"""

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    InvalidModulusError,
    ModulusMismatchError,
    NotAUnitError,
    NotSquareFreeError,
    UndefinedGcdError,
)

MAX_MODULUS = 2**31 - 1


@dataclass(frozen=True)
class Modulus:
    """Clock size n >= 2; all arithmetic wraps modulo n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise InvalidModulusError(self.n)
        if not 2 <= self.n <= MAX_MODULUS:
            raise InvalidModulusError(self.n)

    def __str__(self):
        return str(self.n)


def _as_modulus(n) -> Modulus:
    return n if isinstance(n, Modulus) else Modulus(n)


@dataclass(frozen=True)
class Residue:
    """Canonical representative of an integer class modulo a fixed n.

    The constructor insists on canonical form; use reduce() to wrap an
    arbitrary, possibly negative, integer. Operators accept another
    Residue with the same modulus, or a plain int which is reduced first.
    """

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.n:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.modulus.n}")

    def _coerce(self, other) -> "Residue":
        if isinstance(other, Residue):
            return other
        return reduce(other, self.modulus)

    def __add__(self, other):
        return add(self, self._coerce(other))

    def __radd__(self, other):
        return add(self._coerce(other), self)

    def __sub__(self, other):
        return sub(self, self._coerce(other))

    def __rsub__(self, other):
        return sub(self._coerce(other), self)

    def __mul__(self, other):
        return mul(self, self._coerce(other))

    def __rmul__(self, other):
        return mul(self._coerce(other), self)

    def __truediv__(self, other):
        return divide(self, self._coerce(other))

    def __pow__(self, exponent):
        return pow_mod(self, exponent)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def reduce(x: int, n) -> Residue:
    """Canonical residue of any integer x modulo n.

    Uses floor semantics, so negative inputs wrap backwards around the
    clock: reduce(-7, 5) is 3.
    """
    m = _as_modulus(n)
    return Residue(x % m.n, m)


def _same_modulus(a: Residue, b: Residue) -> Modulus:
    if a.modulus != b.modulus:
        raise ModulusMismatchError(a.modulus.n, b.modulus.n)
    return a.modulus


def add(a: Residue, b: Residue) -> Residue:
    m = _same_modulus(a, b)
    return Residue((a.value + b.value) % m.n, m)


def sub(a: Residue, b: Residue) -> Residue:
    m = _same_modulus(a, b)
    return Residue((a.value - b.value) % m.n, m)


def mul(a: Residue, b: Residue) -> Residue:
    m = _same_modulus(a, b)
    return Residue(a.value * b.value % m.n, m)


def mul_table(n) -> list[list[Residue]]:
    """The (n-1) x (n-1) multiplication table for nonzero residues.

    Entry [i][j] holds (i+1) * (j+1) mod n, i.e. rows and columns are
    labelled 1..n-1 and the zero row is omitted, as these tables are
    usually presented.
    """
    m = _as_modulus(n)
    return [[Residue(i * j % m.n, m) for j in range(1, m.n)] for i in range(1, m.n)]


def gcd(x: int, y: int) -> int:
    """Greatest common divisor by iterated remainders.

    Each step replaces (x, y) with (y, x mod y), so the inputs shrink and
    the loop always terminates. gcd(0, y) = y; gcd(0, 0) is undefined.
    """
    if x < 0 or y < 0:
        raise ValueError("gcd is defined for nonnegative integers")
    if x == 0 and y == 0:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    while y:
        x, y = y, x % y
    return x


class TraceRow(NamedTuple):
    """One row of the tabular extended-Euclid computation.

    Every row satisfies a*x + b*y = n for the trace inputs (x, y). The
    quotient is the whole part of the division producing the next row; it
    is absent on the first row and on the terminal zero row.
    """

    n: int
    quotient: int | None
    a: int
    b: int


@dataclass(frozen=True)
class EuclidTrace:
    """The full table produced by the extended Euclidean algorithm.

    Row one is (x, -, 1, 0), row two (y, q, 0, 1); each later row is
    row[i-2] - quotient[i-1] * row[i-1], columnwise. The n column strictly
    decreases and ends at 0.
    """

    x: int
    y: int
    rows: tuple[TraceRow, ...]


@dataclass(frozen=True)
class BezoutCertificate:
    """Witness that a*x + b*y = g, where g is the gcd of x and y."""

    g: int
    a: int
    b: int
    x: int
    y: int


def extended_gcd(x: int, y: int) -> tuple[BezoutCertificate, EuclidTrace]:
    """Tabular extended Euclid; returns (certificate, trace).

    The table wants x >= y, so calling with x < y swaps the inputs
    internally and swaps the returned coefficients back: the certificate
    always satisfies a*x + b*y = g for the caller's (x, y), while the
    trace shows the table that was actually computed.
    """
    if x < 1 or y < 1:
        raise UndefinedGcdError("extended gcd needs two integers >= 1")
    if x < y:
        cert, trace = extended_gcd(y, x)
        return BezoutCertificate(cert.g, cert.b, cert.a, x, y), trace

    rows = [TraceRow(x, None, 1, 0)]
    n_prev, a_prev, b_prev = x, 1, 0
    n_cur, a_cur, b_cur = y, 0, 1
    q = x // y
    rows.append(TraceRow(y, q, 0, 1))
    while True:
        n_next = n_prev - q * n_cur
        a_next = a_prev - q * a_cur
        b_next = b_prev - q * b_cur
        if n_next == 0:
            rows.append(TraceRow(0, None, a_next, b_next))
            break
        q = n_cur // n_next
        rows.append(TraceRow(n_next, q, a_next, b_next))
        n_prev, a_prev, b_prev = n_cur, a_cur, b_cur
        n_cur, a_cur, b_cur = n_next, a_next, b_next

    cert = BezoutCertificate(n_cur, a_cur, b_cur, x, y)
    return cert, EuclidTrace(x, y, tuple(rows))


def inverse(x: Residue) -> Residue:
    """Multiplicative reciprocal of x, via the extended Euclidean algorithm.

    Finds a*n + b*x = 1 and returns b reduced into [1, n). Raises
    NotAUnitError, carrying gcd(x, n) as a witness, when no reciprocal
    exists.
    """
    n = x.modulus.n
    if x.value == 0:
        raise NotAUnitError(0, n, n)
    cert, _ = extended_gcd(n, x.value)
    if cert.g != 1:
        raise NotAUnitError(x.value, n, cert.g)
    return Residue(cert.b % n, x.modulus)


def divide(a: Residue, b: Residue) -> Residue:
    """a / b as a * b**-1; raises NotAUnitError when b has no reciprocal."""
    _same_modulus(a, b)
    return mul(a, inverse(b))


class ResidueClass(enum.Enum):
    """Every residue is exactly one of these."""

    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"


def classify(x: Residue) -> ResidueClass:
    """Zero, unit (gcd with n is 1), or divisor of zero (shared factor)."""
    if x.value == 0:
        return ResidueClass.ZERO
    if gcd(x.value, x.modulus.n) == 1:
        return ResidueClass.UNIT
    return ResidueClass.ZERO_DIVISOR


def pow_mod(x: Residue, exponent: int) -> Residue:
    """x**exponent by binary square-and-multiply, reducing at every step.

    Intermediate values never reach n**2, so the full integer power is
    never formed. x**0 is 1 for every x, including 0**0 (empty product).
    """
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    n = x.modulus.n
    result = 1
    base = x.value
    e = exponent
    while e:
        if e & 1:
            result = result * base % n
        base = base * base % n
        e >>= 1
    return Residue(result, x.modulus)


def is_square_free(n: int) -> bool:
    """True when no squared prime divides n, by trial factorization."""
    if n < 2:
        raise ValueError("square-freeness is defined for n >= 2")
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return False
        d += 1
    return True


def critical_exponents(n: int, phi: int, count: int) -> list[int]:
    """The first `count` exponents of the progression 1, 1+phi, 1+2*phi, ...

    These are the powers p for which x**p = x holds for every residue,
    provided n is square-free; non-square-free n is rejected. phi is taken
    as an argument so the caller chooses how it was obtained.
    """
    if not is_square_free(n):
        raise NotSquareFreeError(n)
    if phi < 1:
        raise ValueError("phi must be >= 1")
    if count < 1:
        raise ValueError("count must be >= 1")
    return [1 + k * phi for k in range(count)]


def crt_decompose(x: Residue, p: int, q: int) -> tuple[Residue, Residue]:
    """Coordinates (x mod p, x mod q) of x in the p-by-q rectangle.

    The modulus of x must be exactly p*q for distinct p, q >= 2. For
    distinct primes the map is a bijection from [0, p*q) onto the grid,
    and x is a unit exactly when neither coordinate is zero.
    """
    if p < 2 or q < 2:
        raise ValueError("p and q must both be >= 2")
    if p == q:
        raise ValueError("p and q must be distinct")
    if x.modulus.n != p * q:
        raise ModulusMismatchError(x.modulus.n, p * q)
    return reduce(x.value, p), reduce(x.value, q)
