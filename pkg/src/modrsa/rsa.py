"""Textbook RSA over small moduli.

Key generation from caller-chosen primes, the 27-symbol letter codec, and
the encrypt/decrypt/sign/verify protocol, one letter per residue with no
blocking. Nothing here is secure in any modern sense (no padding, no
hashing, desk-scale primes); the point is to make the number theory
visible, not to protect data.
"""

from dataclasses import dataclass

from . import modmath
from .errors import (
    EqualPrimesError,
    ExponentNotUnitError,
    ExponentOutOfRangeError,
    InvalidModulusError,
    MessageRangeError,
    ModulusMismatchError,
    ModulusTooSmallError,
    NonPrimeError,
    UnsupportedCharacterError,
    ValueOutOfAlphabetError,
)

# A = 1, B = 2, ..., Z = 26, space = 27.
ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ "

# Letter codes run 1..27, so a message modulus must be at least 28
# for every code to be a distinct nonzero residue.
MIN_TEXT_MODULUS = len(ALPHABET) + 1


def is_prime(n: int) -> bool:
    """Trial division by every candidate up to sqrt(n); n < 2 is not prime."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def _check_prime_pair(p: int, q: int) -> None:
    if not is_prime(p):
        raise NonPrimeError("p", p)
    if not is_prime(q):
        raise NonPrimeError("q", q)
    if p == q:
        raise EqualPrimesError(p)


def phi_semiprime(p: int, q: int) -> int:
    """Unit count (p-1)*(q-1) for a modulus built from distinct primes."""
    _check_prime_pair(p, q)
    return (p - 1) * (q - 1)


@dataclass(frozen=True)
class PublicKey:
    """The shared half of a key pair: modulus n and public exponent e."""

    n: int
    e: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"public key modulus must be >= 2, got {self.n}")
        if self.e <= 1:
            raise ValueError(f"public exponent must be > 1, got {self.e}")


@dataclass(frozen=True)
class PrivateKey:
    """The secret half: modulus n and private exponent f.

    May also carry the factors p, q and the unit count phi they imply;
    those travel in private key files but are not needed to decrypt.
    """

    n: int
    f: int
    p: int | None = None
    q: int | None = None
    phi: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"private key modulus must be >= 2, got {self.n}")
        if self.f <= 1:
            raise ValueError(f"private exponent must be > 1, got {self.f}")


@dataclass(frozen=True)
class RsaKeyPair:
    """Everything keygen knows: primes, modulus, unit count, both exponents.

    The constructor re-checks the defining relations, so a key pair object
    is always internally consistent no matter how it was built.
    """

    p: int
    q: int
    n: int
    phi: int
    e: int
    f: int

    def __post_init__(self):
        _check_prime_pair(self.p, self.q)
        if self.n != self.p * self.q:
            raise ValueError(f"n = {self.n} is not p*q = {self.p * self.q}")
        if self.phi != (self.p - 1) * (self.q - 1):
            raise ValueError(f"phi = {self.phi} is not (p-1)(q-1) = {(self.p - 1) * (self.q - 1)}")
        if not 1 < self.e < self.phi or not 1 < self.f < self.phi:
            raise ValueError("exponents must lie strictly between 1 and phi")
        if self.e * self.f % self.phi != 1:
            raise ValueError(f"e*f = {self.e * self.f} is not 1 mod phi = {self.phi}")

    @property
    def public_key(self) -> PublicKey:
        return PublicKey(self.n, self.e)

    @property
    def private_key(self) -> PrivateKey:
        return PrivateKey(self.n, self.f, self.p, self.q, self.phi)


@dataclass(frozen=True)
class NumberMessage:
    """A sequence of residues modulo n; the wire form of every message."""

    values: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not 2 <= self.n <= modmath.MAX_MODULUS:
            raise InvalidModulusError(self.n)
        for v in self.values:
            if not 0 <= v < self.n:
                raise MessageRangeError(v, self.n)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def keygen(p: int, q: int, e: int) -> RsaKeyPair:
    """Build a key pair from caller-chosen distinct primes and exponent e.

    f is the reciprocal of e modulo phi = (p-1)*(q-1), canonicalized into
    (1, phi), so that e*f lands on a critical exponent 1 + k*phi and
    raising to e then f returns every residue to itself.
    """
    _check_prime_pair(p, q)
    n = p * q
    if n > modmath.MAX_MODULUS:
        raise InvalidModulusError(n)
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise ExponentOutOfRangeError(e, phi)
    g = modmath.gcd(e, phi)
    if g != 1:
        raise ExponentNotUnitError(e, phi, g)
    f = modmath.inverse(modmath.reduce(e, phi)).value
    return RsaKeyPair(p=p, q=q, n=n, phi=phi, e=e, f=f)


def encode_text(text: str, n: int) -> NumberMessage:
    """Letter codes for a message: A=1 .. Z=26, space=27, case-folded.

    n is the modulus the message will live under; anything outside A-Z
    and space is rejected with the offending character and position.
    """
    if n < MIN_TEXT_MODULUS:
        raise ModulusTooSmallError(n)
    values = []
    for pos, ch in enumerate(text):
        code = ALPHABET.find(ch.upper())
        if code < 0:
            raise UnsupportedCharacterError(ch, pos)
        values.append(code + 1)
    return NumberMessage(tuple(values), n)


def decode_text(msg: NumberMessage) -> str:
    """Exact inverse of encode_text; every value must be a letter code 1..27."""
    chars = []
    for pos, v in enumerate(msg.values):
        if not 1 <= v <= len(ALPHABET):
            raise ValueOutOfAlphabetError(v, pos)
        chars.append(ALPHABET[v - 1])
    return "".join(chars)


def _pow_message(msg: NumberMessage, exponent: int, n: int) -> NumberMessage:
    if msg.n != n:
        raise ModulusMismatchError(msg.n, n)
    m = modmath.Modulus(n)
    out = tuple(modmath.pow_mod(modmath.Residue(v, m), exponent).value for v in msg.values)
    return NumberMessage(out, n)


def encrypt(msg: NumberMessage, key: PublicKey) -> NumberMessage:
    """Raise every message value to the public exponent e."""
    return _pow_message(msg, key.e, key.n)


def decrypt(msg: NumberMessage, key: PrivateKey) -> NumberMessage:
    """Raise every message value to the private exponent f."""
    return _pow_message(msg, key.f, key.n)


def sign(msg: NumberMessage, key: PrivateKey) -> NumberMessage:
    """Signing is exponentiation by the private f; the same map as decrypt.

    Note this signs the raw numbers, with no hashing. Anyone can forge a
    "signature" of a chosen ciphertext; textbook semantics only.
    """
    return _pow_message(msg, key.f, key.n)


def verify(msg: NumberMessage, key: PublicKey) -> NumberMessage:
    """Recover a signed message with the public e; the same map as encrypt."""
    return _pow_message(msg, key.e, key.n)
