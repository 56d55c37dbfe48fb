"""Modular arithmetic toolkit with a textbook RSA pipeline on top.

The library splits into four parts:

- modmath: residue arithmetic, Euclid and extended Euclid, fast powers,
  square-free tests, critical exponents, CRT coordinates
- oracle: deliberately naive mirrors of the above, used as ground truth
- rsa: key generation, the 27-letter codec, encrypt/decrypt/sign/verify
- cli / keyfile: command-line front end and the flat key file format
"""

from . import keyfile, modmath, oracle, rsa
from .errors import (
    DomainError,
    EqualPrimesError,
    ExponentNotUnitError,
    ExponentOutOfRangeError,
    InvalidModulusError,
    KeyFileError,
    MessageRangeError,
    ModulusMismatchError,
    ModulusTooSmallError,
    NonPrimeError,
    NotAUnitError,
    NotSquareFreeError,
    UndefinedGcdError,
    UnsupportedCharacterError,
    ValueOutOfAlphabetError,
)
from .modmath import (
    BezoutCertificate,
    EuclidTrace,
    Modulus,
    Residue,
    ResidueClass,
    TraceRow,
)
from .rsa import NumberMessage, PrivateKey, PublicKey, RsaKeyPair

__version__ = "0.1.0"

__all__ = [
    "modmath",
    "oracle",
    "rsa",
    "keyfile",
    "Modulus",
    "Residue",
    "ResidueClass",
    "TraceRow",
    "EuclidTrace",
    "BezoutCertificate",
    "NumberMessage",
    "PublicKey",
    "PrivateKey",
    "RsaKeyPair",
    "DomainError",
    "InvalidModulusError",
    "ModulusMismatchError",
    "NotAUnitError",
    "UndefinedGcdError",
    "NotSquareFreeError",
    "NonPrimeError",
    "EqualPrimesError",
    "ExponentOutOfRangeError",
    "ExponentNotUnitError",
    "UnsupportedCharacterError",
    "ValueOutOfAlphabetError",
    "ModulusTooSmallError",
    "MessageRangeError",
    "KeyFileError",
]
