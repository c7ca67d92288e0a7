"""Exact scalar arithmetic over Q and prime fields GF(p).

Scalars are plain Python values: `fractions.Fraction` in characteristic 0,
canonical residues (ints in [0, p)) in characteristic p.  No wrapper classes;
the interpreting `Field` travels alongside, and matrices over GF(p) are numpy
int64 arrays reduced mod p after every operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (moduli stay word-sized)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (characteristic 0) or the prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not is_prime(p)):
            raise InputError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def dtype(self):
        return np.int64 if self.is_finite else object

    def __str__(self):
        return f"GF({self.characteristic})" if self.is_finite else "Q"

    # -- scalar operations ----------------------------------------------

    def coerce(self, value):
        """Coerce an int, Fraction or scalar string into canonical form."""
        if isinstance(value, str):
            return self.parse(value)
        p = self.characteristic
        if p:
            return int(value) % p
        return Fraction(value)

    def zero(self):
        return 0 if self.is_finite else Fraction(0)

    def one(self):
        return 1 if self.is_finite else Fraction(1)

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def inv(self, a):
        p = self.characteristic
        if p:
            if a % p == 0:
                raise ZeroDivisionError("inverse of 0 in GF(p)")
            return pow(int(a), -1, p)
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return Fraction(1) / a

    def parse(self, text: str):
        """Parse "a" or "a/b" into a canonical scalar of this field."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                value = Fraction(int(num), int(den))
            else:
                value = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse scalar {text!r}: {exc}") from exc
        p = self.characteristic
        if not p:
            return value
        if value.denominator % p == 0:
            raise InputError(f"scalar {text!r} has no residue mod {p}")
        return value.numerator * pow(value.denominator, -1, p) % p

    def fmt(self, value) -> str:
        """Canonical string form, inverse to parse."""
        if self.is_finite:
            return str(int(value) % self.characteristic)
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def random(self, rng):
        p = self.characteristic
        if p:
            return rng.randrange(p)
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
