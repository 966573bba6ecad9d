"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over the
rationals, ``int`` residues in ``[0, p)`` over GF(p). Both forms are
canonical, so equal scalars always have identical representations and
can be compared, hashed, and serialized without normalisation passes.
No floating point is accepted anywhere; arithmetic never rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError, ScalarError

Scalar = Fraction | int

_SCALAR_RE = re.compile(r"([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\Z")
_FIELD_TAG_RE = re.compile(r"GF\((\d+)\)\Z")


def _is_prime(n: int) -> bool:
    # Trial division; moduli are desk-scale.
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``modulus is None``) or GF(modulus) for a prime."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and not _is_prime(self.modulus):
            raise FieldError(f"modulus {self.modulus!r} is not prime")

    def __repr__(self) -> str:
        return f"Field({self.label})"

    @property
    def label(self) -> str:
        return "Q" if self.modulus is None else f"GF({self.modulus})"

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    @property
    def zero(self) -> Scalar:
        return 0 if self.modulus is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.modulus is not None else Fraction(1)

    def coerce(self, value) -> Scalar:
        """Canonicalize ``value`` into this field.

        Ints and Fractions are accepted (a Fraction over GF(p) means
        numerator times inverse denominator, and the denominator must
        be invertible). Anything inexact is rejected.
        """
        p = self.modulus
        if p is None:
            if type(value) is Fraction:
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, Fraction):
                return value
        else:
            if isinstance(value, int):
                return value % p
            if isinstance(value, Fraction):
                den = value.denominator % p
                if den == 0:
                    raise ScalarError(
                        f"denominator of {value} is not invertible modulo {p}"
                    )
                return (value.numerator % p) * pow(den, -1, p) % p
        raise ScalarError(f"cannot represent {value!r} exactly in {self.label}")

    def canon(self, value: Scalar) -> Scalar:
        """Reduce a raw arithmetic result back to canonical form."""
        return value % self.modulus if self.modulus is not None else value

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canon(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canon(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canon(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.canon(-a)

    def inv(self, a: Scalar) -> Scalar:
        if self.modulus is not None:
            return pow(a, -1, self.modulus)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def parse(self, text: str) -> Scalar:
        """Parse an exact scalar literal: an integer or a fraction a/b."""
        match = _SCALAR_RE.fullmatch(text.strip())
        if match is None:
            raise ScalarError(f"cannot parse scalar {text!r}")
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) is not None else 1
        if den == 0:
            raise ScalarError(f"zero denominator in {text!r}")
        return self.coerce(Fraction(num, den))

    def format(self, value: Scalar) -> str:
        return str(value)


QQ = Field()


def GF(p: int) -> Field:
    """The finite field with p elements, p prime."""
    return Field(p)


def parse_field_tag(tag: str) -> Field:
    """Turn a wire-format field tag ("Q" or "GF(p)") into a Field."""
    text = tag.strip()
    if text == "Q":
        return QQ
    match = _FIELD_TAG_RE.fullmatch(text)
    if match is None:
        raise FieldError(f"unknown field tag {tag!r} (expected 'Q' or 'GF(p)')")
    return Field(int(match.group(1)))
