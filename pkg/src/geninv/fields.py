"""Exact field arithmetic for Q, Q(i) and GF(p).

A field object both tags matrices and performs arithmetic on plain
canonical values:

* rationals: ``fractions.Fraction`` (always reduced, positive denominator),
* Gaussian rationals: ``(re, im)`` pairs of ``Fraction``,
* prime fields: ``int`` residues in ``0..p-1``.

Keeping the values unboxed keeps the elimination loops cheap; the
``Scalar`` wrapper exists only for callers that want tagged values with
operator syntax and mismatch checking.

Entry grammar (whitespace-insensitive):

    rational   := ["-"] digits ["/" digits]
    gaussian   := rational | [rational] [("+"|"-") [rational]] "i"
    primefield := digits            (reduced mod p on parse)
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatchError, GeninvError, ParseError

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")
_DIGITS_RE = re.compile(r"\d+\Z")


def _parse_fraction(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError("not a rational literal: %r" % text)
    num, _, den = text.partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise ParseError("zero denominator: %r" % text)
        return Fraction(int(num), d)
    return Fraction(int(num))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; subclasses fix the value representation."""

    kind: str
    finite = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, k: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def sample(self, rng):
        """Draw a small element from a seeded generator (see rng module)."""
        raise NotImplementedError

    def elements(self):
        raise GeninvError("field %s is not finite" % self.kind)

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and \
            getattr(self, "p", None) == getattr(other, "p", None)

    def __hash__(self):
        return hash((self.kind, getattr(self, "p", None)))

    def __repr__(self):
        return self.kind


class Rationals(Field):
    kind = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def from_int(self, k):
        return Fraction(k)

    def parse(self, text):
        return _parse_fraction("".join(text.split()))

    def format(self, a):
        return str(a)

    def sample(self, rng):
        return Fraction(rng.randrange(19) - 9, rng.randrange(9) + 1)


class GaussianRationals(Field):
    kind = "Qi"

    _ZERO = (Fraction(0), Fraction(0))
    _ONE = (Fraction(1), Fraction(0))

    def zero(self):
        return self._ZERO

    def one(self):
        return self._ONE

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def neg(self, a):
        return (-a[0], -a[1])

    def inv(self, a):
        d = a[0] * a[0] + a[1] * a[1]
        if d == 0:
            raise ZeroDivisionError("inverse of zero")
        return (a[0] / d, -a[1] / d)

    def from_int(self, k):
        return (Fraction(k), Fraction(0))

    def parse(self, text):
        s = "".join(text.split())
        if not s:
            raise ParseError("empty Gaussian rational")
        if not s.endswith("i"):
            return (_parse_fraction(s), Fraction(0))
        body = s[:-1]
        cut = None
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-":
                cut = k
                break
        if cut is None:
            return (Fraction(0), self._parse_im(body))
        return (_parse_fraction(body[:cut]), self._parse_im(body[cut:]))

    @staticmethod
    def _parse_im(coeff: str) -> Fraction:
        # "", "+", "-" mean a bare "i" with optional sign
        if coeff in ("", "+"):
            return Fraction(1)
        if coeff == "-":
            return Fraction(-1)
        if coeff.startswith("+"):
            coeff = coeff[1:]
        return _parse_fraction(coeff)

    def format(self, a):
        re_part, im_part = a
        if im_part == 0:
            return str(re_part)
        if im_part == 1:
            im_str = "i"
        elif im_part == -1:
            im_str = "-i"
        else:
            im_str = "%si" % im_part
        if re_part == 0:
            return im_str
        if im_part > 0:
            return "%s+%s" % (re_part, im_str)
        return "%s%s" % (re_part, im_str)

    def sample(self, rng):
        q = Rationals()
        return (q.sample(rng), q.sample(rng))


class PrimeField(Field):
    kind = "Fp"
    finite = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ParseError("modulus %r is not prime" % (p,))
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, k):
        return k % self.p

    def parse(self, text):
        s = "".join(text.split())
        if not _DIGITS_RE.match(s):
            raise ParseError("not a GF(%d) residue: %r" % (self.p, text))
        return int(s) % self.p

    def format(self, a):
        return str(a)

    def sample(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return "Fp(%d)" % self.p


QQ = Rationals()
QI = GaussianRationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str, p: int | None = None) -> Field:
    if name == "Q":
        return QQ
    if name == "Qi":
        return QI
    if name == "Fp":
        if p is None:
            raise ParseError("field Fp needs a modulus")
        return PrimeField(p)
    raise ParseError("unknown field %r" % name)


class Scalar:
    """Tagged field element with operator syntax and mismatch checking."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            raise FieldMismatchError("expected a Scalar, got %r" % (other,))
        if other.field != self.field:
            raise FieldMismatchError(
                "field mismatch: %r vs %r" % (self.field, other.field))
        return other

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._coerce(other).value))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._coerce(other).value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._coerce(other).value))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._coerce(other).value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return "Scalar(%r, %s)" % (self.field, self.field.format(self.value))


def parse_scalar(text: str, field: Field) -> Scalar:
    return Scalar(field, field.parse(text))


def format_scalar(s: Scalar) -> str:
    return s.field.format(s.value)
