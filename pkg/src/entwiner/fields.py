"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Every verdict in this package reduces to equalities between scalars, so
arithmetic is exact and equality decidable.  Floats never appear.  Over the
rationals, elements are plain ints wherever possible and Fraction otherwise;
over F_p they are int subclasses reduced mod p, so matrix code can use the
ordinary operators (+, *, -, unary -) and truthiness for zero tests.

Field tags ("q", "fp:<p>") are shared by the CLI --field flag and the
structure-file format.
"""

from __future__ import annotations

import re
from fractions import Fraction


class FieldError(ValueError):
    """Malformed scalar string, bad field tag, or cross-field mixing."""


_SCALAR_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")

Scalar = int | Fraction  # F_p elements are int subclasses


def _normalize(x):
    # keep integers as plain ints: cheaper arithmetic, stable rendering
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Rationals:
    """The rational field Q.  Elements: int | Fraction."""

    tag = "q"
    zero = 0
    one = 1

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("field:q")

    def from_int(self, n: int):
        return n

    def parse(self, s: str):
        m = _SCALAR_RE.match(s.strip())
        if not m:
            raise FieldError(f"bad scalar string {s!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return num
        den = int(m.group(2))
        if den == 0:
            raise FieldError(f"zero denominator in {s!r}")
        return _normalize(Fraction(num, den))

    def render(self, x) -> str:
        return str(_normalize(x))

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero scalar")
        return _normalize(Fraction(a) / Fraction(b))


_fp_element_classes: dict[int, type] = {}


def _fp_class(p: int) -> type:
    cls = _fp_element_classes.get(p)
    if cls is not None:
        return cls

    class Fp(int):
        __slots__ = ()
        modulus = p

        def __new__(cls, v):
            return int.__new__(cls, v % p)

        def __add__(self, other):
            return Fp(int.__add__(self, int(other)))

        __radd__ = __add__

        def __sub__(self, other):
            return Fp(int.__sub__(self, int(other)))

        def __rsub__(self, other):
            return Fp(int(other) - int(self))

        def __mul__(self, other):
            return Fp(int.__mul__(self, int(other)))

        __rmul__ = __mul__

        def __neg__(self):
            return Fp(-int(self))

        def __repr__(self):
            return str(int(self))

    Fp.__name__ = f"F{p}elem"
    _fp_element_classes[p] = Fp
    return Fp


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field F_p.  Elements: int subclass reduced mod p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.elem = _fp_class(p)
        self.zero = self.elem(0)
        self.one = self.elem(1)

    @property
    def tag(self) -> str:
        return f"fp:{self.p}"

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field:fp", self.p))

    def from_int(self, n: int):
        return self.elem(n)

    def parse(self, s: str):
        m = _SCALAR_RE.match(s.strip())
        if not m:
            raise FieldError(f"bad scalar string {s!r}")
        num = self.elem(int(m.group(1)))
        if m.group(2) is None:
            return num
        den = int(m.group(2)) % self.p
        if den == 0:
            raise FieldError(f"denominator of {s!r} vanishes mod {self.p}")
        return num * self.elem(pow(den, self.p - 2, self.p))

    def render(self, x) -> str:
        return str(int(x))

    def div(self, a, b):
        b = int(b) % self.p
        if b == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self.elem(int(a) * pow(b, self.p - 2, self.p))


Field = Rationals | PrimeField

QQ = Rationals()


def field_from_tag(tag: str) -> Field:
    """Resolve "q" or "fp:<p>" to a field object."""
    tag = tag.strip().lower()
    if tag == "q":
        return QQ
    if tag.startswith("fp:"):
        try:
            p = int(tag[3:])
        except ValueError:
            raise FieldError(f"bad field tag {tag!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field tag {tag!r} (expected 'q' or 'fp:<p>')")
