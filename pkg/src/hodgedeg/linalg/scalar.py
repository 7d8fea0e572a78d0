"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` in Q."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["Gauss", "I", "ONE", "ZERO", "as_gauss", "parse_scalar", "parse_complex", "format_scalar"]


class Gauss:
    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0) -> None:
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __repr__(self) -> str:
        return f"Gauss({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> Gauss:
        return Gauss(-self.re, -self.im)

    def __add__(self, other) -> Gauss:
        o = as_gauss(other)
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> Gauss:
        o = as_gauss(other)
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> Gauss:
        return as_gauss(other) - self

    def __mul__(self, other) -> Gauss:
        o = as_gauss(other)
        if not o.im:
            return Gauss(self.re * o.re, self.im * o.re)
        if not self.im:
            return Gauss(self.re * o.re, self.re * o.im)
        return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Gauss:
        o = as_gauss(other)
        if not o:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not o.im:
            return Gauss(self.re / o.re, self.im / o.re)
        return self * o.inverse()

    def __rtruediv__(self, other) -> Gauss:
        return as_gauss(other) / self

    def __pow__(self, k: int) -> Gauss:
        if k < 0:
            return (ONE / self) ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> Gauss:
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        return Gauss(self.re / norm, -self.im / norm)

    def conjugate(self) -> Gauss:
        return Gauss(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im


ZERO = Gauss(0)
ONE = Gauss(1)
I = Gauss(0, 1)


def as_gauss(x) -> Gauss:
    if isinstance(x, Gauss):
        return x
    if isinstance(x, (int, Fraction)):
        return Gauss(x)
    if isinstance(x, Rational):
        return Gauss(Fraction(x.numerator, x.denominator))
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact; build a Gauss explicitly")
    raise TypeError(f"cannot convert {type(x).__name__} to Gauss")


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z: Gauss | Fraction | int) -> str:
    """Render as ``a/b`` or ``a/b+c/d i`` (written without spaces, e.g. ``1/2-3i``)."""
    z = as_gauss(z)
    if not z.im:
        return _fmt_rational(z.re)
    sign = "-" if z.im < 0 else "+"
    return f"{_fmt_rational(z.re)}{sign}{_fmt_rational(abs(z.im))}i"


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^(?P<re>{_RAT})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)i)?$")


def parse_scalar(text: str) -> Gauss:
    """Inverse of :func:`format_scalar`; whitespace is ignored."""
    s = "".join(text.split())
    m = _SCALAR_RE.match(s)
    if m is None:
        raise ValueError(f"malformed exact scalar: {text!r}")
    re_part = Fraction(m.group("re"))
    if m.group("im") is None:
        return Gauss(re_part)
    im_part = Fraction(m.group("im"))
    return Gauss(re_part, -im_part if m.group("sign") == "-" else im_part)


_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(i?)")


def parse_complex(text: str) -> Gauss:
    """Looser form for user input: also accepts ``i``, ``-2i``, ``1+i``, ``3/4i``."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty scalar")
    total = Gauss()
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        sign, num, imag = m.groups()
        if m.end() == pos or (not num and not imag) or (pos and not sign):
            raise ValueError(f"malformed complex number: {text!r}")
        value = Fraction(num) if num else Fraction(1)
        if sign == "-":
            value = -value
        total = total + (Gauss(0, value) if imag else Gauss(value))
        pos = m.end()
    return total
