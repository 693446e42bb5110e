"""Exact integer polynomials in one variable z.

Conway polynomials of links live in Z[z], so everything here is integer
arithmetic; no floating point is involved anywhere.  Polynomials are kept
normalized (no trailing zero coefficients), which makes equality and hashing
structural.

The text form accepted by :func:`parse_poly` is a sum of terms::

    poly := ['-'] term (('+'|'-') term)*
    term := int | int? 'z' | int? 'z^' int

and :func:`format_poly` emits the canonical form: ascending powers, ``z^2``
style exponents, ``0`` for the zero polynomial.

>>> p = parse_poly("1+5z^2+5z^4+z^6")
>>> q = parse_poly("1+z^2")
>>> format_poly(p * q)
'1+6z^2+10z^4+6z^6+z^8'
>>> (p * q - parse_poly("z") * parse_poly("2z+2z^3")).coeff(2)
4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class PolySyntaxError(ValueError):
    """Raised by parse_poly; carries the 0-based offset of the bad character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, init=False)
class IntPoly:
    """An element of Z[z], stored as a tuple of coefficients, constant first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> IntPoly:
        return IntPoly()

    @staticmethod
    def one() -> IntPoly:
        return IntPoly((1,))

    @staticmethod
    def z() -> IntPoly:
        return IntPoly((0, 1))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __rmul__(self, scalar: int) -> IntPoly:
        if not isinstance(scalar, int):
            return NotImplemented
        return IntPoly(tuple(scalar * c for c in self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- queries -----------------------------------------------------------

    def shift(self, k: int) -> IntPoly:
        """Multiply by z**k.  k must be >= 0."""
        if k < 0:
            raise ValueError("shift exponent must be >= 0")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def coeff(self, k: int) -> int:
        """Coefficient of z**k; 0 beyond the degree, k < 0 rejected."""
        if k < 0:
            raise ValueError("coefficient index must be >= 0")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def parity(self) -> str:
        """Which powers carry nonzero coefficients: even, odd, mixed or zero."""
        has_even = any(c for c in self.coeffs[0::2])
        has_odd = any(c for c in self.coeffs[1::2])
        if has_even and has_odd:
            return "mixed"
        if has_even:
            return "even"
        if has_odd:
            return "odd"
        return "zero"

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) for nonzero terms, ascending."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"


def format_poly(p: IntPoly) -> str:
    """Canonical text: ascending powers, 'z^2' style, '0' for zero.

    >>> format_poly(IntPoly((1, 0, 4, 0, 3, 0, 1)))
    '1+4z^2+3z^4+z^6'
    >>> format_poly(IntPoly((0, -2, 0, 1)))
    '-2z+z^3'
    >>> format_poly(IntPoly())
    '0'
    """
    parts: list[str] = []
    for k, c in p.terms():
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "z" if k == 1 else f"z^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts) if parts else "0"


_TERM = re.compile(r"(\d+)?(z(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse polynomial text; raises PolySyntaxError with the bad offset.

    >>> parse_poly("2z+2z^3").coeffs
    (0, 2, 0, 2)
    >>> parse_poly("0")
    IntPoly('0')
    >>> parse_poly("1+") # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    PolySyntaxError: ...
    """
    s = text.strip()
    if not s:
        raise PolySyntaxError("empty polynomial", 0)
    coeffs: dict[int, int] = {}
    i = 0
    first = True
    while i < len(s):
        sign = 1
        if not first:
            if s[i] == "+":
                i += 1
            elif s[i] == "-":
                sign = -1
                i += 1
            else:
                raise PolySyntaxError(f"expected '+' or '-', found {s[i]!r}", i)
        elif s[i] == "-":
            sign = -1
            i += 1
        m = _TERM.match(s, i)
        if m is None or m.end() == i:
            found = s[i] if i < len(s) else "end of input"
            raise PolySyntaxError(f"expected a term, found {found!r}", i)
        digits, zpart, exponent = m.group(1), m.group(2), m.group(3)
        if digits is None and zpart is None:
            raise PolySyntaxError("expected a term", i)
        coeff = sign * (int(digits) if digits is not None else 1)
        if zpart is None:
            power = 0
        elif exponent is None:
            power = 1
        else:
            power = int(exponent)
        coeffs[power] = coeffs.get(power, 0) + coeff
        i = m.end()
        first = False
    if not coeffs:
        raise PolySyntaxError("empty polynomial", 0)
    top = max(coeffs)
    return IntPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))
