"""Polynomials in ``t`` with rational exponents and integer coefficients.

A :class:`FracPoly` is an element of ``Z[t^(1/oo)]``: a finite map from exact
rational exponents to nonzero Python integers.  Values are immutable, so they
can be hashed, shared between threads and used as dictionary keys.

Text form is a sum of ``c*t^(a/b)`` terms in ascending exponent order::

    >>> p = FracPoly.parse("1 + 7*t + t^2")
    >>> str(p * p)
    '1 + 14*t + 51*t^2 + 14*t^3 + t^4'
    >>> str(FracPoly.monomial(Fraction(1, 2), -3))
    '-3*t^(1/2)'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import FracPolyParseError, NonIntegerExponentAtGeneralPoint

__all__ = [
    "FracPoly",
    "ZERO",
    "ONE",
    "T",
    "add",
    "mul",
    "geometric_block",
    "shifted_geometric_block",
    "evaluate",
    "coefficient",
    "is_palindrome",
]

Exponent = Union[int, Fraction]


def _exponent(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"exponent must be int, Fraction or str, got {value!r}")
    return Fraction(value)


class FracPoly:
    """Sparse polynomial with rational exponents and big-integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, int] = {}
        for exp, coeff in items:
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise TypeError(f"coefficient must be int, got {coeff!r}")
            e = _exponent(exp)
            acc[e] = acc.get(e, 0) + coeff
        # sorted insertion keeps iteration (and hence printing) deterministic
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[Fraction, int]) -> FracPoly:
        obj = cls.__new__(cls)
        obj._terms = {e: terms[e] for e in sorted(terms) if terms[e] != 0}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> FracPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: Exponent, coeff: int = 1) -> FracPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> FracPoly:
        """Build ``c0 + c1*t + c2*t^2 + ...`` from a dense integer list."""
        return cls(enumerate(coeffs))

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Fraction, int]:
        """Copy of the exponent -> coefficient map, ascending by exponent."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self._terms.items())

    def exponents(self) -> list[Fraction]:
        return list(self._terms)

    def coefficient(self, alpha: Exponent) -> int:
        return self._terms.get(_exponent(alpha), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def has_integer_exponents(self) -> bool:
        return all(e.denominator == 1 for e in self._terms)

    def degree(self) -> Fraction | None:
        return max(self._terms) if self._terms else None

    def low_degree(self) -> Fraction | None:
        return min(self._terms) if self._terms else None

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring structure ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> FracPoly | None:
        if isinstance(other, FracPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FracPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return FracPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> FracPoly:
        return FracPoly._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Fraction, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return FracPoly._from_clean(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FracPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, alpha: Exponent) -> FracPoly:
        """Multiply by ``t^alpha``."""
        a = _exponent(alpha)
        return FracPoly._from_clean({e + a: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        if x not in (0, 1) and not self.has_integer_exponents():
            raise NonIntegerExponentAtGeneralPoint(
                f"cannot evaluate {self} at {x}: fractional exponents need x in {{0, 1}}"
            )
        total = Fraction(0)
        for e, c in self._terms.items():
            if x == 1:
                total += c
            elif x == 0:
                if e < 0:
                    raise ZeroDivisionError(f"t^{e} is undefined at t = 0")
                if e == 0:
                    total += c
            else:
                total += c * x ** int(e)
        return total

    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def is_palindrome(self, center: Exponent) -> bool:
        """True iff the coefficient of ``t^a`` equals that of ``t^(center - a)``."""
        n = _exponent(center)
        return all(self._terms.get(n - e, 0) == c for e, c in self._terms.items())

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            body = _format_term(abs(c), e)
            if i == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FracPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> FracPoly:
        """Inverse of ``str``; also accepts any order and repeated exponents."""
        src = text.strip()
        if not src:
            raise FracPolyParseError("empty polynomial text", 0)
        if src == "0":
            return ZERO
        pos = 0
        terms: list[tuple[Fraction, int]] = []
        first = True
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if m is None or m.end() == pos:
                raise FracPolyParseError(f"cannot parse term in {text!r}", pos)
            sign = m.group("sign")
            if sign is None and not first:
                raise FracPolyParseError(f"expected '+' or '-' in {text!r}", pos)
            coeff_s, var, exp_s = m.group("coeff"), m.group("var"), m.group("exp")
            if coeff_s is None and var is None:
                raise FracPolyParseError(f"empty term in {text!r}", pos)
            coeff = int(coeff_s) if coeff_s is not None else 1
            if sign == "-":
                coeff = -coeff
            if var is None:
                exp = Fraction(0)
            elif exp_s is None:
                exp = Fraction(1)
            else:
                exp = Fraction(exp_s.strip("()"))
            terms.append((exp, coeff))
            first = False
            pos = m.end()
        return cls(terms)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coeff>\d+)(?:\s*\*\s*(?=t))?)?
        (?P<var>t(?:\^(?P<exp>\d+|\(-?\d+(?:/\d+)?\)))?)?
        \s*""",
    re.VERBOSE,
)


def _format_term(c: int, e: Fraction) -> str:
    if e == 0:
        return str(c)
    if e == 1:
        var = "t"
    elif e.denominator == 1 and e > 0:
        var = f"t^{e.numerator}"
    else:
        var = f"t^({e})"
    return var if c == 1 else f"{c}*{var}"


ZERO = FracPoly()
ONE = FracPoly({0: 1})
T = FracPoly({1: 1})


def add(a: FracPoly, b: FracPoly) -> FracPoly:
    return a + b


def mul(a: FracPoly, b: FracPoly) -> FracPoly:
    return a * b


def geometric_block(k: int) -> FracPoly:
    """``1 + t + ... + t^k``; ``k = 0`` gives ``1``."""
    if k < 0:
        raise ValueError(f"geometric_block needs k >= 0, got {k}")
    return FracPoly.from_coefficients([1] * (k + 1))


def shifted_geometric_block(k: int) -> FracPoly:
    """``t + t^2 + ... + t^k``, the zero polynomial for ``k = 0``."""
    if k < 0:
        raise ValueError(f"shifted_geometric_block needs k >= 0, got {k}")
    return FracPoly({i: 1 for i in range(1, k + 1)})


def evaluate(p: FracPoly, x) -> Fraction:
    return p.evaluate(x)


def coefficient(p: FracPoly, alpha: Exponent) -> int:
    return p.coefficient(alpha)


def is_palindrome(p: FracPoly, n: Exponent) -> bool:
    return p.is_palindrome(n)
