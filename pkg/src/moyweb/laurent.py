"""Exact Laurent polynomials in one variable ``q`` and quantum integers.

Exponents live in ``(1/2)Z`` because open-web evaluations carry half-integer
degrees; closed-web values always have integral exponents.  Internally every
exponent is stored doubled so all arithmetic stays on Python ints.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Exponent = Union[int, Fraction]


def _halves(e: Exponent) -> int:
    twice = Fraction(e) * 2
    if twice.denominator != 1:
        raise ValueError(f"exponent {e} is not a half-integer")
    return int(twice)


def _from_halves(h: int) -> Exponent:
    return h // 2 if h % 2 == 0 else Fraction(h, 2)


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Build one from a mapping ``{exponent: coefficient}``; zero coefficients are
    dropped so equality is plain coefficient-map equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[Exponent, int] | None = None):
        terms: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    h = _halves(e)
                    terms[h] = terms.get(h, 0) + int(c)
        self._terms = {h: c for h, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = {h: c for h, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: Exponent, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({_halves(exponent): coeff})

    @classmethod
    def from_half_degrees(cls, half_degrees: Iterable[int]) -> "LaurentPoly":
        """Sum of ``q^(h/2)`` over the given doubled exponents."""
        terms: dict[int, int] = {}
        for h in half_degrees:
            terms[h] = terms.get(h, 0) + 1
        return cls._raw(terms)

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c})

    @property
    def coeffs(self) -> dict[Exponent, int]:
        return {_from_halves(h): c for h, c in self._terms.items()}

    @property
    def half_terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(h % 2 == 0 for h in self._terms)

    def max_degree(self) -> Exponent | None:
        return _from_halves(max(self._terms)) if self._terms else None

    def min_degree(self) -> Exponent | None:
        return _from_halves(min(self._terms)) if self._terms else None

    def at_one(self) -> int:
        return sum(self._terms.values())

    def __call__(self, q):
        """Numerical value at ``q`` (use a Fraction for exact results)."""
        total = 0
        for h, c in self._terms.items():
            if h % 2:
                raise ValueError("cannot evaluate a half-integer exponent numerically")
            total += c * q ** (h // 2)
        return total

    def bar(self) -> "LaurentPoly":
        """The image under ``q -> q^-1``."""
        return LaurentPoly._raw({-h: c for h, c in self._terms.items()})

    def shift(self, exponent: Exponent) -> "LaurentPoly":
        s = _halves(exponent)
        return LaurentPoly._raw({h + s: c for h, c in self._terms.items()})

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for h, c in other._terms.items():
            terms[h] = terms.get(h, 0) + c
        return LaurentPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({h: -c for h, c in self._terms.items()})

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
        terms: dict[int, int] = {}
        for h1, c1 in self._terms.items():
            for h2, c2 in other._terms.items():
                terms[h1 + h2] = terms.get(h1 + h2, 0) + c1 * c2
        return LaurentPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (h, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly._raw({-h * -n: c ** -n})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
q = LaurentPoly.monomial(1)


def render(p: LaurentPoly) -> str:
    """Canonical text: decreasing exponents, e.g. ``q^2 + 1 + q^-2``."""
    if p.is_zero():
        return "0"
    out = []
    for h in sorted(p.half_terms, reverse=True):
        c = p.half_terms[h]
        e = _from_halves(h)
        if e == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            body = mag + ("q" if e == 1 else f"q^{e}")
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(q(?:\^(-?\d+(?:/2)?))?)?")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`render`."""
    s = text.strip()
    if s == "0":
        return ZERO
    terms: dict[Exponent, int] = {}
    pos = 0
    s = s.replace(" ", "")
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = Fraction(m.group(4)) if m.group(4) else 1
        else:
            e = 0
        terms[e] = terms.get(e, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly(terms)


# quantum integers ---------------------------------------------------------------


def qint(k: int) -> LaurentPoly:
    """Quantum integer ``[k] = q^(k-1) + q^(k-3) + ... + q^(1-k)``."""
    if k < 0:
        raise ValueError(f"qint requires k >= 0, got {k}")
    return LaurentPoly._raw({2 * e: 1 for e in range(1 - k, k, 2)})


@lru_cache(maxsize=None)
def qfact(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError(f"qfact requires k >= 0, got {k}")
    return ONE if k == 0 else qfact(k - 1) * qint(k)


@lru_cache(maxsize=None)
def qbinom(total: int, part: int) -> LaurentPoly:
    """Quantum binomial ``(total choose part)_q``; zero outside ``0 <= part <= total``.

    Built from the first-element recursion
    ``[m+n, m] = q^m [m+n-1, m] + q^-n [m+n-1, m-1]``.
    """
    if total < 0 or part < 0 or part > total:
        return ZERO
    if part == 0 or part == total:
        return ONE
    rest = total - part
    return qbinom(total - 1, part).shift(part) + qbinom(total - 1, part - 1).shift(-rest)


def is_palindromic(p: LaurentPoly) -> bool:
    return p == p.bar()
