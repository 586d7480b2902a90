"""Exact integer polynomial and Laurent polynomial arithmetic.

Everything here works over Python's arbitrary-precision ``int`` (and
``fractions.Fraction`` where rational values are required), so equality of
characteristic polynomials is decided exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]

MAX_MOMENT = 4


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; the zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("x" if i == 1 else f"x^{i}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``x**k``; negative ``k`` divides and requires exactness."""
        if k >= 0:
            return IntPoly([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError(f"{self} is not divisible by x^{-k}")
        return IntPoly(self.coeffs[-k:])

    def divmod(self, other: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
        """Rational long division, returning Fraction coefficient lists."""
        return _fdivmod([Fraction(c) for c in self.coeffs], [Fraction(c) for c in other.coeffs])

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient of an exact division whose result has integer coefficients."""
        q, r = self.divmod(other)
        if any(r):
            raise ValueError(f"{other} does not divide {self}")
        if any(c.denominator != 1 for c in q):
            raise ValueError("quotient is not an integer polynomial")
        return IntPoly(int(c) for c in q)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x: Rational) -> Rational:
        return eval_at(self, x)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPoly:
        return cls(int(c) for c in data)


def eval_at(p: IntPoly, x: Rational) -> Rational:
    """Exact Horner evaluation at an integer or rational point."""
    acc: Rational = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return int(acc)
    return acc


def zero_multiplicity(p: IntPoly) -> int:
    """Largest ``j`` such that ``x**j`` divides ``p`` (0 for the zero polynomial)."""
    for j, c in enumerate(p.coeffs):
        if c:
            return j
    return 0


def moments(p: IntPoly, k: int) -> int:
    """Power sum of the roots, ``sum(r**k)``, via Newton's identities.

    Only defined for monic polynomials; orders above ``MAX_MOMENT`` are refused.
    """
    if not p.is_monic():
        raise ValueError("moments require a monic polynomial")
    if not 0 <= k <= MAX_MOMENT:
        raise ValueError(f"moment order must lie in [0, {MAX_MOMENT}]")
    return power_sums(p, k)[k]


def power_sums(p: IntPoly, kmax: int) -> list[int]:
    n = p.degree
    # c[i] = coefficient of x^{n-i}
    c = [p[n - i] if i <= n else 0 for i in range(kmax + 1)]
    sums = [n]
    for k in range(1, kmax + 1):
        s = -k * c[k]
        for i in range(1, k):
            s -= c[i] * sums[k - i]
        sums.append(s)
    return sums


# ---------------------------------------------------------------------------
# Rational polynomial helpers for Sturm sequences (lists of Fractions,
# index = exponent).


def _ftrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _ftrim(list(a))
    b = _ftrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] -= f * bc
        a.pop()
        _ftrim(a)
    return _ftrim(q), a


def _fgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _ftrim(list(a)), _ftrim(list(b))
    while b:
        _, r = _fdivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _fderiv(a: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(a)][1:]


def _feval(a: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: ``p = lc * prod(f_i ** i)`` with each ``f_i`` square-free.

    Factors are returned as primitive integer polynomials paired with their
    multiplicity; constant factors are dropped.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    a = [Fraction(c) for c in p.coeffs]
    out: list[tuple[IntPoly, int]] = []
    b = _fderiv(a)
    g = _fgcd(a, b)
    c, _ = _fdivmod(a, g)
    d, _ = _fdivmod(b, g)
    dc = _fderiv(c)
    d = [x - y for x, y in zip_longest(d, dc, fillvalue=Fraction(0))]
    i = 1
    while len(_ftrim(list(c))) > 1:
        f = _fgcd(c, d)
        c, _ = _fdivmod(c, f)
        d, _ = _fdivmod(d, f)
        dc = _fderiv(c)
        d = [x - y for x, y in zip_longest(d, dc, fillvalue=Fraction(0))]
        if len(f) > 1:
            out.append((_primitive(f), i))
        i += 1
    return out


def _primitive(a: list[Fraction]) -> IntPoly:
    from math import gcd, lcm

    den = 1
    for c in a:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return IntPoly(c // g for c in ints)


def sturm_sequence(p: IntPoly) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in p.coeffs]]
    seq.append(_fderiv(seq[0]))
    while _ftrim(seq[-1]) and len(seq[-1]) > 1:
        _, r = _fdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(values: Iterable[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_distinct_above(seq: list[list[Fraction]], bound: Fraction) -> int:
    """Distinct real roots in ``(bound, +inf)`` of a square-free polynomial."""
    at_bound = _sign_changes(_feval(s, bound) for s in seq)
    at_inf = _sign_changes(s[-1] for s in seq)
    return at_bound - at_inf


def count_roots_greater(p: IntPoly, bound: Rational, strict: bool = True) -> int:
    """Number of real roots of ``p`` above ``bound``, counted with multiplicity.

    ``strict=True`` counts roots in the open interval ``(bound, inf)``;
    ``strict=False`` also counts roots equal to ``bound``.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    b = Fraction(bound)
    total = 0
    for factor, mult in squarefree_decomposition(p):
        seq = sturm_sequence(factor)
        count = _count_distinct_above(seq, b)
        if not strict and eval_at(factor, b) == 0:
            count += 1
        total += mult * count
    return total


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Integer Laurent polynomial in one variable, stored sparsely.

    ``terms`` maps exponents (possibly negative) to non-zero integers.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        object.__setattr__(self, "terms", {e: c for e, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_intpoly(cls, p: IntPoly) -> LaurentPoly:
        return cls(enumerate(p.coeffs))

    def to_intpoly(self) -> IntPoly:
        if any(e < 0 for e in self.terms):
            raise ValueError("Laurent polynomial has negative exponents")
        top = max(self.terms, default=-1)
        return IntPoly(self.terms.get(i, 0) for i in range(top + 1))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int | None:
        return min(self.terms) if self.terms else None

    @property
    def max_exponent(self) -> int | None:
        return max(self.terms) if self.terms else None

    def lowest_term(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        e = min(self.terms)
        return e, self.terms[e]

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        if isinstance(other, IntPoly):
            return LaurentPoly.from_intpoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (ex, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly({-ex * -e: c ** -e})
        result, base = LaurentPoly({0: 1}), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("y" if e == 1 else f"y^{e}")
            body = str(abs(c)) if (abs(c) != 1 or e == 0) else ""
            out.append(("-" if c < 0 else "+", body + mono))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def first_mismatch(self, other: LaurentPoly) -> int | None:
        """Smallest exponent where the two differ, or ``None`` when equal."""
        diff = self - other
        return diff.min_exponent


Y = LaurentPoly.monomial(1)


def laurent_from_charpoly(p: IntPoly, kind: str) -> LaurentPoly:
    """Substitute the ``y``-parametrisation of ``x`` and clear denominators.

    For the Laplacian kinds (``"L"``, ``"Q"``) ``x = (y + 1)**2 / y``; for the
    adjacency kind ``x = (y**2 + 1) / y``. The result is ``y**deg(p) * p(x(y))``,
    an ordinary polynomial in ``y`` of degree at most ``2 * deg(p)``.
    """
    kind = kind.upper()
    if kind in ("L", "Q"):
        num = LaurentPoly({0: 1, 1: 2, 2: 1})
    elif kind == "A":
        num = LaurentPoly({0: 1, 2: 1})
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    d = p.degree
    out = LaurentPoly()
    power = LaurentPoly({0: 1})
    for j, c in enumerate(p.coeffs):
        if c:
            out = out + (power * c).shift(d - j)
        power = power * num
    return out
