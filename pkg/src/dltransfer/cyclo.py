"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a rational polynomial in zeta_N canonically reduced modulo the
N-th cyclotomic polynomial, so equality is syntactic equality of coefficient
vectors once two values are lifted to a common level.  No floating point
anywhere.

    >>> w = root_of_unity(3, 1)
    >>> 1 + w + w * w == 0
    True
    >>> root_of_unity(6, 1) == -root_of_unity(3, 2)
    True

The heavy consumer of this module builds large sums of roots of unity
(Gauss-sum style); ``from_exponent_counts`` turns an integer histogram of
exponents into a reduced value in one pass, using int64 numpy when the
precomputed monomial table is certified small enough and exact Python
integers otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

LEVEL_CAP = 2**24
_NP_SAFE = 2**20  # magnitude bound keeping count * table * level products inside int64


class IncompatibleLevelError(ValueError):
    pass


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree, computed by dividing
    x^n - 1 by Phi_d for every proper divisor d."""
    if n < 1:
        raise ValueError("level must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            q = cyclotomic_polynomial(d)
            out = [0] * (len(poly) - len(q) + 1)
            rem = list(poly)
            for i in range(len(out) - 1, -1, -1):
                c = rem[i + len(q) - 1]
                out[i] = c
                if c:
                    for j, qc in enumerate(q):
                        rem[i + j] -= c * qc
            poly = out
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _mono_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k = integer coefficient vector of x^k mod Phi_n, k = 0 .. n-1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _np_mono_table(n: int):
    rows = _mono_table(n)
    mx = max((max(abs(v) for v in r) for r in rows if r), default=0)
    if mx >= _NP_SAFE:
        return None  # fall back to exact Python path
    return np.array(rows, dtype=np.int64)


def _check_level(n: int):
    if n > LEVEL_CAP:
        raise IncompatibleLevelError(f"level {n} exceeds cap {LEVEL_CAP}")


class CycloNumber:
    """Element of Q(zeta_level), reduced mod Phi_level. Immutable."""

    __slots__ = ("level", "coeffs")
    __hash__ = None  # equality crosses levels; use labels as dict keys instead

    def __init__(self, level: int, coeffs):
        _check_level(level)
        deg = _phi_degree(level)
        coeffs = tuple(coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} reduced coefficients at level {level}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycloNumber is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_rational(value) -> "CycloNumber":
        return CycloNumber(1, (Fraction(value),))

    @staticmethod
    def zero() -> "CycloNumber":
        return CycloNumber.from_rational(0)

    @staticmethod
    def one() -> "CycloNumber":
        return CycloNumber.from_rational(1)

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift_to_level(self, m: int) -> "CycloNumber":
        if m % self.level != 0:
            raise IncompatibleLevelError(f"{self.level} does not divide {m}")
        if m == self.level:
            return self
        _check_level(m)
        step = m // self.level
        acc: dict[int, Fraction] = {}
        for j, c in enumerate(self.coeffs):
            if c:
                acc[(j * step) % m] = acc.get((j * step) % m, Fraction(0)) + c
        return CycloNumber(m, _reduce_fraction_counts(m, acc))

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = math.lcm(self.level, o.level)
        a, b = self.lift_to_level(m), o.lift_to_level(m)
        return CycloNumber(m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.level == 1:  # rational scaling, the hot path
            c = o.coeffs[0]
            return CycloNumber(self.level, tuple(x * c for x in self.coeffs))
        if self.level == 1:
            c = self.coeffs[0]
            return CycloNumber(o.level, tuple(x * c for x in o.coeffs))
        m = math.lcm(self.level, o.level)
        a, b = self.lift_to_level(m), o.lift_to_level(m)
        acc: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        e = (i + j) % m
                        acc[e] = acc.get(e, Fraction(0)) + x * y
        return CycloNumber(m, _reduce_fraction_counts(m, acc))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        n = self.level
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        # extended Euclid in Q[x]: u*self + v*Phi_n = 1 (Phi_n irreducible over Q)
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        const = r0[0] if r0 else Fraction(0)  # r0 is the gcd, a nonzero constant
        inv = [c / const for c in s0]
        acc = {j: c for j, c in enumerate(inv) if c}
        return CycloNumber(n, _reduce_fraction_counts(n, acc))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.level == 1:
            c = o.coeffs[0]
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNumber(self.level, tuple(x / c for x in self.coeffs))
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def conjugate(self) -> "CycloNumber":
        """Complex conjugation zeta -> zeta^{-1}."""
        n = self.level
        acc: dict[int, Fraction] = {}
        for j, c in enumerate(self.coeffs):
            if c:
                acc[(-j) % n] = acc.get((-j) % n, Fraction(0)) + c
        return CycloNumber(n, _reduce_fraction_counts(n, acc))

    def abs_squared(self) -> "CycloNumber":
        return self * self.conjugate()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = math.lcm(self.level, o.level)
        return self.lift_to_level(m).coeffs == o.lift_to_level(m).coeffs

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # -- serialization -----------------------------------------------------

    def to_json_obj(self):
        n = self.level
        full = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        return {"level": n, "coeffs": [f"{c.numerator}/{c.denominator}" for c in full]}

    @staticmethod
    def from_json_obj(obj) -> "CycloNumber":
        n = int(obj["level"])
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        if len(coeffs) != n:
            raise ValueError("coefficient vector length must equal the level")
        acc = {j: c for j, c in enumerate(coeffs) if c}
        return CycloNumber(n, _reduce_fraction_counts(n, acc))

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({self.coeffs[0]})"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z{self.level}^{j}" if j else f"{c}")
        return "Cyclo(" + " + ".join(terms) + ")"


def root_of_unity(level: int, k: int = 1) -> CycloNumber:
    """zeta_level ** k, canonically reduced."""
    _check_level(level)
    row = _mono_table(level)[k % level]
    return CycloNumber(level, tuple(Fraction(v) for v in row))


def from_exponent_counts(level: int, counts) -> CycloNumber:
    """sum_k counts[k] * zeta_level^k for an integer histogram of exponents.

    `counts` is a dict {exponent: int} or a sequence of length `level`.
    """
    _check_level(level)
    if isinstance(counts, dict):
        vec = [0] * level
        for e, c in counts.items():
            vec[e % level] += int(c)
    else:
        if len(counts) != level:
            raise ValueError("count vector length must equal the level")
        vec = [int(c) for c in counts]
    table = _np_mono_table(level)
    if table is not None and max((abs(v) for v in vec), default=0) < _NP_SAFE:
        reduced = np.array(vec, dtype=np.int64) @ table
        return CycloNumber(level, tuple(Fraction(int(v)) for v in reduced))
    acc = {e: Fraction(c) for e, c in enumerate(vec) if c}
    return CycloNumber(level, _reduce_fraction_counts(level, acc))


def _reduce_fraction_counts(level: int, acc: dict) -> tuple:
    deg = _phi_degree(level)
    out = [Fraction(0)] * deg
    table = _mono_table(level)
    for e, c in acc.items():
        if c:
            row = table[e]
            for j, r in enumerate(row):
                if r:
                    out[j] += c * r
    return tuple(out)


def _poly_divmod(a: list, b: list):
    """Division with remainder in Q[x]; b nonzero."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
