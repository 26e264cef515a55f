"""Small finite fields F_{p^m} with deterministic structure constants.

Elements are coefficient tuples of length m (constant term first) over F_p.
The modulus is the first monic primitive polynomial in the integer encoding
sum(c_i * p^i); for m = 1 the modulus is x - g with g the smallest primitive
root mod p.  Every field designates one generator of its multiplicative
group, chosen so that designated generators are *norm-compatible down the
subfield tower*: N_{p^m -> p^d}(g_m) = g_d for every d | m.  The class of x
is used when it already satisfies this (it is primitive by construction);
otherwise the first primitive element with the required norms is taken.
This single coherent family of generators is what keeps torus realizations,
character tables and Gauss sums over different extension degrees consistent
with one another.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .cyclo import CycloNumber, from_exponent_counts, root_of_unity

FIELD_CAP = 10**4

Element = tuple[int, ...]


class TooLargeFieldError(ValueError):
    pass


class NoCoherentGeneratorError(ValueError):
    pass


class TrivialAdditiveCharacterError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    primes = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in primes):
            return g
    raise ValueError(f"no primitive root mod {p}")  # unreachable for prime p


class FiniteField:
    """F_{p^m}; obtain instances through get_field so structure is shared."""

    def __init__(self, p: int, m: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("degree must be >= 1")
        q = p**m
        if q > FIELD_CAP:
            raise TooLargeFieldError(f"|F| = {q} exceeds {FIELD_CAP}")
        self.p = p
        self.m = m
        self.q = q
        self.zero: Element = (0,) * m
        self.one: Element = (1,) + (0,) * (m - 1)
        self.modulus = self._find_modulus()
        self._red = self._reduction_table()
        self._gen: Element | None = None
        self._dlog: dict[Element, int] | None = None

    # -- modulus selection ---------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        p, m = self.p, self.m
        if m == 1:
            g = _smallest_primitive_root(p)
            return ((p - g) % p, 1)
        primes = _prime_factors(self.q - 1)
        for code in range(self.q):
            low = _decode(code, p, m)
            cand = low + (1,)
            if _x_is_primitive(cand, p, self.q, primes):
                return cand
        raise ValueError("no primitive polynomial found")  # unreachable

    def _reduction_table(self):
        # x^(m+k) reduced mod modulus, k = 0..m-2
        p, m = self.p, self.m
        rows = []
        cur = [(-self.modulus[i]) % p for i in range(m)]  # x^m
        rows.append(tuple(cur))
        for _ in range(m - 2):
            shifted = [0] + cur[:-1]
            top = cur[-1]
            cur = [(shifted[i] + top * rows[0][i]) % p for i in range(m)]
            rows.append(tuple(cur))
        return rows

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % self.p for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a: Element, b: Element) -> Element:
        p, m = self.p, self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:m]]
        for k in range(m - 1):
            c = prod[m + k] % p
            if c:
                row = self._red[k]
                for i in range(m):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def pow(self, a: Element, e: int) -> Element:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: Element) -> Element:
        if a == self.zero:
            raise ZeroDivisionError("inverting 0")
        return self.pow(a, self.q - 2)

    def x_class(self) -> Element:
        if self.m == 1:
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.m - 2)

    def scalar(self, c: int) -> Element:
        return (c % self.p,) + (0,) * (self.m - 1)

    # -- enumeration and encoding ----------------------------------------------

    def encode(self, a: Element) -> int:
        return sum(c * self.p**i for i, c in enumerate(a))

    def decode(self, code: int) -> Element:
        return _decode(code, self.p, self.m)

    def elements(self):
        for code in range(self.q):
            yield _decode(code, self.p, self.m)

    def units(self):
        for code in range(1, self.q):
            e = _decode(code, self.p, self.m)
            if e != self.zero:
                yield e

    # -- structure ---------------------------------------------------------------

    def mult_order(self, a: Element) -> int:
        if a == self.zero:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.q - 1
        for ell in _prime_factors(n):
            while n % ell == 0 and self.pow(a, n // ell) == self.one:
                n //= ell
        return n

    def trace_abs(self, a: Element) -> int:
        """Absolute trace down to F_p, returned as an int mod p."""
        acc = self.zero
        cur = a
        for _ in range(self.m):
            acc = self.add(acc, cur)
            cur = self.pow(cur, self.p)
        if any(c != 0 for c in acc[1:]):
            raise AssertionError("trace left the prime field")
        return acc[0]

    def designated_generator(self) -> Element:
        if self._gen is None:
            self._gen = self._compute_generator()
        return self._gen

    def _compute_generator(self) -> Element:
        if self.m == 1:
            return (_smallest_primitive_root(self.p) % self.p,)
        cand = self.x_class()
        if self._norm_tower_ok(cand):
            return cand
        primes = _prime_factors(self.q - 1)
        for h in self.units():
            if all(self.pow(h, (self.q - 1) // ell) != self.one for ell in primes):
                if self._norm_tower_ok(h):
                    return h
        raise NoCoherentGeneratorError(
            f"no primitive element of F_{self.p}^{self.m} has norm-compatible subfield norms"
        )

    def _norm_tower_ok(self, h: Element) -> bool:
        for d in range(1, self.m):
            if self.m % d:
                continue
            sub = get_field(self.p, d)
            emb = get_embedding(self.p, d, self.m)
            norm = self.pow(h, (self.q - 1) // (sub.q - 1))
            if norm != emb.image(sub.designated_generator()):
                return False
        return True

    def dlog(self, a: Element) -> int:
        """Discrete log base the designated generator."""
        if self._dlog is None:
            table = {}
            g = self.designated_generator()
            cur = self.one
            for j in range(self.q - 1):
                table[cur] = j
                cur = self.mul(cur, g)
            self._dlog = table
        return self._dlog[a]

    def norm_to_subfield(self, d: int, a: Element) -> Element:
        """N_{p^m -> p^d}(a), returned as an element of the degree-d field."""
        sub = get_field(self.p, d)
        val = self.pow(a, (self.q - 1) // (sub.q - 1))
        return get_embedding(self.p, d, self.m).preimage(val)

    def eval_poly(self, coeffs, at: Element) -> Element:
        acc = self.zero
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, at), self.scalar(c))
        return acc

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m})"


def _decode(code: int, p: int, m: int) -> Element:
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return tuple(out)


def _x_is_primitive(modulus, p: int, q: int, primes) -> bool:
    """x has multiplicative order q-1 mod `modulus` iff the polynomial is
    primitive (reducible moduli cannot host an element of that order)."""
    m = len(modulus) - 1

    def mulmod(a, b):
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            prod[k] = 0
            if c:
                for i in range(m + 1):
                    prod[k - m + i] = (prod[k - m + i] - c * modulus[i]) % p
        return tuple(c % p for c in prod[:m])

    def powx(e):
        result = tuple([1] + [0] * (m - 1))
        base = tuple([0, 1] + [0] * (m - 2)) if m >= 2 else ((-modulus[0]) % p,)
        while e:
            if e & 1:
                result = mulmod(result, base)
            base = mulmod(base, base)
            e >>= 1
        return result

    one = tuple([1] + [0] * (m - 1))
    if powx(q - 1) != one:
        return False
    return all(powx((q - 1) // ell) != one for ell in primes)


@lru_cache(maxsize=None)
def get_field(p: int, m: int) -> FiniteField:
    return FiniteField(p, m)


class FieldEmbedding:
    """The embedding F_{p^d} -> F_{p^m} sending the subfield's x-class to the
    least root (in the integer encoding) of the subfield modulus."""

    def __init__(self, p: int, d: int, m: int):
        if m % d:
            raise ValueError("no embedding: degree must divide")
        self.sub = get_field(p, d)
        self.sup = get_field(p, m)
        root = next(
            h for h in self.sup.elements()
            if self.sup.eval_poly(self.sub.modulus, h) == self.sup.zero
        )
        self.root = root
        powers = [self.sup.one]
        for _ in range(d - 1):
            powers.append(self.sup.mul(powers[-1], root))
        self._fwd = {}
        self._back = {}
        for a in self.sub.elements():
            img = self.sup.zero
            for c, pw in zip(a, powers):
                if c:
                    img = self.sup.add(img, self.sup.mul(self.sup.scalar(c), pw))
            self._fwd[a] = img
            self._back[img] = a

    def image(self, a: Element) -> Element:
        return self._fwd[a]

    def preimage(self, b: Element) -> Element:
        try:
            return self._back[b]
        except KeyError:
            raise ValueError("element is not in the subfield image") from None


@lru_cache(maxsize=None)
def get_embedding(p: int, d: int, m: int) -> FieldEmbedding:
    return FieldEmbedding(p, d, m)


# -- characters and Gauss sums ---------------------------------------------------


@dataclass(frozen=True)
class MultChar:
    """Multiplicative character of F_{p^m}^x: the designated generator g goes
    to the k-th power of the standard (q-1)-th root of unity."""

    p: int
    m: int
    k: int

    @property
    def field(self) -> FiniteField:
        return get_field(self.p, self.m)

    def is_trivial(self) -> bool:
        return self.k % (self.field.q - 1) == 0

    def value(self, a: Element) -> CycloNumber:
        n = self.field.q - 1
        return root_of_unity(n, (self.k * self.field.dlog(a)) % n)

    def compose_norm(self, m_big: int) -> "MultChar":
        """The character of F_{p^(m_big)} given by composing with the norm
        down to this character's field (generators are norm-compatible)."""
        big = get_field(self.p, m_big)
        step = (big.q - 1) // (self.field.q - 1)
        return MultChar(self.p, m_big, self.k * step)


@dataclass(frozen=True)
class AddChar:
    """Additive character t -> zeta_p^(b * absolute trace of t), b != 0 mod p."""

    p: int
    m: int
    b: int

    def __post_init__(self):
        if self.b % self.p == 0:
            raise TrivialAdditiveCharacterError("additive character must be nontrivial")

    @property
    def field(self) -> FiniteField:
        return get_field(self.p, self.m)

    def value(self, a: Element) -> CycloNumber:
        return root_of_unity(self.p, (self.b * self.field.trace_abs(a)) % self.p)

    def restrict_from(self, m_big: int) -> "AddChar":
        """The character of F_{p^(m_big)} obtained by composing with the
        relative trace down to this field (same b, by trace transitivity)."""
        return AddChar(self.p, m_big, self.b)


def gauss_sum(field: FiniteField, chi: MultChar, psi: AddChar) -> CycloNumber:
    """sum over t != 0 of chi(t) psi(t), exact in Q(zeta_lcm(q-1, p))."""
    if (chi.p, chi.m) != (field.p, field.m) or (psi.p, psi.m) != (field.p, field.m):
        raise ValueError("characters must live on the given field")
    q, p = field.q, field.p
    level = lcm(max(q - 1, 1), p)
    mstep = level // (q - 1) if q > 1 else 0
    astep = level // p
    counts: Counter[int] = Counter()
    g = field.designated_generator()
    t = field.one
    for j in range(q - 1):
        e = (chi.k * j * mstep + psi.b * field.trace_abs(t) * astep) % level
        counts[e] += 1
        t = field.mul(t, g)
    return from_exponent_counts(level, counts)
