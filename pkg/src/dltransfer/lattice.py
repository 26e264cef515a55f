"""Exact integer matrices, Smith normal form, and finite abelian quotients.

Everything here runs on Python's arbitrary-precision integers; numpy is
deliberately not used because entries in intermediate Smith reductions can
exceed 64 bits long before the inputs look dangerous.  All algorithms are
deterministic: the Smith pivot is the smallest nonzero absolute value, ties
broken by lowest (row, col).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction


class ShapeMismatchError(ValueError):
    pass


class InfiniteCokernelError(ValueError):
    pass


class NotUnimodularError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.entries:
            width = len(self.entries[0])
            if any(len(row) != width for row in self.entries):
                raise ShapeMismatchError("ragged rows")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                for row in self.entries
            )
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError("sum of different shapes")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def apply(self, vec) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ShapeMismatchError("vector length != cols")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ShapeMismatchError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse_unimodular(self) -> "IntMatrix":
        """Inverse of a matrix with determinant +-1 (stays integral)."""
        d = self.det()
        if d not in (1, -1):
            raise NotUnimodularError(f"determinant {d}")
        n = self.rows
        # Gauss-Jordan over Fractions, then cast back to int.
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        out = tuple(tuple(int(x) for x in row[n:]) for row in aug)
        return IntMatrix(out)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_json_obj(self):
        # decimal strings keep arbitrary-precision entries portable
        return [[str(x) for x in row] for row in self.entries]

    @staticmethod
    def from_json_obj(obj) -> "IntMatrix":
        return IntMatrix.from_rows([[int(x) for x in row] for row in obj])

    @staticmethod
    def from_json(text: str) -> "IntMatrix":
        return IntMatrix.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries) + "]"


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D = diag(d_1 | d_2 | ...), d_i >= 0."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d[i, i] for i in range(n))


def _find_pivot(m: list[list[int]], t: int, rows: int, cols: int):
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = m[i][j]
            if v != 0:
                key = (abs(v), i, j)
                if best is None or key < best:
                    best = key
    return None if best is None else (best[1], best[2])


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Deterministic Smith normal form over Z.

    Pivot choice: smallest nonzero |entry| in the remaining submatrix, ties by
    lowest (row, col).  Returns transforms satisfying U*A*V = D exactly.
    """
    rows, cols = a.rows, a.cols
    m = [list(r) for r in a.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, k, c):  # row_i -= c * row_k
        m[i] = [x - c * y for x, y in zip(m[i], m[k])]
        u[i] = [x - c * y for x, y in zip(u[i], u[k])]

    def col_op(j, k, c):  # col_j -= c * col_k
        for r in range(rows):
            m[r][j] -= c * m[r][k]
        for r in range(cols):
            v[r][j] -= c * v[r][k]

    def swap_rows(i, k):
        m[i], m[k] = m[k], m[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in range(rows):
            m[r][j], m[r][k] = m[r][k], m[r][j]
        for r in range(cols):
            v[r][j], v[r][k] = v[r][k], v[r][j]

    t = 0
    while t < min(rows, cols):
        loc = _find_pivot(m, t, rows, cols)
        if loc is None:
            break
        i, j = loc
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        # clear row/column t; a nonzero remainder becomes the next, smaller pivot
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t] != 0:
                q, r = divmod(m[i][t], m[t][t])
                row_op(i, t, q)
                if r != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if m[t][j] != 0:
                q, r = divmod(m[t][j], m[t][t])
                col_op(j, t, q)
                if r != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility sweep: pivot must divide the remaining submatrix
        culprit = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t] != 0:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            row_op(t, culprit, -1)  # fold offending row into row t, re-pivot
            continue
        t += 1

    for i in range(min(rows, cols)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]

    return SmithDecomposition(IntMatrix.from_rows(u), IntMatrix.from_rows(m), IntMatrix.from_rows(v))


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group presented as a cokernel Z^m / A Z^n.

    Elements are coordinate tuples (x_1, ..., x_m) with 0 <= x_i < d_i taken
    against the invariant factors; `projection` maps an ambient lattice vector
    to coordinates and `lift` is one integral section of it.  Invariant
    factors equal to 1 are kept internally (coordinates always have the full
    ambient width) but suppressed in display.
    """

    invariant_factors: tuple[int, ...]
    projection: IntMatrix
    lift: IntMatrix

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    def project(self, vec) -> tuple[int, ...]:
        raw = self.projection.apply(vec)
        return tuple(x % d for x, d in zip(raw, self.invariant_factors))

    def lift_coords(self, coords) -> tuple[int, ...]:
        self._check(coords)
        return self.lift.apply(coords)

    def _check(self, coords):
        if len(coords) != self.rank:
            raise ShapeMismatchError("coordinate width != group rank")
        for x, d in zip(coords, self.invariant_factors):
            if not (0 <= x < d):
                raise ValueError(f"coordinate {x} out of range for Z/{d}")

    def elements(self):
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def add(self, a, b) -> tuple[int, ...]:
        self._check(a)
        self._check(b)
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariant_factors))

    def neg(self, a) -> tuple[int, ...]:
        self._check(a)
        return tuple((-x) % d for x, d in zip(a, self.invariant_factors))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def __str__(self) -> str:
        shown = self.nontrivial_factors()
        if not shown:
            return "Z/1"
        return " x ".join(f"Z/{d}" for d in shown)


def cokernel(a: IntMatrix) -> FinAbGroup:
    """Z^rows / (column span of A); raises unless the quotient is finite."""
    snf = smith_normal_form(a)
    diag = list(snf.diagonal()) + [0] * (a.rows - min(a.rows, a.cols))
    if any(d == 0 for d in diag):
        raise InfiniteCokernelError("cokernel has a free summand")
    return FinAbGroup(
        invariant_factors=tuple(diag),
        projection=snf.u,
        lift=snf.u.inverse_unimodular(),
    )


def saturated_kernel(a: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Basis of ker(A) as a saturated sublattice of Z^cols (may be empty)."""
    snf = smith_normal_form(a)
    diag = snf.diagonal()
    basis = []
    for j in range(a.cols):
        if j >= len(diag) or diag[j] == 0:
            basis.append(snf.v.col(j))
    return tuple(basis)


@dataclass(frozen=True)
class QmodZVec:
    """Vector with entries in Q/Z, each stored as a reduced Fraction in [0, 1)."""

    entries: tuple[Fraction, ...]

    @staticmethod
    def make(values) -> "QmodZVec":
        out = []
        for v in values:
            f = Fraction(v)
            out.append(f - (f.numerator // f.denominator))
        return QmodZVec(tuple(out))

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "QmodZVec") -> "QmodZVec":
        return QmodZVec.make(a + b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "QmodZVec":
        return QmodZVec.make(-a for a in self.entries)

    def scale(self, c) -> "QmodZVec":
        return QmodZVec.make(Fraction(c) * a for a in self.entries)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def order(self) -> int:
        """Additive order: lcm of the denominators."""
        n = 1
        for a in self.entries:
            d = a.denominator
            g = _gcd(n, d)
            n = n // g * d
        return n

    def apply_int_matrix(self, m: IntMatrix) -> "QmodZVec":
        if m.cols != len(self):
            raise ShapeMismatchError("matrix width != vector length")
        return QmodZVec.make(
            sum((Fraction(c) * x for c, x in zip(row, self.entries)), Fraction(0))
            for row in m.entries
        )

    def sort_key(self):
        """Per-coordinate (denominator, numerator) tuples; lexicographic order."""
        return tuple((a.denominator, a.numerator) for a in self.entries)

    def label(self) -> str:
        return "[" + ",".join(f"{a.numerator}/{a.denominator}" for a in self.entries) + "]"

    @staticmethod
    def from_label(text: str) -> "QmodZVec":
        inner = text.strip()
        if inner.startswith("[") and inner.endswith("]"):
            inner = inner[1:-1]
        if not inner:
            return QmodZVec(())
        return QmodZVec.make(Fraction(part) for part in inner.split(","))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def pair(group: FinAbGroup, elt, char) -> Fraction:
    """Duality pairing sum_i elt_i * char_i / d_i taken mod 1.

    Characters of a finite abelian group in coordinates are again coordinate
    tuples against the same invariant factors.
    """
    group._check(elt)
    group._check(char)
    total = Fraction(0)
    for x, k, d in zip(elt, char, group.invariant_factors):
        total += Fraction(x * k, d)
    return total - (total.numerator // total.denominator)
