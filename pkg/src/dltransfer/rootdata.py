"""Root data on an explicit character/cocharacter lattice pair, and their
Weyl groups.

A datum lives on X* = X_* = Z^rank with the standard dot pairing; roots sit
in X*, coroots in X_*, matched index-by-index.  Weyl elements are stored as
their integer matrix acting on X_* (column vectors); the action on X* is by
inverse transpose, so the pairing is preserved by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .lattice import IntMatrix, QmodZVec

W_CAP = 10**4


class UnsupportedNameError(ValueError):
    pass


class GroupTooLargeError(ValueError):
    pass


class NotClosedError(ValueError):
    pass


class InvalidDatumError(ValueError):
    pass


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    simple: tuple[int, ...]  # indices into `roots`
    name: str = field(default="", compare=False)

    def __post_init__(self):
        _validate_datum(self)

    # -- structure ----------------------------------------------------------

    def root(self, i: int) -> tuple[int, ...]:
        return self.roots[i]

    def coroot(self, i: int) -> tuple[int, ...]:
        return self.coroots[i]

    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.roots[i] for i in self.simple)

    def positive_indices(self) -> tuple[int, ...]:
        return _positive_indices(self)

    def num_positive(self) -> int:
        """dim G/B: number of positive roots."""
        return len(self.roots) // 2

    def root_index(self, vec) -> int:
        try:
            return self.roots.index(tuple(vec))
        except ValueError:
            raise KeyError(f"{vec} is not a root") from None

    def reflection_matrix(self, i: int) -> IntMatrix:
        """Reflection in root i, acting on X_*: x -> x - <alpha, x> alpha^."""
        alpha, cov = self.roots[i], self.coroots[i]
        n = self.rank
        return IntMatrix.from_rows(
            [[(1 if r == c else 0) - cov[r] * alpha[c] for c in range(n)] for r in range(n)]
        )

    def to_json_obj(self):
        return {
            "rank": self.rank,
            "roots": [list(r) for r in self.roots],
            "coroots": [list(r) for r in self.coroots],
            "simple": list(self.simple),
            "name": self.name,
        }

    @staticmethod
    def from_json_obj(obj) -> "RootDatum":
        return RootDatum(
            rank=int(obj["rank"]),
            roots=tuple(tuple(int(x) for x in r) for r in obj["roots"]),
            coroots=tuple(tuple(int(x) for x in r) for r in obj["coroots"]),
            simple=tuple(int(i) for i in obj["simple"]),
            name=str(obj.get("name", "")),
        )


def _validate_datum(rd: RootDatum):
    if rd.rank < 0:
        raise InvalidDatumError("negative rank")
    if len(rd.roots) != len(rd.coroots):
        raise InvalidDatumError("roots and coroots must be matched in length")
    for v in rd.roots + rd.coroots:
        if len(v) != rd.rank:
            raise InvalidDatumError("root/coroot width != rank")
    for a, av in zip(rd.roots, rd.coroots):
        if sum(x * y for x, y in zip(a, av)) != 2:
            raise InvalidDatumError(f"<{a}, {av}> != 2")
    root_set = set(rd.roots)
    if len(root_set) != len(rd.roots):
        raise InvalidDatumError("duplicate roots")
    for a in rd.roots:
        if tuple(-x for x in a) not in root_set:
            raise InvalidDatumError(f"root set not closed under negation: {a}")
    for i in rd.simple:
        if not (0 <= i < len(rd.roots)):
            raise InvalidDatumError("simple index out of range")
    if rd.roots:
        if not rd.simple:
            raise InvalidDatumError("nonempty root set needs a simple system")
        _positive_indices(rd)  # raises if the simple system does not split the roots
        # simple reflections must permute the root set
        for i in rd.simple:
            m = rd.reflection_matrix(i)
            mt = m.transpose()  # reflection is an involution, inverse transpose = transpose
            for j, a in enumerate(rd.roots):
                image = mt.apply(a)
                if image not in root_set:
                    raise InvalidDatumError(f"reflection {i} does not preserve roots")


@lru_cache(maxsize=None)
def _positive_indices(rd: RootDatum) -> tuple[int, ...]:
    """Roots whose expansion in the simple system is nonnegative. Requires the
    usual half/half split, otherwise the datum is rejected."""
    simples = rd.simple_roots()
    pos = []
    for idx, a in enumerate(rd.roots):
        coeffs = _solve_in_span(simples, a)
        if coeffs is None:
            raise InvalidDatumError(f"root {a} outside span of simple roots")
        if all(c >= 0 for c in coeffs):
            pos.append(idx)
        elif not all(c <= 0 for c in coeffs):
            raise InvalidDatumError(f"root {a} has mixed signs in the simple system")
    if rd.roots and len(pos) * 2 != len(rd.roots):
        raise InvalidDatumError("positive roots must be exactly half of all roots")
    return tuple(pos)


def _solve_in_span(basis, target):
    """Rational coordinates of `target` in span(basis), or None."""
    if not basis:
        return None if any(x != 0 for x in target) else ()
    rows = len(target)
    cols = len(basis)
    aug = [[Fraction(basis[j][i]) for j in range(cols)] + [Fraction(target[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    coeffs = [Fraction(0)] * cols
    for row_i, c in enumerate(pivots):
        coeffs[c] = aug[row_i][cols]
    return tuple(coeffs)


# -- Weyl groups -------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """One Weyl group element: `matrix` acts on X_*, `char_matrix` on X*."""

    matrix: IntMatrix
    char_matrix: IntMatrix  # inverse transpose of `matrix`
    length: int

    def act_cochar(self, v) -> tuple[int, ...]:
        return self.matrix.apply(v)

    def act_char(self, v) -> tuple[int, ...]:
        return self.char_matrix.apply(v)

    def act_char_point(self, y: QmodZVec) -> QmodZVec:
        return y.apply_int_matrix(self.char_matrix)

    def inverse_matrix(self) -> IntMatrix:
        return self.char_matrix.transpose()

    def is_identity(self) -> bool:
        return self.matrix == IntMatrix.identity(self.matrix.rows)


class WeylGroup:
    """Finite matrix group generated by the simple reflections of a datum."""

    def __init__(self, datum: RootDatum, elements: tuple[WeylElement, ...]):
        self.datum = datum
        self.elements = elements
        self._index = {w.matrix.entries: i for i, w in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.by_matrix(IntMatrix.identity(self.datum.rank))

    def index(self, w: WeylElement) -> int:
        return self._index[w.matrix.entries]

    def by_matrix(self, m: IntMatrix) -> WeylElement:
        try:
            return self.elements[self._index[m.entries]]
        except KeyError:
            raise KeyError("matrix is not a Weyl group element") from None

    def contains_matrix(self, m: IntMatrix) -> bool:
        return m.entries in self._index

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.by_matrix(a.matrix * b.matrix)

    def inverse(self, a: WeylElement) -> WeylElement:
        return self.by_matrix(a.inverse_matrix())

    def simple_reflections(self) -> tuple[WeylElement, ...]:
        return tuple(self.by_matrix(self.datum.reflection_matrix(i)) for i in self.datum.simple)

    def subgroup_generated(self, matrices) -> "WeylSubgroup":
        """Closure of the given element matrices inside this group."""
        gens = [self.by_matrix(m if isinstance(m, IntMatrix) else m.matrix) for m in matrices]
        seen = {self.identity.matrix.entries}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    prod = self.multiply(w, g)
                    if prod.matrix.entries not in seen:
                        seen.add(prod.matrix.entries)
                        nxt.append(prod)
            frontier = nxt
        members = frozenset(self._index[e] for e in seen)
        return WeylSubgroup(self, members)


@dataclass(frozen=True)
class WeylSubgroup:
    group: WeylGroup
    member_indices: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.member_indices)

    def __contains__(self, w: WeylElement) -> bool:
        return self.group.index(w) in self.member_indices

    def elements(self) -> list[WeylElement]:
        return [self.group.elements[i] for i in sorted(self.member_indices)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylSubgroup)
            and self.group is other.group
            and self.member_indices == other.member_indices
        )


@lru_cache(maxsize=None)
def weyl_group(rd: RootDatum) -> WeylGroup:
    """Enumerate W by closing the simple reflections; lengths by inversion
    counting on the positive roots."""
    n = rd.rank
    ident = IntMatrix.identity(n)
    gens = [rd.reflection_matrix(i) for i in rd.simple]
    seen = {ident.entries: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m * g
                if prod.entries not in seen:
                    if len(seen) >= W_CAP:
                        raise GroupTooLargeError(f"Weyl group exceeds {W_CAP} elements")
                    seen[prod.entries] = prod
                    nxt.append(prod)
        frontier = nxt

    pos = [rd.roots[i] for i in _positive_indices(rd)]
    pos_set = set(pos)
    elements = []
    for m in seen.values():
        inv = m.inverse_unimodular()
        char_m = inv.transpose()
        length = 0
        for a in pos:
            image = char_m.apply(a)
            if image not in pos_set:
                length += 1
        elements.append(WeylElement(matrix=m, char_matrix=char_m, length=length))
    elements.sort(key=lambda w: (w.length, w.matrix.entries))
    return WeylGroup(rd, tuple(elements))


# -- standard data ------------------------------------------------------------


def build_standard(name: str, n: int | None = None) -> RootDatum:
    """Standard root data: GL(n), SL(2), PGL(2), Sp(2) (type C2), Torus(r)."""
    kind, size = _parse_name(name, n)
    if kind == "GL":
        if size < 1:
            raise UnsupportedNameError("GL needs n >= 1")
        return _gl_datum(size)
    if kind == "SL":
        if size != 2:
            raise UnsupportedNameError("only SL(2) is supported")
        return RootDatum(1, ((2,), (-2,)), ((1,), (-1,)), (0,), name="SL(2)")
    if kind == "PGL":
        if size != 2:
            raise UnsupportedNameError("only PGL(2) is supported")
        return RootDatum(1, ((1,), (-1,)), ((2,), (-2,)), (0,), name="PGL(2)")
    if kind == "Sp":
        if size != 2:
            raise UnsupportedNameError("only Sp(2) is supported")
        return _sp4_datum()
    if kind == "Torus":
        if size < 1:
            raise UnsupportedNameError("Torus needs rank >= 1")
        return RootDatum(size, (), (), (), name=f"Torus({size})")
    raise UnsupportedNameError(f"unknown group family {kind!r}")


def _parse_name(name: str, n: int | None):
    m = re.fullmatch(r"([A-Za-z]+)\s*\(?\s*(\d*)\s*\)?", name.strip())
    if not m:
        raise UnsupportedNameError(f"cannot parse group name {name!r}")
    kind = m.group(1)
    if kind not in ("GL", "SL", "PGL", "Sp", "Torus"):
        raise UnsupportedNameError(f"unknown group family {kind!r}")
    if m.group(2):
        size = int(m.group(2))
        if n is not None and n != size:
            raise UnsupportedNameError("conflicting rank arguments")
    elif n is not None:
        size = n
    else:
        raise UnsupportedNameError("missing rank parameter")
    return kind, size


def _gl_datum(n: int) -> RootDatum:
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    simple = tuple(roots.index(tuple(_e_diff(n, i, i + 1))) for i in range(n - 1))
    rtup = tuple(roots)
    return RootDatum(n, rtup, rtup, simple, name=f"GL({n})")


def _e_diff(n, i, j):
    v = [0] * n
    v[i], v[j] = 1, -1
    return v


def _sp4_datum() -> RootDatum:
    # type C2 on Z^2: short roots +-(e1-e2), +-(e1+e2); long roots +-2e1, +-2e2
    roots = [(1, -1), (-1, 1), (1, 1), (-1, -1), (2, 0), (-2, 0), (0, 2), (0, -2)]
    coroots = [(1, -1), (-1, 1), (1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1)]
    simple = (0, 6)  # e1 - e2 (short), 2 e2 (long)
    return RootDatum(2, tuple(roots), tuple(coroots), simple, name="Sp(2)")


def dual(rd: RootDatum) -> RootDatum:
    """Langlands dual: swap roots with coroots on the dual lattice pair."""
    names = {"SL(2)": "PGL(2)", "PGL(2)": "SL(2)"}
    if rd.name.startswith("GL") or rd.name.startswith("Torus"):
        new_name = rd.name
    else:
        new_name = names.get(rd.name, f"dual({rd.name})" if rd.name else "")
    return RootDatum(rd.rank, rd.coroots, rd.roots, rd.simple, name=new_name)


def levi_from_roots(rd: RootDatum, indices) -> tuple[RootDatum, WeylSubgroup]:
    """Sub-datum on the same lattice spanned by the chosen roots, plus the
    reflection subgroup they generate.

    The subset must be closed under negation and be the full intersection of
    the root set with its rational span (a Levi-type subsystem).
    """
    idx = sorted(set(int(i) for i in indices))
    for i in idx:
        if not (0 <= i < len(rd.roots)):
            raise NotClosedError("root index out of range")
    chosen = [rd.roots[i] for i in idx]
    chosen_set = set(chosen)
    for a in chosen:
        if tuple(-x for x in a) not in chosen_set:
            raise NotClosedError("subset not closed under negation")
    # saturation inside the span
    for j, a in enumerate(rd.roots):
        if _solve_in_span(tuple(chosen), a) is not None and a not in chosen_set:
            raise NotClosedError(f"subset misses root {a} inside its span")

    pos_parent = set(_positive_indices(rd))
    pos_sub = [rd.roots[i] for i in idx if i in pos_parent]
    simple_sub = []
    for a in pos_sub:
        decomposable = any(
            tuple(x - y for x, y in zip(a, b)) in set(map(tuple, pos_sub))
            for b in pos_sub
            if b != a
        )
        if not decomposable:
            simple_sub.append(a)

    sub_roots = tuple(rd.roots[i] for i in idx)
    sub_coroots = tuple(rd.coroots[i] for i in idx)
    sub_simple = tuple(sub_roots.index(a) for a in simple_sub)
    levi = RootDatum(rd.rank, sub_roots, sub_coroots, sub_simple,
                     name=f"Levi[{rd.name}]" if rd.name else "Levi")

    w = weyl_group(rd)
    refl = [rd.reflection_matrix(i) for i in idx]
    return levi, w.subgroup_generated(refl)
