"""Brute-force oracle: literal 2x2 matrix groups over small fields.

Everything here is computed by enumeration — group elements, conjugacy
classes, induced characters — so that the combinatorial engine can be checked
against honest class-function arithmetic.  Characters of twisted tori enter
through the realization tables, keeping the abstract and concrete sides of
every comparison on one fixed identification.

Induction tables for the non-split torus are not computed here; they are
ingested from JSON data files and accepted only after passing four exact
validation gates (degree formula, Gram matrix versus the combinatorial
pairing, central character, and split rows versus parabolic induction).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .cyclo import CycloNumber
from .dlengine import UniformFunction, pairing, symbol_degree
from .ffield import AddChar, MultChar, gauss_sum, get_embedding, get_field  # noqa: F401
from .finitetorus import TorusChar, split_frobenius
from .rootdata import build_standard
from .ssclasses import RationalPairClass, enumerate_pair_classes
from .stablefun import ContextMismatchError, GroupContext
from .torusreal import realization

SUPPORTED_Q = (2, 3, 4, 5, 7)

# diagonal entries of a torus point, as exponent patterns of the realization
_TORUS_WEIGHTS = {
    "GL2": ((1, 0), (0, 1)),
    "SL2": ((1,), (-1,)),
    "PGL2": ((1,), (0,)),
}


class TooLargeError(ValueError):
    pass


class MissingTableError(KeyError):
    pass


class ValidationFailedError(ValueError):
    def __init__(self, gate: str, detail: str):
        super().__init__(f"table validation failed at gate '{gate}': {detail}")
        self.gate = gate


@dataclass(frozen=True)
class ConjClass:
    rep: tuple
    size: int
    label: str


class MatGroup:
    """Fully enumerated matrix group with conjugacy classes."""

    def __init__(self, name: str, q: int):
        if name not in ("GL2", "SL2", "PGL2"):
            raise TooLargeError(f"unsupported group {name!r}")
        if q not in SUPPORTED_Q:
            raise TooLargeError(f"q = {q} outside supported range {SUPPORTED_Q}")
        self.name = name
        self.q = q
        p, e = _prime_power(q)
        self.field = get_field(p, e)
        if name == "GL2":
            self.datum = build_standard("GL", 2)
        elif name == "SL2":
            self.datum = build_standard("SL", 2)
        else:
            self.datum = build_standard("PGL", 2)
        self.frob = split_frobenius(self.datum, q)
        self.context = GroupContext(self.datum, self.frob)

        self.elements = self._enumerate()
        self._index = {m: i for i, m in enumerate(self.elements)}
        self._inv = {m: self.canonical(_minv(self.field, m)) for m in self.elements}
        self.identity = self.canonical(_ident(self.field))
        self.classes, self._class_of = self._conjugacy_classes()
        self.identity_class = self._class_of[self.identity]
        self.borel = frozenset(
            m for m in self.elements if m[1][0] == self.field.zero
        )
        self.torus_elements = tuple(
            m for m in self.elements
            if m[0][1] == self.field.zero and m[1][0] == self.field.zero
        )

    # -- construction ---------------------------------------------------------

    def _enumerate(self):
        f = self.field
        out = []
        seen = set()
        for a in f.elements():
            for b in f.elements():
                for c in f.elements():
                    for d in f.elements():
                        det = f.sub(f.mul(a, d), f.mul(b, c))
                        if det == f.zero:
                            continue
                        if self.name == "SL2" and det != f.one:
                            continue
                        m = ((a, b), (c, d))
                        if self.name == "PGL2":
                            m = self.canonical(m)
                            if m in seen:
                                continue
                            seen.add(m)
                        out.append(m)
        return tuple(out)

    def canonical(self, m):
        """Scale projective representatives so the first nonzero entry is 1."""
        if self.name != "PGL2":
            return m
        f = self.field
        for v in (m[0][0], m[0][1], m[1][0], m[1][1]):
            if v != f.zero:
                s = f.inv(v)
                return (
                    (f.mul(m[0][0], s), f.mul(m[0][1], s)),
                    (f.mul(m[1][0], s), f.mul(m[1][1], s)),
                )
        raise ValueError("zero matrix")

    def _conjugacy_classes(self):
        class_of = {}
        classes = []
        for m in self.elements:
            if m in class_of:
                continue
            orbit = set()
            for g in self.elements:
                orbit.add(self.canonical(_mmul(self.field, _mmul(self.field, g, m), self._inv[g])))
            idx = len(classes)
            for y in orbit:
                class_of[y] = idx
            classes.append(ConjClass(rep=m, size=len(orbit), label=self.format_element(m)))
        return tuple(classes), class_of

    # -- element operations -----------------------------------------------------

    def mul(self, x, y):
        return self.canonical(_mmul(self.field, x, y))

    def inv(self, x):
        return self._inv[x]

    def conjugate(self, g, x):
        return self.canonical(_mmul(self.field, _mmul(self.field, g, x), self._inv[g]))

    def class_index(self, x) -> int:
        return self._class_of[x]

    def order(self) -> int:
        return len(self.elements)

    def format_element(self, m) -> str:
        f = self.field
        return "[[{},{}],[{},{}]]".format(
            f.encode(m[0][0]), f.encode(m[0][1]), f.encode(m[1][0]), f.encode(m[1][1])
        )

    def central_elements(self):
        f = self.field
        if self.name == "GL2":
            return tuple(
                ((c, f.zero), (f.zero, c)) for c in f.units()
            )
        if self.name == "SL2":
            out = [self.identity]
            minus = ((f.neg(f.one), f.zero), (f.zero, f.neg(f.one)))
            if minus != self.identity:
                out.append(minus)
            return tuple(out)
        return (self.identity,)

    def scalar_matrix(self, c):
        f = self.field
        return self.canonical(((c, f.zero), (f.zero, c)))

    def trace(self, m):
        return self.field.add(m[0][0], m[1][1])


def _prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise TooLargeError(f"q = {q} is not a prime power")
            return p, e
    raise TooLargeError("q must be >= 2")


def _ident(f):
    return ((f.one, f.zero), (f.zero, f.one))


def _mmul(f, x, y):
    (a, b), (c, d) = x
    (e, g), (h, i) = y
    return (
        (f.add(f.mul(a, e), f.mul(b, h)), f.add(f.mul(a, g), f.mul(b, i))),
        (f.add(f.mul(c, e), f.mul(d, h)), f.add(f.mul(c, g), f.mul(d, i))),
    )


def _minv(f, x):
    (a, b), (c, d) = x
    det = f.sub(f.mul(a, d), f.mul(b, c))
    di = f.inv(det)
    return (
        (f.mul(d, di), f.mul(f.neg(b), di)),
        (f.mul(f.neg(c), di), f.mul(a, di)),
    )


@lru_cache(maxsize=None)
def build_group(name: str, q: int) -> MatGroup:
    return MatGroup(name, q)


# -- class functions -----------------------------------------------------------


@dataclass
class ClassFunction:
    group: MatGroup
    values: tuple  # CycloNumber per class index

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise ValueError("one value per conjugacy class required")

    def value_of(self, element) -> CycloNumber:
        return self.values[self.group.class_index(element)]

    def at_identity(self) -> CycloNumber:
        return self.values[self.group.identity_class]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, s) -> "ClassFunction":
        s = s if isinstance(s, CycloNumber) else CycloNumber.from_rational(s)
        return ClassFunction(self.group, tuple(v * s for v in self.values))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.group is other.group
            and all(a == b for a, b in zip(self.values, other.values))
        )


def _same_group(f: ClassFunction, g: ClassFunction):
    if f.group is not g.group:
        raise ValueError("class functions on different groups")


def delta_cf(group: MatGroup) -> ClassFunction:
    vals = [CycloNumber.zero()] * len(group.classes)
    vals[group.identity_class] = CycloNumber.one()
    return ClassFunction(group, tuple(vals))


def convolve_cf(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """(f * g)(x) = sum over h in G of f(x h^-1) g(h), evaluated per class."""
    _same_group(f, g)
    grp = f.group
    out = []
    for cls in grp.classes:
        acc = CycloNumber.zero()
        for h in grp.elements:
            gv = g.value_of(h)
            if gv.is_zero():
                continue
            acc = acc + f.value_of(grp.mul(cls.rep, grp.inv(h))) * gv
        out.append(acc)
    return ClassFunction(grp, tuple(out))


def inner_cf(f: ClassFunction, g: ClassFunction) -> CycloNumber:
    """(1/|G|) sum over x of f(x) conj(g(x))."""
    _same_group(f, g)
    acc = CycloNumber.zero()
    for i, cls in enumerate(f.group.classes):
        term = f.values[i] * g.values[i].conjugate()
        acc = acc + term * CycloNumber.from_rational(cls.size)
    return acc * CycloNumber.from_rational(Fraction(1, f.group.order()))


def trace_function(group: MatGroup, psi: AddChar) -> ClassFunction:
    """psi(matrix trace), as a class function."""
    if group.name == "PGL2":
        raise ValueError("matrix trace is not well defined projectively")
    if (psi.p, psi.m) != (group.field.p, group.field.m):
        raise ValueError("additive character lives on the wrong field")
    return ClassFunction(
        group, tuple(psi.value(group.trace(cls.rep)) for cls in group.classes)
    )


# -- abstract torus glue ----------------------------------------------------------


@lru_cache(maxsize=None)
def _eigen_lookup(name: str, torus) -> dict:
    """Map eigenvalue-exponent pairs (dlogs of the two diagonal entries in the
    realization field) back to abstract torus elements."""
    real = realization(torus)
    weights = _TORUS_WEIGHTS[name]
    n = real.unit_order
    out = {}
    for e, exps in real.all_exponents().items():
        key = tuple(sum(w * a for w, a in zip(row, exps)) % n for row in weights)
        out[key] = e
    return out


def _embed_unit_dlog(group: MatGroup, torus, c) -> int:
    """dlog, in the realization field, of a base-field unit c."""
    real = realization(torus)
    base = group.field
    if real.field.m == base.m:
        return real.field.dlog(c)
    emb = get_embedding(base.p, base.m, real.field.m)
    return real.field.dlog(emb.image(c))


def abstract_from_eigen_exponents(group: MatGroup, torus, exps):
    """Abstract torus element whose two eigenvalues have the given dlogs
    (in the realization field)."""
    real = realization(torus)
    key = tuple(a % real.unit_order for a in exps)
    try:
        return _eigen_lookup(group.name, torus)[key]
    except KeyError:
        raise ValueError("no torus element has these eigenvalues") from None


def central_abstract(group: MatGroup, torus, c):
    """Abstract torus element realizing the central element c.I."""
    d = _embed_unit_dlog(group, torus, c)
    if group.name == "PGL2":
        d = 0
    return abstract_from_eigen_exponents(group, torus, (d, d))


def split_torus_char_values(group: MatGroup, theta: TorusChar) -> dict:
    """Concrete diagonal-torus character: matrix -> value, through the
    identity-twist realization."""
    torus = theta.torus
    if torus.w.length != 0:
        raise ValueError("need a character of the split (identity-twist) torus")
    real = realization(torus)
    f = group.field
    weights = _TORUS_WEIGHTS[group.name]
    gen = f.designated_generator()
    out = {}
    for e in torus.elements():
        exps = real.exponents(e)
        entries = [
            f.pow(gen, sum(w * a for w, a in zip(row, exps)) % (f.q - 1))
            for row in weights
        ]
        mat = group.canonical(((entries[0], f.zero), (f.zero, entries[1])))
        out[mat] = theta.value(e)
    return out


def hc_induction(group: MatGroup, theta_values: dict) -> ClassFunction:
    """Literal induced-character formula from the upper-triangular subgroup,
    with the torus character inflated over the unipotent radical."""
    f = group.field
    borel = group.borel
    out = []
    inv_b = CycloNumber.from_rational(Fraction(1, len(borel)))
    for cls in group.classes:
        acc = CycloNumber.zero()
        for g in group.elements:
            y = group.conjugate(g, cls.rep)
            if y in borel:
                diag = group.canonical(((y[0][0], f.zero), (f.zero, y[1][1])))
                acc = acc + theta_values[diag]
        out.append(acc * inv_b)
    return ClassFunction(group, tuple(out))


# -- induction tables ----------------------------------------------------------------


def _table_path(group: MatGroup):
    fname = f"{group.name.lower()}_q{group.q}.json"
    env = os.environ.get("LT_DATA_DIR")
    if env:
        cand = os.path.join(env, fname)
        if os.path.exists(cand):
            return cand
    try:
        res = resources.files("dltransfer.data").joinpath("dl_tables").joinpath(fname)
        if res.is_file():
            return res
    except (ModuleNotFoundError, FileNotFoundError):
        pass
    return None


def _load_table_rows(group: MatGroup) -> dict:
    path = _table_path(group)
    if path is None:
        return {}
    with open(path) if isinstance(path, str) else path.open() as fh:
        data = json.load(fh)
    if data.get("group") != group.name or data.get("q") != group.q:
        raise ValidationFailedError("header", "table file is for a different group")
    label_index = {cls.label: i for i, cls in enumerate(group.classes)}
    rows = {}
    for row in data["pairs"]:
        vals = [CycloNumber.zero()] * len(group.classes)
        for label, obj in row["values"].items():
            vals[label_index[label]] = CycloNumber.from_json_obj(obj)
        rows[row["pair"]] = ClassFunction(group, tuple(vals))
    return rows


@lru_cache(maxsize=None)
def dl_family(group: MatGroup) -> dict:
    """All available induction characters keyed by pair class, after the four
    validation gates."""
    pairs = enumerate_pair_classes(group.datum, group.frob)
    table_rows = _load_table_rows(group)
    family = {}
    provenance = {}
    for pc in pairs:
        if pc.w().length == 0:
            theta = pc.char()
            cf = hc_induction(group, split_torus_char_values(group, theta))
            family[pc] = cf
            provenance[pc] = "computed"
            if pc.label() in table_rows:
                if table_rows[pc.label()] != cf:
                    raise ValidationFailedError(
                        "split-row", f"{pc.label()} differs from parabolic induction"
                    )
        elif pc.label() in table_rows:
            family[pc] = table_rows[pc.label()]
            provenance[pc] = "ingested"
    _validate_family(group, family)
    dl_family_provenance[group.name, group.q] = provenance
    return family


dl_family_provenance: dict = {}


def _validate_family(group: MatGroup, family: dict):
    ctx = group.context
    # gate 1: degree formula
    for pc, cf in family.items():
        want = CycloNumber.from_rational(symbol_degree(ctx, pc.w()))
        if cf.at_identity() != want:
            raise ValidationFailedError("degree", f"{pc.label()}: {cf.at_identity()} != {want}")
    # gate 2: Gram matrix against the combinatorial pairing
    pcs = sorted(family, key=lambda c: (c.w_index, c.point.sort_key()))
    for i, p1 in enumerate(pcs):
        u1 = UniformFunction.symbol(ctx, p1)
        for p2 in pcs[i:]:
            brute = inner_cf(family[p1], family[p2])
            comb = pairing(u1, UniformFunction.symbol(ctx, p2))
            if brute != comb:
                raise ValidationFailedError(
                    "gram", f"<{p1.label()}, {p2.label()}>: {brute} != {comb}"
                )
    # gate 3: central character
    for pc, cf in family.items():
        torus = pc.torus()
        theta = pc.char()
        for z in group.central_elements():
            c = z[0][0] if group.name != "PGL2" else group.field.one
            zc = cf.value_of(group.canonical(z))
            want = theta.value(central_abstract(group, torus, c)) * cf.at_identity()
            if zc != want:
                raise ValidationFailedError(
                    "central", f"{pc.label()} at {group.format_element(z)}"
                )
    # gate 4 (split rows vs induction) is enforced during family assembly


def dl_character(group: MatGroup, pair: RationalPairClass) -> ClassFunction:
    family = dl_family(group)
    if pair not in family:
        raise MissingTableError(
            f"no induction table row for {pair.label()} on {group.name}, q={group.q}"
        )
    return family[pair]


def realize(group: MatGroup, u: UniformFunction) -> ClassFunction:
    """Linear extension of dl_character over a formal combination."""
    if u.context != group.context:
        raise ContextMismatchError("combination lives on a different group context")
    acc = ClassFunction(group, tuple([CycloNumber.zero()] * len(group.classes)))
    for pc, c in u.coeffs.items():
        acc = acc + dl_character(group, pc).scale(c)
    return acc


# -- class geometry helpers (used by the table generator and tests) -----------------


def class_type(group: MatGroup, rep):
    """Classify a GL2/SL2 conjugacy class by its eigenvalue pattern:
    ('central', a), ('central_unipotent', a), ('split_regular', (a, b)) or
    ('nonsplit_regular', x) with x a root of the characteristic polynomial
    in the quadratic extension."""
    if group.name == "PGL2":
        raise ValueError("projective classes have no well-defined eigenvalues")
    f = group.field
    tr = group.trace(rep)
    det = f.sub(f.mul(rep[0][0], rep[1][1]), f.mul(rep[0][1], rep[1][0]))
    roots = [t for t in f.elements() if f.add(f.mul(t, t), f.sub(det, f.mul(tr, t))) == f.zero]
    roots = sorted(set(roots), key=f.encode)
    if len(roots) == 2:
        return ("split_regular", (roots[0], roots[1]))
    if len(roots) == 1:
        a = roots[0]
        if rep == ((a, f.zero), (f.zero, a)):
            return ("central", a)
        return ("central_unipotent", a)
    big = get_field(f.p, 2 * f.m)
    emb = get_embedding(f.p, f.m, 2 * f.m)
    tr_b, det_b = emb.image(tr), emb.image(det)
    for x in big.elements():
        if big.add(big.mul(x, x), big.sub(det_b, big.mul(tr_b, x))) == big.zero:
            return ("nonsplit_regular", x)
    raise AssertionError("characteristic polynomial has no quadratic root")
