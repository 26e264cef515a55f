"""Formal combinations of twisted-induction symbols and the coefficient-level
verification machinery.

A UniformFunction is a finite sum of symbols R indexed by canonical rational
pair classes, with exact cyclotomic coefficients.  `assemble` expands the
main induction formula for a stable function through a morphism:

    (1/|W'|) sum over w' of (-1)^length(w') q^(-nu') R_{w'}(pushforward f_w)

with each R_{w'}(g) expanded over characters as (1/|T'|) g-hat(theta') per
symbol.  Two such combinations are compared coefficient-by-coefficient; the
symbols also carry an orthogonality pairing (transporter count) and a degree
evaluation (signed p'-part of the group order over the torus order), giving
independent cross-checks against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloNumber
from .dualmorph import DualMorphism
from .finitetorus import fixed_points, fourier_coefficient, pushforward
from .lattice import IntMatrix
from .rootdata import RootDatum, WeylElement, weyl_group
from .ssclasses import RationalPairClass, pair_class_of_char, transporter_count
from .stablefun import (
    ContextMismatchError,
    GroupContext,
    InvalidMorphismError,
    StableFunction,
    extract_fw,
)


class NoOrderFormulaError(ValueError):
    pass


@dataclass
class UniformFunction:
    context: GroupContext
    coeffs: dict  # RationalPairClass -> CycloNumber; keys canonical, zeros dropped

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if not v.is_zero()}

    @staticmethod
    def zero(context: GroupContext) -> "UniformFunction":
        return UniformFunction(context, {})

    @staticmethod
    def symbol(context: GroupContext, pair: RationalPairClass) -> "UniformFunction":
        return UniformFunction(context, {pair: CycloNumber.one()})

    def coefficient(self, pair: RationalPairClass) -> CycloNumber:
        return self.coeffs.get(pair, CycloNumber.zero())

    def __add__(self, other: "UniformFunction") -> "UniformFunction":
        if self.context != other.context:
            raise ContextMismatchError("different group contexts")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, CycloNumber.zero()) + v
        return UniformFunction(self.context, out)

    def scale(self, s) -> "UniformFunction":
        s = s if isinstance(s, CycloNumber) else CycloNumber.from_rational(s)
        return UniformFunction(self.context, {k: v * s for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def labels(self) -> dict:
        return {k.label(): v for k, v in self.coeffs.items()}


def assemble(
    m: DualMorphism, fr, fr_target, f: StableFunction
) -> UniformFunction:
    """Expand the induction formula for f through the morphism, accumulating
    exact coefficients on canonical pair classes of the target group."""
    if f.context.datum != m.source or f.context.frob != fr:
        raise ContextMismatchError("function does not live on the morphism's source")
    if not m.valid:
        raise InvalidMorphismError("morphism admits no lift for some target Weyl element")
    a = m.matrix
    if a * fr.sigma.scale(fr.q) != fr_target.sigma.scale(fr_target.q) * a:
        raise ContextMismatchError("Frobenius data are not intertwined by the matrix")

    target_ctx = GroupContext(m.target, fr_target)
    wg_t = weyl_group(m.target)
    nu = m.target.num_positive()
    q = fr_target.q
    base = Fraction(1, len(wg_t) * q**nu)

    coeffs: dict = {}
    for wp in wg_t.elements:
        w = m.lift_representative(wp)
        src_torus = fixed_points(m.source, fr, w)
        tgt_torus = fixed_points(m.target, fr_target, wp)
        fw = extract_fw(f, w)
        fwp = pushforward(m, src_torus, tgt_torus, fw)
        sign = -1 if wp.length % 2 else 1
        scalar = CycloNumber.from_rational(base * sign * Fraction(1, tgt_torus.order))
        for theta in tgt_torus.characters():
            c = fourier_coefficient(fwp, theta)
            if c.is_zero():
                continue
            key = pair_class_of_char(theta)
            coeffs[key] = coeffs.get(key, CycloNumber.zero()) + c * scalar
    return UniformFunction(target_ctx, coeffs)


def pairing(u: UniformFunction, v: UniformFunction) -> CycloNumber:
    """Sesquilinear extension of <R_K, R_L> = #{x in W : x.K = L}."""
    if u.context != v.context:
        raise ContextMismatchError("different group contexts")
    rd, fr = u.context.datum, u.context.frob
    acc = CycloNumber.zero()
    for k1, c1 in u.coeffs.items():
        for k2, c2 in v.coeffs.items():
            n = transporter_count(rd, fr, k1.w(), k1.point, k2.w(), k2.point)
            if n:
                acc = acc + c1 * c2.conjugate() * CycloNumber.from_rational(n)
    return acc


def _fixed_space_dim(m: IntMatrix) -> int:
    """dim over Q of ker(m - 1)."""
    n = m.rows
    rows = [[Fraction(m[i, j] - (1 if i == j else 0)) for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return n - rank


def group_order(rd: RootDatum, q: int) -> int:
    """|G^F| for split data: q^nu (q-1)^rank sum over W of q^length(w)."""
    wg = weyl_group(rd)
    poincare = sum(q**w.length for w in wg.elements)
    return q ** rd.num_positive() * (q - 1) ** rd.rank * poincare


def group_order_p_prime(rd: RootDatum, q: int) -> int:
    wg = weyl_group(rd)
    return (q - 1) ** rd.rank * sum(q**w.length for w in wg.elements)


def symbol_degree(context: GroupContext, w: WeylElement) -> Fraction:
    """Degree of one induction symbol of twist w: sign times |G^F|_p' over the
    twisted torus order; signs from the Q-ranks of fixed spaces."""
    if not context.frob.is_split():
        raise NoOrderFormulaError("group order formula is registered for split data only")
    rd, fr = context.datum, context.frob
    eps_g = (-1) ** rd.rank
    eps_t = (-1) ** _fixed_space_dim(w.matrix * fr.sigma)
    torus = fixed_points(rd, fr, w)
    return Fraction(eps_g * eps_t * group_order_p_prime(rd, fr.q), torus.order)


def degree(u: UniformFunction) -> CycloNumber:
    """Value at the identity element: sum of coefficients times symbol degrees."""
    acc = CycloNumber.zero()
    for k, c in u.coeffs.items():
        acc = acc + c * CycloNumber.from_rational(symbol_degree(u.context, k.w()))
    return acc


@dataclass
class ComparisonReport:
    equal: bool
    diffs: dict  # label -> (coefficient in u, coefficient in v)

    def __bool__(self) -> bool:
        return self.equal


def compare(u: UniformFunction, v: UniformFunction) -> ComparisonReport:
    if u.context != v.context:
        raise ContextMismatchError("different group contexts")
    diffs = {}
    for k in set(u.coeffs) | set(v.coeffs):
        cu, cv = u.coefficient(k), v.coefficient(k)
        if cu != cv:
            diffs[k.label()] = (cu, cv)
    return ComparisonReport(equal=not diffs, diffs=diffs)
