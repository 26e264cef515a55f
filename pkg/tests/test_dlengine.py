"""Symbolic induced-character combinations: exact coefficient assembly from a
gamma-vector, the transporter pairing, degrees, group orders, and comparison
reports."""

import random
from fractions import Fraction

import pytest

from dltransfer import (
    ComparisonReport,
    CycloNumber,
    GroupContext,
    IntMatrix,
    QmodZVec,
    StableFunction,
    UniformFunction,
    analyze,
    assemble,
    build_standard,
    compare,
    degree,
    delta,
    group_order,
    identity_morphism,
    pair_class,
    pairing,
    random_stable,
    root_of_unity,
    split_frobenius,
    symbol_degree,
    transfer,
    weyl_group,
)
from dltransfer.dlengine import group_order_p_prime
from dltransfer.stablefun import ContextMismatchError, InvalidMorphismError
from helpers import GL1, GL2


def _ctx(name, n, q):
    rd = build_standard(name, n)
    return GroupContext(rd, split_frobenius(rd, q))


def _pair(ctx, w, *fracs):
    return pair_class(ctx.datum, ctx.frob, w, QmodZVec.make([Fraction(*f) for f in fracs]))


def test_group_orders():
    assert group_order(GL2, 3) == 48
    assert group_order(GL2, 5) == 480
    assert group_order(build_standard("SL", 2), 3) == 24
    assert group_order(build_standard("SL", 2), 5) == 120
    assert group_order(build_standard("PGL", 2), 3) == 24
    assert group_order_p_prime(GL2, 3) == 16


def test_symbol_degrees_gl2_q3():
    ctx = _ctx("GL", 2, 3)
    wid, wsw = weyl_group(GL2).elements
    assert symbol_degree(ctx, wid) == Fraction(4)
    assert symbol_degree(ctx, wsw) == Fraction(-2)


def test_symbol_degrees_sl2_q5():
    ctx = _ctx("SL", 2, 5)
    wid, wsw = weyl_group(ctx.datum).elements
    # p'-part 24; split torus order 4, nonsplit 6
    assert symbol_degree(ctx, wid) == Fraction(6)
    assert symbol_degree(ctx, wsw) == Fraction(-4)


def test_assemble_delta_gl2_q3_frozen_coefficients():
    """Exact coefficient vector of the assembled delta function on GL(2, F_3):
    eight canonical pairs, coefficients summing against symbol degrees to 1."""
    ctx = _ctx("GL", 2, 3)
    m = identity_morphism(GL2)
    u = assemble(m, ctx.frob, ctx.frob, delta(ctx))
    wid, wsw = weyl_group(GL2).elements

    want = {
        _pair(ctx, wid, (0, 1), (0, 1)): Fraction(1, 24),
        _pair(ctx, wid, (0, 1), (1, 2)): Fraction(1, 12),
        _pair(ctx, wid, (1, 2), (1, 2)): Fraction(1, 24),
        _pair(ctx, wsw, (0, 1), (0, 1)): Fraction(-1, 48),
        _pair(ctx, wsw, (1, 2), (1, 2)): Fraction(-1, 48),
        _pair(ctx, wsw, (1, 8), (3, 8)): Fraction(-1, 24),
        _pair(ctx, wsw, (1, 4), (3, 4)): Fraction(-1, 24),
        _pair(ctx, wsw, (5, 8), (7, 8)): Fraction(-1, 24),
    }
    assert set(u.coeffs) == set(want)
    for k, c in want.items():
        assert u.coefficient(k) == CycloNumber.from_rational(c)
    assert degree(u) == CycloNumber.one()


def test_assemble_delta_degree_one_elsewhere():
    for name, q in (("SL", 3), ("PGL", 3)):
        ctx = _ctx(name, 2, q)
        u = assemble(identity_morphism(ctx.datum), ctx.frob, ctx.frob, delta(ctx))
        assert degree(u) == CycloNumber.one()


def test_assemble_is_linear_in_the_gamma_vector():
    ctx = _ctx("GL", 2, 3)
    m = identity_morphism(GL2)
    rng = random.Random(7)
    f = random_stable(ctx, rng)
    g = random_stable(ctx, rng)
    u = assemble(m, ctx.frob, ctx.frob, f + g)
    v = assemble(m, ctx.frob, ctx.frob, f) + assemble(m, ctx.frob, ctx.frob, g)
    assert compare(u, v).equal


def test_assemble_matches_transfer_for_one_seed():
    """Assembling through a morphism equals assembling its transferred
    gamma-vector through the identity of the target."""
    m = analyze(GL2, GL1, IntMatrix.from_rows([[1, 1]]))
    fr_s = split_frobenius(GL2, 3)
    fr_t = split_frobenius(GL1, 3)
    f = random_stable(GroupContext(GL2, fr_s), random.Random(123))
    u = assemble(m, fr_s, fr_t, f)
    v = assemble(
        identity_morphism(GL1), fr_t, fr_t, transfer(m, fr_s, fr_t, f)
    )
    report = compare(u, v)
    assert report.equal and bool(report)


def test_assemble_rejects_bad_inputs():
    ctx3 = _ctx("GL", 2, 3)
    ctx5 = _ctx("GL", 2, 5)
    with pytest.raises(ContextMismatchError):
        assemble(identity_morphism(GL2), ctx5.frob, ctx5.frob, delta(ctx3))
    bad = analyze(GL2, GL2, IntMatrix.from_rows([[1, 0], [0, 2]]))
    with pytest.raises(InvalidMorphismError):
        assemble(bad, ctx3.frob, ctx3.frob, delta(ctx3))


def test_pairing_diagonal_and_off_diagonal():
    """<K, K> counts the twisted stabilizer; distinct canonical symbols are
    orthogonal."""
    ctx = _ctx("GL", 2, 3)
    wid, wsw = weyl_group(GL2).elements
    k_triv = UniformFunction.symbol(ctx, _pair(ctx, wid, (0, 1), (0, 1)))
    k_half = UniformFunction.symbol(ctx, _pair(ctx, wid, (0, 1), (1, 2)))
    k_swap = UniformFunction.symbol(ctx, _pair(ctx, wsw, (0, 1), (0, 1)))
    two = CycloNumber.from_rational(2)
    assert pairing(k_triv, k_triv) == two
    assert pairing(k_half, k_half) == CycloNumber.one()
    assert pairing(k_swap, k_swap) == two
    assert pairing(k_triv, k_half).is_zero()
    assert pairing(k_triv, k_swap).is_zero()


def test_pairing_is_sesquilinear():
    ctx = _ctx("GL", 2, 3)
    wid, _ = weyl_group(GL2).elements
    k = UniformFunction.symbol(ctx, _pair(ctx, wid, (0, 1), (0, 1)))
    z = root_of_unity(8, 1)
    base = pairing(k, k)
    assert pairing(k.scale(z), k) == z * base
    assert pairing(k, k.scale(z)) == z.conjugate() * base
    assert pairing(k + k, k) == base + base


def test_uniform_function_drops_zero_coefficients():
    ctx = _ctx("GL", 2, 3)
    wid, _ = weyl_group(GL2).elements
    k = _pair(ctx, wid, (0, 1), (0, 1))
    u = UniformFunction(ctx, {k: CycloNumber.zero()})
    assert u.is_zero()
    v = UniformFunction.symbol(ctx, k) + UniformFunction.symbol(ctx, k).scale(-1)
    assert v.is_zero() and v.coefficient(k).is_zero()


def test_compare_reports_differences_by_label():
    ctx = _ctx("GL", 2, 3)
    wid, wsw = weyl_group(GL2).elements
    k1 = _pair(ctx, wid, (0, 1), (0, 1))
    k2 = _pair(ctx, wsw, (0, 1), (0, 1))
    u = UniformFunction.symbol(ctx, k1)
    v = UniformFunction.symbol(ctx, k1) + UniformFunction.symbol(ctx, k2)
    report = compare(u, v)
    assert isinstance(report, ComparisonReport)
    assert not report.equal and not bool(report)
    assert set(report.diffs) == {k2.label()}
    cu, cv = report.diffs[k2.label()]
    assert cu.is_zero() and cv == CycloNumber.one()


def test_labels_are_stable_strings():
    ctx = _ctx("GL", 2, 3)
    u = assemble(identity_morphism(GL2), ctx.frob, ctx.frob, delta(ctx))
    lab = u.labels()
    assert len(lab) == 8
    assert all(isinstance(k, str) for k in lab)
