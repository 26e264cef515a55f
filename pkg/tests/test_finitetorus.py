"""Twisted finite tori: orders and invariant factors, character theory
(orthogonality, Fourier coefficients, convolution), tame stabilizers, and
the pushforward/pullback adjunction along a morphism."""

import random
from fractions import Fraction

import pytest

from dltransfer import (
    CycloNumber,
    IntMatrix,
    QmodZVec,
    TameChar,
    TorusFunction,
    analyze,
    build_standard,
    convolve,
    fixed_points,
    fourier_coefficient,
    pullback_char,
    pushforward,
    split_frobenius,
    tame_stabilizers,
    weyl_group,
)
from dltransfer.finitetorus import NotTameError, TorusMismatchError
from helpers import GL1, GL2


def _tori(name, n, q):
    rd = build_standard(name, n)
    fr = split_frobenius(rd, q)
    wg = weyl_group(rd)
    return rd, fr, [fixed_points(rd, fr, w) for w in wg.elements]


def test_twisted_torus_orders():
    _, _, (t_id, t_swap) = _tori("GL", 2, 3)
    assert t_id.order == 4  # (q-1)^2
    assert t_swap.order == 8  # q^2 - 1
    assert t_swap.group.nontrivial_factors() == (8,)  # cyclic

    _, _, (s_id, s_swap) = _tori("SL", 2, 3)
    assert s_id.order == 2  # q - 1
    assert s_swap.order == 4  # q + 1

    _, _, (p_id, p_swap) = _tori("PGL", 2, 3)
    assert p_id.order == 2
    assert p_swap.order == 4

    _, _, (g5_id, g5_swap) = _tori("GL", 2, 5)
    assert g5_id.order == 16 and g5_swap.order == 24


def test_character_count_equals_order():
    for name, n, q in (("GL", 2, 3), ("SL", 2, 3), ("GL", 2, 5), ("GL", 1, 7)):
        for torus in _tori(name, n, q)[2]:
            chars = torus.characters()
            assert len(chars) == torus.order
            points = {c.point.entries for c in chars}
            assert len(points) == torus.order


def test_character_orthogonality():
    for torus in _tori("GL", 2, 3)[2]:
        chars = torus.characters()
        for c1 in chars:
            for c2 in chars:
                acc = CycloNumber.zero()
                for e in torus.elements():
                    acc = acc + c1.value(e) * c2.value_inverse(e)
                want = torus.order if c1.point == c2.point else 0
                assert acc == CycloNumber.from_rational(want)


def test_character_is_multiplicative():
    torus = _tori("GL", 2, 3)[2][1]  # the order-8 twisted torus
    rng = random.Random(12)
    els = list(torus.elements())
    for chi in torus.characters():
        assert chi.value(torus.identity()) == CycloNumber.one()
        for _ in range(10):
            a, b = rng.choice(els), rng.choice(els)
            assert chi.value(torus.group.add(a, b)) == chi.value(a) * chi.value(b)
        for e in els:
            assert chi.value_inverse(e) == chi.value(e).conjugate()


def test_char_point_must_be_frobenius_stable():
    torus = _tori("GL", 2, 3)[2][1]
    with pytest.raises(NotTameError):
        torus.char_from_point(QmodZVec.make([Fraction(1, 2), Fraction(0)]))


def test_char_inverse_and_order():
    torus = _tori("GL", 2, 3)[2][0]
    for chi in torus.characters():
        inv = chi.inverse()
        for e in torus.elements():
            assert inv.value(e) == chi.value_inverse(e)
        assert chi.order == chi.point.order()


def test_fourier_coefficients_pick_out_characters():
    torus = _tori("GL", 2, 3)[2][1]
    chars = torus.characters()
    for c1 in chars:
        f = TorusFunction.from_char(c1)
        for c2 in chars:
            want = torus.order if c1.point == c2.point else 0
            assert fourier_coefficient(f, c2) == CycloNumber.from_rational(want)


def test_delta_function_has_flat_fourier_transform():
    torus = _tori("GL", 2, 3)[2][0]
    d = TorusFunction.delta(torus)
    assert d.total_mass() == CycloNumber.one()
    for chi in torus.characters():
        assert fourier_coefficient(d, chi) == CycloNumber.one()


def test_convolution_of_characters():
    torus = _tori("SL", 2, 3)[2][1]
    chars = torus.characters()
    for c1 in chars:
        f1 = TorusFunction.from_char(c1)
        for c2 in chars:
            f2 = TorusFunction.from_char(c2)
            conv = convolve(f1, f2)
            if c1.point == c2.point:
                assert conv == f1.scale(torus.order)
            else:
                assert conv == TorusFunction.zero(torus)


def test_convolution_mismatched_tori_rejected():
    tori = _tori("GL", 2, 3)[2]
    with pytest.raises(TorusMismatchError):
        convolve(TorusFunction.delta(tori[0]), TorusFunction.delta(tori[1]))


def test_tame_stabilizer_examples():
    # full torus point fixed by everything, reflection route included
    w_all, w_circ = tame_stabilizers(GL2, TameChar(QmodZVec.make([0, 0]), p=3))
    assert w_all.order == 2 and w_circ.order == 2
    # generic point: trivial stabilizer
    w_all, w_circ = tame_stabilizers(
        GL2, TameChar(QmodZVec.make([Fraction(1, 2), 0]), p=3)
    )
    assert w_all.order == 1 and w_circ.order == 1
    # central point: stabilized, and the root still pairs to zero
    w_all, w_circ = tame_stabilizers(
        GL2, TameChar(QmodZVec.make([Fraction(1, 2), Fraction(1, 2)]), p=3)
    )
    assert w_all.order == 2 and w_circ.order == 2
    # the classic asymmetric case: order-two point on the rank-one datum
    # with coroot (1): stabilized by the flip, but <point, coroot> = 1/2 != 0
    sl2 = build_standard("SL", 2)
    w_all, w_circ = tame_stabilizers(sl2, TameChar(QmodZVec.make([Fraction(1, 2)]), p=3))
    assert w_all.order == 2 and w_circ.order == 1
    # on the dual datum the coroot is (2), so the pairing vanishes
    pgl2 = build_standard("PGL", 2)
    w_all, w_circ = tame_stabilizers(pgl2, TameChar(QmodZVec.make([Fraction(1, 2)]), p=3))
    assert w_all.order == 2 and w_circ.order == 2


def test_tame_char_rejects_p_torsion():
    with pytest.raises(NotTameError):
        TameChar(QmodZVec.make([Fraction(1, 3)]), p=3)


def test_pushforward_pullback_adjunction():
    """Summing a pushforward against a character equals summing the original
    function against the pulled-back character."""
    m = analyze(GL2, GL1, IntMatrix.from_rows([[1, 1]]))
    q = 3
    fr_s = split_frobenius(GL2, q)
    fr_t = split_frobenius(GL1, q)
    wg_s = weyl_group(GL2)
    wg_t = weyl_group(GL1)
    rng = random.Random(8)
    for wp in wg_t.elements:
        target = fixed_points(GL1, fr_t, wp)
        for w in m.lift(wp):
            source = fixed_points(GL2, fr_s, w)
            values = {
                e: CycloNumber.from_rational(rng.randrange(-3, 4))
                for e in source.elements()
            }
            f = TorusFunction(source, values)
            pushed = pushforward(m, source, target, f)
            for chi in target.characters():
                lhs = fourier_coefficient(pushed, chi)
                rhs = fourier_coefficient(f, pullback_char(m, source, target, chi))
                assert lhs == rhs


def test_pullback_char_point_formula():
    m = analyze(GL2, GL1, IntMatrix.from_rows([[1, 1]]))
    fr_s = split_frobenius(GL2, 3)
    fr_t = split_frobenius(GL1, 3)
    source = fixed_points(GL2, fr_s, weyl_group(GL2).identity)
    target = fixed_points(GL1, fr_t, weyl_group(GL1).identity)
    for chi in target.characters():
        pulled = pullback_char(m, source, target, chi)
        assert pulled.point == chi.point.apply_int_matrix(m.matrix.transpose())
        # pointwise: pulled(x) = chi(A x)
        hom_vals = {
            e: chi.value(target.group.project(m.matrix.apply(source.group.lift_coords(e))))
            for e in source.elements()
        }
        for e in source.elements():
            assert pulled.value(e) == hom_vals[e]
