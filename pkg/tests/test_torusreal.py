"""Concrete realization of twisted tori inside extension fields: injectivity,
group-homomorphism property of the exponent map, and base-field traces."""

import pytest

from dltransfer import build_standard, fixed_points, split_frobenius, weyl_group
from dltransfer.torusreal import RealizationError, realization


def _torus(name, n, q, w_index):
    rd = build_standard(name, n)
    fr = split_frobenius(rd, q)
    w = weyl_group(rd).elements[w_index]
    return fixed_points(rd, fr, w)


def test_split_torus_realization_is_plain_dlog():
    torus = _torus("GL", 2, 3, 0)
    real = realization(torus)
    assert real.n_order == 1
    assert real.field.q == 3
    assert real.unit_order == 2
    # identity twist: exponent matrix is the identity (q^0 . M^0)
    assert real.exponent_matrix.entries == ((1, 0), (0, 1))


def test_twisted_torus_realization_field():
    torus = _torus("GL", 2, 3, 1)
    real = realization(torus)
    assert real.n_order == 2
    assert real.field.q == 9
    assert real.unit_order == 8
    # norm-style exponent matrix 1 + q.M for the coordinate swap
    assert real.exponent_matrix.entries == ((1, 3), (3, 1))


def test_realization_injective_and_homomorphic():
    for name, n, q, wi in (
        ("GL", 2, 3, 0),
        ("GL", 2, 3, 1),
        ("GL", 2, 5, 1),
        ("SL", 2, 3, 1),
        ("GL", 3, 3, 3),
    ):
        torus = _torus(name, n, q, wi)
        real = realization(torus)
        exps = real.all_exponents()
        assert len(set(exps.values())) == torus.order
        group = torus.group
        els = list(group.elements())
        n_unit = real.unit_order
        for a in els:
            for b in els:
                left = exps[group.add(a, b)]
                right = tuple((x + y) % n_unit for x, y in zip(exps[a], exps[b]))
                assert left == right
        assert exps[group.zero()] == (0,) * len(exps[group.zero()])


def test_coordinate_values_multiply():
    torus = _torus("GL", 2, 3, 1)
    real = realization(torus)
    f = real.field
    els = list(torus.elements())
    for a in els:
        for b in els:
            ca = real.coordinate_values(a)
            cb = real.coordinate_values(b)
            cab = real.coordinate_values(torus.group.add(a, b))
            assert cab == tuple(f.mul(x, y) for x, y in zip(ca, cb))


def test_swap_coordinates_are_frobenius_conjugate():
    """On the coordinate-swapped twisted torus the two realized coordinates
    are q-power conjugates: the point (t, t^q)."""
    torus = _torus("GL", 2, 3, 1)
    real = realization(torus)
    f = real.field
    for e in torus.elements():
        x, y = real.coordinate_values(e)
        assert y == f.pow(x, torus.frob.q)


def test_trace_in_base_matches_coordinate_sum():
    torus = _torus("GL", 2, 3, 1)
    real = realization(torus)
    f = real.field
    for e in torus.elements():
        x, y = real.coordinate_values(e)
        s = f.add(x, y)
        assert all(c == 0 for c in s[1:])
        assert real.trace_in_base(e) == s[0]


def test_trace_in_base_needs_prime_base():
    torus = _torus("GL", 2, 4, 0)
    real = realization(torus)
    with pytest.raises(RealizationError):
        real.trace_in_base(next(iter(torus.elements())))


def test_realizations_cached():
    t1 = _torus("GL", 2, 3, 1)
    t2 = _torus("GL", 2, 3, 1)
    assert realization(t1) is realization(t2)
