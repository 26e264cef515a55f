"""Integer-matrix and lattice-quotient layer: Smith normal form, cokernels,
coordinate groups, and torsion vectors."""

import random
from fractions import Fraction

import pytest

from dltransfer import IntMatrix, QmodZVec, cokernel, smith_normal_form
from dltransfer.lattice import (
    FinAbGroup,
    InfiniteCokernelError,
    NotUnimodularError,
    ShapeMismatchError,
    saturated_kernel,
)


def test_smith_frozen_example():
    # Oracle fixed by hand: row/column reduce [[-1,3],[3,-1]] -> pivot 1,
    # remaining determinant 8 up to sign.
    a = IntMatrix.from_rows([[-1, 3], [3, -1]])
    dec = smith_normal_form(a)
    assert dec.diagonal() == (1, 8)
    assert dec.u * a * dec.v == dec.d


def test_smith_diagonal_with_shared_factor():
    a = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert smith_normal_form(a).diagonal() == (1, 6)


def _is_unimodular(m: IntMatrix) -> bool:
    return m.det() in (1, -1)


def test_smith_random_decompositions():
    rng = random.Random(2024)
    for _ in range(200):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        a = IntMatrix.from_rows(
            [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        )
        dec = smith_normal_form(a)
        assert dec.u * a * dec.v == dec.d
        assert _is_unimodular(dec.u)
        assert _is_unimodular(dec.v)
        diag = dec.diagonal()
        for i in range(dec.d.rows):
            for j in range(dec.d.cols):
                if i != j:
                    assert dec.d[i, j] == 0
        assert all(x >= 0 for x in diag)
        for x, y in zip(diag, diag[1:]):
            if y != 0:
                assert x != 0 and y % x == 0
            # once a zero appears, everything after stays zero
            if x == 0:
                assert y == 0


def test_matrix_algebra_basics():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    c = IntMatrix.from_rows([[2, 0], [1, 1]])
    assert (a * b) * c == a * (b * c)
    assert (a * b).transpose() == b.transpose() * a.transpose()
    assert a.apply((1, 0)) == (1, 3)
    assert a.det() == -2
    with pytest.raises(ShapeMismatchError):
        a * IntMatrix.from_rows([[1, 2, 3]])


def test_unimodular_inverse():
    m = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert m.inverse_unimodular() * m == IntMatrix.identity(2)
    with pytest.raises(NotUnimodularError):
        IntMatrix.from_rows([[2, 0], [0, 1]]).inverse_unimodular()


def test_cokernel_orders():
    assert cokernel(IntMatrix.from_rows([[2, 0], [0, 3]])).order == 6
    assert cokernel(IntMatrix.from_rows([[-1, 3], [3, -1]])).order == 8
    assert cokernel(IntMatrix.identity(3)).order == 1
    with pytest.raises(InfiniteCokernelError):
        cokernel(IntMatrix.from_rows([[0]]))


def test_cokernel_projection_section_roundtrip():
    for a in (
        IntMatrix.from_rows([[-1, 3], [3, -1]]),
        IntMatrix.from_rows([[2, 0], [0, 4]]),
        IntMatrix.from_rows([[5]]),
    ):
        g = cokernel(a)
        elements = list(g.elements())
        assert len(elements) == g.order
        for e in elements:
            assert g.project(g.lift_coords(e)) == e
        # the presented relations really die in the quotient
        for j in range(a.cols):
            assert g.project(a.col(j)) == g.zero()


def test_finabgroup_addition_axioms():
    g = cokernel(IntMatrix.from_rows([[2, 0], [0, 4]]))
    els = list(g.elements())
    rng = random.Random(5)
    for _ in range(50):
        x, y, z = (rng.choice(els) for _ in range(3))
        assert g.add(x, y) == g.add(y, x)
        assert g.add(g.add(x, y), z) == g.add(x, g.add(y, z))
        assert g.add(x, g.neg(x)) == g.zero()
        assert g.add(x, g.zero()) == x


def test_saturated_kernel():
    a = IntMatrix.from_rows([[1, 1]])
    basis = saturated_kernel(a)
    assert len(basis) == 1
    v = basis[0]
    assert a.apply(v) == (0,)
    assert abs(v[0]) == 1 and v[0] == -v[1]


def test_qmodz_vector_algebra():
    y = QmodZVec.make([Fraction(1, 2), Fraction(2, 3)])
    assert y.order() == 6
    assert (y + (-y)).is_zero()
    assert y.scale(6).is_zero()
    assert not y.scale(3).is_zero()
    m = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert y.apply_int_matrix(m).entries == (Fraction(2, 3), Fraction(1, 2))
    # linearity of the matrix action
    z = QmodZVec.make([Fraction(1, 4), Fraction(0)])
    assert (y + z).apply_int_matrix(m) == y.apply_int_matrix(m) + z.apply_int_matrix(m)


def test_qmodz_label_roundtrip():
    y = QmodZVec.make([Fraction(1, 2), Fraction(0), Fraction(5, 6)])
    assert QmodZVec.from_label(y.label()) == y
    assert y.label() == "[1/2,0/1,5/6]"


def test_finabgroup_display_suppresses_trivial_factors():
    g = cokernel(IntMatrix.from_rows([[1, 0], [0, 6]]))
    assert g.invariant_factors == (1, 6)
    assert "6" in str(g)


def test_smith_determinism():
    a = IntMatrix.from_rows([[4, 6, 2], [6, 3, 9], [2, 9, 5]])
    d1 = smith_normal_form(a)
    d2 = smith_normal_form(a)
    assert d1.u == d2.u and d1.v == d2.v and d1.d == d2.d
