"""Concrete realization of abstract twisted tori inside field extensions.

Let M be the twist w.sigma and N its multiplicative order.  The norm-style
map sending a cocharacter v to the point with coordinates zeta^((sum_k q^k
M^k v)_i), zeta the designated generator of F_{q^N}, kills the image of
q.M - I and identifies the abstract cokernel with the concrete
twisted-rational points inside (F_{q^N}^x)^rank.  Because designated
generators are norm-compatible across extension degrees, realizations for
different w fit together coherently — the property that makes trace sums
over different tori comparable.
"""

from __future__ import annotations

from functools import lru_cache

from .ffield import FiniteField, get_field
from .finitetorus import FiniteTorus
from .lattice import IntMatrix


class RealizationError(ValueError):
    pass


class TorusRealization:
    """Exponent tables of the concrete points realizing each abstract element."""

    def __init__(self, torus: FiniteTorus):
        self.torus = torus
        fr = torus.frob
        e = 0
        m = fr.q
        while m > 1:
            m //= fr.p
            e += 1
        twist = torus.w.matrix * fr.sigma
        ident = IntMatrix.identity(twist.rows)
        order = 1
        cur = twist
        while cur != ident:
            cur = cur * twist
            order += 1
            if order > 24:
                raise RealizationError("twist matrix order too large")
        self.n_order = order
        self.field: FiniteField = get_field(fr.p, e * order)
        self.unit_order = fr.q**order - 1

        exp_matrix = IntMatrix.zero(twist.rows, twist.cols)
        power = ident
        qk = 1
        for _ in range(order):
            exp_matrix = exp_matrix + power.scale(qk)
            power = twist * power
            qk *= fr.q
        self.exponent_matrix = exp_matrix

        table = {}
        for el in torus.elements():
            v = torus.group.lift_coords(el)
            table[el] = tuple(a % self.unit_order for a in exp_matrix.apply(v))
        if len(set(table.values())) != torus.order:
            raise RealizationError("realization is not injective")
        self._exps = table
        self._zeta_powers: list | None = None

    def exponents(self, element) -> tuple[int, ...]:
        """Discrete logs (base the designated generator of F_{q^N}) of the
        coordinates of the realized point."""
        return self._exps[element]

    def all_exponents(self) -> dict:
        return dict(self._exps)

    def _powers(self):
        if self._zeta_powers is None:
            zeta = self.field.designated_generator()
            pws = [self.field.one]
            for _ in range(self.unit_order - 1):
                pws.append(self.field.mul(pws[-1], zeta))
            self._zeta_powers = pws
        return self._zeta_powers

    def coordinate_values(self, element) -> tuple:
        pws = self._powers()
        return tuple(pws[a] for a in self.exponents(element))

    def trace_in_base(self, element) -> int:
        """Matrix trace of the realized point, as an element of F_p.
        Only supported over a prime base field (q = p)."""
        if self.torus.frob.q != self.torus.frob.p:
            raise RealizationError("matrix trace realization needs a prime base field")
        f = self.field
        acc = f.zero
        for val in self.coordinate_values(element):
            acc = f.add(acc, val)
        if any(c != 0 for c in acc[1:]):
            raise RealizationError("matrix trace left the base field")
        return acc[0]


@lru_cache(maxsize=None)
def realization(torus: FiniteTorus) -> TorusRealization:
    return TorusRealization(torus)
