"""Geometric semisimple classes as Weyl orbits of torsion points, and
rational classes of (w, character) pairs.

A geometric class is the W-orbit of a tame torsion point that is stable
under at least one twisted Frobenius; its canonical representative is the
orbit-least point under the per-coordinate (denominator, numerator) order.
A rational pair class is the orbit of (w, point) under simultaneous twisted
conjugation of w and transport of the point; both kinds of class carry
deterministic string labels used as serialization keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .finitetorus import (
    FiniteTorus,
    FrobeniusData,
    TameChar,
    TorusChar,
    fixed_points,
    split_frobenius,
)
from .lattice import QmodZVec
from .rootdata import RootDatum, WeylElement, weyl_group


class NotStableError(ValueError):
    pass


def twisted_conjugate(rd: RootDatum, fr: FrobeniusData, x: WeylElement, w: WeylElement) -> WeylElement:
    """x . w . sigma(x)^-1; plain conjugation when split."""
    return _twisted_conj_element(rd, fr, x, w)


def _twisted_conj_element(rd: RootDatum, fr: FrobeniusData, x: WeylElement, w: WeylElement) -> WeylElement:
    wg = weyl_group(rd)
    s = fr.sigma
    sx = s * x.matrix * s.inverse_unimodular()
    return wg.by_matrix(x.matrix * w.matrix * sx.inverse_unimodular())


def stable_under(rd: RootDatum, fr: FrobeniusData, w: WeylElement, y: QmodZVec) -> bool:
    """(q (M_w sigma)^T - 1) y = 0 in (Q/Z)^rank."""
    bt = (w.matrix * fr.sigma).scale(fr.q).transpose()
    return y.apply_int_matrix(bt) == y


def canonical_point(rd: RootDatum, y: QmodZVec) -> QmodZVec:
    """Least point of the W-orbit of y."""
    wg = weyl_group(rd)
    return min((w.act_char_point(y) for w in wg.elements), key=lambda z: z.sort_key())


@dataclass(frozen=True)
class GeomClass:
    datum: RootDatum
    frob: FrobeniusData
    canonical: QmodZVec
    witness_index: int = field(compare=False)

    def label(self) -> str:
        return "θ̃=" + self.canonical.label()

    def witness(self) -> WeylElement:
        return weyl_group(self.datum).elements[self.witness_index]

    def representative(self) -> TameChar:
        return TameChar(point=self.canonical, p=self.frob.p)

    def orbit(self) -> set:
        wg = weyl_group(self.datum)
        return {w.act_char_point(self.canonical) for w in wg.elements}


def geometric_class(rd: RootDatum, fr: FrobeniusData, y: QmodZVec) -> GeomClass:
    c = canonical_point(rd, y)
    wg = weyl_group(rd)
    witness = next(
        (i for i, w in enumerate(wg.elements) if stable_under(rd, fr, w, c)), None
    )
    if witness is None:
        raise NotStableError(f"point {c.label()} is stable under no twisted Frobenius")
    return GeomClass(datum=rd, frob=fr, canonical=c, witness_index=witness)


def kappa(w: WeylElement, theta: TorusChar) -> GeomClass:
    """Geometric class attached to the pair (w, theta)."""
    torus = theta.torus
    if torus.w != w:
        raise ValueError("character does not live on the w-twisted torus")
    return geometric_class(torus.base, torus.frob, theta.point)


@lru_cache(maxsize=None)
def enumerate_classes(rd: RootDatum, fr: FrobeniusData) -> tuple[GeomClass, ...]:
    """All geometric classes: torsion points stable under some twist, up to W."""
    wg = weyl_group(rd)
    seen: dict = {}
    for w in wg.elements:
        torus = fixed_points(rd, fr, w)
        for chi in torus.characters():
            c = canonical_point(rd, chi.point)
            if c.entries not in seen:
                witness = next(
                    i for i, u in enumerate(wg.elements) if stable_under(rd, fr, u, c)
                )
                seen[c.entries] = GeomClass(rd, fr, c, witness)
    return tuple(sorted(seen.values(), key=lambda g: g.canonical.sort_key()))


def rho_ss(m, c: GeomClass) -> GeomClass:
    """Transport a class on the target side to the source side through the
    transpose of the morphism matrix."""
    if c.datum != m.target:
        raise ValueError("class does not live on the morphism's target datum")
    if not c.frob.is_split():
        raise NotImplementedError("twisted-sigma transport is not wired through morphisms")
    y = c.canonical.apply_int_matrix(m.matrix.transpose())
    src_frob = split_frobenius(m.source, c.frob.q)
    return geometric_class(m.source, src_frob, y)


@dataclass(frozen=True)
class RationalPairClass:
    datum: RootDatum
    frob: FrobeniusData
    w_index: int
    point: QmodZVec

    def label(self) -> str:
        w = weyl_group(self.datum).elements[self.w_index]
        rows = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in w.matrix.entries)
        return f"w=[{rows}];θ={self.point.label()}"

    def w(self) -> WeylElement:
        return weyl_group(self.datum).elements[self.w_index]

    def torus(self) -> FiniteTorus:
        return fixed_points(self.datum, self.frob, self.w())

    def char(self) -> TorusChar:
        return self.torus().char_from_point(self.point)

    def geometric(self) -> GeomClass:
        return geometric_class(self.datum, self.frob, self.point)


def pair_class(rd: RootDatum, fr: FrobeniusData, w: WeylElement, y: QmodZVec) -> RationalPairClass:
    """Canonicalize (w, y) under x . (w, y) = (x w sigma(x)^-1, x.y)."""
    wg = weyl_group(rd)
    best = None
    for x in wg.elements:
        w2 = _twisted_conj_element(rd, fr, x, w)
        y2 = x.act_char_point(y)
        key = (w2.matrix.entries, y2.sort_key())
        if best is None or key < best[0]:
            best = (key, wg.index(w2), y2)
    return RationalPairClass(datum=rd, frob=fr, w_index=best[1], point=best[2])


def pair_class_of_char(theta: TorusChar) -> RationalPairClass:
    t = theta.torus
    return pair_class(t.base, t.frob, t.w, theta.point)


@lru_cache(maxsize=None)
def enumerate_pair_classes(rd: RootDatum, fr: FrobeniusData) -> tuple[RationalPairClass, ...]:
    wg = weyl_group(rd)
    seen: dict = {}
    for w in wg.elements:
        torus = fixed_points(rd, fr, w)
        for chi in torus.characters():
            c = pair_class(rd, fr, w, chi.point)
            seen.setdefault((c.w_index, c.point.entries), c)
    return tuple(sorted(seen.values(), key=lambda c: (c.w_index, c.point.sort_key())))


def transporter_count(
    rd: RootDatum,
    fr: FrobeniusData,
    w1: WeylElement,
    y1: QmodZVec,
    w2: WeylElement,
    y2: QmodZVec,
) -> int:
    """#{x in W : x.(w1, y1) = (w2, y2)} under twisted conjugation/transport."""
    wg = weyl_group(rd)
    count = 0
    for x in wg.elements:
        if (
            _twisted_conj_element(rd, fr, x, w1) == w2
            and x.act_char_point(y1) == y2
        ):
            count += 1
    return count
