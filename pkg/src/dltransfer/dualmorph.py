"""Morphisms between root data presented by their torus matrix.

A morphism from the datum of G to the datum of G' is stored as the integer
matrix A: X_*(T) -> X_*(T') (columns index the source lattice).  From A we
derive the Levi subsystem it centralizes, the stabilizer subgroup W_L, and
for each target Weyl element w' the full set of source elements w with
A . M_w = M_{w'} . A.  The morphism is *valid* when every w' admits such a
lift; each nonempty solution set is automatically a single W_L-coset whose
members normalize W_L (asserted in the test suite, not re-checked per call).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import IntMatrix, ShapeMismatchError
from .rootdata import RootDatum, WeylElement, WeylSubgroup, build_standard, weyl_group


class NoLiftError(ValueError):
    pass


class DatumMismatchError(ValueError):
    pass


class WeightCountMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class DualMorphism:
    source: RootDatum
    target: RootDatum
    matrix: IntMatrix  # X_*(T_source) -> X_*(T_target)
    levi_root_indices: tuple[int, ...]
    w_l: WeylSubgroup
    valid: bool
    # lift_table[i] = sorted source-element indices solving A.M_w = M_{w'_i}.A
    lift_table: tuple[tuple[int, ...], ...]

    def lift(self, w_prime: WeylElement) -> list[WeylElement]:
        """All w with A.M_w = M_{w'}.A, lexicographically least matrix first."""
        wg = weyl_group(self.source)
        wg_t = weyl_group(self.target)
        sols = self.lift_table[wg_t.index(w_prime)]
        if not sols:
            raise NoLiftError("no source Weyl element lifts the given target element")
        return [wg.elements[i] for i in sols]

    def lift_representative(self, w_prime: WeylElement) -> WeylElement:
        return self.lift(w_prime)[0]

    def levi_reflection_subgroup(self) -> WeylSubgroup:
        """Subgroup generated by reflections in the Levi roots (independent
        route to W_L, used for cross-validation)."""
        wg = weyl_group(self.source)
        mats = [self.source.reflection_matrix(i) for i in self.levi_root_indices]
        return wg.subgroup_generated(mats)

    def apply_cochar(self, v) -> tuple[int, ...]:
        return self.matrix.apply(v)

    def transpose_matrix(self) -> IntMatrix:
        """Matrix of the induced map on target characters, X*(T') -> X*(T)."""
        return self.matrix.transpose()

    def to_json_obj(self):
        return {
            "source": self.source.to_json_obj(),
            "target": self.target.to_json_obj(),
            "matrix": [[self.matrix[i, j] for j in range(self.matrix.cols)]
                       for i in range(self.matrix.rows)],
        }


def analyze(source: RootDatum, target: RootDatum, a: IntMatrix) -> DualMorphism:
    """Derive Levi data, W_L, the lift table, and validity for the matrix A."""
    if a.rows != target.rank or a.cols != source.rank:
        raise ShapeMismatchError(
            f"matrix must be {target.rank} x {source.rank}, got {a.rows} x {a.cols}"
        )
    levi = tuple(
        i for i in range(len(source.roots))
        if all(x == 0 for x in a.apply(source.coroots[i]))
    )
    wg = weyl_group(source)
    wg_t = weyl_group(target)

    stab = frozenset(i for i, w in enumerate(wg.elements) if a * w.matrix == a)
    w_l = WeylSubgroup(wg, stab)

    table = []
    valid = True
    for wp in wg_t.elements:
        want = wp.matrix * a
        sols = tuple(sorted(
            (i for i, w in enumerate(wg.elements) if a * w.matrix == want),
            key=lambda i: wg.elements[i].matrix.entries,
        ))
        if not sols:
            valid = False
        table.append(sols)
    return DualMorphism(
        source=source,
        target=target,
        matrix=a,
        levi_root_indices=levi,
        w_l=w_l,
        valid=valid,
        lift_table=tuple(table),
    )


def identity_morphism(rd: RootDatum) -> DualMorphism:
    return analyze(rd, rd, IntMatrix.identity(rd.rank))


def compose(outer: DualMorphism, inner: DualMorphism) -> DualMorphism:
    """Composite morphism: `outer` maps G -> G', `inner` maps G' -> G''."""
    if inner.source != outer.target:
        raise DatumMismatchError("inner.source must equal outer.target")
    return analyze(outer.source, inner.target, inner.matrix * outer.matrix)


def from_weights(n: int, weights, target: RootDatum | None = None) -> DualMorphism:
    """Morphism into GL(n) from the list of torus weights of an n-dimensional
    representation; weight i becomes column i of A (the character by which the
    target-side dual torus acts on the i-th coordinate line)."""
    weights = [tuple(int(x) for x in wvec) for wvec in weights]
    if len(weights) != n:
        raise WeightCountMismatchError(f"need exactly {n} weights, got {len(weights)}")
    if not weights:
        raise WeightCountMismatchError("need at least one weight")
    r = len(weights[0])
    if any(len(wvec) != r for wvec in weights):
        raise WeightCountMismatchError("weights must share one length")
    if target is None:
        target = build_standard("Torus", r)
    if target.rank != r:
        raise WeightCountMismatchError("weight length must match target rank")
    a = IntMatrix.from_rows([[weights[j][i] for j in range(n)] for i in range(r)])
    return analyze(build_standard("GL", n), target, a)
