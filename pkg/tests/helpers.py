"""Shared fixtures-by-convention for the test suite: the standard morphism
collection and tame-point enumerators used by several property suites."""

from fractions import Fraction
from math import gcd

from dltransfer import (
    IntMatrix,
    QmodZVec,
    analyze,
    build_standard,
    from_weights,
    identity_morphism,
)

GL1 = build_standard("GL", 1)
GL2 = build_standard("GL", 2)
GL3 = build_standard("GL", 3)
T2 = build_standard("Torus", 2)


def morphism_suite():
    """Named valid morphisms covering trivial, full-Levi, partial-Levi and
    rank-3 shapes; the first five are the CLI presets."""
    return [
        ("identity-gl2", identity_morphism(GL2)),
        ("diag-gl1-gl2", analyze(GL2, GL1, IntMatrix.from_rows([[1, 1]]))),
        ("levi-t-gl2", analyze(GL2, T2, IntMatrix.identity(2))),
        ("power-2-gl1", analyze(GL1, GL1, IntMatrix.from_rows([[2]]))),
        ("power-3-gl1", analyze(GL1, GL1, IntMatrix.from_rows([[3]]))),
        ("det-weights", from_weights(2, [(1,), (-1,)])),
        ("double-first-weight", from_weights(2, [(2,), (0,)])),
        ("project-first", analyze(GL2, GL1, IntMatrix.from_rows([[1, 0]]))),
        ("conjugated-identity", analyze(GL2, GL2, IntMatrix.from_rows([[0, 1], [1, 0]]))),
        ("diag-gl1-gl3", analyze(GL3, GL1, IntMatrix.from_rows([[1, 1, 1]]))),
        ("partial-levi-gl3", analyze(GL3, T2, IntMatrix.from_rows([[1, 1, 0], [0, 0, 1]]))),
        ("identity-gl3", identity_morphism(GL3)),
    ]


def preset_suite():
    """The five morphisms exposed as CLI presets."""
    return morphism_suite()[:5]


def all_tame_points(rank: int, max_order: int, p: int):
    """Every torsion point of (Q/Z)^rank whose order is <= max_order and
    coprime to p, exactly once."""
    seen = set()
    out = []
    for n in range(1, max_order + 1):
        if gcd(n, p) != 1:
            continue
        for code in range(n**rank):
            ks = []
            c = code
            for _ in range(rank):
                ks.append(c % n)
                c //= n
            y = QmodZVec.make([Fraction(k, n) for k in ks])
            if y.entries in seen:
                continue
            seen.add(y.entries)
            out.append(y)
    return out


def sampled_tame_points(rank: int, max_order: int, p: int, rng, count: int):
    """Seeded sample of distinct tame points (denominators coprime to p).
    Returns fewer than `count` points when the whole space is smaller."""
    orders = [n for n in range(1, max_order + 1) if gcd(n, p) == 1]
    out = []
    seen = set()
    for _ in range(200 * count):
        if len(out) == count:
            break
        n = rng.choice(orders)
        y = QmodZVec.make([Fraction(rng.randrange(n), n) for _ in range(rank)])
        if y.entries not in seen:
            seen.add(y.entries)
            out.append(y)
    return out
