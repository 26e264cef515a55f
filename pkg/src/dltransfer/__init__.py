"""Exact transfer of stable class functions on finite reductive groups.

Integer-lattice root data and Weyl groups, dual-torus morphisms with their
Levi/lift analysis, twisted finite tori and their characters, geometric and
rational semisimple classes, stable gamma-vectors with transfer, an exact
induction-formula engine over cyclotomic numbers, and a brute-force matrix
group oracle for end-to-end validation.
"""

from .cyclo import CycloNumber, from_exponent_counts, root_of_unity
from .dlengine import (
    ComparisonReport,
    UniformFunction,
    assemble,
    compare,
    degree,
    group_order,
    pairing,
    symbol_degree,
)
from .dualmorph import (
    DualMorphism,
    analyze,
    compose,
    from_weights,
    identity_morphism,
)
from .ffield import AddChar, FiniteField, MultChar, gauss_sum, get_embedding, get_field
from .finitetorus import (
    FiniteTorus,
    FrobeniusData,
    TameChar,
    TorusChar,
    TorusFunction,
    convolve,
    fixed_points,
    fourier_coefficient,
    pullback_char,
    pushforward,
    split_frobenius,
    tame_stabilizers,
)
from .lattice import (
    FinAbGroup,
    IntMatrix,
    QmodZVec,
    cokernel,
    smith_normal_form,
)
from .matrixgroup import (
    ClassFunction,
    MatGroup,
    MissingTableError,
    TooLargeError,
    build_group,
    class_type,
    convolve_cf,
    delta_cf,
    dl_character,
    dl_family,
    hc_induction,
    inner_cf,
    realize,
    split_torus_char_values,
    trace_function,
)
from .rootdata import (
    RootDatum,
    WeylElement,
    WeylGroup,
    build_standard,
    dual,
    levi_from_roots,
    weyl_group,
)
from .ssclasses import (
    GeomClass,
    RationalPairClass,
    enumerate_classes,
    enumerate_pair_classes,
    geometric_class,
    kappa,
    pair_class,
    rho_ss,
)
from .stablefun import (
    GroupContext,
    StableFunction,
    delta,
    extract_fw,
    random_stable,
    trace_psi,
    trace_psi_gamma_for_pair,
    transfer,
)

__version__ = "0.1.0"

__all__ = [
    "AddChar",
    "ClassFunction",
    "ComparisonReport",
    "CycloNumber",
    "DualMorphism",
    "FinAbGroup",
    "FiniteField",
    "FiniteTorus",
    "FrobeniusData",
    "GeomClass",
    "GroupContext",
    "IntMatrix",
    "MatGroup",
    "MissingTableError",
    "MultChar",
    "QmodZVec",
    "RationalPairClass",
    "RootDatum",
    "StableFunction",
    "TameChar",
    "TooLargeError",
    "TorusChar",
    "TorusFunction",
    "UniformFunction",
    "WeylElement",
    "WeylGroup",
    "analyze",
    "assemble",
    "build_group",
    "build_standard",
    "class_type",
    "cokernel",
    "compare",
    "compose",
    "convolve",
    "convolve_cf",
    "degree",
    "delta",
    "delta_cf",
    "dl_character",
    "dl_family",
    "dual",
    "enumerate_classes",
    "enumerate_pair_classes",
    "extract_fw",
    "fixed_points",
    "fourier_coefficient",
    "from_exponent_counts",
    "from_weights",
    "gauss_sum",
    "geometric_class",
    "get_embedding",
    "get_field",
    "group_order",
    "hc_induction",
    "identity_morphism",
    "inner_cf",
    "kappa",
    "levi_from_roots",
    "pair_class",
    "pairing",
    "pullback_char",
    "pushforward",
    "random_stable",
    "realize",
    "rho_ss",
    "root_of_unity",
    "smith_normal_form",
    "split_frobenius",
    "split_torus_char_values",
    "symbol_degree",
    "tame_stabilizers",
    "trace_function",
    "trace_psi",
    "trace_psi_gamma_for_pair",
    "transfer",
    "weyl_group",
]
