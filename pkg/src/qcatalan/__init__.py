"""Exact computer algebra for q-Catalan and q-Narayana combinatorics.

The library constructs the classical q-analogue families (q-Catalan,
q-Narayana, the second q-Catalan family C*, Polya-Gessel q-Catalan,
q-Motzkin, Rogers-Szego, q-Gould) with exact integer-polynomial
arithmetic, computes their Hankel determinants and continued-fraction
representations symbolically, and ships a registry of identity checks
plus a CLI front end (``qcatalan``).

Layout:

* :mod:`qcatalan.polyring`  -- sparse polynomials in q, a, b and the
  restricted fraction ring with q-Pochhammer denominators
* :mod:`qcatalan.series`    -- truncated power series and every
  generating function (E_r, G_r, h, h*, f, f*, F, g)
* :mod:`qcatalan.sequences` -- recurrence-driven generators and the
  Narayana-style triangles
* :mod:`qcatalan.hankel`    -- exact Hankel determinants (fraction-free
  Bareiss) and their closed forms
* :mod:`qcatalan.jfraction` -- J-fractions, moment functionals,
  orthogonal polynomials
* :mod:`qcatalan.verify`    -- named, depth-parameterized identity checks
* :mod:`qcatalan.cli`       -- the command-line interface
"""

from .errors import (
    BreakdownError,
    DenominatorResidueError,
    DivisionByZeroError,
    ExponentOverflowError,
    InsufficientCoefficientsError,
    InsufficientDepthError,
    InsufficientMomentsError,
    NonUnitConstantTermError,
    NotDivisibleError,
    PolyParseError,
    QCatalanError,
    UnknownCheckError,
    UnsupportedCombinationError,
)
from .hankel import (
    HankelReport,
    d_sequence,
    expected_hankel,
    family_moments,
    hankel_det,
    hankel_det_prefix,
    hankel_report,
)
from .jfraction import (
    JFraction,
    MomentFunctional,
    ZPoly,
    closed_jfraction,
    functional_apply,
    jfraction_from_moments,
    moments_from_jfraction,
    orthopoly,
    orthopoly_explicit,
)
from .polyring import (
    Poly,
    QFrac,
    parse_poly,
    poly_arith,
    poly_exact_div,
    qbinom,
    qfrac_arith_and_normalize,
    qrising,
)
from .sequences import (
    Triangle,
    cstar,
    gould,
    narayana_triangle,
    nstar_triangle,
    qcatalan,
    qmotzkin,
    qnarayana_poly,
    rogers_szego,
)
from .series import (
    Series,
    build_Er,
    build_Gr,
    build_h,
    build_hstar,
    build_ratio_series,
    series_arith,
)
from .verify import CheckReport, list_checks, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "Poly", "QFrac", "Series", "Triangle", "JFraction", "MomentFunctional",
    "ZPoly", "HankelReport", "CheckReport",
    "poly_arith", "poly_exact_div", "qbinom", "qrising", "parse_poly",
    "qfrac_arith_and_normalize",
    "series_arith", "build_Er", "build_Gr", "build_h", "build_hstar",
    "build_ratio_series",
    "qcatalan", "qnarayana_poly", "cstar", "qmotzkin", "rogers_szego",
    "gould", "narayana_triangle", "nstar_triangle",
    "hankel_det", "hankel_det_prefix", "expected_hankel", "d_sequence",
    "family_moments", "hankel_report",
    "moments_from_jfraction", "jfraction_from_moments", "closed_jfraction",
    "orthopoly", "orthopoly_explicit", "functional_apply",
    "list_checks", "run_check", "run_all",
    "QCatalanError", "ExponentOverflowError", "DivisionByZeroError",
    "NotDivisibleError", "NonUnitConstantTermError", "DenominatorResidueError",
    "InsufficientMomentsError", "InsufficientDepthError",
    "InsufficientCoefficientsError", "BreakdownError",
    "UnsupportedCombinationError", "UnknownCheckError", "PolyParseError",
]
