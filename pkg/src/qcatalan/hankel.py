"""Exact Hankel determinants and their closed-form expected values.

Determinants are computed by fraction-free Bareiss elimination over the
polynomial ring: every intermediate entry is a minor of the (possibly
row-swapped) input matrix, so the division step is exact by Sylvester's
identity.  Row pivoting handles exactly-zero pivots, which really occur
(the shifted Motzkin determinants vanish periodically).

The expected values implement the closed forms for each family/shift
pair; ``d_sequence`` provides the auxiliary recurrence
d_n = s_(n-1) d_(n-1) - t_(n-2) d_(n-2) that governs shifted
determinants of a continued-fraction moment sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InsufficientCoefficientsError,
    InsufficientMomentsError,
    UnsupportedCombinationError,
)
from .polyring import Poly, poly_exact_div

HANKEL_FAMILIES = ("qcatalan", "narayana", "cstar", "motzkin")

#: period-6 sign pattern of the shifted Motzkin determinants
MOTZKIN_DELTA = (1, 1, 0, -1, -1, 0)


def _bareiss(matrix: list[list[Poly]]) -> Poly:
    size = len(matrix)
    sign = 1
    prev = Poly.one()
    for step in range(size - 1):
        if matrix[step][step].is_zero():
            for row in range(step + 1, size):
                if not matrix[row][step].is_zero():
                    matrix[step], matrix[row] = matrix[row], matrix[step]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        pivot = matrix[step][step]
        for i in range(step + 1, size):
            left = matrix[i][step]
            row_i = matrix[i]
            row_s = matrix[step]
            for j in range(step + 1, size):
                row_i[j] = poly_exact_div(pivot * row_i[j] - left * row_s[j], prev)
            row_i[step] = Poly.zero()
        prev = pivot
    det = matrix[size - 1][size - 1]
    return -det if sign < 0 else det


def hankel_det(seq: Sequence[Poly], shift: int, n: int) -> Poly:
    """det(seq[i+j+shift]) for i, j = 0..n, computed exactly."""
    if shift < 0 or n < 0:
        raise ValueError("hankel_det requires shift >= 0 and n >= 0")
    need = 2 * n + shift + 1
    if len(seq) < need:
        raise InsufficientMomentsError(
            f"need {need} sequence entries, have {len(seq)}"
        )
    size = n + 1
    matrix = [[seq[i + j + shift] for j in range(size)] for i in range(size)]
    return _bareiss(matrix)


def hankel_det_prefix(seq: Sequence[Poly], shift: int, n: int) -> list[Poly]:
    """All determinants det(seq[i+j+shift])_(i,j=0..m) for m = 0..n.

    One pivot-free Bareiss pass yields every leading principal minor, so
    this costs one elimination instead of n+1.  If a zero pivot shows up
    (singular leading minor) the remaining determinants are computed
    individually with pivoting.
    """
    if shift < 0 or n < 0:
        raise ValueError("hankel_det_prefix requires shift >= 0 and n >= 0")
    need = 2 * n + shift + 1
    if len(seq) < need:
        raise InsufficientMomentsError(
            f"need {need} sequence entries, have {len(seq)}"
        )
    size = n + 1
    matrix = [[seq[i + j + shift] for j in range(size)] for i in range(size)]
    dets: list[Poly] = [matrix[0][0]]
    prev = Poly.one()
    for step in range(size - 1):
        pivot = matrix[step][step]
        if pivot.is_zero():
            # fall back for the rest; the prefix so far is valid
            return dets + [hankel_det(seq, shift, m) for m in range(step + 1, size)]
        for i in range(step + 1, size):
            left = matrix[i][step]
            row_i = matrix[i]
            row_s = matrix[step]
            for j in range(step + 1, size):
                row_i[j] = poly_exact_div(pivot * row_i[j] - left * row_s[j], prev)
            row_i[step] = Poly.zero()
        prev = pivot
        dets.append(matrix[step + 1][step + 1])
    return dets


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _rising_tower(a: Poly, b: Poly, top: int) -> Poly:
    # (a+b)^top (a+qb)^(top-1) ... (a+q^(top-1) b)^1
    out = Poly.one()
    for j in range(top):
        out = out * (a + Poly.monomial(1, j) * b) ** (top - j)
    return out


def expected_hankel(
    family: str,
    shift: int,
    n: int,
    a: Poly | None = None,
    b: Poly | None = None,
) -> Poly:
    """Closed-form value of the family's Hankel determinant.

    Supported pairs: qcatalan and motzkin with shifts 0 and 1, narayana
    with shifts 0 and 1 (symbolic in a, b), cstar with shifts 0, 1, 2.

    The cstar forms for shifts 1 and 2 carry a factor a^(n+1) on top of
    the unit-normalized product formulas: the 1x1 instances det = C*_1 = a
    and det = C*_2 = a(a+b) force it, since the underlying moment
    sequence C*_(k+1) is a times a unit-constant continued-fraction
    expansion.
    """
    if n < 0:
        raise ValueError("expected_hankel requires n >= 0")
    if a is None:
        a = Poly.variable("a")
    if b is None:
        b = Poly.variable("b")

    if family == "qcatalan":
        if shift == 0:
            return Poly.monomial(1, n * (n + 1) * (4 * n - 1) // 6)
        if shift == 1:
            return Poly.monomial(1, n * (n + 1) * (4 * n + 5) // 6)
    elif family == "narayana":
        if shift == 0:
            return (
                Poly.monomial(1, n * n * (n + 1) // 2)
                * b ** _binom2(n + 1)
                * _rising_tower(a, b, n)
            )
        if shift == 1:
            return (
                Poly.monomial(1, n * (n + 1) * (n + 1) // 2)
                * b ** _binom2(n + 1)
                * _rising_tower(a, b, n + 1)
            )
    elif family == "cstar":
        ab = a * b
        if shift == 0:
            return ab ** _binom2(n + 1) * Poly.monomial(1, n * (n + 1) * (n - 1) // 3)
        if shift == 1:
            return (
                a ** (n + 1)
                * ab ** _binom2(n + 1)
                * Poly.monomial(1, n * (n + 1) * (2 * n + 1) // 6)
            )
        if shift == 2:
            hsum = Poly.zero()
            for i in range(n + 2):
                hsum = hsum + a ** i * b ** (n + 1 - i)
            return (
                a ** (n + 1)
                * (ab * Poly.variable("q")) ** _binom2(n + 1)
                * Poly.monomial(1, n * (n + 1) * (2 * n + 1) // 6)
                * hsum
            )
    elif family == "motzkin":
        if shift == 0:
            return Poly.monomial(1, n * (n + 1) * (2 * n + 1) // 6)
        if shift == 1:
            delta = MOTZKIN_DELTA[(n + 1) % 6]
            exponent = 2 * ((n + 2) * (n + 1) * n // 6)
            return Poly.monomial(delta, exponent)
    raise UnsupportedCombinationError(
        f"no closed form for family {family!r} with shift {shift}"
    )


def d_sequence(jf, upto: int) -> list[Poly]:
    """d_0 .. d_(upto-1) of the recurrence
    d_n = s_(n-1) d_(n-1) - t_(n-2) d_(n-2), d_0 = 1, d_1 = s_0."""
    if upto < 1:
        raise ValueError("d_sequence requires upto >= 1")
    if len(jf.s) < upto - 1 or len(jf.t) < max(upto - 2, 0):
        raise InsufficientCoefficientsError(
            f"need {upto - 1} s entries and {max(upto - 2, 0)} t entries, "
            f"have {len(jf.s)} and {len(jf.t)}"
        )
    out = [Poly.one()]
    if upto > 1:
        out.append(jf.s[0])
    for n in range(2, upto):
        out.append(jf.s[n - 1] * out[n - 1] - jf.t[n - 2] * out[n - 2])
    return out


@dataclass(frozen=True)
class HankelReport:
    """Outcome of comparing a computed Hankel determinant with its
    closed form."""

    family: str
    shift: int
    n: int
    computed: Poly
    expected: Poly
    match: bool


def family_moments(
    family: str,
    count: int,
    a: Poly | None = None,
    b: Poly | None = None,
) -> list[Poly]:
    """The first `count` moments of a Hankel family.

    qcatalan -> C_n(q); narayana -> C_n(a,b,q); cstar -> C*_n(a,b,q)
    (starting at C*_0 = 1); motzkin -> M_n(q).  Passing a or b
    specializes the symbolic families.
    """
    from . import sequences

    if family == "qcatalan":
        moments = [sequences.qcatalan(i) for i in range(count)]
    elif family == "narayana":
        moments = [sequences.qnarayana_poly(i) for i in range(count)]
    elif family == "cstar":
        moments = [sequences.cstar(i) for i in range(count)]
    elif family == "motzkin":
        moments = [sequences.qmotzkin(i) for i in range(count)]
    else:
        raise UnsupportedCombinationError(f"unknown Hankel family {family!r}")
    bindings = {}
    if a is not None:
        bindings["a"] = a
    if b is not None:
        bindings["b"] = b
    if bindings:
        moments = [m.substitute(bindings) for m in moments]
    return moments


def hankel_report(
    family: str,
    shift: int,
    n: int,
    a: Poly | None = None,
    b: Poly | None = None,
) -> HankelReport:
    """Compute det(mu_(i+j+shift)) for the family and compare with the
    closed form."""
    expected = expected_hankel(family, shift, n, a, b)
    moments = family_moments(family, 2 * n + shift + 1, a, b)
    computed = hankel_det(moments, shift, n)
    return HankelReport(family, shift, n, computed, expected, computed == expected)
