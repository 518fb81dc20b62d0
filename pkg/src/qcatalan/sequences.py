"""Recurrence-driven generators for every polynomial family in the library.

These are deliberately independent of the series module: the same objects
are reachable through generating-function ratios there, and the identity
checks compare both routes.  All generators memoize; results are immutable
polynomials, so concurrent readers of the memo tables at worst duplicate a
computation and always observe identical values.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .polyring import Poly, qbinom, qrising

_Q = Poly.variable("q")
_A = Poly.variable("a")
_B = Poly.variable("b")


@functools.cache
def qcatalan(n: int) -> Poly:
    """Carlitz-Riordan q-Catalan polynomial C_n(q):
    C_n = sum_(k<n) q^k C_k C_(n-1-k), C_0 = 1."""
    if n < 0:
        raise ValueError("qcatalan requires n >= 0")
    if n == 0:
        return Poly.one()
    out = Poly.zero()
    for k in range(n):
        out = out + Poly.monomial(1, k) * qcatalan(k) * qcatalan(n - 1 - k)
    return out


@functools.cache
def qnarayana_poly(n: int) -> Poly:
    """q-Narayana polynomial C_n(a,b,q):
    C_n = a C_(n-1) + b sum_(k<n) q^k C_k C_(n-1-k), C_0 = 1.
    Homogeneous of degree n in a, b; reduces to the q-Catalan
    polynomial at (a,b) = (0,1)."""
    if n < 0:
        raise ValueError("qnarayana_poly requires n >= 0")
    if n == 0:
        return Poly.one()
    out = _A * qnarayana_poly(n - 1)
    acc = Poly.zero()
    for k in range(n):
        acc = acc + Poly.monomial(1, k) * qnarayana_poly(k) * qnarayana_poly(n - 1 - k)
    return out + _B * acc


@functools.cache
def cstar(n: int) -> Poly:
    """The second q-Catalan family C*_n(a,b,q):
    C*_n = a C*_(n-1) + b sum_(k<=n-2) q^k C*_k C*_(n-1-k), C*_0 = 1.
    C*_n(1,s,q) are the Polya-Gessel q-Catalan numbers."""
    if n < 0:
        raise ValueError("cstar requires n >= 0")
    if n == 0:
        return Poly.one()
    out = _A * cstar(n - 1)
    acc = Poly.zero()
    for k in range(n - 1):
        acc = acc + Poly.monomial(1, k) * cstar(k) * cstar(n - 1 - k)
    return out + _B * acc


@functools.cache
def qmotzkin(n: int) -> Poly:
    """q-Motzkin polynomial M_n(q), from M(z) = 1 + zM(z) + qz^2 M(z)M(qz):
    M_n = M_(n-1) + sum_(i+j=n-2) q^(j+1) M_i M_j, M_0 = 1."""
    if n < 0:
        raise ValueError("qmotzkin requires n >= 0")
    if n == 0:
        return Poly.one()
    out = qmotzkin(n - 1)
    for i in range(n - 1):
        j = n - 2 - i
        out = out + Poly.monomial(1, j + 1) * qmotzkin(i) * qmotzkin(j)
    return out


@functools.cache
def rogers_szego(n: int) -> Poly:
    """Rogers-Szego polynomial r_n(a,b) by the three-term recurrence
    r_n = (a+b) r_(n-1) + ab (q^(n-1) - 1) r_(n-2), r_0 = 1, r_1 = a+b.
    Equals sum_k [n k] a^k b^(n-k)."""
    if n < 0:
        raise ValueError("rogers_szego requires n >= 0")
    if n == 0:
        return Poly.one()
    if n == 1:
        return _A + _B
    bump = Poly.monomial(1, n - 1) - Poly.one()
    return (_A + _B) * rogers_szego(n - 1) + _A * _B * bump * rogers_szego(n - 2)


@functools.cache
def gould(k: int, n: int, r: int) -> Poly:
    """q-Gould polynomial G(k,n,r), the coefficient of z^k in
    E_r(-q^n z)/E_r(-z).  Computed by the terminating summation
    G(k,n,r) = sum_(m<n) q^m G(k-1, m+r, r) with G(0,n,r) = 1,
    G(k,0,r) = [k = 0]."""
    if k < 0 or n < 0 or r < 0:
        raise ValueError("gould requires k, n, r >= 0")
    if k == 0:
        return Poly.one()
    if n == 0:
        return Poly.zero()
    out = Poly.zero()
    for m in range(n):
        out = out + Poly.monomial(1, m) * gould(k - 1, m + r, r)
    return out


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular array of polynomials; row n holds columns 0..n."""

    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")

    def entry(self, n: int, k: int) -> Poly:
        return self.rows[n][k]

    def max_row(self) -> int:
        return len(self.rows) - 1


def _collect_ab(p: Poly, n: int) -> list[Poly]:
    # split a degree-n homogeneous polynomial in (a, b) into the
    # coefficients of a^k b^(n-k), each a polynomial in q
    buckets: list[list[tuple[tuple[int, int, int], int]]] = [[] for _ in range(n + 1)]
    for (e_q, e_a, e_b), c in p.terms():
        if e_a + e_b != n:
            raise ValueError(f"polynomial is not homogeneous of degree {n} in a, b")
        buckets[e_a].append(((e_q, 0, 0), c))
    return [Poly.from_terms(bucket) for bucket in buckets]


def _coefficient_of_a_power(p: Poly, k: int) -> Poly:
    # the q-polynomial multiplying a^k (any b power) in p
    picked = [((e_q, 0, 0), c) for (e_q, e_a, _e_b), c in p.terms() if e_a == k]
    return Poly.from_terms(picked)


def narayana_triangle(rows: int) -> Triangle:
    """q-Narayana numbers N(n,k,q), defined by expanding C_n(a,b,q) in
    the rising-product basis:

        C_n(a,b,q) = sum_k N(n,k,q) (a+b)(a+qb)...(a+q^(k-1)b) b^(n-k)

    The basis polynomial for column k is monic of degree k in a, so the
    expansion is computed by triangular elimination from k = n downward.
    Includes rows 0..rows.
    """
    if rows < 0:
        raise ValueError("narayana_triangle requires rows >= 0")
    table = []
    for n in range(rows + 1):
        rem = qnarayana_poly(n)
        entries: list[Poly] = [Poly.zero()] * (n + 1)
        for k in range(n, -1, -1):
            coeff = _coefficient_of_a_power(rem, k)
            entries[k] = coeff
            if not coeff.is_zero():
                rem = rem - coeff * qrising(_A, _B, k) * _B ** (n - k)
        if not rem.is_zero():
            raise AssertionError(f"rising-product expansion left a remainder at row {n}")
        table.append(tuple(entries))
    return Triangle(tuple(table))


def nstar_triangle(rows: int) -> Triangle:
    """N*(n,k,q), the coefficient of a^k b^(n-k) in C*_n(a,b,q).
    Includes rows 0..rows; column 0 is zero for every n >= 1."""
    if rows < 0:
        raise ValueError("nstar_triangle requires rows >= 0")
    table = []
    for n in range(rows + 1):
        table.append(tuple(_collect_ab(cstar(n), n)))
    return Triangle(tuple(table))
