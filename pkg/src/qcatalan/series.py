"""Truncated formal power series in z over the q-Pochhammer fraction ring.

A :class:`Series` of order N stores coefficients for z^0 ... z^(N-1) as
:class:`QFrac` values.  Arithmetic between series of different orders
truncates to the smaller order, so precision is never silently inflated.

The module also builds every generating function the library studies:

* ``build_Er``      -- generalized q-exponential E_r
* ``build_Gr``      -- ratio E_r(-q^n z)/E_r(-z) with q-Gould coefficients
* ``build_h``       -- alternating series with rising-product numerators
* ``build_hstar``   -- same with Rogers-Szego numerators
* ``build_ratio_series`` -- the f, f*, F and g families derived from them

E_r is built with the exponent r*C(k,2) on q.  Some displays of the same
series print C(k,2) independent of r, but the r-scaled exponent is the
unique one satisfying E_r(z) - E_r(qz) = z E_r(q^r z), and every
construction here re-checks that identity.
"""

from __future__ import annotations

from .errors import (
    DenominatorResidueError,
    NonUnitConstantTermError,
    NotDivisibleError,
)
from .polyring import Poly, QFrac, poly_exact_div, qbinom


def _coerce_qfrac(value) -> QFrac:
    if isinstance(value, QFrac):
        return value
    if isinstance(value, (Poly, int)):
        return QFrac.from_poly(value)
    raise TypeError(f"cannot use {type(value).__name__} as a series coefficient")


class Series:
    """Immutable truncated power series in z with QFrac coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        coeffs = tuple(_coerce_qfrac(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs order >= 1")
        self._c = coeffs

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([QFrac.one()] + [QFrac.zero()] * (order - 1))

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([QFrac.zero()] * order)

    @property
    def order(self) -> int:
        return len(self._c)

    def coeff(self, k: int) -> QFrac:
        return self._c[k]

    def coeffs(self) -> tuple[QFrac, ...]:
        return self._c

    def poly_coeffs(self) -> list[Poly]:
        """All coefficients as polynomials; DenominatorResidueError if any is not."""
        return [c.as_poly() for c in self._c]

    def truncate(self, order: int) -> "Series":
        if order >= len(self._c):
            return self
        return Series(self._c[:order])

    def __add__(self, other) -> "Series":
        other = _as_series(other, self.order)
        n = min(len(self._c), len(other._c))
        return Series([self._c[k] + other._c[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        other = _as_series(other, self.order)
        n = min(len(self._c), len(other._c))
        return Series([self._c[k] - other._c[k] for k in range(n)])

    def __rsub__(self, other) -> "Series":
        return _as_series(other, self.order) - self

    def __neg__(self) -> "Series":
        return Series([-c for c in self._c])

    def __mul__(self, other) -> "Series":
        if isinstance(other, (QFrac, Poly, int)):
            return self.scale(other)
        n = min(len(self._c), len(other._c))
        out = []
        for k in range(n):
            acc = QFrac.zero()
            for i in range(k + 1):
                ci = self._c[i]
                cj = other._c[k - i]
                if ci.is_zero() or cj.is_zero():
                    continue
                acc = acc + ci * cj
            out.append(acc)
        return Series(out)

    def __rmul__(self, other) -> "Series":
        if isinstance(other, (QFrac, Poly, int)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "Series":
        other = _as_series(other, self.order)
        n = min(len(self._c), len(other._c))
        if not (other._c[0] == QFrac.one()):
            raise NonUnitConstantTermError(
                f"series division needs constant term 1, got {other._c[0]}"
            )
        out: list[QFrac] = []
        for k in range(n):
            acc = self._c[k]
            for i in range(1, k + 1):
                bi = other._c[i]
                if bi.is_zero() or out[k - i].is_zero():
                    continue
                acc = acc - bi * out[k - i]
            out.append(acc)
        return Series(out)

    def scale(self, factor) -> "Series":
        factor = _coerce_qfrac(factor)
        return Series([c * factor for c in self._c])

    def scale_z(self, r: int) -> "Series":
        """Substitute z -> q^r z: coefficient c_k picks up q^(r k)."""
        if r < 0:
            raise ValueError("scale_z requires r >= 0")
        if r == 0:
            return self
        return Series(
            [c * Poly.monomial(1, r * k) for k, c in enumerate(self._c)]
        )

    def mul_z(self, shift: int = 1) -> "Series":
        """Multiply by z^shift, truncating at the same order."""
        if shift < 0:
            raise ValueError("mul_z requires shift >= 0")
        zeros = [QFrac.zero()] * min(shift, len(self._c))
        return Series(zeros + list(self._c[: len(self._c) - shift]))

    def substitute(self, bindings) -> "Series":
        return Series([c.substitute(bindings) for c in self._c])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return len(self._c) == len(other._c) and all(
            x == y for x, y in zip(self._c, other._c)
        )

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self) -> str:
        inner = " + ".join(f"({c})*z^{k}" for k, c in enumerate(self._c))
        return f"Series[{inner} + O(z^{len(self._c)})]"


def _as_series(value, order: int) -> Series:
    if isinstance(value, Series):
        return value
    if isinstance(value, (QFrac, Poly, int)):
        return Series([_coerce_qfrac(value)] + [QFrac.zero()] * (order - 1))
    raise TypeError(f"cannot treat {type(value).__name__} as a series")


def series_arith(op: str, lhs: Series, rhs=None) -> Series:
    """Dispatch series arithmetic by name: add, sub, mul, div, scale_z."""
    if op == "scale_z":
        if not isinstance(rhs, int):
            raise ValueError("scale_z takes an integer power")
        return lhs.scale_z(rhs)
    if rhs is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def build_Er(r: int, order: int) -> Series:
    """The generalized q-exponential: coefficient of z^k is
    q^(r*C(k,2)) / ((1-q)(1-q^2)...(1-q^k)).

    The defining identity E_r(z) - E_r(qz) = z E_r(q^r z) is checked for
    every built coefficient; it is what forces the r-scaled exponent.
    """
    if r < 0:
        raise ValueError("build_Er requires r >= 0")
    if order < 1:
        raise ValueError("build_Er requires order >= 1")
    coeffs = []
    for k in range(order):
        num = Poly.monomial(1, r * _binom2(k))
        coeffs.append(QFrac.make(num, {i: 1 for i in range(1, k + 1)}))
    # E_r(z) - E_r(qz) = z E_r(q^r z), coefficient by coefficient:
    # c_k (1 - q^k) must equal q^(r(k-1)) c_(k-1)
    for k in range(1, order):
        lhs = coeffs[k] * (Poly.one() - Poly.monomial(1, k))
        rhs = coeffs[k - 1] * Poly.monomial(1, r * (k - 1))
        if not (lhs == rhs):
            raise AssertionError(f"E_{r} functional identity failed at z^{k}")
    return Series(coeffs)


def _negate_z(s: Series) -> Series:
    return Series([c if k % 2 == 0 else -c for k, c in enumerate(s.coeffs())])


def build_Gr(r: int, n: int, order: int) -> Series:
    """E_r(-q^n z) / E_r(-z); coefficients are polynomials in q."""
    if n < 0:
        raise ValueError("build_Gr requires n >= 0")
    er = build_Er(r, order)
    num = _negate_z(er).scale_z(n)
    den = _negate_z(er)
    ratio = num / den
    for k, c in enumerate(ratio.coeffs()):
        if not c.is_polynomial():
            raise DenominatorResidueError(
                f"G_{r}(z,{n}) coefficient of z^{k} kept a denominator: {c}"
            )
    return ratio


def _rising_ab(x: Poly, y: Poly, k: int) -> Poly:
    out = Poly.one()
    for i in range(k):
        out = out * (x + Poly.monomial(1, i) * y)
    return out


def _rogers_szego_sum(x: Poly, y: Poly, k: int) -> Poly:
    # definition sum over Gaussian binomials; independent of the
    # recurrence-based generator in sequences
    out = Poly.zero()
    for j in range(k + 1):
        out = out + qbinom(k, j) * x ** j * y ** (k - j)
    return out


def build_h(a: Poly, b: Poly, order: int) -> Series:
    """Coefficient of z^k: (-1)^k q^C(k,2) (a+b)(a+qb)...(a+q^(k-1)b)
    over (1-q)(1-q^2)...(1-q^k); constant term 1."""
    if order < 1:
        raise ValueError("build_h requires order >= 1")
    coeffs = []
    for k in range(order):
        sign = -1 if k % 2 else 1
        num = Poly.monomial(sign, _binom2(k)) * _rising_ab(a, b, k)
        coeffs.append(QFrac.make(num, {i: 1 for i in range(1, k + 1)}))
    return Series(coeffs)


def build_hstar(a: Poly, b: Poly, order: int) -> Series:
    """Like build_h but with Rogers-Szego numerators r_k(a, b)."""
    if order < 1:
        raise ValueError("build_hstar requires order >= 1")
    coeffs = []
    for k in range(order):
        sign = -1 if k % 2 else 1
        num = Poly.monomial(sign, _binom2(k)) * _rogers_szego_sum(a, b, k)
        coeffs.append(QFrac.make(num, {i: 1 for i in range(1, k + 1)}))
    return Series(coeffs)


RATIO_KINDS = ("f_catalan", "f_narayana", "f_star", "F", "g")


def build_ratio_series(
    kind: str,
    a: Poly | None = None,
    b: Poly | None = None,
    order: int = 12,
) -> Series:
    """Generating functions defined as ratios (all with polynomial
    coefficients):

    * ``f_catalan``:  E_2(-qz)/E_2(-z), the q-Catalan generating function
    * ``f_narayana``: h(qz,a,b)/h(z,a,b)
    * ``f_star``:     h*(qz,a,b)/h*(z,a,b)
    * ``F``:          1 + a z f*(z,a,b)
    * ``g``:          defined by f(qz,a,b) = 1 + (a+b) q z g(z,a,b),
      recovered coefficientwise as g_k = q^k f_(k+1) / (a+b)

    a and b default to the symbolic generators.
    """
    if order < 1:
        raise ValueError("build_ratio_series requires order >= 1")
    if a is None:
        a = Poly.variable("a")
    if b is None:
        b = Poly.variable("b")

    if kind == "f_catalan":
        e2 = build_Er(2, order)
        ratio = _negate_z(e2).scale_z(1) / _negate_z(e2)
    elif kind == "f_narayana":
        h = build_h(a, b, order)
        ratio = h.scale_z(1) / h
    elif kind == "f_star":
        hs = build_hstar(a, b, order)
        ratio = hs.scale_z(1) / hs
    elif kind == "F":
        fstar = build_ratio_series("f_star", a, b, order)
        ratio = Series.one(order) + fstar.mul_z(1).scale(a)
    elif kind == "g":
        f = build_ratio_series("f_narayana", a, b, order + 1)
        fc = f.poly_coeffs()
        coeffs = []
        for k in range(order):
            try:
                coeffs.append(poly_exact_div(
                    Poly.monomial(1, k) * fc[k + 1], a + b
                ))
            except NotDivisibleError as exc:
                raise NotDivisibleError(
                    f"g recovery failed at z^{k}: {exc}"
                ) from exc
        return Series(coeffs)
    else:
        raise ValueError(f"unknown ratio series kind {kind!r}")

    for k, c in enumerate(ratio.coeffs()):
        if not c.is_polynomial():
            raise DenominatorResidueError(
                f"{kind} coefficient of z^{k} kept a denominator: {c}"
            )
    return ratio
