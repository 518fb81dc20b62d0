"""J-fractions, moment functionals and orthogonal polynomials.

A :class:`JFraction` holds the coefficient arrays s_k, t_k of

    1 / (1 - s_0 z - t_0 z^2 / (1 - s_1 z - t_1 z^2 / (1 - ...)))

``moments_from_jfraction`` expands that continued fraction into its moment
sequence; ``jfraction_from_moments`` inverts the map by building the monic
orthogonal polynomials p_k of the moment functional and reading off

    s_k = F(z p_k^2) / F(p_k^2),     t_k = F(p_(k+1)^2) / F(p_k^2).

Every division is exact polynomial division; a NotDivisibleError therefore
means the moment sequence's J-fraction leaves the polynomial ring, and a
vanishing norm F(p_k^2) raises BreakdownError carrying the level, since no
J-fraction of that depth exists.

``closed_jfraction`` emits the library's closed-form families and
``orthopoly_explicit`` the corresponding closed-form orthogonal
polynomials (see that function's docstring for the conventions they need).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BreakdownError,
    InsufficientDepthError,
    InsufficientMomentsError,
    NotDivisibleError,
)
from .polyring import Poly, QFrac, poly_exact_div, qbinom, qrising
from .series import Series

CLOSED_FAMILIES = ("narayana", "cstar_shift1", "cstar_shift0", "motzkin")
EXPLICIT_FAMILIES = ("narayana_ab", "narayana_01", "cstar_shift1", "cstar_shift0")


class ZPoly:
    """Polynomial in z with Poly coefficients (index = power of z)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self._c = tuple(coeffs)

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls([])

    @classmethod
    def one(cls) -> "ZPoly":
        return cls([Poly.one()])

    @classmethod
    def z(cls) -> "ZPoly":
        return cls([Poly.zero(), Poly.one()])

    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self._c) - 1

    def coeff(self, k: int) -> Poly:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Poly.zero()

    def coeffs(self) -> tuple[Poly, ...]:
        return self._c

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == Poly.one()

    def shift(self, k: int = 1) -> "ZPoly":
        """Multiply by z^k."""
        if self.is_zero():
            return self
        return ZPoly([Poly.zero()] * k + list(self._c))

    def scale(self, factor: Poly | int) -> "ZPoly":
        return ZPoly([c * factor for c in self._c])

    def __add__(self, other: "ZPoly") -> "ZPoly":
        n = max(len(self._c), len(other._c))
        return ZPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        n = max(len(self._c), len(other._c))
        return ZPoly([self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> "ZPoly":
        return ZPoly([-c for c in self._c])

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        if self.is_zero() or other.is_zero():
            return ZPoly([])
        out = [Poly.zero()] * (len(self._c) + len(other._c) - 1)
        for i, ci in enumerate(self._c):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other._c):
                out[i + j] = out[i + j] + ci * cj
        return ZPoly(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self._c == other._c

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash(self._c)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, c in enumerate(self._c):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            else:
                zpow = "z" if k == 1 else f"z^{k}"
                parts.append(zpow if c == Poly.one() else f"({c})*{zpow}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ZPoly({self})"


@dataclass(frozen=True)
class JFraction:
    """Coefficient arrays of a J-fraction; level k carries s_k and t_k."""

    s: tuple[Poly, ...]
    t: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "t", tuple(self.t))
        for k, tk in enumerate(self.t):
            if tk.is_zero():
                raise ValueError(
                    f"t_{k} is zero; the fraction terminates there and the "
                    "zero entry must not be stored"
                )

    def depth(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class MomentFunctional:
    """Linear functional F with F(z^n) = moments[n]."""

    moments: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "moments",
            tuple(m if isinstance(m, Poly) else Poly.const(m) for m in self.moments),
        )

    def __len__(self) -> int:
        return len(self.moments)


def functional_apply(fn: MomentFunctional, p: ZPoly) -> Poly:
    """F extended linearly: F(sum c_k z^k) = sum c_k mu_k."""
    if p.degree() >= len(fn.moments):
        raise InsufficientMomentsError(
            f"functional has {len(fn.moments)} moments, polynomial has "
            f"degree {p.degree()}"
        )
    out = Poly.zero()
    for k, c in enumerate(p.coeffs()):
        if not c.is_zero():
            out = out + c * fn.moments[k]
    return out


def moments_from_jfraction(jf: JFraction, count: int) -> list[Poly]:
    """First `count` moments of the continued fraction, by bottom-up
    truncated evaluation.  Needs ceil(count/2) levels of s and one fewer
    of t (the deepest t only affects coefficients beyond the cutoff)."""
    if count < 1:
        raise ValueError("moments_from_jfraction requires count >= 1")
    levels = (count + 1) // 2
    if len(jf.s) < levels or len(jf.t) < levels - 1:
        raise InsufficientDepthError(
            f"need {levels} s entries and {levels - 1} t entries, "
            f"have {len(jf.s)} and {len(jf.t)}"
        )
    tail = Series.one(count)
    one = Series.one(count)
    for k in range(levels - 1, -1, -1):
        linear = Series.one(count).mul_z(1).scale(jf.s[k])
        quad = tail.mul_z(2).scale(jf.t[k]) if k < len(jf.t) else Series.zero(count)
        tail = one / (one - linear - quad)
    return tail.poly_coeffs()


def jfraction_from_moments(fn: MomentFunctional, depth: int) -> JFraction:
    """Extract s_0..s_(depth-1) and t_0..t_(depth-1) from a moment
    sequence via orthogonal polynomials.  Left inverse of
    ``moments_from_jfraction`` on representable sequences.

    Needs moments up to index 2*depth.  Raises NotDivisibleError if some
    s_k or t_k leaves the polynomial ring, BreakdownError if a norm
    F(p_k^2) vanishes (no J-fraction of this depth exists).
    """
    if depth < 1:
        raise ValueError("jfraction_from_moments requires depth >= 1")
    if len(fn.moments) < 2 * depth + 1:
        raise InsufficientMomentsError(
            f"need {2 * depth + 1} moments for depth {depth}, have {len(fn.moments)}"
        )
    s: list[Poly] = []
    t: list[Poly] = []
    p_prev = ZPoly.zero()
    p_cur = ZPoly.one()
    z = ZPoly.z()
    for k in range(depth):
        norm = functional_apply(fn, p_cur * p_cur)
        if norm.is_zero():
            raise BreakdownError(k)
        try:
            s_k = poly_exact_div(functional_apply(fn, z * p_cur * p_cur), norm)
        except NotDivisibleError as exc:
            raise NotDivisibleError(f"s_{k} is not polynomial: {exc}") from exc
        s.append(s_k)
        p_next = (z - ZPoly([s_k])) * p_cur
        if k > 0:
            p_next = p_next - p_prev.scale(t[k - 1])
        norm_next = functional_apply(fn, p_next * p_next)
        try:
            t_k = poly_exact_div(norm_next, norm)
        except NotDivisibleError as exc:
            raise NotDivisibleError(f"t_{k} is not polynomial: {exc}") from exc
        if t_k.is_zero():
            raise BreakdownError(
                k + 1, f"t_{k} vanishes: no J-fraction of depth > {k + 1}"
            )
        t.append(t_k)
        p_prev, p_cur = p_cur, p_next
    return JFraction(tuple(s), tuple(t))


def closed_jfraction(
    family: str,
    depth: int,
    a: Poly | None = None,
    b: Poly | None = None,
) -> JFraction:
    """Closed-form J-fraction arrays, both of length `depth`.

    * narayana:      s_0 = a+b, t_0 = q(a+b)b, then
                     s_n = q^n (a + q^(n-1) b + q^n b),
                     t_n = q^(3n+1) b (q^n b + a)
    * cstar_shift1:  s_k = q^k (a+b), t_k = q^(2k+1) ab
                     (moments are the coefficients of f*, i.e.
                     C*_(n+1)/a)
    * cstar_shift0:  t_k = q^(2k) ab with s_0 = a and
                     s_k = q^(k-1) b + q^k a for k >= 1; the s array is
                     forced by the moments C*_n and confirmed by the
                     round-trip extraction
    * motzkin:       s_k = q^k, t_k = q^(2k+1)
    """
    if depth < 1:
        raise ValueError("closed_jfraction requires depth >= 1")
    if a is None:
        a = Poly.variable("a")
    if b is None:
        b = Poly.variable("b")
    s: list[Poly] = []
    t: list[Poly] = []
    if family == "narayana":
        for n in range(depth):
            if n == 0:
                s.append(a + b)
                t.append(Poly.monomial(1, 1) * (a + b) * b)
            else:
                s.append(Poly.monomial(1, n) * (a + Poly.monomial(1, n - 1) * b + Poly.monomial(1, n) * b))
                t.append(Poly.monomial(1, 3 * n + 1) * b * (Poly.monomial(1, n) * b + a))
    elif family == "cstar_shift1":
        for k in range(depth):
            s.append(Poly.monomial(1, k) * (a + b))
            t.append(Poly.monomial(1, 2 * k + 1) * a * b)
    elif family == "cstar_shift0":
        for k in range(depth):
            if k == 0:
                s.append(a)
            else:
                s.append(Poly.monomial(1, k - 1) * b + Poly.monomial(1, k) * a)
            t.append(Poly.monomial(1, 2 * k) * a * b)
    elif family == "motzkin":
        for k in range(depth):
            s.append(Poly.monomial(1, k))
            t.append(Poly.monomial(1, 2 * k + 1))
    else:
        raise ValueError(f"unknown closed family {family!r}")
    return JFraction(tuple(s), tuple(t))


def orthopoly(jf: JFraction, n: int) -> ZPoly:
    """Monic orthogonal polynomial p_n from the three-term recurrence
    p_k = (z - s_(k-1)) p_(k-1) - t_(k-2) p_(k-2), p_0 = 1."""
    if n < 0:
        raise ValueError("orthopoly requires n >= 0")
    if len(jf.s) < n or (n >= 2 and len(jf.t) < n - 1):
        raise InsufficientDepthError(
            f"p_{n} needs {n} s entries and {max(n - 1, 0)} t entries, "
            f"have {len(jf.s)} and {len(jf.t)}"
        )
    p_prev = ZPoly.zero()
    p_cur = ZPoly.one()
    z = ZPoly.z()
    for k in range(n):
        p_next = (z - ZPoly([jf.s[k]])) * p_cur
        if k > 0:
            p_next = p_next - p_prev.scale(jf.t[k - 1])
        p_prev, p_cur = p_cur, p_next
    return p_cur


def _qbinom_edge(m: int, r: int) -> Poly:
    # Gaussian binomial with the boundary conventions the closed-form
    # orthogonal polynomials need: [m m] = 1 and [m 0] = 1 hold also for
    # negative m, everything else with r < 0 or r > m is zero.
    if m < 0:
        return Poly.one() if (r == 0 or r == m) else Poly.zero()
    return qbinom(m, r)


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def orthopoly_explicit(family: str, n: int) -> ZPoly:
    """Closed-form orthogonal polynomials for the four families.

    These evaluate double sums of Gaussian binomials; each family's
    formula agrees coefficientwise with the recurrence-built p_n of its
    J-fraction, which is the authoritative object.  Conventions needed
    to achieve that agreement:

    * boundary binomials follow ``_qbinom_edge`` ([-1 -1] = [-1 0] = 1);
    * narayana_ab multiplies by rising products
      (a+b)(a+qb)...(a+q^(n-j-1)b), not plain powers of (a+b);
    * narayana_01 uses the exponent 2*C(n-k,2) on q (the doubled
      exponent is forced by the recurrence, exactly as the generalized
      q-exponential's exponent is forced by its functional equation).
    """
    if n < 0:
        raise ValueError("orthopoly_explicit requires n >= 0")
    A = Poly.variable("a")
    B = Poly.variable("b")
    coeffs: list[Poly] = []
    if family == "narayana_ab":
        for k in range(n + 1):
            inner = Poly.zero()
            for j in range(k, n + 1):
                term = _qbinom_edge(n + k - j, k) * _qbinom_edge(j - 1, k - 1)
                if term.is_zero():
                    continue
                inner = inner + (
                    Poly.monomial(1, _binom2(n + 1) - _binom2(n + k + 1 - j))
                    * term
                    * B ** (j - k)
                    * qrising(A, B, n - j)
                )
            sign = -1 if (n - k) % 2 else 1
            coeffs.append(Poly.monomial(sign, _binom2(n - k)) * inner)
    elif family == "narayana_01":
        for k in range(n + 1):
            sign = -1 if (n - k) % 2 else 1
            coeffs.append(Poly.monomial(sign, 2 * _binom2(n - k)) * qbinom(n + k, 2 * k))
    elif family == "cstar_shift1":
        for k in range(n + 1):
            inner = Poly.zero()
            for j in range(k, n + 1):
                term = _qbinom_edge(n + k - j, k) * _qbinom_edge(j, k)
                if term.is_zero():
                    continue
                inner = inner + term * A ** (j - k) * B ** (n - j)
            sign = -1 if (n - k) % 2 else 1
            coeffs.append(Poly.monomial(sign, _binom2(n - k)) * inner)
    elif family == "cstar_shift0":
        for k in range(n + 1):
            inner = Poly.zero()
            for j in range(k, n + 1):
                term = _qbinom_edge(n + k - j, k) * _qbinom_edge(j - 1, j - k)
                if term.is_zero():
                    continue
                inner = inner + term * B ** (j - k) * A ** (n - j)
            sign = -1 if (n - k) % 2 else 1
            coeffs.append(Poly.monomial(sign, _binom2(n - k)) * inner)
    else:
        raise ValueError(f"unknown explicit family {family!r}")
    return ZPoly(coeffs)
