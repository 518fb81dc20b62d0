"""Registry of named, depth-parameterized identity checks.

Every check is deterministic and side-effect-free: at depth d it compares
sequence entries up to index d, series coefficients up to z^d, and Hankel
matrices up to size (d+1) x (d+1), exactly (no tolerances; everything is
symbolic equality of canonical polynomials).  A check that passes at
depth d passes at every smaller depth, because each one iterates plainly
over indices.

``run_check`` turns the first failing instance into a
:class:`CheckReport` naming the failing index tuple and showing both
sides in canonical form; library arithmetic errors raised inside a check
become failures as well, never crashes.

Checks reach the sequence generators through the module object
(``sequences.qcatalan`` etc.), so a test harness can inject a deliberately
perturbed generator by patching that module attribute and watch the
affected identity fail with a counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import hankel as hankel_mod
from . import jfraction as jfraction_mod
from . import sequences
from .errors import QCatalanError, UnknownCheckError
from .polyring import Poly, qbinom, qrising
from .series import Series, build_Er, build_Gr, build_h, build_hstar, build_ratio_series

_A = Poly.variable("a")
_B = Poly.variable("b")
_Q = Poly.variable("q")


@dataclass(frozen=True)
class CheckReport:
    name: str
    depth: int
    passed: bool
    detail: str | None = None


def _fail(index, lhs, rhs) -> str:
    return f"first failing index {index}: lhs = {lhs} ; rhs = {rhs}"


def _series_mismatch(name: str, s1: Series, s2: Series) -> str | None:
    upto = min(s1.order, s2.order)
    for k in range(upto):
        if not (s1.coeff(k) == s2.coeff(k)):
            return _fail((name, k), s1.coeff(k), s2.coeff(k))
    return None


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _narayana_number(n: int, k: int) -> int:
    if k < 1 or k > n:
        return 0
    return math.comb(n, k) * math.comb(n, k - 1) // n


# ---------------------------------------------------------------------------
# section a: q-exponentials and q-Gould polynomials
# ---------------------------------------------------------------------------


def _check_eq1_catalan_ratio(depth: int) -> str | None:
    coeffs = build_ratio_series("f_catalan", order=depth + 1).poly_coeffs()
    for n in range(depth + 1):
        expected = sequences.qcatalan(n)
        if coeffs[n] != expected:
            return _fail((n,), coeffs[n], expected)
    return None


def _check_eq3_er_functional(depth: int) -> str | None:
    for r in range(4):
        er = build_Er(r, depth + 1)  # raises internally if the identity fails
        for k in range(1, depth + 1):
            lhs = er.coeff(k) * (Poly.one() - Poly.monomial(1, k))
            rhs = er.coeff(k - 1) * Poly.monomial(1, r * (k - 1))
            if not (lhs == rhs):
                return _fail((r, k), lhs, rhs)
    return None


def _check_eq5_gr_recurrence(depth: int) -> str | None:
    order = depth + 1
    for r in range(4):
        for n in range(min(depth, 6) + 1):
            lhs = build_Gr(r, n + 1, order)
            grn = build_Gr(r, n, order)
            tail = build_Gr(r, n + r, order).scale(Poly.monomial(1, n)).mul_z(1)
            detail = _series_mismatch(f"r={r},n={n},z^", lhs, grn + tail)
            if detail:
                return detail
    return None


def _check_eq6_gould_coeffs(depth: int) -> str | None:
    for r in range(4):
        for n in range(depth + 1):
            if sequences.gould(0, n, r) != Poly.one():
                return _fail((0, n, r), sequences.gould(0, n, r), Poly.one())
        for k in range(1, depth + 1):
            if not sequences.gould(k, 0, r).is_zero():
                return _fail((k, 0, r), sequences.gould(k, 0, r), Poly.zero())
            for n in range(depth + 1):
                lhs = sequences.gould(k, n + 1, r) - sequences.gould(k, n, r)
                rhs = Poly.monomial(1, n) * sequences.gould(k - 1, n + r, r)
                if lhs != rhs:
                    return _fail((k, n, r), lhs, rhs)
    # cross-path: the same values must appear as series coefficients
    bound = min(depth, 8)
    for r in range(4):
        for n in range(bound + 1):
            series = build_Gr(r, n, bound + 1).poly_coeffs()
            for k in range(bound + 1):
                if series[k] != sequences.gould(k, n, r):
                    return _fail(("series", k, n, r), series[k], sequences.gould(k, n, r))
    return None


def _check_eq7_gr1(depth: int) -> str | None:
    order = depth + 1
    for r in range(4):
        lhs = build_Gr(r, 1, order)
        rhs = Series.one(order) + build_Gr(r, r, order).mul_z(1)
        detail = _series_mismatch(f"r={r},z^", lhs, rhs)
        if detail:
            return detail
    return None


def _check_eq8_eq9_products(depth: int) -> str | None:
    order = depth + 1
    bound = min(depth, 4)
    for r in range(4):
        g1 = build_Gr(r, 1, order)
        for n in range(bound + 1):
            product = Series.one(order)
            for j in range(n):
                product = product * g1.scale_z(j)
            detail = _series_mismatch(f"eq8,r={r},n={n},z^", build_Gr(r, n, order), product)
            if detail:
                return detail
        for m in range(bound + 1):
            for n in range(bound + 1):
                lhs = build_Gr(r, m + n, order)
                rhs = build_Gr(r, m, order) * build_Gr(r, n, order).scale_z(m)
                detail = _series_mismatch(f"eq9,r={r},m={m},n={n},z^", lhs, rhs)
                if detail:
                    return detail
    return None


# ---------------------------------------------------------------------------
# section b: q-Narayana polynomials
# ---------------------------------------------------------------------------


def _check_eq12_f_functional(depth: int) -> str | None:
    order = depth + 1
    h = build_h(_A, _B, order)
    # h(z) - h(qz) = -a z h(qz) - b z h(q^2 z)
    lhs = h - h.scale_z(1)
    rhs = -(h.scale_z(1).mul_z(1).scale(_A)) - h.scale_z(2).mul_z(1).scale(_B)
    detail = _series_mismatch("h-diff,z^", lhs, rhs)
    if detail:
        return detail
    f = build_ratio_series("f_narayana", order=order)
    rhs = Series.one(order) + f.mul_z(1).scale(_A) + (f * f.scale_z(1)).mul_z(1).scale(_B)
    return _series_mismatch("f,z^", f, rhs)


def _check_eq13_15_recurrence_vs_ratio(depth: int) -> str | None:
    coeffs = build_ratio_series("f_narayana", order=depth + 1).poly_coeffs()
    for n in range(depth + 1):
        expected = sequences.qnarayana_poly(n)
        if coeffs[n] != expected:
            return _fail((n,), coeffs[n], expected)
    return None


def _check_eq14_q1_closed_form(depth: int) -> str | None:
    for n in range(1, depth + 1):
        lhs = sequences.qnarayana_poly(n).substitute({"q": 1})
        rhs = Poly.zero()
        for k in range(1, n + 1):
            rhs = rhs + _narayana_number(n, k) * _B ** (n - k) * (_A + _B) ** k
        if lhs != rhs:
            return _fail((n,), lhs, rhs)
    return None


def _check_eq16_triangle_roundtrip(depth: int) -> str | None:
    triangle = sequences.narayana_triangle(depth)
    for n in range(depth + 1):
        total = Poly.zero()
        for k, entry in enumerate(triangle.rows[n]):
            total = total + entry * qrising(_A, _B, k) * _B ** (n - k)
        expected = sequences.qnarayana_poly(n)
        if total != expected:
            return _fail((n,), total, expected)
        for k, entry in enumerate(triangle.rows[n]):
            if n >= 1:
                at_one = entry.substitute({"q": 1})
                if at_one != Poly.const(_narayana_number(n, k)):
                    return _fail((n, k, "q=1"), at_one, _narayana_number(n, k))
    return None


def _check_eq17_ratio_identity(depth: int) -> str | None:
    order = depth + 1
    f = build_ratio_series("f_narayana", order=order)
    f_qb = f.substitute({"b": _Q * _B})
    one = Series.one(order)
    lhs = (f.scale_z(1) - one) * f
    rhs = ((f - one) * f_qb.scale_z(1)).scale(_Q)
    return _series_mismatch("z^", lhs, rhs)


def _check_eq21_23_g_chain(depth: int) -> str | None:
    order = depth + 1
    f = build_ratio_series("f_narayana", order=order + 1)
    g = build_ratio_series("g", order=order)
    one = Series.one(order)
    # f(qz) = 1 + (a+b) q z g(z)
    lhs = f.scale_z(1).truncate(order)
    rhs = one + g.mul_z(1).scale((_A + _B) * _Q)
    detail = _series_mismatch("eq21,z^", lhs, rhs)
    if detail:
        return detail
    # f = 1 + (a+b) z f + q (a+b) b z^2 f g
    ftrunc = f.truncate(order)
    rhs = (
        one
        + ftrunc.mul_z(1).scale(_A + _B)
        + (ftrunc * g).mul_z(2).scale(_Q * (_A + _B) * _B)
    )
    detail = _series_mismatch("eq22,z^", ftrunc, rhs)
    if detail:
        return detail
    # g = 1 + q(a+b+qb) z g + q^4 b (a+qb) z^2 g(z,a,b) g(qz,a,qb)
    g_qb = g.substitute({"b": _Q * _B})
    rhs = (
        one
        + g.mul_z(1).scale(_Q * (_A + _B + _Q * _B))
        + (g * g_qb.scale_z(1)).mul_z(2).scale(
            Poly.monomial(1, 4) * _B * (_A + _Q * _B)
        )
    )
    return _series_mismatch("eq23,z^", g, rhs)


def _check_thm_eq18_eq19_hankel(depth: int) -> str | None:
    for shift in (0, 1):
        moments = [sequences.qnarayana_poly(i) for i in range(2 * depth + shift + 1)]
        dets = hankel_mod.hankel_det_prefix(moments, shift, depth)
        for n in range(depth + 1):
            expected = hankel_mod.expected_hankel("narayana", shift, n)
            if dets[n] != expected:
                return _fail((shift, n), dets[n], expected)
    # remark: specializing (a,b) -> (0,1) gives the pure q-Catalan powers
    for shift in (0, 1):
        moments = [sequences.qcatalan(i) for i in range(2 * depth + shift + 1)]
        dets = hankel_mod.hankel_det_prefix(moments, shift, depth)
        for n in range(depth + 1):
            expected = hankel_mod.expected_hankel("qcatalan", shift, n)
            if dets[n] != expected:
                return _fail(("qcatalan", shift, n), dets[n], expected)
            reduced = hankel_mod.expected_hankel(
                "narayana", shift, n, Poly.zero(), Poly.one()
            )
            if reduced != expected:
                return _fail(("reduction", shift, n), reduced, expected)
    return None


# ---------------------------------------------------------------------------
# the lemma: J-fractions, Hankel products, orthogonality
# ---------------------------------------------------------------------------


def _lemma_instances(depth: int):
    yield "narayana", jfraction_mod.closed_jfraction("narayana", depth + 2)
    yield "cstar_shift1", jfraction_mod.closed_jfraction("cstar_shift1", depth + 2)
    yield "cstar_shift0", jfraction_mod.closed_jfraction("cstar_shift0", depth + 2)
    yield "motzkin", jfraction_mod.closed_jfraction("motzkin", depth + 2)
    # fixed small integer fractions (deterministic registry checks;
    # randomized instances live in the test suite)
    yield "int-a", jfraction_mod.JFraction(
        tuple(Poly.const((k % 3)) for k in range(depth + 2)),
        tuple(Poly.const(1 + (k % 2)) for k in range(depth + 2)),
    )
    yield "int-b", jfraction_mod.JFraction(
        tuple(Poly.const(1) for _ in range(depth + 2)),
        tuple(Poly.const(3) for _ in range(depth + 2)),
    )


def _product_law_value(jf, n: int) -> Poly:
    out = Poly.one()
    for k in range(n):
        out = out * jf.t[k] ** (n - k)
    return out


def _check_lemma_product_law(depth: int) -> str | None:
    for label, jf in _lemma_instances(depth):
        moments = jfraction_mod.moments_from_jfraction(jf, 2 * depth + 1)
        dets = hankel_mod.hankel_det_prefix(moments, 0, depth)
        for n in range(depth + 1):
            expected = _product_law_value(jf, n)
            if dets[n] != expected:
                return _fail((label, n), dets[n], expected)
    return None


def _check_lemma_shifted_law(depth: int) -> str | None:
    for label, jf in _lemma_instances(depth):
        moments = jfraction_mod.moments_from_jfraction(jf, 2 * depth + 2)
        d_vals = hankel_mod.d_sequence(jf, depth + 2)
        dets = hankel_mod.hankel_det_prefix(moments, 1, depth)
        for n in range(depth + 1):
            expected = d_vals[n + 1] * _product_law_value(jf, n)
            if dets[n] != expected:
                return _fail((label, n), dets[n], expected)
    return None


def _t_prefix_product(jf, n: int) -> Poly:
    out = Poly.one()
    for k in range(n):
        out = out * jf.t[k]
    return out


def _check_lemma_orthogonality(depth: int) -> str | None:
    for label, jf in _lemma_instances(depth):
        moments = jfraction_mod.moments_from_jfraction(jf, 2 * depth + 1)
        fn = jfraction_mod.MomentFunctional(tuple(moments))
        polys = [jfraction_mod.orthopoly(jf, k) for k in range(depth + 1)]
        for n in range(depth + 1):
            for m in range(n + 1):
                value = jfraction_mod.functional_apply(fn, polys[n] * polys[m])
                expected = _t_prefix_product(jf, n) if n == m else Poly.zero()
                if value != expected:
                    return _fail((label, n, m), value, expected)
    return None


def _check_remark_orthopoly_explicit(depth: int) -> str | None:
    cases = (
        ("narayana_ab", jfraction_mod.closed_jfraction("narayana", depth + 1)),
        (
            "narayana_01",
            jfraction_mod.closed_jfraction("narayana", depth + 1, Poly.zero(), Poly.one()),
        ),
        ("cstar_shift1", jfraction_mod.closed_jfraction("cstar_shift1", depth + 1)),
        ("cstar_shift0", jfraction_mod.closed_jfraction("cstar_shift0", depth + 1)),
    )
    for family, jf in cases:
        for n in range(depth + 1):
            recur = jfraction_mod.orthopoly(jf, n)
            explicit = jfraction_mod.orthopoly_explicit(family, n)
            if recur != explicit:
                for k in range(n + 1):
                    if recur.coeff(k) != explicit.coeff(k):
                        return _fail((family, n, k), explicit.coeff(k), recur.coeff(k))
    return None


# ---------------------------------------------------------------------------
# section c: the second family C*
# ---------------------------------------------------------------------------


def _check_eq24_26_hstar_functional(depth: int) -> str | None:
    order = depth + 1
    hs = build_hstar(_A, _B, order)
    # h*(z) - h*(qz) = -z(a+b) h*(qz) - q a b z^2 h*(q^2 z); this
    # orientation is the one consistent with the f* functional equation
    # (the z^1 coefficient decides it)
    lhs = hs - hs.scale_z(1)
    rhs = -(hs.scale_z(1).mul_z(1).scale(_A + _B)) - hs.scale_z(2).mul_z(2).scale(
        _Q * _A * _B
    )
    detail = _series_mismatch("hstar-diff,z^", lhs, rhs)
    if detail:
        return detail
    fstar = build_ratio_series("f_star", order=order)
    rhs = (
        Series.one(order)
        + fstar.mul_z(1).scale(_A + _B)
        + (fstar * fstar.scale_z(1)).mul_z(2).scale(_Q * _A * _B)
    )
    return _series_mismatch("eq26,z^", fstar, rhs)


_CSTAR_GOLDEN = (
    "1",
    "a",
    "a^2 + a*b",
    "a^3 + 2*a^2*b + a*b^2 + q*a^2*b",
    "a^4 + 3*a^3*b + 3*a^2*b^2 + a*b^3 + 2*q*a^3*b + 2*q*a^2*b^2 + q^2*a^3*b + q^2*a^2*b^2",
)


def _check_eq27_29_cstar(depth: int) -> str | None:
    for n in range(min(depth, 4) + 1):
        if str(sequences.cstar(n)) != _CSTAR_GOLDEN[n]:
            return _fail((n, "golden"), sequences.cstar(n), _CSTAR_GOLDEN[n])
    # a f*(z) = sum C*_(n+1) z^n
    coeffs = build_ratio_series("f_star", order=depth + 1).poly_coeffs()
    for n in range(depth + 1):
        if _A * coeffs[n] != sequences.cstar(n + 1):
            return _fail((n, "fstar"), _A * coeffs[n], sequences.cstar(n + 1))
    triangle = sequences.nstar_triangle(depth)
    for n in range(depth + 1):
        total = Poly.zero()
        for k, entry in enumerate(triangle.rows[n]):
            total = total + entry * _A ** k * _B ** (n - k)
        if total != sequences.cstar(n):
            return _fail((n, "roundtrip"), total, sequences.cstar(n))
        for k, entry in enumerate(triangle.rows[n]):
            if n >= 1:
                if entry.substitute({"q": 1}) != Poly.const(_narayana_number(n, k)):
                    return _fail((n, k, "q=1"), entry.substitute({"q": 1}),
                                 _narayana_number(n, k))
                binom = math.comb(n - 1, k - 1) if k >= 1 else 0
                if entry.substitute({"q": 0}) != Poly.const(binom):
                    return _fail((n, k, "q=0"), entry.substitute({"q": 0}), binom)
    for n in range(1, depth + 1):
        flat = sequences.cstar(n).substitute({"a": 1, "b": 1, "q": 0})
        if flat != Poly.const(2 ** (n - 1)):
            return _fail((n, "a=b=1,q=0"), flat, 2 ** (n - 1))
    return None


def _check_eq28_F_identity(depth: int) -> str | None:
    order = depth + 1
    F = build_ratio_series("F", order=order)
    F_swap = F.substitute({"a": _B, "b": _Q * _A})
    rhs = Series.one(order) + (F * F_swap).mul_z(1).scale(_A)
    return _series_mismatch("z^", F, rhs)


def _check_eq30_31_hankel_cstar(depth: int) -> str | None:
    for shift in (1, 2):
        moments = [sequences.cstar(i) for i in range(2 * depth + shift + 1)]
        dets = hankel_mod.hankel_det_prefix(moments, shift, depth)
        for n in range(depth + 1):
            expected = hankel_mod.expected_hankel("cstar", shift, n)
            if dets[n] != expected:
                return _fail((shift, n), dets[n], expected)
    return None


def _check_cstar_shift0_hankel(depth: int) -> str | None:
    moments = [sequences.cstar(i) for i in range(2 * depth + 1)]
    dets = hankel_mod.hankel_det_prefix(moments, 0, depth)
    for n in range(depth + 1):
        expected = hankel_mod.expected_hankel("cstar", 0, n)
        if dets[n] != expected:
            return _fail((n,), dets[n], expected)
    return None


_POLYA_GESSEL_GOLDEN = (
    "1",
    "1",
    "1 + b",
    "1 + 2*b + q*b + b^2",
    "1 + 3*b + 2*q*b + 3*b^2 + q^2*b + 2*q*b^2 + b^3 + q^2*b^2",
)


def _check_polya_gessel_values(depth: int) -> str | None:
    # C*_n(1, s, q) with the second slot b playing the role of s
    for n in range(min(depth, 4) + 1):
        value = sequences.cstar(n).substitute({"a": 1})
        if str(value) != _POLYA_GESSEL_GOLDEN[n]:
            return _fail((n,), value, _POLYA_GESSEL_GOLDEN[n])
    return None


def _check_cn_eq_cstar_1_q_q2(depth: int) -> str | None:
    for n in range(depth + 1):
        value = sequences.cstar(n).substitute({"a": 1, "b": _Q, "q": _Q * _Q})
        expected = sequences.qcatalan(n)
        if value != expected:
            return _fail((n,), value, expected)
    return None


def _check_hstar_is_E2(depth: int) -> str | None:
    order = depth + 1
    hs = build_hstar(_A, _B, order).substitute({"a": 1, "b": _Q, "q": _Q * _Q})
    e2 = build_Er(2, order)
    e2_neg = Series([c if k % 2 == 0 else -c for k, c in enumerate(e2.coeffs())])
    detail = _series_mismatch("hstar,z^", hs, e2_neg)
    if detail:
        return detail
    # the inner sum: sum_j [k j]_(q^2) q^j = (1+q)(1+q^2)...(1+q^k)
    for k in range(depth + 1):
        total = Poly.zero()
        for j in range(k + 1):
            total = total + qbinom(k, j).substitute({"q": _Q * _Q}) * Poly.monomial(1, j)
        product = Poly.one()
        for i in range(1, k + 1):
            product = product * (Poly.one() + Poly.monomial(1, i))
        if total != product:
            return _fail((k, "inner"), total, product)
    return None


def _check_gauss_specialization(depth: int) -> str | None:
    for n in range(depth + 1):
        odd = sequences.rogers_szego(2 * n + 1).substitute({"a": 1, "b": -1})
        if not odd.is_zero():
            return _fail((n, "odd"), odd, Poly.zero())
        even = sequences.rogers_szego(2 * n).substitute({"a": 1, "b": -1})
        product = Poly.one()
        for i in range(1, n + 1):
            product = product * (Poly.one() - Poly.monomial(1, 2 * i - 1))
        if even != product:
            return _fail((n, "even"), even, product)
    for n in range(depth + 1):
        odd = sequences.cstar(2 * n + 1).substitute({"a": 1, "b": -1})
        sign = -1 if n % 2 else 1
        expected = Poly.monomial(sign, n) * sequences.qcatalan(n).substitute({"q": _Q * _Q})
        if odd != expected:
            return _fail((n, "cstar-odd"), odd, expected)
        even = sequences.cstar(2 * n + 2).substitute({"a": 1, "b": -1})
        if not even.is_zero():
            return _fail((n, "cstar-even"), even, Poly.zero())
    return None


def _check_nstar_symmetry(depth: int) -> str | None:
    triangle = sequences.nstar_triangle(depth)
    for n in range(1, depth + 1):
        for k in range(1, n + 1):
            if triangle.entry(n, k) != triangle.entry(n, n - k + 1):
                return _fail((n, k), triangle.entry(n, k), triangle.entry(n, n - k + 1))
    return None


def _check_narayana_q0(depth: int) -> str | None:
    for n in range(depth + 1):
        flat = sequences.qnarayana_poly(n).substitute({"q": 0})
        if flat != (_A + _B) ** n:
            return _fail((n,), flat, (_A + _B) ** n)
    triangle = sequences.narayana_triangle(depth)
    for n in range(1, depth + 1):
        for k in range(n + 1):
            binom = math.comb(n - 1, k - 1) if k >= 1 else 0
            if triangle.entry(n, k).substitute({"q": 0}) != Poly.const(binom):
                return _fail((n, k), triangle.entry(n, k).substitute({"q": 0}), binom)
    return None


# ---------------------------------------------------------------------------
# section d: q-Motzkin numbers
# ---------------------------------------------------------------------------

_MOTZKIN_GOLDEN = ("1", "1", "1 + q", "1 + 2*q + q^2", "1 + 3*q + 3*q^2 + q^3 + q^4")


def _check_motzkin_values(depth: int) -> str | None:
    for n in range(min(depth, 4) + 1):
        if str(sequences.qmotzkin(n)) != _MOTZKIN_GOLDEN[n]:
            return _fail((n,), sequences.qmotzkin(n), _MOTZKIN_GOLDEN[n])
    jf = jfraction_mod.closed_jfraction("motzkin", (depth + 2) // 2 + 1)
    moments = jfraction_mod.moments_from_jfraction(jf, depth + 1)
    for n in range(depth + 1):
        if moments[n] != sequences.qmotzkin(n):
            return _fail((n, "jfraction"), moments[n], sequences.qmotzkin(n))
    return None


def _check_motzkin_hankel(depth: int) -> str | None:
    for shift in (0, 1):
        moments = [sequences.qmotzkin(i) for i in range(2 * depth + shift + 1)]
        dets = hankel_mod.hankel_det_prefix(moments, shift, depth)
        for n in range(depth + 1):
            expected = hankel_mod.expected_hankel("motzkin", shift, n)
            if dets[n] != expected:
                return _fail((shift, n), dets[n], expected)
    return None


def _check_motzkin_d_periodic(depth: int) -> str | None:
    upto = max(12, 2 * depth)
    jf = jfraction_mod.closed_jfraction("motzkin", upto)
    d_vals = hankel_mod.d_sequence(jf, upto)
    for n, d in enumerate(d_vals):
        expected = Poly.const(hankel_mod.MOTZKIN_DELTA[n % 6])
        if d.substitute({"q": 1}) != expected:
            return _fail((n,), d.substitute({"q": 1}), expected)
    return None


def _check_gould_special_values(depth: int) -> str | None:
    for k in range(depth + 1):
        for n in range(depth + 1):
            lhs = sequences.gould(k, n, 0)
            rhs = Poly.monomial(1, _binom2(k)) * qbinom(n, k)
            if lhs != rhs:
                return _fail((k, n, "r=0"), lhs, rhs)
            if n + k >= 1:
                lhs = sequences.gould(k, n, 1)
                rhs = qbinom(n + k - 1, k)
                if lhs != rhs:
                    return _fail((k, n, "r=1"), lhs, rhs)
    for r in range(4):
        for k in range(depth + 1):
            for n in range(1, depth + 1):
                value = sequences.gould(k, n, r).substitute({"q": 1}).as_int()
                # n/(n+rk) * C(n+rk, k), compared cross-multiplied
                if value * (n + r * k) != n * math.comb(n + r * k, k):
                    return _fail((k, n, r, "q=1"), value,
                                 f"{n}/{n + r * k} * C({n + r * k},{k})")
    return None


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_REGISTRY: dict[str, tuple] = {
    "eq1_catalan_ratio": (
        _check_eq1_catalan_ratio,
        "E_2(-qz)/E_2(-z) expands to the q-Catalan generating function",
    ),
    "eq3_er_functional": (
        _check_eq3_er_functional,
        "E_r(z) - E_r(qz) = z E_r(q^r z)",
    ),
    "eq5_gr_recurrence": (
        _check_eq5_gr_recurrence,
        "G_r(z,n+1) = G_r(z,n) + q^n z G_r(z,n+r)",
    ),
    "eq6_gould_coeffs": (
        _check_eq6_gould_coeffs,
        "(G(k,n+1,r) - G(k,n,r))/q^n = G(k-1,n+r,r) with G(k,0,r) = [k=0], "
        "G(0,n,r) = 1, matching the series coefficients",
    ),
    "eq7_gr1": (
        _check_eq7_gr1,
        "G_r(z,1) = 1 + z G_r(z,r)",
    ),
    "eq8_eq9_products": (
        _check_eq8_eq9_products,
        "G_r(z,n) = G_r(z,1) G_r(qz,1) ... G_r(q^(n-1)z,1) and "
        "G_r(z,m+n) = G_r(z,m) G_r(q^m z,n)",
    ),
    "eq12_f_functional": (
        _check_eq12_f_functional,
        "f = 1 + a z f + b z f f(qz), via h(z) - h(qz) = -az h(qz) - bz h(q^2 z)",
    ),
    "eq13_15_recurrence_vs_ratio": (
        _check_eq13_15_recurrence_vs_ratio,
        "the recurrence C_n = a C_(n-1) + b sum q^k C_k C_(n-1-k) matches "
        "the coefficients of h(qz)/h(z)",
    ),
    "eq14_q1_closed_form": (
        _check_eq14_q1_closed_form,
        "at q = 1 the coefficients reduce to sum_k N(n,k) b^(n-k) (a+b)^k "
        "with Narayana numbers N(n,k)",
    ),
    "eq16_triangle_roundtrip": (
        _check_eq16_triangle_roundtrip,
        "C_n(a,b,q) = sum_k N(n,k,q) (a+b)(a+qb)...(a+q^(k-1)b) b^(n-k), "
        "with N(n,k,1) the Narayana numbers",
    ),
    "eq17_ratio_identity": (
        _check_eq17_ratio_identity,
        "(f(qz)-1) f(z,a,b) = q (f(z)-1) f(qz,a,qb)",
    ),
    "eq21_23_g_chain": (
        _check_eq21_23_g_chain,
        "f(qz) = 1 + (a+b) q z g(z); f = 1 + (a+b)zf + q(a+b)b z^2 f g; "
        "g = 1 + q(a+b+qb) z g + q^4 b(a+qb) z^2 g(z,a,b) g(qz,a,qb)",
    ),
    "thm_eq18_eq19_hankel": (
        _check_thm_eq18_eq19_hankel,
        "det(C_(i+j)(a,b,q)) and det(C_(i+j+1)(a,b,q)) equal their "
        "rising-product closed forms; at (a,b) = (0,1) the exponents are "
        "n(n+1)(4n-1)/6 and n(n+1)(4n+5)/6",
    ),
    "lemma_product_law": (
        _check_lemma_product_law,
        "det(mu_(i+j))_(0..n) = t_0^n t_1^(n-1) ... t_(n-1)",
    ),
    "lemma_shifted_law": (
        _check_lemma_shifted_law,
        "det(mu_(i+j+1))_(0..n) = d_(n+1) t_0^n ... t_(n-1) with "
        "d_n = s_(n-1) d_(n-1) - t_(n-2) d_(n-2)",
    ),
    "lemma_orthogonality": (
        _check_lemma_orthogonality,
        "F(p_n p_m) = t_0 ... t_(n-1) [n = m] for the monic three-term "
        "recurrence polynomials",
    ),
    "remark_orthopoly_explicit": (
        _check_remark_orthopoly_explicit,
        "the four closed-form orthogonal polynomial families agree with "
        "the recurrence-built p_n",
    ),
    "eq24_26_hstar_functional": (
        _check_eq24_26_hstar_functional,
        "h*(z) - h*(qz) = -z(a+b)h*(qz) - qab z^2 h*(q^2 z) and "
        "f* = 1 + (a+b) z f* + q a b z^2 f* f*(qz)",
    ),
    "eq27_29_cstar": (
        _check_eq27_29_cstar,
        "C*_n = a C*_(n-1) + b sum_(k<=n-2) q^k C*_k C*_(n-1-k); "
        "a f* = sum C*_(n+1) z^n; C*_n = sum_k N*(n,k,q) a^k b^(n-k)",
    ),
    "eq28_F_identity": (
        _check_eq28_F_identity,
        "F(z,a,b,q) = 1 + a z F(z,a,b,q) F(z,b,qa,q)",
    ),
    "eq30_31_hankel_cstar": (
        _check_eq30_31_hankel_cstar,
        "det(C*_(i+j+1)) = a^(n+1) (ab)^C(n+1,2) q^(n(n+1)(2n+1)/6) and "
        "det(C*_(i+j+2)) = a^(n+1) (abq)^C(n+1,2) q^(n(n+1)(2n+1)/6) "
        "(a^(n+2)-b^(n+2))/(a-b)",
    ),
    "cstar_shift0_hankel": (
        _check_cstar_shift0_hankel,
        "det(C*_(i+j)) = (ab)^C(n+1,2) q^(n(n+1)(n-1)/3)",
    ),
    "polya_gessel_values": (
        _check_polya_gessel_values,
        "C*_n(1,s,q) starts 1, 1, 1+s, 1+2s+qs+s^2, ...",
    ),
    "cn_eq_cstar_1_q_q2": (
        _check_cn_eq_cstar_1_q_q2,
        "C_n(q) = C*_n(1, q, q^2)",
    ),
    "hstar_is_E2": (
        _check_hstar_is_E2,
        "h*(z,1,q,q^2) = E_2(-z), with inner sum "
        "sum_j [k j]_(q^2) q^j = (1+q)(1+q^2)...(1+q^k)",
    ),
    "gauss_specialization": (
        _check_gauss_specialization,
        "r_(2n+1)(1,-1) = 0, r_(2n)(1,-1) = (1-q)(1-q^3)...(1-q^(2n-1)); "
        "C*_(2n+1)(1,-1,q) = (-1)^n q^n C_n(q^2), C*_(2n+2)(1,-1,q) = 0",
    ),
    "nstar_symmetry": (
        _check_nstar_symmetry,
        "N*(n,k,q) = N*(n,n-k+1,q)",
    ),
    "narayana_q0": (
        _check_narayana_q0,
        "C_n(a,b,0) = (a+b)^n and N(n,k,0) = C(n-1,k-1)",
    ),
    "motzkin_values": (
        _check_motzkin_values,
        "M_n(q) starts 1, 1, 1+q, 1+2q+q^2, 1+3q+3q^2+q^3+q^4 and matches "
        "its continued-fraction moments",
    ),
    "motzkin_hankel": (
        _check_motzkin_hankel,
        "det(M_(i+j)) = q^(n(n+1)(2n+1)/6) and det(M_(i+j+1)) = "
        "q^(2 C(n+2,3)) d_(n+1)",
    ),
    "motzkin_d_periodic": (
        _check_motzkin_d_periodic,
        "the Motzkin d-sequence at q = 1 is 1, 1, 0, -1, -1, 0 repeating "
        "with period 6",
    ),
    "gould_special_values": (
        _check_gould_special_values,
        "G(k,n,0) = q^C(k,2) [n k], G(k,n,1) = [n+k-1 k], and at q = 1 "
        "G(k,n,r) = n/(n+rk) C(n+rk, k)",
    ),
}


def list_checks() -> list[tuple[str, str]]:
    """All registered checks as (name, identity description) pairs."""
    return [(name, anchor) for name, (_fn, anchor) in _REGISTRY.items()]


def run_check(name: str, depth: int) -> CheckReport:
    """Run one named check at the given depth.

    Arithmetic errors raised by the library while checking are converted
    to failures with the error message as detail.
    """
    if name not in _REGISTRY:
        raise UnknownCheckError(f"no check named {name!r}")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    fn = _REGISTRY[name][0]
    try:
        detail = fn(depth)
    except QCatalanError as exc:
        return CheckReport(name, depth, False, f"{type(exc).__name__}: {exc}")
    return CheckReport(name, depth, detail is None, detail)


def run_all(depth: int) -> list[CheckReport]:
    """Run every registered check, in registry order."""
    return [run_check(name, depth) for name in _REGISTRY]
