import pytest

from qcatalan.errors import NonUnitConstantTermError
from qcatalan.polyring import Poly, QFrac
from qcatalan.series import (
    Series,
    build_Er,
    build_Gr,
    build_h,
    build_hstar,
    build_ratio_series,
    series_arith,
)

Q = Poly.variable("q")
A = Poly.variable("a")
B = Poly.variable("b")


def negate_z(s: Series) -> Series:
    return Series([c if k % 2 == 0 else -c for k, c in enumerate(s.coeffs())])


def test_series_arith_examples():
    one = Series.one(8)
    geo = series_arith("div", one, Series([1, -1] + [0] * 6))
    assert geo.poly_coeffs() == [Poly.one()] * 8

    u = Series([1, Q, A * B, 3, 0, 1 - Q, 2, Q**4])
    assert series_arith("div", u, u) == Series.one(8)

    scaled = series_arith("scale_z", u, 1)
    for k in range(8):
        assert scaled.coeff(k) == u.coeff(k) * Poly.monomial(1, k)

    with pytest.raises(NonUnitConstantTermError):
        series_arith("div", one, Series([2] + [0] * 7))


def test_series_truncates_to_smaller_order():
    long = Series.one(10)
    short = Series([1, 1, 1])
    assert (long + short).order == 3
    assert (long * short).order == 3
    assert series_arith("mul", long, short).order == 3


def test_build_er_examples():
    for r in range(4):
        er = build_Er(r, 8)  # the defining identity is asserted inside
        assert er.coeff(0) == QFrac.one()
    e2 = build_Er(2, 5)
    assert e2.coeff(2) == QFrac.make(Poly.monomial(1, 2), {1: 1, 2: 1})
    assert e2.coeff(3) == QFrac.make(Poly.monomial(1, 6), {1: 1, 2: 1, 3: 1})


def test_er_functional_equation_explicitly():
    # E_r(z) - E_r(qz) = z E_r(q^r z), checked as series for r <= 3
    order = 9
    for r in range(4):
        er = build_Er(r, order)
        lhs = er - er.scale_z(1)
        rhs = er.scale_z(r).mul_z(1)
        assert lhs == rhs


def test_build_gr_examples():
    g0 = build_Gr(2, 0, 6)
    assert g0 == Series.one(6)
    for r in range(4):
        for n in range(4):
            assert build_Gr(r, n, 5).coeff(0) == QFrac.one()
    # G_2(z,1) generates the q-Catalan polynomials
    assert build_Gr(2, 1, 8) == build_ratio_series("f_catalan", order=8)


def test_build_h_examples():
    h01 = build_h(Poly.zero(), Poly.one(), 9)
    assert h01 == negate_z(build_Er(2, 9))
    h = build_h(A, B, 9)
    # h(z) - h(qz) = -a z h(qz) - b z h(q^2 z)
    lhs = h - h.scale_z(1)
    rhs = -(h.scale_z(1).mul_z(1).scale(A)) - h.scale_z(2).mul_z(1).scale(B)
    assert lhs == rhs


def test_build_hstar_difference_equation():
    hs = build_hstar(A, B, 9)
    # h*(z) - h*(qz) = -z(a+b) h*(qz) - q a b z^2 h*(q^2 z)
    lhs = hs - hs.scale_z(1)
    rhs = -(hs.scale_z(1).mul_z(1).scale(A + B)) - hs.scale_z(2).mul_z(2).scale(Q * A * B)
    assert lhs == rhs


def test_hstar_at_1_q_q2_is_E2():
    hs = build_hstar(A, B, 11).substitute({"a": 1, "b": Q, "q": Q**2})
    assert hs == negate_z(build_Er(2, 11))


def test_ratio_series_golden_coefficients():
    f = build_ratio_series("f_catalan", order=5).poly_coeffs()
    assert [str(c) for c in f] == [
        "1",
        "1",
        "1 + q",
        "1 + 2*q + q^2 + q^3",
        "1 + 3*q + 3*q^2 + 3*q^3 + 2*q^4 + q^5 + q^6",
    ]
    fn = build_ratio_series("f_narayana", order=4).poly_coeffs()
    assert fn[2] == A**2 + (2 + Q) * A * B + (1 + Q) * B**2
    F = build_ratio_series("F", order=4).poly_coeffs()
    assert F[0] == Poly.one()
    assert F[1] == A


def test_f_functional_equation():
    order = 9
    f = build_ratio_series("f_narayana", order=order)
    rhs = Series.one(order) + f.mul_z(1).scale(A) + (f * f.scale_z(1)).mul_z(1).scale(B)
    assert f == rhs


def test_eq17_cross_multiplied():
    order = 9
    f = build_ratio_series("f_narayana", order=order)
    f_qb = f.substitute({"b": Q * B})
    one = Series.one(order)
    assert (f.scale_z(1) - one) * f == ((f - one) * f_qb.scale_z(1)).scale(Q)


def test_g_chain():
    order = 8
    f = build_ratio_series("f_narayana", order=order + 1)
    g = build_ratio_series("g", order=order)
    one = Series.one(order)
    assert f.scale_z(1).truncate(order) == one + g.mul_z(1).scale((A + B) * Q)
    ft = f.truncate(order)
    assert ft == one + ft.mul_z(1).scale(A + B) + (ft * g).mul_z(2).scale(Q * (A + B) * B)
    g_qb = g.substitute({"b": Q * B})
    assert g == one + g.mul_z(1).scale(Q * (A + B + Q * B)) + (
        g * g_qb.scale_z(1)
    ).mul_z(2).scale(Poly.monomial(1, 4) * B * (A + Q * B))


def test_fstar_functional_equation():
    order = 9
    fs = build_ratio_series("f_star", order=order)
    rhs = Series.one(order) + fs.mul_z(1).scale(A + B) + (fs * fs.scale_z(1)).mul_z(2).scale(
        Q * A * B
    )
    assert fs == rhs


def test_F_final_identity():
    order = 9
    F = build_ratio_series("F", order=order)
    F_swap = F.substitute({"a": B, "b": Q * A})
    assert F == Series.one(order) + (F * F_swap).mul_z(1).scale(A)


def test_gr_product_identities():
    order = 7
    for r in range(3):
        g1 = build_Gr(r, 1, order)
        assert build_Gr(r, 1, order) == Series.one(order) + build_Gr(r, r, order).mul_z(1)
        for n in range(4):
            prod = Series.one(order)
            for j in range(n):
                prod = prod * g1.scale_z(j)
            assert build_Gr(r, n, order) == prod
        for m in range(3):
            for n in range(3):
                assert build_Gr(r, m + n, order) == build_Gr(r, m, order) * build_Gr(
                    r, n, order
                ).scale_z(m)


def test_gr_recurrence():
    order = 8
    for r in range(4):
        for n in range(5):
            lhs = build_Gr(r, n + 1, order)
            rhs = build_Gr(r, n, order) + build_Gr(r, n + r, order).scale(
                Poly.monomial(1, n)
            ).mul_z(1)
            assert lhs == rhs
