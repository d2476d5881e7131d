from fractions import Fraction as F

import pytest

from m24moonshine.series import (
    EtaQuotientSpec,
    PrecisionUnderflow,
    QSeries,
    ZeroLeadingCoefficient,
    eisenstein_e2,
    eta_cube_shifted,
    eta_power,
    eta_quotient,
    f2_series,
    lambert_halfsum,
    theta_nullwert,
)

PREC = 24 * 40


def brute_eta_poly(n_terms: int) -> list[F]:
    """prod_{k=1..} (1 - x^k) by direct polynomial multiplication (oracle)."""
    out = [F(0)] * n_terms
    out[0] = F(1)
    for k in range(1, n_terms):
        new = out[:]
        for i in range(n_terms - k):
            if out[i]:
                new[i + k] -= out[i]
        out = new
    return out


def poly_mul(a, b, n):
    out = [F(0)] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y and i + j < n:
                    out[i + j] += x * y
    return out


def test_eta_pentagonal_matches_product_oracle():
    n = 30
    oracle = brute_eta_poly(n)
    e = eta_power(1, 24 * n + 1)
    got = [e.coeff24(1 + 24 * k) for k in range(n)]
    assert got == oracle


def test_eta_cube_is_jacobi_series():
    n = 30
    oracle = brute_eta_poly(n)
    cube = poly_mul(poly_mul(oracle, oracle, n), oracle, n)
    unit = eta_cube_shifted(24 * n)
    assert [unit.qcoeff(k) for k in range(n)] == cube
    # integral unit: leading 1, alternating odd numbers on triangular exponents
    assert unit.qcoeff(0) == 1 and unit.qcoeff(1) == -3 and unit.qcoeff(3) == 5
    assert unit.qcoeff(6) == -7 and unit.qcoeff(2) == 0
    assert all(unit.qcoeff(k).denominator == 1 for k in range(n))


def test_eta_times_inverse_is_one():
    e = eta_power(1, PREC)
    prod = e * e.inverse()
    assert prod.qcoeff(0) == 1
    assert all(prod.qcoeff(k) == 0 for k in range(1, prod.prec24 // 24 - 1))


def test_eta_quotient_examples():
    # 2 eta^8/eta(2)^4 = f_2B leading expansion
    q = eta_quotient(EtaQuotientSpec([(1, 8), (2, -4)], 2), PREC)
    assert [q.qcoeff(n) for n in range(4)] == [2, -16, 48, -64]
    # 2 eta^3 eta(2) eta(5) / eta(10) = f_10A
    q = eta_quotient(EtaQuotientSpec([(1, 3), (2, 1), (5, 1), (10, -1)], 2), PREC)
    assert [q.qcoeff(n) for n in range(4)] == [2, -6, -2, 16]


def test_eta_quotient_precision_stability():
    spec = EtaQuotientSpec([(1, 3), (4, 2), (6, 3), (2, -1), (3, -1), (12, -2)], 2)
    lo = eta_quotient(spec, 24 * 20)
    hi = eta_quotient(spec, 24 * 45)
    for e24 in range(lo.offset24, lo.prec24):
        assert lo.coeff24(e24) == hi.coeff24(e24)


def test_eisenstein_expansions_and_congruences():
    e2 = eisenstein_e2(2, PREC)
    assert [e2.qcoeff(n) for n in range(5)] == [1, 24, 24, 96, 24]
    assert all(e2.qcoeff(n) % 24 == 0 for n in range(1, 39))
    e3 = eisenstein_e2(3, PREC)
    assert all(e3.qcoeff(n) % 12 == 0 for n in range(1, 39))
    # (4/3) E2^(2) reproduces the 2A form's printed coefficients
    f2a = e2.scale(F(4, 3))
    assert [f2a.qcoeff(n) for n in range(4)] == [F(4, 3), 32, 32, 128]
    with pytest.raises(ValueError):
        eisenstein_e2(0)


def test_quasimodular_e2():
    e1 = eisenstein_e2(1, PREC)
    assert [e1.qcoeff(n) for n in range(4)] == [1, -24, -72, -96]


def test_theta_identities():
    t2 = theta_nullwert(2, PREC)
    t3 = theta_nullwert(3, PREC)
    t4 = theta_nullwert(4, PREC)
    # theta3 theta4 is integral and = 1 (mod 4q)
    t34 = t3 * t4
    assert t34.supported_on_integers()
    assert t34.qcoeff(0) == 1
    assert all(t34.qcoeff(n) % 4 == 0 for n in range(1, 39))
    # theta3^4 + theta4^4 in 2 + 12qZ[[q]]
    quart = t3**4 + t4**4
    assert quart.supported_on_integers()
    assert quart.qcoeff(0) == 2
    assert all(quart.qcoeff(n) % 12 == 0 for n in range(1, 39))
    # theta2 theta3 theta4 = 2 eta^3
    prod = t2 * t3 * t4
    e = eta_power(1, PREC)
    cube = (e * e * e).scale(2)
    for e24 in range(3, min(prod.prec24, cube.prec24)):
        assert prod.coeff24(e24) == cube.coeff24(e24)


def test_lambert_halfsum_oracle():
    # oracle: expand each q^(n(n+1)/2)/(1+q^n) geometrically, integer grid
    n_terms = 12
    oracle = [F(0)] * n_terms
    oracle[0] = F(1, 4)
    for n in range(1, n_terms):
        base = n * (n + 1) // 2
        j = 0
        while base + j * n < n_terms:
            oracle[base + j * n] += F(-1) ** j
            j += 1
    lam = lambert_halfsum(PREC)
    assert [lam.qcoeff(k) for k in range(n_terms)] == oracle
    assert lam.qcoeff(0) == F(1, 4)
    assert lam.qcoeff(1) == 1
    assert lam.qcoeff(2) == -1


def test_f2_series_oracle():
    # direct enumeration of pairs n > m > 0, n-m odd
    n_terms = 12
    oracle = [F(0)] * n_terms
    for m in range(1, 4 * n_terms):
        for n in range(m + 1, 8 * n_terms):
            if (n - m) % 2 == 1 and m * n // 2 < n_terms and m * n % 2 == 0:
                oracle[m * n // 2] += F(-1) ** n * m
    f2 = f2_series(PREC)
    assert [f2.qcoeff(k) for k in range(n_terms)] == oracle
    assert f2.qcoeff(0) == 0
    assert f2.qcoeff(1) == 1


def test_dmz_constant_term():
    # 48*F2 - 2*E2 has constant -2
    val = f2_series(PREC).scale(48) - eisenstein_e2(1, PREC).scale(2)
    assert val.qcoeff(0) == -2
    assert val.qcoeff(1) == 96


def test_arith_errors():
    e = eta_power(1, PREC)
    with pytest.raises(ZeroLeadingCoefficient):
        QSeries(0, [0, 1], 24).inverse()
    with pytest.raises(PrecisionUnderflow):
        QSeries(24, [1], 24)
    with pytest.raises(PrecisionUnderflow):
        e.coeff24(PREC + 1)
    # normalized() recovers invertibility after cancellation
    s = QSeries(0, [0, 1, 1], 72)
    inv = s.normalized().inverse()
    assert (s * inv).qcoeff(0) == 1


def test_mul_matches_naive_convolution():
    a = QSeries(2, [F(1, 2), 0, 3, -1, 0, 7], 24)
    b = QSeries(1, [2, -5, 0, F(1, 3), 1], 24)
    prod = a * b
    for e24 in range(prod.offset24, prod.prec24):
        want = F(0)
        for i in range(len(a.coeffs)):
            j = e24 - (a.offset24 + i) - b.offset24
            if 0 <= j < len(b.coeffs):
                want += a.coeffs[i] * b.coeffs[j]
        assert prod.coeff24(e24) == want


def test_add_scale_neg_roundtrip():
    a = eta_power(2, PREC)
    b = eisenstein_e2(2, PREC)
    s = a + b
    assert s - b == a.truncate(s.prec24) or all(
        (s - b).coeff24(e) == a.coeff24(e) for e in range(a.offset24, s.prec24)
    )
    assert (a.scale(3) - a - a - a).is_zero()
    assert (-a + a).is_zero()
