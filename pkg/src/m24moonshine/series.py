"""Exact truncated power series in q^(1/24) over the rationals.

A QSeries stores coefficients of q^((offset24+i)/24) for i = 0 .. prec24-offset24-1,
all exact Fractions; exponents at or past prec24/24 are unknown.  Every named
series of the theory lives on this grid: eta(m*tau) starts at m/24, the theta
nullwerte at 0 or 1/8, everything weight-2 at integral powers.

Arithmetic keeps the minimum reliable precision of its operands (shifted by
offsets under multiplication) and never silently extends or truncates below it.
Multiplication detects the arithmetic progression actually supporting each
operand and convolves integer numerators on that compressed grid, which is
what makes 600-term expansions of all 21 twining forms cheap; the result is
bit-identical to the naive Fraction convolution.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .ntheory import sigma1

DEFAULT_PREC24 = 24 * 600


class SeriesError(ValueError):
    pass


class PrecisionUnderflow(SeriesError):
    pass


class ZeroLeadingCoefficient(SeriesError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QSeries:
    """Truncated formal series sum_i c_i q^((offset24+i)/24) + O(q^(prec24/24))."""

    __slots__ = ("offset24", "prec24", "coeffs", "_packed")

    def __init__(self, offset24: int, coeffs, prec24: int):
        if prec24 <= offset24:
            raise PrecisionUnderflow(f"prec24={prec24} <= offset24={offset24}")
        coeffs = [_as_fraction(c) for c in coeffs]
        n = prec24 - offset24
        if len(coeffs) < n:
            coeffs = coeffs + [Fraction(0)] * (n - len(coeffs))
        elif len(coeffs) > n:
            raise SeriesError("coefficient list longer than prec24 - offset24")
        self.offset24 = offset24
        self.prec24 = prec24
        self.coeffs = coeffs
        self._packed = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(prec24: int = DEFAULT_PREC24) -> "QSeries":
        return QSeries(0, [], prec24)

    @staticmethod
    def constant(value, prec24: int = DEFAULT_PREC24) -> "QSeries":
        return QSeries(0, [_as_fraction(value)], prec24)

    @staticmethod
    def one(prec24: int = DEFAULT_PREC24) -> "QSeries":
        return QSeries.constant(1, prec24)

    @staticmethod
    def from_q_coeffs(coeffs, prec24: int = DEFAULT_PREC24) -> "QSeries":
        """Series with integral q-powers: coeffs[n] is the q^n coefficient."""
        out = [Fraction(0)] * (prec24)
        for n, c in enumerate(coeffs):
            if 24 * n >= prec24:
                break
            out[24 * n] = _as_fraction(c)
        return QSeries(0, out, prec24)

    # -- coefficient access ------------------------------------------------

    def coeff24(self, e24: int) -> Fraction:
        """Coefficient of q^(e24/24); exponents at/past the precision raise."""
        if e24 >= self.prec24:
            raise PrecisionUnderflow(f"exponent {e24}/24 beyond precision {self.prec24}/24")
        if e24 < self.offset24:
            return Fraction(0)
        return self.coeffs[e24 - self.offset24]

    def qcoeff(self, n: int) -> Fraction:
        """Coefficient of the integral power q^n."""
        return self.coeff24(24 * n)

    def q_int_coeffs(self, n_max: int) -> list[Fraction]:
        """[c_0, ..., c_{n_max}] at integral powers (requires 24*n_max < prec24)."""
        return [self.qcoeff(n) for n in range(n_max + 1)]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def supported_on_integers(self) -> bool:
        return all(
            c == 0 for i, c in enumerate(self.coeffs) if (i + self.offset24) % 24 != 0
        )

    # -- structure ---------------------------------------------------------

    def _pack(self):
        """(start24, stride24, values) for the nonzero support; cached."""
        if self._packed is not None:
            return self._packed
        idx = [i for i, c in enumerate(self.coeffs) if c != 0]
        if not idx:
            self._packed = (self.offset24, 1, [])
            return self._packed
        i0 = idx[0]
        stride = 0
        for i in idx[1:]:
            stride = gcd(stride, i - i0)
        stride = stride or 1
        vals = self.coeffs[i0 :: stride] if stride > 0 else []
        # trim to last nonzero to keep convolutions short
        last = (idx[-1] - i0) // stride
        vals = list(vals[: last + 1])
        self._packed = (self.offset24 + i0, stride, vals)
        return self._packed

    def normalized(self) -> "QSeries":
        """Same series with offset24 advanced to the first nonzero coefficient."""
        i0 = next((i for i, c in enumerate(self.coeffs) if c != 0), None)
        if i0 in (None, 0):
            return self
        return QSeries(self.offset24 + i0, self.coeffs[i0:], self.prec24)

    def truncate(self, prec24: int) -> "QSeries":
        if prec24 > self.prec24:
            raise PrecisionUnderflow("cannot extend precision by truncation")
        if prec24 == self.prec24:
            return self
        return QSeries(self.offset24, self.coeffs[: prec24 - self.offset24], prec24)

    def shift24(self, d24: int) -> "QSeries":
        """Multiply by q^(d24/24)."""
        return QSeries(self.offset24 + d24, list(self.coeffs), self.prec24 + d24)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries(self.offset24, [-c for c in self.coeffs], self.prec24)

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.prec24)
        if not isinstance(other, QSeries):
            return NotImplemented
        off = min(self.offset24, other.offset24)
        prec = min(self.prec24, other.prec24)
        if prec <= off:
            raise PrecisionUnderflow("sum has no reliable coefficients")
        out = [Fraction(0)] * (prec - off)
        for s in (self, other):
            base = s.offset24 - off
            for i, c in enumerate(s.coeffs):
                if c and base + i < len(out):
                    out[base + i] += c
        return QSeries(off, out, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.prec24)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def scale(self, r) -> "QSeries":
        r = _as_fraction(r)
        return QSeries(self.offset24, [r * c for c in self.coeffs], self.prec24)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        off = self.offset24 + other.offset24
        prec = min(self.prec24 + other.offset24, other.prec24 + self.offset24)
        if prec <= off:
            raise PrecisionUnderflow("product has no reliable coefficients")
        a0, sa, va = self._pack()
        b0, sb, vb = other._pack()
        out = [Fraction(0)] * (prec - off)
        if va and vb:
            s = gcd(sa, sb)
            # integer fast path: clear denominators once per operand
            da = lcm(*[c.denominator for c in va]) if len(va) > 1 else va[0].denominator
            db = lcm(*[c.denominator for c in vb]) if len(vb) > 1 else vb[0].denominator
            na = [int(c * da) for c in va]
            nb = [int(c * db) for c in vb]
            if len(na) > len(nb):
                na, nb, sa, sb, a0, b0 = nb, na, sb, sa, b0, a0
            conv_len = prec - off - (a0 + b0 - off)
            acc = [0] * max(
                (len(na) - 1) * (sa // s) + (len(nb) - 1) * (sb // s) + 1, 1
            )
            ka, kb = sa // s, sb // s
            for i, x in enumerate(na):
                if x:
                    ia = i * ka
                    for j, y in enumerate(nb):
                        if y:
                            acc[ia + j * kb] += x * y
            den = da * db
            base = a0 + b0 - off
            for t, x in enumerate(acc):
                if x:
                    pos = base + t * s
                    if pos < len(out):
                        out[pos] = Fraction(x, den)
        return QSeries(off, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero leading coefficient."""
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroLeadingCoefficient(
                "leading coefficient is zero; call .normalized() first"
            )
        e = self.offset24
        _, stride, vals = self._pack()
        # invert the unit u = sum vals[t] x^t (x = q^(stride/24)) to the same length
        n_rel = self.prec24 - self.offset24
        length = (n_rel + stride - 1) // stride
        u = vals + [Fraction(0)] * (length - len(vals))
        inv0 = 1 / u[0]
        w = [Fraction(0)] * length
        w[0] = inv0
        if all(c.denominator == 1 for c in u) and abs(u[0]) == 1:
            # integer recurrence (eta-quotient units land here)
            ui = [int(c) for c in u]
            wi = [0] * length
            wi[0] = ui[0]
            for k in range(1, length):
                s = 0
                for j in range(1, k + 1):
                    if ui[j]:
                        s += ui[j] * wi[k - j]
                wi[k] = -s * ui[0]
            w = [Fraction(x) for x in wi]
        else:
            for k in range(1, length):
                s = Fraction(0)
                for j in range(1, k + 1):
                    if u[j]:
                        s += u[j] * w[k - j]
                w[k] = -s * inv0
        out = [Fraction(0)] * n_rel
        for t, c in enumerate(w):
            if t * stride < n_rel:
                out[t * stride] = c
        return QSeries(-e, out, self.prec24 - 2 * e)

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QSeries.one(self.prec24 - self.offset24) if n == 0 else None
        if n == 0:
            return result
        base, out = self, None
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.prec24 != other.prec24:
            return False
        lo = min(self.offset24, other.offset24)
        for e24 in range(lo, self.prec24):
            a = self.coeffs[e24 - self.offset24] if e24 >= self.offset24 else Fraction(0)
            b = other.coeffs[e24 - other.offset24] if e24 >= other.offset24 else Fraction(0)
            if a != b:
                return False
        return True

    def __hash__(self):
        return hash((self.prec24, tuple(self.normalized().coeffs)))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.offset24 + i
                terms.append(f"{c}*q^({e}/24)" if e % 24 else f"{c}*q^{e//24}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^({self.prec24}/24)))"


# -- named building blocks --------------------------------------------------


def eta_power(m: int, prec24: int = DEFAULT_PREC24) -> QSeries:
    """eta(m*tau) = q^(m/24) prod (1 - q^(m k)), by the pentagonal-number theorem."""
    if m < 1:
        raise ValueError("eta scale must be >= 1")
    if prec24 <= m:
        raise PrecisionUnderflow("precision too small to hold eta's leading term")
    coeffs = [Fraction(0)] * (prec24 - m)
    j = 0
    while True:
        hit = False
        for jj in {j, -j}:
            e24 = 24 * m * (jj * (3 * jj - 1) // 2)
            if e24 < prec24 - m:
                coeffs[e24] += Fraction((-1) ** (jj & 1))
                hit = True
        if not hit and j > 0:
            break
        j += 1
    return QSeries(m, coeffs, prec24)


class EtaQuotientSpec:
    """scalar * prod eta(m*tau)^e, given as factors [(m, e), ...]."""

    __slots__ = ("factors", "scalar")

    def __init__(self, factors, scalar=1):
        factors = tuple((int(m), int(e)) for m, e in factors)
        for m, _e in factors:
            if m < 1:
                raise ValueError("eta scale must be >= 1")
        self.factors = factors
        self.scalar = _as_fraction(scalar)

    def weight(self) -> Fraction:
        return Fraction(sum(e for _m, e in self.factors), 2)

    def offset24(self) -> int:
        return sum(m * e for m, e in self.factors)


def eta_quotient(spec: EtaQuotientSpec, prec24: int = DEFAULT_PREC24) -> QSeries:
    """Exact expansion of an eta quotient.

    The numerator is expanded first and the full denominator inverted once;
    the working precision is padded so the requested prec24 survives the
    inversion's offset bookkeeping.
    """
    den_off = sum(m * -e for m, e in spec.factors if e < 0)
    work = prec24 + 2 * den_off + 24
    num = QSeries.one(work)
    den = None
    for m, e in spec.factors:
        base = eta_power(m, work)
        if e > 0:
            num = num * base**e
        else:
            den = base ** (-e) if den is None else den * base ** (-e)
    out = num if den is None else num * den.inverse()
    out = out.scale(spec.scalar)
    return out.truncate(prec24)


def eisenstein_e2(n: int, prec24: int = DEFAULT_PREC24) -> QSeries:
    """Level-n weight-2 Eisenstein combination.

    n = 1 gives the quasi-modular E2 = 1 - 24 sum sigma_1(k) q^k.  For n >= 2
    returns (n*E2(n*tau) - E2(tau))/(n-1), the holomorphic weight-2 form on
    Gamma0(n) normalized to constant term 1.  Coefficients are exact rationals;
    they are integral whenever (n-1) | 24.
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    n_terms = (prec24 + 23) // 24
    coeffs = [Fraction(0)] * prec24
    coeffs[0] = Fraction(1)
    if n == 1:
        for k in range(1, n_terms):
            coeffs[24 * k] = Fraction(-24 * sigma1(k))
        return QSeries(0, coeffs, prec24)
    for k in range(1, n_terms):
        v = Fraction(24 * sigma1(k))
        if k % n == 0:
            v -= Fraction(24 * n * sigma1(k // n))
        coeffs[24 * k] = v / (n - 1)
    return QSeries(0, coeffs, prec24)


def theta_nullwert(i: int, prec24: int = DEFAULT_PREC24) -> QSeries:
    """Classical Jacobi theta nullwerte, nome q = e(tau).

    theta2 = 2 q^(1/8) sum_{k>=0} q^(k(k+1)/2),
    theta3 = sum_{n in Z} q^(n^2/2),  theta4 the same with sign (-1)^n.
    Exponents live in (1/2)Z (theta2: 1/8 + Z), so theta3*theta4 and
    theta3^4 + theta4^4 have integral expansions and theta2*theta3*theta4
    equals 2*eta^3.
    """
    if i == 2:
        coeffs = [Fraction(0)] * (prec24 - 3)
        k = 0
        while 12 * k * (k + 1) < prec24 - 3:
            coeffs[12 * k * (k + 1)] = Fraction(2)
            k += 1
        return QSeries(3, coeffs, prec24)
    if i in (3, 4):
        coeffs = [Fraction(0)] * prec24
        coeffs[0] = Fraction(1)
        k = 1
        while 12 * k * k < prec24:
            coeffs[12 * k * k] = Fraction(2 if i == 3 else 2 * (-1) ** k)
            k += 1
        return QSeries(0, coeffs, prec24)
    raise ValueError("theta index must be 2, 3 or 4")


def lambert_halfsum(prec24: int = DEFAULT_PREC24) -> QSeries:
    """1/4 + sum_{n>=1} q^(n(n+1)/2) / (1 + q^n), expanded exactly."""
    n_terms = (prec24 + 23) // 24
    coeffs = [Fraction(0)] * prec24
    coeffs[0] = Fraction(1, 4)
    n = 1
    while n * (n + 1) // 2 < n_terms:
        base = n * (n + 1) // 2
        j = 0
        while base + j * n < n_terms:
            coeffs[24 * (base + j * n)] += Fraction((-1) ** j)
            j += 1
        n += 1
    return QSeries(0, coeffs, prec24)


def f2_series(prec24: int = DEFAULT_PREC24) -> QSeries:
    """sum over n > m > 0, n-m odd, of (-1)^n m q^(mn/2)."""
    n_terms = (prec24 + 23) // 24
    coeffs = [Fraction(0)] * prec24
    m = 1
    while m * (m + 1) // 2 < n_terms:
        n = m + 1
        while m * n // 2 < n_terms:
            coeffs[24 * (m * n // 2)] += Fraction((-1) ** n * m)
            n += 2
        m += 1
    return QSeries(0, coeffs, prec24)


def eta_cube_shifted(prec24: int = DEFAULT_PREC24) -> QSeries:
    """eta^3 * q^(-1/8): the integral unit series 1 - 3q + 5q^3 - 7q^6 + ..."""
    e = eta_power(1, prec24 + 3)
    return (e * e * e).shift24(-3).truncate(prec24)
