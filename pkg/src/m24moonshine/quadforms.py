"""Binary quadratic forms: reduction, class numbers, Gamma0(n;h), root maps.

Class numbers are obtained by exhaustive enumeration of reduced forms, which
doubles as the independent oracle for the reduction routine.  The root map
realizes the correspondence between square-root residues and group orbits of
(form, primitive vector) triples; its well-definedness mod 2nC and the square
congruence it satisfies are the computationally checkable content.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ntheory import primes_below


@dataclass(frozen=True)
class BinQF:
    """[alpha, beta, gamma] = alpha x^2 + beta xy + gamma y^2, exact rationals."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    @staticmethod
    def of(alpha, beta, gamma) -> "BinQF":
        return BinQF(Fraction(alpha), Fraction(beta), Fraction(gamma))

    @property
    def disc(self) -> Fraction:
        return self.beta * self.beta - 4 * self.alpha * self.gamma

    def __call__(self, x, y) -> Fraction:
        return self.alpha * x * x + self.beta * x * y + self.gamma * y * y

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in (self.alpha, self.beta, self.gamma))

    def is_positive_definite(self) -> bool:
        return self.alpha > 0 and self.disc < 0

    def is_reduced(self) -> bool:
        a, b, c = self.alpha, self.beta, self.gamma
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def content(self) -> int:
        if not self.is_integral():
            raise ValueError("content of a non-integral form")
        return math.gcd(
            int(self.alpha), math.gcd(int(self.beta), int(self.gamma))
        )

    def transform(self, a: int, b: int, c: int, d: int) -> "BinQF":
        """Q(ax + by, cx + dy)."""
        al, be, ga = self.alpha, self.beta, self.gamma
        return BinQF(
            al * a * a + be * a * c + ga * c * c,
            2 * al * a * b + be * (a * d + b * c) + 2 * ga * c * d,
            al * b * b + be * b * d + ga * d * d,
        )


def reduce_form(q: BinQF) -> BinQF:
    """Gauss reduction of an integral positive-definite form."""
    if not q.is_integral():
        raise ValueError("reduction expects an integral form")
    if not q.is_positive_definite():
        raise ValueError("reduction expects a positive-definite form")
    a, b, c = int(q.alpha), int(q.beta), int(q.gamma)
    while True:
        if c < a or (c == a and b < 0):
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # translate: b -> b - 2ka into (-a, a]
            k = (b + a - 1) // (2 * a) if b > 0 else -((-b + a) // (2 * a))
            b2 = b - 2 * k * a
            c2 = a * k * k - b * k + c
            b, c = b2, c2
            continue
        if (abs(b) == a or a == c) and b < 0:
            b = -b
            continue
        break
    out = BinQF.of(a, b, c)
    assert out.is_reduced() and out.disc == q.disc
    return out


def reduced_forms(disc: int, primitive_only: bool = True) -> list[BinQF]:
    """All reduced positive-definite forms of the given negative discriminant."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError("discriminant must be negative and 0 or 1 mod 4")
    out = []
    b = disc & 1
    while 3 * b * b <= -disc:
        rem = b * b - disc
        a = max(b, 1)
        while a * a <= rem // 4:
            if rem % (4 * a) == 0:
                c = rem // (4 * a)
                for bb in {b, -b}:
                    q = BinQF.of(a, bb, c)
                    if q.is_reduced() and (not primitive_only or q.content() == 1):
                        out.append(q)
            a += 1
        b += 2
    return sorted(out, key=lambda q: (q.alpha, q.beta, q.gamma))


def class_numbers(disc: int) -> tuple[int, int]:
    """(h(D), h'(D)): primitive class count, and with imprimitive classes added.

    h'(D) = sum over m^2 | D with D/m^2 a discriminant of h(D/m^2).  Also
    asserts the explicit bound h(D) < (sqrt|D|/pi)(2 + log|D|).
    """
    h = len(reduced_forms(disc, primitive_only=True))
    bound = math.sqrt(-disc) / math.pi * (2 + math.log(-disc))
    if not h < bound:
        raise AssertionError(f"class number bound violated at D={disc}: {h} >= {bound}")
    hp = 0
    m = 1
    while m * m <= -disc:
        if disc % (m * m) == 0 and (disc // (m * m)) % 4 in (0, 1):
            hp += len(reduced_forms(disc // (m * m), primitive_only=True))
        m += 1
    return h, hp


def class_number_bound(disc: int) -> float:
    return math.sqrt(-disc) / math.pi * (2 + math.log(-disc))


# -- Gamma0(n;h) ---------------------------------------------------------------


@dataclass(frozen=True)
class Gamma0nhMatrix:
    """Matrix (a, b/h; n c, d) with integer a, b, c, d and declared (n, h)."""

    a: int
    b: int
    c: int
    d: int
    n: int
    h: int

    def det_condition(self) -> bool:
        return self.a * self.d - (self.n // self.h) * self.b * self.c == 1

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (
            Fraction(self.a),
            Fraction(self.b, self.h),
            Fraction(self.n * self.c),
            Fraction(self.d),
        )

    def matmul(self, other: "Gamma0nhMatrix") -> "Gamma0nhMatrix":
        if (self.n, self.h) != (other.n, other.h):
            raise ValueError("mismatched (n, h)")
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        np_ = self.n // self.h
        return Gamma0nhMatrix(
            a1 * a2 + np_ * b1 * c2,
            a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2,
            np_ * c1 * b2 + d1 * d2,
            self.n,
            self.h,
        )


def gamma0nh_member(m: Gamma0nhMatrix) -> bool:
    """Membership in Gamma0(n;h): determinant 1 and a c = b d (mod h)."""
    if not m.det_condition():
        raise ValueError("determinant condition a d - (n/h) b c = 1 fails")
    return (m.a * m.c - m.b * m.d) % m.h == 0


# -- the root map ---------------------------------------------------------------


def _crt(pairs: list[tuple[int, int]]) -> tuple[int, int]:
    r, m = 0, 1
    for s, p in pairs:
        t = (s - r) * pow(m, -1, p) % p
        r, m = r + m * t, m * p
    return r % m, m


def root_map(n: int, h: int, q: BinQF, r: int, s: int) -> tuple[int, int]:
    """Root residue of the triple (Q; r, n s) for Q in Gamma0(n;h) shape.

    Q must be [n*alpha, beta, gamma/h] with integer alpha, beta, gamma and
    gamma = alpha (mod h) (h = 1 covers the plain Gamma0(n) case).  Returns
    (m mod 2nC, C) with C = Q(r, ns)/n; m satisfies m^2 = D (mod 4nC) when
    h = 1 and m^2 = D + 4C^2 n/h (mod 4nC) in general.
    """
    if n % h != 0:
        raise ValueError("h must divide n")
    np_ = n // h
    alpha = q.alpha / n
    beta = q.beta
    gamma = q.gamma * h
    if any(v.denominator != 1 for v in (alpha, beta, gamma)):
        raise ValueError("form is not in [n*alpha, beta, gamma/h] shape")
    alpha, beta, gamma = int(alpha), int(beta), int(gamma)
    if h > 1 and (gamma - alpha) % h != 0:
        raise ValueError("shape condition gamma = alpha (mod h) fails")
    if gcd(r, np_ * s) != 1:
        raise ValueError("need gcd(r, (n/h) s) = 1")
    cq = q(r, n * s)
    if cq % n != 0:
        raise ValueError("Q(r, ns) is not divisible by n")
    big_c = int(cq // n)
    if big_c <= 0:
        raise ValueError("triple does not represent a positive value")
    # complete (r, n s) to a matrix with r*st - (n/h) s*rt = 1
    g, x, y = _ext_gcd(r, np_ * s)
    st, rt = x, -y
    if h > 1:
        # adjust rt -> rt + L r, st -> st + L (n/h) s so the matrix lands in
        # Gamma0(n;h); L exists and is unique mod h under gcd(n/h - 1, h) = 1
        pairs = []
        hh = h
        p = 2
        while hh > 1:
            if hh % p == 0:
                pe = 1
                while hh % p == 0:
                    hh //= p
                    pe *= p
                if r % p != 0:
                    ell = (1 - np_ * s * s) % pe
                    L = pow(r, -1, pe) * (-rt + ell * s) % pe
                else:
                    sp = pow(np_ * s, -1, pe)
                    ell = (r * r - np_) % pe
                    L = sp * (-st + ell * r) % pe
                pairs.append((L, pe))
            p += 1
        L, _ = _crt(pairs) if pairs else (0, 1)
        rt += L * r
        st += L * np_ * s
        completion = Gamma0nhMatrix(r, rt, s, st, n, h)
        if not gamma0nh_member(completion):
            raise AssertionError("completion matrix missed Gamma0(n;h)")
    m = 2 * np_ * alpha * r * rt + beta * (r * st + np_ * s * rt) + 2 * gamma * np_ * s * st
    return m % (2 * n * big_c), big_c


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - y * (a // b)


# -- divisor-function constant ---------------------------------------------------


def divisor_bound_const(epsilon: Fraction) -> float:
    """C_eps = prod over primes p < 2^(1/eps) of 1/(eps ln(p) e^(1 - eps ln p))."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    e = float(epsilon)
    limit = 2.0 ** (1.0 / e)
    out = 1.0
    for p in primes_below(int(limit) + 1):
        if p < limit:
            lp = math.log(p)
            out /= e * lp * math.exp(1 - e * lp)
    return out
