"""Generalized Kloosterman sums for the eta^(-3) multiplier system.

Two independent evaluation routes are provided: the literal sum over residues
d coprime to nc (direct), and the sparse rewriting as a signed sum over square
roots of 1 - 8k + 8c^2 n/h modulo 8nc.  All exponential phases are reduced
exactly as rationals mod 1 before a single complex exponential is taken, so
agreement between the two routes is limited only by the final float rounding,
not by phase growth.

On top sit the Selberg-Kloosterman zeta partial sums, the Rademacher series
for head-character values, and the incomplete Kloosterman sums with their
effective bound.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chartable import CharacterTable, load_tables
from .ntheory import divisor_count, kronecker, sqrts_mod


def e_of(x: Fraction | float) -> complex:
    """e(x) = exp(2 pi i x); Fractions are reduced mod 1 first."""
    if isinstance(x, Fraction):
        x = float(x - math.floor(x))
    return cmath.exp(2j * math.pi * x)


@dataclass(frozen=True)
class MultiplierParams:
    """(n, h) with h | gcd(n, 12): the eta^(-3) rho_{n;h} multiplier data."""

    n: int
    h: int

    def __post_init__(self):
        if self.n < 1 or self.h < 1 or self.n % self.h != 0:
            raise ValueError(f"need h | n, got n={self.n}, h={self.h}")

    @staticmethod
    def for_class(label: str, table: CharacterTable | None = None) -> "MultiplierParams":
        table = table or load_tables()
        md = table.merged[label] if label in table.merged else None
        if md is None:
            md = table.merged[table.classes[label].merged_label]
        return MultiplierParams(md["order"], md["h"])


@dataclass(frozen=True)
class KloostermanValue:
    value: complex
    method: str
    k: int
    n: int
    h: int
    c: int


def omega_sign_phase(d: int, c: int) -> tuple[int, Fraction]:
    """Rademacher's omega_{d,c} as sign * e(phase), phase an exact rational.

    c > 0, gcd(d, c) = 1; d is reduced mod c first (omega = exp(pi i s(d,c))
    with s the Dedekind sum, which only depends on d mod c).
    """
    if c <= 0:
        raise ValueError("c must be positive")
    d %= c
    if c == 1:
        return 1, Fraction(0)
    if gcd(d, c) != 1:
        raise ValueError(f"gcd({d},{c}) != 1")
    dp = pow(d, -1, c)
    # (c - 1/c)(2d + d' - d^2 d')/24 = (c^2-1)(2d + d' - d^2 d')/(24c), exact
    num = (c * c - 1) * (2 * d + dp - d * d * dp)
    if c % 2 == 1:
        sign = kronecker(-d, c)
        phase = Fraction(-(c - 1), 8) - Fraction(num, 24 * c)
    else:
        sign = kronecker(-c, d)
        phase = Fraction(-(2 - c * d - d), 8) - Fraction(num, 24 * c)
    return sign, phase % 1


def dedekind_omega(d: int, c: int) -> complex:
    sign, phase = omega_sign_phase(d, c)
    return sign * e_of(phase)


def eta_multiplier(a: int, b: int, c: int, d: int) -> complex:
    """epsilon(gamma) in eta(gamma tau) = epsilon * (c tau + d)^(1/2) * eta(tau), c > 0."""
    if a * d - b * c != 1:
        raise ValueError("not an SL2(Z) matrix")
    if c <= 0:
        raise ValueError("the multiplier formula is used for c > 0 only")
    sign, phase = omega_sign_phase(-d, c)
    return (1 - 1j) / math.sqrt(2) * sign * e_of(phase + Fraction(a + d, 24 * c))


def eta_numeric(tau: complex, terms: int = 4000) -> complex:
    """eta(tau) by the defining product; test oracle for the multiplier."""
    q = cmath.exp(2j * math.pi * tau)
    prod = 1 + 0j
    qn = 1 + 0j
    for _ in range(terms):
        qn *= q
        prod *= 1 - qn
        if abs(qn) < 1e-18:
            break
    return cmath.exp(2j * math.pi * tau / 24) * prod


def kloosterman_direct(k: int, params: MultiplierParams, c: int) -> KloostermanValue:
    """S(k, nc, eps^-3 rho_{n;h}) summed literally over residues d."""
    n, h = params.n, params.h
    m = n * c
    acc = 0j
    for d in range(1, m + 1):
        if gcd(d, m) == 1:
            sign, phase = omega_sign_phase(d, m)
            total = -3 * phase - Fraction(c * d, h) + Fraction(k * d, m)
            acc += sign * e_of(total % 1)
    return KloostermanValue(acc, "direct", k, n, h, c)


def kloosterman_sparse(k: int, params: MultiplierParams, c: int) -> KloostermanValue:
    """Sparse form: (-i sqrt(nc)/2) * sum over roots m of the signed e(m/4nc).

    The roots run over 0 <= m < 4nc with m^2 = 1 - 8k + 8 c^2 n/h (mod 8nc);
    each contributes (-1)^((m-1)/2) e(m/(4nc)).  The sign factor is part of
    the sparse rewriting (dropping it breaks even the n=h=c=1 case).
    """
    n, h = params.n, params.h
    m = n * c
    target = (1 - 8 * k + 8 * c * c * (n // h)) % (8 * m)
    acc = 0j
    for x in sqrts_mod(target, 8 * m):
        if x < 4 * m:
            acc += (-1) ** (((x - 1) // 2) & 1) * e_of(Fraction(x, 4 * m))
    return KloostermanValue(-1j * math.sqrt(m) / 2 * acc, "sparse", k, n, h, c)


def zeta_partial(k: int, params: MultiplierParams, s: float, c_max: int) -> complex:
    """Partial sum of the Selberg-Kloosterman zeta: sum_c S(k,nc,.) (nc)^(-2s)."""
    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    n = params.n
    acc = 0j
    for c in range(1, c_max + 1):
        acc += kloosterman_sparse(k, params, c).value * (n * c) ** (-2.0 * s)
    return acc


def bessel_i_half(x: float) -> float:
    """I_{1/2}(x) = sqrt(2/(pi x)) sinh(x)."""
    return math.sqrt(2.0 / (math.pi * x)) * math.sinh(x)


def rademacher_partial(
    k: int,
    label: str,
    c_max: int,
    table: CharacterTable | None = None,
) -> float:
    """Partial Rademacher sum for H_k on the named class, c = 1 .. c_max in order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    table = table or load_tables()
    params = MultiplierParams.for_class(label, table)
    n = params.n
    kk = math.sqrt(8 * k - 1)
    total = 0.0
    for c in range(1, c_max + 1):
        s_val = kloosterman_sparse(k, params, c).value
        total += (1.0 / (n * c)) * bessel_i_half(math.pi * kk / (2 * c * n)) * s_val.real
    return 4 * math.pi / (8 * k - 1) ** 0.25 * total


def incomplete_kloosterman(u: int, k: int, h1: int, h2: int) -> tuple[complex, float]:
    """(sum of e(u h'/k) over h1 <= h <= h2 with gcd(h,k)=1, effective bound).

    The bound is ((k + h2 - h1)/k + 2 + 2 ln k) sqrt(k) sqrt(gcd(u,k)) d(k);
    the value is asserted to lie strictly below it.
    """
    if h1 > h2:
        raise ValueError("need h1 <= h2")
    if k < 1:
        raise ValueError("modulus must be positive")
    acc = 0j
    for h in range(h1, h2 + 1):
        if gcd(h, k) == 1:
            acc += e_of(Fraction(u * pow(h, -1, k), k))
    bound = (
        ((k + h2 - h1) / k + 2 + 2 * math.log(k))
        * math.sqrt(k)
        * math.sqrt(gcd(u, k))
        * divisor_count(k)
    )
    if abs(acc) >= bound:
        raise AssertionError(
            f"incomplete Kloosterman bound violated: |{acc}| >= {bound}"
        )
    return acc, bound


def complete_kloosterman(v: int, u: int, k: int) -> complex:
    """S(v, u; k) = sum over units h mod k of e((v h + u h')/k); test oracle."""
    acc = 0j
    for h in range(1, k + 1):
        if gcd(h, k) == 1:
            acc += e_of(Fraction(v * h + u * pow(h, -1, k), k))
    return acc
