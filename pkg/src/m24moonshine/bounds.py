"""Effective positivity machinery: zeta bounds, character bounds, certificates.

The analytic route bounds H_k(1) from below and every |H_k(g)| from above
using the per-class constants shipped with the class data; the exact route
compares true head-character values.  Either way the certified inequality is

    H_k(1)/|M24| > sum over classes g != 1 of |H_k(g)|/|C(g)|,

which forces every irreducible multiplicity in H_k to be positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chartable import CLASS_ORDER, GROUP_ORDER, CharacterTable, load_tables
from .ntheory import factorize
from .twining import HeadCharacterMatrix

_MAX_K = 30000  # exp(pi sqrt(8k-1)/2) must stay inside float range


def theorem3_bound(k: int, n: int, h: int) -> float:
    """Bound on |Z_{n/2;h}(3/4)| with D = 1 - 8k.

    Here n is twice the multiplier-level parameter (n = 2|g| when driven from
    a class).  Requires k >= 5, h | gcd(n, 24) and gcd(n/h - 1, 2h) = 1;
    n = 2 uses its dedicated sharper constants.
    """
    if k < 5:
        raise ValueError("k must be >= 5")
    if n < 2 or n % 2 or math.gcd(n, 24) % h or math.gcd(n // h - 1, 2 * h) != 1:
        raise ValueError(f"parameter constraints violated: n={n}, h={h}")
    absd = 8 * k - 1
    log_term = 1 + 2.13 * absd ** 0.125 * math.log(absd)
    if n == 2:
        return (3872 * absd + 213 * absd**1.5) * log_term
    euler = 1.0
    for p in factorize(n * h):
        euler *= (p + 1) / p
    c_lin = (
        6.124 * n ** (35 / 6) * h ** (47 / 6)
        - 3.09 * n ** (23 / 4) * h ** (31 / 4)
        + 64.32 * n ** (29 / 6) * h**7
        - 23 * n ** (19 / 4) * h**7
    )
    c_three_half = (
        0.146 * n ** (47 / 6) * h ** (65 / 6)
        - 0.114 * n ** (31 / 4) * h ** (43 / 4)
        + 2.51 * n ** (35 / 6) * h**10
        - 0.74 * n ** (23 / 4) * h**10
    )
    return euler * log_term * (c_lin * absd + c_three_half * absd**1.5)


def identity_lower_bound(k: int) -> float:
    """Analytic lower bound on H_k(1), valid for k >= 150."""
    if k < 150:
        raise ValueError("the bound is stated for k >= 150")
    if k > _MAX_K:
        raise OverflowError("k too large for double-precision evaluation")
    kk = math.sqrt(8 * k - 1)
    return (
        4 / kk * math.exp(math.pi * kk / 2)
        - 4 * math.pi / math.sqrt(2) * math.exp(math.pi * kk / 4)
        - 2.5e4 * kk ** (23 / 7)
    )


def class_upper_bound(k: int, order: int, mantissa: float, exponent: int) -> float:
    """Analytic upper bound on |H_k(g)| for a class of the given order."""
    if k < 150:
        raise ValueError("the bound is stated for k >= 150")
    if k > _MAX_K:
        raise OverflowError("k too large for double-precision evaluation")
    kk = math.sqrt(8 * k - 1)
    return (
        4 / (kk * math.sqrt(order)) * math.exp(math.pi * kk / (2 * order))
        + math.sqrt(8) * math.pi * math.exp(math.pi * kk / (4 * order))
        + mantissa * 10.0**exponent * kk ** (23 / 7)
    )


def recomputed_bound_constant(order: int, h: int, k: int = 150) -> float:
    """Chain the zeta bound into a K^(23/7) coefficient, independently.

    Reproduces the shape of the per-class constants from theorem3_bound plus
    the small polynomial tails; agreement with the shipped constants is only
    order-of-magnitude (their rounding chain is not recorded).
    """
    kk = math.sqrt(8 * k - 1)
    tail = math.pi * kk / order**2.5 + 7 * math.pi**2 * kk**2 / (80 * order**3.5)
    z = theorem3_bound(k, 2 * order, h)
    return (4 * math.pi / math.sqrt(kk)) * (z + tail) / kk ** (23 / 7)


@dataclass
class ClassBound:
    label: str
    order: int
    centralizer: int
    upper: float
    table_constant: float
    ratio: float  # (lower_1A/|M24|) / (upper/|C(g)|)


@dataclass
class BoundReport:
    k: int
    lower_identity: float
    per_class: list[ClassBound]
    certificate: bool

    def as_record(self) -> dict:
        return {
            "k": self.k,
            "lower_identity": self.lower_identity,
            "certificate": self.certificate,
            "per_class": [
                {
                    "label": c.label,
                    "order": c.order,
                    "centralizer": c.centralizer,
                    "upper": c.upper,
                    "table_constant": c.table_constant,
                    "ratio": c.ratio,
                }
                for c in self.per_class
            ],
        }


def character_bounds(k: int, table: CharacterTable | None = None) -> BoundReport:
    """Per-class analytic bounds and the resulting certificate inequality."""
    table = table or load_tables()
    lower = identity_lower_bound(k)
    per_class = []
    total = 0.0
    for label in CLASS_ORDER:
        if label == "1A":
            continue
        c = table.classes[label]
        upper = class_upper_bound(k, c.order, c.bound_mantissa, c.bound_exponent)
        total += upper / c.centralizer
        ratio = (lower / GROUP_ORDER) / (upper / c.centralizer)
        per_class.append(
            ClassBound(
                label=label,
                order=c.order,
                centralizer=c.centralizer,
                upper=upper,
                table_constant=c.bound_mantissa * 10.0**c.bound_exponent,
                ratio=ratio,
            )
        )
    certificate = lower > 0 and lower / GROUP_ORDER > total
    return BoundReport(k, lower, per_class, certificate)


def positivity_certificate(
    k: int,
    mode: str = "exact",
    heads: HeadCharacterMatrix | None = None,
    table: CharacterTable | None = None,
) -> bool:
    """The certificate inequality at one k, by exact values or analytic bounds."""
    if mode == "analytic":
        return character_bounds(k, table).certificate
    if mode != "exact":
        raise ValueError("mode must be 'exact' or 'analytic'")
    if heads is None or k > heads.n_max:
        raise ValueError("exact mode needs head characters computed through k")
    table = heads.table
    lhs = Fraction(heads.value(k, "1A"), GROUP_ORDER)
    rhs = Fraction(0)
    for label in CLASS_ORDER:
        if label == "1A":
            continue
        c = table.classes[label]
        rhs += Fraction(abs(heads.value(k, label)), c.centralizer)
    return lhs > rhs
