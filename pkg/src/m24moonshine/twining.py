"""Twining forms f_g, head characters H_n, and multiplicity-level checks.

Head characters are extracted exactly: the identity-class series comes from
inverting eta^3 q^(-1/8) against 48*F2 - 2*E2, and each twisted series from
the corresponding weight-2 form.  Any non-integer H_n(g) aborts the run; the
pipeline never rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import (
    CLASS_ORDER,
    IRREP_ORDER,
    CONJUGATE_IRREP,
    CharacterTable,
    ClassFunction,
    QuadIrr,
    load_json_asset,
    load_tables,
)
from .series import (
    DEFAULT_PREC24,
    EtaQuotientSpec,
    QSeries,
    eisenstein_e2,
    eta_cube_shifted,
    eta_quotient,
    f2_series,
    lambert_halfsum,
    theta_nullwert,
)


class HeadCharacterError(ArithmeticError):
    """A head-character value failed exact integrality."""


@dataclass(frozen=True)
class TwiningForm:
    label: str
    series: QSeries
    level: int
    multiplier_order: int
    weight: int = 2


def recipe_terms(label: str) -> list[dict]:
    return load_json_asset("twining_forms.json")["forms"][label]


def build_fg(label: str, prec24: int = DEFAULT_PREC24, table: CharacterTable | None = None) -> TwiningForm:
    """Construct one twining form from its bundled closed-form recipe."""
    table = table or load_tables()
    if label not in table.merged:
        raise KeyError(f"unknown merged class label {label!r}")
    md = table.merged[label]
    acc = QSeries.zero(prec24)
    for term in recipe_terms(label):
        scalar = Fraction(term["scalar"]) if "scalar" in term else Fraction(1)
        if "e2" in term:
            acc = acc + eisenstein_e2(term["e2"], prec24).scale(scalar)
        else:
            spec = EtaQuotientSpec(term["eta"], scalar)
            acc = acc + eta_quotient(spec, prec24)
    return TwiningForm(
        label=label,
        series=acc,
        level=md["order"] * md["h"],
        multiplier_order=md["h"],
    )


def build_all_forms(prec24: int = DEFAULT_PREC24, table: CharacterTable | None = None) -> dict[str, TwiningForm]:
    table = table or load_tables()
    return {label: build_fg(label, prec24, table) for label in table.merged_order}


def identity_head_series(prec24: int = DEFAULT_PREC24) -> QSeries:
    """sum H_n(1) q^n as a QSeries: inv(eta^3 q^(-1/8)) * (48 F2 - 2 E2)."""
    rhs = f2_series(prec24).scale(48) - eisenstein_e2(1, prec24).scale(2)
    return eta_cube_shifted(prec24).inverse() * rhs


class HeadCharacterMatrix:
    """H_n(g) for 0 <= n <= n_max, exact integers keyed by merged class."""

    def __init__(self, n_max: int, values: dict[str, list[int]], table: CharacterTable):
        self.n_max = n_max
        self.values = values
        self.table = table

    def value(self, n: int, label: str) -> int:
        if label not in self.values:
            label = self.table.classes[label].merged_label
        return self.values[label][n]

    def class_function(self, n: int) -> ClassFunction:
        return ClassFunction(
            [
                QuadIrr.of(self.values[self.table.classes[c].merged_label][n])
                for c in CLASS_ORDER
            ]
        )

    def h00(self) -> ClassFunction:
        return self.table.h00()


def head_characters(
    n_max: int,
    prec24: int | None = None,
    table: CharacterTable | None = None,
    forms: dict[str, TwiningForm] | None = None,
) -> HeadCharacterMatrix:
    """Extract H_n(g) for all merged classes and 0 <= n <= n_max."""
    table = table or load_tables()
    if prec24 is None:
        prec24 = 24 * (n_max + 2)
    if prec24 < 24 * (n_max + 2):
        raise ValueError("prec24 must be at least 24*(n_max + 2)")
    forms = forms or build_all_forms(prec24, table)
    p_inv = eta_cube_shifted(prec24).inverse()
    h1 = identity_head_series(prec24)
    values: dict[str, list[int]] = {}
    h1_ints: list[int] = []
    for n in range(n_max + 1):
        c = h1.qcoeff(n)
        if c.denominator != 1:
            raise HeadCharacterError(f"H_{n}(1A) is not an integer: {c}")
        h1_ints.append(int(c))
    values["1A"] = h1_ints
    for label in table.merged_order:
        if label == "1A":
            continue
        md = table.merged[label]
        t = p_inv * forms[label].series
        w24 = Fraction(md["w"], 24)
        col: list[int] = []
        for n in range(n_max + 1):
            v = w24 * h1_ints[n] - t.qcoeff(n)
            if v.denominator != 1:
                raise HeadCharacterError(f"H_{n}({label}) is not an integer: {v}")
            col.append(int(v))
        values[label] = col
    return HeadCharacterMatrix(n_max, values, table)


def crosscheck_fg(
    label: str,
    heads: HeadCharacterMatrix,
    forms: dict[str, TwiningForm],
    prec24: int,
) -> tuple[bool, int | None]:
    """Independent route to f_g via the theta/Appell-side of the defining identity.

    Rebuilds w_g*(theta3^4+theta4^4)/12 - w_g*theta3*theta4*lambda
    - eta^3 q^(-1/8) * sum H_n(g) q^n from the extracted head characters and
    compares it with the closed-form series coefficient by coefficient.
    Returns (True, None) or (False, first mismatching exponent in 1/24 units).
    """
    md = heads.table.merged[label]
    w = md["w"]
    t3 = theta_nullwert(3, prec24)
    t4 = theta_nullwert(4, prec24)
    t34 = t3 * t4
    quartic = t3**4 + t4**4
    hser = QSeries.from_q_coeffs(heads.values[label], prec24)
    route = (
        quartic.scale(Fraction(w, 12))
        - (t34 * lambert_halfsum(prec24)).scale(w)
        - eta_cube_shifted(prec24) * hser
    )
    direct = forms[label].series
    lo = min(route.offset24, direct.offset24)
    hi = min(route.prec24, direct.prec24, 24 * (heads.n_max + 1))
    for e24 in range(lo, hi):
        if route.coeff24(e24) != direct.coeff24(e24):
            return False, e24
    return True, None


# -- multiplicities ----------------------------------------------------------


@dataclass
class MultiplicityRow:
    n: int
    mults: dict[str, Fraction]
    integral: bool
    nonnegative: bool
    even_pattern: bool


class MultiplicityTable:
    """Exact multiplicity decomposition of the head characters."""

    def __init__(self, rows: list[MultiplicityRow], table: CharacterTable):
        self.rows = rows
        self.table = table

    def row(self, n: int) -> MultiplicityRow:
        return self.rows[n]

    def mult(self, n: int, irrep: str) -> Fraction:
        return self.rows[n].mults[irrep]

    def all_true_characters(self, n_from: int = 1) -> bool:
        return all(r.integral and r.nonnegative for r in self.rows[n_from:])


def _even_pattern(mults: dict[str, Fraction]) -> bool:
    for name in IRREP_ORDER:
        m = mults[name]
        if name in CONJUGATE_IRREP:
            if m != mults[CONJUGATE_IRREP[name]]:
                return False
        elif m % 2 != 0:
            return False
    return True


def multiplicity_table(heads: HeadCharacterMatrix) -> MultiplicityTable:
    """Decompose every H_n; flags integrality, nonnegativity and evenness per row.

    Row n = 0 is the virtual constant -2; its flags record the facts but the
    positivity/evenness theorems only speak about n >= 1.
    """
    table = heads.table
    rows = []
    for n in range(heads.n_max + 1):
        f = heads.class_function(n)
        mults = table.decompose(f)
        if table.reconstruct(mults) != f:
            raise HeadCharacterError(f"decomposition of H_{n} does not reconstruct")
        integral = all(m.denominator == 1 for m in mults.values())
        nonneg = all(m >= 0 for m in mults.values())
        even = integral and _even_pattern(mults)
        rows.append(MultiplicityRow(n, mults, integral, nonneg, even))
    return MultiplicityTable(rows, table)


# -- Conway-side checks ------------------------------------------------------


def conway_restriction_check(mults: dict[str, Fraction]) -> bool:
    """Criterion for a virtual M24 character to extend to the Conway group."""
    crit = load_json_asset("conway.json")["restriction_criterion"]
    for m in mults.values():
        if Fraction(m).denominator != 1:
            raise ValueError("restriction criterion needs integral multiplicities")
    for a, b in crit["equal_pairs"]:
        if mults[a] != mults[b]:
            return False
    s = sum(mults[name] for name in crit["parity"]["sum"])
    return (s - mults[crit["parity"]["equals_mod2"]]) % 2 == 0


def conway_dimension_check(table: CharacterTable | None = None) -> list[dict]:
    """Dimension balance of every bundled restriction identity and relation."""
    table = table or load_tables()
    data = load_json_asset("conway.json")
    dims = data["dimensions"]
    report = []
    for ident in data["restriction_identities"]:
        lhs = sum(
            int(table.irreps[name].dim()) * mult for name, mult in ident["m24"].items()
        )
        rhs = sum(dims[name] * mult for name, mult in ident["co0"].items())
        report.append(
            {
                "kind": "restriction",
                "m24": ident["m24"],
                "lhs_dim": lhs,
                "rhs_dim": rhs,
                "balanced": lhs == rhs,
            }
        )
    for rel in data["extra_relations"]:
        lhs = sum(dims[name] * mult for name, mult in rel["lhs"].items())
        rhs = sum(dims[name] * mult for name, mult in rel["rhs"].items())
        report.append(
            {"kind": "relation", "lhs_dim": lhs, "rhs_dim": rhs, "balanced": lhs == rhs}
        )
    return report
