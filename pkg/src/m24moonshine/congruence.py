"""Sturm-bound congruence verification and the virtual-character suites.

A congruence here is an integral linear combination of weight-2 series
(twining forms and level-n Eisenstein combinations) asserted to vanish
identically mod m.  Checking every coefficient up to the Sturm bound
ceil(k*[SL2(Z):Gamma0(N)]/12) certifies it for all coefficients; the
verifier additionally extends the check by a configurable multiple of the
bound as a belt-and-braces measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import CharacterTable, load_json_asset, load_tables
from .ntheory import gamma0_index
from .series import QSeries, eisenstein_e2
from .twining import HeadCharacterMatrix, MultiplicityTable, TwiningForm, build_all_forms


class NonIntegralCombination(ArithmeticError):
    """A suite combination produced a non-integer coefficient (data error)."""


def sturm_bound(weight: int, level: int) -> int:
    """ceil(weight * [SL2(Z):Gamma0(level)] / 12)."""
    if level < 1:
        raise ValueError("level must be positive")
    idx = gamma0_index(level)
    return -(-weight * idx // 12)


@dataclass(frozen=True)
class FormCombo:
    """terms: (rational coefficient, series name); names are fXX or E2.n."""

    terms: tuple
    level: int
    weight: int = 2

    @staticmethod
    def of(terms, level: int) -> "FormCombo":
        return FormCombo(tuple((Fraction(c), str(n)) for c, n in terms), level)


@dataclass
class CongruenceResult:
    name: str
    label: str
    modulus: int
    level: int
    sturm_bound: int
    checked_up_to: int
    passed: bool
    first_failure: int | None = None

    def as_record(self) -> dict:
        return {
            "name": self.name,
            "label": self.label,
            "modulus": self.modulus,
            "level": self.level,
            "sturm_bound": self.sturm_bound,
            "checked_up_to": self.checked_up_to,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


class SeriesLibrary:
    """Named series pool resolving 'f<label>' and 'E2.<n>' at one precision."""

    def __init__(self, prec24: int, forms: dict[str, TwiningForm] | None = None,
                 table: CharacterTable | None = None):
        self.prec24 = prec24
        self.table = table or load_tables()
        self.forms = forms or build_all_forms(prec24, self.table)
        self._e2: dict[int, QSeries] = {}

    def resolve(self, name: str) -> QSeries:
        if name.startswith("E2."):
            n = int(name[3:])
            if n not in self._e2:
                self._e2[n] = eisenstein_e2(n, self.prec24)
            return self._e2[n]
        if name.startswith("f"):
            return self.forms[name[1:]].series
        raise KeyError(f"unknown series name {name!r}")

    def combination(self, combo: FormCombo) -> QSeries:
        acc = QSeries.zero(self.prec24)
        for coef, name in combo.terms:
            acc = acc + self.resolve(name).scale(coef)
        return acc


def verify_congruence(
    combo: FormCombo,
    modulus: int,
    library: SeriesLibrary,
    depth_multiplier: int = 3,
    name: str = "",
    label: str = "",
) -> CongruenceResult:
    """Check divisibility of every coefficient up to depth_multiplier * bound.

    Passing at the Sturm bound certifies the congruence for all coefficients;
    the extra depth re-tests the certificate.  A non-integer coefficient below
    the checked depth raises NonIntegralCombination instead of failing.
    """
    bound = sturm_bound(combo.weight, combo.level)
    series = library.combination(combo)
    avail = series.prec24 // 24 - 1
    if avail < bound:
        raise ValueError(
            f"precision gives only {avail} coefficients, below the Sturm bound {bound}"
        )
    depth = min(max(depth_multiplier, 1) * bound, avail)
    if not series.supported_on_integers():
        raise NonIntegralCombination(f"{name or label}: fractional exponents present")
    passed, first_failure = True, None
    for n in range(depth + 1):
        c = series.qcoeff(n)
        if c.denominator != 1:
            raise NonIntegralCombination(
                f"{name or label}: coefficient of q^{n} is {c}, not an integer"
            )
        if int(c) % modulus != 0:
            passed, first_failure = False, n
            break
    return CongruenceResult(
        name=name,
        label=label,
        modulus=modulus,
        level=combo.level,
        sturm_bound=bound,
        checked_up_to=depth,
        passed=passed,
        first_failure=first_failure,
    )


# -- the Theorem-1-style suite ------------------------------------------------


def load_suite() -> dict:
    return load_json_asset("thompson_congruences.json")


def thompson_suite(library: SeriesLibrary, depth_multiplier: int = 3) -> dict:
    """Run the complete virtual-character congruence list.

    Returns {"congruences": [CongruenceResult...], "pairs": {pair: bool},
    "all_passed": bool}; the per-pair verdict ANDs the verdicts of the
    congruences certifying that (prime, p-regular class) pair.
    """
    data = load_suite()
    results: dict[str, CongruenceResult] = {}
    for cid, spec in data["congruences"].items():
        combo = FormCombo.of(spec["combo"], spec["level"])
        results[cid] = verify_congruence(
            combo,
            spec["modulus"],
            library,
            depth_multiplier,
            name=cid,
            label=spec["label"],
        )
    pair_status = {
        pair: all(results[cid].passed for cid in pd["congruences"])
        for pair, pd in data["pairs"].items()
    }
    return {
        "congruences": [results[cid].as_record() for cid in sorted(results)],
        "pairs": pair_status,
        "all_passed": all(r.passed for r in results.values()),
    }


def head_relation_check(heads: HeadCharacterMatrix, n_from: int = 0) -> dict:
    """Verify each suite congruence's implied head-character relation directly."""
    data = load_suite()
    out = {}
    for cid, spec in data["congruences"].items():
        rel = spec["head_relation"]
        m = rel["modulus"]
        ok = True
        for n in range(n_from, heads.n_max + 1):
            s = sum(c * heads.value(n, lbl) for lbl, c in rel["coeffs"].items())
            if s % m != 0:
                ok = False
                break
        out[cid] = ok
    return out


# -- evenness (Theorem-B-style) -----------------------------------------------


def evenness_suite(mult_table: MultiplicityTable) -> dict:
    """Certification-depth evenness for real irreps, pairing for complex ones.

    Real irrep rho with bundled depth d: mult_rho(H_n) must be even for all
    1 <= n <= d (d is the weight-2 Sturm depth for the relevant level, which
    certifies evenness for every n).  Complex irreps must satisfy
    mult_rho = mult_conj(rho) for every computed n.
    """
    data = load_json_asset("evenness_depths.json")
    n_max = len(mult_table.rows) - 1
    report: dict = {"real": {}, "complex_pairs": {}, "all_passed": True}
    for rho, spec in data["real_irreps"].items():
        depth = spec["depth"]
        if depth > n_max:
            raise ValueError(
                f"evenness depth {depth} for {rho} exceeds computed range {n_max}"
            )
        failures = [
            n
            for n in range(1, depth + 1)
            if mult_table.mult(n, rho) % 2 != 0
        ]
        ok = not failures
        report["real"][rho] = {
            "level": spec["N"],
            "depth": depth,
            "passed": ok,
            "first_failure": failures[0] if failures else None,
        }
        report["all_passed"] &= ok
    for a, b in data["complex_pairs"]:
        bad = [
            n
            for n in range(1, n_max + 1)
            if mult_table.mult(n, a) != mult_table.mult(n, b)
        ]
        ok = not bad
        report["complex_pairs"][f"{a}/{b}"] = {
            "passed": ok,
            "first_failure": bad[0] if bad else None,
        }
        report["all_passed"] &= ok
    return report
