"""M24 character table, conjugacy-class metadata, and exact class-function algebra.

Character values live in Q or in one of the imaginary quadratic fields
Q(sqrt(-7)), Q(sqrt(-15)), Q(sqrt(-23)); QuadIrr represents a + b*sqrt(-d)
with exact rational a, b and d in {0, 7, 15, 23}.  The table ships as a
plain-text asset and is validated against both orthogonality relations and
the class equation on load, so a transcription error cannot pass silently.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd

from .ntheory import gamma0_index

GROUP_ORDER = 244823040

CLASS_ORDER = [
    "1A", "2A", "2B", "3A", "3B", "4A", "4B", "4C", "5A", "6A", "6B",
    "7A", "7B", "8A", "10A", "11A", "12A", "12B", "14A", "14B",
    "15A", "15B", "21A", "21B", "23A", "23B",
]
IRREP_ORDER = [
    "rho0", "rho1", "rho2", "rho2b", "rho3", "rho3b", "rho4", "rho5", "rho6",
    "rho7", "rho7b", "rho8", "rho8b", "rho9", "rho10", "rho10b", "rho11",
    "rho12", "rho13", "rho14", "rho15", "rho16", "rho17", "rho18", "rho19",
    "rho20",
]
CONJUGATE_IRREP = {
    "rho2": "rho2b", "rho2b": "rho2", "rho3": "rho3b", "rho3b": "rho3",
    "rho7": "rho7b", "rho7b": "rho7", "rho8": "rho8b", "rho8b": "rho8",
    "rho10": "rho10b", "rho10b": "rho10",
}


class TableValidationError(ValueError):
    """The bundled table data failed an exact consistency check."""


class MixedFieldError(ValueError):
    """Arithmetic attempted across distinct imaginary quadratic fields."""


def data_path(name: str):
    override = os.environ.get("M24_DATA_DIR")
    if override:
        return os.path.join(override, name)
    return resources.files("m24moonshine.data").joinpath(name)


def _read_text(name: str) -> str:
    p = data_path(name)
    if isinstance(p, str):
        with open(p, encoding="utf-8") as fh:
            return fh.read()
    return p.read_text(encoding="utf-8")


def load_json_asset(name: str) -> dict:
    return json.loads(_read_text(name))


@dataclass(frozen=True)
class QuadIrr:
    """Exact value a + b*sqrt(-d), d in {0, 7, 15, 23}; d = 0 forces b = 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    @staticmethod
    def of(a, b=0, d=0) -> "QuadIrr":
        a, b = Fraction(a), Fraction(b)
        if b == 0:
            d = 0
        elif d not in (7, 15, 23):
            raise MixedFieldError(f"unsupported discriminant tag {d}")
        return QuadIrr(a, b, d)

    def __add__(self, other: "QuadIrr") -> "QuadIrr":
        if self.b == 0:
            return QuadIrr.of(self.a + other.a, other.b, other.d)
        if other.b == 0:
            return QuadIrr.of(self.a + other.a, self.b, self.d)
        if self.d != other.d:
            raise MixedFieldError(f"cannot add sqrt(-{self.d}) and sqrt(-{other.d}) parts")
        return QuadIrr.of(self.a + other.a, self.b + other.b, self.d)

    def __neg__(self) -> "QuadIrr":
        return QuadIrr.of(-self.a, -self.b, self.d)

    def __sub__(self, other: "QuadIrr") -> "QuadIrr":
        return self + (-other)

    def __mul__(self, other) -> "QuadIrr":
        if isinstance(other, (int, Fraction)):
            return QuadIrr.of(self.a * other, self.b * other, self.d)
        if self.b == 0:
            return QuadIrr.of(self.a * other.a, self.a * other.b, other.d)
        if other.b == 0:
            return QuadIrr.of(self.a * other.a, self.b * other.a, self.d)
        if self.d != other.d:
            raise MixedFieldError(f"cannot multiply sqrt(-{self.d}) by sqrt(-{other.d})")
        return QuadIrr.of(
            self.a * other.a - self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadIrr":
        return QuadIrr.of(self.a, -self.b, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if self.b != 0:
            raise MixedFieldError(f"value {self} is irrational")
        return self.a

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else ''}{self.b}*sqrt(-{self.d})"


ZERO = QuadIrr.of(0)


@dataclass(frozen=True)
class ConjClassData:
    label: str
    merged_label: str
    order: int
    h: int
    w: int
    centralizer: int
    gamma0_index: int
    bound_mantissa: float
    bound_exponent: int


class ClassFunction:
    """26 exact values indexed by conjugacy class label, Table order."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = list(values)
        if len(values) != len(CLASS_ORDER):
            raise ValueError("class function needs one value per conjugacy class")
        self.values = [v if isinstance(v, QuadIrr) else QuadIrr.of(v) for v in values]

    def __getitem__(self, label: str) -> QuadIrr:
        return self.values[CLASS_ORDER.index(label)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction([a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction([a - b for a, b in zip(self.values, other.values)])

    def scale(self, r) -> "ClassFunction":
        r = Fraction(r)
        return ClassFunction([v * r for v in self.values])

    def conj(self) -> "ClassFunction":
        return ClassFunction([v.conj() for v in self.values])

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.values == other.values

    def dim(self) -> Fraction:
        return self.values[0].rational()


def _parse_field(tok: str) -> QuadIrr:
    if "," in tok:
        s, t, d = tok.split(",")
        return QuadIrr.of(Fraction(int(s), 2), Fraction(int(t), 2), int(d))
    return QuadIrr.of(Fraction(tok))


class CharacterTable:
    """Validated table: irreps as ClassFunctions plus per-class metadata."""

    def __init__(self, irreps, classes, merged, merged_order):
        self.irreps: dict[str, ClassFunction] = irreps
        self.classes: dict[str, ConjClassData] = classes
        self.merged: dict[str, dict] = merged
        self.merged_order: list[str] = merged_order

    # -- pairings ----------------------------------------------------------

    def inner_product(self, f: ClassFunction, g: ClassFunction) -> QuadIrr:
        """sum over classes of f(K) * conj(g(K)) / |C(K)|, exact."""
        acc = ZERO
        for i, label in enumerate(CLASS_ORDER):
            term = f.values[i] * g.values[i].conj()
            acc = acc + term * Fraction(1, self.classes[label].centralizer)
        return acc

    def decompose(self, f: ClassFunction) -> dict[str, Fraction]:
        """Multiplicities <f, rho_i> for every irrep; exact rationals."""
        out = {}
        for name in IRREP_ORDER:
            v = self.inner_product(f, self.irreps[name])
            if not v.is_rational():
                raise MixedFieldError(f"multiplicity of {name} came out irrational: {v}")
            out[name] = v.rational()
        return out

    def reconstruct(self, mults: dict[str, Fraction]) -> ClassFunction:
        acc = ClassFunction([ZERO] * len(CLASS_ORDER))
        for name, m in mults.items():
            if m:
                acc = acc + self.irreps[name].scale(m)
        return acc

    def permutation_character(self) -> ClassFunction:
        return self.irreps["rho1"] + self.irreps["rho0"]

    def h00(self) -> ClassFunction:
        """The fixed virtual class function rho1 - 3*rho0 (dimension 20)."""
        return self.irreps["rho1"] - self.irreps["rho0"].scale(3)

    # -- validation ---------------------------------------------------------

    def validate(self) -> None:
        sizes = sum(GROUP_ORDER // c.centralizer for c in self.classes.values())
        if sizes != GROUP_ORDER:
            raise TableValidationError("class equation failed: sizes sum to %d" % sizes)
        names = IRREP_ORDER
        for i, ni in enumerate(names):
            for j in range(i, len(names)):
                v = self.inner_product(self.irreps[ni], self.irreps[names[j]])
                want = QuadIrr.of(1 if i == j else 0)
                if v != want:
                    raise TableValidationError(
                        f"row orthogonality failed at <{ni},{names[j]}> = {v}"
                    )
        for i, ci in enumerate(CLASS_ORDER):
            for j in range(i, len(CLASS_ORDER)):
                acc = ZERO
                for name in names:
                    r = self.irreps[name]
                    acc = acc + r.values[i] * r.values[j].conj()
                want = QuadIrr.of(self.classes[ci].centralizer if i == j else 0)
                if acc != want:
                    raise TableValidationError(
                        f"column orthogonality failed at ({ci},{CLASS_ORDER[j]}) = {acc}"
                    )
        for label, c in self.classes.items():
            w_expected = QuadIrr.of(1) + self.irreps["rho1"][label]
            if QuadIrr.of(c.w) != w_expected:
                raise TableValidationError(f"w mismatch at {label}")
        for md in self.merged.values():
            if md["gamma0_index"] != gamma0_index(md["order"]):
                raise TableValidationError(f"Gamma0 index mismatch for order {md['order']}")
            if gcd(md["order"], 12) % md["h"] != 0:
                raise TableValidationError(f"h does not divide gcd(order,12) in {md}")


_cached_table: CharacterTable | None = None


def load_tables(validate: bool = True, force_reload: bool = False) -> CharacterTable:
    """Load and (by default) fully validate the bundled M24 data assets."""
    global _cached_table
    if _cached_table is not None and not force_reload:
        return _cached_table
    rows = []
    for line in _read_text("m24_character_table.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != len(CLASS_ORDER):
            raise TableValidationError(f"bad column count in table row: {len(toks)}")
        rows.append(ClassFunction([_parse_field(t) for t in toks]))
    if len(rows) != len(IRREP_ORDER):
        raise TableValidationError(f"bad row count in character table: {len(rows)}")
    irreps = dict(zip(IRREP_ORDER, rows))

    meta = load_json_asset("m24_classes.json")
    classes: dict[str, ConjClassData] = {}
    for mlabel, md in meta["merged"].items():
        for member in md["members"]:
            classes[member] = ConjClassData(
                label=member,
                merged_label=mlabel,
                order=md["order"],
                h=md["h"],
                w=md["w"],
                centralizer=md["centralizer"],
                gamma0_index=md["gamma0_index"],
                bound_mantissa=md["bound_mantissa"],
                bound_exponent=md["bound_exponent"],
            )
    table = CharacterTable(irreps, classes, meta["merged"], meta["merged_order"])
    if validate:
        table.validate()
    _cached_table = table
    return table
