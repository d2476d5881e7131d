from fractions import Fraction as F

import pytest

from m24moonshine.chartable import (
    CLASS_ORDER,
    CONJUGATE_IRREP,
    GROUP_ORDER,
    IRREP_ORDER,
    ClassFunction,
    MixedFieldError,
    QuadIrr,
    load_tables,
)


def test_load_validates(table):
    # load_tables() ran the full validation: both orthogonality relations,
    # class equation, w = 1 + rho1, Gamma0 indices, h | gcd(order, 12)
    assert len(table.irreps) == 26
    assert sum(GROUP_ORDER // c.centralizer for c in table.classes.values()) == GROUP_ORDER


def test_dimensions(table):
    dims = [int(table.irreps[r].dim()) for r in IRREP_ORDER]
    assert dims == [1, 23, 45, 45, 231, 231, 252, 253, 483, 770, 770, 990, 990,
                    1035, 1035, 1035, 1265, 1771, 2024, 2277, 3312, 3520, 5313,
                    5544, 5796, 10395]


def test_rho2_at_7A(table):
    v = table.irreps["rho2"]["7A"]
    assert v == QuadIrr.of(F(-1, 2), F(1, 2), 7)


def test_orthonormality_examples(table):
    assert table.inner_product(table.irreps["rho2"], table.irreps["rho2"]) == QuadIrr.of(1)
    perm = table.permutation_character()
    assert table.inner_product(perm, table.irreps["rho0"]) == QuadIrr.of(1)
    twice = table.irreps["rho14"] + table.irreps["rho14"]
    assert table.inner_product(twice, table.irreps["rho14"]) == QuadIrr.of(2)


def test_full_orthonormality(table):
    for i, a in enumerate(IRREP_ORDER):
        for j, b in enumerate(IRREP_ORDER):
            v = table.inner_product(table.irreps[a], table.irreps[b])
            assert v == QuadIrr.of(1 if i == j else 0)


def test_decompose_examples(table):
    f = table.irreps["rho2"] + table.irreps["rho2b"]
    m = table.decompose(f)
    assert m["rho2"] == 1 and m["rho2b"] == 1
    assert all(v == 0 for k, v in m.items() if k not in ("rho2", "rho2b"))

    const = ClassFunction([QuadIrr.of(-2)] * 26)
    m = table.decompose(const)
    assert m["rho0"] == -2
    assert all(v == 0 for k, v in m.items() if k != "rho0")

    h00 = table.h00()
    m = table.decompose(h00)
    assert m["rho1"] == 1 and m["rho0"] == -3
    assert int(h00.dim()) == 20


def test_decompose_reconstruct_identity(table):
    f = (
        table.irreps["rho5"].scale(F(7, 3))
        + table.irreps["rho10"]
        - table.irreps["rho19"].scale(2)
    )
    m = table.decompose(f)
    assert table.reconstruct(m) == f


def test_galois_conjugate_columns(table):
    i23a, i23b = CLASS_ORDER.index("23A"), CLASS_ORDER.index("23B")
    for name in IRREP_ORDER:
        row = table.irreps[name]
        assert row.values[i23a] == row.values[i23b].conj()


def test_conjugate_irrep_rows(table):
    for name, conj_name in CONJUGATE_IRREP.items():
        assert table.irreps[name].conj() == table.irreps[conj_name]


def test_quadirr_arithmetic():
    x = QuadIrr.of(F(1, 2), F(1, 2), 7)
    y = x.conj()
    assert (x * y) == QuadIrr.of(2)  # (1 + 7)/4
    assert (x + y) == QuadIrr.of(1)
    with pytest.raises(MixedFieldError):
        _ = x + QuadIrr.of(0, 1, 15)
    with pytest.raises(MixedFieldError):
        _ = x * QuadIrr.of(0, 1, 15)
    # d = 0 forces b = 0 on construction
    z = QuadIrr.of(3, 0, 7)
    assert z.d == 0


def test_data_dir_override(tmp_path, monkeypatch):
    monkeypatch.setenv("M24_DATA_DIR", str(tmp_path))
    from m24moonshine.chartable import TableValidationError

    with pytest.raises((FileNotFoundError, TableValidationError)):
        load_tables(force_reload=True)
    monkeypatch.delenv("M24_DATA_DIR")
    load_tables(force_reload=True)
