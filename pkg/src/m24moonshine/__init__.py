"""Exact verification toolkit for the M24 moonshine evidence chain."""

__version__ = "0.1.0"

from .chartable import (
    CLASS_ORDER,
    GROUP_ORDER,
    IRREP_ORDER,
    CharacterTable,
    ClassFunction,
    ConjClassData,
    QuadIrr,
    load_tables,
)
from .series import (
    DEFAULT_PREC24,
    EtaQuotientSpec,
    QSeries,
    eisenstein_e2,
    eta_cube_shifted,
    eta_power,
    eta_quotient,
    f2_series,
    lambert_halfsum,
    theta_nullwert,
)
from .twining import (
    HeadCharacterMatrix,
    MultiplicityTable,
    TwiningForm,
    build_all_forms,
    build_fg,
    conway_dimension_check,
    conway_restriction_check,
    crosscheck_fg,
    head_characters,
    multiplicity_table,
)
from .congruence import (
    CongruenceResult,
    FormCombo,
    SeriesLibrary,
    evenness_suite,
    sturm_bound,
    thompson_suite,
    verify_congruence,
)
from .kloosterman import (
    KloostermanValue,
    MultiplierParams,
    dedekind_omega,
    eta_multiplier,
    incomplete_kloosterman,
    kloosterman_direct,
    kloosterman_sparse,
    rademacher_partial,
    zeta_partial,
)
from .quadforms import (
    BinQF,
    Gamma0nhMatrix,
    class_numbers,
    divisor_bound_const,
    gamma0nh_member,
    reduce_form,
    reduced_forms,
    root_map,
)
from .bounds import (
    BoundReport,
    character_bounds,
    positivity_certificate,
    theorem3_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
