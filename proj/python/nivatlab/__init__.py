"""Pattern complexity and periodicity of two-dimensional configurations."""

from ._core import (
    Configuration,
    Line,
    Shape,
    SpecError,
    UnknownLetterError,
    balanced_set,
    complexity,
    complexity_report,
    complexity_table,
    diagonal_closed_form,
    example_suite,
    expansive_witness,
    fine_wilf,
    generating_set,
    mh_check,
    mlc_set,
    nivat_check,
    null_area_period,
    periods,
    phi,
    quasi_regular,
    strip_lemma,
)

__all__ = [
    "Configuration",
    "Line",
    "Shape",
    "SpecError",
    "UnknownLetterError",
    "balanced_set",
    "complexity",
    "complexity_report",
    "complexity_table",
    "diagonal_closed_form",
    "example_suite",
    "expansive_witness",
    "fine_wilf",
    "generating_set",
    "mh_check",
    "mlc_set",
    "nivat_check",
    "null_area_period",
    "periods",
    "phi",
    "quasi_regular",
    "strip_lemma",
]
