"""Poschl-Teller spectra, thermodynamics and verification tools."""

from ._ptspec import (
    DEFAULT_AMU_TO_EV,
    DEFAULT_HBAR_C,
    PtspecError,
    aim_closed_form,
    aim_eigenvalues,
    calibration_report,
    dawson,
    dirac_levels,
    energy_nr,
    erfi,
    figure_data,
    hyp2f1_terminating,
    level_count,
    log_erfi,
    molecules,
    nr_limit,
    partition_sum,
    potential,
    shoot_eigenvalue,
    table2_csv,
    thermo_point,
)

__all__ = [
    "DEFAULT_AMU_TO_EV",
    "DEFAULT_HBAR_C",
    "PtspecError",
    "aim_closed_form",
    "aim_eigenvalues",
    "calibration_report",
    "dawson",
    "dirac_levels",
    "energy_nr",
    "erfi",
    "figure_data",
    "hyp2f1_terminating",
    "level_count",
    "log_erfi",
    "molecules",
    "nr_limit",
    "partition_sum",
    "potential",
    "shoot_eigenvalue",
    "table2_csv",
    "thermo_point",
]
