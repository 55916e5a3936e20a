"""Symbiotic backscatter RSMA outage laboratory: Python surface of the native core."""

from ._core import (  # noqa: F401
    ScenarioConfig,
    config_from_json,
    load_config,
    exp_pdf,
    upper_gamma_int,
    tau_ccdf,
    delta_range,
    simplified_sinrs,
    theorem_constants,
    xi_quadrature,
    xi_foxh,
    foxh_uni,
    sop_closed_form,
    estimate_sop,
    estimate_fixed_delta_sop,
    __version__,
)

__all__ = [
    "ScenarioConfig",
    "config_from_json",
    "load_config",
    "exp_pdf",
    "upper_gamma_int",
    "tau_ccdf",
    "delta_range",
    "simplified_sinrs",
    "theorem_constants",
    "xi_quadrature",
    "xi_foxh",
    "foxh_uni",
    "sop_closed_form",
    "estimate_sop",
    "estimate_fixed_delta_sop",
    "__version__",
]
