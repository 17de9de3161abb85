"""Secrecy-performance analysis for near-field and far-field MISO wiretap
links: channel construction, closed-form secrecy capacity and minimum
required power with independent eigenproblem oracles, the depth-of-insecurity
metric, and a deterministic sweep runner.
"""

from .channel import (ChannelModel, ChannelVector, build_channel, dump_channel,
                      element_gain, green_function, load_channel)
from .depth import (DepthReport, cos_psi, cos_psi_numeric, depth_closed,
                    depth_scan, upsilon_threshold)
from .exceptions import (ConfigError, DegenerateInputError, DomainError,
                         NumericalError, NumericalQualityWarning, ScopeError)
from .geometry import (ArrayGeometry, NodeGeometry, direction_cosines,
                       exact_distance, fresnel_distance_approx,
                       region_boundaries)
from .power import PowerOutcome, min_power_closed, min_power_eigen_oracle, power_limit
from .secrecy import (LinkBudget, SecrecyOutcome, achieved_secrecy_rate,
                      asymptotic_beamformer, asymptotic_capacity,
                      capacity_eigen_oracle, mrt_beamformer,
                      secrecy_capacity_closed)
from .special import QuadratureRule, chebyshev_gauss_nodes, erf_complex
from .stats import (LinkStats, closed_link_stats, gain_nusw, gain_nusw_ula,
                    gain_uniform, rho_direct, rho_nusw, rho_nusw_ula, rho_upw,
                    rho_usw)
from .sweep import EXPERIMENTS, SweepConfig, parse_config, run_experiment, validate_config

__version__ = "0.1.0"

__all__ = [
    "ArrayGeometry", "NodeGeometry", "direction_cosines", "exact_distance",
    "fresnel_distance_approx", "region_boundaries",
    "QuadratureRule", "chebyshev_gauss_nodes", "erf_complex",
    "ChannelModel", "ChannelVector", "build_channel", "green_function",
    "element_gain", "dump_channel", "load_channel",
    "LinkStats", "rho_direct", "gain_uniform", "rho_upw", "rho_usw",
    "gain_nusw", "gain_nusw_ula", "rho_nusw", "rho_nusw_ula",
    "closed_link_stats",
    "LinkBudget", "SecrecyOutcome", "secrecy_capacity_closed",
    "capacity_eigen_oracle", "mrt_beamformer", "asymptotic_beamformer",
    "achieved_secrecy_rate", "asymptotic_capacity",
    "PowerOutcome", "min_power_closed", "min_power_eigen_oracle", "power_limit",
    "DepthReport", "cos_psi", "cos_psi_numeric", "upsilon_threshold",
    "depth_closed", "depth_scan",
    "SweepConfig", "parse_config", "validate_config", "run_experiment",
    "EXPERIMENTS",
    "DomainError", "ScopeError", "DegenerateInputError", "NumericalError",
    "ConfigError", "NumericalQualityWarning",
]
