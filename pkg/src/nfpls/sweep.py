"""Experiment runner: line-oriented configs in, deterministic CSV datasets out.

Each experiment sweeps one grid variable and writes one CSV per channel
model with the closed-form value, an oracle column where the dense oracle
is tractable (M <= 400, otherwise the literal token "skipped"), and an
asymptote column where a limit law exists (empty otherwise).  Infinite
required power is rendered as the literal token "inf".  Rows are computed
by a worker pool but written strictly in grid order, so output bytes do not
depend on the thread count.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .channel import ChannelModel, build_channel
from .depth import depth_closed, depth_scan
from .exceptions import ConfigError, ScopeError
from .geometry import ArrayGeometry, NodeGeometry
from .power import min_power_closed, min_power_eigen_oracle, power_limit
from .secrecy import (DENSE_ORACLE_MAX_ELEMENTS, LinkBudget, asymptotic_capacity,
                      capacity_eigen_oracle, secrecy_capacity_closed)
from .special import chebyshev_gauss_nodes
from .stats import closed_link_stats, rho_direct

__all__ = ["SweepConfig", "validate_config", "parse_config", "run_experiment",
           "EXPERIMENTS", "BASELINE"]

SKIPPED = "skipped"
_INF = "inf"
_EMPTY = ""

EXPERIMENTS = (
    "capacity_vs_snr",
    "capacity_vs_M",
    "capacity_vs_re",
    "capacity_perturbation",
    "cospsi_vs_re",
    "depth_vs_M",
    "power_vs_R0",
    "power_vs_re",
    "power_vs_M",
)

# reference scenario every config starts from
BASELINE = {
    "m_x": 51,
    "m_z": 51,
    "wavelength": 0.125,
    "theta_b": math.pi / 3.0,
    "phi_b": 2.0 * math.pi / 3.0,
    "r_b": 10.0,
    "theta_e": math.pi / 3.0,
    "phi_e": 2.0 * math.pi / 3.0,
    "r_e": 20.0,
    "snr_db": 40.0,
    "sigma2_db": -10.0,
    "r0_bits": 1.0,
    "t": 100,
    "threads": 1,
    "models": "upw,usw,nusw",
    "out_dir": "results",
    "depth_gamma": 0.5,
}

# grid defaults and experiment-specific baseline overrides; the two depth
# experiments default to the boresight axis, the only closed-form scope
_GRID_DEFAULTS = {
    "capacity_vs_snr": ("gamma_db", 0.0, 80.0, 41, "db", {}),
    "capacity_vs_M": ("m_side", 3.0, 501.0, 20, "log", {}),
    "capacity_vs_re": ("r_e", 2.0, 200.0, 61, "log", {}),
    "capacity_perturbation": ("dangle", -0.05, 0.05, 41, "linear", {}),
    "cospsi_vs_re": ("r_e", 1.0, 1000.0, 121, "log",
                     {"theta_b": math.pi / 2.0, "phi_b": math.pi / 2.0,
                      "theta_e": math.pi / 2.0, "phi_e": math.pi / 2.0}),
    "depth_vs_M": ("m_side", 21.0, 201.0, 24, "log",
                   {"theta_b": math.pi / 2.0, "phi_b": math.pi / 2.0,
                    "theta_e": math.pi / 2.0, "phi_e": math.pi / 2.0}),
    "power_vs_R0": ("r0_bits", 0.25, 6.0, 24, "linear", {}),
    "power_vs_re": ("r_e", 2.0, 200.0, 61, "log", {}),
    "power_vs_M": ("m_side", 3.0, 501.0, 20, "log", {}),
}

_INT_KEYS = {"m_x", "m_z", "t", "threads", "grid_points"}
_FLOAT_KEYS = {"wavelength", "spacing_d", "element_side", "theta_b", "phi_b",
               "r_b", "theta_e", "phi_e", "r_e", "snr_db", "sigma2_db",
               "r0_bits", "grid_start", "grid_stop", "depth_gamma"}
_STR_KEYS = {"experiment", "grid_var", "grid_scale", "models", "out_dir"}
_ALL_KEYS = _INT_KEYS | _FLOAT_KEYS | _STR_KEYS

_GRID_VARS = {"gamma_db", "m_side", "r_e", "r0_bits", "dangle"}
_SCALES = {"linear", "log", "db"}


@dataclass(frozen=True)
class SweepConfig:
    experiment: str
    m_x: int
    m_z: int
    wavelength: float
    spacing_d: float
    element_side: float
    theta_b: float
    phi_b: float
    r_b: float
    theta_e: float
    phi_e: float
    r_e: float
    snr_db: float
    sigma2_db: float
    r0_bits: float
    t: int
    threads: int
    models: tuple
    out_dir: str
    grid_var: str
    grid_start: float
    grid_stop: float
    grid_points: int
    grid_scale: str
    depth_gamma: float

    @property
    def gamma_bar(self):
        return 10.0 ** (self.snr_db / 10.0)

    @property
    def sigma2(self):
        return 10.0 ** (self.sigma2_db / 10.0)

    @property
    def power_p(self):
        return self.gamma_bar * self.sigma2

    def array(self, m_x=None, m_z=None):
        return ArrayGeometry(m_x=m_x or self.m_x, m_z=m_z or self.m_z,
                             spacing_d=self.spacing_d,
                             element_side=self.element_side,
                             wavelength=self.wavelength)

    def node_b(self):
        return NodeGeometry(self.r_b, self.theta_b, self.phi_b)

    def node_e(self, r_e=None, theta_e=None, phi_e=None):
        return NodeGeometry(r_e if r_e is not None else self.r_e,
                            theta_e if theta_e is not None else self.theta_e,
                            phi_e if phi_e is not None else self.phi_e)

    def budget(self, gamma_bar=None):
        g = self.gamma_bar if gamma_bar is None else gamma_bar
        sigma2 = self.sigma2
        return LinkBudget(power_p=g * sigma2, noise_bob=sigma2, noise_eve=sigma2)

    def quadrature(self):
        return chebyshev_gauss_nodes(self.t)

    def co_directional(self):
        return (abs(self.theta_b - self.theta_e) <= 1e-12
                and abs(self.phi_b - self.phi_e) <= 1e-12)

    def effective_items(self):
        """Resolved key/value pairs, including derived quantities, for the echo."""
        items = {
            "experiment": self.experiment,
            "m_x": self.m_x, "m_z": self.m_z,
            "wavelength": self.wavelength,
            "spacing_d": self.spacing_d,
            "element_side": self.element_side,
            "element_area": self.element_side ** 2,
            "theta_b": self.theta_b, "phi_b": self.phi_b, "r_b": self.r_b,
            "theta_e": self.theta_e, "phi_e": self.phi_e, "r_e": self.r_e,
            "snr_db": self.snr_db, "gamma_bar": self.gamma_bar,
            "sigma2_db": self.sigma2_db, "sigma2": self.sigma2,
            "power_p": self.power_p,
            "r0_bits": self.r0_bits,
            "t": self.t,
            "threads": self.threads,
            "models": ",".join(self.models),
            "out_dir": self.out_dir,
            "grid_var": self.grid_var,
            "grid_start": self.grid_start,
            "grid_stop": self.grid_stop,
            "grid_points": self.grid_points,
            "grid_scale": self.grid_scale,
            "depth_gamma": self.depth_gamma,
        }
        return items


def _parse_scalar(key, raw, line_no):
    if key in _INT_KEYS:
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"line {line_no}: key {key!r} needs an integer, "
                              f"got {raw!r}") from None
        return value
    if key in _FLOAT_KEYS:
        try:
            return float(raw)
        except ValueError:
            raise ConfigError(f"line {line_no}: key {key!r} needs a number, "
                              f"got {raw!r}") from None
    return raw


def _check_value(key, value, line_no):
    where = f"line {line_no}: "
    if key in ("m_x", "m_z"):
        if value < 1 or value % 2 == 0:
            raise ConfigError(f"{where}{key} must be a positive odd integer, "
                              f"got {value}")
    elif key in ("theta_b", "phi_b", "theta_e", "phi_e"):
        if not 0.0 < value < math.pi:
            raise ConfigError(f"{where}{key} must lie in (0, pi), got {value}")
    elif key in ("r_b", "r_e", "wavelength", "spacing_d", "element_side"):
        if not value > 0.0:
            raise ConfigError(f"{where}{key} must be positive, got {value}")
    elif key == "r0_bits":
        if not value > 0.0:
            raise ConfigError(f"{where}r0_bits must be positive, got {value}")
    elif key == "t":
        if value < 10:
            raise ConfigError(f"{where}t must be at least 10, got {value}")
    elif key == "threads":
        if value < 1:
            raise ConfigError(f"{where}threads must be at least 1, got {value}")
    elif key == "grid_points":
        if value < 2:
            raise ConfigError(f"{where}grid_points must be at least 2, got {value}")
    elif key == "grid_scale":
        if value not in _SCALES:
            raise ConfigError(f"{where}grid_scale must be one of "
                              f"{sorted(_SCALES)}, got {value!r}")
    elif key == "grid_var":
        if value not in _GRID_VARS:
            raise ConfigError(f"{where}grid_var must be one of "
                              f"{sorted(_GRID_VARS)}, got {value!r}")
    elif key == "experiment":
        if value not in EXPERIMENTS:
            raise ConfigError(f"{where}unknown experiment {value!r}")
    elif key == "depth_gamma":
        if not 0.0 < value < 1.0:
            raise ConfigError(f"{where}depth_gamma must lie in (0, 1), got {value}")
    elif key == "models":
        for name in value.split(","):
            if name.strip().lower() not in ("upw", "usw", "nusw"):
                raise ConfigError(f"{where}unknown model {name.strip()!r}")


def parse_config(text, experiment=None):
    """Parse "key = value" lines into a SweepConfig with defaults filled.

    An empty file yields the full reference scenario.  `experiment`
    (usually from the CLI subcommand) overrides any experiment key in the
    file; one of the two must name the experiment.
    """
    overrides = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {line_no}: expected 'key = value', "
                              f"got {stripped!r}")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key not in _ALL_KEYS:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
        if key in overrides:
            raise ConfigError(f"line {line_no}: duplicate key {key!r}")
        value = _parse_scalar(key, raw, line_no)
        _check_value(key, value, line_no)
        overrides[key] = value

    experiment = experiment or overrides.pop("experiment", None)
    overrides.pop("experiment", None)
    if experiment is None:
        raise ConfigError("no experiment named (config key or CLI subcommand)")
    if experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {experiment!r}")

    var, start, stop, points, scale, extra = _GRID_DEFAULTS[experiment]
    resolved = dict(BASELINE)
    resolved.update(extra)
    resolved.update({"grid_var": var, "grid_start": start, "grid_stop": stop,
                     "grid_points": points, "grid_scale": scale})
    resolved.update(overrides)

    wavelength = resolved["wavelength"]
    resolved.setdefault("spacing_d", wavelength / 2.0)
    resolved.setdefault("element_side", wavelength / math.sqrt(4.0 * math.pi))
    if resolved["spacing_d"] < resolved["element_side"]:
        raise ConfigError("spacing_d must be at least element_side")
    if resolved["grid_var"] != var:
        raise ConfigError(f"experiment {experiment!r} sweeps {var!r}; "
                          f"grid_var {resolved['grid_var']!r} does not exist here")

    models = tuple(name.strip().lower() for name in resolved["models"].split(","))
    return SweepConfig(experiment=experiment,
                       m_x=resolved["m_x"], m_z=resolved["m_z"],
                       wavelength=wavelength,
                       spacing_d=resolved["spacing_d"],
                       element_side=resolved["element_side"],
                       theta_b=resolved["theta_b"], phi_b=resolved["phi_b"],
                       r_b=resolved["r_b"],
                       theta_e=resolved["theta_e"], phi_e=resolved["phi_e"],
                       r_e=resolved["r_e"],
                       snr_db=resolved["snr_db"], sigma2_db=resolved["sigma2_db"],
                       r0_bits=resolved["r0_bits"],
                       t=resolved["t"], threads=resolved["threads"],
                       models=models, out_dir=resolved["out_dir"],
                       grid_var=resolved["grid_var"],
                       grid_start=float(resolved["grid_start"]),
                       grid_stop=float(resolved["grid_stop"]),
                       grid_points=resolved["grid_points"],
                       grid_scale=resolved["grid_scale"],
                       depth_gamma=resolved["depth_gamma"])


def validate_config(path, experiment=None):
    """Parse and validate a config file; raises ConfigError on any defect."""
    text = Path(path).read_text(encoding="utf-8") if path else ""
    return parse_config(text, experiment=experiment)


# ---------------------------------------------------------------------------
# grids and rendering


def _grid_values(config):
    start, stop, points = config.grid_start, config.grid_stop, config.grid_points
    if config.grid_scale == "log":
        if start <= 0.0 or stop <= 0.0:
            raise ConfigError("log grids need positive endpoints")
        values = np.geomspace(start, stop, points)
    else:
        values = np.linspace(start, stop, points)
    if config.grid_var == "m_side":
        odd = [max(1, int(round((v - 1.0) / 2.0)) * 2 + 1) for v in values]
        seen, out = set(), []
        for v in odd:
            if v not in seen:
                seen.add(v)
                out.append(float(v))
        return out
    return [float(v) for v in values]


def _fmt(value):
    if isinstance(value, str):
        return value
    if value is None:
        return _EMPTY
    if math.isinf(value):
        return _INF
    return f"{value:.12e}"


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _map_rows(config, worker, n_rows):
    if config.threads <= 1:
        return [worker(i) for i in range(n_rows)]
    slots = [None] * n_rows
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        for i, result in zip(range(n_rows), pool.map(worker, range(n_rows))):
            slots[i] = result
    return slots


def _oracle_tractable(m_total):
    return m_total <= DENSE_ORACLE_MAX_ELEMENTS


# ---------------------------------------------------------------------------
# experiment row computations


def _capacity_asymptote(config, model, gamma_bar, stats, r_e, kind):
    co_dir = config.co_directional()
    model = ChannelModel.from_string(model)
    if kind == "snr":
        if model is ChannelModel.UPW and co_dir:
            return max(2.0 * math.log2(r_e / config.r_b), 0.0)
        return asymptotic_capacity(model, "high_snr", co_directional=False,
                                   gamma_bar=gamma_bar, gain_bob=stats.gain_bob,
                                   rho=stats.rho)
    if kind == "m":
        if model is ChannelModel.NUSW:
            return asymptotic_capacity(model, "large_m", co_directional=co_dir,
                                       gamma_bar=gamma_bar,
                                       element_area=config.element_side ** 2,
                                       spacing_d=config.spacing_d)
        if model is ChannelModel.UPW and co_dir:
            return max(2.0 * math.log2(r_e / config.r_b), 0.0)
        return None
    if kind == "re":
        if model is ChannelModel.UPW and co_dir:
            return max(2.0 * math.log2(r_e / config.r_b), 0.0)
        return None
    return None


def _run_capacity_vs_snr(config):
    grid = _grid_values(config)
    arr = config.array()
    node_b, node_e = config.node_b(), config.node_e()
    rule = config.quadrature()
    stats = {m: closed_link_stats(m, arr, node_b, node_e, rule)
             for m in config.models}
    tractable = _oracle_tractable(arr.m_total)
    channels = {}
    if tractable:
        channels = {m: (build_channel(m, arr, node_b), build_channel(m, arr, node_e))
                    for m in config.models}

    def worker(i):
        gamma_db = grid[i]
        gamma_bar = 10.0 ** (gamma_db / 10.0)
        budget = config.budget(gamma_bar)
        out = {}
        for m in config.models:
            closed = secrecy_capacity_closed(stats[m], budget).capacity
            if tractable:
                h_b, h_e = channels[m]
                oracle = capacity_eigen_oracle(h_b, h_e, budget,
                                               method="dense").capacity
            else:
                oracle = SKIPPED
            asym = _capacity_asymptote(config, m, gamma_bar, stats[m],
                                       config.r_e, "snr")
            out[m] = (gamma_db, closed, oracle, asym)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["gamma_db", "capacity_bits", "capacity_oracle_bits",
              "capacity_asymptote_bits"]
    return header, rows


def _run_capacity_vs_m(config):
    grid = _grid_values(config)
    node_b, node_e = config.node_b(), config.node_e()
    rule = config.quadrature()
    budget = config.budget()

    def worker(i):
        m_side = int(grid[i])
        arr = config.array(m_side, m_side)
        out = {}
        for m in config.models:
            stats = closed_link_stats(m, arr, node_b, node_e, rule)
            closed = secrecy_capacity_closed(stats, budget).capacity
            if _oracle_tractable(arr.m_total):
                oracle = capacity_eigen_oracle(build_channel(m, arr, node_b),
                                               build_channel(m, arr, node_e),
                                               budget, method="dense").capacity
            else:
                oracle = SKIPPED
            asym = _capacity_asymptote(config, m, config.gamma_bar, stats,
                                       config.r_e, "m")
            out[m] = (float(m_side), closed, oracle, asym)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["m_side", "capacity_bits", "capacity_oracle_bits",
              "capacity_asymptote_bits"]
    return header, rows


def _run_capacity_vs_re(config):
    grid = _grid_values(config)
    arr = config.array()
    node_b = config.node_b()
    rule = config.quadrature()
    budget = config.budget()
    tractable = _oracle_tractable(arr.m_total)
    h_b = {m: build_channel(m, arr, node_b) for m in config.models} if tractable else {}

    def worker(i):
        r_e = grid[i]
        node_e = config.node_e(r_e=r_e)
        out = {}
        for m in config.models:
            stats = closed_link_stats(m, arr, node_b, node_e, rule)
            closed = secrecy_capacity_closed(stats, budget).capacity
            if tractable:
                oracle = capacity_eigen_oracle(h_b[m],
                                               build_channel(m, arr, node_e),
                                               budget, method="dense").capacity
            else:
                oracle = SKIPPED
            asym = _capacity_asymptote(config, m, config.gamma_bar, stats,
                                       r_e, "re")
            out[m] = (r_e, closed, oracle, asym)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["r_e_m", "capacity_bits", "capacity_oracle_bits",
              "capacity_asymptote_bits"]
    return header, rows


def _run_capacity_perturbation(config):
    axis = _grid_values(config)
    pairs = [(dt, dp) for dt in axis for dp in axis]
    arr = config.array()
    node_b = config.node_b()
    rule = config.quadrature()
    budget = config.budget()

    def worker(i):
        d_theta, d_phi = pairs[i]
        node_e = config.node_e(theta_e=config.theta_b + d_theta,
                               phi_e=config.phi_b + d_phi)
        out = {}
        for m in config.models:
            stats = closed_link_stats(m, arr, node_b, node_e, rule)
            closed = secrecy_capacity_closed(stats, budget).capacity
            out[m] = (d_theta, d_phi, closed, stats.rho)
        return out

    raw = _map_rows(config, worker, len(pairs))
    rows = []
    for m in config.models:
        c_max = max(r[m][2] for r in raw)
        scale = 1.0 / c_max if c_max > 0.0 else 0.0
        rows.append([(dt, dp, c, c * scale, rho)
                     for (dt, dp, c, rho) in (r[m] for r in raw)])
    merged = [{m: row for m, row in zip(config.models, per_point)}
              for per_point in zip(*rows)]
    header = ["dtheta_rad", "dphi_rad", "capacity_bits", "capacity_normalized",
              "rho"]
    return header, merged


def _run_cospsi_vs_re(config):
    grid = _grid_values(config)
    arr = config.array()
    node_b = config.node_b()
    rule = config.quadrature()
    tractable = _oracle_tractable(arr.m_total)
    h_b = {m: build_channel(m, arr, node_b) for m in config.models} if tractable else {}

    def worker(i):
        r_e = grid[i]
        node_e = config.node_e(r_e=r_e)
        out = {}
        for m in config.models:
            stats = closed_link_stats(m, arr, node_b, node_e, rule)
            if tractable:
                oracle = 1.0 - rho_direct(h_b[m],
                                          build_channel(m, arr, node_e)).rho
            else:
                oracle = SKIPPED
            out[m] = (r_e, 1.0 - stats.rho, oracle)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["r_e_m", "cos_psi", "cos_psi_oracle"]
    return header, rows


def _run_depth_vs_m(config):
    grid = _grid_values(config)
    node_b = config.node_b()

    def worker(i):
        m_side = int(grid[i])
        arr = config.array(m_side, m_side)
        closed = depth_closed(arr, config.r_b, config.depth_gamma)
        out = {}
        for m in config.models:
            if _oracle_tractable(arr.m_total):
                scan = depth_scan(arr, node_b, config.depth_gamma, m).depth
            else:
                scan = SKIPPED
            out[m] = (float(m_side), closed.depth, closed.r_s, closed.m_s,
                      closed.m_s_linear_upsilon, scan)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["m_side", "depth_m", "r_s_m", "m_s", "m_s_linear_upsilon",
              "depth_scan_m"]
    return header, rows


def _power_closed_value(stats, config, r0):
    outcome = min_power_closed(stats, config.sigma2, config.sigma2, r0)
    return outcome.power


def _power_oracle_value(h_b, h_e, config, r0):
    outcome = min_power_eigen_oracle(h_b, h_e, config.sigma2, config.sigma2,
                                     r0, method="dense")
    return outcome.power


def _run_power_vs_r0(config):
    grid = _grid_values(config)
    arr = config.array()
    node_b, node_e = config.node_b(), config.node_e()
    rule = config.quadrature()
    stats = {m: closed_link_stats(m, arr, node_b, node_e, rule)
             for m in config.models}
    tractable = _oracle_tractable(arr.m_total)
    channels = {}
    if tractable:
        channels = {m: (build_channel(m, arr, node_b), build_channel(m, arr, node_e))
                    for m in config.models}

    def worker(i):
        r0 = grid[i]
        out = {}
        for m in config.models:
            closed = _power_closed_value(stats[m], config, r0)
            if tractable:
                oracle = _power_oracle_value(*channels[m], config, r0)
            else:
                oracle = SKIPPED
            asym = power_limit(m, arr, node_b, node_e, config.sigma2, r0)
            out[m] = (r0, closed, oracle, asym)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["r0_bits", "power_w", "power_oracle_w", "power_asymptote_w"]
    return header, rows


def _run_power_vs_re(config):
    grid = _grid_values(config)
    arr = config.array()
    node_b = config.node_b()
    rule = config.quadrature()
    tractable = _oracle_tractable(arr.m_total)
    h_b = {m: build_channel(m, arr, node_b) for m in config.models} if tractable else {}

    def worker(i):
        r_e = grid[i]
        node_e = config.node_e(r_e=r_e)
        out = {}
        for m in config.models:
            stats = closed_link_stats(m, arr, node_b, node_e, rule)
            closed = _power_closed_value(stats, config, config.r0_bits)
            if tractable:
                oracle = _power_oracle_value(h_b[m],
                                             build_channel(m, arr, node_e),
                                             config, config.r0_bits)
            else:
                oracle = SKIPPED
            asym = power_limit(m, arr, node_b, node_e, config.sigma2,
                               config.r0_bits)
            out[m] = (r_e, closed, oracle, asym)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["r_e_m", "power_w", "power_oracle_w", "power_asymptote_w"]
    return header, rows


def _run_power_vs_m(config):
    grid = _grid_values(config)
    node_b, node_e = config.node_b(), config.node_e()
    rule = config.quadrature()

    def worker(i):
        m_side = int(grid[i])
        arr = config.array(m_side, m_side)
        out = {}
        for m in config.models:
            stats = closed_link_stats(m, arr, node_b, node_e, rule)
            closed = _power_closed_value(stats, config, config.r0_bits)
            if _oracle_tractable(arr.m_total):
                oracle = _power_oracle_value(build_channel(m, arr, node_b),
                                             build_channel(m, arr, node_e),
                                             config, config.r0_bits)
            else:
                oracle = SKIPPED
            asym = power_limit(m, arr, node_b, node_e, config.sigma2,
                               config.r0_bits)
            out[m] = (float(m_side), closed, oracle, asym)
        return out

    rows = _map_rows(config, worker, len(grid))
    header = ["m_side", "power_w", "power_oracle_w", "power_asymptote_w"]
    return header, rows


_RUNNERS = {
    "capacity_vs_snr": _run_capacity_vs_snr,
    "capacity_vs_M": _run_capacity_vs_m,
    "capacity_vs_re": _run_capacity_vs_re,
    "capacity_perturbation": _run_capacity_perturbation,
    "cospsi_vs_re": _run_cospsi_vs_re,
    "depth_vs_M": _run_depth_vs_m,
    "power_vs_R0": _run_power_vs_r0,
    "power_vs_re": _run_power_vs_re,
    "power_vs_M": _run_power_vs_m,
}


def run_experiment(config):
    """Run one experiment and write its CSVs; returns the written paths."""
    if config.experiment == "depth_vs_M" and config.m_x != config.m_z:
        raise ScopeError("depth_vs_M sweeps square arrays only")
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    header, rows = _RUNNERS[config.experiment](config)

    echo = out_dir / f"{config.experiment}_config.txt"
    echo_lines = [f"{k} = {v}" for k, v in config.effective_items().items()]
    echo.write_text("\n".join(echo_lines) + "\n", encoding="utf-8")

    paths = []
    for m in config.models:
        path = out_dir / f"{config.experiment}_{m}.csv"
        _write_csv(path, header, [row[m] for row in rows])
        paths.append(path)
    return paths
