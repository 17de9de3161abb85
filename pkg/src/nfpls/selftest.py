"""Self-test: oracle-agreement checks runnable from the CLI.

A condensed version of the acceptance suite: closed forms against the dense
eigenproblem oracles on random instances, the beamformer-angle identity, the
threshold root, and a comparison of the adopted correlation forms against
their variant shapes at the reference geometry.
"""

import math

import numpy as np

from .channel import build_channel
from .depth import cos_psi_numeric, correlation_at_threshold_scale, upsilon_threshold
from .geometry import ArrayGeometry, NodeGeometry
from .power import min_power_closed, min_power_eigen_oracle
from .secrecy import LinkBudget, capacity_eigen_oracle, secrecy_capacity_closed
from .stats import rho_direct, rho_nusw, rho_upw

_BASE = dict(spacing_d=0.0625, element_side=0.035, wavelength=0.125)


def sample_instances(count, seed=20240521, max_side=15, co_directional_share=0.15):
    """Random wiretap instances: geometry pair, channels, budget, target rate.

    Budgets are log-uniform; a slice of the draws places the eavesdropper
    co-directionally.  Instances whose capacity (or feasibility margin) is
    too close to zero are redrawn: there the spectral gap collapses and no
    double-precision iteration can certify nine digits.
    """
    rng = np.random.default_rng(seed)
    sides = [s for s in range(1, max_side + 1, 2)]
    models = ("upw", "usw", "nusw")
    out = []
    while len(out) < count:
        m_x = int(rng.choice(sides))
        m_z = int(rng.choice(sides[1:]))
        arr = ArrayGeometry(m_x=m_x, m_z=m_z, **_BASE)
        model = models[len(out) % 3]
        r_b = float(10.0 ** rng.uniform(math.log10(3.0), math.log10(60.0)))
        th_b = float(rng.uniform(0.3, math.pi - 0.3))
        ph_b = float(rng.uniform(0.3, math.pi - 0.3))
        node_b = NodeGeometry(r_b, th_b, ph_b)
        if rng.random() < co_directional_share:
            node_e = NodeGeometry(r_b * float(rng.uniform(1.3, 4.0)), th_b, ph_b)
        else:
            node_e = NodeGeometry(
                float(10.0 ** rng.uniform(math.log10(3.0), math.log10(90.0))),
                float(rng.uniform(0.3, math.pi - 0.3)),
                float(rng.uniform(0.3, math.pi - 0.3)))
        sigma_b = float(10.0 ** rng.uniform(-4.0, -1.0))
        sigma_e = float(10.0 ** rng.uniform(-4.0, -1.0))
        power = float(10.0 ** rng.uniform(0.0, 3.0))
        budget = LinkBudget(power_p=power, noise_bob=sigma_b, noise_eve=sigma_e)
        r0 = float(rng.uniform(0.2, 3.0))
        h_b = build_channel(model, arr, node_b)
        h_e = build_channel(model, arr, node_e)
        stats = rho_direct(h_b, h_e)
        closed = secrecy_capacity_closed(stats, budget)
        feasibility = min_power_closed(stats, sigma_b, sigma_e, r0)
        if closed.capacity < 0.05:
            continue
        if feasibility.achievable:
            scale = (stats.gain_bob / sigma_b
                     + 2.0 ** r0 * stats.gain_eve / sigma_e)
            margin = 2.0 * (2.0 ** r0 - 1.0) / feasibility.power / scale
            if margin < 3e-2:
                continue
        out.append((model, arr, node_b, node_e, h_b, h_e, budget, r0, stats))
    return out


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def run_selftest(n_instances=60, stream=None):
    """Run the oracle-agreement suite; returns True when everything passes."""
    import sys

    stream = stream or sys.stdout
    results = []

    def record(name, ok, detail):
        results.append(ok)
        stream.write(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}\n")

    instances = sample_instances(n_instances)

    worst = 0.0
    for model, arr, nb, ne, h_b, h_e, budget, r0, stats in instances:
        closed = secrecy_capacity_closed(stats, budget).capacity
        oracle = capacity_eigen_oracle(h_b, h_e, budget, method="dense").capacity
        worst = max(worst, _rel(closed, oracle))
    record("capacity closed vs dense oracle", worst <= 1e-9,
           f"max relative error {worst:.2e} over {len(instances)} instances")

    worst = 0.0
    verdicts_ok = True
    for model, arr, nb, ne, h_b, h_e, budget, r0, stats in instances:
        closed = min_power_closed(stats, budget.noise_bob, budget.noise_eve, r0)
        oracle = min_power_eigen_oracle(h_b, h_e, budget.noise_bob,
                                        budget.noise_eve, r0, method="dense")
        if closed.achievable != oracle.achievable:
            verdicts_ok = False
        elif closed.achievable:
            worst = max(worst, _rel(closed.power, oracle.power))
    record("min power closed vs dense oracle", verdicts_ok and worst <= 1e-9,
           f"max relative error {worst:.2e}, verdicts "
           f"{'agree' if verdicts_ok else 'DISAGREE'}")

    worst = 0.0
    checked = 0
    for model, arr, nb, ne, h_b, h_e, budget, r0, stats in instances[:20]:
        if stats.rho >= 1.0 - 1e-9:
            continue
        gap = abs(cos_psi_numeric(h_b, h_e) - (1.0 - stats.rho))
        worst = max(worst, gap)
        checked += 1
    record("beamformer angle identity", worst <= 1e-9,
           f"max |cos_psi - (1 - rho)| = {worst:.2e} over {checked} instances")

    root = upsilon_threshold(0.5)
    resid = abs(correlation_at_threshold_scale(root) - 0.5)
    record("3 dB threshold root", abs(root - 0.79) <= 0.005 and resid <= 1e-6,
           f"root {root:.6f}, residual {resid:.2e}")

    # adopted vs variant closed forms at the reference geometry (info only)
    arr = ArrayGeometry(m_x=51, m_z=51, **_BASE)
    nb = NodeGeometry(10.0, math.pi / 3.0, 2.0 * math.pi / 3.0)
    ne = NodeGeometry(20.0, math.pi / 3.0 + 0.01, 2.0 * math.pi / 3.0 - 0.01)
    prod = rho_upw(arr, nb, ne, form="product")
    pooled = rho_upw(arr, nb, ne, form="pooled")
    stream.write(f"[INFO] rho_upw product={prod:.6e} pooled-variant={pooled:.6e}\n")
    ne_co = NodeGeometry(20.0, math.pi / 3.0, 2.0 * math.pi / 3.0)
    amp = rho_nusw(arr, nb, ne_co)
    pw = rho_nusw(arr, nb, ne_co, kernel_form="power")
    stream.write(f"[INFO] rho_nusw amplitude={amp:.6e} power-variant={pw:.6e}\n")

    return all(results)
