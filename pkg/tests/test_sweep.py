import math

import numpy as np
import pytest

from nfpls import (ConfigError, LinkBudget, parse_config, run_experiment,
                   secrecy_capacity_closed, validate_config)
from nfpls.cli import main as cli_main
from nfpls.stats import LinkStats
from nfpls.channel import ChannelModel


def _read_csv(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


class TestConfigParsing:
    def test_empty_file_yields_baseline(self):
        config = parse_config("", experiment="capacity_vs_snr")
        assert config.m_x == config.m_z == 51
        assert config.wavelength == 0.125
        assert config.spacing_d == 0.0625
        assert config.element_side == pytest.approx(0.125 / math.sqrt(4 * math.pi))
        assert config.r_b == 10.0 and config.r_e == 20.0
        assert config.theta_b == pytest.approx(math.pi / 3)
        assert config.gamma_bar == pytest.approx(1e4)
        assert config.sigma2 == pytest.approx(0.1)
        assert config.r0_bits == 1.0
        assert config.t == 100
        assert config.models == ("upw", "usw", "nusw")

    def test_snr_db_conversion_in_echo(self):
        config = parse_config("snr_db = 40", experiment="capacity_vs_snr")
        assert config.effective_items()["gamma_bar"] == pytest.approx(1e4)

    def test_even_element_count_rejected(self):
        with pytest.raises(ConfigError, match="line 1"):
            parse_config("m_x = 50", experiment="capacity_vs_snr")

    def test_unknown_key_line_anchored(self):
        with pytest.raises(ConfigError, match="line 3.*bogus"):
            parse_config("# comment\nm_x = 51\nbogus = 1",
                         experiment="capacity_vs_snr")

    def test_non_numeric_value(self):
        with pytest.raises(ConfigError, match="line 1"):
            parse_config("r_b = fast", experiment="capacity_vs_snr")

    def test_duplicate_key(self):
        with pytest.raises(ConfigError, match="line 2.*duplicate"):
            parse_config("r_b = 10\nr_b = 12", experiment="capacity_vs_snr")

    def test_grid_var_must_match_experiment(self):
        with pytest.raises(ConfigError, match="grid_var"):
            parse_config("grid_var = r_e", experiment="capacity_vs_snr")

    def test_grid_points_floor(self):
        with pytest.raises(ConfigError, match="grid_points"):
            parse_config("grid_points = 1", experiment="capacity_vs_snr")

    def test_depth_experiments_default_to_boresight(self):
        config = parse_config("", experiment="depth_vs_M")
        assert config.theta_b == pytest.approx(math.pi / 2)
        assert config.phi_b == pytest.approx(math.pi / 2)

    def test_validate_config_reads_file(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("m_x = 7\nm_z = 7\n", encoding="utf-8")
        config = validate_config(path, experiment="capacity_vs_snr")
        assert config.m_x == 7


_SMALL = """
m_x = 7
m_z = 7
grid_points = 6
out_dir = {out}
"""


class TestRunExperiment:
    def test_capacity_vs_snr_small(self, tmp_path):
        config = parse_config(_SMALL.format(out=tmp_path),
                              experiment="capacity_vs_snr")
        paths = run_experiment(config)
        assert len(paths) == 3
        header, rows = _read_csv(tmp_path / "capacity_vs_snr_upw.csv")
        assert header == ["gamma_db", "capacity_bits", "capacity_oracle_bits",
                          "capacity_asymptote_bits"]
        assert len(rows) == 6
        # oracle is tractable at 49 elements and must track the closed form
        for row in rows:
            closed, oracle = float(row[1]), float(row[2])
            assert abs(closed - oracle) <= 1e-9 * max(closed, 1.0)
        assert (tmp_path / "capacity_vs_snr_config.txt").exists()

    def test_far_field_plateau_at_default_geometry(self, tmp_path):
        config = parse_config(f"out_dir = {tmp_path}\ngrid_start = 60\n"
                              "grid_stop = 80\ngrid_points = 3\nmodels = upw",
                              experiment="capacity_vs_snr")
        run_experiment(config)
        header, rows = _read_csv(tmp_path / "capacity_vs_snr_upw.csv")
        assert rows[0][2] == "skipped"  # 2601 elements: oracle gated off
        for row in rows:
            assert float(row[1]) == pytest.approx(2.0, abs=0.005)
        assert float(rows[-1][1]) == pytest.approx(2.0, abs=0.001)
        assert float(rows[-1][3]) == pytest.approx(2.0, abs=1e-12)

    def test_round_trip_rendering(self, tmp_path):
        config = parse_config(_SMALL.format(out=tmp_path),
                              experiment="capacity_vs_snr")
        run_experiment(config)
        from nfpls import closed_link_stats

        arr = config.array()
        stats = closed_link_stats("nusw", arr, config.node_b(), config.node_e(),
                                  config.quadrature())
        _, rows = _read_csv(tmp_path / "capacity_vs_snr_nusw.csv")
        for row in rows:
            gamma_bar = 10.0 ** (float(row[0]) / 10.0)
            budget = config.budget(gamma_bar)
            recomputed = secrecy_capacity_closed(stats, budget).capacity
            assert abs(float(row[1]) - recomputed) <= 1e-11 * max(recomputed, 1e-9)

    def test_power_vs_r0_unachievable_token(self, tmp_path):
        config = parse_config(f"out_dir = {tmp_path}\ngrid_start = 1\n"
                              "grid_stop = 4\ngrid_points = 7\nmodels = upw",
                              experiment="power_vs_R0")
        run_experiment(config)
        _, rows = _read_csv(tmp_path / "power_vs_R0_upw.csv")
        for row in rows:
            r0 = float(row[0])
            if r0 >= 2.0:  # at or beyond the range-ratio budget 2 log2(2)
                assert row[1] == "inf"
            else:
                assert row[1] != "inf"

    def test_power_vs_m_floor_column(self, tmp_path):
        config = parse_config(f"out_dir = {tmp_path}\ngrid_start = 5\n"
                              "grid_stop = 31\ngrid_points = 4\nmodels = nusw",
                              experiment="power_vs_M")
        run_experiment(config)
        _, rows = _read_csv(tmp_path / "power_vs_M_nusw.csv")
        floor = 2.0 * 0.0625 ** 2 * 0.1 / (0.125 ** 2 / (4 * math.pi))
        for row in rows:
            assert float(row[3]) == pytest.approx(floor, rel=1e-12)
            assert float(row[1]) >= floor

    def test_perturbation_grid_shape_and_normalization(self, tmp_path):
        config = parse_config(f"out_dir = {tmp_path}\ngrid_points = 5\n"
                              "m_x = 9\nm_z = 9\nmodels = nusw,upw",
                              experiment="capacity_perturbation")
        run_experiment(config)
        header, rows = _read_csv(tmp_path / "capacity_perturbation_nusw.csv")
        assert header == ["dtheta_rad", "dphi_rad", "capacity_bits",
                          "capacity_normalized", "rho"]
        assert len(rows) == 25
        normalized = [float(r[3]) for r in rows]
        assert max(normalized) == pytest.approx(1.0, abs=1e-12)
        center = [r for r in rows
                  if float(r[0]) == 0.0 and float(r[1]) == 0.0]
        assert len(center) == 1
        # the correlation peaks at zero angular offset (self-correlation)
        assert float(center[0][4]) == pytest.approx(
            max(float(r[4]) for r in rows), rel=1e-9)

    def test_depth_vs_m_columns(self, tmp_path):
        config = parse_config(f"out_dir = {tmp_path}\ngrid_start = 11\n"
                              "grid_stop = 19\ngrid_points = 3\nmodels = usw",
                              experiment="depth_vs_M")
        run_experiment(config)
        header, rows = _read_csv(tmp_path / "depth_vs_M_usw.csv")
        assert header == ["m_side", "depth_m", "r_s_m", "m_s",
                          "m_s_linear_upsilon", "depth_scan_m"]
        for row in rows:
            # arrays this small leave the security radius inside r_b: both
            # the closed form and the scan report a right-infinite depth
            assert row[1] == "inf"
            assert row[5] == "inf"

    def test_cospsi_vs_re(self, tmp_path):
        config = parse_config(f"out_dir = {tmp_path}\ngrid_points = 9\n"
                              "m_x = 11\nm_z = 11\nmodels = usw",
                              experiment="cospsi_vs_re")
        run_experiment(config)
        _, rows = _read_csv(tmp_path / "cospsi_vs_re_usw.csv")
        for row in rows:
            closed, oracle = float(row[1]), float(row[2])
            assert 0.0 <= closed <= 1.0
            assert abs(closed - oracle) <= 0.05 * max(oracle, 0.02)

    def test_determinism_across_thread_counts(self, tmp_path):
        text = "m_x = 7\nm_z = 7\ngrid_points = 5\nmodels = upw,nusw"
        out = []
        for threads, sub in ((1, "a"), (8, "b")):
            config = parse_config(
                f"{text}\nthreads = {threads}\nout_dir = {tmp_path / sub}",
                experiment="capacity_vs_M")
            run_experiment(config)
            out.append({p.name: p.read_bytes()
                        for p in sorted((tmp_path / sub).glob("*.csv"))})
        assert out[0] == out[1]


class TestCli:
    def test_validate_roundtrip(self, tmp_path, capsys):
        path = tmp_path / "cfg.txt"
        path.write_text("snr_db = 40\n", encoding="utf-8")
        code = cli_main(["validate", "--config", str(path),
                         "--experiment", "capacity_vs_snr"])
        assert code == 0
        assert "gamma_bar = 10000" in capsys.readouterr().out

    def test_invalid_config_exits_2(self, tmp_path, capsys):
        path = tmp_path / "cfg.txt"
        path.write_text("m_x = 50\n", encoding="utf-8")
        code = cli_main(["capacity_vs_snr", "--config", str(path)])
        assert code == 2
        assert "line 1" in capsys.readouterr().err

    def test_missing_config_file_exits_2(self, tmp_path):
        assert cli_main(["capacity_vs_snr", "--config",
                         str(tmp_path / "nope.txt")]) == 2

    def test_experiment_run_via_cli(self, tmp_path, capsys):
        path = tmp_path / "cfg.txt"
        path.write_text("m_x = 5\nm_z = 5\ngrid_points = 4\n", encoding="utf-8")
        code = cli_main(["capacity_vs_snr", "--config", str(path),
                         "--out", str(tmp_path / "res"), "--models", "upw",
                         "--threads", "2"])
        assert code == 0
        printed = capsys.readouterr().out.strip().splitlines()
        assert printed == [str(tmp_path / "res" / "capacity_vs_snr_upw.csv")]
        assert (tmp_path / "res" / "capacity_vs_snr_upw.csv").exists()

    def test_bad_model_flag_exits_2(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("", encoding="utf-8")
        assert cli_main(["capacity_vs_snr", "--config", str(path),
                         "--models", "fft"]) == 2
