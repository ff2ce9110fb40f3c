import math

import numpy as np
import pytest

from oracles import lin, umi_gain_db
from ris_xhaul.errors import NonPositiveTotalPower
from ris_xhaul.geometry import ChannelGain, NoisePower, noise_power, watts_to_dbm
from ris_xhaul.link_budget import (
    PowerModel,
    ScenarioKind,
    energy_efficiency,
    required_power_direct,
    required_power_ris,
    ris_rate,
    shannon_rate,
    total_power,
)

NOISE = noise_power(10e6, 10.0)
BETA_LOS_100 = ChannelGain(lin(umi_gain_db(100.0, True, 5, 5)))
BETA_NLOS_100 = ChannelGain(lin(umi_gain_db(100.0, False, 5, 5)))


class TestShannonRate:
    def test_zero_power(self):
        assert shannon_rate(0.0, BETA_LOS_100, NOISE) == 0.0

    def test_unit_snr(self):
        beta = ChannelGain(1e-9)
        noise = NoisePower(1e-9)
        assert shannon_rate(1.0, beta, noise) == 1.0

    def test_reference_operating_point(self):
        # 30 dBm through the LoS gain at 100 m over the -94 dBm noise floor
        expected = math.log2(1 + 10 ** ((30 - 71.5 + 94) / 10))
        assert shannon_rate(1.0, BETA_LOS_100, NOISE) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(17.44, abs=5e-3)

    def test_rejects_negative_power(self):
        with pytest.raises(ValueError):
            shannon_rate(-1.0, BETA_LOS_100, NOISE)


class TestRisRate:
    def test_empty_panel_reduces_exactly(self):
        for p in (0.0, 0.01, 1.0):
            assert ris_rate(p, BETA_NLOS_100, ChannelGain(1e-14), 1.0, 0, NOISE) == \
                shannon_rate(p, BETA_NLOS_100, NOISE)

    def test_square_law_when_direct_path_suppressed(self):
        beta_nif = ChannelGain(1e-14)
        tiny = ChannelGain(1e-30)
        for n in (10, 100, 1000):
            got = ris_rate(1.0, tiny, beta_nif, 1.0, n, NOISE)
            expected = math.log2(1 + n**2 * beta_nif.beta / NOISE.sigma2)
            assert got == pytest.approx(expected, rel=1e-6)

    def test_panel_at_neighbor_beats_pre_failure_rate(self):
        # 500 elements right above the neighbor BS (offset 15 m) outperform
        # the donor's line-of-sight rate at equal transmit power
        beta_ni = lin(umi_gain_db(15.0, True, 5, 5))
        beta_if = lin(umi_gain_db(math.hypot(100, 15), True, 5, 5))
        rate = ris_rate(1.0, BETA_NLOS_100, ChannelGain(beta_ni * beta_if), 1.0, 500, NOISE)
        assert rate > shannon_rate(1.0, BETA_LOS_100, NOISE)

    def test_strictly_increasing_in_elements_and_power(self):
        beta_nif = ChannelGain(1e-13)
        rates = [ris_rate(1.0, BETA_NLOS_100, beta_nif, 1.0, n, NOISE) for n in range(0, 200, 7)]
        assert all(b > a for a, b in zip(rates, rates[1:]))
        powers = [ris_rate(p, BETA_NLOS_100, beta_nif, 1.0, 50, NOISE)
                  for p in np.linspace(0.01, 2.0, 40)]
        assert all(b > a for a, b in zip(powers, powers[1:]))

    def test_never_below_bare_healing_link(self):
        beta_nif = ChannelGain(1e-13)
        bare = shannon_rate(1.0, BETA_NLOS_100, NOISE)
        assert ris_rate(1.0, BETA_NLOS_100, beta_nif, 1.0, 0, NOISE) == bare
        for n in (1, 5, 50, 500):
            assert ris_rate(1.0, BETA_NLOS_100, beta_nif, 1.0, n, NOISE) > bare


class TestRequiredPower:
    def test_zero_rate(self):
        assert required_power_direct(0.0, BETA_LOS_100, NOISE) == 0.0

    def test_unit_rate(self):
        assert required_power_direct(1.0, BETA_LOS_100, NOISE) == pytest.approx(
            NOISE.sigma2 / BETA_LOS_100.beta, rel=1e-12
        )

    def test_reference_target(self):
        p = required_power_direct(4.0, BETA_LOS_100, NOISE)
        expected = 15 * 10 ** (-12.4) / 10 ** (-7.15)
        assert p == pytest.approx(expected, rel=1e-12)
        assert watts_to_dbm(p) == pytest.approx(-10.739, abs=1e-3)

    def test_inverse_of_rate(self):
        rng = np.random.default_rng(41)
        for _ in range(200):
            r_bar = float(rng.uniform(0.05, 25.0))
            beta = ChannelGain(float(10 ** rng.uniform(-13, -5)))
            noise = NoisePower(float(10 ** rng.uniform(-14, -10)))
            p = required_power_direct(r_bar, beta, noise)
            assert shannon_rate(p, beta, noise) == pytest.approx(r_bar, rel=1e-9)

    def test_ris_inverse_of_rate(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            r_bar = float(rng.uniform(0.05, 25.0))
            beta_nf = ChannelGain(float(10 ** rng.uniform(-13, -8)))
            beta_nif = ChannelGain(float(10 ** rng.uniform(-18, -12)))
            eps = float(rng.uniform(0.1, 1.0))
            n = int(rng.integers(0, 2000))
            noise = NoisePower(float(10 ** rng.uniform(-14, -10)))
            p = required_power_ris(r_bar, beta_nf, beta_nif, eps, n, noise)
            assert ris_rate(p, beta_nf, beta_nif, eps, n, noise) == pytest.approx(
                r_bar, rel=1e-9
            )

    def test_ris_empty_panel_equals_direct(self):
        assert required_power_ris(4.0, BETA_NLOS_100, ChannelGain(1e-14), 1.0, 0, NOISE) == \
            required_power_direct(4.0, BETA_NLOS_100, NOISE)

    def test_doubling_elements_quarters_power(self):
        tiny = ChannelGain(1e-30)
        beta_nif = ChannelGain(1e-14)
        p1 = required_power_ris(4.0, tiny, beta_nif, 1.0, 500, NOISE)
        p2 = required_power_ris(4.0, tiny, beta_nif, 1.0, 1000, NOISE)
        assert p1 / p2 == pytest.approx(4.0, rel=1e-6)


class TestTotalPower:
    def test_idle_panel_scenario(self):
        assert total_power(ScenarioKind.NBS_RIS_FBS, 0.0, PowerModel(), 0) == \
            pytest.approx(0.2, rel=1e-12)

    def test_panel_scenario_with_elements(self):
        # 100 mW amplified at 0.5 efficiency + 2x100 mW hardware + 100x5 mW
        got = total_power(ScenarioKind.NBS_RIS_FBS, 0.1, PowerModel(), 100)
        assert got == pytest.approx(0.9, rel=1e-12)

    def test_idle_donor_scenario(self):
        assert total_power(ScenarioKind.DBS_FBS_LOS, 0.0, PowerModel()) == \
            pytest.approx(0.2, rel=1e-12)

    def test_affine_strictly_increasing_in_elements(self):
        model = PowerModel()
        values = [total_power(ScenarioKind.NBS_RIS_FBS, 0.05, model, n) for n in range(0, 50)]
        diffs = [b - a for a, b in zip(values, values[1:])]
        assert all(d > 0 for d in diffs)
        assert all(d == pytest.approx(model.p_e, rel=1e-9) for d in diffs)

    def test_model_validation(self):
        with pytest.raises(ValueError):
            PowerModel(nu=0.0)
        with pytest.raises(ValueError):
            PowerModel(nu=1.5)
        with pytest.raises(ValueError):
            PowerModel(p_e=-0.001)


class TestTotalPowerConvexity:
    def test_second_differences_non_negative(self):
        rng = np.random.default_rng(47)
        model = PowerModel()
        for _ in range(5):
            r_bar = float(rng.uniform(0.5, 25.0))
            beta_nf = ChannelGain(float(10 ** rng.uniform(-12, -8)))
            beta_nif = ChannelGain(float(10 ** rng.uniform(-16, -12)))
            curve = [
                total_power(
                    ScenarioKind.NBS_RIS_FBS,
                    required_power_ris(r_bar, beta_nf, beta_nif, 1.0, n, NOISE),
                    model,
                    n,
                )
                for n in range(0, 2000, 10)
            ]
            second = [c - 2 * b + a for a, b, c in zip(curve, curve[1:], curve[2:])]
            assert min(second) >= -1e-12


class TestEnergyEfficiency:
    def test_zero_rate(self):
        assert energy_efficiency(10e6, 0.0, 1.0) == 0.0

    def test_reference_ratio(self):
        assert energy_efficiency(10e6, 4.0, 1.0) == pytest.approx(4e7, rel=1e-12)

    def test_rejects_non_positive_total(self):
        with pytest.raises(NonPositiveTotalPower):
            energy_efficiency(10e6, 4.0, 0.0)

    def test_panel_scenario_beats_bare_link_at_high_rates(self):
        # with the panel sized to the optimum, total power can only improve
        # on the bare healing link, so the bit-per-joule figure is higher
        model = PowerModel()
        beta_nif = ChannelGain(1e-13)
        r_bar = 10.0
        p_bare = required_power_direct(r_bar, BETA_NLOS_100, NOISE)
        ee_bare = energy_efficiency(
            10e6, r_bar, total_power(ScenarioKind.NBS_FBS_NLOS, p_bare, model)
        )
        p_panel = required_power_ris(r_bar, BETA_NLOS_100, beta_nif, 1.0, 500, NOISE)
        ee_panel = energy_efficiency(
            10e6, r_bar, total_power(ScenarioKind.NBS_RIS_FBS, p_panel, model, 500)
        )
        assert ee_panel > ee_bare
