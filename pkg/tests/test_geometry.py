import math

import numpy as np
import pytest

from ris_xhaul.errors import DistanceBelowModelFloor, NonPositiveLinearValue
from ris_xhaul.geometry import (
    AntennaGains,
    ChannelGain,
    NodePosition,
    PathLossParams,
    UMI_LOS,
    UMI_NLOS,
    carrier_offset_db,
    channel_gain,
    dbm_to_watts,
    distance,
    los_params,
    nlos_params,
    noise_power,
    path_loss_db,
    to_db,
    to_linear,
    watts_to_dbm,
)

NO_GAIN = AntennaGains(0.0, 0.0)
TABLE_GAIN = AntennaGains(5.0, 5.0)


class TestDistance:
    def test_reference_baseline(self):
        assert distance(NodePosition(0, 0), NodePosition(100, 0)) == 100.0

    def test_identical_points(self):
        assert distance(NodePosition(0, 0), NodePosition(0, 0)) == 0.0

    def test_pythagorean_triple(self):
        assert distance(NodePosition(0, 0), NodePosition(3, 4)) == 5.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            NodePosition(math.nan, 0.0)


class TestPathLoss:
    def test_los_intercept_at_reference_distance(self):
        with pytest.warns(UserWarning):
            assert path_loss_db(1.0, UMI_LOS, NO_GAIN, allow_short_distance=True) == -37.5

    def test_nlos_intercept_at_reference_distance(self):
        with pytest.warns(UserWarning):
            assert path_loss_db(1.0, UMI_NLOS, NO_GAIN, allow_short_distance=True) == -35.1

    def test_los_at_100m_with_table_gains(self):
        # 5 + 5 - 37.5 - 22*log10(100) = -71.5
        assert path_loss_db(100.0, UMI_LOS, TABLE_GAIN) == pytest.approx(-71.5, abs=1e-12)

    def test_below_floor_raises(self):
        with pytest.raises(DistanceBelowModelFloor):
            path_loss_db(5.0, UMI_LOS, NO_GAIN)

    def test_below_floor_warns_when_allowed(self):
        with pytest.warns(UserWarning, match="model floor"):
            value = path_loss_db(5.0, UMI_LOS, NO_GAIN, allow_short_distance=True)
        assert value == pytest.approx(-37.5 - 22.0 * math.log10(5.0))

    def test_below_reference_distance_always_raises(self):
        with pytest.raises(DistanceBelowModelFloor):
            path_loss_db(0.5, UMI_LOS, NO_GAIN, allow_short_distance=True)

    def test_strictly_decreasing_in_distance(self):
        for params in (UMI_LOS, UMI_NLOS):
            values = [path_loss_db(d, params, NO_GAIN) for d in np.linspace(10, 5000, 400)]
            assert all(b < a for a, b in zip(values, values[1:]))

    def test_nlos_below_los_on_model_domain(self):
        for d in np.linspace(10, 2000, 200):
            assert path_loss_db(d, UMI_NLOS, NO_GAIN) < path_loss_db(d, UMI_LOS, NO_GAIN)

    def test_gain_reciprocity(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            g1, g2 = rng.uniform(-3, 12, size=2)
            d = rng.uniform(10, 500)
            assert path_loss_db(d, UMI_LOS, AntennaGains(g1, g2)) == path_loss_db(
                d, UMI_LOS, AntennaGains(g2, g1)
            )

    def test_params_validation(self):
        with pytest.raises(ValueError):
            PathLossParams(intercept_db=37.5, slope_db_per_decade=0.0)
        with pytest.raises(ValueError):
            PathLossParams(intercept_db=37.5, slope_db_per_decade=22.0, ref_distance=0.0)


class TestConversions:
    def test_zero_db_is_unity(self):
        assert to_linear(0.0) == 1.0

    def test_ten_db_is_ten(self):
        assert to_linear(10.0) == 10.0

    def test_round_trip(self):
        assert to_db(to_linear(-71.5)) == pytest.approx(-71.5, rel=1e-12)

    def test_round_trip_randomized(self):
        rng = np.random.default_rng(11)
        for x in rng.uniform(-200, 100, size=200):
            assert to_db(to_linear(x)) == pytest.approx(x, rel=1e-12, abs=1e-12)

    def test_to_db_rejects_non_positive(self):
        with pytest.raises(NonPositiveLinearValue):
            to_db(0.0)
        with pytest.raises(NonPositiveLinearValue):
            to_db(-1.0)

    def test_dbm_round_trip(self):
        assert watts_to_dbm(dbm_to_watts(30.0)) == pytest.approx(30.0, rel=1e-12)
        assert dbm_to_watts(30.0) == pytest.approx(1.0, rel=1e-12)


class TestNoisePower:
    def test_table_values(self):
        # -174 + 10*log10(10 MHz) + 10 = -94 dBm
        assert noise_power(10e6, 10.0).dbm == pytest.approx(-94.0, abs=1e-12)

    def test_unit_bandwidth_floor(self):
        assert noise_power(1.0, 0.0).dbm == pytest.approx(-174.0, abs=1e-12)

    def test_without_noise_figure(self):
        assert noise_power(10e6, 0.0).dbm == pytest.approx(-104.0, abs=1e-12)

    def test_rejects_zero_bandwidth(self):
        with pytest.raises(ValueError):
            noise_power(0.0, 10.0)


class TestCarrierOffset:
    def test_zero_at_reference(self):
        assert carrier_offset_db(3e9) == 0.0

    def test_28ghz_value(self):
        assert carrier_offset_db(28e9) == pytest.approx(20.0 * math.log10(28 / 3), rel=1e-12)

    def test_preset_builders_fold_offset(self):
        assert los_params(28e9).freq_offset_db == carrier_offset_db(28e9)
        assert nlos_params(28e9).freq_offset_db == carrier_offset_db(28e9)
        assert los_params(3e9) == UMI_LOS

    def test_channel_gain_linear(self):
        gain = channel_gain(100.0, los_params(3e9), TABLE_GAIN)
        assert gain.beta == pytest.approx(10 ** (-7.15), rel=1e-12)
        assert gain.db == pytest.approx(-71.5, abs=1e-12)


class TestValueTypes:
    def test_channel_gain_positive(self):
        with pytest.raises(NonPositiveLinearValue):
            ChannelGain(0.0)
        with pytest.raises(NonPositiveLinearValue):
            ChannelGain(-1e-9)

    def test_amplitude(self):
        assert ChannelGain(4.0).amplitude == 2.0

    def test_noise_positive(self):
        with pytest.raises(NonPositiveLinearValue):
            noise_power(10e6, 10.0).__class__(0.0)
