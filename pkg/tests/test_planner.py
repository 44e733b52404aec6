"""Sample-size bounds and the normal quantile, checked against mpmath."""

import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from montyhall.planner import (
    PlanMethod,
    PlanRequest,
    band_halfwidth,
    normal_quantile,
    sample_size,
)

mpmath.mp.dps = 40


def reference_quantile(x) -> float:
    """High-precision inverse normal CDF, independent of the implementation."""
    return float(mpmath.sqrt(2) * mpmath.erfinv(2 * mpmath.mpf(x) - 1))


def reference_cdf(z) -> mpmath.mpf:
    return mpmath.ncdf(mpmath.mpf(z))


def test_quantile_median_is_zero():
    assert normal_quantile(0.5) == 0.0


@pytest.mark.parametrize(
    "x, expected",
    [
        (0.975, 1.95996398),
        (0.995, 2.57582930),
    ],
)
def test_quantile_table_values(x, expected):
    assert normal_quantile(x) == pytest.approx(expected, abs=1e-7)


@pytest.mark.parametrize("x", [0.0, 1.0, -0.2, 1.4])
def test_quantile_rejects_out_of_range(x):
    with pytest.raises(ValueError):
        normal_quantile(x)


def test_quantile_dense_grid_roundtrip():
    for i in range(1, 1000):
        x = i / 1000.0
        z = normal_quantile(x)
        assert abs(float(reference_cdf(z)) - x) <= 1e-8


@pytest.mark.parametrize(
    "x", [1e-9, 1e-6, 1e-3, 0.02425, 0.3, 0.7, 1 - 0.02425, 1 - 1e-3, 1 - 1e-6, 1 - 1e-9]
)
def test_quantile_absolute_error(x):
    assert abs(normal_quantile(x) - reference_quantile(x)) <= 1e-8


@given(x=st.floats(min_value=0.001, max_value=0.999))
def test_quantile_roundtrip_property(x):
    assert abs(float(reference_cdf(normal_quantile(x))) - x) <= 1e-8


@pytest.mark.parametrize("x", [5e-324, 1e-310, 1e-200])
def test_quantile_survives_extreme_tails(x):
    z = normal_quantile(x)
    assert math.isfinite(z) and z < -20
    assert normal_quantile(1.0 - 2**-53) > 8


def test_chebyshev_worst_case_count():
    plan = sample_size(PlanRequest(0.5, 0.01, 0.01, PlanMethod.CHEBYSHEV))
    assert plan.l0 == 250000
    assert plan.z_x is None


def test_clt_worst_case_count():
    plan = sample_size(PlanRequest(0.5, 0.01, 0.01, PlanMethod.CLT))
    assert plan.l0 == 16588
    assert plan.z_x == pytest.approx(2.5758293, abs=1e-6)


@pytest.mark.parametrize("p_win", [0.0, 1.0])
@pytest.mark.parametrize("method", list(PlanMethod))
def test_degenerate_variance_clamps_to_one(p_win, method):
    assert sample_size(PlanRequest(p_win, 0.5, 0.5, method)).l0 == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(p_win=0.5, epsilon=0.0, delta=0.01),
        dict(p_win=0.5, epsilon=-1.0, delta=0.01),
        dict(p_win=0.5, epsilon=0.01, delta=0.0),
        dict(p_win=0.5, epsilon=0.01, delta=1.0),
        dict(p_win=1.5, epsilon=0.01, delta=0.01),
    ],
)
def test_invalid_plan_requests_rejected(kwargs):
    with pytest.raises(ValueError):
        PlanRequest(method=PlanMethod.CLT, **kwargs)


@pytest.mark.parametrize("method", list(PlanMethod))
def test_sample_size_decreases_in_epsilon_and_delta(method):
    sizes_eps = [
        sample_size(PlanRequest(0.5, eps, 0.01, method)).l0
        for eps in (0.002, 0.005, 0.01, 0.02, 0.05)
    ]
    assert sizes_eps == sorted(sizes_eps, reverse=True)
    assert len(set(sizes_eps)) == len(sizes_eps)
    sizes_delta = [
        sample_size(PlanRequest(0.5, 0.01, d, method)).l0
        for d in (0.001, 0.01, 0.05, 0.2)
    ]
    assert sizes_delta == sorted(sizes_delta, reverse=True)
    assert len(set(sizes_delta)) == len(sizes_delta)


@pytest.mark.parametrize("method", list(PlanMethod))
def test_sample_size_maximal_at_even_odds(method):
    worst = sample_size(PlanRequest(0.5, 0.01, 0.01, method)).l0
    for p_win in (0.0, 0.1, 0.25, 0.4, 0.6, 0.9, 1.0):
        assert sample_size(PlanRequest(p_win, 0.01, 0.01, method)).l0 <= worst


@pytest.mark.parametrize("delta", [0.001, 0.01, 0.05, 0.1, 0.2, 0.3])
@pytest.mark.parametrize("p_win", [0.05, 0.25, 0.5, 0.75, 0.99])
def test_chebyshev_needs_more_samples_below_critical_delta(delta, p_win):
    cheb = sample_size(PlanRequest(p_win, 0.01, delta, PlanMethod.CHEBYSHEV)).l0
    clt = sample_size(PlanRequest(p_win, 0.01, delta, PlanMethod.CLT)).l0
    assert cheb >= clt


def test_bound_ratio_at_the_experiment_settings():
    cheb = sample_size(PlanRequest(0.5, 0.01, 0.01, PlanMethod.CHEBYSHEV)).l0
    clt = sample_size(PlanRequest(0.5, 0.01, 0.01, PlanMethod.CLT)).l0
    assert cheb / clt == pytest.approx(15.07, abs=0.01)


def test_band_halfwidth_values():
    assert band_halfwidth(0.5, 250000, 0.01, PlanMethod.CHEBYSHEV) == pytest.approx(
        0.01, abs=1e-12
    )
    expected = 2.5758293 * math.sqrt((1 / 3) * (2 / 3) / 20000)
    assert band_halfwidth(1 / 3, 20000, 0.01, PlanMethod.CLT) == pytest.approx(
        expected, abs=1e-6
    )
    assert band_halfwidth(0.0, 12345, 0.3, PlanMethod.CLT) == 0.0
    assert band_halfwidth(1.0, 5, 0.3, PlanMethod.CHEBYSHEV) == 0.0


def test_band_halfwidth_rejects_bad_inputs():
    with pytest.raises(ValueError):
        band_halfwidth(0.5, 0, 0.01, PlanMethod.CLT)
    with pytest.raises(ValueError):
        band_halfwidth(0.5, 100, 0.0, PlanMethod.CLT)
    with pytest.raises(ValueError):
        band_halfwidth(1.5, 100, 0.01, PlanMethod.CLT)


@given(
    p_win=st.floats(min_value=0.01, max_value=0.99),
    epsilon=st.floats(min_value=0.001, max_value=0.2),
    delta=st.floats(min_value=0.001, max_value=0.5),
    method=st.sampled_from(list(PlanMethod)),
)
def test_planned_size_achieves_target_halfwidth(p_win, epsilon, delta, method):
    l0 = sample_size(PlanRequest(p_win, epsilon, delta, method)).l0
    # float slack only; the ceiling guarantees the inequality mathematically
    assert band_halfwidth(p_win, l0, delta, method) <= epsilon * (1 + 1e-12)
