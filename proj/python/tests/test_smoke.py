import math

import pytest

import afcmm


def test_fixed_delay_capacity():
    r = afcmm.fixed_delay_capacity(4e6, 25e-6)
    assert r.n_continuous == 40.0
    assert r.n_floor == 40
    assert r.n_reported == 40


def test_efficiency_factor():
    assert afcmm.t2_relative_efficiency(50e-6, 250e-6) == pytest.approx(0.449329, abs=1e-6)
    assert afcmm.delay_for_efficiency(0.449329, 250e-6) == pytest.approx(50e-6, rel=1e-5)


def test_near_integer_reporting():
    r = afcmm.fixed_delay_capacity_at_efficiency(0.8, 250e-6, 5e6)
    assert r.n_floor == 27
    assert r.near_integer_flag
    assert r.n_reported == 28


def test_spin_wave_capacity():
    r = afcmm.spin_wave_capacity(1.5e6, 25e-6, 230e3, 1.36)
    assert r.n_continuous == pytest.approx(5.6225, abs=1e-3)
    assert afcmm.spin_wave_capacity_explicit(41e-6, 14e-6, 0.5e-6).n_continuous == 54.0


def test_gaussian_modes():
    assert afcmm.optimal_kappa() == pytest.approx(2.380221, abs=1e-5)
    assert afcmm.time_energy_fraction(2.0) == pytest.approx(0.9815, abs=5e-4)
    assert afcmm.spectral_fwhm(1e-6) == pytest.approx(441271.2, rel=1e-6)


def test_spectrum_peaks():
    train = afcmm.synthesize_train([1, 1, 1, 1, 1], 410e-9, 1e-6)
    spec = afcmm.power_spectrum(train)
    peaks = sorted(afcmm.modulation_peaks(spec, 2))
    assert abs(peaks[1] - 1e6) <= spec.resolution_hz
    assert abs(peaks[0] + 1e6) <= spec.resolution_hz
    assert afcmm.band_energy_fraction(spec, 1.25e6) >= 0.99


def test_multiplexing():
    assert afcmm.min_spectral_spacing(36.9e6, 0.0, 18e6) == 91.8e6
    profile = afcmm.InhomogeneousProfile(afcmm.ProfileShape.GAUSSIAN, 10e9, 10.0)
    budget = afcmm.spectral_efficiency_budget(profile, 36.9e6, 0.0, 18e6, 5)
    assert budget.average_efficiency < afcmm.afc_echo_efficiency(10.0, afcmm.optimal_finesse(10.0))
    assert afcmm.spatial_capacity(afcmm.SpatialGrid(127e-6, 1e-6)).n_floor == 62
    assert afcmm.repeater_trial_rate(100e3, 1.5, 1) == pytest.approx(1998.616, abs=1e-2)


def test_materials():
    pr = afcmm.builtin_material("Pr_YSO")
    assert pr.optical_depth == pytest.approx(10.0)
    eu = afcmm.builtin_material("Eu151_YSO")
    v = afcmm.t2_lookup(eu, 3.7, afcmm.CoherenceKind.PHOTON_ECHO)
    assert v.t2_s == pytest.approx(707e-6)
    with pytest.raises(RuntimeError):
        afcmm.t2_lookup(eu, 6.1, afcmm.CoherenceKind.AFC)


def test_sweep():
    out = afcmm.sweep(
        "spin_wave_capacity",
        [("gamma_hz", 0.5e6, 20e6, 40)],
        {"omega_hz": 620e3, "chi": 1.36, "delay_s": 30e-6},
    )
    assert len(out["rows"]) == 40
    assert out["columns"][0] == "gamma_hz"
    best = max(out["rows"], key=lambda r: r[1])
    g_star = afcmm.optimal_bandwidth_sw(620e3, 30e-6, 1.36, math.inf)
    assert abs(best[0] - g_star) <= (20e6 - 0.5e6) / 39.0


def test_validation_errors_become_value_errors():
    with pytest.raises(ValueError):
        afcmm.fixed_delay_capacity(-1.0, 25e-6)


def test_repro_cases_all_pass():
    cases = afcmm.run_repro_cases()
    assert len(cases) >= 30
    failing = [c["case"] for c in cases if not c["pass"]]
    assert failing == []
