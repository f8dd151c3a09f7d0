import numpy as np
import pytest

from qft_infocalc.susyqm import (
    SIGMA1,
    Grid,
    ZeroModeError,
    analytic_linear_levels,
    build_model,
    cubic,
    direct_hamiltonians,
    get_potential,
    linear,
    lowest_levels,
    pair_direct_spectra,
    pair_spectra,
    sqrt_not,
    superalgebra_residuals,
    supercharge_map,
    tanh_potential,
    zero_potential,
)

POTENTIALS = {"linear": linear(), "tanh": tanh_potential(), "cubic": cubic(), "zero": zero_potential()}


@pytest.fixture(scope="module")
def harmonic():
    return build_model(linear(), -8, 8, 400)


@pytest.fixture(scope="module")
def tanh_model():
    return build_model(tanh_potential(), -8, 8, 400)


def test_potentials_and_derivatives():
    x = np.linspace(-2, 2, 9)
    assert np.allclose(linear(2.0)(x), 2 * x)
    assert np.allclose(tanh_potential().deriv(x), 1 / np.cosh(x) ** 2)
    assert np.allclose(cubic(1.5).deriv(x), 3 * x**2 - 1.5)
    # Pöschl-Teller identity behind the tanh examples
    v = tanh_potential()
    assert np.allclose(v(x) ** 2 + v.deriv(x), 1.0, atol=1e-15)


def test_unknown_potential():
    with pytest.raises(ValueError, match="potential"):
        get_potential("quartic")


def test_grid_validation():
    with pytest.raises(ValueError):
        Grid(-1, 1, 4)
    with pytest.raises(ValueError):
        Grid(1, -1, 100)


# --- superalgebra ------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(POTENTIALS))
@pytest.mark.parametrize("n", [32, 120])
def test_superalgebra_machine_precision(name, n):
    res = superalgebra_residuals(build_model(POTENTIALS[name], n=n))
    assert max(res.values()) <= 1e-12, res


def test_ladder_operators_are_transposes(harmonic):
    assert np.array_equal(harmonic.Aminus, harmonic.Aplus.T)


def test_grading_operator(harmonic):
    s = harmonic.S
    assert np.array_equal(s @ s, np.eye(len(s)))


def test_full_hamiltonian_nonnegative(harmonic):
    assert np.linalg.eigvalsh(harmonic.H).min() >= -1e-8


# --- spectra ------------------------------------------------------------------------


def test_harmonic_sector1_levels(harmonic):
    e1 = lowest_levels(harmonic.H1, 2)
    assert abs(e1[0]) <= 5e-3
    assert abs(e1[1] - 2.0) <= 5e-3


def test_harmonic_sector0_starts_at_two(harmonic):
    e0 = lowest_levels(harmonic.H0, 1)[0]
    e1 = lowest_levels(harmonic.H1, 2)[1]
    assert abs(e0 - 2.0) <= 5e-3
    assert abs(e0 - e1) <= 5e-3


def test_harmonic_levels_match_analytic(harmonic):
    # levels up to E = 8; the O(dx^2 E^2) error passes 5e-3 at E = 10 on this grid
    exact0, exact1 = analytic_linear_levels(5)
    assert np.max(np.abs(lowest_levels(harmonic.H0, 4) - exact0[:4])) <= 5e-3
    assert np.max(np.abs(lowest_levels(harmonic.H1, 5) - exact1)) <= 5e-3


def test_tanh_spectra(tanh_model):
    assert lowest_levels(tanh_model.H0, 1)[0] >= 1 - 5e-3
    e1 = lowest_levels(tanh_model.H1, 2)
    assert abs(e1[0]) <= 5e-3
    assert e1[1] >= 1 - 5e-3  # single bound state below the continuum


def test_harmonic_pairing(harmonic):
    p = pair_spectra(harmonic, 10)
    assert len(p.pairs) == 10
    assert p.max_gap <= 1e-2
    assert len(p.unpaired[0]) == 0 and len(p.unpaired[1]) == 1


def test_tanh_pairing(tanh_model):
    p = pair_spectra(tanh_model, 1)
    assert len(p.unpaired[1]) == 1 and len(p.unpaired[0]) == 0
    assert p.max_gap <= 1e-2


def test_free_particle_pairs():
    p = pair_spectra(build_model(zero_potential(), n=200), 50)
    scale = p.levels0.max()
    assert p.max_gap <= 1e-12 * scale


def test_direct_form_is_exact_for_free_particle():
    h0, h1 = direct_hamiltonians(zero_potential(), Grid(-8, 8, 100))
    assert np.array_equal(h0, h1)


def test_direct_pairing_gap_shrinks_quadratically():
    g200 = pair_direct_spectra(linear(), Grid(-8, 8, 200), 10).max_gap
    g400 = pair_direct_spectra(linear(), Grid(-8, 8, 400), 10).max_gap
    assert g400 <= 1e-2
    assert 4 * 0.7 <= g200 / g400 <= 4 * 1.3


def test_too_many_levels_requested():
    with pytest.raises(ValueError):
        pair_spectra(build_model(linear(), n=20), 50)


# --- supercharge map ------------------------------------------------------------------


def test_first_excited_maps_to_ground(harmonic):
    img = supercharge_map(harmonic, 1, 1)
    e0, v0 = np.linalg.eigh(harmonic.H0)
    assert img.residual <= 1e-8
    assert abs(abs(np.dot(img.image, v0[:, 0])) - 1) <= 1e-8
    assert img.energy == pytest.approx(e0[0], abs=1e-8)


def test_round_trip_scales_by_energy(harmonic):
    img = supercharge_map(harmonic, 1, 3)
    back = harmonic.Aminus @ (harmonic.Aplus @ img.source)
    assert np.linalg.norm(back - img.energy * img.source) <= 1e-8


def test_sector0_maps_to_sector1(harmonic):
    img = supercharge_map(harmonic, 0, 0)
    assert img.residual <= 1e-8
    assert img.image.shape == (harmonic.n1,)


def test_zero_mode_has_no_partner(harmonic):
    with pytest.raises(ZeroModeError):
        supercharge_map(harmonic, 1, 0)


def test_bad_sector(harmonic):
    with pytest.raises(ValueError):
        supercharge_map(harmonic, 2, 0)


# --- square root of NOT ------------------------------------------------------------------


def test_sqrt_not():
    sq = sqrt_not()
    u = sq.U
    assert np.array_equal(u.conj().T @ u, np.eye(2))
    assert np.array_equal(u @ u, SIGMA1)
    assert np.array_equal(u @ u @ np.array([1, 0]), [0, 1])
    assert np.array_equal(u @ u @ np.array([0, 1]), [1, 0])
    assert sq.passed
