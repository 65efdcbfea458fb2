"""Localization eigenvalues for radial symbols: series, quadrature, matrices."""

import math

import pytest

from bargmann_lab.bargmann import grid_values
from bargmann_lab.gaussalg import DomainError
from bargmann_lab.toeplitz import (
    RadialSymbol,
    default_toeplitz_grid,
    disk_eigenvalue,
    radial_eigenvalue,
    radius_from_groundstate,
    spectrum_rows,
    symbol_convolve,
    toeplitz_matrix_quad,
)


def test_constant_symbol_has_unit_spectrum():
    sym = RadialSymbol.smooth(lambda u: 1.0)
    for n in range(8):
        assert radial_eigenvalue(sym, n) == pytest.approx(1.0, abs=1e-10)


def test_disk_ground_state_value():
    assert disk_eigenvalue(1.0, 0) == pytest.approx(1 - math.exp(-1), rel=1e-14)


def test_exponential_profile_halves():
    # c(u) = e^{-u/2} gives the geometric sequence 2^{-(n+1)}
    sym = RadialSymbol.gaussian(0.5)
    for n in range(9):
        assert radial_eigenvalue(sym, n) == pytest.approx(2.0 ** -(n + 1), rel=1e-10)


def test_deep_tail_underflows_to_zero():
    assert disk_eigenvalue(1.0, 200) == 0.0


@pytest.mark.parametrize("R", [0.5, 1.0, 3.0])
def test_disk_formula_equals_radial_quadrature(R):
    sym = RadialSymbol.indicator(R)
    for n in range(11):
        assert abs(disk_eigenvalue(R, n) - radial_eigenvalue(sym, n)) <= 1e-10


def test_spectrum_rows_schema_and_agreement():
    rows = spectrum_rows(1.0, 5)
    assert [r["n"] for r in rows] == list(range(5))
    for r in rows:
        assert r["abs_diff"] <= 1e-10
        assert r["abs_diff"] == pytest.approx(
            abs(r["lambda_formula"] - r["lambda_quadrature"]))


def test_disk_eigenvalues_decrease_in_n_increase_in_R():
    for R in (0.5, 1.0, 3.0):
        vals = [disk_eigenvalue(R, n) for n in range(8)]
        assert all(b < a for a, b in zip(vals, vals[1:]))
    for n in range(4):
        across = [disk_eigenvalue(R, n) for R in (0.5, 1.0, 2.0, 4.0)]
        assert all(b > a for a, b in zip(across, across[1:]))


def test_radius_recovery_roundtrip():
    for R in (0.5, 1.0, 2.5):
        assert abs(radius_from_groundstate(disk_eigenvalue(R, 0)) - R) <= 1e-12
    with pytest.raises(DomainError):
        radius_from_groundstate(1.0)


def test_matrix_entries_indicator():
    sym = RadialSymbol.indicator(1.0)
    assert abs(toeplitz_matrix_quad(sym, 0, 1)) <= 1e-6
    assert abs(toeplitz_matrix_quad(sym, 0, 0) - (1 - math.exp(-1))) <= 1e-5


def test_matrix_constant_symbol_is_identity():
    sym = RadialSymbol.smooth(lambda u: 1.0, support=math.inf)
    grid = default_toeplitz_grid(sym, 3)
    for m in range(4):
        for n in range(m, 4):
            got = toeplitz_matrix_quad(sym, m, n, grid=grid)
            want = 1.0 if m == n else 0.0
            assert abs(got - want) <= 1e-6


@pytest.mark.parametrize("sym", [RadialSymbol.indicator(1.0), RadialSymbol.gaussian(0.5)],
                         ids=["indicator", "exponential"])
def test_matrix_diagonal_matches_radial_route(sym):
    grid = default_toeplitz_grid(sym, 6)
    for n in range(7):
        diag = toeplitz_matrix_quad(sym, n, n, grid=grid)
        assert abs(diag - radial_eigenvalue(sym, n)) <= 1e-5


def test_smoothing_preserves_constants():
    sym = RadialSymbol.smooth(lambda u: 1.0)
    grid = default_toeplitz_grid(sym, 2)
    ones = [1.0] * len(grid.points())
    for x, xi in ((0.0, 0.0), (0.5, -0.3), (1.0, 1.0)):
        assert symbol_convolve(ones, x, xi, grid) == pytest.approx(1.0, abs=1e-8)


def test_indicator_requires_positive_radius():
    with pytest.raises(DomainError):
        RadialSymbol.indicator(0.0)
