"""Integral transform to the weighted holomorphic space and back.

The closed-form transform is validated against its own quadrature route
(independent code path over adapted Gauss-Hermite grids), the adjoint
inverts it pointwise, and the reproducing projector fixes transformed
functions while moving anti-holomorphic impostors.
"""

import math

import numpy as np
import pytest

from bargmann_lab.bargmann import (
    adjoint_quad,
    grid_values,
    hphi_grid,
    inner_product_HPhi,
    projector_apply,
    transform,
    transform_quad,
)
from bargmann_lab.ellipse import derived_constants, psi0
from bargmann_lab.gaussalg import ComplexPoly, PolyGauss, inner_product_line
from bargmann_lab.hermite import HermiteSystem
from bargmann_lab.phasecore import PhaseParams, canonical_A

CLASSIC = PhaseParams(0.5j, -1j, 1j, 1.0)
GENERAL = PhaseParams(canonical_A(3.0, 1 + 2j), 3.0, 1 + 2j, 0.5)

REL_CLOSED_VS_QUAD = 1e-8
TOL_PLANE = 1e-6


def _random_polygauss(rng):
    deg = int(rng.integers(0, 4))
    coeffs = tuple(complex(*rng.normal(size=2)) for _ in range(deg + 1))
    g2 = complex(-0.4 - rng.uniform(0, 1.2), 0.5 * rng.normal())
    g1 = 0.5 * complex(*rng.normal(size=2))
    return PolyGauss(ComplexPoly(coeffs), g2, g1)


def test_transform_ground_state_is_constant():
    # the matched Gaussian maps to the degree-zero basis element
    for p in (CLASSIC, GENERAL):
        hs = HermiteSystem(p)
        U = transform(p, hs.hermite_phi(0))
        V = hs.monomial_basis(0)
        assert U.poly.degree == 0
        assert U.c2 == 0 and U.c1 == 0
        assert abs(U.poly.coeffs[0] - V.poly.coeffs[0]) <= 1e-14


def test_transform_of_zero_is_zero():
    z = PolyGauss(ComplexPoly((0j,)), -0.5 + 0j, 0j)
    assert transform(CLASSIC, z).is_zero


def test_transform_closed_form_vs_quadrature():
    rng = np.random.default_rng(21)
    for p in (CLASSIC, GENERAL):
        f = _random_polygauss(rng)
        U = transform(p, f)
        for _ in range(10):
            z = complex(*rng.normal(scale=1.0, size=2))
            closed = U(z)
            quadr = transform_quad(p, f, z)
            assert abs(closed - quadr) <= REL_CLOSED_VS_QUAD * max(abs(closed), 1e-6)


def test_adjoint_inverts_transform_pointwise():
    for p in (CLASSIC, GENERAL):
        hs = HermiteSystem(p)
        f = hs.hermite_phi(0)
        U = transform(p, f)
        got = adjoint_quad(p, U, 0.3)
        assert abs(got - f(0.3)) <= 1e-6


def test_adjoint_of_constant_is_matched_gaussian():
    # pulling back the degree-zero basis element lands on
    # (Im C / pi h)^{1/4} exp(-i conj(C) x^2 / 2h)
    for p in (CLASSIC, GENERAL):
        hs = HermiteSystem(p)
        V = hs.monomial_basis(0)
        want = hs.hermite_phi(0)
        for x in (-0.8, 0.0, 0.3, 1.1):
            assert abs(adjoint_quad(p, V, x) - want(x)) <= 1e-6


def test_plane_inner_products_orthonormal():
    hs = HermiteSystem(CLASSIC)
    v0, v1, v2 = (hs.monomial_basis(n) for n in range(3))
    assert abs(inner_product_HPhi(CLASSIC, v0, v0) - 1) <= TOL_PLANE
    assert abs(inner_product_HPhi(CLASSIC, v1, v2)) <= TOL_PLANE


def test_plane_norm_of_ellipse_ground_state():
    # (alpha, beta) = (2, 0) ground state has squared norm 5 pi / 2
    p = derived_constants(2.0, 0.0)
    f = psi0(p)
    got = inner_product_HPhi(CLASSIC, f, f)
    assert abs(got - 5 * math.pi / 2) <= 1e-4 * (5 * math.pi / 2)


def test_unitarity_on_random_pairs():
    rng = np.random.default_rng(33)
    for p in (CLASSIC, GENERAL):
        worst = 0.0
        for _ in range(20):
            f, g = _random_polygauss(rng), _random_polygauss(rng)
            lhs = inner_product_HPhi(p, transform(p, f), transform(p, g))
            rhs = inner_product_line(f, g)
            worst = max(worst, abs(lhs - rhs))
        assert worst <= TOL_PLANE


def test_projector_reproduces_basis_element():
    hs = HermiteSystem(CLASSIC)
    v2 = hs.monomial_basis(2)
    grid = hphi_grid(CLASSIC, v2, v2)
    vals = grid_values(v2, grid)
    z = 0.4 - 0.2j
    assert abs(projector_apply(CLASSIC, vals, z, grid) - v2(z)) <= 1e-6


def test_projector_reproduces_transformed_functions():
    rng = np.random.default_rng(55)
    for p in (CLASSIC, GENERAL):
        U = transform(p, _random_polygauss(rng))
        grid = hphi_grid(p, U, U)
        vals = grid_values(U, grid)
        for _ in range(10):
            z = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
            assert abs(projector_apply(p, vals, z, grid) - U(z)) <= TOL_PLANE


def test_projector_moves_antiholomorphic_function():
    # z -> conj(z) is not in the holomorphic range; the projector must not fix it
    hs = HermiteSystem(CLASSIC)
    v1 = hs.monomial_basis(1)
    grid = hphi_grid(CLASSIC, v1, v1)
    vals = grid_values(lambda z: complex(z).conjugate(), grid)
    z = 0.9 + 0.4j
    residual = abs(projector_apply(CLASSIC, vals, z, grid) - z.conjugate())
    assert residual > 0.1
