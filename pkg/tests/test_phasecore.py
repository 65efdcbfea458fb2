"""Phase data: weight function, polarized kernel, phase-space embedding."""

import math

import numpy as np
import pytest

from bargmann_lab.gaussalg import DomainError
from bargmann_lab.phasecore import (
    PhaseParams,
    canonical_A,
    kappa_map,
    kernel_Psi,
    params_from_dict,
    params_to_dict,
    weight_Phi,
)

CLASSIC = PhaseParams(0.5j, -1j, 1j, 1.0)

# sample parameter pool: (A, B, C, h) with A canonical for (B, C)
POOL = [
    CLASSIC,
    PhaseParams(canonical_A(3.0, 1 + 2j), 3.0, 1 + 2j, 0.5),
    PhaseParams(canonical_A(-2.0, 0.5j), -2.0, 0.5j, 2.0),
    PhaseParams(canonical_A(1 + 1j, 0.3 + 0.8j), 1 + 1j, 0.3 + 0.8j, 1.0),
]


def test_params_validation():
    with pytest.raises(DomainError):
        PhaseParams(0j, 0.0, 1j, 1.0)
    with pytest.raises(DomainError):
        PhaseParams(0j, -1j, 1.0, 1.0)  # Im C = 0
    with pytest.raises(DomainError):
        PhaseParams(0j, -1j, 1j, -1.0)


def test_canonical_A_reference_values():
    assert canonical_A(-1j, 1j) == 0.5j
    assert canonical_A(1.0, 1j) == -0.5j


def test_normalization_constants_classic():
    assert CLASSIC.C_phi == pytest.approx(2**-0.5 * math.pi**-0.75, rel=1e-15)
    assert CLASSIC.C_Phi == pytest.approx(1 / (2 * math.pi), rel=1e-15)


def test_weight_classic_values():
    # classic weight is |z|^2 / 4
    assert weight_Phi(CLASSIC, 1 + 1j) == pytest.approx(0.5, abs=1e-15)
    assert weight_Phi(CLASSIC, 0j) == 0.0


def test_weight_matches_maximization_oracle():
    # frozen golden-section maxima of -Im phi(z, .) over the real line
    cases = [
        (CLASSIC, 0.7 - 0.3j, 0.145),
        (PhaseParams(-2.25j, 3.0, 1 + 2j, 0.5), -0.4 + 1.1j, 1.54125),
        (PhaseParams(-4.0j, -2.0, 0.5j, 2.0), 1.3 + 0.2j, 3.46),
    ]
    for p, z, oracle in cases:
        assert abs(weight_Phi(p, z) - oracle) <= 1e-8


def test_kernel_polarizes_weight():
    rng = np.random.default_rng(3)
    for p in POOL:
        for _ in range(25):
            z = complex(*rng.normal(scale=1.2, size=2))
            dev = abs(kernel_Psi(p, z, z.conjugate()) - weight_Phi(p, z))
            assert dev <= 1e-10


def test_kernel_zero_at_origin():
    for p in POOL:
        assert kernel_Psi(p, 0j, 0j) == 0


def test_kernel_canonical_simplification():
    # with A = canonical_A(B, C) the kernel collapses to |B|^2 z w / (4 Im C)
    rng = np.random.default_rng(5)
    for _ in range(100):
        B = complex(*rng.normal(size=2))
        if abs(B) < 0.1:
            continue
        C = complex(rng.normal(), 0.3 + rng.uniform(0, 2))
        p = PhaseParams(canonical_A(B, C), B, C, 1.0)
        z, w = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
        want = abs(B) ** 2 * z * w / (4 * C.imag)
        scale = max(abs(want), 1.0)
        assert abs(kernel_Psi(p, z, w) - want) <= 1e-12 * scale


def test_kappa_fixes_origin():
    for p in POOL:
        assert kappa_map(p, 0.0, 0.0) == (0j, 0j)


def test_kappa_classic_point():
    z, s = kappa_map(CLASSIC, 1.0, 2.0)
    assert z == 1 - 2j
    assert abs(s - (1 - 0.5j)) <= 1e-14


def test_kappa_graph_lies_on_weight_gradient():
    # second component equals (2/i) dPhi/dz along the image point,
    # checked with central differences at step 1e-5
    step = 1e-5
    rng = np.random.default_rng(9)
    for p in POOL:
        for _ in range(5):
            x, xi = rng.normal(scale=1.1, size=2)
            z, s = kappa_map(p, float(x), float(xi))
            dre = (weight_Phi(p, z + step) - weight_Phi(p, z - step)) / (2 * step)
            dim = (weight_Phi(p, z + 1j * step) - weight_Phi(p, z - 1j * step)) / (2 * step)
            dz = (dre - 1j * dim) / 2
            assert abs(s - (2 / 1j) * dz) <= 1e-6


def test_kappa_real_linear():
    rng = np.random.default_rng(13)
    for p in POOL:
        x1, xi1, x2, xi2, a, b = rng.normal(size=6)
        za, sa = kappa_map(p, float(x1), float(xi1))
        zb, sb = kappa_map(p, float(x2), float(xi2))
        zc, sc = kappa_map(p, float(a * x1 + b * x2), float(a * xi1 + b * xi2))
        assert abs(zc - (a * za + b * zb)) <= 1e-12
        assert abs(sc - (a * sa + b * sb)) <= 1e-12


def test_params_dict_roundtrip():
    for p in POOL:
        q = params_from_dict(params_to_dict(p))
        assert q == p
