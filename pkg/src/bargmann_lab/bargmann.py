"""The transform, its adjoint, the projector kernel, and quadrature oracles.

The transform

    T f(z) = C_phi * h**(-3/4) * integral exp(i phi(z,x)/h) f(x) dx

maps ``PolyGauss`` functions on the line to ``HoloGauss`` functions on the
plane in closed form (completing the square reduces the integral to Gaussian
moments).  The adjoint and the projector are kept quadrature-only on purpose:
they are the *independent* route against which the closed forms are certified.

Quadrature grids are tensor Gauss-Hermite grids rescaled to the total real
exponent of the integrand (weight plus the Gaussian factors of the integrand
itself, including the induced center shift).  Rescaling to the weight alone
looks sufficient but loses every digit on near-degenerate inputs whose own
Gaussian factor is much wider or narrower than the weight; fitting the total
exponent makes polynomial-times-Gaussian integrands exact up to the
oscillatory phase, which the node count then resolves spectrally.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from numpy.polynomial.hermite import hermgauss

from .gaussalg import (
    ComplexPoly,
    DomainError,
    HoloGauss,
    PolyGauss,
    reduced_moment_polys,
)
from .phasecore import PhaseParams, phi_phase, kernel_Psi, weight_Phi

__all__ = [
    "QuadGrid",
    "TruncationError",
    "line_grid",
    "plane_grid",
    "hphi_grid",
    "polar_grid",
    "transform",
    "transform_quad",
    "adjoint_quad",
    "projector_apply",
    "inner_product_HPhi",
    "grid_values",
    "dump_grid_csv",
]

#: Heuristic bound on the admissible outer-shell contribution, relative to
#: the total absolute mass of the quadrature sum.
TRUNCATION_TOL = 1e-9


class TruncationError(RuntimeError):
    """The grid does not extend far enough for the requested integrand."""


@dataclass(frozen=True)
class QuadGrid:
    """Quadrature nodes and positive weights.

    ``nodes`` holds floats for 1D grids and (x, y) pairs for 2D grids;
    ``kind`` is one of ``gauss-hermite-1d``, ``tensor-2d``,
    ``trapezoid-truncated``.
    """

    nodes: tuple
    weights: tuple[float, ...]
    kind: str

    def __post_init__(self) -> None:
        if len(self.nodes) != len(self.weights):
            raise DomainError("nodes and weights must have equal length")
        if any(not w > 0 for w in self.weights):
            raise DomainError("weights must be positive")

    @property
    def is_planar(self) -> bool:
        return self.kind in ("tensor-2d", "trapezoid-truncated")

    def points(self) -> np.ndarray:
        """Nodes as a numpy array: float (1D) or complex x+iy (2D)."""
        if self.is_planar:
            xy = np.asarray(self.nodes, dtype=float)
            return xy[:, 0] + 1j * xy[:, 1]
        return np.asarray(self.nodes, dtype=float)

    def weight_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


# ---------------------------------------------------------------------------
# Grid construction
# ---------------------------------------------------------------------------


def _fit_quad_1d(fn: Callable[[float], float]) -> tuple[float, float, float]:
    """Exact (c, m1, m2) with fn(x) = c + m1*x + m2*x**2 for quadratic fn."""
    c = fn(0.0)
    fp, fm = fn(1.0), fn(-1.0)
    return c, (fp - fm) / 2.0, (fp + fm) / 2.0 - c


def line_grid(real_exponent: Callable[[float], float], n: int = 200) -> QuadGrid:
    """Gauss-Hermite grid adapted to a (quadratic) real exponent profile.

    ``real_exponent`` must be the quadratic ``x -> Re`` of the total integrand
    exponent; the grid then integrates ``poly * exp(exponent)`` essentially
    exactly.
    """
    _, m1, m2 = _fit_quad_1d(real_exponent)
    if not m2 < 0:
        raise DomainError(f"integrand does not decay: quadratic coeff {m2}")
    center = -m1 / (2.0 * m2)
    scale = 1.0 / math.sqrt(-m2)
    t, w = hermgauss(n)
    nodes = center + scale * t
    weights = w * np.exp(t * t) * scale
    return QuadGrid(tuple(nodes), tuple(weights), "gauss-hermite-1d")


def _fit_quad_2d(fn: Callable[[complex], float]):
    """Exact quadratic-form fit fn(x+iy) = c + L.v + v.M.v, returned as (M, L, c)."""
    c = fn(0j)
    f10, fm10 = fn(1 + 0j), fn(-1 + 0j)
    f01, f0m1 = fn(1j), fn(-1j)
    f11 = fn(1 + 1j)
    m11 = (f10 + fm10) / 2.0 - c
    m22 = (f01 + f0m1) / 2.0 - c
    l1 = (f10 - fm10) / 2.0
    l2 = (f01 - f0m1) / 2.0
    m12 = (f11 - c - l1 - l2 - m11 - m22) / 2.0
    M = np.array([[m11, m12], [m12, m22]], dtype=float)
    L = np.array([l1, l2], dtype=float)
    return M, L, c


def plane_grid(real_exponent: Callable[[complex], float], n: int = 160) -> QuadGrid:
    """Tensor Gauss-Hermite grid over the plane, on the principal axes of
    the (negative-definite) quadratic real exponent.

    Nodes are centered on the exponent's maximum and scaled per axis by its
    decay rates, so polynomial-times-Gaussian integrands are integrated to
    round-off and oscillatory phases converge spectrally in ``n``.
    """
    M, L, _ = _fit_quad_2d(real_exponent)
    evals, evecs = np.linalg.eigh(M)
    if not (evals < 0).all():
        raise DomainError(
            f"integrand does not decay in all directions: eigenvalues {evals}"
        )
    center = np.linalg.solve(2.0 * M, -L)
    t, w = hermgauss(n)
    ew = w * np.exp(t * t)
    s1 = 1.0 / math.sqrt(-evals[0])
    s2 = 1.0 / math.sqrt(-evals[1])
    t1, t2 = np.meshgrid(t * s1, t * s2, indexing="ij")
    xy = (
        center[None, None, :]
        + t1[..., None] * evecs[:, 0][None, None, :]
        + t2[..., None] * evecs[:, 1][None, None, :]
    ).reshape(-1, 2)
    ww = (np.outer(ew, ew) * (s1 * s2)).reshape(-1)
    return QuadGrid(
        tuple(map(tuple, xy)),
        tuple(ww),
        "tensor-2d",
    )


def hphi_grid(
    p: PhaseParams, U: HoloGauss, V: HoloGauss, n: int = 160
) -> QuadGrid:
    """Grid for the weighted inner product of U and V (total-exponent adapted)."""

    def real_exponent(z: complex) -> float:
        return (
            (U.c2 * z * z + U.c1 * z).real
            + (V.c2 * z * z + V.c1 * z).real
            - 2.0 * weight_Phi(p, z) / p.h
        )

    return plane_grid(real_exponent, n)


def polar_grid(
    r_max: float,
    n_r: int = 400,
    n_theta: int = 128,
    split_at: float | None = None,
) -> QuadGrid:
    """Truncated polar grid: Gauss-Legendre radially, trapezoid in angle.

    The uniform angular rule integrates e^{i k theta} exactly to zero for
    0 < |k| < n_theta, which is what makes radial-symbol matrices exactly
    diagonal at quadrature level.  ``split_at`` places a radial panel break
    on a known discontinuity (e.g. an indicator boundary).
    """
    if not r_max > 0:
        raise DomainError("r_max must be positive")
    breaks = [0.0]
    if split_at is not None and 0.0 < split_at < r_max:
        breaks.append(float(split_at))
    breaks.append(float(r_max))
    t, w = np.polynomial.legendre.leggauss(n_r)
    rs, rw = [], []
    for a, b in zip(breaks[:-1], breaks[1:]):
        rs.append((b - a) / 2.0 * t + (b + a) / 2.0)
        rw.append((b - a) / 2.0 * w)
    r = np.concatenate(rs)
    wr = np.concatenate(rw) * r  # Jacobian r dr dtheta
    theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
    wt = 2.0 * math.pi / n_theta
    rr, tt = np.meshgrid(r, theta, indexing="ij")
    xy = np.stack([rr * np.cos(tt), rr * np.sin(tt)], axis=-1).reshape(-1, 2)
    ww = np.repeat(wr * wt, n_theta)
    return QuadGrid(tuple(map(tuple, xy)), tuple(ww), "trapezoid-truncated")


# ---------------------------------------------------------------------------
# Quadrature evaluation
# ---------------------------------------------------------------------------


def grid_values(fn: Callable[[complex], complex], grid: QuadGrid) -> np.ndarray:
    """Evaluate a callable on every node (complex nodes for planar grids)."""
    return np.asarray([fn(z) for z in grid.points()], dtype=complex)


def _poly_values(poly: ComplexPoly, z: np.ndarray) -> np.ndarray:
    p = np.zeros_like(z)
    for c in reversed(poly.coeffs):
        p = p * z + c
    return p


def _holo_values(U: HoloGauss, z: np.ndarray) -> np.ndarray:
    return _poly_values(U.poly, z) * np.exp(U.c2 * z * z + U.c1 * z)


def _weight_exponent(p: PhaseParams, z: np.ndarray) -> np.ndarray:
    """-2 Phi(z)/h, vectorized (real array).

    Individual exponential factors of an integrand can overflow where the
    full product is negligible, so integrands below always add this to the
    other exponents and exponentiate once.
    """
    bz = p.B * z
    phi = (np.abs(bz) ** 2) / (4 * p.C.imag) - (
        bz * bz / (4 * p.C.imag) + p.A * z * z / 2j
    ).real
    return -2.0 * phi / p.h


def _quad_sum(grid: QuadGrid, values: np.ndarray) -> complex:
    """Weighted sum with a truncation-error check on the outer node shell."""
    w = grid.weight_array()
    mass = np.abs(values) * w
    total_mass = float(mass.sum())
    pts = grid.points()
    r = np.abs(pts - pts.mean())
    shell = r >= 0.95 * r.max()
    estimate = float(mass[shell].sum())
    if estimate > TRUNCATION_TOL * max(total_mass, 1e-300):
        raise TruncationError(
            f"outer-shell contribution {estimate:.3e} exceeds "
            f"{TRUNCATION_TOL:.1e} of total mass {total_mass:.3e}; "
            "enlarge the grid"
        )
    return complex((values * w).sum())


# ---------------------------------------------------------------------------
# The transform and its certified companions
# ---------------------------------------------------------------------------


def transform(p: PhaseParams, f: PolyGauss) -> HoloGauss:
    """Closed form of T f for a polynomial-times-Gaussian input.

    Completing the square in

        T f(z) = C_phi h^{-3/4} e^{iAz^2/2h}
                 * integral poly(x) exp(g2 x^2 + u(z) x) dx,
        g2 = gamma2 + iC/(2h),      u(z) = gamma1 + iBz/h,

    gives a ``HoloGauss`` with

        c2 = iA/(2h) + B^2/(4 h^2 g2),    c1 = -i B gamma1 / (2 h g2),

    and polynomial part ``sum_k poly_k Q_k(u(z))`` rescaled by
    ``C_phi h^{-3/4} exp(-gamma1^2/(4 g2))``.
    """
    if f.is_zero:
        return HoloGauss(ComplexPoly.zero())
    g2 = f.gamma2 + 1j * p.C / (2 * p.h)
    if not g2.real < 0:
        raise DomainError(
            f"x-integral diverges: Re(gamma2 + iC/2h) = {g2.real}"
        )
    b_over_h = 1j * p.B / p.h
    q = reduced_moment_polys(g2, f.poly.degree)
    r_of_u = ComplexPoly.zero()
    for k, ck in enumerate(f.poly.coeffs):
        if ck != 0:
            r_of_u = r_of_u + q[k].scale(ck)
    poly_z = r_of_u.compose_affine(f.gamma1, b_over_h)
    const = (
        p.C_phi
        * p.h ** (-0.75)
        * cmath.exp(-f.gamma1 * f.gamma1 / (4 * g2))
    )
    c2 = 1j * p.A / (2 * p.h) + p.B * p.B / (4 * p.h * p.h * g2)
    c1 = -1j * p.B * f.gamma1 / (2 * p.h * g2)
    return HoloGauss(poly_z.scale(const), c2, c1)


def transform_quad(
    p: PhaseParams, f: PolyGauss, z: complex, grid: QuadGrid | None = None, n: int = 200
) -> complex:
    """Quadrature route for T f(z): the oracle for :func:`transform`."""
    if f.is_zero:
        return 0j

    def real_exponent(x: float) -> float:
        return (
            1j * phi_phase(p, z, x) / p.h
            + f.gamma2 * x * x
            + f.gamma1 * x
        ).real

    g = grid if grid is not None else line_grid(real_exponent, n)
    x = g.points()
    vals = np.asarray(
        [cmath.exp(1j * phi_phase(p, z, xi) / p.h) * f(xi) for xi in x]
    )
    return p.C_phi * p.h ** (-0.75) * _quad_sum(g, vals)


def adjoint_quad(
    p: PhaseParams,
    U: HoloGauss,
    x: float,
    grid: QuadGrid | None = None,
    n: int = 160,
) -> complex:
    """T* U(x) by 2D quadrature over the plane.

    Kept quadrature-only by design: it is the independent route that certifies
    the closed-form transform (T* T = identity on the line class).
    """
    if U.is_zero:
        return 0j

    def real_exponent(z: complex) -> float:
        return (
            (-1j * phi_phase(p, z, x).conjugate() / p.h).real
            + (U.c2 * z * z + U.c1 * z).real
            - 2.0 * weight_Phi(p, z) / p.h
        )

    g = grid if grid is not None else plane_grid(real_exponent, n)
    zs = g.points()
    total_exp = (
        np.asarray([-1j * phi_phase(p, z, x).conjugate() / p.h for z in zs])
        + U.c2 * zs * zs
        + U.c1 * zs
        + _weight_exponent(p, zs)
    )
    vals = _poly_values(U.poly, zs) * np.exp(total_exp)
    return p.C_phi * p.h ** (-0.75) * _quad_sum(g, vals)


def projector_apply(
    p: PhaseParams,
    U_values: Sequence[complex],
    z: complex,
    grid: QuadGrid,
) -> complex:
    """Projector (C_Phi/h) integral e^{2 Psi(z, conj zeta)/h} U(zeta) e^{-2 Phi/h}.

    ``U_values`` are samples of U on ``grid`` (grid-function representation;
    no interpolation happens).  Reproduces U(z) when U is a member of the
    weighted holomorphic class resolved by the grid.
    """
    zs = grid.points()
    kern_weight = np.exp(
        np.asarray([2.0 * kernel_Psi(p, z, zeta.conjugate()) / p.h for zeta in zs])
        + _weight_exponent(p, zs)
    )
    vals = kern_weight * np.asarray(U_values, dtype=complex)
    return p.C_Phi / p.h * _quad_sum(grid, vals)


def inner_product_HPhi(
    p: PhaseParams,
    U: HoloGauss,
    V: HoloGauss,
    grid: QuadGrid | None = None,
    n: int = 160,
) -> complex:
    """Weighted inner product integral U conj(V) e^{-2 Phi/h} over the plane.

    Membership of the pair in the weighted space is enforced by the grid fit:
    a combined exponent that fails to decay in some direction raises
    ``DomainError`` (for the classic weight this is exactly the
    ``|c2| < 1/(4h)`` growth-class bound on each factor).
    """
    if U.is_zero or V.is_zero:
        return 0j
    g = grid if grid is not None else hphi_grid(p, U, V, n)
    zs = g.points()
    total_exp = (
        U.c2 * zs * zs
        + U.c1 * zs
        + np.conj(V.c2 * zs * zs + V.c1 * zs)
        + _weight_exponent(p, zs)
    )
    vals = _poly_values(U.poly, zs) * np.conj(_poly_values(V.poly, zs)) * np.exp(
        total_exp
    )
    return _quad_sum(g, vals)


def dump_grid_csv(path_or_file, grid: QuadGrid, values: Iterable[complex]) -> None:
    """Write ``re(node), im(node), weight, re(value), im(value)`` rows."""
    own = isinstance(path_or_file, (str, bytes))
    fh = open(path_or_file, "w", newline="") if own else path_or_file
    try:
        writer = csv.writer(fh)
        writer.writerow(["re(node)", "im(node)", "weight", "re(value)", "im(value)"])
        for node, w, v in zip(grid.points(), grid.weights, values):
            zc = complex(node)
            vc = complex(v)
            writer.writerow([zc.real, zc.imag, w, vc.real, vc.imag])
    finally:
        if own:
            fh.close()
