"""Certification suites: named checks with measured values and tolerances.

Each suite function returns a list of check dicts

    {"name": str, "measured": float, "tolerance": float, "pass": bool}

where ``pass`` means ``measured <= tolerance``.  The suites pit independent
routes against each other (exact coefficient algebra vs. adaptive/tensor
quadrature, closed-form series vs. radial integrals, ladder recursions vs.
Rodrigues formulas) so a pass certifies both routes at the stated tolerance.

``suite_all`` runs the whole certification battery on the reference parameter
sets.  Independent suites can be fanned out to worker threads; the worker
count comes from the ``BARGMANN_LAB_THREADS`` environment variable (default:
sequential).  Results are merged in task order, so output is deterministic
for any worker count.
"""

from __future__ import annotations

import cmath
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad as _adaptive_quad

from .gaussalg import (
    ComplexPoly,
    DiffOp,
    PolyGauss,
    apply_diffop,
    gauss_integral,
    inner_product_line,
    norm_line,
)
from .phasecore import PhaseParams, canonical_A
from .bargmann import (
    hphi_grid,
    inner_product_HPhi,
    plane_grid,
    projector_apply,
    transform,
    transform_quad,
    adjoint_quad,
    grid_values,
)
from .hermite import HermiteSystem, gram_deviation
from .ncho import NchoParams, eigenfunction_vec, spectrum_check, vec_inner
from .ellipse import (
    EllipseParams,
    Psi_n,
    Psi_n_ladder,
    bridge_params,
    derived_constants,
    ladder_diffops,
    psi_n,
    psi_n_ladder,
)
from .toeplitz import (
    RadialSymbol,
    default_toeplitz_grid,
    disk_eigenvalue,
    radial_eigenvalue,
    radius_from_groundstate,
    spectrum_rows,
    toeplitz_matrix_quad,
)

__all__ = [
    "check",
    "suite_gaussint",
    "suite_hermite",
    "suite_transform",
    "suite_ncho",
    "suite_ellipse",
    "suite_bridge",
    "suite_toeplitz",
    "suite_all",
    "HERMITE_PARAM_SETS",
    "NCHO_ALPHAS",
    "NCHO_PLANCKS",
    "ELLIPSE_SETS",
    "TOEPLITZ_RADII",
]

# Tolerance ladder: exact coefficient algebra, 1-D quadrature cross-checks,
# 2-D plane quadrature, and the relative tolerance for ellipse-family norms.
TOL_ALGEBRA = 1e-10
TOL_GRAM_QUAD = 1e-6
TOL_UNITARITY = 1e-6
TOL_ROT_GAUSS = 1e-8
TOL_TRANSFORM_QUAD = 1e-8
TOL_NORM_REL = 1e-4
TOL_TOEPLITZ_SERIES = 1e-10
TOL_TOEPLITZ_DIAG = 1e-5
TOL_TOEPLITZ_OFFDIAG = 1e-6
TOL_ROUNDTRIP = 1e-12
TOL_IDENTITY = 1e-12

# Reference parameter sets for the full battery.
HERMITE_PARAM_SETS: tuple[tuple[complex, complex, float], ...] = (
    (-1j, 1j, 1.0),
    (3.0, 1.0 + 2.0j, 0.5),
    (2.0, 0.5 + 1.0j, 1.0),
    (-0.7 + 0.2j, 0.3 + 0.8j, 1.0),
    (-2.0, 0.5j, 2.0),
)
NCHO_ALPHAS: tuple[float, ...] = (1.5, 2.0, 5.0)
NCHO_PLANCKS: tuple[float, ...] = (1.0, 0.5)
ELLIPSE_SETS: tuple[tuple[float, float], ...] = ((2.0, 0.0), (2.0, 1.0), (0.5, 3.0))
TOEPLITZ_RADII: tuple[float, ...] = (0.5, 1.0, 3.0)

ROT_RHOS: tuple[float, ...] = (0.5, 1.0, 2.0)
ROT_THETAS: tuple[float, ...] = (-0.7, 0.0, 0.7)


def check(name: str, measured: float, tolerance: float) -> dict:
    """One named certification check; passes iff measured <= tolerance."""
    m = float(measured)
    t = float(tolerance)
    return {"name": name, "measured": m, "tolerance": t, "pass": bool(m <= t)}


def _fmt_c(z: complex) -> str:
    """Compact complex formatting for check names: 3, -i, 1+2i."""
    z = complex(z)

    def num(x: float) -> str:
        return repr(int(x)) if x == int(x) else repr(x)

    if z.imag == 0.0:
        return num(z.real)
    if z.imag == 1.0:
        im = "i"
    elif z.imag == -1.0:
        im = "-i"
    else:
        im = num(z.imag) + "i"
    if z.real == 0.0:
        return im
    sign = "+" if not im.startswith("-") else ""
    return num(z.real) + sign + im


# ---------------------------------------------------------------------------
# rotated Gaussian integral
# ---------------------------------------------------------------------------


def suite_gaussint(
    rhos: Sequence[float] = ROT_RHOS, thetas: Sequence[float] = ROT_THETAS
) -> list[dict]:
    """Closed-form rotated Gaussian integral vs. adaptive quadrature."""
    checks = []
    for rho in rhos:
        for theta in thetas:
            closed = gauss_integral(rho, theta)
            c = rho * rho * cmath.exp(2j * theta)

            def f_re(t: float) -> float:
                w = cmath.exp(-c * t * t)
                return w.real

            def f_im(t: float) -> float:
                w = cmath.exp(-c * t * t)
                return w.imag

            re, _ = _adaptive_quad(f_re, -np.inf, np.inf, limit=400)
            im, _ = _adaptive_quad(f_im, -np.inf, np.inf, limit=400)
            oracle = complex(re, im)
            rel = abs(closed - oracle) / abs(oracle)
            checks.append(
                check(f"rot_gauss[rho={rho},theta={theta}]", rel, TOL_ROT_GAUSS)
            )
    return checks


# ---------------------------------------------------------------------------
# generalized Hermite systems
# ---------------------------------------------------------------------------


def suite_hermite(
    B: complex, C: complex, h: float, n_res: int = 12, n_gram: int | None = None
) -> list[dict]:
    """Eigen-residuals plus exact and quadrature Gram deviations."""
    if n_gram is None:
        n_gram = n_res
    sys_ = HermiteSystem.from_bch(B, C, h)
    checks = []
    for n in range(n_res):
        checks.append(check(f"eig_residual[n={n}]", sys_.eigen_residual(n), TOL_ALGEBRA))
    if complex(B) == -1j and complex(C) == 1j:
        dev = max(abs(sys_.eigenvalue(n) - (2 * n + 1) * h) for n in range(n_res))
        checks.append(check("classic_eigenvalue_dev", dev, TOL_ALGEBRA))
    g_exact = sys_.gram_matrix(n_gram, method="exact")
    checks.append(
        check(f"gram_exact_dev[n<{n_gram}]", gram_deviation(g_exact), TOL_ALGEBRA)
    )
    g_quad = sys_.gram_matrix(n_gram, method="quadrature")
    checks.append(
        check(f"gram_quad_dev[n<{n_gram}]", gram_deviation(g_quad), TOL_GRAM_QUAD)
    )
    return checks


# ---------------------------------------------------------------------------
# transform unitarity / reproducing kernel
# ---------------------------------------------------------------------------


def _random_polygauss(rng: np.random.Generator) -> PolyGauss:
    deg = int(rng.integers(0, 4))
    coeffs = tuple(
        complex(a, b)
        for a, b in zip(rng.normal(size=deg + 1), rng.normal(size=deg + 1))
    )
    gamma2 = complex(-0.4 - rng.uniform(0.0, 1.2), 0.5 * rng.normal())
    gamma1 = complex(0.5 * rng.normal(), 0.5 * rng.normal())
    return PolyGauss(ComplexPoly.from_coeffs(coeffs), gamma2, gamma1)


def suite_transform(
    B: complex,
    C: complex,
    h: float,
    n_pairs: int = 20,
    n_points: int = 10,
    seed: int = 2026,
) -> list[dict]:
    """Unitarity over random pairs, reproducing kernel, and quadrature oracle."""
    p = PhaseParams(canonical_A(B, C), B, C, h)
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    pairs = [(_random_polygauss(rng), _random_polygauss(rng)) for _ in range(n_pairs)]
    for f, g in pairs:
        lhs = inner_product_HPhi(p, transform(p, f), transform(p, g))
        rhs = inner_product_line(f, g)
        worst = max(worst, abs(lhs - rhs))
    checks.append(check(f"unitarity_max_dev[pairs={n_pairs}]", worst, TOL_UNITARITY))

    f0 = pairs[0][0]
    U = transform(p, f0)
    grid = hphi_grid(p, U, U)
    vals = grid_values(U, grid)
    worst = 0.0
    for _ in range(n_points):
        z = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        worst = max(worst, abs(projector_apply(p, vals, z, grid) - U(z)))
    checks.append(check(f"reproducing_max_dev[points={n_points}]", worst, TOL_UNITARITY))

    worst = 0.0
    for z in (0.3 + 0.1j, -0.8 + 0.5j, 1.1 - 0.9j):
        worst = max(worst, abs(transform(p, f0)(z) - transform_quad(p, f0, z)))
    checks.append(check("transform_closed_vs_quad", worst, TOL_TRANSFORM_QUAD))

    worst = 0.0
    for x in (-1.2, -0.3, 0.0, 0.7, 1.6):
        worst = max(worst, abs(adjoint_quad(p, U, x) - f0(x)))
    checks.append(check("adjoint_roundtrip_max", worst, TOL_UNITARITY))
    return checks


# ---------------------------------------------------------------------------
# commutative-case two-component oscillator
# ---------------------------------------------------------------------------


def suite_ncho(alpha: float, h: float, n_res: int = 11, n_gram: int = 9) -> list[dict]:
    """Vector eigen-residuals plus the combined (both signs) Gram deviation."""
    p = NchoParams(alpha, h)
    checks = []
    for row in spectrum_check(p, n_res):
        checks.append(
            check(f"residual[sign={row['sign']},n={row['n']}]", row["residual"], TOL_ALGEBRA)
        )
    vecs = [
        eigenfunction_vec(p, sign, n) for n in range(n_gram) for sign in (+1, -1)
    ]
    m = len(vecs)
    dev = 0.0
    for i in range(m):
        for j in range(m):
            g = vec_inner(vecs[i], vecs[j])
            dev = max(dev, abs(g - (1.0 if i == j else 0.0)))
    checks.append(check(f"combined_gram_dev[n<{n_gram}]", dev, TOL_ALGEBRA))
    return checks


# ---------------------------------------------------------------------------
# ellipse-associated orthogonal families
# ---------------------------------------------------------------------------


def _poly_rel_dev(u: ComplexPoly, v: ComplexPoly) -> float:
    """max coefficient deviation between two polynomials, relative to u."""
    la, lb = len(u.coeffs), len(v.coeffs)
    n = max(la, lb)
    a = u.coeffs + (0j,) * (n - la)
    b = v.coeffs + (0j,) * (n - lb)
    scale = max(max(abs(x) for x in a), 1e-300)
    return max(abs(x - y) for x, y in zip(a, b)) / scale


def suite_ellipse(
    alpha: float, beta: float, n_eig: int = 11, n_gram: int = 7
) -> list[dict]:
    """Route agreement, quadrature norms, and oscillator residuals."""
    p = derived_constants(alpha, beta)
    pc = PhaseParams.classic()
    checks = []

    checks.append(
        check(
            "constants_identity_dev",
            abs(p.a + 2 * p.lam - 1 / p.a.conjugate()),
            TOL_IDENTITY,
        )
    )

    dev = max(
        _poly_rel_dev(psi_n(p, n).poly, psi_n_ladder(p, n).poly) for n in range(n_eig)
    )
    checks.append(check(f"psi_routes_dev[n<{n_eig}]", dev, TOL_IDENTITY))
    dev = max(
        _poly_rel_dev(Psi_n(p, n).poly, Psi_n_ladder(p, n).poly) for n in range(n_eig)
    )
    checks.append(check(f"Psi_routes_dev[n<{n_eig}]", dev, TOL_IDENTITY))

    psis = [psi_n(p, n) for n in range(n_gram)]
    diag = [
        math.factorial(n) * p.lam_over_a**n * p.norm_psi0_sq for n in range(n_gram)
    ]
    n0 = inner_product_HPhi(pc, psis[0], psis[0]).real
    checks.append(
        check("psi0_norm_rel_err", abs(n0 - p.norm_psi0_sq) / p.norm_psi0_sq, TOL_NORM_REL)
    )
    dev = 0.0
    for m_ in range(n_gram):
        for n_ in range(m_, n_gram):
            g = inner_product_HPhi(pc, psis[m_], psis[n_])
            closed = diag[n_] if m_ == n_ else 0.0
            dev = max(dev, abs(g - closed) / math.sqrt(diag[m_] * diag[n_]))
    checks.append(check(f"psi_gram_rel_dev[n<{n_gram}]", dev, TOL_NORM_REL))

    _, _, H = ladder_diffops(p)
    for n in range(n_eig):
        f = Psi_n(p, n)
        mu = p.eigen_gap * (2 * n + 1)
        defect = apply_diffop(H, f).add(f.scale(-mu))
        checks.append(
            check(f"H_residual[n={n}]", norm_line(defect) / norm_line(f), TOL_ALGEBRA)
        )

    if (alpha, beta) == (2.0, 0.0):
        target = DiffOp({(0, 2): 1.0, (2, 0): 16.0}, h=1.0)
        checks.append(
            check("operator_identity_dev", H.max_coeff_diff(target), TOL_IDENTITY)
        )
        dev = max(
            abs(p.eigen_gap * (2 * n + 1) - 4.0 * (2 * n + 1)) for n in range(n_eig)
        )
        checks.append(check("eigenvalue_4(2n+1)_dev", dev, TOL_IDENTITY))
    return checks


# ---------------------------------------------------------------------------
# cross-module bridge
# ---------------------------------------------------------------------------


def suite_bridge(alpha: float, beta: float, n_max: int = 11) -> list[dict]:
    """Collinearity of the line family with the bridged Hermite family."""
    p = derived_constants(alpha, beta)
    hs = HermiteSystem(bridge_params(p))
    checks = []
    for n in range(n_max):
        big = Psi_n(p, n)
        phi = hs.hermite_phi(n)
        exp_dev = abs(big.gamma2 - phi.gamma2) + abs(big.gamma1 - phi.gamma1)
        a = big.poly.coeffs
        b = phi.poly.coeffs
        la, lb = len(a), len(b)
        m = max(la, lb)
        a = a + (0j,) * (m - la)
        b = b + (0j,) * (m - lb)
        k = max(range(m), key=lambda i: abs(a[i]))
        ratio = a[k] / b[k]
        scale = max(abs(x) for x in a)
        coeff_dev = max(abs(x - ratio * y) for x, y in zip(a, b)) / scale
        checks.append(
            check(f"bridge_collinear[n={n}]", max(exp_dev, coeff_dev), TOL_ALGEBRA)
        )
    return checks


# ---------------------------------------------------------------------------
# localization eigenvalues
# ---------------------------------------------------------------------------


def suite_toeplitz(R: float, n_max: int = 11, n_matrix: int = 7) -> list[dict]:
    """Series vs. radial integrals, matrix diagonality, radius round-trip."""
    checks = []
    for row in spectrum_rows(R, n_max):
        checks.append(
            check(f"series_vs_radial[n={row['n']}]", row["abs_diff"], TOL_TOEPLITZ_SERIES)
        )
    checks.append(
        check(
            "radius_roundtrip",
            abs(radius_from_groundstate(disk_eigenvalue(R, 0)) - R),
            TOL_ROUNDTRIP,
        )
    )

    sym = RadialSymbol.indicator(R)
    grid = default_toeplitz_grid(sym, n_matrix - 1)
    off = 0.0
    diag = 0.0
    for m_ in range(n_matrix):
        for n_ in range(n_matrix):
            g = toeplitz_matrix_quad(sym, m_, n_, grid=grid)
            if m_ == n_:
                diag = max(diag, abs(g - radial_eigenvalue(sym, n_)))
            else:
                off = max(off, abs(g))
    checks.append(check(f"matrix_offdiag_max[n<{n_matrix}]", off, TOL_TOEPLITZ_OFFDIAG))
    checks.append(check(f"matrix_diag_dev[n<{n_matrix}]", diag, TOL_TOEPLITZ_DIAG))

    sym_g = RadialSymbol.gaussian(0.5)
    grid_g = default_toeplitz_grid(sym_g, n_matrix - 1)
    dev = max(
        abs(toeplitz_matrix_quad(sym_g, n_, n_, grid=grid_g) - 2.0 ** (-(n_ + 1)))
        for n_ in range(n_matrix)
    )
    checks.append(check(f"gaussian_diag_dev[n<{n_matrix}]", dev, TOL_TOEPLITZ_DIAG))
    return checks


# ---------------------------------------------------------------------------
# the full battery
# ---------------------------------------------------------------------------


def _worker_count() -> int:
    env = os.environ.get("BARGMANN_LAB_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return 1


def _fan_out(tasks: Sequence[tuple[str, Callable[[], list[dict]]]]) -> list[dict]:
    """Run independent suite tasks, merging results in task (index) order."""
    workers = _worker_count()
    if workers == 1:
        results = [fn() for _, fn in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda t: t[1](), tasks))
    merged = []
    for (prefix, _), checks in zip(tasks, results):
        for c in checks:
            merged.append({**c, "name": f"{prefix}::{c['name']}"})
    return merged


def suite_all(seed: int = 2026) -> list[dict]:
    """The full certification battery on the reference parameter sets."""
    tasks: list[tuple[str, Callable[[], list[dict]]]] = []
    tasks.append(("gaussint", suite_gaussint))
    for B, C, h in HERMITE_PARAM_SETS:
        name = f"hermite[B={_fmt_c(B)},C={_fmt_c(C)},h={h}]"
        tasks.append(
            (name, lambda B=B, C=C, h=h: suite_hermite(B, C, h, n_res=21, n_gram=16))
        )
    for B, C, h in HERMITE_PARAM_SETS:
        name = f"transform[B={_fmt_c(B)},C={_fmt_c(C)},h={h}]"
        tasks.append(
            (name, lambda B=B, C=C, h=h: suite_transform(B, C, h, seed=seed))
        )
    for alpha in NCHO_ALPHAS:
        for h in NCHO_PLANCKS:
            name = f"ncho[alpha={alpha},h={h}]"
            tasks.append(
                (name, lambda a=alpha, h=h: suite_ncho(a, h, n_res=11, n_gram=9))
            )
    for alpha, beta in ELLIPSE_SETS:
        name = f"ellipse[alpha={alpha},beta={beta}]"
        tasks.append(
            (name, lambda a=alpha, b=beta: suite_ellipse(a, b, n_eig=11, n_gram=7))
        )
    for alpha, beta in ELLIPSE_SETS:
        name = f"bridge[alpha={alpha},beta={beta}]"
        tasks.append((name, lambda a=alpha, b=beta: suite_bridge(a, b, n_max=11)))
    for R in TOEPLITZ_RADII:
        name = f"toeplitz[R={R}]"
        tasks.append((name, lambda R=R: suite_toeplitz(R, n_max=11, n_matrix=7)))
    return _fan_out(tasks)
