"""Orthogonal families attached to an elliptic phase-plane region (h = 1).

For parameters alpha > 0, beta (excluding the degenerate circle
``(alpha, beta) = (1, 0)``), the region ``|alpha x - i(beta x + xi)| <= rho``
is an elliptic disk.  Its associated holomorphic family lives in the classic
Bargmann space:

    psi_0 = exp(-a z^2 / 4),
    a = (alpha^2 + beta^2 - 1 + 2 i beta) / (alpha^2 + beta^2 + 1),
    psi_n = { e^{-lambda z^2/2} (d/dz)^n e^{lambda z^2/2} } psi_0
          = (Lambda*)^n psi_0,

with ``0 < |a| < 1``, ``a + 2 lambda = 1/conj(a)``, ladders
``Lambda = (1/a) d/dz + z/2`` and ``Lambda* = d/dz + (a + 2 lambda) z / 2``,
and norms ``(psi_m, psi_n) = delta_mn n! (lambda/a)^n ||psi_0||^2``.

Pulling psi_n back to the line gives the real-side family

    Psi_n = A_ab (-C_ab)^n e^{-i(alpha^2+beta^2+1) beta x^2 / (2(1+beta^2))}
            e^{alpha^2 x^2/(2(1+beta^2))} (d/dx)^n e^{-alpha^2 x^2/(1+beta^2)},

eigenfunctions of ``H_ab = P*_ab P_ab + alpha^2/(1+beta^2)`` with eigenvalues
``alpha^2 (2n+1)/(1+beta^2)``; a parameter bridge exposes them as generalized
Hermite functions of a suitable (B, C) system.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .gaussalg import (
    ComplexPoly,
    DiffOp,
    DomainError,
    HoloGauss,
    PolyGauss,
    apply_diffop,
    holo_add,
    holo_differentiate,
    holo_multiply_exp,
    holo_multiply_z,
    holo_scale,
)
from .phasecore import PhaseParams

__all__ = [
    "DegenerateEllipseError",
    "EllipseParams",
    "derived_constants",
    "psi_n",
    "psi_n_ladder",
    "Psi_n",
    "Psi_n_ladder",
    "apply_ladder",
    "ladder_diffops",
    "bridge_params",
    "zeta_map",
    "zeta_inverse",
    "ellipse_trace",
]

_IDENTITY_TOL = 1e-12


class DegenerateEllipseError(DomainError):
    """(alpha, beta) = (1, 0): the region is a plain disk.

    The associated family degenerates to the classic Bargmann monomials
    (``a = 0``, ``lambda`` undefined); use the classic ``PhaseParams`` route
    instead.  The error carries that routing hint as ``classic_params``.
    """

    def __init__(self) -> None:
        super().__init__(
            "(alpha, beta) = (1, 0) is the degenerate circle: the family "
            "reduces to the classic Bargmann monomials; use "
            "PhaseParams.classic() with the hermite module instead"
        )
        self.classic_params = PhaseParams.classic()


@dataclass(frozen=True)
class EllipseParams:
    """Ellipse data (alpha, beta) plus the derived constants.

    Build via :func:`derived_constants`; the constructor re-checks the
    defining identities rather than trusting its caller.
    """

    alpha: float
    beta: float
    a: complex
    lam: complex
    C_ab: complex
    A_ab: complex

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise DomainError(f"alpha = {self.alpha} must be positive")
        if self.alpha == 1.0 and self.beta == 0.0:
            raise DegenerateEllipseError()
        if not 0 < abs(self.a) < 1:
            raise DomainError(f"|a| = {abs(self.a)} must lie in (0, 1)")
        ac = self.a.conjugate()
        if abs(self.a + 2 * self.lam - 1 / ac) > _IDENTITY_TOL:
            raise DomainError("identity a + 2 lambda = 1/conj(a) violated")
        ratio = self.lam / self.a
        if abs(ratio.imag) > _IDENTITY_TOL or not ratio.real > 0:
            raise DomainError(f"lambda/a = {ratio} must be real positive")
        expected = (
            2
            * self.alpha**2
            / ((self.alpha**2 + self.beta**2 - 1) ** 2 + 4 * self.beta**2)
        )
        if abs(ratio.real - expected) > _IDENTITY_TOL * max(1.0, expected):
            raise DomainError("lambda/a does not match its closed form")
        branch = cmath.phase(self.A_ab / math.pi**0.25)
        if not -math.pi / 4 < branch < math.pi / 4:
            raise DomainError(
                f"A_ab branch argument {branch} outside (-pi/4, pi/4)"
            )

    @property
    def lam_over_a(self) -> float:
        return (self.lam / self.a).real

    @property
    def norm_psi0_sq(self) -> float:
        """||psi_0||^2 in the weighted space: (alpha^2 + beta^2 + 1) pi / alpha."""
        return (self.alpha**2 + self.beta**2 + 1) * math.pi / self.alpha

    @property
    def w_exponent(self) -> complex:
        """w with Psi_0 = A_ab exp(-w x^2/2):
        (alpha^2 + i(alpha^2+beta^2+1) beta)/(1+beta^2)."""
        s = self.alpha**2 + self.beta**2 + 1
        return complex(self.alpha**2, s * self.beta) / (1 + self.beta**2)

    @property
    def eigen_gap(self) -> float:
        """alpha^2/(1+beta^2); eigenvalues are eigen_gap * (2n+1)."""
        return self.alpha**2 / (1 + self.beta**2)


def derived_constants(alpha: float, beta: float) -> EllipseParams:
    """Compute (a, lambda, C_ab, A_ab) from (alpha, beta) and validate."""
    if not alpha > 0:
        raise DomainError(f"alpha = {alpha} must be positive")
    if alpha == 1.0 and beta == 0.0:
        raise DegenerateEllipseError()
    s = alpha**2 + beta**2
    a = complex(s - 1, 2 * beta) / (s + 1)
    lam = 2 * alpha**2 / ((s + 1) * complex(s - 1, -2 * beta))
    c_ab = (1 - a.conjugate()) / (2 * a.conjugate())
    a_ab = math.pi**0.25 * cmath.sqrt((s + 1) / complex(1, -beta))
    return EllipseParams(alpha, beta, a, lam, c_ab, a_ab)


# ---------------------------------------------------------------------------
# The holomorphic family psi_n
# ---------------------------------------------------------------------------


def psi0(p: EllipseParams) -> HoloGauss:
    return HoloGauss(ComplexPoly.one(), -p.a / 4)


def psi_n(p: EllipseParams, n: int) -> HoloGauss:
    """psi_n by the Rodrigues route.

    The polynomial factor is ``e^{-lambda z^2/2} (d/dz)^n e^{lambda z^2/2}``
    (n-fold derivative of the bare auxiliary Gaussian, computed in the exact
    holomorphic algebra and stripped of its exponential), reattached to
    psi_0's own exponent.
    """
    if n < 0:
        raise DomainError("index must be >= 0")
    u = HoloGauss(ComplexPoly.one(), p.lam / 2)
    for _ in range(n):
        u = holo_differentiate(u)
    return HoloGauss(u.poly, -p.a / 4)


def psi_n_ladder(p: EllipseParams, n: int) -> HoloGauss:
    """psi_n as (Lambda*)^n psi_0: the independent construction."""
    u = psi0(p)
    for _ in range(n):
        u = apply_ladder(p, "lambda_star", u)
    return u


# ---------------------------------------------------------------------------
# The line family Psi_n
# ---------------------------------------------------------------------------


def Psi0(p: EllipseParams) -> PolyGauss:
    return PolyGauss(ComplexPoly((complex(p.A_ab),)), -p.w_exponent / 2)


def Psi_n(p: EllipseParams, n: int) -> PolyGauss:
    """Psi_n by the Rodrigues route (n-fold d/dx of the wide Gaussian)."""
    if n < 0:
        raise DomainError("index must be >= 0")
    core = PolyGauss(ComplexPoly.one(), -p.eigen_gap)  # e^{-alpha^2 x^2/(1+beta^2)}
    ddx = DiffOp.d_dx(1.0)
    for _ in range(n):
        core = apply_diffop(ddx, core)
    amp = p.A_ab * (-p.C_ab) ** n
    return PolyGauss(core.poly.scale(amp), -p.w_exponent / 2)


def Psi_n_ladder(p: EllipseParams, n: int) -> PolyGauss:
    """Psi_n as C_ab^n (P*_ab)^n Psi_0: the independent construction."""
    f = Psi0(p)
    for _ in range(n):
        f = apply_ladder(p, "p_star", f)
    return f.scale(p.C_ab**n)


# ---------------------------------------------------------------------------
# Ladder and oscillator operators
# ---------------------------------------------------------------------------


def ladder_diffops(p: EllipseParams) -> tuple[DiffOp, DiffOp, DiffOp]:
    """(P_ab, P*_ab, H_ab) on the line, h = 1.

    P_ab = d/dx + w x annihilates Psi_0; H_ab = P* P + alpha^2/(1+beta^2).
    (The x^2 coefficient of H_ab is |w|^2, as composition makes explicit.)
    """
    w = p.w_exponent
    P = DiffOp({(0, 1): 1j, (1, 0): w}, 1.0)  # d/dx = i hD at h = 1
    Pstar = DiffOp({(0, 1): -1j, (1, 0): w.conjugate()}, 1.0)
    H = Pstar.compose(P).add(DiffOp({(0, 0): p.eigen_gap}, 1.0))
    return P, Pstar, H


def apply_ladder(p: EllipseParams, which: str, f):
    """Apply a named operator.

    ``lambda`` and ``lambda_star`` act on :class:`HoloGauss`;
    ``p``, ``p_star`` and ``h`` act on :class:`PolyGauss`.
    """
    if which == "lambda":
        if not isinstance(f, HoloGauss):
            raise DomainError("lambda acts on HoloGauss")
        return holo_add(
            holo_scale(holo_differentiate(f), 1 / p.a),
            holo_scale(holo_multiply_z(f), 0.5),
        )
    if which == "lambda_star":
        if not isinstance(f, HoloGauss):
            raise DomainError("lambda_star acts on HoloGauss")
        return holo_add(
            holo_differentiate(f),
            holo_scale(holo_multiply_z(f), (p.a + 2 * p.lam) / 2),
        )
    if which in ("p", "p_star", "h"):
        if not isinstance(f, PolyGauss):
            raise DomainError(f"{which} acts on PolyGauss")
        P, Pstar, H = ladder_diffops(p)
        op = {"p": P, "p_star": Pstar, "h": H}[which]
        return apply_diffop(op, f)
    raise DomainError(f"unknown operator {which!r}")


# ---------------------------------------------------------------------------
# Bridge and geometry
# ---------------------------------------------------------------------------


def bridge_params(p: EllipseParams) -> PhaseParams:
    """Phase data whose Hermite system is collinear with (Psi_n).

    A = i(1+beta^2)/(2 alpha^2), B = -i,
    C = ((alpha^2+beta^2+1) beta + i alpha^2)/(1+beta^2);
    Im C = alpha^2/(1+beta^2) > 0, so the bridged eigenvalues
    h Im C / |B|^2 (2n+1) match ``eigen_gap * (2n+1)``.
    """
    s = p.alpha**2 + p.beta**2 + 1
    denom = 1 + p.beta**2
    return PhaseParams(
        1j * denom / (2 * p.alpha**2),
        -1j,
        complex(s * p.beta, p.alpha**2) / denom,
        1.0,
    )


def zeta_map(p: EllipseParams, z: complex) -> complex:
    """z = x - i xi  ->  zeta = alpha x - i (beta x + xi)."""
    x = z.real
    xi = -z.imag
    return complex(p.alpha * x, -(p.beta * x + xi))


def zeta_inverse(p: EllipseParams, zeta: complex) -> complex:
    """Inverse of :func:`zeta_map` (solving the z/conj(z) linear system)."""
    al, be = p.alpha, p.beta
    return (
        complex(al + 1, be) * zeta - complex(al - 1, -be) * zeta.conjugate()
    ) / (2 * al)


def ellipse_trace(
    p: EllipseParams, rho: float, samples: int = 256
) -> list[tuple[float, float]]:
    """(x, xi) samples of the boundary |zeta| = rho of the elliptic disk."""
    if not rho > 0:
        raise DomainError("rho must be positive")
    out = []
    for k in range(samples):
        zeta = rho * cmath.exp(2j * math.pi * k / samples)
        z = zeta_inverse(p, zeta)
        out.append((z.real, -z.imag))
    return out
