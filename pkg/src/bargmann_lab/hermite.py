"""Generalized Hermite system, ladder operators, and the modified oscillator.

For phase data (B, C, h) with the canonical choice of A, the transform sends
an explicit orthonormal family on the line -- the generalized Hermite
functions ``phi_n`` -- onto the normalized monomials ``varphi_n`` of the
weighted holomorphic space.  The ``phi_n`` are simultaneously:

* eigenfunctions of the modified oscillator
  ``H = (1/|B|^2) OpW(xi^2 + |C|^2 x^2 + 2 Re(C) x xi)`` with eigenvalues
  ``(h Im C / |B|^2) (2n + 1)``,
* a ladder family: ``phi_{n+1} = B P* phi_n / sqrt((n+1) 2 h Im C)`` with
  ``P* = -(hD + Cx)/B``,
* given by a Rodrigues formula (n-fold hD derivative of a plain Gaussian).

Everything here is exact ``PolyGauss`` algebra; quadrature appears only as
the independent Gram-matrix oracle.
"""

from __future__ import annotations

import math
import threading

import numpy as np

from .gaussalg import (
    ComplexPoly,
    DiffOp,
    DomainError,
    HoloGauss,
    PolyGauss,
    apply_diffop,
    inner_product_line,
    norm_line,
)
from .phasecore import PhaseParams, canonical_A

__all__ = ["HermiteSystem", "gram_deviation"]


class HermiteSystem:
    """Phase data with canonical A, plus a thread-safe cache of phi_n.

    A non-canonical ``A`` in the input is replaced by ``canonical_A(B, C)``
    (the original is kept in ``original_A``): the general-A system differs
    only by a z-side phase twist that the line-side family does not see.
    """

    def __init__(self, params: PhaseParams):
        a_canon = canonical_A(params.B, params.C)
        self.original_A = params.A
        self.params = PhaseParams(a_canon, params.B, params.C, params.h)
        self._phi_cache: list[PolyGauss] = [self._phi0()]
        self._lock = threading.Lock()

    @classmethod
    def from_bch(cls, B: complex, C: complex, h: float = 1.0) -> "HermiteSystem":
        return cls(PhaseParams(canonical_A(B, C), B, C, h))

    # -- constructions -----------------------------------------------------

    def _phi0(self) -> PolyGauss:
        p = self.params
        amp = (p.C.imag / (math.pi * p.h)) ** 0.25
        return PolyGauss(
            ComplexPoly((complex(amp),)),
            -1j * p.C.conjugate() / (2 * p.h),
        )

    def hermite_phi(self, n: int) -> PolyGauss:
        """n-th generalized Hermite function, by the ladder recursion."""
        if n < 0:
            raise DomainError("index must be >= 0")
        with self._lock:
            p = self.params
            _, pstar, _ = self.ladder_ops()
            while len(self._phi_cache) <= n:
                m = len(self._phi_cache)  # building phi_m from phi_{m-1}
                up = apply_diffop(pstar, self._phi_cache[-1])
                factor = p.B / _sqrt_pos(m * 2 * p.h * p.C.imag)
                self._phi_cache.append(up.scale(factor))
            return self._phi_cache[n]

    def rodrigues_phi(self, n: int) -> PolyGauss:
        """Same function by the independent Rodrigues route.

        ``(Im C/pi h)^{1/4} (1/sqrt n!) (-1/sqrt(2 h Im C))^n
        e^{(Im C - i Re C) x^2 / 2h} (hD)^n e^{-Im C x^2 / h}``
        -- used as the in-package cross-check for :meth:`hermite_phi`.
        """
        if n < 0:
            raise DomainError("index must be >= 0")
        p = self.params
        core = PolyGauss(ComplexPoly.one(), -p.C.imag / p.h)
        hd = DiffOp.hD(p.h)
        for _ in range(n):
            core = apply_diffop(hd, core)
        amp = (
            (p.C.imag / (math.pi * p.h)) ** 0.25
            / math.sqrt(math.factorial(n))
            * (-1 / math.sqrt(2 * p.h * p.C.imag)) ** n
        )
        # reattach the exponent: e^{(ImC - iReC) x^2/2h} * e^{-ImC x^2/h}
        #                      = e^{-i conj(C) x^2 / 2h}
        return PolyGauss(
            core.poly.scale(amp),
            -1j * p.C.conjugate() / (2 * p.h),
        )

    def monomial_basis(self, n: int) -> HoloGauss:
        """Orthonormal monomial varphi_n of the weighted holomorphic space."""
        if n < 0:
            raise DomainError("index must be >= 0")
        p = self.params
        s = 2 * p.h * p.C.imag
        amp = (
            abs(p.B)
            / math.sqrt(2 * math.pi * p.h * p.C.imag)
            / math.sqrt(math.factorial(n))
        )
        coeff = amp * (p.B / _sqrt_pos(s)) ** n
        return HoloGauss(ComplexPoly.monomial(n, coeff))

    # -- operators ----------------------------------------------------------

    def ladder_ops(self) -> tuple[DiffOp, DiffOp, DiffOp]:
        """(P, P*, H): annihilation, creation, modified oscillator.

        P  = -(hD + conj(C) x)/conj(B)
        P* = -(hD + C x)/B
        H  = (1/|B|^2) (hD^2 + |C|^2 x^2 + 2 Re(C) (x hD + h/2i))
           = P* P + h Im C/|B|^2.
        """
        p = self.params
        P = DiffOp(
            {(0, 1): -1 / p.B.conjugate(), (1, 0): -p.C.conjugate() / p.B.conjugate()},
            p.h,
        )
        Pstar = DiffOp({(0, 1): -1 / p.B, (1, 0): -p.C / p.B}, p.h)
        b2 = abs(p.B) ** 2
        two_re_c = p.C + p.C.conjugate()
        H = DiffOp(
            {
                (0, 2): 1 / b2,
                (2, 0): abs(p.C) ** 2 / b2,
                (1, 1): two_re_c / b2,
                (0, 0): two_re_c * p.h / (2j * b2),
            },
            p.h,
        )
        return P, Pstar, H

    def eigenvalue(self, n: int) -> float:
        """mu_n = (h Im C / |B|^2) (2n + 1)."""
        p = self.params
        return p.h * p.C.imag / abs(p.B) ** 2 * (2 * n + 1)

    def eigen_residual(self, n: int) -> float:
        """Relative residual ||H phi_n - mu_n phi_n|| / ||phi_n||, exact.

        Returns ``inf`` when the norm evaluation collapses to zero, which
        happens past the float64 cancellation floor (roughly n > 30): the
        residual is then numerically indeterminate and must not certify.
        """
        phi = self.hermite_phi(n)
        _, _, H = self.ladder_ops()
        r = apply_diffop(H, phi).add(phi.scale(-self.eigenvalue(n)))
        denom = norm_line(phi)
        if denom == 0.0:
            return math.inf
        return norm_line(r) / denom

    # -- Gram matrices -------------------------------------------------------

    def gram_matrix(self, N: int, method: str = "exact") -> np.ndarray:
        """Gram matrix of (phi_0, ..., phi_{N-1}).

        ``exact`` sums closed-form Gaussian moments; ``quadrature`` is the
        independent Gauss-Hermite oracle on the line (the combined exponent
        of phi_m conj(phi_n) is a real Gaussian, so the rule is exact up to
        round-off, with nodes from numpy rather than from our algebra).
        """
        if method not in ("exact", "quadrature"):
            raise DomainError(f"unknown method {method!r}")
        phis = [self.hermite_phi(n) for n in range(N)]
        G = np.empty((N, N), dtype=complex)
        if method == "exact":
            for m in range(N):
                for n in range(m, N):
                    v = inner_product_line(phis[m], phis[n])
                    G[m, n] = v
                    G[n, m] = v.conjugate()
            return G
        p = self.params
        t, w = np.polynomial.hermite.hermgauss(200)
        scale = math.sqrt(p.h / p.C.imag)  # combined decay e^{-ImC x^2/h}
        x = t * scale
        vals = np.array([[f(xi) for xi in x] for f in phis])
        wx = w * scale  # e^{+t^2} folded into the sampled Gaussians below
        osc = np.exp(
            (p.C.imag / p.h) * x * x
        )  # cancel each factor's decay once: f conj(g) e^{t^2} stays polynomial
        for m in range(N):
            for n in range(N):
                G[m, n] = np.sum(wx * vals[m] * np.conj(vals[n]) * osc)
        return G


def _sqrt_pos(s: float) -> float:
    """sqrt of a positive real quantity (guard against tiny negatives)."""
    if not s > 0:
        raise DomainError(f"expected positive quantity, got {s}")
    return math.sqrt(s)


def gram_deviation(G: np.ndarray) -> float:
    """Max-entry deviation from the identity."""
    return float(np.max(np.abs(G - np.eye(G.shape[0]))))
