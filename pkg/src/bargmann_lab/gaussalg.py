"""Exact algebra of complex polynomial-times-Gaussian functions.

Everything downstream (transforms, Hermite systems, oscillator spectra,
localization eigenvalues) is built on three closed classes:

* ``ComplexPoly``    -- polynomials with complex coefficients,
* ``PolyGauss``      -- ``x -> poly(x) * exp(gamma2*x**2 + gamma1*x)`` on the line,
* ``HoloGauss``      -- ``z -> poly(z) * exp(c2*z**2 + c1*z)`` on the plane,

together with first/second-order differential operators (``DiffOp``) acting
exactly on ``PolyGauss``.  Inner products on the line reduce to the closed-form
moments of a complex Gaussian (``gaussian_moment``), so orthogonality and
eigen-relations can be certified to round-off rather than quadrature accuracy.
Quadrature enters only as an independent oracle in the test suite.

All values are immutable; all functions are pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

#: Hard cap on stored polynomial degree.  High enough for every certified
#: index range (n <= 20 eigenfunctions, Gram blocks to n = 15, products of
#: those), low enough to catch runaway recursions immediately.
DEGREE_CAP = 64

_COEFF_TOL = 1e-12  # relative tolerance for "same exponent" checks


class DomainError(ValueError):
    """Mathematically invalid input (non-integrable exponent, bad parameter)."""


class DegreeCapError(DomainError):
    """A polynomial operation tried to exceed :data:`DEGREE_CAP`."""


class BargmannClassError(DomainError):
    """A ``HoloGauss`` left the declared weighted-space growth class."""


# ---------------------------------------------------------------------------
# ComplexPoly
# ---------------------------------------------------------------------------


def _trim(coeffs: Iterable[complex]) -> tuple[complex, ...]:
    """Strip exactly-zero leading (highest-degree) coefficients."""
    out = [complex(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    if not out:
        out = [0j]
    return tuple(out)


@dataclass(frozen=True)
class ComplexPoly:
    """Polynomial with complex coefficients, stored degree-ascending.

    The zero polynomial is ``(0j,)``.  Otherwise the leading (last)
    coefficient is nonzero and ``degree == len(coeffs) - 1``.

    Construct via :meth:`from_coeffs` for automatic trimming; the raw
    constructor trusts its input.
    """

    coeffs: tuple[complex, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[complex]) -> "ComplexPoly":
        c = _trim(coeffs)
        if len(c) - 1 > DEGREE_CAP:
            raise DegreeCapError(
                f"degree {len(c) - 1} exceeds cap {DEGREE_CAP}"
            )
        return ComplexPoly(c)

    @staticmethod
    def zero() -> "ComplexPoly":
        return ComplexPoly((0j,))

    @staticmethod
    def one() -> "ComplexPoly":
        return ComplexPoly((1 + 0j,))

    @staticmethod
    def monomial(n: int, coeff: complex = 1.0) -> "ComplexPoly":
        if n > DEGREE_CAP:
            raise DegreeCapError(f"degree {n} exceeds cap {DEGREE_CAP}")
        return ComplexPoly.from_coeffs((0j,) * n + (complex(coeff),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0j,) * (n - len(self.coeffs))
        b = other.coeffs + (0j,) * (n - len(other.coeffs))
        return ComplexPoly.from_coeffs(x + y for x, y in zip(a, b))

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self + other.scale(-1)

    def scale(self, c: complex) -> "ComplexPoly":
        if c == 0:
            return ComplexPoly.zero()
        return ComplexPoly.from_coeffs(c * a for a in self.coeffs)

    def __mul__(self, other: "ComplexPoly") -> "ComplexPoly":
        return ComplexPoly.from_coeffs(_convolve(self.coeffs, other.coeffs))

    def shift_up(self, n: int = 1) -> "ComplexPoly":
        """Multiply by ``x**n``."""
        if self.is_zero:
            return self
        return ComplexPoly.from_coeffs((0j,) * n + self.coeffs)

    def derivative(self) -> "ComplexPoly":
        if len(self.coeffs) == 1:
            return ComplexPoly.zero()
        return ComplexPoly.from_coeffs(
            k * c for k, c in enumerate(self.coeffs) if k > 0
        )

    def conjugate(self) -> "ComplexPoly":
        """Coefficient-wise conjugate; equals conj(p(x)) for real x."""
        return ComplexPoly(tuple(c.conjugate() for c in self.coeffs))

    def compose_affine(self, b0: complex, b1: complex) -> "ComplexPoly":
        """Return ``p(b0 + b1*x)`` (Horner in the affine argument)."""
        acc = ComplexPoly.zero()
        lin = ComplexPoly.from_coeffs((b0, b1))
        for c in reversed(self.coeffs):
            acc = acc * lin + ComplexPoly((complex(c),))
        return acc


def _convolve(a: tuple[complex, ...], b: tuple[complex, ...]) -> list[complex]:
    """Coefficient convolution with compensated (exact) accumulation.

    Each output coefficient is a correctly rounded sum of the cross products;
    this keeps high-degree cancellation (Hermite-type alternating signs) at
    the rounding error of the individual products.
    """
    la, lb = len(a), len(b)
    out: list[complex] = []
    for k in range(la + lb - 1):
        lo = max(0, k - lb + 1)
        hi = min(k + 1, la)
        re: list[float] = []
        im: list[float] = []
        for i in range(lo, hi):
            ai = a[i]
            bj = b[k - i]
            re.append(ai.real * bj.real)
            re.append(-ai.imag * bj.imag)
            im.append(ai.real * bj.imag)
            im.append(ai.imag * bj.real)
        out.append(complex(math.fsum(re), math.fsum(im)))
    return out


# ---------------------------------------------------------------------------
# PolyGauss / HoloGauss
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyGauss:
    """``x -> poly(x) * exp(gamma2*x**2 + gamma1*x)`` on the real line.

    ``Re(gamma2) < 0`` is enforced (square-integrability), except for the
    identically-zero function, which is accepted with any exponent.
    """

    poly: ComplexPoly
    gamma2: complex
    gamma1: complex = 0j

    def __post_init__(self) -> None:
        if not self.poly.is_zero and not self.gamma2.real < 0:
            raise DomainError(
                f"Re(gamma2) = {self.gamma2.real} must be negative"
            )

    def __call__(self, x: float) -> complex:
        return self.poly(x) * cmath.exp(self.gamma2 * x * x + self.gamma1 * x)

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def scale(self, c: complex) -> "PolyGauss":
        return PolyGauss(self.poly.scale(c), self.gamma2, self.gamma1)

    def add(self, other: "PolyGauss") -> "PolyGauss":
        """Sum of two functions *with the same exponent* (else DomainError)."""
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if not (
            _close(self.gamma2, other.gamma2) and _close(self.gamma1, other.gamma1)
        ):
            raise DomainError("cannot add PolyGauss with different exponents")
        return PolyGauss(self.poly + other.poly, self.gamma2, self.gamma1)

    def conj(self) -> "PolyGauss":
        """The function ``x -> conj(self(x))`` for real x, as a PolyGauss."""
        return PolyGauss(
            self.poly.conjugate(),
            self.gamma2.conjugate(),
            self.gamma1.conjugate(),
        )


@dataclass(frozen=True)
class HoloGauss:
    """Entire function ``z -> poly(z) * exp(c2*z**2 + c1*z)``.

    Membership in the weighted Bargmann space with weight ``exp(-|z|**2/2h)``
    requires ``|c2| < 1/(4h)``; this is *not* enforced at construction (the
    algebra is useful on the whole class) but can be demanded via
    :meth:`require_bargmann`.
    """

    poly: ComplexPoly
    c2: complex = 0j
    c1: complex = 0j

    def __call__(self, z: complex) -> complex:
        return self.poly(z) * cmath.exp(self.c2 * z * z + self.c1 * z)

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def in_bargmann_class(self, h: float) -> bool:
        return self.is_zero or abs(self.c2) < 1.0 / (4.0 * h)

    def require_bargmann(self, h: float) -> "HoloGauss":
        if not self.in_bargmann_class(h):
            raise BargmannClassError(
                f"|c2| = {abs(self.c2)} >= 1/(4h) = {1.0 / (4 * h)}: "
                "outside the weighted-space growth class"
            )
        return self


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= _COEFF_TOL * max(1.0, abs(a), abs(b))


# ---------------------------------------------------------------------------
# Holomorphic algebra (exact operations on HoloGauss)
# ---------------------------------------------------------------------------


def holo_differentiate(f: HoloGauss) -> HoloGauss:
    """d/dz, exact: (p e^{c2 z^2+c1 z})' = (p' + (2 c2 z + c1) p) e^{...}."""
    p = f.poly.derivative() + (f.poly.shift_up().scale(2 * f.c2) + f.poly.scale(f.c1))
    return HoloGauss(p, f.c2, f.c1)


def holo_multiply_z(f: HoloGauss) -> HoloGauss:
    return HoloGauss(f.poly.shift_up(), f.c2, f.c1)


def holo_multiply_exp(f: HoloGauss, c2: complex, c1: complex = 0j) -> HoloGauss:
    """Multiply by ``exp(c2*z**2 + c1*z)``.

    May leave the weighted-space growth class; check
    :meth:`HoloGauss.require_bargmann` where membership is asserted.
    """
    return HoloGauss(f.poly, f.c2 + c2, f.c1 + c1)


def holo_scale(f: HoloGauss, c: complex) -> HoloGauss:
    return HoloGauss(f.poly.scale(c), f.c2, f.c1)


def holo_add(f: HoloGauss, g: HoloGauss) -> HoloGauss:
    if g.is_zero:
        return f
    if f.is_zero:
        return g
    if not (_close(f.c2, g.c2) and _close(f.c1, g.c1)):
        raise DomainError("cannot add HoloGauss with different exponents")
    return HoloGauss(f.poly + g.poly, f.c2, f.c1)


# ---------------------------------------------------------------------------
# Closed-form Gaussian integrals
# ---------------------------------------------------------------------------


def gauss_integral(rho: float, theta: float) -> complex:
    """Integral of ``exp(-rho**2 * e^{2i*theta} * t**2)`` over the real line.

    Equals ``sqrt(pi) / (rho * e^{i*theta})`` for ``rho > 0`` and
    ``|2*theta| < pi/2`` (rotating the contour keeps the integrand decaying).

    Raises
    ------
    DomainError
        If ``rho <= 0`` or ``|2*theta| >= pi/2``.
    """
    if not rho > 0:
        raise DomainError(f"rho = {rho} must be positive")
    if not abs(2 * theta) < math.pi / 2:
        raise DomainError(f"|2*theta| = {abs(2 * theta)} must be < pi/2")
    return math.sqrt(math.pi) / (rho * cmath.exp(1j * theta))


def gaussian_moment(gamma2: complex, gamma1: complex, k: int) -> complex:
    """Closed form of ``integral of x**k * exp(gamma2 x**2 + gamma1 x) dx`` on R.

    Completing the square shifts to centered moments
    ``E_{2m} = Gamma(m + 1/2) * (-gamma2)**(-m-1/2)`` (odd ones vanish), then
    the binomial theorem restores the shift.  Requires ``Re(gamma2) < 0``.
    """
    if not gamma2.real < 0:
        raise DomainError(f"Re(gamma2) = {gamma2.real} must be negative")
    if k < 0:
        raise DomainError("moment order must be >= 0")
    shift = -gamma1 / (2 * gamma2)  # x = t + shift
    even = _centered_even_moments(gamma2, k)
    prefac = cmath.exp(-gamma1 * gamma1 / (4 * gamma2))
    total = 0j
    # x^k = sum_j C(k,j) t^j shift^(k-j); odd-j centered moments vanish
    for j in range(0, k + 1, 2):
        total += math.comb(k, j) * shift ** (k - j) * even[j // 2]
    return prefac * total


def _centered_even_moments(gamma2: complex, k: int) -> list[complex]:
    """``[E_0, E_2, ..., E_{2m}]`` with ``E_{2m} = int t^{2m} e^{gamma2 t^2} dt``."""
    e = [cmath.sqrt(math.pi / -gamma2)]
    for m in range(1, k // 2 + 1):
        e.append(e[-1] * (2 * m - 1) / (-2 * gamma2))
    return e


def reduced_moment_polys(gamma2: complex, max_k: int) -> list[ComplexPoly]:
    """Polynomials ``Q_k(u)`` with ``int x^k e^{gamma2 x^2 + u x} dx = e^{-u^2/(4 gamma2)} Q_k(u)``.

    Used by the transform's closed-form path, where the linear exponent ``u``
    is itself an affine function of the output variable.  From the same
    completion of the square as :func:`gaussian_moment`:

        Q_k(u) = sum_{j even, j<=k} C(k,j) * E_j * (-u/(2 gamma2))**(k-j).
    """
    if not gamma2.real < 0:
        raise DomainError(f"Re(gamma2) = {gamma2.real} must be negative")
    even = _centered_even_moments(gamma2, max_k)
    s = -1 / (2 * gamma2)  # shift = s*u
    out = []
    for k in range(max_k + 1):
        coeffs = [0j] * (k + 1)
        for j in range(0, k + 1, 2):
            coeffs[k - j] = math.comb(k, j) * even[j // 2] * s ** (k - j)
        out.append(ComplexPoly.from_coeffs(coeffs))
    return out


def inner_product_line(f: PolyGauss, g: PolyGauss) -> complex:
    """L2(R) inner product ``int f(x) * conj(g(x)) dx``, exact.

    Conjugating ``g`` on the real line is coefficient-wise; the product's
    moments come from :func:`gaussian_moment`.  Conjugate-symmetric and
    sesquilinear by construction.

    Raises
    ------
    DomainError
        If the combined exponent is not integrable
        (``Re(f.gamma2 + conj(g.gamma2)) >= 0``).
    """
    if f.is_zero or g.is_zero:
        return 0j
    gc = g.conj()
    g2 = f.gamma2 + gc.gamma2
    g1 = f.gamma1 + gc.gamma1
    if not g2.real < 0:
        raise DomainError(
            f"combined exponent Re = {g2.real} not integrable"
        )
    prod = _convolve(f.poly.coeffs, gc.poly.coeffs)  # no cap: transient value
    even = _centered_even_moments(g2, len(prod) - 1)
    shift = -g1 / (2 * g2)
    prefac = cmath.exp(-g1 * g1 / (4 * g2))
    term_re: list[float] = []
    term_im: list[float] = []
    for k, ck in enumerate(prod):
        if ck == 0:
            continue
        for j in range(0, k + 1, 2):
            t = ck * (math.comb(k, j) * shift ** (k - j) * even[j // 2])
            term_re.append(t.real)
            term_im.append(t.imag)
    return prefac * complex(math.fsum(term_re), math.fsum(term_im))


def norm_line(f: PolyGauss) -> float:
    """L2(R) norm, exact (square root of the self inner product)."""
    return math.sqrt(max(inner_product_line(f, f).real, 0.0))


# ---------------------------------------------------------------------------
# Differential operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiffOp:
    """Finite sum ``sum coeff * x**j * (hD)**k`` with ``hD = -i*h*d/dx``.

    ``terms`` maps ``(j, k)`` to the coefficient; a term acts as
    ``f -> coeff * x**j * (hD)**k f`` (differentiate first, then multiply).
    The named operators of the artifact all have ``j + k <= 2``, but
    composition is supported for arbitrary orders (needed to verify
    operator identities like ``H = P*P + const``).
    """

    terms: Mapping[tuple[int, int], complex]
    h: float

    def __post_init__(self) -> None:
        if not self.h > 0:
            raise DomainError(f"h = {self.h} must be positive")
        clean = {}
        for (j, k), c in self.terms.items():
            if j < 0 or k < 0:
                raise DomainError(f"negative exponent in term {(j, k)}")
            if c != 0:
                clean[(int(j), int(k))] = complex(c)
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def identity(h: float) -> "DiffOp":
        return DiffOp({(0, 0): 1.0}, h)

    @staticmethod
    def x_mult(h: float) -> "DiffOp":
        return DiffOp({(1, 0): 1.0}, h)

    @staticmethod
    def hD(h: float) -> "DiffOp":
        return DiffOp({(0, 1): 1.0}, h)

    @staticmethod
    def d_dx(h: float) -> "DiffOp":
        """Plain d/dx = (i/h) * hD."""
        return DiffOp({(0, 1): 1j / h}, h)

    def scale(self, c: complex) -> "DiffOp":
        return DiffOp({jk: c * v for jk, v in self.terms.items()}, self.h)

    def add(self, other: "DiffOp") -> "DiffOp":
        self._check_h(other)
        out = dict(self.terms)
        for jk, v in other.terms.items():
            out[jk] = out.get(jk, 0j) + v
        return DiffOp(out, self.h)

    def compose(self, other: "DiffOp") -> "DiffOp":
        """Operator product self o other (self applied after other).

        Normal-ordering uses
        ``(hD)^k x^j = sum_m C(k,m) j!/(j-m)! (-i h)^m x^{j-m} (hD)^{k-m}``.
        """
        self._check_h(other)
        out: dict[tuple[int, int], complex] = {}
        for (j1, k1), c1 in self.terms.items():
            for (j2, k2), c2 in other.terms.items():
                # reorder (hD)^{k1} x^{j2} into normal form
                for m in range(0, min(k1, j2) + 1):
                    coeff = (
                        c1
                        * c2
                        * math.comb(k1, m)
                        * math.perm(j2, m)
                        * (-1j * self.h) ** m
                    )
                    jk = (j1 + j2 - m, k1 + k2 - m)
                    out[jk] = out.get(jk, 0j) + coeff
        return DiffOp(out, self.h)

    def max_coeff_diff(self, other: "DiffOp") -> float:
        """Largest coefficient deviation between two operators."""
        self._check_h(other)
        keys = set(self.terms) | set(other.terms)
        return max(
            (abs(self.terms.get(k, 0j) - other.terms.get(k, 0j)) for k in keys),
            default=0.0,
        )

    def _check_h(self, other: "DiffOp") -> None:
        if self.h != other.h:
            raise DomainError(f"mismatched h: {self.h} != {other.h}")


def apply_diffop(op: DiffOp, f: PolyGauss) -> PolyGauss:
    """Apply a :class:`DiffOp` exactly; the exponent is preserved.

    ``hD (p e^g) = -i h (p' + g' p) e^g`` with ``g' = 2 gamma2 x + gamma1``,
    iterated per term, then shifted by ``x**j`` and summed.
    """
    if f.is_zero:
        return f
    hd_powers = [f.poly]  # hd_powers[k] = polynomial part of (hD)^k f

    def hd_power(k: int) -> ComplexPoly:
        while len(hd_powers) <= k:
            p = hd_powers[-1]
            hd_powers.append(
                (
                    p.derivative()
                    + p.shift_up().scale(2 * f.gamma2)
                    + p.scale(f.gamma1)
                ).scale(-1j * op.h)
            )
        return hd_powers[k]

    acc = ComplexPoly.zero()
    for (j, k), c in sorted(op.terms.items()):
        acc = acc + hd_power(k).shift_up(j).scale(c)
    return PolyGauss(acc, f.gamma2, f.gamma1)
