"""The non-compact quantum dilogarithm Psi_b by contour quadrature.

    Psi_b(z) = exp( 1/4 * int_Omega exp(-2izw) / (sinh(bw) sinh(w/b)) dw/w )

Omega is the real line with a small upper half-circle around the triple pole
at 0.  Inside the strip |Im z| < (b + 1/b)/2 the integral converges; outside
it the two functional equations walk z back into the strip.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, replace

from scipy.integrate import IntegrationWarning, quad

MAX_SHIFTS = 64
MAX_W = 4000.0


class QuadratureError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QDParams:
    b: float
    r: float = 0.1
    W: float | None = None  # None: 40/(b + 1/b), raised as needed by the tail bound
    N: int = 400  # subinterval budget per quadrature
    tol: float = 1e-10

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError("b must be positive")
        if not 0 < self.r < math.pi * min(self.b, 1 / self.b):
            raise ValueError("detour radius must stay below the first poles on the imaginary axis")
        if self.W is not None and self.W <= self.r:
            raise ValueError("truncation W must exceed the detour radius")

    @property
    def Q(self) -> float:
        return self.b + 1 / self.b

    def doubled(self) -> "QDParams":
        return replace(self, W=2 * self.truncation(0j), N=2 * self.N)

    def truncation(self, z: complex) -> float:
        base = 40 / self.Q if self.W is None else self.W
        rate = self.Q - 2 * abs(z.imag)
        if rate <= 0:
            return math.inf
        # 1/4 * tail <= 2 exp(-rate W) / (c W rate); c from the (1 - e^-2bW)(1 - e^-2W/b) factor
        w = max(base, 1.0)
        for _ in range(200):
            c = -math.expm1(-2 * self.b * w) * -math.expm1(-2 * w / self.b)
            if 2 * math.exp(-rate * w) / (c * w * rate) < self.tol * 1e-3:
                break
            w *= 1.1
        return max(base, w)


@dataclass(frozen=True)
class PsiValue:
    value: complex
    est_error: float
    shifts: int = 0

    def to_json(self) -> dict:
        v = self.value
        return {"re": v.real, "im": v.imag, "abs": abs(v), "est_error": self.est_error, "shifts": self.shifts}


def _line_integrand(w: float, z: complex, b: float, Q: float) -> complex:
    # contributions of w and -w combined; 1/(sinh sinh) written with decaying exponentials
    den = w * -math.expm1(-2 * b * w) * -math.expm1(-2 * w / b)
    return 4 * (cmath.exp(-2j * z * w - Q * w) - cmath.exp(2j * z * w - Q * w)) / den


def _arc_integrand(theta: float, z: complex, b: float, r: float) -> complex:
    # w = r e^{i theta}, theta from pi down to 0; dw/w = i dtheta
    w = r * cmath.exp(1j * theta)
    return -1j * cmath.exp(-2j * z * w) / (cmath.sinh(b * w) * cmath.sinh(w / b))


def _cquad(f, a, c, p: QDParams):
    eps = p.tol * 1e-3
    # a component that integrates to ~0 trips quad's roundoff detector; its abserr is still reported
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        re, e1 = quad(lambda t: f(t).real, a, c, limit=p.N, epsabs=eps, epsrel=1e-12)
        im, e2 = quad(lambda t: f(t).imag, a, c, limit=p.N, epsabs=eps, epsrel=1e-12)
    return complex(re, im), e1 + e2


def log_psi_direct(z: complex, p: QDParams) -> tuple[complex, float]:
    """1/4 of the contour integral, valid in the strip; returns (value, error estimate)."""
    z = complex(z)
    W = p.truncation(z)
    if W > MAX_W:
        raise QuadratureError(f"tail at Im z = {z.imag} needs W = {W:.0f}")
    b, Q = p.b, p.Q
    # the line part oscillates with period pi/|Re z|; cut it into pieces so quad sees few periods
    n = max(1, min(64, int(abs(z.real) * W / 20) + 1))
    pts = [p.r + (W - p.r) * k / n for k in range(n + 1)]
    line, err = 0j, 0.0
    for a, c in zip(pts, pts[1:]):
        v, e = _cquad(lambda w: _line_integrand(w, z, b, Q), a, c, p)
        line += v
        err += e
    arc, e = _cquad(lambda t: _arc_integrand(t, z, b, p.r), 0.0, math.pi, p)
    err += e
    rate = Q - 2 * abs(z.imag)
    c = -math.expm1(-2 * b * W) * -math.expm1(-2 * W / b)
    tail = 8 * math.exp(-rate * W) / (c * W * rate)
    total = (line + arc) / 4
    return total, (err + tail) / 4


def psi_b(z: complex, p: QDParams | float) -> complex:
    return psi_b_detailed(z, p).value


def psi_b_detailed(z: complex, p: QDParams | float) -> PsiValue:
    if not isinstance(p, QDParams):
        p = QDParams(b=float(p))
    z = complex(z)
    b = p.b
    factor = 1 + 0j
    shifts = 0
    half = p.Q / 2
    s = min(b, 1 / b)
    # step with the shorter period until the decay rate of the integrand is comfortable
    while abs(z.imag) >= half or p.truncation(z) > MAX_W:
        if shifts >= MAX_SHIFTS:
            raise QuadratureError(f"more than {MAX_SHIFTS} functional-equation steps needed")
        if z.imag > 0:
            # Psi(v) = Psi(v - is) / (1 + e^{2 pi s (v - is/2)})
            d = 1 + cmath.exp(2 * math.pi * s * (z - 0.5j * s))
            if d == 0:
                raise ZeroDivisionError(f"Psi_b has a pole at {z}")
            factor /= d
            z -= 1j * s
        else:
            # Psi(v) = (1 + e^{2 pi s (v + is/2)}) Psi(v + is)
            factor *= 1 + cmath.exp(2 * math.pi * s * (z + 0.5j * s))
            z += 1j * s
        shifts += 1
    lg, err = log_psi_direct(z, p)
    v = cmath.exp(lg)
    return PsiValue(factor * v, abs(factor * v) * err, shifts)


def zeta_const(b: float) -> complex:
    if not b > 0:
        raise ValueError("b must be positive")
    return cmath.exp(-1j * math.pi * (b + 1 / b) ** 2 / 12)


def psi_at_zero_closed_form(b: float) -> complex:
    """Psi_b(0) = exp(i pi (b^2 + b^-2) / 24), a classical evaluation used as an oracle."""
    return cmath.exp(1j * math.pi * (b * b + 1 / (b * b)) / 24)


def functional_residuals(z: complex, p: QDParams | float) -> tuple[float, float]:
    """Residuals of the b- and 1/b-functional equations at z."""
    if not isinstance(p, QDParams):
        p = QDParams(b=float(p))
    out = []
    for s in (p.b, 1 / p.b):
        lhs = psi_b(z - 0.5j * s, p)
        rhs = (1 + cmath.exp(2 * math.pi * s * z)) * psi_b(z + 0.5j * s, p)
        out.append(abs(lhs - rhs))
    return tuple(out)


GRID_Z = (-1.0, -0.3, 0.0, 0.3, 1.0)
GRID_B = (0.7, 1.1)


def check_grid(zs=GRID_Z, bs=GRID_B) -> dict:
    """Unitarity, functional equations and doubling stability on the test grid."""
    rows = []
    worst = {"unitarity": 0.0, "functional": 0.0, "doubling": 0.0}
    for b in bs:
        p = QDParams(b=b)
        for x in zs:
            v = psi_b(x, p)
            unit = abs(abs(v) - 1)
            fe = max(functional_residuals(x, p))
            dbl = abs(psi_b(x, p.doubled()) - v)
            rows.append({"b": b, "z": x, "unitarity": unit, "functional": fe, "doubling": dbl})
            worst["unitarity"] = max(worst["unitarity"], unit)
            worst["functional"] = max(worst["functional"], fe)
            worst["doubling"] = max(worst["doubling"], dbl)
    ok = worst["unitarity"] < 1e-8 and worst["functional"] < 1e-6 and worst["doubling"] < 1e-9
    return {"rows": rows, "worst": worst, "ok": ok}


__all__ = [
    "QDParams", "PsiValue", "QuadratureError", "psi_b", "psi_b_detailed", "zeta_const",
    "functional_residuals", "check_grid", "psi_at_zero_closed_form", "log_psi_direct",
]
