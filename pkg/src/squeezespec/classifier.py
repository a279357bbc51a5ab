"""Spectral classification of hermitian quadratic Hamiltonians

    H = A(a+a + a a+) + B e^{i Phi} a^2 + B e^{-i Phi} a+^2 + C e^{i Psi} a + C e^{-i Psi} a+ + D

with A, B, C >= 0. The quadratic part is 4[A J0 + B(cos Phi J1 + sin Phi J2)],
so the sign of A^2 - B^2 (elliptic, hyperbolic or parabolic element of
su(1,1)) decides the spectral type.
"""
from dataclasses import dataclass, replace
from enum import Enum
import cmath
import math

import numpy as np

from .errors import DomainError

DEFAULT_TOL = 1e-12


class SpectrumKind(str, Enum):
    DISCRETE_EQUIDISTANT = "DiscreteEquidistant"
    DOUBLED_REAL_LINE = "DoubledRealLine"
    DOUBLED_HALF_AXIS = "DoubledHalfAxis"
    FULL_REAL_LINE = "FullRealLine"


@dataclass(frozen=True)
class QuadHamiltonian:
    A: float
    B: float
    C: float
    D: float = 0.0
    Phi: float = 0.0
    Psi: float = 0.0

    def __post_init__(self):
        for name in ("A", "B", "C", "D", "Phi", "Psi"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        for name in ("A", "B", "C"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)}")

    def matrix(self, N):
        """Dense N x N compression to span{|0>..|N-1>} from exact ladder elements."""
        n = np.arange(N, dtype=float)
        h = np.diag(self.A * (2 * n + 1) + self.D).astype(complex)
        s2 = np.sqrt((n[:-2] + 1) * (n[:-2] + 2))
        s1 = np.sqrt(n[1:])
        i2 = np.arange(N - 2)
        i1 = np.arange(N - 1)
        # <n|a^2|n+2> and <n|a|n+1>
        h[i2, i2 + 2] += self.B * cmath.exp(1j * self.Phi) * s2
        h[i2 + 2, i2] += self.B * cmath.exp(-1j * self.Phi) * s2
        h[i1, i1 + 1] += self.C * cmath.exp(1j * self.Psi) * s1
        h[i1 + 1, i1] += self.C * cmath.exp(-1j * self.Psi) * s1
        return h


@dataclass(frozen=True)
class SpectrumClassification:
    """Normal form of H.

    DiscreteEquidistant: levels scale * (2k+1)/4 + shift, each simple.
    DoubledRealLine: scale * J2 + shift, all of R twice.
    DoubledHalfAxis: [shift, inf) twice, scale = 4A.
    FullRealLine: all of R once; scale is the coefficient of p in the
    linear normal form and shift the constant of the parabolic form.
    ``alpha`` is the displacement removing the linear terms (A != B only).
    """

    kind: SpectrumKind
    scale: float
    shift: float
    alpha: complex | None
    multiplicity: int
    degenerate: bool = False

    def levels(self, count):
        if self.kind is not SpectrumKind.DISCRETE_EQUIDISTANT:
            raise DomainError(f"{self.kind.value} has no discrete levels")
        k = np.arange(count)
        return self.scale * (2 * k + 1) / 4.0 + self.shift

    def as_dict(self):
        out = {"kind": self.kind.value, "scale": self.scale, "shift": self.shift,
               "multiplicity": self.multiplicity, "degenerate": self.degenerate}
        out["alpha"] = None if self.alpha is None else {"re": self.alpha.real, "im": self.alpha.imag}
        return out


def _scaled(h):
    # A, B, C in units of max(A, B) so that A^2 - B^2 cannot underflow
    big = max(h.A, h.B)
    a, b = h.A / big, h.B / big
    return big, a, b, (a - b) * (a + b)


def _linear_shift(h):
    big, a, b, d = _scaled(h)
    c = h.C / big
    alpha = -c * (a * cmath.exp(-1j * h.Psi) - b * cmath.exp(1j * (h.Psi - h.Phi))) / (2 * d)
    shift = h.D - big * c * c * (a - b * math.cos(2 * h.Psi - h.Phi)) / (2 * d)
    # + 0.0 turns signed zeros into 0.0
    return complex(alpha.real + 0.0, alpha.imag + 0.0), shift


def classify(h, tol=DEFAULT_TOL):
    """Spectral type and normal-form parameters of ``h``.

    A and B count as equal when |A - B| <= tol * max(A, B), and Phi = 2 Psi
    (mod 2 pi) when |sin(Psi - Phi/2)| <= tol.
    """
    if not tol > 0:
        raise DomainError("tol must be > 0")
    A, B, C = h.A, h.B, h.C
    big = max(A, B)
    if A - B > tol * big:
        alpha, shift = _linear_shift(h)
        return SpectrumClassification(SpectrumKind.DISCRETE_EQUIDISTANT,
                                      4 * big * math.sqrt(_scaled(h)[3]), shift, alpha, 1)
    if B - A > tol * big:
        alpha, shift = _linear_shift(h)
        return SpectrumClassification(SpectrumKind.DOUBLED_REAL_LINE,
                                      4 * big * math.sqrt(-_scaled(h)[3]), shift, alpha, 2)
    if big == 0:
        if C == 0:
            return SpectrumClassification(SpectrumKind.DISCRETE_EQUIDISTANT, 0.0, h.D, 0j, 1,
                                          degenerate=True)
        return SpectrumClassification(SpectrumKind.FULL_REAL_LINE, C * math.sqrt(2), h.D, None, 1)
    A = 0.5 * (A + B)
    s = math.sin(h.Psi - h.Phi / 2)
    if C == 0 or abs(s) <= tol:
        return SpectrumClassification(SpectrumKind.DOUBLED_HALF_AXIS, 4 * A, h.D - C * C / (4 * A),
                                      None, 2)
    cos2 = 1.0 - s * s
    return SpectrumClassification(SpectrumKind.FULL_REAL_LINE, C * math.sqrt(2) * abs(s),
                                  h.D - C * C / (4 * A) * cos2, None, 1)


def instability_probe(h, epsilon, tol=DEFAULT_TOL):
    """(classify(A + eps), classify(B + eps)) for h at the critical point A = B.

    Any eps > tol * A yields (DiscreteEquidistant, DoubledRealLine); eps = 0
    returns the unperturbed classification twice.
    """
    base = classify(h, tol)
    if base.kind not in (SpectrumKind.DOUBLED_HALF_AXIS, SpectrumKind.FULL_REAL_LINE):
        raise DomainError(f"instability_probe needs A = B, got {base.kind.value}")
    if epsilon < 0:
        raise DomainError("epsilon must be >= 0")
    if epsilon == 0:
        return base, base
    return classify(replace(h, A=h.A + epsilon), tol), classify(replace(h, B=h.B + epsilon), tol)


def numeric_spectrum_check(h, N):
    """Ascending eigenvalues of the N x N number-basis truncation of h."""
    if N < 16:
        raise DomainError("numeric_spectrum_check needs N >= 16")
    try:
        return np.linalg.eigvalsh(h.matrix(N))
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"eigensolver failed: {exc}") from exc
