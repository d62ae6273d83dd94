"""Normalized hypergeometric-type functions of the three classical kinds.

The equations are parameterized Lie-algebraically:

    0F1:  alpha = c - 1
    1F1:  alpha = c - 1,  theta = 2a - c
    2F1:  alpha = c - 1,  beta = a + b - c,  mu = b - a

and the normalized solutions divide out the Gamma factor that makes the
series entire in the parameters:

    F_alpha(z)           = sum_n  z^n / (Gamma(alpha+1+n) n!)
    F_{theta,alpha}(z)   = sum_n  (a)_n z^n / (Gamma(alpha+1+n) n!)
    F_{alpha,beta,mu}(z) = sum_n  (a)_n (b)_n z^n / (Gamma(alpha+1+n) n!)

For integer alpha = m the reciprocal Gamma kills every term with
m + n < 0, so the sum starts at n = max(0, -m); that convention is what
keeps the degenerate case well defined and is preserved literally here.
"""

import math
import sys
from dataclasses import dataclass
from enum import Enum

from .errors import DivergedImmediately, DomainError, ParameterSingular, PoleError
from .gammakit import gamma, near_int, pochhammer, recip_gamma
from .series import (
    MAX_TERMS,
    REL_TOL,
    EvalResult,
    deriv_coeffs,
    principal_pow,
    sum_power_series,
)

# direct-series validity margin for 2F1 inside the unit disc
F2_SERIES_RADIUS = 0.95

# |alpha - m| below this is treated as the degenerate integer case
DEGENERACY_TOL = 1e-9

_EPS = sys.float_info.epsilon


class FunctionId(Enum):
    F_NORM = "F_norm"
    SECOND_SOLUTION = "SecondSolution"
    D_LOG_COMPANION = "D_log_companion"
    U_INFINITY = "U_infinity"
    F2F0_ASYMPTOTIC = "F2F0_asymptotic"
    F_I_NORM = "F_I_norm"
    D_I_NORM = "D_I_norm"


class EquationParams:
    """Base for the three tagged parameter variants."""

    __slots__ = ()

    @property
    def is_degenerate(self):
        return near_int(self.alpha, DEGENERACY_TOL) is not None

    @property
    def m(self):
        """The snapped integer value of alpha in the degenerate case."""
        n = near_int(self.alpha, DEGENERACY_TOL)
        if n is None:
            raise ValueError(f"alpha = {self.alpha} is not within {DEGENERACY_TOL} of an integer")
        return n


@dataclass(frozen=True)
class F0(EquationParams):
    """0F1 parameters; classical c = alpha + 1."""

    alpha: complex

    kind = "0f1"

    def to_classical(self):
        return (self.alpha + 1,)

    @classmethod
    def from_classical(cls, c):
        return cls(alpha=c - 1)


@dataclass(frozen=True)
class F1(EquationParams):
    """1F1 parameters; classical a = (1+alpha+theta)/2, c = 1 + alpha."""

    theta: complex
    alpha: complex

    kind = "1f1"

    def to_classical(self):
        return ((1 + self.alpha + self.theta) / 2, 1 + self.alpha)

    @classmethod
    def from_classical(cls, a, c):
        return cls(theta=2 * a - c, alpha=c - 1)


@dataclass(frozen=True)
class F2(EquationParams):
    """2F1 parameters; classical a, b = (1+alpha+beta∓mu)/2, c = 1+alpha."""

    alpha: complex
    beta: complex
    mu: complex

    kind = "2f1"

    def to_classical(self):
        a = (1 + self.alpha + self.beta - self.mu) / 2
        b = (1 + self.alpha + self.beta + self.mu) / 2
        return (a, b, 1 + self.alpha)

    @classmethod
    def from_classical(cls, a, b, c):
        return cls(alpha=c - 1, beta=a + b - c, mu=b - a)


def _f0_coeffs(alpha):
    """(start index, fresh-generator factory) for F_alpha."""
    m = near_int(alpha, DEGENERACY_TOL)
    if m is None:
        c0 = recip_gamma(alpha + 1)

        def gen(c0=c0, alpha=complex(alpha)):
            c = c0
            n = 0
            while True:
                yield c
                c = c / ((alpha + 1 + n) * (n + 1))
                n += 1

        return 0, gen
    n0 = max(0, -m)
    c0 = 1.0 / (math.factorial(m + n0) * math.factorial(n0))

    def gen(c0=c0, m=m, n0=n0):
        c = complex(c0)
        n = n0
        while True:
            yield c
            c = c / ((m + 1 + n) * (n + 1))
            n += 1

    return n0, gen


def _f1_coeffs(theta, alpha):
    m = near_int(alpha, DEGENERACY_TOL)
    if m is None:
        a = (1 + alpha + theta) / 2
        c0 = recip_gamma(alpha + 1)

        def gen(c0=c0, a=complex(a), alpha=complex(alpha)):
            c = c0
            n = 0
            while True:
                yield c
                c = c * (a + n) / ((alpha + 1 + n) * (n + 1))
                n += 1

        return 0, gen
    a = (1 + m + theta) / 2
    n0 = max(0, -m)
    c0 = pochhammer(a, n0) / (math.factorial(m + n0) * math.factorial(n0))

    def gen(c0=c0, a=complex(a), m=m, n0=n0):
        c = complex(c0)
        n = n0
        while True:
            yield c
            c = c * (a + n) / ((m + 1 + n) * (n + 1))
            n += 1

    return n0, gen


def _f2_coeffs(alpha, beta, mu):
    m = near_int(alpha, DEGENERACY_TOL)
    if m is None:
        a = (1 + alpha + beta - mu) / 2
        b = (1 + alpha + beta + mu) / 2
        c0 = recip_gamma(alpha + 1)

        def gen(c0=c0, a=complex(a), b=complex(b), alpha=complex(alpha)):
            c = c0
            n = 0
            while True:
                yield c
                c = c * (a + n) * (b + n) / ((alpha + 1 + n) * (n + 1))
                n += 1

        return 0, gen
    a = (1 + m + beta - mu) / 2
    b = (1 + m + beta + mu) / 2
    n0 = max(0, -m)
    c0 = pochhammer(a, n0) * pochhammer(b, n0) / (math.factorial(m + n0) * math.factorial(n0))

    def gen(c0=c0, a=complex(a), b=complex(b), m=m, n0=n0):
        c = complex(c0)
        n = n0
        while True:
            yield c
            c = c * (a + n) * (b + n) / ((m + 1 + n) * (n + 1))
            n += 1

    return n0, gen


def _coeffs(p):
    if isinstance(p, F0):
        return _f0_coeffs(p.alpha)
    if isinstance(p, F1):
        return _f1_coeffs(p.theta, p.alpha)
    if isinstance(p, F2):
        return _f2_coeffs(p.alpha, p.beta, p.mu)
    raise TypeError(f"unsupported parameter type {type(p).__name__}")


def _check_domain(p, z):
    if isinstance(p, F2) and abs(z) > F2_SERIES_RADIUS:
        raise DomainError(
            f"2F1 direct series restricted to |z| <= {F2_SERIES_RADIUS}, got |z| = {abs(z):.6g}"
        )


def f_norm(p, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """The normalized solution F of the equation selected by p."""
    z = complex(z)
    _check_domain(p, z)
    start, gen = _coeffs(p)
    return sum_power_series(gen(), z, rel_tol, max_terms, start=start)


def f_norm_jet(p, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """(F, F', F'') by term-by-term differentiation of the series."""
    z = complex(z)
    _check_domain(p, z)
    start, gen = _coeffs(p)
    out = []
    for order in range(3):
        s, g = deriv_coeffs(gen, start, order) if order else (start, gen)
        out.append(sum_power_series(g(), z, rel_tol, max_terms, start=s).value)
    return tuple(out)


def _reflected(p):
    if isinstance(p, F0):
        return F0(alpha=-p.alpha)
    if isinstance(p, F1):
        return F1(theta=p.theta, alpha=-p.alpha)
    if isinstance(p, F2):
        return F2(alpha=-p.alpha, beta=p.beta, mu=-p.mu)
    raise TypeError(f"unsupported parameter type {type(p).__name__}")


def _snap_alpha(p):
    """Snap a near-integer alpha to the exact integer, keeping other fields."""
    m = near_int(p.alpha, DEGENERACY_TOL)
    if m is None:
        return p
    if isinstance(p, F0):
        return F0(alpha=m)
    if isinstance(p, F1):
        return F1(theta=p.theta, alpha=m)
    return F2(alpha=m, beta=p.beta, mu=p.mu)


def f_second(p, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """The power-behaved second solution z^(-alpha) F with reflected parameters.

    Reflection sends alpha -> -alpha (and mu -> -mu for 2F1).  For
    integer alpha the prefactor is an exact integer power, so no branch
    cut is introduced; the result is then proportional to f_norm.
    """
    z = complex(z)
    p = _snap_alpha(p)
    inner = f_norm(_reflected(p), z, rel_tol, max_terms)
    pref = principal_pow(z, -p.alpha)
    return EvalResult(pref * inner.value, abs(pref) * inner.err_estimate, inner.terms_used, inner.flags)


def f_second_jet(p, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """(g, g', g'') for g = z^(-alpha) F_reflected, by the product rule."""
    z = complex(z)
    p = _snap_alpha(p)
    a = p.alpha
    f, f1, f2 = f_norm_jet(_reflected(p), z, rel_tol, max_terms)
    w = principal_pow(z, -a)
    g = w * f
    g1 = w * (f1 - a * f / z)
    g2 = w * (f2 - 2 * a * f1 / z + a * (a + 1) * f / (z * z))
    return g, g1, g2


def f2f0_asymptotic(a, b, z, max_terms=MAX_TERMS):
    """The divergent series sum (a)_n (b)_n z^n / n! at optimal truncation.

    Terms are added while they strictly decrease in magnitude; the sum is
    cut at the smallest term, whose magnitude is the error estimate (with
    a rounding floor so the estimate stays meaningful once the terms drop
    below double precision).
    """
    a = complex(a)
    b = complex(b)
    z = complex(z)
    t = complex(1.0)
    total = t
    abs_sum = 1.0
    n = 0
    while n < max_terms:
        t_next = t * (a + n) * (b + n) * z / (n + 1)
        if t_next == 0:
            return EvalResult(total, 0.0, n + 1)
        if abs(t_next) >= abs(t):
            if n == 0 and abs(z) >= 1.0:
                raise DivergedImmediately(
                    f"first term of 2F0 already smallest at |z| = {abs(z):.6g}"
                )
            err = max(abs(t), (n + 1) * _EPS * abs_sum)
            return EvalResult(total, err, n + 1)
        total += t_next
        abs_sum += abs(t_next)
        t = t_next
        n += 1
    return EvalResult(total, abs(t), max_terms, frozenset({"TruncationMaxed"}))


def _f2_I_prefactor(p):
    q1 = (1 + p.alpha + p.beta - p.mu) / 2
    q2 = (1 + p.alpha - p.beta + p.mu) / 2
    try:
        return gamma(q1) * gamma(q2)
    except PoleError as exc:
        raise ParameterSingular(f"F^I prefactor Gamma at a pole: {exc}") from exc


def f2_norm_I(p, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """The symmetric form F^I = Gamma(a) Gamma(c-a) F for the 2F1 kind."""
    if not isinstance(p, F2):
        raise TypeError("f2_norm_I takes F2 parameters")
    pref = _f2_I_prefactor(p)
    base = f_norm(p, z, rel_tol, max_terms)
    return EvalResult(pref * base.value, abs(pref) * base.err_estimate, base.terms_used, base.flags)


def f2_norm_I_jet(p, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    if not isinstance(p, F2):
        raise TypeError("f2_norm_I_jet takes F2 parameters")
    pref = _f2_I_prefactor(p)
    return tuple(pref * v for v in f_norm_jet(p, z, rel_tol, max_terms))
