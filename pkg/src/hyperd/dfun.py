"""Logarithmic companion functions D for the three equation kinds.

Each D is a Laurent-type object: a finite principal part with exact
coefficients plus a digamma-weighted analytic tail,

    D_m(z)           = sum_{k=1}^{m} (-1)^(k-1) (k-1)!/(m-k)! z^(-k)
                       - sum_{k>=0} (psi(k+1) + psi(k+1+m)) z^k/(k! (m+k)!)

    D_{theta,m}(z)   : tail weight psi(a+k) - psi(k+1) - psi(k+m+1) with
                       a = (1+m+theta)/2 and Pochhammer (a)_k on top,
                       principal coefficients (-1)^(k-1) (k-1)! (a)_{-k}/(m-k)!

    D_{m,beta,mu}(z) : tail weight psi(a+k) + psi(1-b-k) - psi(k+1) - psi(m+k+1)
                       with (a)_k (b)_k on top, a,b = (1+m+beta∓mu)/2,
                       principal coefficients (-1)^(k-1) (k-1)! (a)_{-k} (b)_{-k}/(m-k)!

normalized so that log z * F + D (log(-z) * F + D in the 2F1 case) solves
the homogeneous equation.  The normalization constant is pinned to
C = 2 gamma_Euler - H_m; no user override is offered, since the closed
relations to the U functions hold only for this choice.

Negative order is a pure power shift, D_{-m} := z^m D_m, which turns the
principal part into low-order polynomial coefficients and leaves no pole.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterSingular, PoleAtOrigin
from .ffun import (
    DEGENERACY_TOL,
    F2_SERIES_RADIUS,
    F0,
    F1,
    F2,
    _f2_I_prefactor,
    f_norm_jet,
)
from .ffun import f_norm as _f_norm
from .gammakit import EULER_GAMMA, digamma, harmonic, near_int, pochhammer
from .series import (
    MAX_TERMS,
    REL_TOL,
    EvalResult,
    LaurentExpansion,
    deriv_coeffs,
    log_negated,
    principal_log,
    sum_power_series,
)

_KINDS = ("0f1", "1f1", "2f1")


@dataclass(frozen=True)
class DSpec:
    """Selects one D function: equation kind, integer order m, extra params.

    theta is required for 1f1, beta and mu for 2f1.  Parameter sets that
    put a digamma weight or a principal-part Pochhammer at a pole are
    rejected on construction.
    """

    kind: str
    m: int
    theta: complex = None
    beta: complex = None
    mu: complex = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if self.m != int(self.m):
            raise ValueError(f"m must be an integer, got {self.m}")
        if self.kind == "1f1" and self.theta is None:
            raise ValueError("1f1 DSpec requires theta")
        if self.kind == "2f1" and (self.beta is None or self.mu is None):
            raise ValueError("2f1 DSpec requires beta and mu")
        mm = abs(int(self.m))
        if self.kind == "1f1":
            a = (1 + mm + self.theta) / 2
            n = near_int(a, DEGENERACY_TOL)
            if n is not None and n <= mm:
                raise ParameterSingular(
                    f"(1+m+theta)/2 = {a} is an integer <= m; D undefined"
                )
        elif self.kind == "2f1":
            a = (1 + mm + self.beta - self.mu) / 2
            b = (1 + mm + self.beta + self.mu) / 2
            if near_int(a, DEGENERACY_TOL) is not None or near_int(b, DEGENERACY_TOL) is not None:
                raise ParameterSingular(
                    f"integer classical parameter (a, b) = ({a}, {b}); D undefined"
                )

    @property
    def params(self):
        """The EquationParams with alpha = m."""
        if self.kind == "0f1":
            return F0(alpha=self.m)
        if self.kind == "1f1":
            return F1(theta=self.theta, alpha=self.m)
        return F2(alpha=self.m, beta=self.beta, mu=self.mu)

    def with_m(self, m):
        return DSpec(self.kind, m, self.theta, self.beta, self.mu)


def _principal(spec, mm):
    """(d_{-1}, ..., d_{-mm}) for the order-mm expansion."""
    out = []
    sign = 1.0
    fact = 1.0  # (k-1)!
    for k in range(1, mm + 1):
        if k > 1:
            fact *= k - 1
            sign = -sign
        c = sign * fact / math.factorial(mm - k)
        if spec.kind == "1f1":
            a = (1 + mm + spec.theta) / 2
            c = c * pochhammer(a, -k)
        elif spec.kind == "2f1":
            a = (1 + mm + spec.beta - spec.mu) / 2
            b = (1 + mm + spec.beta + spec.mu) / 2
            c = c * pochhammer(a, -k) * pochhammer(b, -k)
        out.append(complex(c))
    return tuple(out)


def _tail_factory(spec, mm):
    """Fresh-generator factory for d_0, d_1, ... of the order-mm expansion.

    Digamma weights are advanced by psi(z+1) = psi(z) + 1/z, so each
    coefficient costs O(1) after the k = 0 seeds.
    """
    if spec.kind == "0f1":

        def gen():
            inv = 1.0 / math.factorial(mm)
            p1 = -EULER_GAMMA
            p2 = -EULER_GAMMA + harmonic(mm).real
            k = 0
            while True:
                yield -(p1 + p2) * inv
                inv /= (k + 1) * (mm + k + 1)
                p1 += 1.0 / (k + 1)
                p2 += 1.0 / (mm + k + 1)
                k += 1

        return gen

    if spec.kind == "1f1":
        a = (1 + mm + spec.theta) / 2

        def gen():
            # (a)_k / (k! (mm+k)!) as one amplitude; the factors overflow
            # and underflow separately long before the product does
            amp = complex(1.0 / math.factorial(mm))
            pa = digamma(a)
            p1 = -EULER_GAMMA
            p2 = -EULER_GAMMA + harmonic(mm).real
            k = 0
            while True:
                yield amp * (pa - p1 - p2)
                amp *= (a + k) / ((k + 1) * (mm + k + 1))
                pa += 1.0 / (a + k)
                p1 += 1.0 / (k + 1)
                p2 += 1.0 / (mm + k + 1)
                k += 1

        return gen

    a = (1 + mm + spec.beta - spec.mu) / 2
    b = (1 + mm + spec.beta + spec.mu) / 2

    def gen():
        amp = complex(1.0 / math.factorial(mm))
        pa = digamma(a)
        pb = digamma(1 - b)  # psi(1-b-k) seed
        p1 = -EULER_GAMMA
        p2 = -EULER_GAMMA + harmonic(mm).real
        k = 0
        while True:
            yield amp * (pa + pb - p1 - p2)
            amp *= (a + k) * (b + k) / ((k + 1) * (mm + k + 1))
            pa += 1.0 / (a + k)
            pb += 1.0 / (b + k)  # psi(w-1) = psi(w) - 1/(w-1), w = 1-b-k
            p1 += 1.0 / (k + 1)
            p2 += 1.0 / (mm + k + 1)
            k += 1

    return gen


def d_expand(spec):
    """LaurentExpansion of D for any integer order m.

    For m >= 0 the principal part carries exactly m exact coefficients.
    For m < 0 the expansion is the power-shifted z^|m| * (expansion at |m|):
    the former principal coefficients become the leading polynomial part,
    and no pole remains.
    """
    m = int(spec.m)
    mm = abs(m)
    principal = _principal(spec, mm)
    tail = _tail_factory(spec, mm)
    if m >= 0:
        return LaurentExpansion(principal=principal, tail_coeff=tail)

    def shifted(principal=principal, tail=tail, mm=mm):
        for j in range(mm):
            yield principal[mm - j - 1]
        yield from tail()

    return LaurentExpansion(principal=(), tail_coeff=shifted)


def _check_z(spec, z, pole_order):
    if pole_order >= 1 and z == 0:
        raise PoleAtOrigin(f"D with m = {spec.m} has a pole at z = 0")
    if spec.kind == "2f1" and abs(z) > F2_SERIES_RADIUS:
        raise DomainError(
            f"2F1 D series restricted to |z| <= {F2_SERIES_RADIUS}, got |z| = {abs(z):.6g}"
        )


def d_eval(spec, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """Value of D at z: exact principal part plus summed tail.

    err_estimate covers the tail truncation only.
    """
    z = complex(z)
    exp = d_expand(spec)
    _check_z(spec, z, exp.pole_order)
    head = 0j
    if exp.pole_order:
        w = 1.0 / z
        pw = w
        for c in exp.principal:
            head += c * pw
            pw *= w
    tail = sum_power_series(exp.tail_coeff(), z, rel_tol, max_terms)
    return EvalResult(head + tail.value, tail.err_estimate, tail.terms_used, tail.flags)


def d_eval_jet(spec, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """(D, D', D'') with the tail differentiated term by term."""
    z = complex(z)
    exp = d_expand(spec)
    _check_z(spec, z, exp.pole_order)
    h0 = h1 = h2 = 0j
    if exp.pole_order:
        w = 1.0 / z
        pw = w
        for i, c in enumerate(exp.principal):
            k = i + 1
            h0 += c * pw
            h1 += c * (-k) * pw * w
            h2 += c * k * (k + 1) * pw * w * w
            pw *= w
    out = []
    for order in range(3):
        s, g = deriv_coeffs(exp.tail_coeff, 0, order) if order else (0, exp.tail_coeff)
        out.append(sum_power_series(g(), z, rel_tol, max_terms, start=s).value)
    return (h0 + out[0], h1 + out[1], h2 + out[2])


def _log_branch(spec, z):
    # 0F1/1F1 carry log z, 2F1 carries log(-z)
    return log_negated(z) if spec.kind == "2f1" else principal_log(z)


def log_solution(spec, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """log z * F + D (log(-z) * F + D for 2f1) at order m."""
    z = complex(z)
    ell = _log_branch(spec, z)
    f = _f_norm(spec.params, z, rel_tol, max_terms)
    d = d_eval(spec, z, rel_tol, max_terms)
    value = ell * f.value + d.value
    err = abs(ell) * f.err_estimate + d.err_estimate
    return EvalResult(value, err, f.terms_used + d.terms_used, f.flags | d.flags)


def log_solution_jet(spec, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """(w, w', w'') for w = log z * F + D, with (log z)' = 1/z on either cut."""
    z = complex(z)
    ell = _log_branch(spec, z)
    f0, f1, f2 = f_norm_jet(spec.params, z, rel_tol, max_terms)
    d0, d1, d2 = d_eval_jet(spec, z, rel_tol, max_terms)
    w0 = ell * f0 + d0
    w1 = ell * f1 + f0 / z + d1
    w2 = ell * f2 + 2 * f1 / z - f0 / (z * z) + d2
    return (w0, w1, w2)


def d_eval_I(spec, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """The symmetric form D^I = Gamma(a) Gamma(c-a) D for the 2f1 kind."""
    if spec.kind != "2f1":
        raise ValueError("d_eval_I is defined for the 2f1 kind only")
    pref = _f2_I_prefactor(spec.params)
    base = d_eval(spec, z, rel_tol, max_terms)
    return EvalResult(pref * base.value, abs(pref) * base.err_estimate, base.terms_used, base.flags)


def d_eval_I_jet(spec, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    if spec.kind != "2f1":
        raise ValueError("d_eval_I_jet is defined for the 2f1 kind only")
    pref = _f2_I_prefactor(spec.params)
    return tuple(pref * v for v in d_eval_jet(spec, z, rel_tol, max_terms))
