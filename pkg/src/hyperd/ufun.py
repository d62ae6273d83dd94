"""Infinity-normalized solutions and the Bessel-family wrappers.

Three evaluation routes are offered for each U:

  Connection    generic alpha: the two power-behaved solutions combined
                with reciprocal sine and Gamma weights; unusable near
                integer alpha where sin(pi alpha) cancellation explodes.
  LogPlusD      integer alpha = m: prefactor * (log z * F_m + D_m), the
                closed degenerate form; the canonical route at integers.
  Asymptotic2F0 the expansion about infinity (optimally truncated 2F0
                for 0F1/1F1, the defining 1/z series for 2F1).

plus KummerReflected for the 2F1 kind, which routes through the
(1-z)^(-beta) reflection and re-selects automatically.  Routes agree
within combined error estimates wherever they overlap; the error
estimates include an explicit cancellation floor because all of these
formulas subtract large intermediates.
"""

import cmath
import math
import sys
from enum import Enum

from .dfun import DSpec, d_eval
from .errors import (
    BranchCut,
    DomainError,
    ParameterSingular,
    RouteInapplicable,
)
from .ffun import (
    DEGENERACY_TOL,
    F2_SERIES_RADIUS,
    F0,
    F1,
    F2,
    f2f0_asymptotic,
    f_norm,
)
from .gammakit import near_int, near_nonpositive_int, recip_gamma, sinpi
from .series import (
    MAX_TERMS,
    REL_TOL,
    EvalResult,
    log_negated,
    principal_log,
    principal_pow,
)

_EPS = sys.float_info.epsilon

# Connection is refused closer to an integer than this; the theorems
# exist precisely to cover that band
CONNECTION_INT_BAND = 1e-6

_SQRT_PI = math.sqrt(math.pi)


class URoute(Enum):
    CONNECTION = "Connection"
    LOG_PLUS_D = "LogPlusD"
    ASYMPTOTIC_2F0 = "Asymptotic2F0"
    KUMMER_REFLECTED = "KummerReflected"


def _as_route(route):
    if route is None or isinstance(route, URoute):
        return route
    return URoute(route)


def _int_distance(alpha):
    alpha = complex(alpha)
    return abs(alpha - round(alpha.real))


def _pick_route(alpha):
    """Canonical route for the given alpha: LogPlusD at integers,
    Connection away from them, nothing in the ambiguous band between."""
    if near_int(alpha, DEGENERACY_TOL) is not None:
        return URoute.LOG_PLUS_D
    if _int_distance(alpha) > CONNECTION_INT_BAND:
        return URoute.CONNECTION
    raise RouteInapplicable(
        f"alpha = {alpha} sits between the integer band ({DEGENERACY_TOL}) "
        f"and the connection band ({CONNECTION_INT_BAND}); no route applies"
    )


def _require_int(alpha):
    m = near_int(alpha, DEGENERACY_TOL)
    if m is None:
        raise RouteInapplicable(f"LogPlusD requires integer alpha, got {alpha}")
    return m


def _require_generic(alpha):
    if _int_distance(alpha) <= CONNECTION_INT_BAND:
        raise RouteInapplicable(
            f"Connection requires alpha further than {CONNECTION_INT_BAND} from integers, got {alpha}"
        )


def u0(alpha, z, route=None, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """U_alpha(z): the solution with e^(-2 sqrt z) decay, cut on (-inf, 0]."""
    alpha = complex(alpha)
    z = complex(z)
    route = _as_route(route) or _pick_route(alpha)

    if route is URoute.CONNECTION:
        _require_generic(alpha)
        fn = f_norm(F0(alpha), z, rel_tol, max_terms)
        fr = f_norm(F0(-alpha), z, rel_tol, max_terms)
        pw = principal_pow(z, -alpha)
        s = sinpi(alpha)
        t1 = pw * fr.value
        t2 = fn.value
        value = _SQRT_PI * (t1 - t2) / s
        err = (
            _SQRT_PI / abs(s) * (abs(pw) * fr.err_estimate + fn.err_estimate)
            + _EPS * _SQRT_PI / abs(s) * (abs(t1) + abs(t2))
        )
        return EvalResult(value, err, fn.terms_used + fr.terms_used, fn.flags | fr.flags)

    if route is URoute.LOG_PLUS_D:
        m = _require_int(alpha)
        ell = principal_log(z)
        f = f_norm(F0(m), z, rel_tol, max_terms)
        d = d_eval(DSpec("0f1", m), z, rel_tol, max_terms)
        pref = (-1.0) ** (m + 1) / _SQRT_PI
        lf = ell * f.value
        value = pref * (lf + d.value)
        err = abs(pref) * (
            abs(ell) * f.err_estimate + d.err_estimate + _EPS * (abs(lf) + abs(d.value))
        )
        return EvalResult(value, err, f.terms_used + d.terms_used, f.flags | d.flags)

    if route is URoute.ASYMPTOTIC_2F0:
        sq = principal_pow(z, 0.5)
        pref = cmath.exp(-2.0 * sq) * principal_pow(z, -alpha / 2 - 0.25)
        asy = f2f0_asymptotic(0.5 + alpha, 0.5 - alpha, -1.0 / (4.0 * sq), max_terms)
        return EvalResult(pref * asy.value, abs(pref) * asy.err_estimate, asy.terms_used, asy.flags)

    raise RouteInapplicable(f"route {route.value} does not apply to the 0f1 kind")


def u1(theta, alpha, z, route=None, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """Tricomi-type U_{theta,alpha}(z), cut on (-inf, 0]."""
    theta = complex(theta)
    alpha = complex(alpha)
    z = complex(z)
    route = _as_route(route) or _pick_route(alpha)

    if route is URoute.CONNECTION:
        _require_generic(alpha)
        fn = f_norm(F1(theta, alpha), z, rel_tol, max_terms)
        fr = f_norm(F1(theta, -alpha), z, rel_tol, max_terms)
        pw = principal_pow(z, -alpha)
        s = sinpi(alpha)
        t1 = pw * fr.value * recip_gamma((1 + theta + alpha) / 2)
        t2 = fn.value * recip_gamma((1 + theta - alpha) / 2)
        value = math.pi * (t1 - t2) / s
        err = (
            math.pi / abs(s) * (
                abs(pw * recip_gamma((1 + theta + alpha) / 2)) * fr.err_estimate
                + abs(recip_gamma((1 + theta - alpha) / 2)) * fn.err_estimate
            )
            + _EPS * math.pi / abs(s) * (abs(t1) + abs(t2))
        )
        return EvalResult(value, err, fn.terms_used + fr.terms_used, fn.flags | fr.flags)

    if route is URoute.LOG_PLUS_D:
        m = _require_int(alpha)
        if m < 0:
            inner = u1(theta, -m, z, URoute.LOG_PLUS_D, rel_tol, max_terms)
            pw = principal_pow(z, -m)
            return EvalResult(pw * inner.value, abs(pw) * inner.err_estimate, inner.terms_used, inner.flags)
        q = (1 - m + theta) / 2
        if near_nonpositive_int(q) is not None:
            raise ParameterSingular(
                f"LogPlusD prefactor 1/Gamma({q}) vanishes; degenerate-confluent case"
            )
        ell = principal_log(z)
        f = f_norm(F1(theta, m), z, rel_tol, max_terms)
        d = d_eval(DSpec("1f1", m, theta=theta), z, rel_tol, max_terms)
        pref = (-1.0) ** (m + 1) * recip_gamma(q)
        lf = ell * f.value
        value = pref * (lf + d.value)
        err = abs(pref) * (
            abs(ell) * f.err_estimate + d.err_estimate + _EPS * (abs(lf) + abs(d.value))
        )
        return EvalResult(value, err, f.terms_used + d.terms_used, f.flags | d.flags)

    if route is URoute.ASYMPTOTIC_2F0:
        a = (1 + theta + alpha) / 2
        pref = principal_pow(z, -a)
        asy = f2f0_asymptotic(a, (1 + theta - alpha) / 2, -1.0 / z, max_terms)
        return EvalResult(pref * asy.value, abs(pref) * asy.err_estimate, asy.terms_used, asy.flags)

    raise RouteInapplicable(f"route {route.value} does not apply to the 1f1 kind")


def _check_u2_cut(z):
    if z.imag == 0.0 and z.real >= 0.0:
        raise BranchCut(f"2f1 U is cut on [0, inf), got z = {z}")


def _pick_u2_route(alpha, z):
    if abs(z) <= F2_SERIES_RADIUS:
        return _pick_route(alpha)
    if abs(z) >= 1.0 / F2_SERIES_RADIUS:
        return URoute.ASYMPTOTIC_2F0
    raise DomainError(
        f"neither |z| <= {F2_SERIES_RADIUS} nor |1/z| <= {F2_SERIES_RADIUS} at z = {z}"
    )


def u2(alpha, beta, mu, z, route=None, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """The 2F1-kind U function, cut on [0, inf)."""
    alpha = complex(alpha)
    beta = complex(beta)
    mu = complex(mu)
    z = complex(z)
    _check_u2_cut(z)
    route = _as_route(route) or _pick_u2_route(alpha, z)

    if route is URoute.CONNECTION:
        _require_generic(alpha)
        fn = f_norm(F2(alpha, beta, mu), z, rel_tol, max_terms)
        fr = f_norm(F2(-alpha, beta, -mu), z, rel_tol, max_terms)
        w1 = recip_gamma((1 - alpha - beta - mu) / 2) * recip_gamma((1 - alpha + beta - mu) / 2)
        w2 = recip_gamma((1 + alpha + beta - mu) / 2) * recip_gamma((1 + alpha - beta - mu) / 2)
        pw = cmath.exp(-alpha * log_negated(z))
        s = sinpi(alpha)
        t1 = fn.value * w1
        t2 = pw * fr.value * w2
        value = -math.pi * (t1 - t2) / s
        err = (
            math.pi / abs(s) * (abs(w1) * fn.err_estimate + abs(pw * w2) * fr.err_estimate)
            + _EPS * math.pi / abs(s) * (abs(t1) + abs(t2))
        )
        return EvalResult(value, err, fn.terms_used + fr.terms_used, fn.flags | fr.flags)

    if route is URoute.LOG_PLUS_D:
        m = _require_int(alpha)
        if m < 0:
            inner = u2(beta=beta, mu=mu, alpha=-m, z=z, route=URoute.LOG_PLUS_D,
                       rel_tol=rel_tol, max_terms=max_terms)
            pw = principal_pow(complex(-z.real, -z.imag), -m)
            return EvalResult(pw * inner.value, abs(pw) * inner.err_estimate, inner.terms_used, inner.flags)
        q1 = (1 - m - beta - mu) / 2
        q2 = (1 - m + beta - mu) / 2
        if near_nonpositive_int(q1) is not None or near_nonpositive_int(q2) is not None:
            raise ParameterSingular(
                f"LogPlusD prefactor 1/(Gamma({q1}) Gamma({q2})) vanishes"
            )
        ell = log_negated(z)
        f = f_norm(F2(m, beta, mu), z, rel_tol, max_terms)
        d = d_eval(DSpec("2f1", m, beta=beta, mu=mu), z, rel_tol, max_terms)
        pref = (-1.0) ** (m + 1) * recip_gamma(q1) * recip_gamma(q2)
        lf = ell * f.value
        value = pref * (lf + d.value)
        err = abs(pref) * (
            abs(ell) * f.err_estimate + d.err_estimate + _EPS * (abs(lf) + abs(d.value))
        )
        return EvalResult(value, err, f.terms_used + d.terms_used, f.flags | d.flags)

    if route is URoute.ASYMPTOTIC_2F0:
        if abs(z) < 1.0 / F2_SERIES_RADIUS:
            raise DomainError(
                f"1/z series requires |1/z| <= {F2_SERIES_RADIUS}, got |z| = {abs(z):.6g}"
            )
        pref = cmath.exp((-1 - alpha - beta + mu) / 2 * log_negated(z))
        inner = f_norm(F2(alpha=-mu, beta=beta, mu=-alpha), 1.0 / z, rel_tol, max_terms)
        return EvalResult(pref * inner.value, abs(pref) * inner.err_estimate, inner.terms_used, inner.flags)

    if route is URoute.KUMMER_REFLECTED:
        pw = principal_pow(1.0 - z, -beta)
        inner = u2(alpha, -beta, mu, z, None, rel_tol, max_terms)
        return EvalResult(pw * inner.value, abs(pw) * inner.err_estimate, inner.terms_used, inner.flags)

    raise RouteInapplicable(f"route {route.value} does not apply to the 2f1 kind")


def bessel(kind, m, z, rel_tol=REL_TOL, max_terms=MAX_TERMS):
    """Bessel-family wrapper: kind in {I, J, K, H1, H2}, integer order m.

    Compositions of F_m and D_m at w = z^2/4:

        I_m(z)  = (z/2)^m  F_m(w)
        J_m(z)  = (z/2)^m  F_m(-w)
        K_m(z)  = (-1)^(m+1)/2 (z/2)^m (log w * F_m(w) + D_m(w))
        H1_m(z) = +(i/pi) (z/2)^m ((log w - i pi) F_m(-w) + D_m(-w))
        H2_m(z) = -(i/pi) (z/2)^m ((log w + i pi) F_m(-w) + D_m(-w))

    The Hankel pair carries the rotated argument e^(∓ i pi) w as the exact
    phase -w together with the explicit ∓ i pi in the logarithm, so that
    H1 + H2 = 2 J identically.
    """
    if m != int(m):
        raise ValueError(f"bessel order must be an integer, got {m}")
    m = int(m)
    z = complex(z)
    w = z * z / 4.0
    half_pow = principal_pow(z / 2.0, m)
    p = F0(m)
    spec = DSpec("0f1", m)

    if kind == "I":
        f = f_norm(p, w, rel_tol, max_terms)
        return EvalResult(half_pow * f.value, abs(half_pow) * f.err_estimate, f.terms_used, f.flags)
    if kind == "J":
        f = f_norm(p, -w, rel_tol, max_terms)
        return EvalResult(half_pow * f.value, abs(half_pow) * f.err_estimate, f.terms_used, f.flags)
    if kind == "K":
        ell = principal_log(w)
        f = f_norm(p, w, rel_tol, max_terms)
        d = d_eval(spec, w, rel_tol, max_terms)
        pref = (-1.0) ** (m + 1) / 2.0 * half_pow
        lf = ell * f.value
        value = pref * (lf + d.value)
        err = abs(pref) * (
            abs(ell) * f.err_estimate + d.err_estimate + _EPS * (abs(lf) + abs(d.value))
        )
        return EvalResult(value, err, f.terms_used + d.terms_used, f.flags | d.flags)
    if kind in ("H1", "H2"):
        sign = 1.0 if kind == "H1" else -1.0
        ell = principal_log(w) - sign * 1j * math.pi
        f = f_norm(p, -w, rel_tol, max_terms)
        d = d_eval(spec, -w, rel_tol, max_terms)
        pref = sign * 1j / math.pi * half_pow
        lf = ell * f.value
        value = pref * (lf + d.value)
        err = abs(pref) * (
            abs(ell) * f.err_estimate + d.err_estimate + _EPS * (abs(lf) + abs(d.value))
        )
        return EvalResult(value, err, f.terms_used + d.terms_used, f.flags | d.flags)
    raise ValueError(f"unknown Bessel kind {kind!r}")
