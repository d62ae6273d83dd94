"""Series summation core and principal-branch elementary functions.

The summation engine is generic: it consumes a coefficient generator and
returns the partial sum together with an honest truncation-error estimate.
All branch handling in the package funnels through principal_log,
log_negated and principal_pow so that every module agrees on the cuts:
log z is cut on (-inf, 0], log(-z) on [0, inf).  Points exactly on a cut
are rejected; we do not adopt a signed-zero side convention.
"""

import cmath
from dataclasses import dataclass, field

from .errors import BranchCut, DomainError, NoConvergence

REL_TOL = 1e-14
MAX_TERMS = 10000

# consecutive small terms required before a series counts as converged;
# a single test misfires when a coefficient happens to vanish
_RUN = 3


@dataclass(frozen=True)
class EvalResult:
    """Value of a series or special-function evaluation.

    err_estimate is absolute.  flags is a frozenset drawn from
    {"TruncationMaxed", "NearPole", "OnBranchCut"}.
    """

    value: complex
    err_estimate: float
    terms_used: int
    flags: frozenset = field(default_factory=frozenset)


@dataclass(frozen=True)
class LaurentExpansion:
    """Coefficients of sum_{k=1}^{m} d_{-k} z^{-k} + sum_{n>=0} d_n z^n.

    principal holds (d_{-1}, ..., d_{-m}); tail_coeff is a zero-argument
    callable returning a fresh generator of d_0, d_1, ... so that the
    expansion object itself stays immutable and reusable.
    """

    principal: tuple
    tail_coeff: object

    @property
    def pole_order(self):
        return len(self.principal)

    def tail_list(self, n):
        """First n analytic-part coefficients as a list."""
        gen = self.tail_coeff()
        return [next(gen) for _ in range(n)]


def sum_power_series(coeff, z, rel_tol=REL_TOL, max_terms=MAX_TERMS, start=0):
    """Sum c_n z^n for n = start, start+1, ... with truncation control.

    coeff yields c_start, c_start+1, ... in order.  Stops once _RUN
    consecutive terms each have magnitude <= rel_tol * |partial sum|;
    err_estimate is the magnitude of the first omitted term (0 when the
    generator is exhausted).  Raises NoConvergence with the running
    partial attached when max_terms is hit first.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    z = complex(z)
    it = iter(coeff)
    total = 0j
    power = z**start if start else complex(1.0)
    small_run = 0
    used = 0
    last_mag = 0.0
    while used < max_terms:
        try:
            c = next(it)
        except StopIteration:
            return EvalResult(total, 0.0, max(used, 1))
        term = complex(c) * power
        total += term
        used += 1
        power *= z
        last_mag = abs(term)
        if last_mag <= rel_tol * abs(total):
            small_run += 1
            if small_run >= _RUN:
                try:
                    nxt = abs(complex(next(it)) * power)
                except StopIteration:
                    nxt = 0.0
                return EvalResult(total, nxt, used)
        else:
            small_run = 0
    raise NoConvergence(
        f"no convergence in {max_terms} terms at z = {z}",
        flag="TruncationMaxed",
        partial=total,
        err=last_mag,
    )


def deriv_coeffs(gen_factory, start, order):
    """Coefficient stream of the order-th derivative of sum c_n z^n.

    Returns (new_start, new_factory): coefficients n(n-1)...(n-order+1) c_n
    reindexed to the power n - order, with the terms annihilated by
    differentiation skipped.
    """
    lead = max(start, order)

    def g():
        it = gen_factory()
        for _ in range(lead - start):
            next(it)
        n = lead
        while True:
            c = next(it)
            f = 1.0
            for j in range(order):
                f *= n - j
            yield f * c
            n += 1

    return lead - order, g


def principal_log(z):
    """log z with Im in (-pi, pi); cut on (-inf, 0]."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise BranchCut(f"principal_log cut at z = {z}")
    return cmath.log(z)


def log_negated(z):
    """log(-z) as the principal logarithm of -z; cut on [0, inf).

    For Im z > 0 this equals principal_log(z) - i pi, for Im z < 0 it is
    principal_log(z) + i pi, and on (-inf, 0) it is real.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real >= 0.0:
        raise BranchCut(f"log_negated cut at z = {z}")
    return cmath.log(complex(-z.real, -z.imag))


def _int_pow(z, n):
    # binary exponentiation; exact for real z, no branch cut anywhere
    if n < 0:
        return 1.0 / _int_pow(z, -n)
    acc = complex(1.0)
    base = complex(z)
    while n:
        if n & 1:
            acc *= base
        base *= base
        n >>= 1
    return acc


def principal_pow(z, a):
    """z**a via exp(a log z) on the principal branch.

    Integer exponents (including a = 0) are computed by repeated
    multiplication, so they are defined for every z != 0 and keep real
    arguments exactly real.
    """
    z = complex(z)
    a = complex(a)
    if a.imag == 0.0 and a.real == round(a.real):
        n = int(a.real)
        if n == 0:
            return complex(1.0)
        if z == 0:
            if n < 0:
                raise DomainError("0 cannot be raised to a negative power")
            return complex(0.0)
        return _int_pow(z, n)
    return cmath.exp(a * principal_log(z))
