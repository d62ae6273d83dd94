"""Gamma-function kit: Gamma, 1/Gamma, digamma, shifted harmonic numbers,
and Pochhammer symbols of integer index of either sign.

Everything here is complex-valued and pure.  Pole detection is absolute:
an argument within POLE_TOL of a non-positive integer counts as a pole.
Conventions follow DLMF chapter 5; the Lanczos coefficients are Godfrey's
g = 607/128, n = 15 set, good to ~1e-15 relative in the right half plane.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import PoleError

EULER_GAMMA = 0.5772156649015328606065120900824024

# distance to the nearest non-positive integer below which an argument
# is treated as exactly at the pole
POLE_TOL = 1e-9

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

# B_{2n}/(2n) for the digamma asymptotic series, n = 1..7
_PSI_ASYMP = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


@dataclass(frozen=True)
class GammaValue:
    """Gamma evaluated with an explicit pole flag instead of an exception."""

    value: complex
    is_pole: bool


def near_int(z, tol=POLE_TOL):
    """Return the integer within tol of z, or None.

    Tolerance is measured in the complex plane, so a point with a large
    imaginary part is never near an integer.
    """
    n = round(z.real) if isinstance(z, complex) else round(z)
    if abs(complex(z) - n) <= tol:
        return int(n)
    return None


def near_nonpositive_int(z, tol=POLE_TOL):
    """Return n <= 0 with |z - n| <= tol, or None."""
    n = near_int(z, tol)
    if n is not None and n <= 0:
        return n
    return None


def sinpi(z):
    # sin(pi z) with argument reduction; keeps full relative accuracy
    # near the zeros at integers, where cmath.sin(pi*z) loses digits
    n = round(z.real)
    r = z - n
    s = cmath.sin(math.pi * r)
    return -s if n % 2 else s


def cospi(z):
    n = round(z.real)
    r = z - n
    c = cmath.cos(math.pi * r)
    return -c if n % 2 else c


def _lanczos(z):
    # valid for Re z >= 0.5
    zz = z - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (zz + k)
    t = zz + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (zz + 0.5) * cmath.exp(-t) * acc


def gamma(z):
    """Gamma(z) for complex z, reflection formula for Re z < 1/2.

    Raises PoleError within POLE_TOL of a non-positive integer.
    """
    z = complex(z)
    if near_nonpositive_int(z) is not None:
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # DLMF 5.5.3
        return math.pi / (sinpi(z) * _lanczos(1.0 - z))
    return _lanczos(z)


def gamma_value(z):
    """Gamma with the pole signalled in-band rather than raised."""
    z = complex(z)
    if near_nonpositive_int(z) is not None:
        return GammaValue(complex(math.inf, 0.0), True)
    return GammaValue(gamma(z), False)


def recip_gamma(z):
    """1/Gamma(z); entire, exactly 0 at non-positive integers."""
    z = complex(z)
    if near_nonpositive_int(z) is not None:
        return 0j
    if z.real < 0.5:
        return sinpi(z) * _lanczos(1.0 - z) / math.pi
    return 1.0 / _lanczos(z)


def digamma(z):
    """psi(z) = Gamma'(z)/Gamma(z).

    Reflection for Re z < 1/2, then upward recurrence to |z| >= 10 and
    the Bernoulli asymptotic series (DLMF 5.11.2).
    """
    z = complex(z)
    if near_nonpositive_int(z) is not None:
        raise PoleError(f"digamma pole at z = {z}")
    acc = 0j
    if z.real < 0.5:
        # DLMF 5.5.4: psi(z) = psi(1-z) - pi cot(pi z)
        acc -= math.pi * cospi(z) / sinpi(z)
        z = 1.0 - z
    while abs(z) < 10.0:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0j
    for c in reversed(_PSI_ASYMP):
        tail = (tail + c) * w
    return acc + cmath.log(z) - 0.5 / z - tail


def harmonic(k, z=1.0):
    """Shifted harmonic number H_k(z) = 1/z + 1/(z+1) + ... + 1/(z+k-1).

    H_0(z) = 0 for every z; harmonic(k) with z omitted gives the plain
    harmonic number H_k.
    """
    if k < 0 or k != int(k):
        raise ValueError(f"harmonic order must be a non-negative integer, got {k}")
    z = complex(z)
    acc = 0j
    for j in range(int(k)):
        d = z + j
        if abs(d) <= POLE_TOL:
            raise PoleError(f"harmonic term pole at z + {j} = {d}")
        acc += 1.0 / d
    return acc


def pochhammer(z, k):
    """Pochhammer symbol (z)_k for integer k of either sign.

    (z)_0 = 1; for k > 0 the rising product z(z+1)...(z+k-1); for k < 0
    the reciprocal product 1/((z+k)(z+k+1)...(z-1)), which is the unique
    continuation satisfying (z)_{j+1} = (z+j)(z)_j.
    """
    if k != int(k):
        raise ValueError(f"pochhammer index must be an integer, got {k}")
    k = int(k)
    z = complex(z)
    if k >= 0:
        acc = complex(1.0)
        for j in range(k):
            acc *= z + j
        return acc
    acc = complex(1.0)
    for j in range(1, -k + 1):
        d = z - j
        if abs(d) <= POLE_TOL:
            raise PoleError(f"pochhammer denominator pole at z - {j} = {d}")
        acc *= d
    return 1.0 / acc
