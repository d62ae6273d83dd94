"""
Normalized hypergeometric functions
===================================

The normalized series :math:`\\mathbb{F}` divides each classical
hypergeometric function by the gamma factors of its lower parameters,
which makes it entire in the parameters.  Nothing special happens when
the classical lower parameter c passes through a nonpositive integer.
"""

from hyperd import F0, F1, F2, f_norm, f_second

# %%
# At c = 1 (alpha = 0) the confluent function with a = c reduces to the
# exponential, and the normalization is just 1/Gamma(c) = 1.

r = f_norm(F1(theta=1.0, alpha=0.0), 0.3)
print("1F1(1;1;0.3) / Gamma(1) =", r.value)
print("terms used:", r.terms_used, " err estimate:", r.err_estimate)

# %%
# Crossing a pole of the classical function.  For c = 0, -1, -2, ... the
# classical series is undefined, but the normalized one just keeps going.
# alpha = c - 1, so c = 0 is alpha = -1.

for alpha in (-0.999, -1.0, -1.001):
    r = f_norm(F1(theta=0.4, alpha=alpha), 0.5)
    print("alpha = %+.3f  F = %.15g" % (alpha, r.value.real))

# %%
# The second solution about the origin carries the factor z^(-alpha).
# Away from integer alpha the pair (F, second) spans the solution space.

p = F2(alpha=0.4, beta=0.3, mu=0.2)
print("F      :", f_norm(p, 0.25).value)
print("second :", f_second(p, 0.25).value)

# %%
# Degenerate proportionality: at integer alpha = m the two solutions
# collapse onto each other up to a constant.  For the 0f1 kernel the
# constant is 1:  F_m(z) = z^(-m) F_{-m}(z).

z = 0.7 + 0.2j
for m in (1, 2, 3):
    lhs = f_norm(F0(float(m)), z).value
    rhs = z ** (-m) * f_norm(F0(float(-m)), z).value
    print("m = %d   |lhs - rhs| = %.3e" % (m, abs(lhs - rhs)))
