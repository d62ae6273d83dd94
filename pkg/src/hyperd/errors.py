"""Exception types shared across the package.

Every numerical routine raises one of these instead of returning NaN,
so callers can distinguish "the input is outside the domain" from
"the algorithm failed to converge".
"""


class HyperdError(Exception):
    """Base class for all package errors."""


class PoleError(HyperdError):
    """Argument at (or within tolerance of) a pole of Gamma or a
    vanishing denominator factor."""


class NoConvergence(HyperdError):
    """Series summation hit max_terms without meeting the stopping
    criterion."""

    def __init__(self, message, flag="TruncationMaxed", partial=None, err=None):
        super().__init__(message)
        self.flag = flag
        self.partial = partial
        self.err = err


class BranchCut(HyperdError):
    """Evaluation point exactly on a branch cut; no signed-zero side
    convention is offered."""


class DomainError(HyperdError):
    """Point outside the convergence/validity domain of the requested
    representation."""


class DivergedImmediately(HyperdError):
    """Asymptotic series whose first term is already the smallest."""


class ParameterSingular(HyperdError):
    """Parameter combination puts a prefactor Gamma at a pole or makes
    a coefficient denominator vanish."""


class PoleAtOrigin(HyperdError):
    """z = 0 requested for a function with a genuine pole there."""


class RouteInapplicable(HyperdError):
    """The requested evaluation route does not cover this point or
    parameter set."""


class UnknownRelation(HyperdError):
    """Relation key not present in the catalog."""


class Inapplicable(HyperdError):
    """Relation exists but its applicability predicate rejects the
    supplied parameters."""


class ExtrapolationUnstable(HyperdError):
    """Richardson increments failed to contract; the limit cannot be
    trusted."""


class RoutesDisagree(HyperdError):
    """Two independent evaluation routes differ beyond tolerance."""
