"""Exception hierarchy for precondition and certification failures."""


class FrameToolkitError(Exception):
    """Base class for every failure this package raises on purpose."""


class DimensionMismatch(FrameToolkitError):
    """Operands whose shapes cannot be combined."""


class NotHermitian(FrameToolkitError):
    """Hermitian deviation above tolerance where self-adjointness is required."""


class NotPositive(FrameToolkitError):
    """Eigenvalue below the admissible floor for a (strictly) positive operator."""


class NotInvertible(FrameToolkitError):
    """Condition number beyond the rank tolerance; no bounded inverse."""


class ZeroDenominator(FrameToolkitError):
    """Pencil denominator is the zero operator."""


class ZeroOperator(FrameToolkitError):
    """Zero operator where the lower frame inequality would be vacuous."""


class NonRealFunctional(FrameToolkitError):
    """Frame functional has an imaginary part beyond tolerance."""


class NonHermitianFrameOperator(FrameToolkitError):
    """Frame operator deviates from self-adjointness; bounds are refused."""


class NotPositiveSemidefinite(FrameToolkitError):
    """Quadratic form is not PSD within tolerance."""


class NonPositiveBlock(FrameToolkitError):
    """A strict-mode analysis block is not Hermitian PSD; its root is undefined."""


class CommutationViolated(FrameToolkitError):
    """A required commutation hypothesis fails beyond tolerance."""


class RangeNotContained(FrameToolkitError):
    """Range inclusion required by a transfer construction does not hold."""


class MeasureMismatch(FrameToolkitError):
    """Two families do not share the same atom structure."""


class HypothesisViolated(FrameToolkitError):
    """Hypotheses of an equivalence check fail; the predicate is not asserted."""


class EquivalenceViolation(FrameToolkitError):
    """Predicates that must agree disagree beyond tolerance (rank ambiguity)."""


class NotAFrame(FrameToolkitError):
    """Input family lacks the frame property required by a construction."""


class InvalidInterval(FrameToolkitError):
    """Degenerate interval for quadrature discretization."""


class InvalidSpec(FrameToolkitError):
    """Malformed generator specification or scenario file."""
