"""Exception hierarchy shared by every module of :mod:`foxh`."""

from __future__ import annotations


class FoxHError(Exception):
    """Base class for all errors raised by this package."""


class GammaPoleError(FoxHError, ValueError):
    """Argument lies on (or within 1e-13 of) a pole of the gamma function."""

    def __init__(self, z, pole: int | None = None):
        self.z = z
        self.pole = pole
        where = f" (pole at {pole})" if pole is not None else ""
        super().__init__(f"gamma function has a pole at z={z!r}{where}")


class GammaOverflowError(FoxHError, OverflowError):
    """Gamma value is too large to be represented as a float."""


class SpecError(FoxHError, ValueError):
    """Malformed or inadmissible parameter specification."""


class KernelPoleError(FoxHError, ValueError):
    """The Mellin kernel was evaluated on a pole of one of its gamma factors."""

    def __init__(self, message: str, factor: str, index: int, lattice_index: int):
        self.factor = factor
        self.index = index
        self.lattice_index = lattice_index
        super().__init__(message)


class MatchingPairError(SpecError):
    """No cancelling parameter pair exists in the specification."""


class ContourError(FoxHError, ValueError):
    """No vertical line separates the left and right pole lattices."""


class ConvergenceError(FoxHError, ArithmeticError):
    """A series or integral failed to converge.

    ``estimate`` carries the best value reached, when one exists.
    """

    def __init__(self, message: str, estimate=None):
        self.estimate = estimate
        super().__init__(message)


class MultiplePoleError(FoxHError, ValueError):
    """Two left-lattice poles coincide, so simple-residue summation is invalid."""


class PreconditionError(FoxHError, ValueError):
    """A documented precondition (an inequality on the parameters) does not hold.

    ``constraint`` names the failed inequality.
    """

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        msg = f"precondition violated: {constraint}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class HypothesisError(PreconditionError):
    """A parameter sample does not satisfy a theorem's hypothesis set."""


class EmptyHypothesisError(FoxHError, ValueError):
    """The constraints of a hypothesis set admit no parameter values."""


class UnknownTheoremError(FoxHError, KeyError):
    """Requested theorem identifier is not registered."""

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else "unknown theorem"


class ToleranceWarning(UserWarning):
    """A numerical routine finished without reaching the requested tolerance."""


class ImaginaryResidueWarning(UserWarning):
    """A quantity expected to be real carried a noticeable imaginary part."""
