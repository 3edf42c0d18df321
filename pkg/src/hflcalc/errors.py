"""Exception hierarchy for hflcalc."""

from __future__ import annotations


class HflError(Exception):
    """Base class for all errors raised by hflcalc."""


class SchemaError(HflError, ValueError):
    """A link or grid document does not match the expected schema."""


class ParityError(HflError, ValueError):
    """An exponent or lattice point lies on the wrong half-integer lattice."""


class HalfIntegralExponent(HflError, ValueError):
    pass


class NonUnitAugmentation(HflError, ValueError):
    """The one-variable polynomial does not evaluate to 1 at t = 1."""


class EmptyPolytope(HflError, ValueError):
    pass


class NotLSpaceKnotSeries(HflError, ValueError):
    """Some coefficient of t/(t-1) * Delta lies outside {0, 1}."""


class NotLSpaceLinkData(HflError, ValueError):
    """The h-function recursions produced an invalid drop or disagreed."""


class InconsistentSquare(HflError, ValueError):
    pass


class UnresolvableD2(HflError, RuntimeError):
    """The second differential could not be pinned down by the mirror point."""


class NotSplitInput(HflError, ValueError):
    pass


class WindowTooSmall(HflError, RuntimeError):
    pass


class EmptySupport(HflError, ValueError):
    pass


class TrivialComponent(HflError, ValueError):
    """The link has an unknotted component split from the rest."""


class NegativeNorm(HflError, ValueError):
    pass


class VerificationFailed(HflError, RuntimeError):
    pass


class ZeroAlexander(HflError, ValueError):
    """The multivariable Alexander polynomial vanishes, so there is no Newton polytope."""


class TruncationTooSmall(HflError, ValueError):
    pass


class OutsideGrid(HflError, KeyError):
    """A synthetic grid was queried outside the values it knows."""

    def __str__(self) -> str:
        return f"point outside the grid: {self.args[0] if self.args else ''}"


class UnknownName(HflError, KeyError):
    def __str__(self) -> str:
        return f"unknown catalog name: {self.args[0] if self.args else ''}"
