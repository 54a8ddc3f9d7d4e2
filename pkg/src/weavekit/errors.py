"""Exception taxonomy for the weavekit workbench.

Every failure mode that callers are expected to handle gets its own class so
that the CLI can map categories to exit codes and tests can assert on the
precise condition.  All of them derive from :class:`WeavekitError`.
"""

from __future__ import annotations


class WeavekitError(Exception):
    """Base class for all weavekit-specific failures."""


class NonDivisible(WeavekitError):
    """An exact polynomial division left a nonzero remainder.

    In the homology reconstruction chain every division is exact for the
    knots handled here, so hitting this signals an upstream bug rather than
    bad user input.
    """


class RecursionInvariantViolated(WeavekitError):
    """A coefficient that must vanish identically came out nonzero.

    The length-three basis word coefficient is zero at every step of the
    transfer recursion; a nonzero value means the step was applied wrongly.
    """


class OracleBasisError(WeavekitError):
    """The independently derived multiplication matrices failed a self-check.

    Raised when the braid relation or the quadratic relation does not hold
    for the 6x6 right-multiplication matrices used by the matrix-power
    oracle.
    """


class StateSumParityError(WeavekitError):
    """A bracket state sum produced exponents outside the expected lattice.

    The rescaling from the bracket variable to the Jones variable requires
    every exponent to be divisible by four (after writhe correction); any
    other residue indicates a miscounted state.
    """


class ChangeOfVariablesError(WeavekitError):
    """A change of variables that must be exact was not.

    Used by the two-variable invariant assembly when a polynomial fails to
    lie in the subring generated by the target variable.
    """


class NegativeCoefficient(WeavekitError):
    """A quantity that counts dimensions came out negative."""


class DegenerateFit(WeavekitError):
    """The quadratic log-fit is underdetermined or not concave.

    Raised when fewer than three distinct abscissae survive filtering, or
    when the fitted leading coefficient is not positive (so no Gaussian
    width can be extracted).
    """


class RangeError(WeavekitError):
    """An index argument lies outside the domain of a formula or table."""


class NonIntegerValue(WeavekitError):
    """An exact computation expected an integer but produced a fraction."""


class ParseError(WeavekitError):
    """An external data file could not be parsed."""


class MissingData(WeavekitError):
    """An external data file lacks enough rows for the requested analysis."""
