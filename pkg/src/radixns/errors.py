"""Exception types shared across the package.

Everything raised on purpose derives from RadixError, so callers can
catch one base class.  Construction problems (a digit list that cannot
form a spec at all) derive from SpecError; the remaining classes signal
semantic refusals on inputs that parsed fine.
"""

from __future__ import annotations


class RadixError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(RadixError):
    """A base/digit-set pair that cannot form a pre-number system."""


class BaseTooSmall(SpecError):
    """The base has absolute value below 2."""


class WrongDigitCount(SpecError):
    """The digit set does not have exactly |base| members after dedup."""


class IncompleteResidues(SpecError):
    """Two digits share a residue class modulo the base."""


class NotADigit(RadixError):
    """A value was used as a digit but is not in the digit set."""


class NotRepresentable(RadixError):
    """The value has no finite expansion; carries the blocking cycle."""

    def __init__(self, message: str, cycle: tuple[int, ...]):
        super().__init__(message)
        self.cycle = cycle


class NoZeroExpansion(RadixError):
    """0 is not periodic under the step map, so no digit string sums to 0."""


class BadPadLength(RadixError):
    """Requested length is not reachable by whole zero-expansion copies."""


class UnsupportedSpec(RadixError):
    """The spec falls outside the hypotheses of the requested operation."""


class UnsupportedBase(RadixError):
    """The base falls outside the range the operation covers."""


class ShiftOutOfRange(RadixError):
    """The shift parameter u violates 1 <= |u| <= |b|-1 (|b|-2 without 0)."""


class NotANumberSystem(RadixError):
    """The operation needs a valid number system and the spec is not one."""


class DigitInBadSet(RadixError):
    """The digit chosen for shifting occurs in a blocking expansion."""

    def __init__(self, message: str, bad_set: frozenset[int]):
        super().__init__(message)
        self.bad_set = bad_set


class StateSpaceTooLarge(RadixError):
    """The rewrite word space exceeds the configured cap."""


class RewriteError(RadixError):
    """A rewrite step left the padded word space; hypotheses were violated."""


class BadPair(RadixError):
    """A base -2 digit pair must hold one even and one odd digit, d < D."""


class NotInAttractor(RadixError):
    """The starting point lies outside the attractor interval."""


class BadPrime(RadixError):
    """The modulus must be an odd prime."""


class NotCoprime(RadixError):
    """The base shares a factor with the modulus."""
