"""Building valid digit sets: small-digit criteria, n-fold compounds,
translation scans, and infinite families from digit shifting.

The shifting construction takes a known number system whose digits all
satisfy |d| <= |b|, picks a digit d and a shift size u, and replaces d
by d - u*b^k.  Validity survives for every exponent k >= 1 as long as d
stays out of the bad set: the digits used by the minimal expansions of
0, u-1, u and u+1.  Those expansions are what the replacement has to
commute past, which is also why the zero digit itself is always bad.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import NumberSystemSpec, new_spec
from .errors import (
    DigitInBadSet,
    NotADigit,
    NotANumberSystem,
    ShiftOutOfRange,
    SpecError,
    UnsupportedBase,
    UnsupportedSpec,
)
from .expansions import Expansion, expand
from .orbits import attractor, is_number_system


def check_small_digit_set(spec: NumberSystemSpec) -> bool:
    """Sufficient validity test for |b| >= 3, no orbit computation.

    True when all |d| <= |b|, at least one of 1 and -1 is a digit, and
    neither b-1 nor 1-b is a digit.  Systems passing this are number
    systems; failing it decides nothing.
    """
    b = spec.base
    if abs(b) < 3:
        raise UnsupportedBase("the small-digit test needs |base| >= 3")
    digits = set(spec.digits)
    return (
        all(abs(d) <= abs(b) for d in digits)
        and (1 in digits or -1 in digits)
        and (b - 1) not in digits
        and (1 - b) not in digits
    )


def odd_digit_set(base: int) -> NumberSystemSpec:
    """The all-odd digit set for an odd base, a zero-free number system.

    For b >= 3 it is {-b+2, -b+4, ..., b-2} plus b itself; for b <= -3
    it is {b, b+2, ..., -b-2}.  Either way one odd number per residue
    class, with b standing in for the missing 0.
    """
    if base % 2 == 0 or abs(base) < 3:
        raise UnsupportedBase(f"odd digit sets need an odd base, |base| >= 3, got {base}")
    if base > 0:
        digits = list(range(-base + 2, base - 1, 2)) + [base]
    else:
        digits = list(range(base, -base - 1, 2))
    return new_spec(base, digits)


def nfold(spec: NumberSystemSpec, n: int) -> NumberSystemSpec:
    """The compound system with base b^n and all n-digit combinations
    sum d_i b^i as digits.  Its step map is the n-th iterate of the
    original, so both share one attractor."""
    if n < 1:
        raise ValueError("n must be at least 1")
    b = spec.base
    digits = [
        sum(d * b**i for i, d in enumerate(combo))
        for combo in itertools.product(spec.digits, repeat=n)
    ]
    return new_spec(b**n, digits)


def nfold_validity_predicate(spec: NumberSystemSpec, n: int) -> bool:
    """Closed-form validity of nfold(spec, n): the base system must be
    valid and n must be coprime to its attractor size."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not is_number_system(spec):
        return False
    return math.gcd(n, len(attractor(spec).members)) == 1


def translate_candidate(
    spec: NumberSystemSpec,
    t: int,
    *,
    keep_zero: bool = False,
) -> bool:
    """Whether translating the digit set by t gives a number system.

    Plain mode translates every digit by t.  keep_zero mode (requires
    0 in the digit set) translates only the nonzero digits and keeps 0;
    a candidate that is not even a pre-number system counts as invalid.
    """
    if abs(spec.base) < 3:
        raise UnsupportedBase("translation scans cover |base| >= 3")
    if keep_zero and 0 not in spec.digits:
        raise UnsupportedSpec("keep_zero needs 0 in the digit set")
    if keep_zero:
        cand = [d + t for d in spec.digits if d != 0] + [0]
    else:
        cand = [d + t for d in spec.digits]
    try:
        shifted = new_spec(spec.base, cand)
    except SpecError:
        return False
    return is_number_system(shifted)


def translate_scan(
    spec: NumberSystemSpec,
    t_min: int,
    t_max: int,
    *,
    keep_zero: bool = False,
) -> list[int]:
    """All t in [t_min, t_max] whose translated digit set is a number
    system.  Only finitely many translations of any digit set are
    valid, which this scan demonstrates on a window.
    """
    return [
        t
        for t in range(t_min, t_max + 1)
        if translate_candidate(spec, t, keep_zero=keep_zero)
    ]


@dataclass(frozen=True)
class BadSet:
    """Digits blocked for shifting, with the expansions that block them."""

    members: frozenset[int]
    sources: dict[int, Expansion]


def _check_shift_range(spec: NumberSystemSpec, u: int) -> None:
    limit = abs(spec.base) - (1 if 0 in spec.digits else 2)
    if not 1 <= abs(u) <= limit:
        raise ShiftOutOfRange(
            f"need 1 <= |u| <= {limit} for {spec}, got u = {u}"
        )


def bad_set(spec: NumberSystemSpec, u: int) -> BadSet:
    """Digits occurring in the minimal expansions of 0, u-1, u and u+1.

    Defined for number systems with all |digits| <= |base|.  At most 6
    digits for positive bases and 8 for negative ones can ever be bad,
    so large digit sets always leave room to shift.
    """
    if any(abs(d) > abs(spec.base) for d in spec.digits):
        raise UnsupportedSpec("bad sets are defined for all |digits| <= |base|")
    _check_shift_range(spec, u)
    if not is_number_system(spec):
        raise NotANumberSystem(f"{spec} is not a number system")
    sources: dict[int, Expansion] = {}
    for value in (0, u - 1, u, u + 1):
        if value not in sources:
            sources[value] = expand(spec, value)
    members = frozenset(
        d for exp in sources.values() for d in exp.digits
    )
    return BadSet(members, sources)


@dataclass(frozen=True)
class FamilySpec:
    """A shifting family: base set, replaced digit, shift size u, exponent k.

    The member digit set replaces ``digit`` by digit - u * b^k.
    """

    base_set: NumberSystemSpec
    digit: int
    shift: int
    exponent: int

    @property
    def shifted_digit(self) -> int:
        return self.digit - self.shift * self.base_set.base**self.exponent


def shifted_spec(family: FamilySpec) -> NumberSystemSpec:
    """The family member's spec, with no admissibility checks beyond
    pre-number-system legality.  Useful for probing counterexamples,
    including replacements of the zero digit."""
    if family.exponent < 1:
        raise ValueError("the exponent must be at least 1")
    if family.digit not in family.base_set.digits:
        raise NotADigit(f"{family.digit} is not a digit of {family.base_set}")
    digits = [d for d in family.base_set.digits if d != family.digit]
    digits.append(family.shifted_digit)
    return new_spec(family.base_set.base, digits)


def shift_family(family: FamilySpec) -> NumberSystemSpec:
    """The family member's spec, with the full hypotheses enforced.

    Requires |base| >= 4 (for |base| = 3 the bad set always swallows the
    whole digit set), a valid base system with small digits, a shift in
    range, and a replaced digit outside the bad set.  The result is a
    number system for every exponent.
    """
    b = family.base_set.base
    if abs(b) == 3:
        raise UnsupportedBase(
            "|base| = 3 admits no shiftable digit: the bad set has at "
            "least 3 members and covers the whole digit set"
        )
    if abs(b) < 3:
        raise UnsupportedBase("digit shifting needs |base| >= 4")
    blocked = bad_set(family.base_set, family.shift)
    if family.digit in blocked.members:
        raise DigitInBadSet(
            f"digit {family.digit} occurs in a blocking expansion; "
            f"bad set is {sorted(blocked.members)}",
            bad_set=blocked.members,
        )
    return shifted_spec(family)
