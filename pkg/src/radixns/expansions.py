"""Finite digit expansions, zero expansions, and length arithmetic.

An expansion of a is a nonempty digit string d_0, ..., d_{l-1} with
a = sum d_i b^i.  Digits are stored least significant first throughout.
Because the digit in each position is forced by residues, a has an
expansion of length l exactly when l applications of the step map send
a to 0; the first such l gives the unique minimal expansion, and
:func:`expand` finds it by following the orbit.

The zero expansion is the minimal expansion of 0, read off the cycle of
0.  Its length L(0) governs padding: a minimal expansion can only be
lengthened by whole zero-expansion copies at the significant end.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .core import NumberSystemSpec, new_spec, zero_digit
from .errors import (
    BadPadLength,
    NoZeroExpansion,
    NotADigit,
    NotRepresentable,
    UnsupportedSpec,
)


@dataclass(frozen=True)
class Expansion:
    """A digit string over a spec, least significant digit first."""

    spec: NumberSystemSpec
    digits: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def msd(self) -> int:
        """Most significant digit."""
        return self.digits[-1]

    @functools.cached_property
    def value(self) -> int:
        return evaluate(self.spec, self.digits)

    def to_json_dict(self) -> dict:
        return {
            "base": self.spec.base,
            "digits_lsf": list(self.digits),
            "value": self.value,
        }


def evaluate(spec: NumberSystemSpec, digits) -> int:
    """Sum d_i * base^i for a least-significant-first digit list."""
    seq = list(digits)
    if not seq:
        raise NotADigit("an expansion needs at least one digit")
    allowed = set(spec.digits)
    total = 0
    for d in reversed(seq):
        if d not in allowed:
            raise NotADigit(f"{d} is not a digit of {spec}")
        total = total * spec.base + d
    return total


def expand(spec: NumberSystemSpec, a: int) -> Expansion:
    """Minimal expansion of a, by orbit walking.

    Emits the forced digit at every step until the running value hits 0
    (after at least one digit, so expand(spec, 0) returns the zero
    expansion).  If the orbit falls into a cycle avoiding 0 instead,
    NotRepresentable reports that cycle.
    """
    b = spec.base
    m = abs(b)
    table = spec.digit_table
    digits: list[int] = []
    orbit: list[int] = []
    index: dict[int, int] = {}
    cur = a
    while True:
        if cur == 0 and digits:
            return Expansion(spec, tuple(digits))
        if cur in index:
            tail = orbit[index[cur]:]
            i = tail.index(min(tail))
            raise NotRepresentable(
                f"{a} never reaches 0 under {spec}; orbit is trapped",
                cycle=tuple(tail[i:] + tail[:i]),
            )
        index[cur] = len(orbit)
        orbit.append(cur)
        d = table[cur % m]
        digits.append(d)
        cur = (cur - d) // b


def zero_expansion(spec: NumberSystemSpec) -> Expansion:
    """Minimal expansion of 0, or NoZeroExpansion when 0 is not periodic."""
    try:
        return expand(spec, 0)
    except NotRepresentable as exc:
        raise NoZeroExpansion(
            f"0 does not return to itself under {spec}"
        ) from exc


def pad(expansion: Expansion, target_length: int) -> Expansion:
    """Lengthen a minimal expansion to target_length without changing its
    value, by appending whole zero-expansion copies at the significant
    end.  Only lengths length + m*L(0) are reachable."""
    extra = target_length - expansion.length
    if extra == 0:
        return expansion
    if extra < 0:
        raise BadPadLength(
            f"cannot shrink a length-{expansion.length} expansion to {target_length}"
        )
    ze = zero_expansion(expansion.spec)
    if extra % ze.length:
        raise BadPadLength(
            f"padding must add whole copies of the length-{ze.length} "
            f"zero expansion; {extra} extra digits requested"
        )
    return Expansion(
        expansion.spec, expansion.digits + ze.digits * (extra // ze.length)
    )


def zero_digit_length_scan(
    spec: NumberSystemSpec, digit_bound: int
) -> dict[int, int | None]:
    """Swap the zero digit for every multiple of the base up to the bound
    and record the zero-expansion length of each variant (None when the
    variant has no zero expansion).  Any finite length occurs for only
    finitely many multiples, which this experiment makes visible."""
    b = spec.base
    if digit_bound < abs(b):
        raise ValueError(f"digit_bound must be at least |base| = {abs(b)}")
    others = [d for d in spec.digits if d != zero_digit(spec)]
    out: dict[int, int | None] = {}
    top = digit_bound // abs(b)
    for mult in range(-top, top + 1):
        cand = mult * abs(b)
        variant = new_spec(b, others + [cand])
        try:
            out[cand] = zero_expansion(variant).length
        except NoZeroExpansion:
            out[cand] = None
    return out


def minimal_length_lower_bound(spec: NumberSystemSpec, ell: int) -> Fraction:
    """Exact lower bound on |a| over all a whose minimal expansion has
    length ell + 1, for specs with |b| >= 3 and all |digits| <= |b|.

    For positive bases the bound depends on whether 0 is a digit.  For
    negative bases it depends on the zero-expansion length L(0), which
    is 1, 2 or 3 under the digit-size hypothesis, and on the parity of
    ell.  Below each formula's smallest applicable ell the bound
    degenerates to the trivial 1 (a single nonzero digit).
    """
    b = spec.base
    big = abs(b)
    if big < 3:
        raise UnsupportedSpec("the length bounds need |base| >= 3")
    if any(abs(d) > big for d in spec.digits):
        raise UnsupportedSpec("the length bounds need all |digits| <= |base|")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if b > 0:
        if 0 in spec.digits:
            return Fraction(b**ell + b - 2, b - 1)
        if ell == 0:
            return Fraction(1)
        return Fraction(b**ell - 2 * b ** (ell - 1) + b, b - 1)
    try:
        l0 = zero_expansion(spec).length
    except NoZeroExpansion as exc:
        raise UnsupportedSpec(f"{spec} has no zero expansion") from exc
    if l0 > 3:
        raise UnsupportedSpec(
            f"zero expansion of length {l0} exceeds the covered cases"
        )
    even = ell % 2 == 0
    if l0 == 1:
        num = big**ell - 1 if even else big**ell - big
    elif l0 == 2:
        if ell < 1:
            return Fraction(1)
        num = big**ell - big ** (ell - 1) + (big - 1 if even else 1 - big)
    else:
        if ell < 2:
            return Fraction(1)
        num = big**ell - 2 * big ** (ell - 2) + (1 if even else big)
    return 1 + Fraction(num, big * big - 1)
