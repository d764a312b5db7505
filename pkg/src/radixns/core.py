"""Integer bases with irredundant digit sets and the digit-stripping map.

A spec couples a base b (|b| >= 2) with exactly |b| digits, one from
each residue class modulo b.  The digit set need not contain 0; the
unique digit divisible by b plays that role instead.  Everything else
in the package is built on two primitives defined here: the digit
function, which picks the digit congruent to a given integer, and the
step map a -> (a - digit(a)) / b that strips one digit off.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import BaseTooSmall, IncompleteResidues, WrongDigitCount


@dataclass(frozen=True)
class NumberSystemSpec:
    """A base paired with one digit per residue class, held in ascending order.

    Instances should be built through :func:`new_spec`, which
    canonicalises and validates the digit list.
    """

    base: int
    digits: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return abs(self.base)

    @functools.cached_property
    def digit_table(self) -> tuple[int, ...]:
        """Digit for each residue 0..|base|-1, built once per spec."""
        m = abs(self.base)
        table = [0] * m
        for d in self.digits:
            table[d % m] = d
        return tuple(table)

    def __repr__(self) -> str:  # keeps error messages short
        return f"spec({self.base}, {{{', '.join(map(str, self.digits))}}})"


def new_spec(base: int, digits) -> NumberSystemSpec:
    """Validate and canonicalise a digit list into a NumberSystemSpec.

    The digits are deduplicated and sorted ascending.  Raises
    BaseTooSmall, WrongDigitCount or IncompleteResidues when the pair
    cannot form a pre-number system.
    """
    if abs(base) < 2:
        raise BaseTooSmall(f"|base| must be at least 2, got {base}")
    unique = sorted(set(int(d) for d in digits))
    m = abs(base)
    if len(unique) != m:
        raise WrongDigitCount(
            f"base {base} needs exactly {m} distinct digits, got {len(unique)}"
        )
    seen: dict[int, int] = {}
    for d in unique:
        r = d % m
        if r in seen:
            raise IncompleteResidues(
                f"digits {seen[r]} and {d} are congruent modulo {base}"
            )
        seen[r] = d
    return NumberSystemSpec(base, tuple(unique))


def digit_of(spec: NumberSystemSpec, a: int) -> int:
    """The unique digit congruent to a modulo the base."""
    return spec.digit_table[a % spec.modulus]


def step(spec: NumberSystemSpec, a: int) -> int:
    """One application of the dynamics: (a - digit_of(a)) / base, exactly."""
    return (a - spec.digit_table[a % spec.modulus]) // spec.base


def zero_digit(spec: NumberSystemSpec) -> int:
    """The digit divisible by the base (0 itself when present)."""
    return spec.digit_table[0]
