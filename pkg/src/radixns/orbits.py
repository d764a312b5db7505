"""Attractors and cycle structure of the digit-stripping dynamics.

Iterating the step map from any integer eventually becomes periodic,
because once |a| exceeds the contraction radius K/(|b|-1) the map
strictly shrinks absolute values.  The attractor collected here is the
minimal one: the union of all periodic orbits.  A spec is a number
system exactly when that attractor is a single cycle through 0, which
is also equivalent to every integer reaching 0 after at least one step.

Every periodic point lies in a closed interval computable from the
extreme digits.  For positive bases the integer points of that interval
are closed under the step map and serve directly as seeds; for negative
bases the interval is only guaranteed closed under two steps, so seeds
are drawn from the wider box [-ceil(L), ceil(L)] given by the
contraction radius L.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .core import NumberSystemSpec


@dataclass(frozen=True)
class Bounds:
    """Contraction data: K = max |digit|, radius L = K/(|b|-1), and the
    exact rational interval [lo, hi] containing every periodic point."""

    max_abs_digit: int
    radius: Fraction
    lo: Fraction
    hi: Fraction

    def integer_interval(self) -> tuple[int, int]:
        """Smallest and largest integers inside [lo, hi]."""
        return (math.ceil(self.lo), math.floor(self.hi))


@dataclass(frozen=True)
class AttractorReport:
    members: frozenset[int]
    cycles: tuple[tuple[int, ...], ...]
    contains_zero: bool

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def valid(self) -> bool:
        """True when the attractor is one cycle passing through 0."""
        return self.contains_zero and len(self.cycles) == 1

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def bounds(spec: NumberSystemSpec) -> Bounds:
    b = spec.base
    dmin, dmax = spec.digits[0], spec.digits[-1]
    k = max(abs(dmin), abs(dmax))
    radius = Fraction(k, abs(b) - 1)
    if b > 0:
        lo = Fraction(-dmax, b - 1)
        hi = Fraction(-dmin, b - 1)
    else:
        den = b * b - 1
        lo = Fraction(-dmin * b - dmax, den)
        hi = Fraction(-dmax * b - dmin, den)
    return Bounds(k, radius, lo, hi)


def seed_interval(spec: NumberSystemSpec, wide: bool | None = None) -> tuple[int, int]:
    """Integer seed range guaranteed to meet every cycle.

    wide=None picks the tight periodic-point interval for positive
    bases and the contraction box for negative ones; True or False
    forces the choice (both ranges find the same cycles).
    """
    if wide is None:
        wide = spec.base < 0
    bd = bounds(spec)
    if wide:
        r = math.ceil(bd.radius)
        return (-r, r)
    return bd.integer_interval()


def _step_cap(spec: NumberSystemSpec) -> int:
    # An orbit started inside the contraction box stays there, so it must
    # repeat within its width; the factor 4 is defensive slack only.
    width = 2 * math.ceil(bounds(spec).radius) + 1
    return 4 * width + 4


def _iter_cycles(spec: NumberSystemSpec, seeds: Iterable[int]) -> Iterator[list[int]]:
    """Yield each distinct cycle once, in orbit order, walking the seeds.

    Already-resolved integers short-circuit later walks, so the total
    work is linear in the number of distinct integers visited.
    """
    b = spec.base
    m = abs(b)
    table = spec.digit_table
    cap = _step_cap(spec)
    resolved: set[int] = set()
    for seed in seeds:
        if seed in resolved:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        a = seed
        while a not in resolved and a not in pos:
            pos[a] = len(path)
            path.append(a)
            a = (a - table[a % m]) // b
            if len(path) > cap:
                raise RuntimeError(
                    f"orbit of {seed} under {spec} did not repeat within "
                    f"{cap} steps; contraction bound violated"
                )
        if a not in resolved:
            yield path[pos[a]:]
        resolved.update(path)


def _canonical(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def attractor(spec: NumberSystemSpec, *, wide_seeds: bool | None = None) -> AttractorReport:
    """All periodic orbits, as canonical cycles.

    Cycles are rotated to start at their smallest member and sorted by
    (length, first member).  Members are the union of all cycles.
    """
    lo, hi = seed_interval(spec, wide_seeds)
    cycles = sorted(
        (_canonical(c) for c in _iter_cycles(spec, range(lo, hi + 1))),
        key=lambda c: (len(c), c[0]),
    )
    members = frozenset(itertools.chain.from_iterable(cycles))
    return AttractorReport(members, tuple(cycles), 0 in members)


def one_cycle_fixed_points(spec: NumberSystemSpec) -> list[int]:
    """All fixed points of the step map: a = d/(1-b) for digits d divisible
    by 1-b.  A nonzero entry rules the spec out as a number system."""
    unit = 1 - spec.base
    return sorted(d // unit for d in spec.digits if d % unit == 0)


def is_number_system(spec: NumberSystemSpec) -> bool:
    """Decide validity: exactly one cycle, and it passes through 0.

    Cheap rejections first: any nonzero fixed point is a cycle avoiding
    0.  The full walk then starts at 0, so an invalid zero orbit is
    caught on the first yielded cycle, and any further cycle (which
    cannot contain 0 again) rejects as soon as it appears.
    """
    unit = 1 - spec.base
    for d in spec.digits:
        if d != 0 and d % unit == 0:
            return False
    lo, hi = seed_interval(spec)
    seeds = itertools.chain((0,), range(lo, hi + 1))
    found = False
    for cycle in _iter_cycles(spec, seeds):
        if 0 not in cycle:
            return False
        found = True
    return found
