"""Brute-force reference implementations used to check the library.

Nothing here imports from radixns.  Digits are found by scanning the
whole list, orbits are walked with plain dict bookkeeping, and every
bound is derived from first principles, so a bug in the package cannot
hide in its own oracle.
"""

from __future__ import annotations

import math
from itertools import product

from hypothesis import strategies as st


def naive_digit(base: int, digits, a: int) -> int:
    matches = [d for d in digits if (a - d) % base == 0]
    assert len(matches) == 1, (base, digits, a)
    return matches[0]


def naive_step(base: int, digits, a: int) -> int:
    d = naive_digit(base, digits, a)
    q, r = divmod(a - d, base)
    assert r == 0
    return q


def contraction_bound(base: int, digits) -> int:
    """Every periodic point a satisfies |a| <= max|d| / (|b| - 1)."""
    return math.ceil(max(abs(d) for d in digits) / (abs(base) - 1))


def _canonical(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def naive_attractor(base: int, digits) -> tuple[set[int], set[tuple[int, ...]]]:
    """All periodic points and canonical cycles, by seeding the whole
    contraction box.  Each periodic point is its own seed, so no cycle
    can be missed."""
    bound = contraction_bound(base, digits)
    members: set[int] = set()
    cycles: set[tuple[int, ...]] = set()
    for seed in range(-bound, bound + 1):
        a = seed
        seen: dict[int, int] = {}
        path: list[int] = []
        while a not in seen:
            seen[a] = len(path)
            path.append(a)
            a = naive_step(base, digits, a)
            assert len(path) < 100_000, "orbit failed to repeat"
        cyc = path[seen[a]:]
        cycles.add(_canonical(cyc))
        members.update(cyc)
    return members, cycles


def naive_is_number_system(base: int, digits) -> bool:
    members, cycles = naive_attractor(base, digits)
    return len(cycles) == 1 and 0 in members


def naive_expand(base: int, digits, a: int) -> list[int] | None:
    """Digits of the minimal expansion, or None when the orbit is trapped."""
    out: list[int] = []
    seen: set[int] = set()
    cur = a
    while True:
        if cur == 0 and out:
            return out
        if cur in seen:
            return None
        seen.add(cur)
        d = naive_digit(base, digits, cur)
        out.append(d)
        cur = (cur - d) // base


def naive_evaluate(base: int, digits_lsf) -> int:
    return sum(d * base**i for i, d in enumerate(digits_lsf))


def residue_systems(base: int, max_abs: int):
    """Every complete residue system for base whose digits all satisfy
    |d| <= max_abs, as sorted tuples."""
    m = abs(base)
    per_residue = []
    for r in range(m):
        lo = -((max_abs + r) // m)  # smallest k with |r + k*m| <= max_abs
        hi = (max_abs - r) // m
        per_residue.append([r + k * m for k in range(lo, hi + 1)])
    for combo in product(*per_residue):
        yield tuple(sorted(combo))


@st.composite
def small_specs(draw, min_mod: int = 2, max_mod: int = 6, spread: int = 3):
    """(base, digits) pairs: a signed base and one digit per residue
    class, each residue representative moved by a small multiple of the
    base.  Distinct residues make the digits automatically distinct."""
    mod = draw(st.integers(min_mod, max_mod))
    base = mod if draw(st.booleans()) else -mod
    digits = tuple(
        r + base * draw(st.integers(-spread, spread)) for r in range(mod)
    )
    return base, digits
