"""Word rewriting that certifies the digit-shifting construction.

Replacing a digit d by d - u*b^k is valid for every exponent k exactly
when a finite rewriting game can always be won.  The states are padded
words: k ordinary digits followed by a most-significant part that is a
single entry in {-1, 0, 1} for positive bases, or a two-entry tail
encoding -1, 0 or 1 for negative bases.  One rewrite consumes the least
significant entry the way the step map consumes a digit, except that
consuming d injects u into the most significant part, which is then
re-expanded in place.

If from every start word some iterate is free of d, each number keeps a
finite expansion after the replacement, for all k at once, and
:func:`verify_criterion` reports that by exhausting the word space.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator

from .constructions import FamilySpec, _check_shift_range
from .core import NumberSystemSpec, digit_of
from .errors import (
    NotADigit,
    RewriteError,
    StateSpaceTooLarge,
    UnsupportedBase,
    UnsupportedSpec,
)
from .expansions import zero_expansion

DEFAULT_STATE_CAP = 10_000_000


@dataclass(frozen=True)
class CriterionResult:
    all_escape: bool
    max_steps: int
    stuck_word: tuple[int, ...] | None
    words_checked: int


def word_value(word, base: int) -> int:
    """Sum w_i * base^i of a padded word (least significant first)."""
    total = 0
    for w in reversed(word):
        total = total * base + w
    return total


@functools.lru_cache(maxsize=None)
def _digit_set(spec: NumberSystemSpec) -> frozenset[int]:
    return frozenset(spec.digits)


@functools.lru_cache(maxsize=None)
def _zero_info(spec: NumberSystemSpec) -> tuple[int, tuple[int, ...]]:
    """Zero-expansion length and digits; (1, (0,)) when 0 is a digit."""
    if 0 in spec.digits:
        return 1, (0,)
    ze = zero_expansion(spec)
    return ze.length, ze.digits


@functools.lru_cache(maxsize=None)
def _tail_pairs(spec: NumberSystemSpec) -> dict[int, tuple[int, int]]:
    """For negative bases: the two-entry tails encoding -1, 0 and 1.

    Pairs (p, q) over digits-plus-0 with p + q*base in {-1, 0, 1}; the
    all-zero pair is excluded when the zero expansion itself has length
    2, since the genuine expansion takes its place.  Each value gets at
    most one tail.
    """
    l0, _ = _zero_info(spec)
    pool = set(spec.digits) | {0}
    pairs: dict[int, tuple[int, int]] = {}
    for p in pool:
        for q in pool:
            v = p + q * spec.base
            if v not in (-1, 0, 1):
                continue
            if (p, q) == (0, 0) and l0 == 2:
                continue
            if v in pairs:
                raise RewriteError(
                    f"values {pairs[v]} and {(p, q)} both encode {v} over {spec}"
                )
            pairs[v] = (p, q)
    return pairs


def _validate(family: FamilySpec) -> None:
    spec = family.base_set
    if abs(spec.base) < 3:
        raise UnsupportedBase("word rewriting needs |base| >= 3")
    if any(abs(d) > abs(spec.base) for d in spec.digits):
        raise UnsupportedSpec("word rewriting needs all |digits| <= |base|")
    if family.digit not in spec.digits:
        raise NotADigit(f"{family.digit} is not a digit of {spec}")
    if family.exponent < 1:
        raise ValueError("the exponent must be at least 1")
    _check_shift_range(spec, family.shift)


def state_space_size(family: FamilySpec) -> int:
    spec = family.base_set
    k = family.exponent
    tails = 3 if spec.base > 0 else len(_tail_pairs(spec))
    return len(spec.digits) ** k * tails


def word_space(family: FamilySpec) -> Iterator[tuple[int, ...]]:
    """Every start word, in a fixed deterministic order."""
    spec = family.base_set
    k = family.exponent
    if spec.base > 0:
        tails: list[tuple[int, ...]] = [(-1,), (0,), (1,)]
    else:
        tails = sorted(_tail_pairs(spec).values())
    for body in itertools.product(spec.digits, repeat=k):
        for tail in tails:
            yield body + tail


def step_word(family: FamilySpec, word: tuple[int, ...]) -> tuple[int, ...]:
    """One rewrite of a padded word.  Words must come from word_space;
    every output stays in the space while the base set is a number
    system with small digits."""
    if family.base_set.base > 0:
        return _step_pos(family, word)
    return _step_neg(family, word)


def _reexpand(spec: NumberSystemSpec, v: int) -> tuple[int, int]:
    # v as digit + carry*base with carry in {-1, 0, 1}
    p = digit_of(spec, v)
    q = (v - p) // spec.base
    if q not in (-1, 0, 1):
        raise RewriteError(f"{v} needs a carry of {q} over {spec}")
    return p, q


def _step_pos(family: FamilySpec, word: tuple[int, ...]) -> tuple[int, ...]:
    spec = family.base_set
    k = family.exponent
    if word[0] == family.digit:
        return word[1:k] + _reexpand(spec, word[k] + family.shift)
    if word[k] != 0 or 0 in _digit_set(spec):
        return word[1:] + (0,)
    # trailing 0 is not a digit: emit the two-digit zero expansion instead
    return word[1:k] + _reexpand(spec, 0)


def _step_neg(family: FamilySpec, word: tuple[int, ...]) -> tuple[int, ...]:
    spec = family.base_set
    b = spec.base
    k = family.exponent
    if word[0] == family.digit:
        v = word[k] + word[k + 1] * b + family.shift
        p = digit_of(spec, v)
        w = (v - p) // b
        pair = _tail_pairs(spec).get(w)
        if pair is None:
            raise RewriteError(f"no two-entry tail encodes {w} over {spec}")
        return word[1:k] + (p,) + pair
    if word[k + 1] != 0 or 0 in _digit_set(spec):
        return word[1:] + (0,)
    l0, zdigits = _zero_info(spec)
    if l0 == 2 and word[k] != 0:
        # replace the spent tail by the two-digit zero expansion
        return word[1 : k + 1] + zdigits
    if l0 == 3 and word[k] == 0:
        # both tail entries are 0: they carried no value, re-pad with the
        # three-digit zero expansion
        return word[1:k] + zdigits
    if l0 == 3:
        # tail (x, 0) with x nonzero: a plain shift works, the all-zero
        # tail is admitted whenever the zero expansion is not length 2
        return word[1:] + (0,)
    raise RewriteError(f"no rewrite applies to {word} over {spec}")


def _check_membership(family: FamilySpec, word: tuple[int, ...]) -> None:
    spec = family.base_set
    k = family.exponent
    digits = _digit_set(spec)
    if spec.base > 0:
        ok = (
            len(word) == k + 1
            and all(w in digits for w in word[:k])
            and word[k] in (-1, 0, 1)
        )
    else:
        ok = (
            len(word) == k + 2
            and all(w in digits for w in word[:k])
            and (word[k], word[k + 1]) in set(_tail_pairs(spec).values())
        )
    if not ok:
        raise RewriteError(f"rewriting left the word space: {word}")


def _resolve(
    family: FamilySpec,
    start: tuple[int, ...],
    status: dict[tuple[int, ...], tuple[bool, int]],
) -> None:
    """Follow rewrites from start until the fate is known, memoising the
    escape flag and distance of every word on the way."""
    d = family.digit
    path: list[tuple[int, ...]] = []
    pos: dict[tuple[int, ...], int] = {}
    w = start
    while True:
        known = status.get(w)
        if known is not None:
            esc, dist = known
            break
        if d not in w:
            esc, dist = True, 0
            status[w] = (True, 0)
            break
        if w in pos:
            # a cycle of words all containing d never escapes
            esc, dist = False, 0
            break
        pos[w] = len(path)
        path.append(w)
        w = step_word(family, w)
        _check_membership(family, w)
    for node in reversed(path):
        if esc:
            dist += 1
        status[node] = (esc, dist)


def verify_criterion(
    family: FamilySpec, *, state_cap: int | None = None
) -> CriterionResult:
    """Exhaustively test whether every padded word eventually rewrites to
    one avoiding the replaced digit.

    all_escape True certifies the shifted family; max_steps is the worst
    escape time over all starts, and stuck_word (when present) is the
    first start that can never escape.  The word space |digits|^k * 3
    must stay within state_cap (default 10_000_000).
    """
    _validate(family)
    cap = DEFAULT_STATE_CAP if state_cap is None else state_cap
    size = state_space_size(family)
    if size > cap:
        raise StateSpaceTooLarge(f"{size} start words exceed the cap of {cap}")
    status: dict[tuple[int, ...], tuple[bool, int]] = {}
    max_steps = 0
    stuck: tuple[int, ...] | None = None
    checked = 0
    for start in word_space(family):
        checked += 1
        if start not in status:
            _resolve(family, start, status)
        esc, dist = status[start]
        if esc:
            max_steps = max(max_steps, dist)
        elif stuck is None:
            stuck = start
    return CriterionResult(stuck is None, max_steps, stuck, checked)
