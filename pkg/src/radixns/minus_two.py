"""Two-digit systems in base -2, classified in closed form.

A pair {low, high} with one even and one odd digit is a pre-number
system in base -2.  Its attractor is always the integer interval from
ceil((2*low - high)/3) to floor((2*high - low)/3), and the pair is a
number system exactly when, in addition, no digit is a nonzero multiple
of 3, the pair satisfies 2*low <= high and 2*high >= low, and
high - low is a power of 3 (3^0 included).  The power-of-3 condition is
where cycle counting happens: cycle lengths divide each other only in
3-power steps, certified per cycle by an exact binary-digit identity
and counted with a lifting rule for the 3-adic valuation of (-2)^n - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import new_spec
from .errors import BadPair, BadPrime, NotCoprime, NotInAttractor


@dataclass(frozen=True)
class Minus2Verdict:
    """Classification of one pair, with each condition reported."""

    low: int
    high: int
    cond_parity: bool
    cond_no3: bool
    cond_geometry: bool
    cond_power3: bool
    valid: bool
    attractor_lo: int
    attractor_hi: int


@dataclass(frozen=True)
class CycleCertificate:
    """One cycle of a pair, with the digit-choice bits along it."""

    start: int
    length: int
    epsilons: tuple[int, ...]


def _check_pair(low: int, high: int) -> None:
    if low >= high:
        raise BadPair(f"need low < high, got {low}, {high}")
    if (high - low) % 2 == 0:
        raise BadPair(f"{{{low}, {high}}} holds two digits of equal parity")


def minus2_attractor_interval(low: int, high: int) -> tuple[int, int]:
    """Endpoints of the attractor interval of the pair {low, high}."""
    _check_pair(low, high)
    lo = -((high - 2 * low) // 3)  # ceil((2*low - high) / 3)
    hi = (2 * high - low) // 3
    return lo, hi


def _is_power_of_3(n: int) -> bool:
    if n < 1:
        return False
    while n % 3 == 0:
        n //= 3
    return n == 1


def minus2_classify(low: int, high: int) -> Minus2Verdict:
    """Decide validity of {low, high} from the four closed-form conditions."""
    _check_pair(low, high)
    att_lo, att_hi = minus2_attractor_interval(low, high)
    cond_parity = True  # _check_pair enforced it
    cond_no3 = (low % 3 != 0 or low == 0) and (high % 3 != 0 or high == 0)
    cond_geometry = 2 * low <= high and 2 * high >= low
    cond_power3 = _is_power_of_3(high - low)
    return Minus2Verdict(
        low=low,
        high=high,
        cond_parity=cond_parity,
        cond_no3=cond_no3,
        cond_geometry=cond_geometry,
        cond_power3=cond_power3,
        valid=cond_parity and cond_no3 and cond_geometry and cond_power3,
        attractor_lo=att_lo,
        attractor_hi=att_hi,
    )


def minus2_one_cycle_criterion(d0: int, d1: int) -> bool:
    """True when the pair's dynamics has exactly one cycle: the digit
    difference is 1 in absolute value, or a positive power of 3 with
    both digits coprime to 3."""
    _check_pair(min(d0, d1), max(d0, d1))
    delta = abs(d0 - d1)
    if delta == 1:
        return True
    return delta % 3 == 0 and _is_power_of_3(delta) and d0 % 3 != 0 and d1 % 3 != 0


def cycle_certificate(d0: int, d1: int, a: int) -> CycleCertificate:
    """Walk the cycle through a and certify its length.

    The bit epsilon_i records which digit the i-th step consumed (1 for
    d1).  With delta = d0 - d1 and l the cycle length, the identity

        (d0 - 3a) * ((-2)^l - 1) / (-3 * delta) = sum epsilon_i (-2)^i

    holds exactly; it is what pins down the possible lengths.  The start
    must lie in the attractor interval.
    """
    att_lo, att_hi = minus2_attractor_interval(min(d0, d1), max(d0, d1))
    if not att_lo <= a <= att_hi:
        raise NotInAttractor(f"{a} is outside the attractor [{att_lo}, {att_hi}]")
    spec = new_spec(-2, (d0, d1))
    table = spec.digit_table
    eps = []
    cur = a
    while True:
        digit = table[cur % 2]
        eps.append(1 if digit == d1 else 0)
        cur = (cur - digit) // -2
        if cur == a:
            break
    length = len(eps)
    delta = d0 - d1
    numerator = (d0 - 3 * a) * ((-2) ** length - 1)
    if numerator % (-3 * delta):
        raise RuntimeError(f"certificate identity broke for {{{d0}, {d1}}} at {a}")
    lhs = numerator // (-3 * delta)
    rhs = sum(e * (-2) ** i for i, e in enumerate(eps))
    if lhs != rhs:
        raise RuntimeError(f"certificate identity broke for {{{d0}, {d1}}} at {a}")
    return CycleCertificate(start=a, length=length, epsilons=tuple(eps))


def scan_pairs_for_low(low: int, hi: int) -> list[Minus2Verdict]:
    """Verdicts for a fixed smaller digit against every larger digit of
    opposite parity up to hi."""
    return [minus2_classify(low, high) for high in range(low + 1, hi + 1, 2)]


def minus2_scan(lo: int, hi: int) -> list[Minus2Verdict]:
    """Classify every pair lo <= low < high <= hi of opposite parity,
    ordered by the smaller digit, then the larger."""
    out: list[Minus2Verdict] = []
    for low in range(lo, hi):
        out.extend(scan_pairs_for_low(low, hi))
    return out


def _check_odd_prime(q: int) -> None:
    if q < 3 or q % 2 == 0:
        raise BadPrime(f"{q} is not an odd prime")
    for p in range(3, math.isqrt(q) + 1, 2):
        if q % p == 0:
            raise BadPrime(f"{q} is not an odd prime")


def padic_valuation(q: int, n: int) -> int:
    """Multiplicity of the odd prime q in n (sign ignored)."""
    _check_odd_prime(q)
    if n == 0:
        raise ValueError("0 has no finite valuation")
    n = abs(n)
    count = 0
    while n % q == 0:
        n //= q
        count += 1
    return count


def multiplicative_order(b: int, q: int) -> int:
    """Least e >= 1 with b^e = 1 modulo q, by direct iteration."""
    if q < 2:
        raise ValueError(f"need a modulus of at least 2, got {q}")
    if math.gcd(b, q) != 1:
        raise NotCoprime(f"gcd({b}, {q}) != 1, no order exists")
    x = b % q
    cur = x
    order = 1
    while cur != 1:
        cur = cur * x % q
        order += 1
    return order


def lifted_valuation(q: int, b: int, n: int) -> int:
    """q-adic valuation of b^n - 1 without computing b^n.

    Zero when the order of b modulo q does not divide n; otherwise the
    valuation lifts from the order's level: v(n) + v(b^order - 1).
    """
    _check_odd_prime(q)
    if abs(b) < 2:
        raise ValueError("need |b| >= 2")
    if n < 1:
        raise ValueError("need n >= 1")
    if math.gcd(b, q) != 1:
        raise NotCoprime(f"gcd({b}, {q}) != 1")
    order = multiplicative_order(b, q)
    if n % order:
        return 0
    return padic_valuation(q, n) + padic_valuation(q, b**order - 1)
