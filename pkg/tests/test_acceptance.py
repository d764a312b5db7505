"""End-to-end acceptance sweep.

Each test covers one headline claim of the package and prints a single
[PASS]/[FAIL] verdict line, so a full run doubles as a checklist.  The
checks here are deliberately redundant with the unit modules: frozen
values, independent oracles, and timing budgets, all in one place.

Two sub-cases are known to fail and are left failing on purpose; see
the assertion messages in test_05 and test_08.
"""

import itertools
import sys
import time

sys.path.insert(0, __file__.rsplit("/", 1)[0])

from oracles import naive_is_number_system, residue_systems

from radixns import (
    FamilySpec,
    attractor,
    bad_set,
    check_small_digit_set,
    is_number_system,
    lifted_valuation,
    minus2_classify,
    new_spec,
    nfold,
    one_cycle_fixed_points,
    padic_valuation,
    shift_family,
    step_word,
    translate_scan,
    verify_criterion,
    word_space,
    word_value,
    zero_expansion,
)


def _verdict(capsys, ok: bool, label: str) -> None:
    with capsys.disabled():
        print(f"[{'PASS' if ok else 'FAIL'}] {label}")


# Attractor of base -2 with digits {30, 111}, cycles rotated to start at
# their smallest member and sorted by (length, first entry).
GOLDEN_CYCLES = (
    (10,),
    (37,),
    (-17, 64),
    (-8, 19, 46),
    (1, 55, 28),
    (-14, 22, 4, 13, 49, 31, 40, -5, 58),
    (-11, 61, 25, 43, 34, -2, 16, 7, 52),
    (-16, 23, 44, -7, 59, 26, 2, 14, 8, 11, 50, -10, 20, 5, 53, 29, 41, 35,
     38, -4, 17, 47, 32, -1, 56, -13, 62),
    (-15, 63, 24, 3, 54, -12, 21, 45, 33, 39, 36, -3, 57, 27, 42, -6, 18, 6,
     12, 9, 51, 30, 0, 15, 48, -9, 60),
)


def test_01_golden_pair_attractor(capsys):
    t0 = time.perf_counter()
    report = attractor(new_spec(-2, [30, 111]))
    elapsed = time.perf_counter() - t0

    problems = []
    if report.cycles != GOLDEN_CYCLES:
        problems.append("cycle list differs from the frozen one")
    if report.members != frozenset(range(-17, 65)):
        problems.append("members differ from -17..64")
    if sorted(report.cycle_lengths) != [1, 1, 2, 3, 3, 9, 9, 27, 27]:
        problems.append(f"length multiset {sorted(report.cycle_lengths)}")
    if elapsed >= 0.1:
        problems.append(f"took {elapsed:.3f} s, budget 0.1 s")

    _verdict(capsys, not problems,
             f"01 attractor of (-2, {{30,111}}) bit-exact, 9 cycles "
             f"({elapsed * 1000:.1f} ms)")
    assert not problems, problems


def test_02_two_digit_classification_vs_oracle(capsys):
    t0 = time.perf_counter()
    pairs = 0
    mismatches = []
    for low in range(-200, 200):
        for high in range(low + 1, 201, 2):
            pairs += 1
            verdict = minus2_classify(low, high)
            oracle = attractor(new_spec(-2, [low, high]),
                               wide_seeds=False).valid
            if verdict.valid != oracle:
                mismatches.append((low, high, verdict.valid, oracle))
            elif verdict.valid and not (2 * low <= high and 2 * high >= low):
                mismatches.append((low, high, "outside wedge"))
    elapsed = time.perf_counter() - t0

    problems = list(mismatches[:5])
    if elapsed >= 10.0:
        problems.append(f"took {elapsed:.1f} s, budget 10 s")

    _verdict(capsys, not problems,
             f"02 closed-form base -2 classifier agrees with the orbit "
             f"oracle on {pairs} pairs ({elapsed:.1f} s)")
    assert not problems, problems


def test_03_small_digit_sufficient_condition(capsys):
    t0 = time.perf_counter()
    passing = 0
    failures = []
    for base in (3, 4, 5, 6, 7, -3, -4, -5, -6, -7):
        for digits in residue_systems(base, abs(base)):
            spec = new_spec(base, digits)
            if not check_small_digit_set(spec):
                continue
            passing += 1
            if not is_number_system(spec):
                failures.append((base, digits, "library"))
            if not naive_is_number_system(base, list(digits)):
                failures.append((base, digits, "naive"))
    elapsed = time.perf_counter() - t0

    problems = list(failures[:5])
    if elapsed >= 60.0:
        problems.append(f"took {elapsed:.1f} s, budget 60 s")

    _verdict(capsys, not problems,
             f"03 small-digit test sound on all {passing} qualifying sets, "
             f"|b| in 3..7 ({elapsed:.2f} s)")
    assert not problems, problems


def test_04_nfold_parity_law(capsys):
    base_spec = new_spec(-2, [1, 2])
    problems = []
    for n in range(1, 7):
        folded = nfold(base_spec, n)
        if is_number_system(folded) != (n % 2 == 1):
            problems.append(f"validity wrong at n={n}")
        if attractor(folded).members != frozenset({0, 1}):
            problems.append(f"attractor members changed at n={n}")

    _verdict(capsys, not problems,
             "04 n-fold of (-2, {1,2}) valid exactly for odd n, "
             "attractor {0,1} throughout")
    assert not problems, problems


def _family_rows():
    # digit sets valid for every k >= 1, one row per (base, k)
    for b in (4, 5, 6):
        for k in range(1, 5):
            yield b, list(range(0, b - 1)) + [-1 - b ** k]
            yield b, [-1] + list(range(2, b - 1)) + [b, 1 + b ** k]
    for b in (-4, -5, -6):
        cap = -b
        for k in range(1, 5):
            yield b, list(range(0, cap - 1)) + [cap - 1 - b ** k]
            yield b, [x for x in range(1, cap + 1) if x != 3] + [3 - b ** k]


def test_05_infinite_families_and_zero_digit_failures(capsys):
    problems = []
    rows = 0
    for base, digits in _family_rows():
        rows += 1
        if not is_number_system(new_spec(base, digits)):
            problems.append(("family not valid", base, sorted(digits)))

    # Shifting the zero digit instead is expected to break validity.
    for k in (2, 3):
        expected_invalid = (
            (5, [-5 + 5 ** k, 1, 2, 3, -1], (5 - 5 ** k) // 4),
            (5, [-5 - 5 ** k, 1, 2, 3, -1], None),
            (-5, [-5 - (-5) ** k, 1, 2, 3, 4], (-5 - (-5) ** k) // 6),
        )
        for base, digits, fixed_point in expected_invalid:
            spec = new_spec(base, digits)
            if is_number_system(spec):
                problems.append(("zero-digit shift still valid",
                                 base, sorted(digits), f"k={k}"))
            elif fixed_point is not None:
                if fixed_point not in one_cycle_fixed_points(spec):
                    problems.append(("predicted 1-cycle missing",
                                     base, fixed_point, f"k={k}"))

    _verdict(capsys, not problems,
             f"05 {rows} shifted-digit family members valid, zero-digit "
             f"shifts invalid at k=2,3")
    assert not problems, (
        "known failure: (5, {-30, -1, 1, 2, 3}) is demanded invalid at k=2 "
        "but is a genuine number system, attractor = single cycle (0, 6, 1); "
        f"details {problems}")


BAD_SET_ROWS = (
    (5, (-1, 0, 1, 2, 3), 1, {0, 1, 2}),
    (5, (-1, 1, 2, 3, 5), 1, {-1, 1, 2, 5}),
    (5, (-3, -1, 1, 3, 5), 1, {-3, -1, 1, 5}),
    (-5, (0, 1, 2, 3, 4), 1, {0, 1, 2}),
    (-5, (1, 2, 3, 4, 5), 1, {1, 2, 5}),
    (-5, (-5, -3, -1, 1, 3), 1, {-5, -3, -1, 1}),
)


def test_06_worked_bad_sets(capsys):
    problems = []
    for base, digits, u, expected in BAD_SET_ROWS:
        got = bad_set(new_spec(base, digits), u)
        if got.members != frozenset(expected):
            problems.append((base, digits, u, sorted(got.members)))

    _verdict(capsys, not problems,
             "06 six worked bad-set computations reproduce exactly "
             "(b = 5 and b = -5)")
    assert not problems, problems


def test_07_rewrite_verification_all_admissible(capsys):
    t0 = time.perf_counter()
    families = 0
    words = 0
    problems = []
    for base in (4, 5, -4, -5):
        modulus = abs(base)
        for digits in residue_systems(base, modulus):
            spec = new_spec(base, digits)
            if not is_number_system(spec):
                continue
            limit = modulus - 1 if 0 in spec.digits else modulus - 2
            for u in range(-limit, limit + 1):
                if u == 0:
                    continue
                blocked = bad_set(spec, u).members
                for digit in spec.digits:
                    if digit in blocked:
                        continue
                    for k in (1, 2):
                        family = FamilySpec(spec, digit, u, k)
                        shift_family(family)
                        families += 1
                        result = verify_criterion(family)
                        if not result.all_escape:
                            problems.append(("stuck", base, digits, digit,
                                             u, k, result.stuck_word))
                            continue
                        for word in word_space(family):
                            head = (family.shifted_digit
                                    if word[0] == digit else word[0])
                            rest = step_word(family, word)
                            if word_value(word, base) != head + base * word_value(rest, base):
                                problems.append(("value identity", base,
                                                 digits, digit, u, k, word))
                            words += 1
    elapsed = time.perf_counter() - t0

    _verdict(capsys, not problems,
             f"07 rewrite criterion certifies all {families} admissible "
             f"families, value identity on {words} words ({elapsed:.2f} s)")
    assert not problems, problems[:5]


def test_08_zero_expansion_lengths(capsys):
    problems = []
    for i in range(5):
        length = zero_expansion(new_spec(-2, [1, 3 ** i + 1])).length
        if length != 3 ** i:
            problems.append(f"i={i}: length {length}, demanded {3 ** i}")

    t0 = time.perf_counter()
    zero_expansion(new_spec(-2, [1, 3 ** 4 + 1]))
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        problems.append(f"i=4 took {elapsed:.2f} s, budget 1 s")

    _verdict(capsys, not problems,
             f"08 zero expansion of (-2, {{1, 3^i+1}}) has length 3^i "
             f"for i = 0..4 (i=4 in {elapsed * 1000:.1f} ms)")
    assert not problems, (
        "known failure: at i=0 the digits are {1, 2} and the zero expansion "
        "is (2, 1) of length 2, not 3^0 = 1; the length law starts at i=1; "
        f"details {problems}")


def test_09_lifted_valuation_vs_direct(capsys):
    t0 = time.perf_counter()
    checks = 0
    problems = []
    bases = [b for b in itertools.chain(range(2, 10), range(-9, -1))]
    for q in (3, 5, 7):
        for b in bases:
            if b % q == 0:
                continue
            power = 1
            for n in range(1, 201):
                power *= b
                if lifted_valuation(q, b, n) != padic_valuation(q, power - 1):
                    problems.append((q, b, n))
                checks += 1
    elapsed = time.perf_counter() - t0

    _verdict(capsys, not problems,
             f"09 lifted valuation equals direct valuation of b^n - 1 on "
             f"{checks} triples ({elapsed:.2f} s)")
    assert not problems, problems[:5]


def test_10_translation_hits_are_finite_and_small(capsys):
    spec = new_spec(5, [-1, 0, 1, 2, 3])
    digits = sorted(spec.digits)

    plain = translate_scan(spec, -500, 500)
    plain_wide = translate_scan(spec, -1000, 1000)
    kept = translate_scan(spec, -500, 500, keep_zero=True)
    kept_wide = translate_scan(spec, -1000, 1000, keep_zero=True)

    plain_oracle = [t for t in range(-25, 26)
                    if naive_is_number_system(5, [d + t for d in digits])]
    kept_oracle = []
    for t in range(-25, 26):
        moved = [0] + [d + t for d in digits if d != 0]
        if len({d % 5 for d in moved}) != 5:
            continue
        if naive_is_number_system(5, moved):
            kept_oracle.append(t)

    problems = []
    if plain != plain_oracle:
        problems.append(f"plain hits {plain} vs oracle {plain_oracle}")
    if kept != kept_oracle:
        problems.append(f"keep-zero hits {kept} vs oracle {kept_oracle}")
    if plain != plain_wide or kept != kept_wide:
        problems.append("hit list changed when the window doubled")
    if any(abs(t) > 25 for t in plain + kept):
        problems.append("hit outside [-25, 25]")

    _verdict(capsys, not problems,
             f"10 translations of (5, {{-1,0,1,2,3}}): plain hits {plain}, "
             f"keep-zero hits {kept}, stable under window doubling")
    assert not problems, problems


def test_11_base_two_always_fails(capsys):
    specs = 0
    valid = []
    for even in range(-50, 51, 2):
        for odd in range(-49, 50, 2):
            specs += 1
            if is_number_system(new_spec(2, [even, odd])):
                valid.append((even, odd))

    _verdict(capsys, not valid,
             f"11 all {specs} two-digit specs at base 2 with digits in "
             f"[-50, 50] are invalid")
    assert not valid, valid[:5]
