"""Positional number systems over the integers with arbitrary digit sets.

A system is a base b with |b| >= 2 and one digit per residue class mod
b.  Subtracting the matching digit and dividing by the base steps any
integer toward a finite attractor; the system is a number system
exactly when that attractor is a single cycle through 0, i.e. when
every integer has a finite expansion.  The subpackages cover the
decision procedure, expansions, infinite families built by digit
shifting, a rewrite-system verifier for those families, and the
complete classification of two-digit systems in base -2.
"""

from .constructions import (
    BadSet,
    FamilySpec,
    bad_set,
    check_small_digit_set,
    nfold,
    nfold_validity_predicate,
    odd_digit_set,
    shift_family,
    shifted_spec,
    translate_candidate,
    translate_scan,
)
from .core import NumberSystemSpec, digit_of, new_spec, step, zero_digit
from .errors import (
    BadPadLength,
    BadPair,
    BadPrime,
    BaseTooSmall,
    DigitInBadSet,
    IncompleteResidues,
    NoZeroExpansion,
    NotADigit,
    NotANumberSystem,
    NotCoprime,
    NotInAttractor,
    NotRepresentable,
    RadixError,
    RewriteError,
    ShiftOutOfRange,
    SpecError,
    StateSpaceTooLarge,
    UnsupportedBase,
    UnsupportedSpec,
    WrongDigitCount,
)
from .expansions import (
    Expansion,
    evaluate,
    expand,
    minimal_length_lower_bound,
    pad,
    zero_digit_length_scan,
    zero_expansion,
)
from .minus_two import (
    CycleCertificate,
    Minus2Verdict,
    cycle_certificate,
    lifted_valuation,
    minus2_attractor_interval,
    minus2_classify,
    minus2_one_cycle_criterion,
    minus2_scan,
    multiplicative_order,
    padic_valuation,
    scan_pairs_for_low,
)
from .orbits import (
    AttractorReport,
    Bounds,
    attractor,
    bounds,
    is_number_system,
    one_cycle_fixed_points,
    seed_interval,
)
from .rewrite import (
    CriterionResult,
    state_space_size,
    step_word,
    verify_criterion,
    word_space,
    word_value,
)

__version__ = "0.1.0"

__all__ = [
    "AttractorReport",
    "BadPadLength",
    "BadPair",
    "BadPrime",
    "BadSet",
    "BaseTooSmall",
    "Bounds",
    "CriterionResult",
    "CycleCertificate",
    "DigitInBadSet",
    "Expansion",
    "FamilySpec",
    "IncompleteResidues",
    "Minus2Verdict",
    "NoZeroExpansion",
    "NotADigit",
    "NotANumberSystem",
    "NotCoprime",
    "NotInAttractor",
    "NotRepresentable",
    "NumberSystemSpec",
    "RadixError",
    "RewriteError",
    "ShiftOutOfRange",
    "SpecError",
    "StateSpaceTooLarge",
    "UnsupportedBase",
    "UnsupportedSpec",
    "WrongDigitCount",
    "attractor",
    "bad_set",
    "bounds",
    "check_small_digit_set",
    "cycle_certificate",
    "digit_of",
    "evaluate",
    "expand",
    "is_number_system",
    "lifted_valuation",
    "minimal_length_lower_bound",
    "minus2_attractor_interval",
    "minus2_classify",
    "minus2_one_cycle_criterion",
    "minus2_scan",
    "multiplicative_order",
    "new_spec",
    "nfold",
    "nfold_validity_predicate",
    "odd_digit_set",
    "one_cycle_fixed_points",
    "pad",
    "padic_valuation",
    "scan_pairs_for_low",
    "seed_interval",
    "shift_family",
    "shifted_spec",
    "state_space_size",
    "step",
    "step_word",
    "translate_candidate",
    "translate_scan",
    "verify_criterion",
    "word_space",
    "word_value",
    "zero_digit",
    "zero_digit_length_scan",
    "zero_expansion",
]
