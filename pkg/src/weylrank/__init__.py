"""Integer representations of the classical Weyl groups A, B and D."""

__version__ = "0.1.0"

from .codec import (
    SignVector,
    decode,
    decode_a,
    decode_b,
    decode_d,
    digits_to_element,
    digits_to_subexceedant,
    element_to_digits,
    encode,
    encode_a,
    encode_b,
    encode_d,
    signs_from_digits,
    tau,
)
from .errors import (
    BudgetExceededError,
    InvalidDigitError,
    InvalidRankError,
    MembershipError,
    OutOfRangeError,
    ParseError,
    WeylRankError,
)
from .number_system import (
    ConversionStats,
    MixedRadixDigits,
    RadixProfile,
    WeylFamily,
    digits_to_int,
    format_digit_string,
    group_order,
    infer_rank,
    int_to_digits,
    max_value,
    parse_digit_string,
    radix_profile,
)
from .oracle import CertificationReport, brute_force_rank, certify, enumerate_group
from .permutation import (
    Permutation,
    SignedPermutation,
    apply,
    compose,
    identity,
    inverse,
    is_even_signed,
    negative_count,
    parse_window,
    format_window,
)
from .subexceedant import (
    SubexceedantFunction,
    format_f_word,
    parse_f_word,
    phi,
    phi_inverse,
    validate_subexceedant,
)
