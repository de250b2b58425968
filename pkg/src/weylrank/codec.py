"""Rank/unrank codecs for the classical Weyl groups.

The type D codec works digit by digit on the D-type expansion
``x = (d_{n-1}: ... :d_1)``:

* the magnitudes come from ``phi(f)`` with ``f(1) = 1`` and
  ``f(i) = 1 + d_{i-1} // 2``;
* the sign at position ``i >= 2`` is ``(-1) ** d_{i-1}``;
* the sign at position 1 is ``(-1) ** tau`` where ``tau`` counts the odd
  digits, which makes the number of negative entries even.

Encoding runs the same steps backwards.  Types A and B reuse the scheme on
their own radix profiles: A keeps only ``f`` (``d_i = f(i+1) - 1``), and B
adds a free low digit ``d_0`` carrying the first sign.

Note that ``decode_d(0, n)`` is the cycle ``[2, 3, ..., n, 1]``, not the
identity, because ``f == 1`` maps to that cycle under ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import MembershipError
from .number_system import (
    ConversionStats,
    MixedRadixDigits,
    WeylFamily,
    digits_to_int,
    int_to_digits,
    radix_profile,
)
from .permutation import Permutation, SignedPermutation, is_even_signed, negative_count
from .subexceedant import SubexceedantFunction, phi, phi_inverse

__all__ = [
    "SignVector",
    "digits_to_subexceedant",
    "tau",
    "signs_from_digits",
    "digits_to_element",
    "element_to_digits",
    "decode",
    "encode",
    "decode_a",
    "encode_a",
    "decode_b",
    "encode_b",
    "decode_d",
    "encode_d",
]


@dataclass(frozen=True)
class SignVector:
    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs}")

    @classmethod
    def _unchecked(cls, signs: tuple[int, ...]) -> "SignVector":
        obj = object.__new__(cls)
        object.__setattr__(obj, "signs", signs)
        return obj

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def negatives(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def __str__(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.signs) + ")"


def _upper_digits(d: MixedRadixDigits) -> tuple[int, ...]:
    """``d_1 .. d_{n-1}``, dropping B's extra ``d_0``."""
    return d.digits[1:] if d.profile.family is WeylFamily.B else d.digits


def digits_to_subexceedant(d: MixedRadixDigits) -> SubexceedantFunction:
    if d.profile.family is WeylFamily.A:
        return SubexceedantFunction._unchecked((1,) + tuple(v + 1 for v in d.digits))
    return SubexceedantFunction._unchecked((1,) + tuple(1 + (v >> 1) for v in _upper_digits(d)))


def tau(d: MixedRadixDigits) -> int:
    """Number of odd digits."""
    return sum(v & 1 for v in d.digits)


def signs_from_digits(d: MixedRadixDigits) -> SignVector:
    family = d.profile.family
    if family is WeylFamily.A:
        return SignVector._unchecked((1,) * d.profile.n)
    if family is WeylFamily.B:
        first = d.digits[0] & 1
    else:
        first = tau(d) & 1
    rest = tuple(-1 if v & 1 else 1 for v in _upper_digits(d))
    return SignVector._unchecked((-1 if first else 1,) + rest)


def digits_to_element(d: MixedRadixDigits) -> SignedPermutation:
    beta = phi(digits_to_subexceedant(d))
    if d.profile.family is WeylFamily.A:
        return beta
    signs = signs_from_digits(d)
    return SignedPermutation._unchecked(tuple(s * b for s, b in zip(signs.signs, beta.window)))


def element_to_digits(family: WeylFamily | str, pi: SignedPermutation) -> MixedRadixDigits:
    family = WeylFamily.coerce(family)
    if family is WeylFamily.A:
        if negative_count(pi):
            raise MembershipError(f"{pi} has negative entries, so it is not in S_{pi.n}")
        f = phi_inverse(pi.magnitudes)
        digits = tuple(v - 1 for v in f.values[1:])
    else:
        if family is WeylFamily.D and not is_even_signed(pi):
            raise MembershipError(
                f"{pi} has an odd number of negative entries, so it is not in D_{pi.n}"
            )
        f = phi_inverse(pi.magnitudes)
        w = pi.window
        # d_i = 2(f(i+1) - 1) + r_i with r_i = 1 iff the entry at position i+1 is negative
        digits = tuple(2 * (f.values[i] - 1) + (w[i] < 0) for i in range(1, pi.n))
        if family is WeylFamily.B:
            digits = (int(w[0] < 0),) + digits
    return MixedRadixDigits._unchecked(radix_profile(family, pi.n), digits)


def decode(
    family: WeylFamily | str, x: int, n: int, stats: Optional[ConversionStats] = None
) -> SignedPermutation:
    """Unrank: the group element with rank ``x`` in the family of rank ``n``."""
    return digits_to_element(int_to_digits(x, radix_profile(family, n), stats))


def encode(family: WeylFamily | str, pi: SignedPermutation) -> int:
    """Rank of ``pi``; raises :class:`MembershipError` if it is not in the group."""
    return digits_to_int(element_to_digits(family, pi))


def decode_d(x: int, n: int, stats: Optional[ConversionStats] = None) -> SignedPermutation:
    return decode(WeylFamily.D, x, n, stats)


def encode_d(pi: SignedPermutation) -> int:
    return encode(WeylFamily.D, pi)


def decode_b(x: int, n: int, stats: Optional[ConversionStats] = None) -> SignedPermutation:
    return decode(WeylFamily.B, x, n, stats)


def encode_b(pi: SignedPermutation) -> int:
    return encode(WeylFamily.B, pi)


def decode_a(x: int, n: int, stats: Optional[ConversionStats] = None) -> Permutation:
    return decode(WeylFamily.A, x, n, stats)


def encode_a(beta: SignedPermutation) -> int:
    return encode(WeylFamily.A, beta)
