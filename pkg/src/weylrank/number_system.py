"""Mixed-radix numeral systems attached to the classical Weyl families.

Each family ``A``, ``B``, ``D`` of rank ``n`` has a radix profile whose place
values multiply up to the group order, so that the fixed-width digit vectors
of the profile are in bijection with ``range(order)``:

====== ============ ======================= =================
family digit index  place value             digit cap
====== ============ ======================= =================
A      1 .. n-1     ``i!``                  ``i``
B      0 .. n-1     ``1`` then ``2^i i!``   ``1`` then ``2i+1``
D      1 .. n-1     ``2^(i-1) i!``          ``2i+1``
====== ============ ======================= =================

Digits are stored least-significant first; the text form prints them
most-significant first, e.g. ``(3:15:6:9:8:5:4:5:7:2:3)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import InvalidDigitError, InvalidRankError, OutOfRangeError, ParseError

__all__ = [
    "WeylFamily",
    "RadixProfile",
    "MixedRadixDigits",
    "ConversionStats",
    "radix_profile",
    "group_order",
    "max_value",
    "digits_to_int",
    "int_to_digits",
    "parse_digit_string",
    "format_digit_string",
    "infer_rank",
]


class WeylFamily(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"

    @classmethod
    def coerce(cls, value: "WeylFamily | str") -> "WeylFamily":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ParseError(f"unknown Weyl family {value!r}; expected A, B or D") from None


@dataclass(frozen=True)
class RadixProfile:
    family: WeylFamily
    n: int
    place_values: tuple[int, ...]
    digit_caps: tuple[int, ...]

    @property
    def first_index(self) -> int:
        """Subscript of the least-significant digit (0 for B, 1 otherwise)."""
        return 0 if self.family is WeylFamily.B else 1

    @property
    def width(self) -> int:
        return len(self.place_values)

    @property
    def order(self) -> int:
        """Number of representable values, i.e. the group order."""
        if not self.place_values:
            return 1
        return (self.digit_caps[-1] + 1) * self.place_values[-1]

    @property
    def tag(self) -> str:
        return f"{self.family.value}{self.n}"


@dataclass(frozen=True)
class MixedRadixDigits:
    profile: RadixProfile
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if len(self.digits) != self.profile.width:
            raise ParseError(
                f"{self.profile.tag} needs {self.profile.width} digits, got {len(self.digits)}"
            )
        base = self.profile.first_index
        for pos, (d, cap) in enumerate(zip(self.digits, self.profile.digit_caps)):
            if not 0 <= d <= cap:
                raise InvalidDigitError(
                    f"digit d_{pos + base} = {d} outside 0..{cap} for {self.profile.tag}",
                    index=pos + base,
                )

    @classmethod
    def _unchecked(cls, profile: RadixProfile, digits: tuple[int, ...]) -> "MixedRadixDigits":
        obj = object.__new__(cls)
        object.__setattr__(obj, "profile", profile)
        object.__setattr__(obj, "digits", digits)
        return obj

    def __getitem__(self, i: int) -> int:
        """Digit by its subscript ``d_i`` (not by list position)."""
        pos = i - self.profile.first_index
        if not 0 <= pos < len(self.digits):
            raise IndexError(f"no digit d_{i} in {self.profile.tag}")
        return self.digits[pos]

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_digit_string(self)


@dataclass
class ConversionStats:
    """Mutable counter threaded through :func:`int_to_digits`."""

    division_steps: int = 0


def radix_profile(family: WeylFamily | str, n: int) -> RadixProfile:
    if not isinstance(n, int) or n < 1:
        raise InvalidRankError(f"rank must be a positive integer, got {n!r}")
    return _radix_profile(WeylFamily.coerce(family), n)


@lru_cache(maxsize=256)
def _radix_profile(family: WeylFamily, n: int) -> RadixProfile:
    places: list[int] = []
    caps: list[int] = []
    if family is WeylFamily.B:
        places.append(1)
        caps.append(1)
        place = 2
    else:
        place = 1
    for i in range(1, n):
        places.append(place)
        cap = i if family is WeylFamily.A else 2 * i + 1
        caps.append(cap)
        place *= cap + 1
    return RadixProfile(family, n, tuple(places), tuple(caps))


def group_order(family: WeylFamily | str, n: int) -> int:
    return radix_profile(family, n).order


def max_value(profile: RadixProfile) -> int:
    return profile.order - 1


def digits_to_int(d: MixedRadixDigits) -> int:
    # Horner from the top digit: x = (...(d_top * b_top-1 + d_top-1) ...) with bases cap+1.
    x = 0
    for digit, cap in zip(reversed(d.digits), reversed(d.profile.digit_caps)):
        x = x * (cap + 1) + digit
    return x


def int_to_digits(
    x: int, profile: RadixProfile, stats: Optional[ConversionStats] = None
) -> MixedRadixDigits:
    """Successive division by ``cap + 1``, least-significant digit first.

    For D this divides by 4, 6, 8, ... in turn.  Exactly ``profile.width``
    division steps are performed, leading zeros included.
    """
    if not isinstance(x, int) or x < 0 or x >= profile.order:
        raise OutOfRangeError(
            f"{x} is outside 0..{profile.order - 1} for {profile.tag}"
        )
    digits = []
    q = x
    for cap in profile.digit_caps:
        q, r = divmod(q, cap + 1)
        digits.append(r)
    if stats is not None:
        stats.division_steps += len(profile.digit_caps)
    return MixedRadixDigits._unchecked(profile, tuple(digits))


def infer_rank(family: WeylFamily | str, x: int) -> int:
    """Smallest ``n`` whose group order exceeds ``x``."""
    if x < 0:
        raise OutOfRangeError(f"rank must be non-negative, got {x}")
    n = 1
    while group_order(family, n) <= x:
        n += 1
    return n


_DIGITS_RE = re.compile(
    r"^\s*\(\s*(\d+(?:\s*:\s*\d+)*)?\s*\)\s*(?:_\s*([ABDabd])\s*(\d+))?\s*$"
)


def parse_digit_string(
    s: str,
    family: WeylFamily | str | None = None,
    n: Optional[int] = None,
) -> MixedRadixDigits:
    """Parse ``(d_top:...:d_low)`` with an optional ``_D12`` style suffix.

    Family and rank come from the suffix, the arguments, or both (they must
    agree).  If only the family is known the rank is read off the digit count.
    """
    m = _DIGITS_RE.match(s)
    if m is None:
        raise ParseError(f"malformed digit string {s!r}")
    body, tag_family, tag_rank = m.groups()
    values = [int(t) for t in body.split(":")] if body else []

    if tag_family is not None:
        tag_family = WeylFamily.coerce(tag_family)
        if family is not None and WeylFamily.coerce(family) is not tag_family:
            raise ParseError(f"suffix family {tag_family.value} disagrees with {family}")
        if n is not None and n != int(tag_rank):
            raise ParseError(f"suffix rank {tag_rank} disagrees with rank {n}")
        family, n = tag_family, int(tag_rank)
    if family is None:
        raise ParseError("digit string needs a family (argument or _D12 style suffix)")
    family = WeylFamily.coerce(family)
    if n is None:
        n = len(values) if family is WeylFamily.B else len(values) + 1
    return MixedRadixDigits(radix_profile(family, n), tuple(reversed(values)))


def format_digit_string(d: MixedRadixDigits, tag: bool = False) -> str:
    text = "(" + ":".join(str(v) for v in reversed(d.digits)) + ")"
    if tag:
        text += "_" + d.profile.tag
    return text
