"""Signed permutations in window notation.

A signed permutation of rank ``n`` is a bijection ``a`` of
``{-n..-1, 1..n}`` with ``a(-i) = -a(i)``; it is stored as its window
``[a(1), ..., a(n)]``.  Unsigned permutations are the special case with an
all-positive window.

Composition follows the right-to-left convention: ``compose(a, b)(i) ==
a(b(i))``, so ``b`` acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidRankError, OutOfRangeError, ParseError

__all__ = [
    "SignedPermutation",
    "Permutation",
    "identity",
    "apply",
    "compose",
    "inverse",
    "negative_count",
    "is_even_signed",
    "parse_window",
    "format_window",
]


def _check_window(window: tuple[int, ...]) -> None:
    n = len(window)
    if n == 0:
        raise InvalidRankError("a window needs at least one entry")
    seen = [False] * (n + 1)
    for pos, v in enumerate(window, 1):
        if v == 0:
            raise ParseError(f"zero entry at position {pos}")
        a = abs(v)
        if a > n:
            raise ParseError(f"entry {v} at position {pos} is out of range 1..{n}")
        if seen[a]:
            raise ParseError(f"absolute value {a} repeated at position {pos}")
        seen[a] = True


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        _check_window(window)

    @classmethod
    def _unchecked(cls, window: tuple[int, ...]):
        # for windows that are valid by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def magnitudes(self) -> "Permutation":
        return Permutation._unchecked(tuple(abs(v) for v in self.window))

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self.window)

    # equality ignores the signed/unsigned subclass
    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __str__(self) -> str:
        return format_window(self)


class Permutation(SignedPermutation):
    """Unsigned permutation of ``{1..n}``."""

    def __post_init__(self):
        super().__post_init__()
        if any(v < 0 for v in self.window):
            raise ParseError("an unsigned permutation cannot have negative entries")


def _wrap(window: Iterable[int], *parts: SignedPermutation) -> SignedPermutation:
    if all(isinstance(p, Permutation) for p in parts):
        return Permutation._unchecked(tuple(window))
    return SignedPermutation._unchecked(tuple(window))


def identity(n: int) -> Permutation:
    if not isinstance(n, int) or n < 1:
        raise InvalidRankError(f"rank must be a positive integer, got {n!r}")
    return Permutation._unchecked(tuple(range(1, n + 1)))


def apply(a: SignedPermutation, i: int) -> int:
    if i == 0 or abs(i) > a.n:
        raise OutOfRangeError(f"{i} is not in I_{a.n}")
    v = a.window[abs(i) - 1]
    return v if i > 0 else -v


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """``a`` after ``b``: the result maps ``i`` to ``a(b(i))``."""
    if a.n != b.n:
        raise InvalidRankError(f"rank mismatch: {a.n} vs {b.n}")
    wa = a.window
    out = [wa[v - 1] if v > 0 else -wa[-v - 1] for v in b.window]
    return _wrap(out, a, b)


def inverse(a: SignedPermutation) -> SignedPermutation:
    out = [0] * a.n
    for i, v in enumerate(a.window, 1):
        # a(i) = v  =>  a^-1(|v|) = sign(v) * i
        out[abs(v) - 1] = i if v > 0 else -i
    return _wrap(out, a)


def negative_count(a: SignedPermutation) -> int:
    return sum(1 for v in a.window if v < 0)


def is_even_signed(a: SignedPermutation) -> bool:
    return negative_count(a) % 2 == 0


_WINDOW_RE = re.compile(r"^\s*\[\s*([+-]?\s*\d+(?:\s*,\s*[+-]?\s*\d+)*)\s*\]\s*$")


def parse_window(s: str) -> SignedPermutation:
    m = _WINDOW_RE.match(s)
    if m is None:
        raise ParseError(f"malformed window {s!r}")
    values = [int(re.sub(r"\s", "", t)) for t in m.group(1).split(",")]
    return SignedPermutation(tuple(values))


def format_window(a: SignedPermutation) -> str:
    return "[" + ",".join(str(v) for v in a.window) + "]"
