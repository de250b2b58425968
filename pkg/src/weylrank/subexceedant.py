"""Subexceedant functions and their bijection with permutations.

A subexceedant function on ``{1..n}`` satisfies ``1 <= f(i) <= i``; there
are ``n!`` of them.  :func:`phi` sends ``f`` to the transposition product
``(n f(n)) ... (2 f(2)) (1 f(1))`` with the rightmost factor acting first,
and :func:`phi_inverse` recovers ``f`` by peeling off the largest point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidDigitError, InvalidRankError, ParseError
from .permutation import Permutation

__all__ = [
    "SubexceedantFunction",
    "validate_subexceedant",
    "phi",
    "phi_inverse",
    "parse_f_word",
    "format_f_word",
]


@dataclass(frozen=True)
class SubexceedantFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InvalidRankError("a subexceedant function needs n >= 1")
        for i, v in enumerate(values, 1):
            if not 1 <= v <= i:
                raise InvalidDigitError(f"f({i}) = {v} violates 1 <= f(i) <= {i}", index=i)

    @classmethod
    def _unchecked(cls, values: tuple[int, ...]) -> "SubexceedantFunction":
        obj = object.__new__(cls)
        object.__setattr__(obj, "values", values)
        return obj

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"f is defined on 1..{self.n}, got {i}")
        return self.values[i - 1]

    def __str__(self) -> str:
        return format_f_word(self)


def validate_subexceedant(values: Sequence[int]) -> SubexceedantFunction:
    return SubexceedantFunction(tuple(values))


def _phi_window(f: Sequence[int]) -> list[int]:
    # Right-multiplying by (k f(k)) swaps window positions k and f(k); doing
    # this for k = n..1 builds the product with (1 f(1)) acting first.
    w = list(range(1, len(f) + 1))
    for k in range(len(f), 0, -1):
        j = f[k - 1]
        w[k - 1], w[j - 1] = w[j - 1], w[k - 1]
    return w


def _phi_inverse_values(window: Sequence[int]) -> list[int]:
    n = len(window)
    w = list(window)
    pos = [0] * (n + 1)
    for p, v in enumerate(w, 1):
        pos[v] = p
    f = [1] * n
    for k in range(n, 1, -1):
        top = w[k - 1]
        f[k - 1] = top
        # move the value k into position k; top takes its old slot
        p = pos[k]
        w[p - 1] = top
        pos[top] = p
        w[k - 1] = k
        pos[k] = k
    return f


def phi(f: SubexceedantFunction) -> Permutation:
    return Permutation._unchecked(tuple(_phi_window(f.values)))


def phi_inverse(beta: Permutation) -> SubexceedantFunction:
    if not isinstance(beta, Permutation) and any(v < 0 for v in beta.window):
        raise ParseError("phi_inverse takes an unsigned permutation")
    return SubexceedantFunction._unchecked(tuple(_phi_inverse_values(beta.window)))


_FWORD_RE = re.compile(r"^\s*\d+(?:\s*;\s*\d+)*\s*;?\s*$")


def parse_f_word(s: str) -> SubexceedantFunction:
    """Parse the ``f(1);f(2);...;f(n)`` form (a trailing ``;`` is allowed)."""
    if _FWORD_RE.match(s) is None:
        raise ParseError(f"malformed f-word {s!r}")
    return SubexceedantFunction(tuple(int(t) for t in s.split(";") if t.strip()))


def format_f_word(f: SubexceedantFunction) -> str:
    return ";".join(str(v) for v in f.values)
