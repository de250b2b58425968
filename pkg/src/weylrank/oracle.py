"""Brute-force ground truth for small ranks.

Groups are enumerated directly as (permutation, admissible sign pattern)
pairs and sorted lexicographically by window, so nothing here depends on
the codec's digit logic.  :func:`certify` then checks the codec against that
enumeration.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .codec import decode, encode
from .errors import BudgetExceededError, WeylRankError
from .number_system import WeylFamily, group_order
from .permutation import SignedPermutation, format_window

DEFAULT_BUDGET = 10**6

__all__ = [
    "DEFAULT_BUDGET",
    "CertificationReport",
    "enumerate_group",
    "brute_force_rank",
    "certify",
]


def _check_budget(family: WeylFamily, n: int, budget: int) -> int:
    order = group_order(family, n)
    if order > budget:
        raise BudgetExceededError(
            f"{family.value}{n} has {order} elements, over the budget of {budget}"
        )
    return order


def enumerate_group(
    family: WeylFamily | str, n: int, budget: int = DEFAULT_BUDGET
) -> list[SignedPermutation]:
    family = WeylFamily.coerce(family)
    _check_budget(family, n, budget)
    windows = []
    for perm in itertools.permutations(range(1, n + 1)):
        if family is WeylFamily.A:
            windows.append(perm)
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if family is WeylFamily.D and signs.count(-1) % 2:
                continue
            windows.append(tuple(s * v for s, v in zip(signs, perm)))
    windows.sort()
    return [SignedPermutation(w) for w in windows]


def brute_force_rank(
    pi: SignedPermutation, family: WeylFamily | str, n: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Rank of ``pi`` found by scanning ``decode(x)`` for x = 0, 1, ..."""
    family = WeylFamily.coerce(family)
    order = _check_budget(family, n, budget)
    target = tuple(pi.window)
    for x in range(order):
        if decode(family, x, n).window == target:
            return x
    raise LookupError(f"{format_window(pi)} never decoded in {family.value}{n}")


@dataclass
class CertificationReport:
    family: WeylFamily
    n: int
    order: int
    decoded: int = 0
    distinct: int = 0
    image_matches: bool = False
    roundtrip_failures: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.decoded == self.order
            and self.distinct == self.order
            and self.image_matches
            and self.roundtrip_failures == 0
            and not self.counterexamples
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.distinct}/{self.order}"

    def to_text(self) -> str:
        lines = [
            f"family: {self.family.value}",
            f"rank: {self.n}",
            f"order: {self.order}",
            f"decoded: {self.decoded}",
            f"distinct: {self.distinct}",
            f"image_matches_enumeration: {self.image_matches}",
            f"roundtrip_failures: {self.roundtrip_failures}",
            f"first_counterexample: {self.counterexamples[0] if self.counterexamples else 'none'}",
            self.summary(),
        ]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "order": self.order,
            "decoded": self.decoded,
            "distinct": self.distinct,
            "image_matches": self.image_matches,
            "roundtrip_failures": self.roundtrip_failures,
            "counterexamples": list(self.counterexamples),
            "passed": self.passed,
        }


def _check_chunk(family: WeylFamily, n: int, start: int, stop: int):
    windows = []
    problems = []
    for x in range(start, stop):
        try:
            w = decode(family, x, n)
        except WeylRankError as exc:
            problems.append(f"decode({x}) raised {exc}")
            windows.append(None)
            continue
        windows.append(w.window)
        try:
            back = encode(family, w)
        except WeylRankError as exc:
            problems.append(f"encode({format_window(w)}) raised {exc}")
            continue
        if back != x:
            problems.append(f"encode(decode({x})) = {back}")
    return windows, problems


def certify(
    family: WeylFamily | str,
    n: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    max_counterexamples: int = 10,
) -> CertificationReport:
    """Exhaustively check that the codec is a bijection onto the group.

    The rank range may be split across ``workers`` processes; chunks are
    merged in rank order, so the report does not depend on ``workers``.
    """
    family = WeylFamily.coerce(family)
    order = _check_budget(family, n, budget)
    report = CertificationReport(family, n, order)

    chunks = max(1, min(workers, order))
    bounds = [(order * k // chunks, order * (k + 1) // chunks) for k in range(chunks)]
    if chunks == 1:
        results = [_check_chunk(family, n, *bounds[0])]
    else:
        with ProcessPoolExecutor(max_workers=chunks) as pool:
            results = list(pool.map(_check_chunk, *zip(*[(family, n, a, b) for a, b in bounds])))

    windows: list[Optional[tuple[int, ...]]] = []
    problems: list[str] = []
    for w, p in results:
        windows.extend(w)
        problems.extend(p)
    decoded = [w for w in windows if w is not None]
    report.decoded = len(decoded)
    report.distinct = len(set(decoded))
    report.roundtrip_failures = sum(1 for p in problems if p.startswith("encode("))

    seen: dict[tuple[int, ...], int] = {}
    for x, w in enumerate(windows):
        if w is None:
            continue
        if w in seen:
            problems.append(f"decode({seen[w]}) == decode({x}) == {format_window(SignedPermutation(w))}")
        else:
            seen[w] = x

    expected = [g.window for g in enumerate_group(family, n, budget)]
    report.image_matches = sorted(decoded) == expected
    if not report.image_matches:
        missing = sorted(set(expected) - set(decoded))
        if missing:
            problems.append(f"{format_window(SignedPermutation(missing[0]))} is never decoded")
        extra = sorted(set(decoded) - set(expected))
        if extra:
            problems.append(f"{format_window(SignedPermutation(extra[0]))} is not in the group")
    report.counterexamples = problems[:max_counterexamples]
    return report
