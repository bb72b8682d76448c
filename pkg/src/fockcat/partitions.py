"""Integer partitions as plain tuples.

A partition is a weakly decreasing tuple of positive ints; ``()`` is the
empty partition.  Everything that indexes by partitions (Fock basis,
cycle types, boson monomials) uses this representation.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod

__all__ = [
    "make_partition",
    "partitions_of",
    "partitions_up_to",
    "weight",
    "z_lambda",
    "multiplicities",
    "merge",
    "parse_partition",
    "format_partition",
    "conjugate",
]


def make_partition(parts) -> tuple:
    """Validate and return ``parts`` as a partition tuple (zeros stripped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def weight(lam) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> tuple:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        return ()
    return _partitions(n, n)


def partitions_up_to(n: int) -> list:
    return [lam for k in range(n + 1) for lam in partitions_of(k)]


def multiplicities(lam) -> Counter:
    return Counter(lam)


@lru_cache(maxsize=None)
def z_lambda(lam: tuple) -> int:
    """Centralizer order ``prod_j j^m_j * m_j!``."""
    return prod(j**m * factorial(m) for j, m in Counter(lam).items())


def merge(lam, mu) -> tuple:
    """Union of the parts of two partitions."""
    return tuple(sorted(lam + mu, reverse=True))


def conjugate(lam) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


_PART_RE = re.compile(r"^\s*\(?\s*((?:\d+\s*,?\s*)*)\)?\s*$")


def parse_partition(text: str) -> tuple:
    """Parse ``"(2,1)"``, ``"2,1"``, ``"()"`` or ``""``."""
    m = _PART_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse partition from {text!r}")
    body = m.group(1).strip().rstrip(",")
    if not body:
        return ()
    return make_partition(int(p) for p in re.split(r"\s*,\s*|\s+", body))


def format_partition(lam) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"
