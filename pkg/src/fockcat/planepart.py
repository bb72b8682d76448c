"""Plane partitions: enumeration by volume, diagonal slices and their inverse."""

from __future__ import annotations

from functools import lru_cache

from .fock import interlaces
from .partitions import make_partition, partitions_of

__all__ = [
    "PlanePartition",
    "SliceChainError",
    "enumerate_plane_partitions",
    "count_plane_partitions",
    "diagonal_slices",
    "check_slice_chain",
    "from_slices",
    "trace",
    "MAX_EXHAUSTIVE_VOLUME",
]

MAX_EXHAUSTIVE_VOLUME = 14


class SliceChainError(ValueError):
    def __init__(self, index, message):
        super().__init__(f"slice chain broken at m={index}: {message}")
        self.index = index


class PlanePartition:
    """A plane partition stored as its nonzero rows (no zero padding)."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        cleaned = []
        for r in rows:
            r = tuple(int(x) for x in r)
            while r and r[-1] == 0:
                r = r[:-1]
            cleaned.append(r)
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        rows = tuple(cleaned)
        for i, r in enumerate(rows):
            if not r:
                raise ValueError("empty row inside a plane partition")
            if any(x < 0 for x in r):
                raise ValueError("entries must be non-negative")
            if any(a < b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {i + 1} is not weakly decreasing: {r}")
            if i:
                above = rows[i - 1]
                if len(r) > len(above) or any(b > a for a, b in zip(above, r)):
                    raise ValueError(f"column condition fails between rows {i} and {i + 1}")
        self.rows = rows

    def __getitem__(self, ij):
        """Entry ``pi_{ij}`` with 1-based indices, zero outside the support."""
        i, j = ij
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return 0

    @property
    def volume(self) -> int:
        return sum(map(sum, self.rows))

    def as_lists(self) -> list:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, PlanePartition):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"PlanePartition({self.as_lists()})"


@lru_cache(maxsize=None)
def _fill(volume: int, cap: tuple) -> tuple:
    """Row sequences of total ``volume`` whose first row fits under ``cap``."""
    if volume == 0:
        return ((),)
    out = []
    for size in range(volume, 0, -1):
        for row in partitions_of(size):
            if len(row) > len(cap) or any(x > c for x, c in zip(row, cap)):
                continue
            for rest in _fill(volume - size, row):
                out.append((row,) + rest)
    return tuple(out)


def enumerate_plane_partitions(volume: int) -> list:
    """All plane partitions of the given volume.

    Order is descending lexicographic on the tuple of rows, e.g. for volume 2:
    ``[[2]], [[1,1]], [[1],[1]]``.
    """
    if volume < 0:
        raise ValueError("volume must be non-negative")
    if volume == 0:
        return [PlanePartition()]
    rows = sorted(_fill(volume, (volume,) * volume), reverse=True)
    return [PlanePartition(r) for r in rows]


def count_plane_partitions(volume: int) -> int:
    return len(_fill(volume, (volume,) * volume)) if volume else 1


def diagonal_slices(pi: PlanePartition) -> dict:
    """``{m: pi(m)}`` over the support: ``pi(m) = (pi_{i,i+m})`` for m >= 0,
    ``(pi_{j-m,j})`` for m < 0."""
    if not pi.rows:
        return {}
    n_rows, n_cols = len(pi.rows), len(pi.rows[0])
    out = {}
    for m in range(-(n_rows - 1), n_cols):
        if m >= 0:
            parts = [pi[i, i + m] for i in range(1, n_rows + 1)]
        else:
            parts = [pi[j - m, j] for j in range(1, n_cols + 1)]
        out[m] = make_partition(x for x in parts if x)
    return out


def check_slice_chain(pi: PlanePartition) -> bool:
    """``... < pi(-1) < pi(0) > pi(1) > ...`` for the diagonal slices."""
    return _chain_break(diagonal_slices(pi)) is None


def _chain_break(family: dict):
    if not family:
        return None
    lo, hi = min(family), max(family)
    get = lambda m: family.get(m, ())  # noqa: E731
    for m in range(min(lo, 0) - 1, max(hi, 0) + 1):
        a, b = get(m), get(m + 1)
        if m >= 0 and not interlaces(a, b):
            return m, f"pi({m}) = {a} does not interlace over pi({m + 1}) = {b}"
        if m < 0 and not interlaces(b, a):
            return m, f"pi({m + 1}) = {b} does not interlace over pi({m}) = {a}"
    return None


def from_slices(family: dict) -> PlanePartition:
    """Rebuild the plane partition whose diagonal slices are ``family``."""
    family = {int(m): make_partition(lam) for m, lam in family.items()}
    broken = _chain_break(family)
    if broken is not None:
        raise SliceChainError(*broken)
    family = {m: lam for m, lam in family.items() if lam}
    if not family:
        return PlanePartition()
    cells = {}
    for m, lam in family.items():
        for k, value in enumerate(lam, 1):
            i, j = (k, k + m) if m >= 0 else (k - m, k)
            cells[i, j] = value
    n_rows = max(i for i, _ in cells)
    rows = []
    for i in range(1, n_rows + 1):
        n_cols = max((j for (a, j) in cells if a == i), default=0)
        rows.append([cells.get((i, j), 0) for j in range(1, n_cols + 1)])
    return PlanePartition(rows)


def trace(pi: PlanePartition) -> int:
    """Sum of the main-diagonal entries."""
    return sum(pi[i, i] for i in range(1, len(pi.rows) + 1))
