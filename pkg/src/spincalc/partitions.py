"""Partitions and the special families indexing spinor/oscillator decompositions.

A partition is stored as a tuple of weakly decreasing positive integers
(trailing zeros are never stored).  Everything here is an immutable value,
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator, Optional


@total_ordering
class Partition:
    """Weakly decreasing sequence of positive integers.

    Ordering is by (size, parts) so that sorted output is deterministic.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = []
        prev = None
        for p in parts:
            p = int(p)
            if p == 0:
                continue
            if p < 0:
                raise ValueError(f"negative part: {p}")
            if prev is not None and p > prev:
                raise ValueError(f"parts not weakly decreasing: {tuple(parts)}")
            cleaned.append(p)
            prev = p
        self.parts: tuple[int, ...] = tuple(cleaned)

    # -- basic structure -------------------------------------------------

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the stored length (padding is a view)."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        return (self.size(), self.parts) < (other.size(), other.parts)

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return format_partition(self)

    # -- combinatorics ----------------------------------------------------

    def transpose(self) -> "Partition":
        """Conjugate partition: column lengths of the diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def durfee_rank(self) -> int:
        """Size of the main diagonal: max i with parts[i] >= i."""
        r = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                r = i
        return r

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams."""
        if other.length() > self.length():
            return False
        return all(self.parts[i] >= q for i, q in enumerate(other.parts))

    def cells(self) -> list[tuple[int, int]]:
        """All (row, column) cells, 1-indexed."""
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def remove_first_row_and_column(self) -> "Partition":
        return Partition([p - 1 for p in self.parts[1:]])


def transpose(p: Partition) -> Partition:
    return p.transpose()


def durfee_rank(p: Partition) -> int:
    return p.durfee_rank()


# -- text form -----------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """Parse the comma-separated form: "3,1,1"; empty partition is "" or "0"."""
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed partition string: {text!r}") from exc
    return Partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts) if p.parts else "0"


# -- enumeration ---------------------------------------------------------

def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n, largest part bounded by max_part when given."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def gen(remaining: int, bound: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for first in range(min(bound, remaining), 0, -1):
            prefix.append(first)
            yield from gen(remaining - first, first, prefix)
            prefix.pop()

    yield from gen(n, max_part, [])


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


# -- special families ----------------------------------------------------

def self_conjugate_with_index(i: int) -> set[Partition]:
    """Self-conjugate partitions with 2*i == size + durfee rank.

    The principal hooks of a self-conjugate partition have arms a_1 > ... > a_r
    >= 0, and the index condition says the shifted arms a_j + 1 form a
    partition of i into distinct parts.
    """
    if i < 0:
        return set()
    out = set()
    for distinct in _distinct_partitions(i):
        arms = [b - 1 for b in distinct]
        out.add(_from_diagonal_arms(arms))
    return out


def _distinct_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into distinct positive parts, decreasing."""

    def gen(remaining: int, bound: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        for first in range(min(bound, remaining), 0, -1):
            prefix.append(first)
            yield from gen(remaining - first, first - 1, prefix)
            prefix.pop()

    yield from gen(n, n, [])


def _from_diagonal_arms(arms: list[int]) -> Partition:
    """Self-conjugate partition with the given strictly decreasing arm lengths."""
    r = len(arms)
    rows = []
    for j, a in enumerate(arms, start=1):
        rows.append(a + j)
    max_len = max((j + a for j, a in enumerate(arms, start=1)), default=0)
    for row in range(r + 1, max_len + 1):
        rows.append(sum(1 for j, a in enumerate(arms, start=1) if j + a >= row))
    return Partition(rows)


@lru_cache(maxsize=None)
def q_minus(i: int) -> frozenset[Partition]:
    """Partitions of size 2*i built by the row-equals-column-plus-one recursion.

    The empty partition qualifies; a non-empty one needs length == first part
    + 1 and its first-row-and-column removal must again qualify.
    """
    if i < 0:
        return frozenset()
    if i == 0:
        return frozenset({Partition()})
    out = set()
    for a in range(1, i + 1):
        for core in q_minus(i - a):
            if core.parts and core.parts[0] > a - 1:
                continue
            if core.length() > a:
                continue
            rows = [a] + [p + 1 for p in core.parts]
            rows += [1] * (a + 1 - len(rows))
            out.add(Partition(rows))
    return frozenset(out)


def q_plus(i: int) -> frozenset[Partition]:
    return frozenset(p.transpose() for p in q_minus(i))


def count_q_minus_bounded(n: int) -> int:
    """Number of recursion-family partitions with first part <= n."""
    total = 0
    for i in range(n * (n + 1) // 2 + 1):
        total += sum(1 for p in q_minus(i) if p.part(1) <= n)
    return total


# -- border strips at the first-column foot --------------------------------

@dataclass(frozen=True)
class BorderStrip:
    """Edgewise-connected rim strip, as explicit cells."""

    cells: tuple[tuple[int, int], ...]

    @property
    def columns(self) -> int:
        return len({c for _, c in self.cells})

    @property
    def rows(self) -> int:
        return len({r for r, _ in self.cells})

    def __len__(self) -> int:
        return len(self.cells)


def remove_first_column_strip(
    p: Partition, length: int
) -> Optional[tuple[Partition, BorderStrip]]:
    """Remove the border strip of the given length ending at the first-column foot.

    Such a strip is the rim hook of a first-column cell (k, 1); it exists iff
    `length` equals one of the first-column hook lengths p_k + len(p) - k.
    Returns None when no such strip leaves a partition.
    """
    if length < 1:
        raise ValueError("strip length must be >= 1")
    ell = p.length()
    row = None
    for k in range(1, ell + 1):
        if p.part(k) + ell - k == length:
            row = k
            break
    if row is None:
        return None
    cells = []
    for i in range(row, ell):
        lo = p.part(i + 1)
        cells.extend((i, c) for c in range(lo, p.part(i) + 1))
    cells.extend((ell, c) for c in range(1, p.part(ell) + 1))
    remaining = Partition(
        list(p.parts[: row - 1]) + [p.part(i + 1) - 1 for i in range(row, ell)]
    )
    return remaining, BorderStrip(tuple(sorted(cells)))


def strip_is_valid(strip: BorderStrip) -> bool:
    """Connected along edges and free of 2x2 blocks."""
    cells = set(strip.cells)
    if not cells:
        return False
    for (r, c) in cells:
        if {(r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells:
            return False
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        cell = stack.pop()
        if cell in seen:
            continue
        seen.add(cell)
        r, c = cell
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                stack.append(nb)
    return seen == cells
