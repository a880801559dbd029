"""The modification rule via two independent algorithms, plus the dot action.

Half-integers are stored as doubled integers throughout so that the even and
odd rank cases share one exact code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .partitions import Partition, partitions_of, remove_first_column_strip, self_conjugate_with_index


@dataclass(frozen=True)
class ModResult:
    """Either vanishing, or a reduced partition with homological degree."""

    tau: Optional[Partition]
    j: Optional[int]

    @property
    def vanishes(self) -> bool:
        return self.tau is None

    @classmethod
    def vanishing(cls) -> "ModResult":
        return cls(None, None)

    @classmethod
    def defined(cls, tau: Partition, j: int) -> "ModResult":
        return cls(tau, j)


@dataclass(frozen=True)
class DotActionResult:
    """Type-A dot action outcome: singular, or sorted with a length."""

    length: Optional[int]
    result: Optional[Partition]

    @property
    def singular(self) -> bool:
        return self.result is None

    @classmethod
    def singular_result(cls) -> "DotActionResult":
        return cls(None, None)


# -- border-strip algorithm ---------------------------------------------------

def tau_j_border(lam: Partition, N: int) -> ModResult:
    """Repeatedly strip first-column-foot border strips of length 2*len-N-1.

    The count of columns of each removed strip accumulates into j.  A missing
    or zero-length strip means the irreducible specializes to zero.
    """
    if N < 1:
        raise ValueError("rank N must be positive")
    n = N // 2
    alpha = lam
    j = 0
    while alpha.length() > n:
        strip_len = 2 * alpha.length() - N - 1
        if strip_len <= 0:
            return ModResult.vanishing()
        res = remove_first_column_strip(alpha, strip_len)
        if res is None:
            return ModResult.vanishing()
        alpha, strip = res
        j += strip.columns
    return ModResult.defined(alpha, j)


# -- Weyl-group algorithm -----------------------------------------------------

def typeB_length(w: Sequence[int]) -> int:
    """Length of a signed permutation in window notation.

    Inversions of the window plus the sum of absolute values of negative
    entries.  Entries fixed beyond the window contribute nothing.
    """
    w = list(w)
    if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a signed permutation window: {w}")
    inv = sum(
        1 for i in range(len(w)) for k in range(i + 1, len(w)) if w[i] > w[k]
    )
    return inv + sum(-x for x in w if x < 0)


def _rho_doubled(N: int, i: int) -> int:
    """Twice the i-th entry (1-indexed) of -(N+1, N+3, ...)/2."""
    return -(N + 2 * i - 1)


def tau_j_weyl(lam: Partition, N: int) -> ModResult:
    """Modification rule through the signed-permutation dot action.

    Forms the transpose shifted by the staircase, looks for the unique
    all-negative strictly decreasing signed rearrangement, and reads off j as
    the hyperoctahedral length of the rearranging element.
    """
    if N < 1:
        raise ValueError("rank N must be positive")
    lt = lam.transpose()
    window = lam.part(1) + lam.length() + N + 2
    x = [2 * lt.part(i) + _rho_doubled(N, i) for i in range(1, window + 1)]
    if any(v == 0 for v in x):
        return ModResult.vanishing()
    if len({abs(v) for v in x}) < len(x):
        return ModResult.vanishing()
    # Entries past the transpose's support already sit in the negative tail;
    # w must fix them, which the sorted-abs construction guarantees as long
    # as the window is wide enough (checked below).
    order = sorted(range(window), key=lambda idx: abs(x[idx]))
    w = [(idx + 1) if x[idx] < 0 else -(idx + 1) for idx in order]
    for i in range(lam.part(1) + lam.length() + 1, window):
        if w[i] != i + 1:
            raise AssertionError("window too small for the dot action")
    y = [-abs(x[idx]) for idx in order]
    tau_t = []
    for i, v in enumerate(y, start=1):
        entry = v - _rho_doubled(N, i)
        if entry % 2:
            raise AssertionError("parity violated in the dot action")
        tau_t.append(entry // 2)
    while tau_t and tau_t[-1] == 0:
        tau_t.pop()
    tau_transpose = Partition(tau_t)
    tau = tau_transpose.transpose()
    if tau.length() > N // 2:
        raise AssertionError("target rearrangement not dominant for the rank")
    return ModResult.defined(tau, typeB_length(w))


# -- type-A dot action --------------------------------------------------------

def typeA_dot(seq: Sequence[int]) -> DotActionResult:
    """Dot action of the finitary symmetric group with staircase (0,-1,-2,...).

    The input is a finitely supported sequence of nonnegative integers.
    Returns the inversion count of the sorting permutation and the sorted
    partition, or a singular marker on repeated entries.
    """
    seq = list(seq)
    if any(v < 0 for v in seq):
        raise ValueError("dot action input must be nonnegative")
    while seq and seq[-1] == 0:
        seq.pop()
    window = len(seq) + max(seq, default=0) + 2
    vals = [(seq[i] if i < len(seq) else 0) - i for i in range(window)]
    if len(set(vals)) < len(vals):
        return DotActionResult.singular_result()
    inv = sum(
        1
        for i in range(window)
        for k in range(i + 1, window)
        if vals[i] < vals[k]
    )
    svals = sorted(vals, reverse=True)
    parts = [v + i for i, v in enumerate(svals)]
    if any(p < 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise AssertionError("sorted dot action did not produce a partition")
    return DotActionResult(inv, Partition(parts))


# -- the two index sets and the bijection --------------------------------------

def _concat(lam: Partition, n: int, mu: Partition) -> list[int]:
    if lam.length() > n:
        raise ValueError("first block must fit in n rows")
    return [lam.part(i) for i in range(1, n + 1)] + list(mu.parts)


def s1_set(lam: Partition, n: int, bound: int) -> set[Partition]:
    """Self-conjugate mu with regular concatenated weight, sizes <= bound."""
    if lam.length() > n:
        raise ValueError("partition too long for the rank")
    out = set()
    for size in range(bound + 1):
        for mu in partitions_of(size):
            if mu != mu.transpose():
                continue
            if not typeA_dot(_concat(lam, n, mu)).singular:
                out.add(mu)
    return out


def s2_set(lam: Partition, N: int, bound: int) -> set[Partition]:
    """Partitions with modification target lam at rank N, bounded in size."""
    n = N // 2
    if lam.length() > n:
        raise ValueError("partition too long for the rank")
    limit = n * lam.part(1) + bound
    out = set()
    for size in range(limit + 1):
        for alpha in partitions_of(size):
            r = tau_j_border(alpha, N)
            if not r.vanishes and r.tau == lam:
                out.add(alpha)
    return out


@dataclass(frozen=True)
class BijectionReport:
    ok: bool
    checked: int
    detail: str = ""


def bott_bijection_check(lam: Partition, n: int, bound: int) -> BijectionReport:
    """Verify the dot-action bijection and its strip identities on a bounded set.

    For every self-conjugate mu of size at most bound with regular
    concatenation: the sorted result alpha must have modification target lam
    with degrees matching half of size plus rank; the assignment must be
    injective onto the matching size slice of the target set; and for
    non-empty mu the first removed strip must tie together mu's first part,
    the reduced partition, and the two sorting lengths.
    """
    N = 2 * n
    s1 = s1_set(lam, n, bound)
    images: dict[Partition, Partition] = {}
    checked = 0
    for mu in sorted(s1):
        dot = typeA_dot(_concat(lam, n, mu))
        if dot.singular:
            return BijectionReport(False, checked, f"mu={mu} regular yet singular")
        alpha = dot.result
        mod = tau_j_border(alpha, N)
        if mod.vanishes or mod.tau != lam:
            return BijectionReport(
                False, checked, f"image alpha={alpha} of mu={mu} misses the fiber"
            )
        if 2 * (dot.length + mod.j) != mu.size() + mu.durfee_rank():
            return BijectionReport(
                False,
                checked,
                f"length identity fails for mu={mu}: l(w)={dot.length} j={mod.j}",
            )
        if alpha in images.values():
            return BijectionReport(False, checked, f"image collision at {alpha}")
        images[mu] = alpha
        if mu.parts:
            report = _strip_identities(lam, n, mu, alpha, dot.length)
            if report is not None:
                return BijectionReport(False, checked, report)
        checked += 1
    # Surjectivity onto the size-matched slice.
    slice_limit = lam.size() + bound
    expected = {
        a for a in s2_set(lam, N, bound) if a.size() <= slice_limit
    }
    if set(images.values()) != expected:
        missing = expected - set(images.values())
        return BijectionReport(False, checked, f"unmatched fiber elements: {missing}")
    return BijectionReport(True, checked)


def _strip_identities(
    lam: Partition, n: int, mu: Partition, alpha: Partition, length_w: int
) -> Optional[str]:
    nu = mu.remove_first_row_and_column()
    dot_nu = typeA_dot(_concat(lam, n, nu))
    if dot_nu.singular:
        return f"reduced mu={nu} unexpectedly singular"
    beta = dot_nu.result
    strip_len = 2 * alpha.length() - 2 * n - 1
    if strip_len != 2 * mu.part(1) - 1:
        return f"strip length {strip_len} != 2*mu_1-1 for mu={mu}"
    res = remove_first_column_strip(alpha, strip_len)
    if res is None:
        return f"no strip of length {strip_len} in alpha={alpha}"
    rest, strip = res
    if rest != beta:
        return f"alpha minus strip is {rest}, expected {beta}"
    if strip.columns != mu.part(1) + dot_nu.length - length_w:
        return (
            f"column count {strip.columns} != mu_1 + l(w') - l(w) "
            f"= {mu.part(1)} + {dot_nu.length} - {length_w}"
        )
    return None


# -- cross-checked pair -------------------------------------------------------

def tau_j(lam: Partition, N: int) -> ModResult:
    """Border-strip value, asserted equal to the Weyl-variant value."""
    border = tau_j_border(lam, N)
    weyl = tau_j_weyl(lam, N)
    if border != weyl:
        raise AssertionError(
            f"modification oracles disagree at {lam}, N={N}: {border} vs {weyl}"
        )
    return border
