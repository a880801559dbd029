"""The ring of symmetric functions in the Schur basis, with exact integers.

Littlewood-Richardson coefficients are computed by enumerating skew
semistandard tableaux whose reverse reading word is a ballot sequence.  The
memo table behaves as an idempotent insert-only cache: concurrent writers may
duplicate work but never disagree.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator

from .partitions import Partition, partitions_of, self_conjugate_with_index, q_minus, q_plus


class SchurVector:
    """Finitely supported integer combination of Schur functions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, int] | None = None):
        self.coeffs: dict[Partition, int] = {}
        if coeffs:
            for p, c in coeffs.items():
                if c:
                    self.coeffs[p] = int(c)

    @classmethod
    def unit(cls, p: Partition, coeff: int = 1) -> "SchurVector":
        return cls({p: coeff})

    @classmethod
    def zero(cls) -> "SchurVector":
        return cls()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurVector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "SchurVector") -> "SchurVector":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return SchurVector(out)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) - c
        return SchurVector(out)

    def __neg__(self) -> "SchurVector":
        return SchurVector({p: -c for p, c in self.coeffs.items()})

    def scale(self, k: int) -> "SchurVector":
        return SchurVector({p: k * c for p, c in self.coeffs.items()})

    def coefficient(self, p: Partition) -> int:
        return self.coeffs.get(p, 0)

    def support(self) -> list[Partition]:
        return sorted(self.coeffs)

    def coefficient_sum(self) -> int:
        return sum(self.coeffs.values())

    def map_partitions(self, f: Callable[[Partition], Partition]) -> "SchurVector":
        out: dict[Partition, int] = {}
        for p, c in self.coeffs.items():
            q = f(p)
            out[q] = out.get(q, 0) + c
        return SchurVector(out)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "SchurVector(0)"
        terms = [f"{c}*s[{p}]" for p, c in sorted(self.coeffs.items())]
        return "SchurVector(" + " + ".join(terms) + ")"

    def to_json(self) -> list[dict]:
        from .partitions import format_partition

        return [
            {"partition": format_partition(p), "coeff": c}
            for p, c in sorted(self.coeffs.items())
        ]

    @classmethod
    def from_json(cls, items: list[dict]) -> "SchurVector":
        from .partitions import parse_partition

        out: dict[Partition, int] = {}
        for item in items:
            p = parse_partition(item["partition"])
            out[p] = out.get(p, 0) + int(item["coeff"])
        return cls(out)


# -- Littlewood-Richardson ---------------------------------------------------

_lr_memo: dict[tuple[Partition, Partition, Partition], int] = {}


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of ballot skew tableaux of shape lam/mu and content nu."""
    if mu.size() + nu.size() != lam.size():
        return 0
    if not lam.contains(mu):
        return 0
    key = (lam, mu, nu)
    cached = _lr_memo.get(key)
    if cached is not None:
        return cached
    count = sum(1 for _ in _lr_tableaux(lam, mu, nu))
    _lr_memo[key] = count
    return count


def _lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> Iterator[None]:
    """Backtracking enumeration of LR fillings.

    Cells are filled row by row, left to right.  Rows weakly increase and
    columns strictly increase.  The reverse reading word is a ballot word
    exactly when, for every row r and value v >= 2, the number of v's in
    rows <= r never exceeds the number of (v-1)'s in rows < r; that check is
    applied incrementally at each placement.
    """
    rows = lam.length()
    nparts = nu.length()
    if nparts == 0:
        if lam == mu:
            yield None
        return
    shape = [(mu.part(i + 1), lam.part(i + 1)) for i in range(rows)]
    grid: list[list[int]] = [[0] * (hi - lo) for lo, hi in shape]
    content = [0] * (nparts + 2)
    above = [0] * (nparts + 2)  # counts per value in rows < current
    in_row = [0] * (nparts + 2)  # counts per value in the current row

    def fill(r: int, idx: int) -> Iterator[None]:
        if r == rows:
            yield None
            return
        lo, hi = shape[r]
        width = hi - lo
        if idx == width:
            for v in range(1, nparts + 1):
                above[v] += in_row[v]
                in_row[v] = 0
            yield from fill(r + 1, 0)
            for v in range(1, nparts + 1):
                in_row[v] = sum(1 for x in grid[r] if x == v)
                above[v] -= in_row[v]
            return
        col = lo + idx
        left = grid[r][idx - 1] if idx > 0 else 0
        over = 0
        if r > 0:
            plo, phi = shape[r - 1]
            if plo <= col < phi:
                over = grid[r - 1][col - plo]
        for v in range(max(left, over + 1, 1), nparts + 1):
            if content[v] + 1 > nu.part(v):
                continue
            if v > 1 and above[v] + in_row[v] + 1 > above[v - 1]:
                continue
            grid[r][idx] = v
            content[v] += 1
            in_row[v] += 1
            yield from fill(r, idx + 1)
            in_row[v] -= 1
            content[v] -= 1
            grid[r][idx] = 0

    yield from fill(0, 0)


def schur_multiply(a: SchurVector, b: SchurVector) -> SchurVector:
    """Product in the Schur basis via LR expansion, extended bilinearly."""
    out: dict[Partition, int] = {}
    for mu, cm in a.coeffs.items():
        for nu, cn in b.coeffs.items():
            weight = cm * cn
            for lam in partitions_of(mu.size() + nu.size()):
                if not lam.contains(mu):
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out[lam] = out.get(lam, 0) + weight * c
    return SchurVector(out)


def skew_schur(lam: Partition, mu: Partition) -> SchurVector:
    """Expansion of the skew Schur function s_{lam/mu} in straight Schurs."""
    if not lam.contains(mu):
        return SchurVector.zero()
    out: dict[Partition, int] = {}
    for nu in partitions_of(lam.size() - mu.size()):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return SchurVector(out)


def omega_transpose(a: SchurVector) -> SchurVector:
    """The ring involution sending each Schur function to its conjugate."""
    return a.map_partitions(lambda p: p.transpose())


# -- plethysm families -------------------------------------------------------

def wedge_of_sym2(i: int) -> SchurVector:
    """Schur expansion of the i-th exterior power of the symmetric square."""
    return SchurVector({p: 1 for p in q_plus(i)})


def wedge_of_wedge2(i: int) -> SchurVector:
    """Schur expansion of the i-th exterior power of the exterior square."""
    return SchurVector({p: 1 for p in q_minus(i)})


# -- evaluation oracle -------------------------------------------------------

class PolyChar:
    """Symmetric polynomial in m variables as exponent-tuple -> coefficient."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict[tuple[int, ...], int] | None = None):
        self.m = m
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = int(c)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyChar)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PolyChar") -> "PolyChar":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PolyChar(self.m, out)

    def __mul__(self, other: "PolyChar") -> "PolyChar":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return PolyChar(self.m, out)

    def __repr__(self) -> str:
        return f"PolyChar(m={self.m}, {len(self.terms)} terms)"

    def is_symmetric(self) -> bool:
        """Debug validation: invariance under all variable permutations."""
        for e, c in self.terms.items():
            for perm in itertools.permutations(e):
                if self.terms.get(tuple(perm), 0) != c:
                    return False
        return True


def evaluate(a: SchurVector, m: int) -> PolyChar:
    """Evaluate into m variables by semistandard tableau enumeration."""
    if m < 1:
        raise ValueError("need at least one variable")
    out = PolyChar(m)
    for p, c in a.coeffs.items():
        if p.length() > m:
            continue
        mono = _schur_polynomial(p, m)
        out = out + PolyChar(m, {e: c * k for e, k in mono.terms.items()})
    return out


def _schur_polynomial(p: Partition, m: int) -> PolyChar:
    terms: dict[tuple[int, ...], int] = {}
    for content in _ssyt_contents(p, m):
        terms[content] = terms.get(content, 0) + 1
    return PolyChar(m, terms)


def _ssyt_contents(p: Partition, m: int) -> Iterator[tuple[int, ...]]:
    """Contents of semistandard tableaux of straight shape p, entries 1..m."""
    rows = p.length()
    grid = [[0] * p.part(i + 1) for i in range(rows)]
    content = [0] * m

    def fill(r: int, idx: int) -> Iterator[tuple[int, ...]]:
        if r == rows:
            yield tuple(content)
            return
        if idx == len(grid[r]):
            yield from fill(r + 1, 0)
            return
        left = grid[r][idx - 1] if idx > 0 else 1
        above = grid[r - 1][idx] + 1 if r > 0 and idx < len(grid[r - 1]) else 1
        for v in range(max(left, above), m + 1):
            grid[r][idx] = v
            content[v - 1] += 1
            yield from fill(r, idx + 1)
            content[v - 1] -= 1
            grid[r][idx] = 0

    yield from fill(0, 0)


# -- the square basis --------------------------------------------------------

def square_basis_vector(lam: Partition) -> SchurVector:
    """Schur expansion of the universal spinor-character basis element.

    Alternating sum of s_{lam/mu} over self-conjugate mu, signed by half of
    size plus diagonal rank.
    """
    out = SchurVector.zero()
    for i in range(lam.size() + 1):
        sign = -1 if i % 2 else 1
        hit = False
        for mu in self_conjugate_with_index(i):
            if lam.contains(mu):
                hit = True
                out = out + skew_schur(lam, mu).scale(sign)
        if not hit and 2 * i > 2 * lam.size():
            break
    return out


def from_square_basis(b: SchurVector) -> SchurVector:
    """Interpret coefficients as square-basis coordinates; return Schur form."""
    out = SchurVector.zero()
    for lam, c in b.coeffs.items():
        out = out + square_basis_vector(lam).scale(c)
    return out


def to_square_basis(a: SchurVector) -> SchurVector:
    """Schur coordinates -> square-basis coordinates.

    Uses the expansion of a single Schur function as the sum over beta of
    (total coefficient mass of s_{lam/beta}) times the beta-th basis vector.
    """
    out: dict[Partition, int] = {}
    for lam, c in a.coeffs.items():
        for k in range(lam.size() + 1):
            for beta in partitions_of(k):
                if not lam.contains(beta):
                    continue
                mass = skew_schur(lam, beta).coefficient_sum()
                if mass:
                    out[beta] = out.get(beta, 0) + c * mass
    return SchurVector(out)


# -- determinantal formula ---------------------------------------------------

def _e_square(r: int) -> SchurVector:
    """Column-generator entry: e_r - e_{r-1} with e in one-column Schur form."""
    if r < 0:
        return SchurVector.zero()
    out = SchurVector.unit(Partition([1] * r))
    if r >= 1:
        out = out - SchurVector.unit(Partition([1] * (r - 1)))
    return out


def square_det_formula(lam: Partition) -> SchurVector:
    """Expand the column-vector determinant for the square-basis element.

    The matrix is ell x ell with ell = lam_1; column i is headed by
    r_i = (transpose part i) - (i - 1) and its k-th entry is
    e^sq_{r_i + (k-1)} + e^sq_{r_i - (k-1)} for k >= 2.
    """
    ell = lam.part(1)
    if ell == 0:
        return SchurVector.unit(Partition())
    lt = lam.transpose()
    cols = []
    for i in range(1, ell + 1):
        r = lt.part(i) - (i - 1)
        col = [_e_square(r)]
        for k in range(2, ell + 1):
            col.append(_e_square(r + (k - 1)) + _e_square(r - (k - 1)))
        cols.append(col)
    total = SchurVector.zero()
    for perm in itertools.permutations(range(ell)):
        sign = _perm_sign(perm)
        prod = SchurVector.unit(Partition())
        for k in range(ell):
            prod = schur_multiply(prod, cols[perm[k]][k])
            if not prod:
                break
        total = total + prod.scale(sign)
    return total


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign
