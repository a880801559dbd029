"""Finite-rank torus characters for the spin groups, with exact arithmetic.

Weights live in the character lattice of the rank-n torus with all
coordinates doubled, so half-integer spinor weights are plain integer
tuples.  Characters are Laurent polynomials stored as dictionaries from
doubled exponent vectors to integer multiplicities.

Irreducible characters come from the alternant quotient over the full
finite Weyl group; the quotient is computed by exact multivariate division
in lexicographic order and aborts on any inexact step.  A module-level memo
caches irreducibles by (type, rank, weight); inserts are idempotent, so
concurrent duplicated work is harmless.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable

from .partitions import Partition
from .symfunc import lr_coefficient  # noqa: F401  (re-exported convenience)


class LaurentChar:
    """Finitely supported map from doubled exponent vectors to integers."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], int] | None = None):
        self.n = n
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = int(c)

    @classmethod
    def zero(cls, n: int) -> "LaurentChar":
        return cls(n)

    @classmethod
    def monomial(cls, exponent2: Iterable[int], coeff: int = 1) -> "LaurentChar":
        e = tuple(exponent2)
        return cls(len(e), {e: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentChar)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other: "LaurentChar") -> "LaurentChar":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentChar(self.n, out)

    def __sub__(self, other: "LaurentChar") -> "LaurentChar":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return LaurentChar(self.n, out)

    def __neg__(self) -> "LaurentChar":
        return LaurentChar(self.n, {e: -c for e, c in self.terms.items()})

    def scale(self, k: int) -> "LaurentChar":
        return LaurentChar(self.n, {e: k * c for e, c in self.terms.items()})

    def __mul__(self, other: "LaurentChar") -> "LaurentChar":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return LaurentChar(self.n, out)

    def dimension(self) -> int:
        return sum(self.terms.values())

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self.terms)
        return e, self.terms[e]

    def __repr__(self) -> str:
        return f"LaurentChar(n={self.n}, {len(self.terms)} terms)"

    def to_json(self) -> list[dict]:
        return [
            {"exponent2": list(e), "coeff": c}
            for e, c in sorted(self.terms.items(), reverse=True)
        ]

    @classmethod
    def from_json(cls, items: list[dict], n: int | None = None) -> "LaurentChar":
        out: dict[tuple[int, ...], int] = {}
        for item in items:
            e = tuple(int(x) for x in item["exponent2"])
            out[e] = out.get(e, 0) + int(item["coeff"])
            if n is None:
                n = len(e)
        return cls(n or 0, out)

    def is_weyl_invariant(self, lie_type: str) -> bool:
        """Debug validation: invariance under the finite Weyl group."""
        n = self.n
        for sigma, signs in _weyl_group(lie_type, n):
            for e, c in self.terms.items():
                im = tuple(signs[i] * e[sigma[i]] for i in range(n))
                if self.terms.get(im, 0) != c:
                    return False
        return True


def _weyl_group(lie_type: str, n: int):
    """Signed permutations: all sign patterns for B, even flip counts for D."""
    for sigma, signs, _ in _weyl_group_det(lie_type, n):
        yield sigma, signs


def _weyl_group_det(lie_type: str, n: int):
    for sigma in itertools.permutations(range(n)):
        psign = _perm_sign_tuple(sigma)
        for signs in itertools.product((1, -1), repeat=n):
            flips = signs.count(-1)
            if lie_type == "D" and flips % 2:
                continue
            det = psign * ((-1) ** flips) if lie_type == "B" else psign
            yield sigma, signs, det


def _perm_sign_tuple(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def _rho2(lie_type: str, n: int) -> tuple[int, ...]:
    """Doubled Weyl vector: (2n-1, ..., 1) for B, (2n-2, ..., 0) for D."""
    if lie_type == "B":
        return tuple(2 * (n - i) - 1 for i in range(n))
    return tuple(2 * (n - i - 1) for i in range(n))


def _alternant(point: tuple[int, ...], lie_type: str, n: int) -> LaurentChar:
    terms: dict[tuple[int, ...], int] = {}
    for sigma, signs, det in _weyl_group_det(lie_type, n):
        e = tuple(signs[i] * point[sigma[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + det
    return LaurentChar(n, terms)


def _divide_exact(num: LaurentChar, den: LaurentChar) -> LaurentChar:
    """Exact division in the Laurent monomial ring, lex leading terms."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    d_exp, d_coeff = den.leading()
    rem = dict(num.terms)
    out: dict[tuple[int, ...], int] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        if c % d_coeff:
            raise ArithmeticError("inexact character division")
        q_exp = tuple(a - b for a, b in zip(e, d_exp))
        q_coeff = c // d_coeff
        out[q_exp] = out.get(q_exp, 0) + q_coeff
        for de, dc in den.terms.items():
            key = tuple(a + b for a, b in zip(q_exp, de))
            v = rem.get(key, 0) - q_coeff * dc
            if v:
                rem[key] = v
            elif key in rem:
                del rem[key]
    return LaurentChar(num.n, out)


def _is_dominant(hw2: tuple[int, ...], lie_type: str) -> bool:
    same_parity = len({e % 2 for e in hw2}) <= 1
    if not same_parity:
        return False
    if lie_type == "B":
        return all(
            hw2[i] >= hw2[i + 1] for i in range(len(hw2) - 1)
        ) and (not hw2 or hw2[-1] >= 0)
    return all(hw2[i] >= hw2[i + 1] for i in range(len(hw2) - 1)) and (
        len(hw2) < 2 or hw2[-2] >= abs(hw2[-1])
    )


_irr_memo: dict[tuple[str, int, tuple[int, ...]], LaurentChar] = {}


def weyl_character(hw2: Iterable[int], lie_type: str) -> LaurentChar:
    """Irreducible character for doubled dominant weight hw2, type B or D.

    Computed as the quotient of alternants; the coefficient sum is asserted
    against the Weyl dimension formula.
    """
    hw2 = tuple(int(x) for x in hw2)
    if lie_type not in ("B", "D"):
        raise ValueError("type must be 'B' or 'D'")
    if not _is_dominant(hw2, lie_type):
        raise ValueError(f"weight {hw2} not dominant for type {lie_type}")
    key = (lie_type, len(hw2), hw2)
    cached = _irr_memo.get(key)
    if cached is not None:
        return cached
    n = len(hw2)
    if n == 0:
        return LaurentChar.monomial(())
    rho = _rho2(lie_type, n)
    shifted = tuple(h + r for h, r in zip(hw2, rho))
    num = _alternant(shifted, lie_type, n)
    den = _alternant(rho, lie_type, n)
    if not num:
        # D-type weight with a zero coordinate fixed by a sign flip never
        # occurs for dominant weights, so an empty numerator is a bug.
        raise ArithmeticError("vanishing alternant for a dominant weight")
    ch = _divide_exact(num, den)
    if ch.dimension() != weyl_dimension(hw2, lie_type):
        raise AssertionError(f"dimension mismatch for {hw2} ({lie_type})")
    _irr_memo[key] = ch
    return ch


def weyl_dimension(hw2: Iterable[int], lie_type: str) -> int:
    """Weyl dimension formula with exact rationals."""
    hw2 = tuple(int(x) for x in hw2)
    n = len(hw2)
    rho = _rho2(lie_type, n)
    lam = [Fraction(h + r, 2) for h, r in zip(hw2, rho)]
    rr = [Fraction(r, 2) for r in rho]
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= (lam[i] ** 2 - lam[j] ** 2) / (rr[i] ** 2 - rr[j] ** 2)
    if lie_type == "B":
        for i in range(n):
            dim *= lam[i] / rr[i]
    if dim.denominator != 1:
        raise AssertionError("non-integral Weyl dimension")
    return int(dim)


# -- spin characters ----------------------------------------------------------

def pin_character(lam: Partition, N: int) -> LaurentChar:
    """Character of the rank-N spinor-twisted irreducible on the torus.

    Odd N gives a single B-type character at lam + (1/2,...,1/2); even N
    fuses the two D-type characters with last coordinate +-1/2.
    """
    n = N // 2
    if lam.length() > n:
        raise ValueError(f"partition {lam} too long for rank {N}")
    key = ("pin", N, lam.parts)
    cached = _pin_memo.get(key)
    if cached is not None:
        return cached
    base = [2 * lam.part(i) + 1 for i in range(1, n + 1)]
    if N % 2:
        ch = weyl_character(base, "B")
    else:
        plus = tuple(base)
        minus = tuple(base[:-1] + [-base[-1]])
        ch = weyl_character(plus, "D") + weyl_character(minus, "D")
    _pin_memo[key] = ch
    return ch


_pin_memo: dict[tuple, LaurentChar] = {}


def standard_monomials(N: int) -> list[tuple[int, ...]]:
    """Doubled exponent vectors of the defining representation's weights."""
    n = N // 2
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 2
        out.append(tuple(e))
        e2 = [0] * n
        e2[i] = -2
        out.append(tuple(e2))
    if N % 2:
        out.append(tuple([0] * n))
    return out


def tensor_with_schur(
    lam_over_mu: tuple[Partition, Partition], N: int
) -> LaurentChar:
    """Character of the skew Schur functor of the defining rep, spinor-twisted.

    Evaluates the skew Schur function at the defining representation's weight
    monomials by skew semistandard tableau enumeration, then multiplies by
    the rank-N spinor character.
    """
    lam, mu = lam_over_mu
    n = N // 2
    monos = standard_monomials(N)
    acc: dict[tuple[int, ...], int] = {}
    for content in _skew_ssyt_contents(lam, mu, len(monos)):
        e = tuple(
            sum(content[k] * monos[k][i] for k in range(len(monos)))
            for i in range(n)
        )
        acc[e] = acc.get(e, 0) + 1
    return LaurentChar(n, acc) * pin_character(Partition(), N)


def _skew_ssyt_contents(lam: Partition, mu: Partition, m: int):
    """Contents of skew semistandard tableaux, entries 1..m."""
    if not lam.contains(mu):
        return
    rows = lam.length()
    shape = [(mu.part(i + 1), lam.part(i + 1)) for i in range(rows)]
    grid = [[0] * (hi - lo) for lo, hi in shape]
    content = [0] * m

    def fill(r: int, idx: int):
        if r == rows:
            yield tuple(content)
            return
        lo, hi = shape[r]
        if idx == hi - lo:
            yield from fill(r + 1, 0)
            return
        col = lo + idx
        left = grid[r][idx - 1] if idx > 0 else 1
        over = 0
        if r > 0:
            plo, phi = shape[r - 1]
            if plo <= col < phi:
                over = grid[r - 1][col - plo]
        for v in range(max(left, over + 1), m + 1):
            grid[r][idx] = v
            content[v - 1] += 1
            yield from fill(r, idx + 1)
            content[v - 1] -= 1
            grid[r][idx] = 0

    yield from fill(0, 0)


def elementary_times_spinor(r: int, N: int) -> LaurentChar:
    """Character of the r-th exterior power of the defining rep, spinor-twisted."""
    monos = standard_monomials(N)
    n = N // 2
    acc: dict[tuple[int, ...], int] = {}
    for subset in itertools.combinations(monos, r):
        e = tuple(sum(mono[i] for mono in subset) for i in range(n))
        acc[e] = acc.get(e, 0) + 1
    return LaurentChar(n, acc) * pin_character(Partition(), N)


# -- decomposition by leading-term peeling -------------------------------------

def decompose(ch: LaurentChar, N: int, spin: bool = True) -> dict[tuple[int, ...], int]:
    """Decompose a (possibly virtual) character into highest weights.

    Repeatedly peels the lexicographically greatest exponent vector.  For
    even N with spinor weights the two half-spin classes are fused into one,
    matching the convention of pin_character.  Keys of the result are full
    doubled highest weights (the shift included).  Reconstruction is exact by
    construction; malformed input raises.
    """
    n = N // 2
    rem = LaurentChar(n, dict(ch.terms))
    out: dict[tuple[int, ...], int] = {}
    guard = 0
    limit = 4 * (len(ch.terms) + 1) * (1 + max((sum(abs(x) for x in e) for e in ch.terms), default=0))
    while rem:
        guard += 1
        if guard > limit:
            raise ArithmeticError("peeling failed to terminate; not a character")
        e, c = rem.leading()
        hw = tuple(sorted((abs(x) for x in e), reverse=True))
        if hw != e:
            raise ArithmeticError(f"leading term {e} is not dominant")
        if spin:
            if any(x % 2 == 0 for x in hw):
                raise ArithmeticError(f"non-spinor weight {e} in spin decomposition")
            lam = Partition([(x - 1) // 2 for x in hw])
            piece = pin_character(lam, N)
            key = hw
        else:
            if any(x % 2 for x in hw):
                raise ArithmeticError(f"non-integral weight {e}")
            lam = Partition([x // 2 for x in hw])
            if N % 2:
                piece = weyl_character(hw, "B")
            elif hw[-1] != 0:
                piece = weyl_character(hw, "D") + weyl_character(
                    hw[:-1] + (-hw[-1],), "D"
                )
            else:
                piece = weyl_character(hw, "D")
            key = hw
        rem = rem - piece.scale(c)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}
