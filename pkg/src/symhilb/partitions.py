"""Partitions, semistandard tableaux, and Littlewood-Richardson products.

A partition is a plain tuple of weakly decreasing nonnegative integers.
Trailing zeros are stripped on normalization; the ambient rank d is always
passed explicitly to the operations that need it, so (3,1,0) and (3,1)
denote the same partition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Partition = tuple[int, ...]

SSYT_BUDGET = 10**7


class BudgetError(RuntimeError):
    """Enumeration would exceed the configured budget."""


def normalize(parts) -> Partition:
    """Strip trailing zeros and validate weak decrease."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {parts}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return lam


def weight(lam) -> int:
    return sum(lam)


def padded(lam, d: int) -> Partition:
    """lam extended with zeros to length d."""
    lam = normalize(lam)
    if len(lam) > d:
        raise ValueError(f"{lam} has more than {d} parts")
    return lam + (0,) * (d - len(lam))


def partitions_of(n: int, max_parts: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n with at most max_parts parts, decreasing lex order."""
    if n < 0 or max_parts < 0:
        raise ValueError("n and max_parts must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, slots: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        if slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, slots - 1, part, prefix + (part,))

    cap0 = n if max_part is None else min(n, max_part)
    rec(n, max_parts, cap0, ())
    return out


def schur_dim(lam, d: int) -> int:
    """Dimension of the GL(d) Schur module S_lam by the product formula.

    prod_{1<=i<j<=d} (mu_i - mu_j + j - i)/(j - i) with mu the zero-padded
    partition.  Evaluated exactly; the result must be an integer.
    """
    mu = padded(lam, d)
    val = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            val *= Fraction(mu[i] - mu[j] + j - i, j - i)
    assert val.denominator == 1, (lam, d, val)
    return int(val)


def ssyt_iter(lam, d: int, budget: int = SSYT_BUDGET):
    """Yield content vectors of semistandard tableaux of shape lam, entries 1..d.

    Rows weakly increase, columns strictly increase.  The budget counts
    yielded tableaux; exceeding it raises BudgetError.
    """
    shape = normalize(lam)
    if len(shape) > d:
        return
    rows = len(shape)
    content = [0] * d
    # current[r] holds the partially filled row r
    current: list[list[int]] = [[] for _ in range(rows)]
    count = 0

    def fill(r: int, c: int):
        nonlocal count
        if r == rows:
            count += 1
            if count > budget:
                raise BudgetError(f"ssyt enumeration exceeded {budget} tableaux")
            yield tuple(content)
            return
        if c == shape[r]:
            yield from fill(r + 1, 0)
            return
        lo = current[r][c - 1] if c > 0 else 1
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, current[r - 1][c] + 1)
        for v in range(lo, d + 1):
            current[r].append(v)
            content[v - 1] += 1
            yield from fill(r, c + 1)
            content[v - 1] -= 1
            current[r].pop()

    yield from fill(0, 0)


def ssyt_count(lam, d: int, budget: int = SSYT_BUDGET) -> int:
    """Number of semistandard tableaux of shape lam with entries <= d."""
    return sum(1 for _ in ssyt_iter(lam, d, budget))


@lru_cache(maxsize=None)
def _lr_fillings(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Count LR skew tableaux of shape nu/lam and content mu.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left), so the lattice condition can be enforced greedily: after
    each placed entry v, #v's placed so far must not exceed #(v-1)'s.
    """
    nu_l = list(nu)
    lam_l = list(lam) + [0] * (len(nu) - len(lam))
    if any(lam_l[i] > nu_l[i] for i in range(len(nu))):
        return 0
    cells = []
    for r in range(len(nu)):
        for c in range(nu_l[r] - 1, lam_l[r] - 1, -1):
            cells.append((r, c))
    n = len(mu)
    placed = [0] * (n + 1)
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, n + 1):
            if placed[v] >= mu[v - 1]:
                continue
            if v > 1 and placed[v] >= placed[v - 1]:
                continue  # lattice word
            right = grid.get((r, c + 1))
            if right is not None and v > right:
                continue  # row weakly increases
            above = grid.get((r - 1, c))
            if above is not None and v <= above:
                continue  # column strictly increases
            grid[(r, c)] = v
            placed[v] += 1
            total += rec(idx + 1)
            placed[v] -= 1
            del grid[(r, c)]
        return total

    return rec(0)


def lr_product(lam, mu, d: int) -> dict[Partition, int]:
    """Littlewood-Richardson decomposition of S_lam (x) S_mu for GL(d).

    Returns {nu: c^nu_{lam,mu}} over partitions nu with at most d parts;
    coefficients counted by lattice-word skew tableau enumeration.
    """
    lam_n = normalize(lam)
    mu_n = normalize(mu)
    if len(lam_n) > d or len(mu_n) > d:
        raise ValueError(f"{lam} or {mu} has more than {d} parts")
    out: dict[Partition, int] = {}
    total = weight(lam_n) + weight(mu_n)
    for nu in partitions_of(total, d):
        if any(nu[i] < lam_n[i] for i in range(min(len(nu), len(lam_n)))):
            continue
        if len(lam_n) > len(nu):
            continue
        c = _lr_fillings(nu, lam_n, mu_n)
        if c:
            out[nu] = c
    return out
