"""Exact and modular rank computation for sparse integer/rational matrices.

Three engines:

* ExactEchelon: sparse row echelon over Fraction, incremental, also usable
  as a greedy independence filter.
* sparse_modular_rank: sparse row echelon over F_p with Python integers,
  valid for any prime (used for 31-bit agreement checks on small systems).
* StreamRank: streaming blocked echelon over F_p backed by float64 matrix
  products, for large graded pieces.  Requires chunk * p^2 < 2^53 so that
  every dot product is exact in double precision; with the default chunk of
  1024 rows any prime below 2.9e6 is safe.

Rows are dicts {column index: coefficient} throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

# defaults: small enough for exact float64 blocks, large enough for hashing safety
STREAM_PRIMES = (999983, 1000003)
SPARSE_PRIMES = (2147483647, 2147483629)  # 31-bit


class ExactEchelon:
    """Incremental sparse Gaussian elimination over the rationals."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}  # lead column -> unit row

    def _reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        # reduce at the lead column only; stored unit rows have zeros left of
        # their own lead, so the lead strictly increases and this terminates
        while row:
            piv = min(row)
            unit = self.pivots.get(piv)
            if unit is None:
                return row
            coeff = row[piv]
            for c, v in unit.items():
                nv = row.get(c, Fraction(0)) - coeff * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict[int, Fraction]) -> bool:
        """Reduce row against the basis; store if independent.  Returns True
        when the row increased the rank."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        row = self._reduce(row)
        if not row:
            return False
        piv = min(row)
        inv = Fraction(1) / row[piv]
        self.pivots[piv] = {c: v * inv for c, v in row.items()}
        return True

    def reduce_only(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        """Remainder of row modulo the current row space (no insertion)."""
        return self._reduce({c: Fraction(v) for c, v in row.items() if v})

    def contains(self, row: dict[int, Fraction]) -> bool:
        return not self.reduce_only(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def exact_rank(rows) -> int:
    ech = ExactEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def sparse_modular_rank(rows, p: int) -> int:
    """Sparse echelon rank over F_p with exact Python integers (any prime)."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {c: int(v) % p for c, v in row.items() if int(v) % p}
        while r:
            piv = min(r)
            unit = pivots.get(piv)
            if unit is None:
                inv = pow(r[piv], -1, p)
                pivots[piv] = {c: (v * inv) % p for c, v in r.items()}
                rank += 1
                break
            coeff = r[piv]
            for c, v in unit.items():
                nv = (r.get(c, 0) - coeff * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return rank


def fraction_rows_to_int(rows):
    """Clear denominators row by row; the row space over Q is unchanged."""
    for row in rows:
        lcm = 1
        for v in row.values():
            den = Fraction(v).denominator
            lcm = lcm * den // gcd(lcm, den)
        yield {c: int(Fraction(v) * lcm) for c, v in row.items()}


class _Block:
    __slots__ = ("start", "pivcols", "rows", "linv")

    def __init__(self, start, pivcols, rows, linv):
        self.start = start      # leftmost stored column
        self.pivcols = pivcols  # int64 array, insertion order
        self.rows = rows        # int32 array, shape (b, ncols - start)
        self.linv = linv        # int32 array, inverse of rows[:, pivcols - start]


def _inv_unit_upper(L: np.ndarray, p: int) -> np.ndarray:
    """Inverse mod p of a unit upper-triangular float64 matrix (recursive)."""
    n = L.shape[0]
    if n <= 64:
        inv = np.zeros((n, n))
        for i in range(n - 1, -1, -1):
            inv[i, i] = 1.0
            for j in range(i + 1, n):
                # row i of inverse: solve backwards
                s = 0.0
                for k in range(i + 1, j + 1):
                    s = (s + L[i, k] * inv[k, j]) % p
                inv[i, j] = (-s) % p
        return inv
    h = n // 2
    A, B, D = L[:h, :h], L[:h, h:], L[h:, h:]
    Ai = _inv_unit_upper(A, p)
    Di = _inv_unit_upper(D, p)
    top_right = (-((Ai @ B) % p) @ Di) % p
    out = np.zeros((n, n))
    out[:h, :h] = Ai
    out[:h, h:] = top_right
    out[h:, h:] = Di
    return out


class StreamRank:
    """Streaming rank over F_p for matrices too large to hold densely.

    Rows arrive sparse; chunks of `chunk` rows are densified, reduced
    against previously frozen echelon blocks with float64 matrix products,
    then internally eliminated; surviving unit rows freeze into a new block.
    Every echelon row is reduced against all earlier rows, so the pivot
    submatrix of each block is unit upper-triangular in insertion order.
    """

    def __init__(self, ncols: int, p: int, chunk: int = 1024):
        if chunk * (p - 1) ** 2 >= 2**53:
            raise ValueError(f"prime {p} too large for exact float64 blocks of {chunk} rows")
        self.ncols = ncols
        self.p = p
        self.chunk = chunk
        self.blocks: list[_Block] = []
        self._pending: list[dict[int, int]] = []
        self._seen: set | None = set()  # row dedup hashes; disabled after finalize

    def add_row(self, row: dict[int, int]) -> None:
        items = tuple(sorted((c, v % self.p) for c, v in row.items() if v % self.p))
        if not items:
            return
        if self._seen is not None:
            if items in self._seen:
                return
            self._seen.add(items)
        self._pending.append(dict(items))
        if len(self._pending) >= self.chunk:
            self._absorb()

    def _absorb(self) -> None:
        if not self._pending:
            return
        p = self.p
        C = np.zeros((len(self._pending), self.ncols))
        for i, row in enumerate(self._pending):
            cols = np.fromiter(row.keys(), dtype=np.int64, count=len(row))
            vals = np.fromiter(row.values(), dtype=np.float64, count=len(row))
            C[i, cols] = vals
        self._pending.clear()
        for blk in self.blocks:
            sub = C[:, blk.pivcols]
            if not sub.any():
                continue
            X = (sub @ blk.linv.astype(np.float64)) % p
            C[:, blk.start:] -= X @ blk.rows.astype(np.float64)
            C[:, blk.start:] %= p
        pivcols, rows = self._eliminate(C)
        if not pivcols:
            return
        start = int(min(pivcols))
        mat = np.array([r[start:] for r in rows], dtype=np.int32)
        pc = np.asarray(pivcols, dtype=np.int64)
        L = mat[:, pc - start].astype(np.float64)
        linv = _inv_unit_upper(L, p).astype(np.int32)
        self.blocks.append(_Block(start, pc, mat, linv))

    def _eliminate(self, C: np.ndarray):
        """In-place echelon of a dense chunk; returns (pivcols, unit rows)."""
        p = self.p

        def rec(lo: int, hi: int) -> tuple[list[int], list[int]]:
            if hi - lo <= 64:
                pivs: list[int] = []
                keep: list[int] = []
                for i in range(lo, hi):
                    for j, pc in zip(keep, pivs):
                        v = C[i, pc]
                        if v:
                            C[i, pc:] = (C[i, pc:] - v * C[j, pc:]) % p
                    nz = np.nonzero(C[i])[0]
                    if len(nz) == 0:
                        continue
                    lead = int(nz[0])
                    C[i, lead:] = (C[i, lead:] * pow(int(C[i, lead]), -1, p)) % p
                    pivs.append(lead)
                    keep.append(i)
                return pivs, keep
            mid = (lo + hi) // 2
            pivs_t, keep_t = rec(lo, mid)
            if pivs_t:
                pc = np.asarray(pivs_t, dtype=np.int64)
                start = int(pc.min())
                T = C[keep_t, start:]
                L = T[:, pc - start]
                linv = _inv_unit_upper(L, p)
                sub = C[mid:hi, pc]
                if sub.any():
                    X = (sub @ linv) % p
                    C[mid:hi, start:] -= X @ T
                    C[mid:hi, start:] %= p
            pivs_b, keep_b = rec(mid, hi)
            return pivs_t + pivs_b, keep_t + keep_b

        pivs, keep = rec(0, C.shape[0])
        # copy out unit rows before C is freed
        return pivs, [C[i].copy() for i in keep]

    def finalize(self) -> int:
        self._absorb()
        self._seen = None
        return self.rank

    @property
    def rank(self) -> int:
        return sum(len(b.pivcols) for b in self.blocks)


def stream_rank(rows, ncols: int, p: int, chunk: int = 1024) -> int:
    eng = StreamRank(ncols, p, chunk)
    for row in rows:
        eng.add_row(row)
    return eng.finalize()
