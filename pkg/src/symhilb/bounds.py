"""Lower bounds on the Hilbert function from constrained plethysm sums.

H(r) is bounded below by the dimension sum of the Sym^r(S_(3,1,...,1,0))
constituents whose partition tail satisfies lam_{d-k} + ... + lam_d <= rk.
The complementary check: every constituent of
S_(4,3,2,...,2,1) (x) S_(3,1,...,1,0)^{(x)(r-2)} has tail sum >= rk+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .partitions import Partition, lr_product, padded, schur_dim
from .symfun import SchurExpansion, sym_plethysm


def module_31(d: int) -> Partition:
    """(3,1,...,1,0): the generator module, a partition of d+1."""
    if d < 3:
        raise ValueError("need d >= 3")
    return (3,) + (1,) * (d - 2)


def module_4321(d: int) -> Partition:
    """(4,3,2,...,2,1): the relation module, a partition of 2d+2."""
    if d < 3:
        raise ValueError("need d >= 3")
    return (4, 3) + (2,) * (d - 3) + (1,)


def tail_sum(lam, d: int, k: int) -> int:
    """lam_{d-k} + ... + lam_d on the zero-padded partition (k+1 terms)."""
    return sum(padded(lam, d)[d - k - 1:])


@dataclass
class BoundReport:
    d: int
    r: int
    k: int
    admitted: list[tuple[Partition, int, int]]  # (lam, multiplicity, dim)
    value: int
    hilbert: int | None = None

    def summary(self) -> str:
        vs = f" <= H({self.r})={self.hilbert}" if self.hilbert is not None else ""
        return f"d={self.d} r={self.r} k={self.k}: bound {self.value}{vs}"


def corollary_bound(d: int, r: int, k: int, expansion: SchurExpansion | None = None) -> BoundReport:
    """Sum of m_lam * dim S_lam over constituents passing the tail filter."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if not 0 <= k <= d - 1:
        raise ValueError("k must lie in 0..d-1")
    if expansion is None:
        expansion = sym_plethysm(r, module_31(d), d)
    admitted = []
    total = 0
    for lam, m in expansion:
        if tail_sum(lam, d, k) <= r * k:
            dim = schur_dim(lam, d)
            admitted.append((lam, m, dim))
            total += m * dim
    return BoundReport(d=d, r=r, k=k, admitted=admitted, value=total)


def _tensor_with(base: dict[Partition, int], mu: Partition, d: int) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for lam, m in base.items():
        for nu, c in lr_product(lam, mu, d).items():
            out[nu] = out.get(nu, 0) + m * c
    return out


@dataclass
class TailCheckReport:
    d: int
    r: int
    constituents: list[tuple[Partition, int]]
    entries: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.entries)


def tensor_tail_check(d: int, r: int) -> TailCheckReport:
    """Every constituent of S_(4,3,...,1) (x) S_(3,1,...,0)^{(x)(r-2)} must
    satisfy lam_{d-k}+...+lam_d >= rk+1 for all k in 0..d-1."""
    if r < 2:
        raise ValueError("r must be >= 2")
    base: dict[Partition, int] = {module_4321(d): 1}
    for _ in range(r - 2):
        base = _tensor_with(base, module_31(d), d)
    report = TailCheckReport(d=d, r=r, constituents=sorted(base.items(), reverse=True))
    for lam, _ in report.constituents:
        for k in range(d):
            ok = tail_sum(lam, d, k) >= r * k + 1
            report.entries.append((f"{lam} k={k}", ok))
    if not report.ok:
        bad = [lbl for lbl, flag in report.entries if not flag]
        raise ArithmeticError(f"tail inequality violated: {bad}")
    return report


@dataclass
class ScanRow:
    r: int
    bounds: dict[int, int]  # k -> bound value
    best_k: int
    best: int
    hilbert: int | None = None


def bound_scan(d: int, r_max: int, hilbert_values: dict[int, int] | None = None) -> list[ScanRow]:
    """Best-over-k bound for each r in 2..r_max; H(r) attached when given."""
    rows = []
    for r in range(2, r_max + 1):
        expansion = sym_plethysm(r, module_31(d), d)
        bounds = {k: corollary_bound(d, r, k, expansion).value for k in range(d)}
        best_k = max(bounds, key=lambda k: (bounds[k], -k))
        rows.append(ScanRow(
            r=r,
            bounds=bounds,
            best_k=best_k,
            best=bounds[best_k],
            hilbert=(hilbert_values or {}).get(r),
        ))
    return rows


def remark_multiplicity_modules(d: int) -> list[Partition]:
    """(6,4,3,...,3,2), (5,4,4,3,...,3,2), (5,4,3,...,3): the summands that
    repeat inside S_(4,3,2,...,2,1) (x) S_(3,1,...,1,0)."""
    if d < 4:
        raise ValueError("need d >= 4")
    return [
        (6, 4) + (3,) * (d - 3) + (2,),
        (5, 4, 4) + (3,) * (d - 4) + (2,),
        (5, 4) + (3,) * (d - 2),
    ]


def remark_multiplicities(d: int) -> dict[Partition, int]:
    """Multiplicities of the three repeated modules in the tensor product."""
    product = lr_product(module_4321(d), module_31(d), d)
    return {lam: product.get(lam, 0) for lam in remark_multiplicity_modules(d)}
