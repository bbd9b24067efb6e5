"""Exact arithmetic over the two-element field.

Binomial coefficients mod 2, dense linear algebra with bit-packed rows,
and the dimension series of free graded-commutative algebras.  Everything
here is integer arithmetic on Python ints; no floating point anywhere.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 via Lucas: odd iff the bits of k are a submask of n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom_mod2 needs nonnegative arguments, got ({n}, {k})")
    return 1 if n & k == k else 0


class F2Matrix:
    """A matrix over GF(2) with rows packed into Python ints.

    Bit c of ``rows[r]`` is the entry in row r, column c.  Matrices are
    immutable after construction; rank and kernel computations work on
    private copies.
    """

    __slots__ = ("rows", "ncols", "_rank")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = tuple(rows)
        self.ncols = ncols
        if ncols < 0:
            raise ValueError("ncols must be nonnegative")
        mask = (1 << ncols) - 1
        if any(r < 0 or r & ~mask for r in self.rows):
            raise ValueError("row bits outside the declared column range")
        self._rank: int | None = None

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls([1 << c for c in range(n)], n)

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]], ncols: int | None = None) -> "F2Matrix":
        packed = []
        width = 0
        for row in dense:
            bits = 0
            for c, v in enumerate(row):
                if v & 1:
                    bits |= 1 << c
                width = max(width, c + 1)
            packed.append(bits)
        return cls(packed, ncols if ncols is not None else width)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, r: int, c: int) -> int:
        return (self.rows[r] >> c) & 1

    def to_dense(self) -> list[list[int]]:
        return [[(row >> c) & 1 for c in range(self.ncols)] for row in self.rows]

    def apply(self, vec: int) -> int:
        """Matrix-vector product; vec and the result are column bitmasks."""
        out = 0
        for r, row in enumerate(self.rows):
            if (row & vec).bit_count() & 1:
                out |= 1 << r
        return out

    def _rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form; returns (rows, pivot columns)."""
        work = list(self.rows)
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            piv = next((k for k in range(r, len(work)) if (work[k] >> c) & 1), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            for k in range(len(work)):
                if k != r and (work[k] >> c) & 1:
                    work[k] ^= work[r]
            pivots.append(c)
            r += 1
        return work, pivots

    def rank(self) -> int:
        if self._rank is None:
            self._rank = len(self._rref()[1])
        return self._rank

    def kernel_basis(self) -> list[int]:
        """Basis of the right kernel {v : M v = 0}, as column bitmasks.

        One vector per non-pivot column, in ascending column order; the
        count always equals ncols - rank.
        """
        work, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = 1 << free
            for r, pc in enumerate(pivots):
                if (work[r] >> free) & 1:
                    vec |= 1 << pc
            basis.append(vec)
        return basis


def kernel_basis(m: F2Matrix) -> list[int]:
    """Kernel basis of a GF(2) matrix (column bitmasks)."""
    return m.kernel_basis()


def free_commutative_dims(q: Mapping[int, int], max_degree: int) -> list[int]:
    """Graded dimensions of a free commutative algebra over GF(2).

    ``q[m]`` is the number of polynomial generators in degree m.  Returns
    dims[0..max_degree] with dims[0] = 1, computed by repeatedly convolving
    with the power series of a single generator (1 + t^m + t^2m + ...).
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    for m, c in q.items():
        if m <= 0:
            raise ValueError(f"generator degrees must be positive, got {m}")
        if c < 0:
            raise ValueError(f"generator counts must be nonnegative, got {c}")
    dims = [1] + [0] * max_degree
    for m in sorted(q):
        if m > max_degree:
            continue
        for _ in range(q[m]):
            for n in range(m, max_degree + 1):
                dims[n] += dims[n - m]
    return dims
