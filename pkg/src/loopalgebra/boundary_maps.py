"""Boundary maps on indecomposables and the rank table.

Two cofibre sequences of spectra connect the Madsen-Tillmann spectra
MTO(1), MTO(2) to suspension spectra of BO(1), BO(2) and S^0.  On the
indecomposables of the F_2-homology of the associated infinite loop
spaces this gives, degreewise, two matrices:

  * ``dbar_matrix``    QH_n(Q_0 BO(1)+)  ->  QH_n(Q_0 S^0),
    sending Q^I(e_i) to the normal form of Q^I Q^i on [1];
  * ``dpartial_matrix``  QH_n(Q_0 BO(2)+)  ->  ker of the first,
    computed through the closed formula for the circle-bundle transfer
    and the ambient Dyer-Lashof action.

The kernel of the first map has a canonical basis v^{I,i}, one element per
pair with I admissible, e(I) > i and (I,i) inadmissible; columns of the
second map are read off in that basis.  Both maps are surjective in the
verified range, which makes the generator counts of H_*(Omega_0^oo MTO(2))
a degreewise difference; the rank table assembles those counts and the
dimensions of the polynomial algebra they generate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from .f2 import F2Matrix, binom_mod2, free_commutative_dims
from .dyer_lashof import OpSequence, excess, is_admissible, normalize
from .loop_homology import (
    BaseClass,
    QGenerator,
    Resolution,
    Space,
    admissible_sequences,
    eval_unstable,
    q_generators,
)
from .hopf import HopfElement, TruncationError, antipode, q_of_base

AmbientSum = frozenset[QGenerator]
VKey = tuple[OpSequence, int]


class KernelMembershipError(Exception):
    """An element expected to lie in a kernel did not."""


def _e(i: int) -> BaseClass:
    return BaseClass(Space.BO1, i, 0)


def _seq_name(seq: OpSequence) -> str:
    return "(" + ",".join(str(s) for s in seq) + ")"


@dataclass(frozen=True)
class GradedMatrix:
    """A degreewise F_2 matrix together with its enumerated bases."""

    domain: tuple
    codomain: tuple
    matrix: F2Matrix

    def rank(self) -> int:
        return self.matrix.rank()

    def kernel_dim(self) -> int:
        return len(self.domain) - self.matrix.rank()


@dataclass(frozen=True)
class VGen:
    """A kernel-basis element v^{I,i}: leading generator Q^I(e_i) plus the
    admissible-pair corrections from the normal form of Q^I Q^i."""

    seq: OpSequence
    i: int
    ambient: AmbientSum

    @property
    def degree(self) -> int:
        return sum(self.seq) + self.i

    @property
    def key(self) -> VKey:
        return (self.seq, self.i)

    @property
    def name(self) -> str:
        return f"v^{{{_seq_name(self.seq)},{self.i}}}"


@cache
def dbar_matrix(n: int) -> GradedMatrix:
    """The stable-transfer map on indecomposables in degree n.

    Columns are indexed by q_generators(BO1, n), rows by
    q_generators(POINT, n); the column of Q^I(e_i) keeps the admissible
    terms of Q^I Q^i of positive excess (zero-excess terms are squares).
    """
    if n < 1:
        raise ValueError("degrees start at 1")
    domain = q_generators(Space.BO1, n)
    codomain = q_generators(Space.POINT, n)
    row_of = {g.seq: r for r, g in enumerate(codomain)}
    rows = [0] * len(codomain)
    for c, g in enumerate(domain):
        for m_seq in normalize(g.seq + (g.base.degree,)):
            if excess(m_seq) > 0:
                rows[row_of[m_seq]] |= 1 << c
    return GradedMatrix(domain, codomain, F2Matrix(rows, len(domain)))


def v_symbol(seq: OpSequence, i: int) -> VKey | None:
    """Resolve a v-symbol: None when (seq, i) is admissible as a composite
    or the excess condition e(seq) > i fails; otherwise the key itself."""
    if not is_admissible(seq):
        raise ValueError(f"{seq} is not admissible")
    if is_admissible(seq + (i,)) or excess(seq) <= i:
        return None
    return (seq, i)


def _ambient(seq: OpSequence, i: int) -> AmbientSum:
    terms = {QGenerator(seq, _e(i))}
    for m_seq in normalize(seq + (i,)):
        # e(M) > 0 makes Q^{M[:-1]}(e_{M[-1]}) a generator; e(M) = 0 a square
        if excess(m_seq) > 0:
            terms ^= {QGenerator(m_seq[:-1], _e(m_seq[-1]))}
    return frozenset(terms)


def v_gen(seq: OpSequence, i: int) -> VGen:
    """Construct v^{seq,i}; the pair must pass the v_symbol conditions."""
    if v_symbol(tuple(seq), i) is None:
        raise ValueError(f"({seq}, {i}) does not index a kernel-basis element")
    return VGen(tuple(seq), i, _ambient(tuple(seq), i))


@cache
def v_basis(n: int) -> tuple[VGen, ...]:
    """All v^{I,i} of degree n, ordered by i then I."""
    if n < 1:
        raise ValueError("degrees start at 1")
    out = []
    for i in range(n):
        for seq in sorted(admissible_sequences(n - i, i)):
            if seq and seq[-1] > 2 * i:
                out.append(VGen(seq, i, _ambient(seq, i)))
    return tuple(out)


def _degree_of(w: AmbientSum) -> int:
    degs = {g.degree for g in w}
    if len(degs) != 1:
        raise ValueError("expected a homogeneous ambient element")
    return degs.pop()


def _check_kernel(w: AmbientSum, n: int) -> None:
    gm = dbar_matrix(n)
    col_of = {g: c for c, g in enumerate(gm.domain)}
    vec = 0
    for g in w:
        vec |= 1 << col_of[g]
    if gm.matrix.apply(vec):
        raise KernelMembershipError(f"element of degree {n} is not annihilated by the transfer map")


def to_v_coords(w: AmbientSum, n: int | None = None) -> frozenset[VKey]:
    """Coordinates of a kernel element in the v-basis.

    Reads off the coefficients at inadmissible-pair generators, then checks
    that the ambient expansion reconstructs w exactly; a mismatch means w
    was not in the kernel.
    """
    if not w:
        return frozenset()
    if n is None:
        n = _degree_of(w)
    coords = frozenset(v.key for v in v_basis(n) if QGenerator(v.seq, _e(v.i)) in w)
    rebuilt: AmbientSum = frozenset()
    by_key = {v.key: v.ambient for v in v_basis(n)}
    for key in coords:
        rebuilt ^= by_key[key]
    if rebuilt != w:
        raise KernelMembershipError(f"degree-{n} element is outside the span of the kernel basis")
    return coords


def act_Q(l: int, w: AmbientSum, n: int | None = None) -> AmbientSum:
    """Ambient Dyer-Lashof action Q^l on a kernel element.

    Each generator Q^K(e_m) goes to the normal form of Q^l Q^K evaluated on
    e_m; both the input and the output are verified to lie in the kernel of
    their degree's transfer matrix.
    """
    if l < 0:
        raise ValueError("operation index must be nonnegative")
    if not w:
        return frozenset()
    if n is None:
        n = _degree_of(w)
    _check_kernel(w, n)
    out: set[QGenerator] = set()
    for g in w:
        for m_seq in normalize((l,) + g.seq):
            if eval_unstable(m_seq, g.base) is Resolution.GENERATOR:
                out ^= {QGenerator(m_seq, g.base)}
    result = frozenset(out)
    if result:
        _check_kernel(result, n + l)
    return result


def verify_ak_theorem(l: int, g: VGen) -> bool:
    """Compare Q^l(v^{I,i}) against its closed form in the v-basis.

    For (l, I) admissible the action is v^{(l,I),i} plus, for every
    admissible term (J, j) of Q^I Q^i and every admissible term J' of
    Q^l Q^J, the symbol v^{J',j}.  Also checks that every (J, j) has j > i.
    """
    if not is_admissible((l,) + g.seq):
        raise ValueError(f"({l}, {g.seq}) must be admissible")
    lhs = to_v_coords(act_Q(l, g.ambient, g.degree), g.degree + l)
    rhs: set[VKey] = set()
    top = v_symbol((l,) + g.seq, g.i)
    if top is not None:
        rhs ^= {top}
    for m_seq in normalize(g.seq + (g.i,)):
        j = m_seq[-1]
        if j <= g.i:
            return False
        for j_seq in normalize((l,) + m_seq[:-1]):
            sym = v_symbol(j_seq, j)
            if sym is not None:
                rhs ^= {sym}
    return lhs == frozenset(rhs)


def partial0(i: int, j: int) -> frozenset[VKey]:
    """Indecomposable image of b_{i,j} in the v-basis:

        sum_s C(j-s, s) v^{i+s, j-s}  +  sum_t C(i-t, t) v^{j+t, i-t},

    with v-symbols resolving to zero when admissible or of failing excess.
    Symmetric in i and j.
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    out: set[VKey] = set()
    for s in range(j + 1):
        if binom_mod2(j - s, s):
            sym = v_symbol((i + s,), j - s)
            if sym is not None:
                out ^= {sym}
    for t in range(i + 1):
        if binom_mod2(i - t, t):
            sym = v_symbol((j + t,), i - t)
            if sym is not None:
                out ^= {sym}
    return frozenset(out)


def partial_full(i: int, j: int, truncation: int | None = None) -> HopfElement:
    """Full homology-level image of b_{i,j} in the BO(1) model:

        sum_{a,b,s,t} C(b-s,s) C(a-t,t) Q^{i-a+s}(e_{b-s}) * chi(Q^{j-b+t}(e_{a-t})),

    a <= i, b <= j, s <= b, t <= a.  Lands in component 0.
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    trunc = truncation if truncation is not None else max(i + j, 1)
    if i + j > trunc:
        raise TruncationError(f"degree {i + j} exceeds truncation {trunc}")
    acc = HopfElement(Space.BO1, (), trunc)
    for a in range(i + 1):
        for b in range(j + 1):
            for s in range(b + 1):
                if not binom_mod2(b - s, s):
                    continue
                left = q_of_base(i - a + s, _e(b - s), trunc)
                if not left:
                    continue
                for t in range(a + 1):
                    if not binom_mod2(a - t, t):
                        continue
                    right = q_of_base(j - b + t, _e(a - t), trunc)
                    if right:
                        acc = acc + left * antipode(right)
    return acc


def indecomposable_ambient(keys: frozenset[VKey]) -> AmbientSum:
    """Expand a sum of v-keys into ambient generator coordinates."""
    out: AmbientSum = frozenset()
    for seq, i in keys:
        out ^= _ambient(seq, i)
    return out


@cache
def dpartial_matrix(n: int) -> GradedMatrix:
    """The second boundary map on indecomposables in degree n.

    Columns over q_generators(BO2, n), rows over v_basis(n).  The column of
    Q^I(b_{i,j}) starts from the ambient expansion of partial0(i, j) and
    applies the ambient action entrywise for I, then reads off v-coordinates.
    """
    if n < 1:
        raise ValueError("degrees start at 1")
    domain = q_generators(Space.BO2, n)
    codomain = v_basis(n)
    row_of = {v.key: r for r, v in enumerate(codomain)}
    rows = [0] * len(codomain)
    for c, g in enumerate(domain):
        i, j = g.base.index, g.base.degree - g.base.index
        w = indecomposable_ambient(partial0(i, j))
        deg = i + j
        for s in reversed(g.seq):
            w = act_Q(s, w, deg)
            deg += s
        for key in to_v_coords(w, n):
            rows[row_of[key]] |= 1 << c
    return GradedMatrix(domain, codomain, F2Matrix(rows, len(domain)))


def check_surjectivity(n: int) -> bool:
    """Degreewise surjectivity of the second boundary map, by direct rank."""
    return dpartial_matrix(n).rank() == len(v_basis(n))


@dataclass(frozen=True)
class DegreeRank:
    """One degree of the rank table; rk fields are None when the
    surjectivity flag (in this or an earlier degree) failed."""

    degree: int
    dim_qh_qbo2: int
    dim_qh_mto1: int
    surjective: bool
    rk_qh: int | None
    rk_h: int | None


@dataclass(frozen=True)
class RankTable:
    max_degree: int
    rows: tuple[DegreeRank, ...] = field(default=())

    def qh_row(self) -> list[int | None]:
        return [r.rk_qh for r in self.rows]

    def h_row(self) -> list[int | None]:
        return [r.rk_h for r in self.rows]

    def all_surjective(self) -> bool:
        return all(r.surjective for r in self.rows)


def rank_table(max_degree: int) -> RankTable:
    """Generator counts and graded dimensions for Omega_0^oo MTO(2).

    Per degree: the two intermediate generator counts, the surjectivity
    flag, and (when every flag up to that degree holds) the generator count
    and the dimension of the free commutative algebra they span.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    counts: dict[int, int] = {}
    rows = []
    dims_known = True
    for n in range(1, max_degree + 1):
        dom = len(q_generators(Space.BO2, n))
        cod = len(v_basis(n))
        ok = check_surjectivity(n)
        dims_known = dims_known and ok
        rk_qh = dom - cod if ok else None
        if dims_known:
            counts[n] = dom - cod
            rk_h = free_commutative_dims(counts, n)[n]
        else:
            rk_h = None
        rows.append(DegreeRank(n, dom, cod, ok, rk_qh, rk_h))
    return RankTable(max_degree, tuple(rows))
