"""Verification suites behind the `verify` command.

Each check returns a CheckResult with a minimal witness on failure.  The
rewriting checks use a single-step worklist normalizer, independent of the
recursive production path, so the two can disagree and be caught.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import boundary_maps, hopf, loop_homology
from .dyer_lashof import OpSequence, adem_pair, excess, is_admissible, normalize
from .f2 import F2Matrix, free_commutative_dims
from .loop_homology import Space, q_generators, verify_bo2_basis
from .hopf import HopfElement, Monomial, coproduct, antipode, counit, unit, _mono, _psi_monomial, _chi_monomial, _mul_mono, _xor

TABLE_DEGREES = 6
RK_QH_EXPECTED = (1, 2, 3, 3, 5, 6)
RK_H_EXPECTED = (1, 3, 6, 12, 23, 45)


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  [{self.witness}]" if self.witness and not self.passed else ""
        return f"{status}  {self.name} ({self.scope}){tail}"


# ---------------------------------------------------------------------------
# independent single-step rewriter (oracle for the recursive normalizer)

def _rewrite_positions(seq: OpSequence) -> list[int]:
    return [k for k in range(len(seq) - 1) if seq[k] > 2 * seq[k + 1]]


def normalize_by_steps(seq: OpSequence, leftmost: bool) -> frozenset[OpSequence]:
    """Worklist normalization rewriting one pair per term per pass."""
    cur = frozenset({tuple(seq)})
    while True:
        if all(is_admissible(m) for m in cur):
            return cur
        nxt: set[OpSequence] = set()
        for m in cur:
            pos = _rewrite_positions(m)
            if not pos:
                nxt ^= {m}
                continue
            p = pos[0] if leftmost else pos[-1]
            for pair in adem_pair(m[p], m[p + 1]):
                nxt ^= {m[:p] + pair + m[p + 2:]}
        cur = frozenset(nxt)


def _all_sequences(max_degree: int, max_length: int):
    for length in range(max_length + 1):
        if length == 0:
            yield ()
            continue
        for total in range(max_degree + 1):
            for cuts in itertools.combinations(range(total + length - 1), length - 1):
                seq = []
                prev = -1
                for c in cuts + (total + length - 1,):
                    seq.append(c - prev - 1)
                    prev = c
                yield tuple(seq)


# ---------------------------------------------------------------------------
# adem suite

def adem_suite(max_degree: int = 16, max_length: int = 4) -> list[CheckResult]:
    scope = f"degree<={max_degree}, length<={max_length}"
    pair_fail = norm_fail = confl_fail = ""
    for r in range(1, max_degree + 1):
        for s in range((r - 1) // 2 + 1):
            if r + s > max_degree:
                continue
            for a, b in adem_pair(r, s):
                if a + b != r + s or b <= s or a - b > s or not is_admissible((a, b)):
                    pair_fail = pair_fail or f"({r},{s}) -> ({a},{b})"
    for seq in _all_sequences(max_degree, max_length):
        nf = normalize(seq)
        for term in nf:
            if (
                not is_admissible(term)
                or sum(term) != sum(seq)
                or len(term) != len(seq)
                or excess(term) > excess(seq)
                or normalize(term) != frozenset({term})
            ):
                norm_fail = norm_fail or f"{seq} -> {term}"
        if normalize_by_steps(seq, True) != nf or normalize_by_steps(seq, False) != nf:
            confl_fail = confl_fail or f"{seq}"
    return [
        CheckResult("adem.pair_structure", scope, not pair_fail, pair_fail),
        CheckResult("adem.normal_forms", scope, not norm_fail, norm_fail),
        CheckResult("adem.rewrite_order_agreement", scope, not confl_fail, confl_fail),
    ]


# ---------------------------------------------------------------------------
# hopf suite

def _bo1_monomials(max_degree: int) -> list[Monomial]:
    gens: list = []
    for n in range(1, max_degree + 1):
        gens.extend(q_generators(Space.BO1, n))
    monos: list[Monomial] = []

    def build(idx: int, left: int, chosen: tuple) -> None:
        if chosen:
            monos.append(_mono(chosen, sum(2 ** len(g.seq) for g in chosen)))
        for k in range(idx, len(gens)):
            if gens[k].degree <= left:
                build(k, left - gens[k].degree, chosen + (gens[k],))

    build(0, max_degree, ())
    return monos


def _psi_triple(mono: Monomial, left_first: bool):
    pairs = _psi_monomial(mono, Space.BO1)
    if left_first:
        return _xor((a, b, v) for u, v in pairs for a, b in _psi_monomial(u, Space.BO1))
    return _xor((u, a, b) for u, v in pairs for a, b in _psi_monomial(v, Space.BO1))


def hopf_suite(max_degree: int = 8, bo2_degree: int = 24, seed: int = 7) -> list[CheckResult]:
    scope = f"monomials of degree<={max_degree}"
    monos = _bo1_monomials(max_degree)
    coassoc_fail = cocomm_fail = anti_fail = ""
    for m in monos:
        pairs = _psi_monomial(m, Space.BO1)
        if pairs != _xor((v, u) for u, v in pairs):
            cocomm_fail = cocomm_fail or m.name
        if _psi_triple(m, True) != _psi_triple(m, False):
            coassoc_fail = coassoc_fail or m.name
        convolved = _xor(
            _mul_mono(c, v) for u, v in pairs for c in _chi_monomial(u)
        )
        if convolved:
            anti_fail = anti_fail or m.name
    # bialgebra axiom on random products of elements
    rng = random.Random(seed)
    small = [m for m in monos if m.degree <= max_degree // 2]
    bialg_fail = ""
    for _ in range(25):
        a = HopfElement(Space.BO1, rng.sample(small, k=min(2, len(small))), max_degree)
        b = HopfElement(Space.BO1, rng.sample(small, k=min(2, len(small))), max_degree)
        lhs = coproduct(a * b)
        rhs_pairs = _xor(
            (_mul_mono(u1, u2), _mul_mono(v1, v2))
            for u1, v1 in coproduct(a).pairs
            for u2, v2 in coproduct(b).pairs
        )
        if lhs.pairs != rhs_pairs:
            bialg_fail = bialg_fail or repr(a * b)
    # duality anchor: the diagonal of e_m has every coefficient 1
    dual_fail = ""
    for m in range(1, max_degree + 1):
        em = hopf.from_base(loop_homology.BaseClass(Space.BO1, m, 0), max_degree)
        expected = _xor(
            (u, v)
            for p in range(m + 1)
            for u in hopf.from_base(loop_homology.BaseClass(Space.BO1, p, 0), max_degree).terms
            for v in hopf.from_base(loop_homology.BaseClass(Space.BO1, m - p, 0), max_degree).terms
        )
        if coproduct(em).pairs != expected:
            dual_fail = dual_fail or f"e_{m}"
    grouplike_ok = all(
        coproduct(unit(Space.BO1, n, 4)).pairs == frozenset({(_mono((), n), _mono((), n))})
        and antipode(unit(Space.BO1, n, 4)) == unit(Space.BO1, -n, 4)
        and counit(unit(Space.BO1, n, 4)) == 1
        for n in range(-3, 4)
    )
    bo2_fail = ""
    for n in range(bo2_degree + 1):
        if not verify_bo2_basis(n):
            bo2_fail = bo2_fail or f"degree {n}"
    return [
        CheckResult("hopf.coassociative", scope, not coassoc_fail, coassoc_fail),
        CheckResult("hopf.cocommutative", scope, not cocomm_fail, cocomm_fail),
        CheckResult("hopf.antipode_identity", scope, not anti_fail, anti_fail),
        CheckResult("hopf.bialgebra_axiom", "25 random products", not bialg_fail, bialg_fail),
        CheckResult("hopf.diagonal_duality", f"e_m, m<={max_degree}", not dual_fail, dual_fail),
        CheckResult("hopf.grouplikes", "[n], |n|<=3", grouplike_ok),
        CheckResult("hopf.bo2_pairing_basis", f"degree<={bo2_degree}", not bo2_fail, bo2_fail),
    ]


# ---------------------------------------------------------------------------
# mto1 suite

def mto1_suite(
    max_degree: int = 20,
    split_degree: int = 24,
    ak_degree: int = 12,
    readoff_degree: int = 14,
    seed: int = 11,
) -> list[CheckResult]:
    surj_fail = kernel_fail = ""
    for n in range(1, max_degree + 1):
        gm = boundary_maps.dbar_matrix(n)
        if gm.rank() != len(gm.codomain):
            surj_fail = surj_fail or f"degree {n}: rank {gm.rank()} != {len(gm.codomain)}"
        basis = boundary_maps.v_basis(n)
        if len(basis) != gm.kernel_dim():
            kernel_fail = kernel_fail or f"degree {n}: {len(basis)} != {gm.kernel_dim()}"
        col_of = {g: c for c, g in enumerate(gm.domain)}
        vecs = []
        for v in basis:
            bits = 0
            for g in v.ambient:
                bits |= 1 << col_of[g]
            if gm.matrix.apply(bits):
                kernel_fail = kernel_fail or f"degree {n}: {v.name} not in kernel"
            vecs.append(bits)
        if F2Matrix(vecs, len(gm.domain)).rank() != len(basis):
            kernel_fail = kernel_fail or f"degree {n}: ambient vectors dependent"
    split_fail = ""
    for n in range(1, split_degree + 1):
        nb = len(q_generators(Space.BO1, n))
        np_ = len(q_generators(Space.POINT, n))
        nv = len(boundary_maps.v_basis(n))
        if nb != np_ + nv:
            split_fail = split_fail or f"degree {n}: {nb} != {np_} + {nv}"
    rng = random.Random(seed)
    readoff_fail = ""
    for n in range(1, readoff_degree + 1):
        basis = boundary_maps.v_basis(n)
        for _ in range(6):
            chosen = [v for v in basis if rng.random() < 0.5]
            w: frozenset = frozenset()
            for v in chosen:
                w ^= v.ambient
            coords = boundary_maps.to_v_coords(w, n)
            if coords != frozenset(v.key for v in chosen):
                readoff_fail = readoff_fail or f"degree {n}"
    ak_fail = ""
    ak_cases = 0
    for n in range(1, ak_degree):
        for v in boundary_maps.v_basis(n):
            for l in range(1, ak_degree - n + 1):
                if is_admissible((l,) + v.seq):
                    ak_cases += 1
                    if not boundary_maps.verify_ak_theorem(l, v):
                        ak_fail = ak_fail or f"Q^{l} on {v.name}"
    return [
        CheckResult("mto1.transfer_surjective", f"degree<={max_degree}", not surj_fail, surj_fail),
        CheckResult("mto1.kernel_basis", f"degree<={max_degree}", not kernel_fail, kernel_fail),
        CheckResult("mto1.splitting_counts", f"degree<={split_degree}", not split_fail, split_fail),
        CheckResult("mto1.coordinate_readoff", f"degree<={readoff_degree}", not readoff_fail, readoff_fail),
        CheckResult("mto1.operation_action", f"{ak_cases} cases, degree<={ak_degree}", not ak_fail, ak_fail),
    ]


# ---------------------------------------------------------------------------
# mto2 suite

def mto2_suite(
    max_degree: int = 12,
    coherence_degree: int = 10,
    index_cap: int = 15,
    table_degree: int = TABLE_DEGREES,
    kunneth_degree: int = 10,
) -> list[CheckResult]:
    surj_fail = ""
    for n in range(1, max_degree + 1):
        if not boundary_maps.check_surjectivity(n):
            gm = boundary_maps.dpartial_matrix(n)
            surj_fail = surj_fail or f"degree {n}: rank {gm.rank()} != {len(gm.codomain)}"
    sym_fail = ""
    for i in range(index_cap + 1):
        for j in range(i, index_cap + 1):
            if boundary_maps.partial0(i, j) != boundary_maps.partial0(j, i):
                sym_fail = sym_fail or f"({i},{j})"
    edge_fail = ""
    for i in range(1, index_cap + 1):
        if boundary_maps.partial0(0, i) != frozenset({((i,), 0)}):
            edge_fail = edge_fail or f"(0,{i})"
    coh_fail = ""
    for i in range(coherence_degree + 1):
        for j in range(i, coherence_degree + 1 - i):
            if i + j == 0:
                continue
            full = boundary_maps.partial_full(i, j)
            projected = hopf.project_indecomposables(full) if full else frozenset()
            expected = boundary_maps.indecomposable_ambient(boundary_maps.partial0(i, j))
            if projected != expected:
                coh_fail = coh_fail or f"({i},{j})"
    table = boundary_maps.rank_table(table_degree)
    table_ok = (
        tuple(table.qh_row()) == RK_QH_EXPECTED[:table_degree]
        and tuple(table.h_row()) == RK_H_EXPECTED[:table_degree]
        and table.all_surjective()
    )
    table_fail = "" if table_ok else f"got qh={table.qh_row()} h={table.h_row()}"
    kunneth_fail = ""
    qbo2 = {n: len(q_generators(Space.BO2, n)) for n in range(1, kunneth_degree + 1)}
    mto1 = {n: len(boundary_maps.v_basis(n)) for n in range(1, kunneth_degree + 1)}
    mto2 = {n: qbo2[n] - mto1[n] for n in range(1, kunneth_degree + 1)}
    h_qbo2 = free_commutative_dims(qbo2, kunneth_degree)
    h_mto1 = free_commutative_dims(mto1, kunneth_degree)
    h_mto2 = free_commutative_dims(mto2, kunneth_degree)
    for n in range(kunneth_degree + 1):
        if h_qbo2[n] != sum(h_mto2[p] * h_mto1[n - p] for p in range(n + 1)):
            kunneth_fail = kunneth_fail or f"degree {n}"
    return [
        CheckResult("mto2.partial_surjective", f"degree<={max_degree}", not surj_fail, surj_fail),
        CheckResult("mto2.partial0_symmetry", f"i,j<={index_cap}", not sym_fail, sym_fail),
        CheckResult("mto2.partial0_single_term", f"i<={index_cap}", not edge_fail, edge_fail),
        CheckResult("mto2.formula_coherence", f"i+j<={coherence_degree}", not coh_fail, coh_fail),
        CheckResult("mto2.rank_table", f"degree<={table_degree}", table_ok, table_fail),
        CheckResult("mto2.split_dimension_count", f"degree<={kunneth_degree}", not kunneth_fail, kunneth_fail),
    ]


SUITES = {
    "adem": adem_suite,
    "hopf": hopf_suite,
    "mto1": mto1_suite,
    "mto2": mto2_suite,
}


def run_suite(name: str, max_degree: int | None = None) -> list[CheckResult]:
    """Run one named suite (or 'all'); max_degree overrides the primary cap."""
    if name == "all":
        out = []
        for key in ("adem", "hopf", "mto1", "mto2"):
            out.extend(run_suite(key, max_degree))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite: {name}")
    if max_degree is None:
        return SUITES[name]()
    return SUITES[name](max_degree=max_degree)
