"""Graded bases for H_*(Q_0(Y+); F_2), Y a point, BO(1) or BO(2).

The homology of Q_0(Y+) is polynomial on classes Q^I(x), with x running
over a homogeneous basis of H_*(Y), I admissible and e(I) > |x|.  This
module enumerates those generators in a fixed canonical order, resolves
single applications Q^I(x) through the instability rules (zero below the
degree, a square at the degree), and carries the dual-pairing check that
the chosen BO(2) basis really is a basis.
"""

from __future__ import annotations

import enum
from functools import cache
from typing import NamedTuple

from .f2 import F2Matrix, binom_mod2
from .dyer_lashof import OpSequence, excess, is_admissible


class Space(str, enum.Enum):
    """Base space tags; values double as the CLI spellings."""

    POINT = "s0"
    BO1 = "bo1"
    BO2 = "bo2"


class BaseClass(NamedTuple):
    """A basis class of H_*(Y): [1], e_i, or b_{i,j} (i <= j, i+j = degree)."""

    space: Space
    degree: int
    index: int

    @property
    def name(self) -> str:
        if self.space is Space.POINT:
            return "[1]"
        if self.space is Space.BO1:
            return f"e_{self.degree}"
        return f"b_{{{self.index},{self.degree - self.index}}}"


class QGenerator(NamedTuple):
    """A polynomial generator Q^I(x) of H_*(Q_0(Y+)), I admissible, e(I) > |x|.

    The translation bringing it to the zero component is implicit: one power
    of 2 per operation, plus one more when the base class sits in component 1
    (BO(1) and BO(2) classes do).
    """

    seq: OpSequence
    base: BaseClass

    @property
    def degree(self) -> int:
        return sum(self.seq) + self.base.degree

    @property
    def translation_power(self) -> int:
        extra = 0 if self.base.space is Space.POINT else 1
        return 2 ** (len(self.seq) + extra)

    @property
    def name(self) -> str:
        ops = "".join(f"Q^{s} " for s in self.seq).rstrip()
        return f"{ops}({self.base.name})" if ops else self.base.name


class Resolution(enum.Enum):
    """Outcome of applying an admissible operation to a base class."""

    ZERO = "zero"
    SQUARE = "square"
    GENERATOR = "generator"


def dim_base(space: Space, n: int) -> int:
    if n < 0:
        return 0
    if space is Space.POINT:
        return 1 if n == 0 else 0
    if space is Space.BO1:
        return 1
    return n // 2 + 1


def base_basis(space: Space, n: int) -> list[BaseClass]:
    """Canonical basis of H_n(Y), ordered by index."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return [BaseClass(space, n, i) for i in range(dim_base(space, n))]


@cache
def _admissible_tails(d: int, lower: int) -> tuple[OpSequence, ...]:
    if d == 0:
        return ((),)
    out = []
    for s in range(max(lower, 1), d + 1):
        for tail in _admissible_tails(d - s, (s + 1) // 2):
            out.append((s,) + tail)
    return tuple(out)


def admissible_sequences(d: int, excess_floor: int) -> list[OpSequence]:
    """All admissible I with degree d and e(I) > excess_floor (strict).

    The empty sequence (with excess +inf) is the sole degree-0 answer.
    """
    if d == 0:
        return [()]
    out = []
    # e(I) = 2 s_1 - d, so the leading entry must exceed (d + floor)/2.
    for s1 in range((d + excess_floor) // 2 + 1, d + 1):
        for tail in _admissible_tails(d - s1, (s1 + 1) // 2):
            out.append((s1,) + tail)
    return out


@cache
def q_generators(space: Space, n: int) -> tuple[QGenerator, ...]:
    """Degree-n polynomial generators of H_*(Q_0(Y+)), canonically ordered.

    Order: base degree ascending, then base index, then I lexicographic.
    """
    if n < 1:
        raise ValueError("generator degrees start at 1")
    out = []
    for m in range(n + 1):
        for x in base_basis(space, m):
            for seq in sorted(admissible_sequences(n - m, m)):
                out.append(QGenerator(seq, x))
    return tuple(out)


def eval_unstable(seq: OpSequence, x: BaseClass) -> Resolution:
    """Classify Q^seq(x) for admissible seq.

    Zero when e(seq) < |x|, the square of a lower class when e(seq) = |x|,
    and a polynomial generator otherwise.  For admissible sequences the
    excess test at the top entry settles every intermediate application,
    because suffix excesses only grow to the right.
    """
    if not is_admissible(seq):
        raise ValueError(f"{seq} is not admissible")
    e = excess(seq)
    if e < x.degree:
        return Resolution.ZERO
    if e == x.degree:
        return Resolution.SQUARE
    return Resolution.GENERATOR


def verify_bo2_basis(n: int) -> bool:
    """Check that {b_{i,j} : i <= j, i+j = n} is a basis of H_n(BO(2)).

    b_{i,j} is the image of e_i x e_j under the map classifying the product
    of two line bundles; pairing against the monomial basis w_1^a w_2^b of
    cohomology gives <b_{i,j}, w_1^a w_2^b> = C(a, i-b) mod 2.  True iff the
    pairing matrix has full rank n//2 + 1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    pairs = [(i, n - i) for i in range(n // 2 + 1)]
    monomials = [(n - 2 * b, b) for b in range(n // 2 + 1)]
    rows = []
    for i, _j in pairs:
        bits = 0
        for c, (a, b) in enumerate(monomials):
            if 0 <= i - b <= a and binom_mod2(a, i - b):
                bits |= 1 << c
        rows.append(bits)
    m = F2Matrix(rows, len(monomials))
    return m.rank() == n // 2 + 1


def sq_lower(s: int, b: int) -> frozenset[BaseClass]:
    """Lower Steenrod operation on BO(1) classes: Sq^s(e_b) = C(b-s, s) e_{b-s}."""
    if s < 0 or b < 0:
        raise ValueError("indices must be nonnegative")
    if s > b or not binom_mod2(b - s, s):
        return frozenset()
    return frozenset({BaseClass(Space.BO1, b - s, 0)})
