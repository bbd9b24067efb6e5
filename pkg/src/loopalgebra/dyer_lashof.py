"""The mod-2 Dyer-Lashof algebra as a rewriting system.

Operation monomials Q^I = Q^{s_1} ... Q^{s_k} are stored as tuples of
nonnegative ints.  A sequence is admissible when s_i <= 2 s_{i+1} for all i;
the admissible monomials form a basis, and an inadmissible pair rewrites by
the Adem relation

    Q^r Q^s = sum_i C(i-s-1, 2i-r) Q^{r+s-i} Q^i      (r > 2s, mod 2),

whose surviving terms all have last entry i > s and excess r+s-2i <= s.
Normal forms are computed by recursive right-to-left elimination, memoised
on the sequence.  Formal mod-2 sums of sequences are frozensets; symmetric
difference is addition.
"""

from __future__ import annotations

import math
from functools import cache

OpSequence = tuple[int, ...]
F2SeqSum = frozenset[OpSequence]

# Failsafe only: the (length, head-entry) measure of the recursion strictly
# decreases, but a runaway expansion should abort rather than spin.
REWRITE_BUDGET = 1_000_000

_rewrite_steps = 0


def degree(seq: OpSequence) -> int:
    """Sum of the entries."""
    return sum(seq)


def length(seq: OpSequence) -> int:
    return len(seq)


def excess(seq: OpSequence):
    """s_1 minus the sum of the rest; +inf for the empty sequence."""
    return math.inf if not seq else seq[0] - sum(seq[1:])


def is_admissible(seq: OpSequence) -> bool:
    return all(seq[k] <= 2 * seq[k + 1] for k in range(len(seq) - 1))


def _check_entries(seq: OpSequence) -> OpSequence:
    seq = tuple(seq)
    if any(not isinstance(s, int) or s < 0 for s in seq):
        raise ValueError(f"operation indices must be nonnegative integers: {seq}")
    return seq


def adem_pair(r: int, s: int) -> frozenset[tuple[int, int]]:
    """Adem expansion of the inadmissible pair Q^r Q^s, r > 2s.

    Admissible input is rejected: callers must not rewrite pairs that are
    already in normal form.
    """
    if r < 0 or s < 0:
        raise ValueError(f"indices must be nonnegative: ({r}, {s})")
    if r <= 2 * s:
        raise ValueError(f"({r}, {s}) is admissible; nothing to rewrite")
    global _rewrite_steps
    _rewrite_steps += 1
    if _rewrite_steps > REWRITE_BUDGET:
        raise RuntimeError("rewrite budget exceeded")
    out = set()
    # C(i-s-1, 2i-r) != 0 forces r/2 <= i <= r-s-1 (and i >= s+1).
    for i in range(max((r + 1) // 2, s + 1), r - s):
        if (i - s - 1) & (2 * i - r) == 2 * i - r:
            out.add((r + s - i, i))
    return frozenset(out)


@cache
def _prepend(s: int, tail: OpSequence) -> F2SeqSum:
    """Normal form of Q^s applied to an admissible monomial Q^tail."""
    if not tail or s <= 2 * tail[0]:
        return frozenset({(s,) + tail})
    acc: set[OpSequence] = set()
    for a, b in adem_pair(s, tail[0]):
        for mid in _prepend(b, tail[1:]):
            acc ^= _prepend(a, mid)
    return frozenset(acc)


@cache
def _normalize(seq: OpSequence) -> F2SeqSum:
    if is_admissible(seq):
        return frozenset({seq})
    acc: set[OpSequence] = set()
    for tail in _normalize(seq[1:]):
        acc ^= _prepend(seq[0], tail)
    return frozenset(acc)


def normalize(seq: OpSequence) -> F2SeqSum:
    """Expand Q^seq as a mod-2 sum of admissible monomials.

    Every term has the same degree and length as the input; excess never
    increases; admissible input comes back unchanged.  The empty frozenset
    is zero.
    """
    global _rewrite_steps
    _rewrite_steps = 0
    return _normalize(_check_entries(seq))


def compose_and_normalize(left: OpSequence, right: OpSequence) -> F2SeqSum:
    """Normal form of the concatenation Q^left Q^right."""
    return normalize(tuple(left) + tuple(right))
