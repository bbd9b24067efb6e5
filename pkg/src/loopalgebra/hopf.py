"""Truncated Hopf-algebra models of H_*(Q(Y+); F_2) for Y a point or BO(1).

Elements are mod-2 sets of monomials; a monomial is a sorted tuple of
polynomial generators together with an explicit pi_0 component label.  The
label of a product of generators defaults to the "natural" one (each
operation doubles the component, base classes start in component 1), and
any difference from the natural label is a translation by a component
class [n].

The structure maps are the Pontrjagin product, the coproduct determined by

    psi([n])      = [n] (x) [n]
    psi(e_m)      = sum_{p+q=m} e_p (x) e_q            (e_0 = [1])
    psi(Q^s y)    = sum_{a+b=s} (Q^a (x) Q^b) psi(y),

and the antipode chi, the algebra map with m(chi (x) id)psi = unit.counit,
computed by induction on degree.  Applying Q^s to a monomial uses the
Cartan formula across factors, including the translation part, where
Q^a([n]) is expanded recursively through [n] = [1] * [n-1].

Exceeding the truncation degree raises; nothing is ever dropped silently.
The BO(2) model supports products and generator enumeration only -- its
diagonal is not needed anywhere downstream and is not defined here.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, NamedTuple

from .dyer_lashof import OpSequence, excess, normalize
from .loop_homology import BaseClass, QGenerator, Space

DEFAULT_TRUNCATION = 12


class TruncationError(Exception):
    """A product or operation left the truncated degree range."""


class Monomial(NamedTuple):
    gens: tuple[QGenerator, ...]  # sorted, with multiplicity
    component: int

    @property
    def degree(self) -> int:
        return sum(g.degree for g in self.gens)

    @property
    def natural_component(self) -> int:
        return sum(2 ** len(g.seq) for g in self.gens)

    @property
    def name(self) -> str:
        parts = [g.name for g in self.gens]
        shift = self.component - self.natural_component
        if shift or not parts:
            parts.append(f"[{shift}]" if parts else f"[{self.component}]")
        return " * ".join(parts)


def _mono(gens: Iterable[QGenerator], component: int) -> Monomial:
    return Monomial(tuple(sorted(gens)), component)


def _xor(items: Iterable) -> frozenset:
    parity: dict = {}
    for it in items:
        parity[it] = parity.get(it, 0) ^ 1
    return frozenset(k for k, v in parity.items() if v)


def _mul_mono(a: Monomial, b: Monomial) -> Monomial:
    return _mono(a.gens + b.gens, a.component + b.component)


def _mul_sets(a: frozenset[Monomial], b: frozenset[Monomial]) -> frozenset[Monomial]:
    return _xor(_mul_mono(x, y) for x in a for y in b)


class HopfElement:
    """A mod-2 sum of monomials in one model, with a truncation degree."""

    __slots__ = ("space", "terms", "truncation")

    def __init__(self, space: Space, terms: Iterable[Monomial] = (), truncation: int = DEFAULT_TRUNCATION):
        self.space = space
        self.terms = frozenset(terms)
        self.truncation = truncation
        for m in self.terms:
            if m.degree > truncation:
                raise TruncationError(f"monomial of degree {m.degree} exceeds truncation {truncation}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HopfElement)
            and self.space is other.space
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.space, self.terms))

    def __add__(self, other: "HopfElement") -> "HopfElement":
        self._check_compatible(other)
        return HopfElement(self.space, self.terms ^ other.terms, self.truncation)

    def __mul__(self, other: "HopfElement") -> "HopfElement":
        self._check_compatible(other)
        return HopfElement(self.space, _mul_sets(self.terms, other.terms), self.truncation)

    def _check_compatible(self, other: "HopfElement") -> None:
        if not isinstance(other, HopfElement):
            raise TypeError(f"expected HopfElement, got {type(other).__name__}")
        if self.space is not other.space or self.truncation != other.truncation:
            raise ValueError("operands need the same model and truncation degree")

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(m.name for m in sorted(self.terms))


class TensorElement:
    """A mod-2 sum of monomial (x) monomial pairs (the coproduct's target)."""

    __slots__ = ("space", "pairs", "truncation")

    def __init__(self, space: Space, pairs: Iterable[tuple[Monomial, Monomial]] = (), truncation: int = DEFAULT_TRUNCATION):
        self.space = space
        self.pairs = frozenset(pairs)
        self.truncation = truncation

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.space is other.space
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.space, self.pairs))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.space, self.pairs ^ other.pairs, self.truncation)

    def swap(self) -> "TensorElement":
        return TensorElement(self.space, ((v, u) for u, v in self.pairs), self.truncation)

    def multiply_out(self) -> HopfElement:
        return HopfElement(self.space, _xor(_mul_mono(u, v) for u, v in self.pairs), self.truncation)


def unit(space: Space, n: int = 0, truncation: int = DEFAULT_TRUNCATION) -> HopfElement:
    """The component class [n]."""
    return HopfElement(space, {_mono((), n)}, truncation)


def from_base(x: BaseClass, truncation: int = DEFAULT_TRUNCATION) -> HopfElement:
    """A base-space class as an element (degree 0 classes are [1])."""
    if x.degree == 0:
        return unit(x.space, 1, truncation)
    return HopfElement(x.space, {_mono((QGenerator((), x),), 1)}, truncation)


def q_of_base(s: int, x: BaseClass, truncation: int = DEFAULT_TRUNCATION) -> HopfElement:
    """Q^s applied to a base class: zero, a square, or a new generator."""
    if s < 0:
        raise ValueError("operation index must be nonnegative")
    if s + x.degree > truncation:
        raise TruncationError(f"degree {s + x.degree} exceeds truncation {truncation}")
    if s < x.degree:
        return HopfElement(x.space, (), truncation)
    if s == x.degree:
        e = from_base(x, truncation)
        return e * e
    return HopfElement(x.space, {_mono((QGenerator((s,), x),), 2)}, truncation)


def counit(elem: HopfElement) -> int:
    """Augmentation: kills positive degree, sends every [n] to 1."""
    return sum(1 for m in elem.terms if not m.gens) & 1


def _resolve_power(seq: OpSequence, base: BaseClass) -> tuple[int, QGenerator | None] | None:
    """Value of an admissible Q^seq on a base class, as a 2^k-th power.

    None means zero.  Otherwise returns (k, g) with the value g^(2^k); g is
    None exactly when the value is a pure component class [2^k] (degree-0
    base, sequence consumed by repeated squaring).
    """
    if excess(seq) < base.degree:
        return None
    k = 0
    cur = seq
    while cur and excess(cur) == base.degree:
        cur = cur[1:]
        k += 1
    if not cur and base.degree == 0:
        return k, None
    return k, QGenerator(cur, base)


def _q_on_gen(a: int, g: QGenerator) -> frozenset[Monomial]:
    out = []
    for m_seq in normalize((a,) + g.seq):
        resolved = _resolve_power(m_seq, g.base)
        if resolved is None:
            continue
        k, gen = resolved
        comp = 2 ** len(m_seq)
        out.append(_mono((gen,) * (1 << k) if gen is not None else (), comp))
    return _xor(out)


@cache
def _q_on_unit(space: Space, c: int, n: int) -> frozenset[Monomial]:
    """Q^c([n]) for n >= 0, via [n] = [1] * [n-1] and the Cartan formula."""
    if n < 0:
        raise ValueError("operations on negative component classes are never needed")
    if n == 0:
        return frozenset({_mono((), 0)}) if c == 0 else frozenset()
    point = BaseClass(space, 0, 0)
    acc: list[Monomial] = []
    for a in range(c + 1):
        if a == 0:
            qa = frozenset({_mono((), 2)})
        else:
            qa = frozenset({_mono((QGenerator((a,), point),), 2)})
        acc.extend(_mul_mono(x, y) for x in qa for y in _q_on_unit(space, c - a, n - 1))
    return _xor(acc)


def _q_on_monomial(space: Space, s: int, m: Monomial) -> frozenset[Monomial]:
    """Cartan expansion of Q^s across the factors and the translation part."""
    shift = m.component - m.natural_component
    acc: list[Monomial] = []

    def distribute(idx: int, rem: int, cur: Monomial) -> None:
        if idx == len(m.gens):
            acc.extend(_mul_mono(cur, u) for u in _q_on_unit(space, rem, shift))
            return
        for a in range(rem + 1):
            for piece in _q_on_gen(a, m.gens[idx]):
                distribute(idx + 1, rem - a, _mul_mono(cur, piece))

    distribute(0, s, _mono((), 0))
    return _xor(acc)


def q_apply(s: int, elem: HopfElement) -> HopfElement:
    """Q^s on an element; every monomial must stay within the truncation."""
    if s < 0:
        raise ValueError("operation index must be nonnegative")
    for m in elem.terms:
        if m.degree + s > elem.truncation:
            raise TruncationError(f"degree {m.degree + s} exceeds truncation {elem.truncation}")
    return HopfElement(
        elem.space,
        _xor(out for m in elem.terms for out in _q_on_monomial(elem.space, s, m)),
        elem.truncation,
    )


def _psi_base(x: BaseClass) -> frozenset[tuple[Monomial, Monomial]]:
    if x.space is Space.POINT or x.degree == 0:
        one = _mono((), 1)
        return frozenset({(one, one)})
    if x.space is not Space.BO1:
        raise ValueError("the coproduct is defined for the point and BO(1) models only")
    pairs = []
    for p in range(x.degree + 1):
        left = from_base(BaseClass(x.space, p, 0), x.degree)
        right = from_base(BaseClass(x.space, x.degree - p, 0), x.degree)
        pairs.extend((u, v) for u in left.terms for v in right.terms)
    return _xor(pairs)


@cache
def _psi_gen(g: QGenerator) -> frozenset[tuple[Monomial, Monomial]]:
    if not g.seq:
        return _psi_base(g.base)
    if len(g.seq) == 1:
        inner = _psi_base(g.base)
    else:
        inner = _psi_gen(QGenerator(g.seq[1:], g.base))
    space = g.base.space
    s1 = g.seq[0]
    acc = []
    for u, v in inner:
        for a in range(s1 + 1):
            left = _q_on_monomial(space, a, u)
            right = _q_on_monomial(space, s1 - a, v)
            acc.extend((x, y) for x in left for y in right)
    return _xor(acc)


def _psi_monomial(m: Monomial, space: Space) -> frozenset[tuple[Monomial, Monomial]]:
    shift = m.component - m.natural_component
    t = _mono((), shift)
    pairs: frozenset[tuple[Monomial, Monomial]] = frozenset({(t, t)})
    for g in m.gens:
        pg = _psi_gen(g)
        pairs = _xor((_mul_mono(u1, u2), _mul_mono(v1, v2)) for u1, v1 in pairs for u2, v2 in pg)
    return pairs


def coproduct(elem: HopfElement) -> TensorElement:
    """The diagonal; both tensor legs keep the component of the input."""
    return TensorElement(
        elem.space,
        _xor(p for m in elem.terms for p in _psi_monomial(m, elem.space)),
        elem.truncation,
    )


@cache
def _chi_gen(g: QGenerator) -> frozenset[Monomial]:
    comp = 2 ** len(g.seq)
    top = _mono((g,), comp)
    top_unit = _mono((), comp)
    acc: list[Monomial] = []
    saw_top = False
    for u, v in _psi_gen(g):
        if u == top:
            # counit sanity: the full-weight term appears exactly once
            assert v == top_unit and not saw_top
            saw_top = True
            continue
        acc.extend(_mul_mono(c, v) for c in _chi_monomial(u))
    assert saw_top
    return _xor(_mul_mono(m, _mono((), -comp)) for m in _xor(acc))


def _chi_monomial(m: Monomial) -> frozenset[Monomial]:
    shift = m.component - m.natural_component
    out: frozenset[Monomial] = frozenset({_mono((), -shift)})
    for g in m.gens:
        out = _mul_sets(out, _chi_gen(g))
    return out


def antipode(elem: HopfElement) -> HopfElement:
    """The canonical (anti-)automorphism chi; [n] goes to [-n]."""
    return HopfElement(
        elem.space,
        _xor(m for x in elem.terms for m in _chi_monomial(x)),
        elem.truncation,
    )


def project_indecomposables(elem: HopfElement) -> frozenset[QGenerator]:
    """Image in the indecomposable quotient, as a set of generators.

    Keeps exactly the single-factor monomials; anything with two or more
    positive-degree factors (squares included) dies.  Input must be
    homogeneous of positive degree.
    """
    if not elem.terms:
        return frozenset()
    degs = elem.degrees()
    if len(degs) != 1 or min(degs) <= 0:
        raise ValueError("projection needs a homogeneous element of positive degree")
    return _xor(m.gens[0] for m in elem.terms if len(m.gens) == 1)
