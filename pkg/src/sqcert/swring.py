"""The graded polynomial ring Z/2[w_1, ..., w_k] and its Steenrod action.

deg w_i = i.  A monomial is an exponent tuple ``(e_1, ..., e_k)``; a
polynomial is a mod-2 set of monomials (:class:`WPoly`).  The squares
act on generators by the Wu formula

    Sq^i(w_j) = sum_t  C(j-i+t-1, t) w_{i-t} w_{j+t}     (0 < i < j)

with w_0 = 1 and the truncation w_m = 0 for m > k, and extend to
products by the Cartan formula.  i = 0 is the identity, i = j squares,
i > j kills (instability), so no binomial with a negative upper
argument is ever evaluated.

Monomial bases are ordered graded-then-lexicographically with larger
e_1 first; the order is part of the serialization contract and is never
changed.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable

from .gf2 import BitVector
from .steenrod import SqWord, binom_mod2

Monomial = tuple[int, ...]

_Terms = frozenset  # frozenset[Monomial], internal representation
_EMPTY: _Terms = frozenset()


def mono_degree(mono: Monomial) -> int:
    """Weighted degree sum i * e_i (variables are 1-indexed)."""
    return sum((i + 1) * e for i, e in enumerate(mono))


@lru_cache(maxsize=None)
def monomials_of_degree(k: int, d: int) -> tuple[Monomial, ...]:
    """Every degree-d monomial of Z/2[w_1..w_k], in the documented order.

    The order is lexicographic on exponent vectors with larger e_1
    first; the count is the number of partitions of d into parts <= k.
    """
    if k < 1:
        raise ValueError("ring width k must be >= 1")
    if d < 0:
        raise ValueError("degree must be non-negative")

    def gen(var: int, remaining: int):
        if var == k:
            if remaining % k == 0:
                yield (remaining // k,)
            return
        for e in range(remaining // var, -1, -1):
            for rest in gen(var + 1, remaining - var * e):
                yield (e,) + rest

    return tuple(gen(1, d))


def _mul_terms(a: _Terms, b: _Terms) -> _Terms:
    acc: set = set()
    for ta in a:
        for tb in b:
            m = tuple(x + y for x, y in zip(ta, tb))
            if m in acc:
                acc.discard(m)
            else:
                acc.add(m)
    return frozenset(acc)


class WPoly:
    """A GF(2) polynomial in w_1..w_k, stored as a set of monomials."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Iterable[Iterable[int]] = ()):
        if k < 1:
            raise ValueError("ring width k must be >= 1")
        acc: set = set()
        for t in terms:
            t = tuple(int(e) for e in t)
            if len(t) != k or any(e < 0 for e in t):
                raise ValueError("bad exponent tuple %r for k=%d" % (t, k))
            if t in acc:
                acc.discard(t)  # mod-2 cancellation
            else:
                acc.add(t)
        self.k = k
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, k: int, terms: _Terms) -> WPoly:
        # Internal constructor for already-normalized term sets.
        self = object.__new__(cls)
        self.k = k
        self.terms = terms
        return self

    @classmethod
    def zero(cls, k: int) -> WPoly:
        return cls._raw(k, _EMPTY)

    @classmethod
    def one(cls, k: int) -> WPoly:
        return cls._raw(k, frozenset(((0,) * k,)))

    @classmethod
    def w(cls, k: int, j: int) -> WPoly:
        """The generator w_j inside Z/2[w_1..w_k]."""
        if not 1 <= j <= k:
            raise ValueError("w_%d is not a variable of Z/2[w_1..w_%d]" % (j, k))
        mono = tuple(1 if i == j - 1 else 0 for i in range(k))
        return cls._raw(k, frozenset((mono,)))

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms; None for the zero polynomial.

        Raises ValueError if the terms mix degrees.
        """
        if not self.terms:
            return None
        degs = {mono_degree(t) for t in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous (degrees %s)" % sorted(degs))
        return degs.pop()

    def degree(self) -> int:
        """Largest degree among the terms (-1 for the zero polynomial)."""
        return max((mono_degree(t) for t in self.terms), default=-1)

    def _need_same_ring(self, other: WPoly) -> None:
        if not isinstance(other, WPoly):
            raise TypeError("expected WPoly, got %r" % type(other).__name__)
        if self.k != other.k:
            raise ValueError("ring width mismatch: k=%d vs k=%d" % (self.k, other.k))

    def __add__(self, other: WPoly) -> WPoly:
        self._need_same_ring(other)
        return WPoly._raw(self.k, self.terms ^ other.terms)

    def __mul__(self, other: WPoly) -> WPoly:
        self._need_same_ring(other)
        return WPoly._raw(self.k, _mul_terms(self.terms, other.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, self.terms))

    def __repr__(self) -> str:
        return "WPoly(k=%d, %s)" % (self.k, render_poly(self))


@lru_cache(maxsize=None)
def _wu_terms(i: int, j: int, k: int) -> _Terms:
    # Sq^i(w_j) as a term set; preconditions checked in wu_sq.
    if i == 0:
        return frozenset((tuple(1 if v == j - 1 else 0 for v in range(k)),))
    if i > j:
        return _EMPTY
    if i == j:
        return frozenset((tuple(2 if v == j - 1 else 0 for v in range(k)),))
    acc: set = set()
    for t in range(i + 1):
        if j + t > k:
            break  # truncation: w_{j+t} = 0 from here on
        if binom_mod2(j - i + t - 1, t):
            expo = [0] * k
            expo[j + t - 1] += 1
            if i - t >= 1:  # w_0 = 1 contributes no factor
                expo[i - t - 1] += 1
            mono = tuple(expo)
            if mono in acc:
                acc.discard(mono)
            else:
                acc.add(mono)
    return frozenset(acc)


def wu_sq(i: int, j: int, k: int) -> WPoly:
    """Sq^i(w_j) inside Z/2[w_1..w_k], by the Wu formula."""
    if not 1 <= j <= k:
        raise ValueError("w_%d is not a variable of Z/2[w_1..w_%d]" % (j, k))
    if i < 0:
        raise ValueError("Sq index must be non-negative")
    return WPoly._raw(k, _wu_terms(i, j, k))


@lru_cache(maxsize=None)
def _sq_var_power(k: int, j: int, e: int, a: int) -> _Terms:
    # Sq^a(w_j^e), by Cartan recursion on the exponent.
    if a == 0:
        return frozenset((tuple(e if v == j - 1 else 0 for v in range(k)),))
    if e == 0:
        return _EMPTY
    d = j * e
    if a > d:
        return _EMPTY  # instability
    if a == d:
        return frozenset((tuple(2 * e if v == j - 1 else 0 for v in range(k)),))
    acc: _Terms = frozenset()
    lo = max(0, a - j * (e - 1))
    for t in range(lo, min(j, a) + 1):
        left = _wu_terms(t, j, k)
        if not left:
            continue
        right = _sq_var_power(k, j, e - 1, a - t)
        if right:
            acc ^= _mul_terms(left, right)
    return acc


@lru_cache(maxsize=None)
def _sq_mono(k: int, mono: Monomial, i: int) -> _Terms:
    # Sq^i of one monomial, splitting off the leading variable power.
    if i == 0:
        return frozenset((mono,))
    d = mono_degree(mono)
    if i > d:
        return _EMPTY
    idx = next(v for v in range(k) if mono[v])
    j, e = idx + 1, mono[idx]
    rest = mono[:idx] + (0,) + mono[idx + 1 :]
    rest_deg = d - j * e
    if rest_deg == 0:
        return _sq_var_power(k, j, e, i)
    acc: _Terms = frozenset()
    for a in range(max(0, i - rest_deg), min(j * e, i) + 1):
        left = _sq_var_power(k, j, e, a)
        if not left:
            continue
        right = _sq_mono(k, rest, i - a)
        if right:
            acc ^= _mul_terms(left, right)
    return acc


def sq(i: int, p: WPoly) -> WPoly:
    """Steenrod square Sq^i on a polynomial; GF(2)-linear, degree +i."""
    if i < 0:
        raise ValueError("Sq index must be non-negative")
    if i == 0:
        return p
    acc: _Terms = frozenset()
    for mono in p.terms:
        acc ^= _sq_mono(p.k, mono, i)
    return WPoly._raw(p.k, acc)


def apply_sq_word(word: SqWord, p: WPoly) -> WPoly:
    """Apply Sq^{i1} ... Sq^{ir} right to left; the empty word is identity."""
    for i in reversed(word):
        p = sq(i, p)
    return p


@lru_cache(maxsize=None)
def _basis_index(k: int, d: int) -> dict:
    return {mono: pos for pos, mono in enumerate(monomials_of_degree(k, d))}


def coordinates(p: WPoly, d: int | None = None) -> BitVector:
    """Coordinates of a homogeneous polynomial in the degree-d basis.

    The basis is ``monomials_of_degree(p.k, d)`` in that exact order.
    The zero polynomial needs an explicit ``d``.
    """
    own = p.homogeneous_degree()
    if own is None and d is None:
        raise ValueError("degree required to coordinatize the zero polynomial")
    if d is None:
        d = own
    elif own is not None and own != d:
        raise ValueError("polynomial has degree %d, expected %d" % (own, d))
    index = _basis_index(p.k, d)
    bits = 0
    for mono in p.terms:
        bits |= 1 << index[mono]
    return BitVector(len(index), bits)


def poly_from_coordinates(k: int, d: int, vec: BitVector) -> WPoly:
    """Inverse of :func:`coordinates` on the degree-d component."""
    basis = monomials_of_degree(k, d)
    if vec.length != len(basis):
        raise ValueError(
            "vector length %d does not match basis size %d" % (vec.length, len(basis))
        )
    return WPoly._raw(k, frozenset(basis[j] for j in vec.support()))


# --- text grammar -----------------------------------------------------
#
# Terms joined by "+"; a monomial is "w1^a w2^b ..." with exponent 1 and
# unit factors omitted; "1" is the empty monomial and "0" the zero
# polynomial.

_W_TOKEN = re.compile(r"w(\d+)(?:\^(\d+))?\Z")


def render_mono(mono: Monomial) -> str:
    factors = []
    for v, e in enumerate(mono):
        if e == 1:
            factors.append("w%d" % (v + 1))
        elif e > 1:
            factors.append("w%d^%d" % (v + 1, e))
    return " ".join(factors) if factors else "1"


def render_poly(p: WPoly) -> str:
    if not p.terms:
        return "0"
    return " + ".join(render_mono(m) for m in sorted(p.terms, reverse=True))


def parse_poly(text: str, k: int) -> WPoly:
    text = text.strip()
    if text == "0":
        return WPoly.zero(k)
    terms = []
    for chunk in text.split("+"):
        factors = chunk.split()
        if not factors:
            raise ValueError("empty term in polynomial text")
        expo = [0] * k
        for f in factors:
            if f == "1":
                continue
            m = _W_TOKEN.match(f)
            if m is None:
                raise ValueError("cannot parse %r as a w-monomial factor" % f)
            idx = int(m.group(1))
            if not 1 <= idx <= k:
                raise ValueError("variable w%d outside w1..w%d" % (idx, k))
            e = int(m.group(2)) if m.group(2) else 1
            if e < 1:
                raise ValueError("exponents must be positive in %r" % f)
            expo[idx - 1] += e
        terms.append(tuple(expo))
    return WPoly(k, terms)
