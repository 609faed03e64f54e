"""The mod-2 Steenrod algebra on the level of Sq-words.

A word is a tuple of positive integers ``(i1, ..., ir)`` standing for
the composition ``Sq^i1 ... Sq^ir`` (the empty tuple is the unit).  An
expression is a frozenset of words, read as their GF(2) sum, so the
zero expression is the empty frozenset and XOR (symmetric difference)
is addition.

``adem_reduce`` rewrites any word into the admissible basis by
repeatedly applying the Adem relation

    Sq^a Sq^b = sum_c  C(b-c-1, a-2c) Sq^(a+b-c) Sq^c      (a < 2b)

at the leftmost inadmissible pair.  Termination: the weighted measure
sum_s i_s * 2^(r-s) strictly drops under each rewrite.  Reductions are
memoized per whole word; the cache behaves as a read-through cache and
is safe to share between threads.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable

SqWord = tuple[int, ...]
SqExpr = frozenset  # frozenset[SqWord]

ZERO_EXPR: SqExpr = frozenset()
UNIT_WORD: SqWord = ()


def binom_mod2(m: int, t: int) -> int:
    """C(m, t) mod 2 by Lucas: 1 iff every binary digit of t is <= m's."""
    if m < 0 or t < 0:
        raise ValueError("binom_mod2 requires non-negative arguments")
    return 1 if m & t == t else 0


def word_degree(word: SqWord) -> int:
    """Total degree |I| = sum of the entries."""
    return sum(word)


def excess(word: SqWord) -> int:
    """i1 - i2 - ... - ir; zero for the empty word."""
    if not word:
        return 0
    return 2 * word[0] - sum(word)


def is_admissible(word: SqWord) -> bool:
    """True iff i_s >= 2*i_{s+1} holds at every adjacent position."""
    return all(word[s] >= 2 * word[s + 1] for s in range(len(word) - 1))


def _check_word(word: SqWord) -> SqWord:
    word = tuple(word)
    if any(not isinstance(i, int) or i < 1 for i in word):
        raise ValueError("word entries must be positive integers: %r" % (word,))
    return word


@lru_cache(maxsize=None)
def _admissible_upto_first(m: int, max_first: int) -> tuple[SqWord, ...]:
    # All admissible words of degree m whose first entry is <= max_first.
    if m == 0:
        return ((),)
    out: list[SqWord] = []
    for i1 in range(1, min(m, max_first) + 1):
        for tail in _admissible_upto_first(m - i1, i1 // 2):
            out.append((i1,) + tail)
    return tuple(out)


def enumerate_admissible(m: int, e_max: int | None = None) -> list[SqWord]:
    """All admissible words of degree ``m`` with excess at most ``e_max``.

    ``e_max=None`` means unbounded.  Words come in a fixed total order:
    length-lexicographic on the entries, shorter words first (the same
    order used to canonicalize expressions).  For ``m=0`` the result is
    ``[()]`` exactly when ``e_max`` admits excess 0.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    words = _admissible_upto_first(m, m)
    if e_max is not None:
        words = tuple(w for w in words if excess(w) <= e_max)
    return sorted(words, key=lambda w: (len(w), w))


def _first_inadmissible(word: SqWord) -> int | None:
    for s in range(len(word) - 1):
        if word[s] < 2 * word[s + 1]:
            return s
    return None


def _last_inadmissible(word: SqWord) -> int | None:
    for s in range(len(word) - 2, -1, -1):
        if word[s] < 2 * word[s + 1]:
            return s
    return None


def _adem_rewrite(word: SqWord, s: int) -> list[SqWord]:
    # Replace the inadmissible pair at position s by its Adem expansion.
    # c = 0 contributes the single square Sq^(a+b); no Sq^0 ever appears.
    a, b = word[s], word[s + 1]
    out = []
    for c in range(a // 2 + 1):
        if binom_mod2(b - c - 1, a - 2 * c):
            mid = (a + b,) if c == 0 else (a + b - c, c)
            out.append(word[:s] + mid + word[s + 2 :])
    return out


@lru_cache(maxsize=None)
def _reduce(word: SqWord, leftmost: bool) -> SqExpr:
    s = _first_inadmissible(word) if leftmost else _last_inadmissible(word)
    if s is None:
        return frozenset((word,))
    acc: SqExpr = frozenset()
    for rewritten in _adem_rewrite(word, s):
        acc ^= _reduce(rewritten, leftmost)
    return acc


def adem_reduce(word: SqWord) -> SqExpr:
    """Expand a word in the admissible basis; degree is preserved.

    Already-admissible words come back unchanged (as a singleton) and
    the zero of the algebra is the empty frozenset.
    """
    return _reduce(_check_word(word), True)


def reduce_expr(words: Iterable[SqWord]) -> SqExpr:
    """Admissible form of a GF(2) sum of words."""
    acc: SqExpr = frozenset()
    for w in words:
        acc ^= adem_reduce(w)
    return acc


def sort_words(expr: Iterable[SqWord]) -> list[SqWord]:
    """Canonical listing of an expression: length, then entries."""
    return sorted(expr, key=lambda w: (len(w), w))


# --- text grammar -----------------------------------------------------
#
# "Sq^a Sq^b ..." with whitespace separation; "1" is the empty word,
# "0" the zero expression; sums are joined by "+".

_SQ_TOKEN = re.compile(r"Sq\^(\d+)\Z")


def render_word(word: SqWord) -> str:
    if not word:
        return "1"
    return " ".join("Sq^%d" % i for i in word)


def render_expr(expr: Iterable[SqWord]) -> str:
    words = sort_words(expr)
    if not words:
        return "0"
    return " + ".join(render_word(w) for w in words)


def parse_word(text: str) -> SqWord:
    text = text.strip()
    if text == "1":
        return ()
    entries = []
    for token in text.split():
        m = _SQ_TOKEN.match(token)
        if m is None:
            raise ValueError("cannot parse %r as an Sq factor" % token)
        i = int(m.group(1))
        if i < 1:
            raise ValueError("Sq exponents must be positive, got Sq^%d" % i)
        entries.append(i)
    if not entries:
        raise ValueError("empty Sq word text")
    return tuple(entries)


def parse_expr(text: str) -> SqExpr:
    text = text.strip()
    if text == "0":
        return ZERO_EXPR
    acc: SqExpr = frozenset()
    for chunk in text.split("+"):
        acc ^= frozenset((parse_word(chunk),))
    return acc
