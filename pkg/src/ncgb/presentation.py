"""Presentations by operator: extensions, critical branchings, rewriting.

A presentation is a triple (alphabet, monomial order, reduction operator).
The extension of the operator at offsets (n, m) rewrites the middle factor
of a word while fixing an n-letter prefix and an m-letter suffix; critical
branchings are the words reducible by two extensions in genuinely
overlapping or nested positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Polynomial
from .reduction import ReductionOperator
from .words import Alphabet, DegLexOrder, Word, factor_occurrences, overlaps


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    order: DegLexOrder
    operator: ReductionOperator

    def __post_init__(self) -> None:
        if self.order.alphabet != self.alphabet:
            raise ValueError("order alphabet mismatch")
        for w, p in self.operator.rules.items():
            for v in {w} | p.support():
                if not self.alphabet.contains_word(v):
                    raise ValueError(f"word {v} outside the alphabet")


@dataclass(frozen=True)
class CriticalBranching:
    """Source word with an unordered pair of reducing extension offsets.

    The pair is stored with the larger offset pair first, matching the
    orientation in which overlap branchings read (prefix_len, 0), (0,
    suffix_len).
    """

    source: Word
    left: tuple[int, int]
    right: tuple[int, int]

    @classmethod
    def make(
        cls, source: Word, p: tuple[int, int], q: tuple[int, int]
    ) -> "CriticalBranching":
        first, second = (p, q) if p >= q else (q, p)
        return cls(source, first, second)


def extension_apply(P: Presentation, n: int, m: int, w: Word) -> Polynomial:
    """Apply the operator to the middle factor, fixing an n-prefix and m-suffix."""
    if (n, m) == (0, 0):
        return P.operator.apply(Polynomial.monomial(w))
    if len(w) < n + m:
        return Polynomial.monomial(w)
    prefix, mid, suffix = w[:n], w[n : len(w) - m], w[len(w) - m :]
    return P.operator.apply_word(mid).sandwich(prefix, suffix)


def critical_branchings(P: Presentation) -> list[CriticalBranching]:
    """All critical branchings, sorted by source then offsets."""
    # A rule keyed by the empty word (the ideal contains a constant) admits
    # no branchings: the middle factor of an extension is always nonempty.
    keys = sorted((k for k in P.operator.rules if k), key=P.order.key)
    found: set[CriticalBranching] = set()
    for u in keys:
        for v in keys:
            for a, _, c in overlaps(u, v):
                found.add(CriticalBranching.make(a + v, (len(a), 0), (0, len(c))))
            for n, m in factor_occurrences(u, v):
                if u == v and (n, m) == (0, 0):
                    continue
                found.add(CriticalBranching.make(u, (n, m), (0, 0)))
    return sorted(found, key=lambda b: (P.order.key(b.source), b.left, b.right))


def s_polynomial(P: Presentation, b: CriticalBranching) -> Polynomial:
    """Difference of the two one-step reductions of the source."""
    left = extension_apply(P, b.left[0], b.left[1], b.source)
    right = extension_apply(P, b.right[0], b.right[1], b.source)
    return left - right


def _leftmost_longest_factor(
    w: Word, keys: set[Word], max_len: int
) -> tuple[int, Word] | None:
    for i in range(len(w)):
        for k in range(min(max_len, len(w) - i), 0, -1):
            if w[i : i + k] in keys:
                return i, w[i : i + k]
    return None


def normal_form(P: Presentation, f: Polynomial) -> Polynomial:
    """Exhaustively rewrite ``f`` by the rules applied inside words.

    Strategy: greatest reducible monomial first, leftmost occurrence,
    longest rule key at that position.  Terminates because every step
    replaces a monomial by strictly smaller ones.
    """
    rules = P.operator.rules
    keys = set(rules)
    if not keys:
        return f
    if () in keys:
        # The only image smaller than the empty word is zero, so the rule
        # kills the unit and with it every word: w = w.1 rewrites to 0.
        return Polynomial.zero()
    max_len = max(len(k) for k in keys)
    while True:
        hits = [
            (w, hit)
            for w in f.support()
            if (hit := _leftmost_longest_factor(w, keys, max_len)) is not None
        ]
        if not hits:
            return f
        w, (i, key) = max(hits, key=lambda item: P.order.key(item[0]))
        c = f.coeff(w)
        replacement = rules[key].sandwich(w[:i], w[i + len(key) :])
        f = f - Polynomial.monomial(w, c) + replacement.scale(c)


def is_confluent_presentation(P: Presentation) -> bool:
    """Diamond-Lemma test: every S-polynomial rewrites to zero."""
    return all(
        normal_form(P, s_polynomial(P, b)).is_zero() for b in critical_branchings(P)
    )


def groebner_rules(P: Presentation) -> list[Polynomial]:
    """The rule vectors w - S(w), sorted by increasing leading word."""
    return [
        Polynomial.monomial(w) - p
        for w, p in sorted(P.operator.rules.items(), key=lambda it: P.order.key(it[0]))
    ]
