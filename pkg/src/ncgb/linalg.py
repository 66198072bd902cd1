"""Exact-rational polynomials on words and sparse Gaussian elimination.

Subspaces of the span of a finite word set are represented by reduced
bases: monic vectors with pairwise distinct leading words, fully
auto-reduced, sorted by decreasing leading word.  All arithmetic uses
``fractions.Fraction`` so results are bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .words import DegLexOrder, Word

Scalar = Fraction


class Polynomial:
    """Finite rational linear combination of words; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(w)] = c
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def monomial(cls, w: Word, coeff=1) -> "Polynomial":
        return cls({tuple(w): coeff})

    def items(self):
        return self._terms.items()

    def support(self) -> set[Word]:
        return set(self._terms)

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return Polynomial(terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({w: -c for w, c in self._terms.items()})

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial({w: c * cw for w, cw in self._terms.items()})

    def sandwich(self, left: Word, right: Word) -> "Polynomial":
        """Multiply by the word ``left`` on the left and ``right`` on the right."""
        return Polynomial({left + w + right: c for w, c in self._terms.items()})

    def leading(self, order: DegLexOrder) -> tuple[Word, Fraction]:
        if not self._terms:
            raise ValueError("no leading term: zero polynomial")
        w = max(self._terms, key=order.key)
        return w, self._terms[w]

    def monic(self, order: DegLexOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self.scale(Fraction(1) / c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        parts = [f"{c}*{''.join(map(str, w)) or '1'}" for w, c in sorted(self._terms.items())]
        return "Polynomial(" + " + ".join(parts) + ")"


def leading(f: Polynomial, order: DegLexOrder) -> tuple[Word, Fraction]:
    return f.leading(order)


def _reduce_against(f: Polynomial, pivots: dict[Word, Polynomial]) -> Polynomial:
    # Pivots are mutually reduced, so one pass over the support suffices.
    for w in list(f.support()):
        if w in pivots:
            f = f - pivots[w].scale(f.coeff(w))
    return f


def reduced_basis(vectors: Iterable[Polynomial], order: DegLexOrder) -> list[Polynomial]:
    """Unique monic auto-reduced basis of the span, by decreasing leading word."""
    pivots: dict[Word, Polynomial] = {}
    for v in vectors:
        v = _reduce_against(v, pivots)
        if v.is_zero():
            continue
        v = v.monic(order)
        lw, _ = v.leading(order)
        for key, p in list(pivots.items()):
            c = p.coeff(lw)
            if c:
                pivots[key] = p - v.scale(c)
        pivots[lw] = v
    return [pivots[w] for w in sorted(pivots, key=order.key, reverse=True)]


def subspace_sum(
    A: Sequence[Polynomial], B: Sequence[Polynomial], order: DegLexOrder
) -> list[Polynomial]:
    return reduced_basis(list(A) + list(B), order)


def _dense(f: Polynomial, index: Mapping[Word, int], n: int) -> list[Fraction]:
    row = [Fraction(0)] * n
    for w, c in f.items():
        row[index[w]] = c
    return row


def _forward_eliminate(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place row echelon form; returns the nonzero rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return [row for row in rows if any(row)]


def subspace_intersection(
    A: Sequence[Polynomial], B: Sequence[Polynomial], order: DegLexOrder
) -> list[Polynomial]:
    """Reduced basis of span(A) ∩ span(B), by the Zassenhaus block trick."""
    A = reduced_basis(A, order)
    B = reduced_basis(B, order)
    if not A or not B:
        return []
    ambient = sorted(
        {w for f in A for w in f.support()} | {w for f in B for w in f.support()},
        key=order.key,
        reverse=True,
    )
    n = len(ambient)
    index = {w: i for i, w in enumerate(ambient)}
    rows = [_dense(a, index, n) + _dense(a, index, n) for a in A]
    rows += [_dense(b, index, n) + [Fraction(0)] * n for b in B]
    out = []
    for row in _forward_eliminate(rows):
        if not any(row[:n]):
            out.append(Polynomial({ambient[i]: c for i, c in enumerate(row[n:]) if c}))
    return reduced_basis(out, order)


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of the given matrix."""
    rows = [list(r) for r in rows if any(r)]
    echelon = _forward_eliminate(rows)
    pivot_cols = []
    for row in echelon:
        pivot_cols.append(next(j for j in range(ncols) if row[j]))
    free_cols = [j for j in range(ncols) if j not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(echelon, pivot_cols):
            vec[pc] = -row[free]
        basis.append(vec)
    return basis


def coordinate_subspace_intersection(
    A: Sequence[Polynomial], allowed: set[Word], order: DegLexOrder
) -> list[Polynomial]:
    """Reduced basis of the vectors of span(A) supported inside ``allowed``."""
    A = reduced_basis(A, order)
    if not A:
        return []
    disallowed = sorted(
        {w for f in A for w in f.support()} - set(allowed), key=order.key
    )
    if not disallowed:
        return list(A)
    rows = [[a.coeff(w) for a in A] for w in disallowed]
    combos = []
    for coeffs in _nullspace(rows, len(A)):
        v = Polynomial.zero()
        for c, a in zip(coeffs, A):
            if c:
                v = v + a.scale(c)
        combos.append(v)
    return reduced_basis(combos, order)
