"""Bott-Samelson bimodules as free left R-modules with a computed right action.

For a word ``x = (s_1, ..., s_n)`` the bimodule
``B(x) = R (x)_{R^{s_1}} R (x) ... (x)_{R^{s_n}} R`` is free as a left
R-module on ``b_eps = 1 (x) z_1 (x) ... (x) z_n`` where ``z_i = 1`` if
``eps_i = 0`` and ``z_i = e^{w_{s_i}}`` if ``eps_i = 1``.  Basis vectors are
indexed by ``eps`` in ``itertools.product((0, 1), repeat=n)`` order, i.e. the
first letter is the most significant bit.

Morphisms are matrices acting on coordinate columns; ``f o g`` is
``matrix(f) @ matrix(g)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .demazure import demazure
from .errors import RankMismatch, ShapeMismatch
from .frobenius import casimir, decompose
from .laurent import LaurentPoly, monomial, weyl_act_poly
from .linalg import mat_mul
from .root_datum import RootDatum, WeylElement

BSWord = tuple[int, ...]
PolyMatrix = tuple[tuple[LaurentPoly, ...], ...]


def basis_labels(word: Sequence[int]) -> list[tuple[int, ...]]:
    return list(itertools.product((0, 1), repeat=len(word)))


def basis_index(eps: Sequence[int]) -> int:
    i = 0
    for bit in eps:
        i = 2 * i + bit
    return i


def _check_word(datum: RootDatum, word: Sequence[int]) -> BSWord:
    for s in word:
        datum.check_index(s)
    return tuple(word)


def tensor_words(x: Sequence[int], y: Sequence[int]) -> BSWord:
    return tuple(x) + tuple(y)


@dataclass(frozen=True)
class BSElement:
    word: BSWord
    coeffs: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.coeffs) != 2 ** len(self.word):
            raise ShapeMismatch(f"word of length {len(self.word)} needs {2 ** len(self.word)} coefficients")

    @classmethod
    def basis_vector(cls, datum: RootDatum, word: Sequence[int], eps: Sequence[int]) -> BSElement:
        word = _check_word(datum, word)
        zero = LaurentPoly.zero(datum.rank)
        coeffs = [zero] * 2 ** len(word)
        coeffs[basis_index(eps)] = LaurentPoly.one(datum.rank)
        return cls(word, tuple(coeffs))

    def left_mul(self, r: LaurentPoly) -> BSElement:
        return BSElement(self.word, tuple(r * c for c in self.coeffs))

    def __add__(self, other: BSElement) -> BSElement:
        if other.word != self.word:
            raise ShapeMismatch("adding elements of different bimodules")
        return BSElement(self.word, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


@dataclass(frozen=True)
class BimoduleMorphism:
    source: BSWord
    target: BSWord
    matrix: PolyMatrix

    def __post_init__(self):
        rows, cols = 2 ** len(self.target), 2 ** len(self.source)
        if len(self.matrix) != rows or any(len(r) != cols for r in self.matrix):
            raise ShapeMismatch(f"matrix for {self.source} -> {self.target} must be {rows}x{cols}")

    @property
    def rank(self) -> int:
        return self.matrix[0][0].rank

    def __call__(self, m: BSElement) -> BSElement:
        if m.word != self.source:
            raise ShapeMismatch(f"morphism from {self.source} applied to element of {m.word}")
        zero = LaurentPoly.zero(self.rank)
        coeffs = []
        for row in self.matrix:
            acc = zero
            for a, c in zip(row, m.coeffs):
                if a and c:
                    acc = acc + a * c
            coeffs.append(acc)
        return BSElement(self.target, tuple(coeffs))

    def _entrywise(self, other: BimoduleMorphism, op) -> BimoduleMorphism:
        if (self.source, self.target) != (other.source, other.target):
            raise ShapeMismatch("combining morphisms of different shapes")
        return BimoduleMorphism(
            self.source,
            self.target,
            tuple(tuple(op(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)),
        )

    def __add__(self, other: BimoduleMorphism) -> BimoduleMorphism:
        return self._entrywise(other, lambda a, b: a + b)

    def __sub__(self, other: BimoduleMorphism) -> BimoduleMorphism:
        return self._entrywise(other, lambda a, b: a - b)

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.matrix for a in r)

    def to_json(self) -> dict:
        return {
            "source": [s + 1 for s in self.source],
            "target": [s + 1 for s in self.target],
            "matrix": [[a.to_json() for a in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data: dict, rank: int) -> BimoduleMorphism:
        return cls(
            tuple(s - 1 for s in data["source"]),
            tuple(s - 1 for s in data["target"]),
            tuple(tuple(LaurentPoly.from_json(a, rank) for a in row) for row in data["matrix"]),
        )


def _as_matrix(rows) -> PolyMatrix:
    return tuple(tuple(r) for r in rows)


# --------------------------------------------------------------------------
# Right action
# --------------------------------------------------------------------------

def _fund(datum: RootDatum, s: int) -> LaurentPoly:
    return monomial(datum.fundamental_weight(s))


@lru_cache(maxsize=100_000)
def _basis_times(datum: RootDatum, word: BSWord, eps: tuple[int, ...], r: LaurentPoly) -> dict:
    # absorb r into the last slot, then sweep leftwards: split each slot's
    # content into s_k-invariant parts and move them across the k-th tensor
    one = LaurentPoly.one(datum.rank)
    n = len(word)
    if n == 0:
        return {(): r}
    z = [_fund(datum, word[i]) if eps[i] else one for i in range(n)]
    items = {(): z[n - 1] * r}
    for k in range(n - 1, -1, -1):
        left = z[k - 1] if k > 0 else one
        new = {}
        for suffix, p in items.items():
            a, b = decompose(datum, p, word[k])
            if a:
                new[(0,) + suffix] = left * a
            if b:
                new[(1,) + suffix] = left * b
        items = new
    return items


def right_mul(datum: RootDatum, m: BSElement, r: LaurentPoly) -> BSElement:
    if r.rank != datum.rank:
        raise RankMismatch(f"rank-{r.rank} polynomial for rank-{datum.rank} datum")
    _check_word(datum, m.word)
    zero = LaurentPoly.zero(datum.rank)
    out = [zero] * len(m.coeffs)
    for eps, c in zip(basis_labels(m.word), m.coeffs):
        if not c:
            continue
        for eps2, v in _basis_times(datum, m.word, eps, r).items():
            i = basis_index(eps2)
            out[i] = out[i] + c * v
    return BSElement(m.word, tuple(out))


@lru_cache(maxsize=20_000)
def right_mul_matrix(datum: RootDatum, word: BSWord, r: LaurentPoly) -> PolyMatrix:
    """Matrix whose column ``eps`` holds the coordinates of ``b_eps * r``."""
    if r.rank != datum.rank:
        raise RankMismatch(f"rank-{r.rank} polynomial for rank-{datum.rank} datum")
    word = _check_word(datum, word)
    n = 2 ** len(word)
    zero = LaurentPoly.zero(datum.rank)
    cols = []
    for eps in basis_labels(word):
        col = [zero] * n
        for eps2, v in _basis_times(datum, word, eps, r).items():
            col[basis_index(eps2)] = v
        cols.append(col)
    return _as_matrix(zip(*cols))


def ring_generators(datum: RootDatum) -> list[LaurentPoly]:
    """``e^{w_i}`` and ``e^{-w_i}`` for every i; they generate R as a ring."""
    out = []
    for i in range(datum.rank):
        w = datum.fundamental_weight(i)
        out.append(monomial(w))
        out.append(monomial(tuple(-v for v in w)))
    return out


# --------------------------------------------------------------------------
# Morphisms
# --------------------------------------------------------------------------

def identity_morphism(datum: RootDatum, word: Sequence[int]) -> BimoduleMorphism:
    word = _check_word(datum, word)
    n = 2 ** len(word)
    one, zero = LaurentPoly.one(datum.rank), LaurentPoly.zero(datum.rank)
    return BimoduleMorphism(word, word, _as_matrix([[one if i == j else zero for j in range(n)] for i in range(n)]))


def morphism_compose(f: BimoduleMorphism, g: BimoduleMorphism) -> BimoduleMorphism:
    """``f o g``: first ``g``, then ``f``."""
    if g.target != f.source:
        raise ShapeMismatch(f"cannot compose {f.source}->{f.target} after {g.source}->{g.target}")
    zero = LaurentPoly.zero(f.rank)
    return BimoduleMorphism(g.source, f.target, _as_matrix(mat_mul(f.matrix, g.matrix, zero)))


def morphism_tensor(datum: RootDatum, f: BimoduleMorphism, g: BimoduleMorphism) -> BimoduleMorphism:
    """``f (x)_R g`` from ``B(x_f x_g)`` to ``B(y_f y_g)``.

    ``(f (x) g)(b_e (x) b_d) = sum F[a][e] (b_a . G[b][d]) (x) b_b``: the
    coefficients produced by ``g`` are moved across the boundary through the
    right action on ``B(y_f)``.
    """
    if f.rank != datum.rank or g.rank != datum.rank:
        raise RankMismatch("morphisms over a different rank")
    zero = LaurentPoly.zero(datum.rank)
    nxf, nyf = 2 ** len(f.source), 2 ** len(f.target)
    nxg, nyg = 2 ** len(g.source), 2 ** len(g.target)
    out = [[zero] * (nxf * nxg) for _ in range(nyf * nyg)]
    pushed: dict[LaurentPoly, list] = {}
    for beta in range(nyg):
        for delta in range(nxg):
            c = g.matrix[beta][delta]
            if not c:
                continue
            block = pushed.get(c)
            if block is None:
                block = mat_mul(right_mul_matrix(datum, f.target, c), f.matrix, zero)
                pushed[c] = block
            for gamma in range(nyf):
                row = out[gamma * nyg + beta]
                for eps in range(nxf):
                    v = block[gamma][eps]
                    if v:
                        row[eps * nxg + delta] = v
    return BimoduleMorphism(f.source + g.source, f.target + g.target, _as_matrix(out))


def is_bimodule_map(datum: RootDatum, f: BimoduleMorphism) -> bool:
    """Whether the matrix intertwines the right actions of all ring generators."""
    zero = LaurentPoly.zero(datum.rank)
    for r in ring_generators(datum):
        lhs = mat_mul(f.matrix, right_mul_matrix(datum, f.source, r), zero)
        rhs = mat_mul(right_mul_matrix(datum, f.target, r), f.matrix, zero)
        if _as_matrix(lhs) != _as_matrix(rhs):
            return False
    return True


def counit(datum: RootDatum, s: int) -> BimoduleMorphism:
    """``B(s) -> R``, ``f (x) g -> fg``."""
    datum.check_index(s)
    return BimoduleMorphism((s,), (), ((LaurentPoly.one(datum.rank), _fund(datum, s)),))


def unit(datum: RootDatum, s: int) -> BimoduleMorphism:
    """``R -> B(s)``, ``1 -> sum_i g_i (x) x_i`` (the Casimir element)."""
    pairs = casimir(datum, s)
    return BimoduleMorphism((), (s,), tuple((g,) for _, g in pairs))


def mult(datum: RootDatum, s: int) -> BimoduleMorphism:
    """``B(s, s) -> B(s)``, ``f (x) g (x) h -> f D_s(g) (x) h``."""
    datum.check_index(s)
    zero = LaurentPoly.zero(datum.rank)
    traces = (LaurentPoly.one(datum.rank), demazure(datum, s, _fund(datum, s)))
    rows = [[zero] * 4 for _ in range(2)]
    for e1, e2 in basis_labels((s, s)):
        rows[e2][basis_index((e1, e2))] = traces[e1]
    return BimoduleMorphism((s, s), (s,), _as_matrix(rows))


def comult(datum: RootDatum, s: int) -> BimoduleMorphism:
    """``B(s) -> B(s, s)``, ``f (x) g -> f (x) 1 (x) g``."""
    datum.check_index(s)
    zero, one = LaurentPoly.zero(datum.rank), LaurentPoly.one(datum.rank)
    rows = [[zero] * 2 for _ in range(4)]
    for e in (0, 1):
        rows[basis_index((0, e))][e] = one
    return BimoduleMorphism((s,), (s, s), _as_matrix(rows))


GENERATORS = {"unit": unit, "counit": counit, "mult": mult, "comult": comult}


# --------------------------------------------------------------------------
# Twisted bimodules
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistedBimodule:
    """``R_w``: R with left action by multiplication and right action through ``w``."""

    w: WeylElement


def twisted_right_mul(t: TwistedBimodule, f: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    if f.rank != t.w.rank or r.rank != t.w.rank:
        raise RankMismatch("twisted bimodule over a different rank")
    return f * weyl_act_poly(t.w, r)
