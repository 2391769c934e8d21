"""K-theoretic Demazure operators, induction from T to G, and characters."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import InexactDivision, NotDominant, RankMismatch
from .laurent import LaurentPoly, Rational, exact_divide, monomial, specialize
from .root_datum import RootDatum, Weight, dot_act, weyl_group


@lru_cache(maxsize=200_000)
def _demazure_monomial(lam: Weight, s: int, alpha: Weight) -> tuple[tuple[Weight, int], ...]:
    n = lam[s]
    if n >= 0:
        return tuple((tuple(l - k * a for l, a in zip(lam, alpha)), 1) for k in range(n + 1))
    if n == -1:
        return ()
    return tuple((tuple(l + k * a for l, a in zip(lam, alpha)), -1) for k in range(1, -n))


def demazure(datum: RootDatum, s: int, f: LaurentPoly) -> LaurentPoly:
    """Apply the Demazure operator for the simple reflection ``s``.

    On a monomial ``e^lam`` with ``n = lam[s]`` this is the telescoped form of
    ``(e^lam - e^(s.lam)) / (1 - e^-alpha_s)``.
    """
    datum.check_index(s)
    if f.rank != datum.rank:
        raise RankMismatch(f"rank-{f.rank} polynomial for rank-{datum.rank} datum")
    alpha = datum.simple_root(s)
    out: dict[Weight, Rational] = {}
    for lam, c in f.items():
        for e, sign in _demazure_monomial(lam, s, alpha):
            out[e] = out.get(e, 0) + sign * c
    return LaurentPoly(f.rank, out)


def demazure_word(datum: RootDatum, word: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """The operator product ``D_{w1} D_{w2} ... D_{wk}`` applied to ``f``.

    The rightmost letter acts first.
    """
    for s in word:
        datum.check_index(s)
    for s in reversed(word):
        f = demazure(datum, s, f)
    return f


def _weyl_denominator(datum: RootDatum) -> LaurentPoly:
    one = LaurentPoly.one(datum.rank)
    den = one
    for beta in datum.positive_roots:
        den = den * (one - monomial(tuple(-v for v in beta)))
    return den


def induction(datum: RootDatum, f: LaurentPoly, method: str = "demazure") -> LaurentPoly:
    """Induction from the torus to G.

    ``method="demazure"`` composes Demazure operators along the canonical
    reduced word of the longest element.  ``method="weyl-formula"`` computes
    the alternating dot-action sum and divides by the Weyl denominator.
    """
    if f.rank != datum.rank:
        raise RankMismatch(f"rank-{f.rank} polynomial for rank-{datum.rank} datum")
    if method == "demazure":
        return demazure_word(datum, datum.longest.word, f)
    if method != "weyl-formula":
        raise ValueError(f"unknown induction method {method!r}")
    num: dict[Weight, Rational] = {}
    group = weyl_group(datum)
    for lam, c in f.items():
        for w in group:
            e = dot_act(w, lam)
            num[e] = num.get(e, 0) + (-c if w.length % 2 else c)
    numerator = LaurentPoly(datum.rank, num)
    try:
        return exact_divide(numerator, _weyl_denominator(datum))
    except InexactDivision as exc:
        raise InexactDivision(f"Weyl character formula division failed: {exc}") from exc


def _check_dominant(datum: RootDatum, weight: Sequence[int]) -> Weight:
    datum.check_weight(weight)
    if any(v < 0 for v in weight):
        raise NotDominant(f"weight {tuple(weight)} is not dominant")
    return tuple(weight)


def irr_character(datum: RootDatum, weight: Sequence[int]) -> LaurentPoly:
    """Character of the irreducible representation of highest weight ``weight``."""
    lam = _check_dominant(datum, weight)
    return induction(datum, monomial(lam))


def weyl_dim(datum: RootDatum, weight: Sequence[int]) -> int:
    chi = irr_character(datum, weight)
    d = specialize(chi, [1] * datum.rank)
    assert d.denominator == 1 and d > 0, d
    return int(d)
