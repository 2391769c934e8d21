"""Frobenius extensions ``R^s < R`` and ``R^W < R``.

The rank-one extension uses the basis ``(1, e^{w_s})`` of R over R^s with
dual basis ``(-e^{-a_s}, e^{-w_s})`` for the trace ``D_s``.  The global
extension uses the Steinberg basis, certified by a unit Gram determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .demazure import demazure, induction
from .errors import CandidateBasisFailed, InexactDivision
from .laurent import LaurentPoly, is_invariant, monomial, weyl_act_poly
from .linalg import laurent_inverse
from .root_datum import RootDatum, WeylElement, weyl_group


@dataclass(frozen=True)
class RankOneFrobeniusData:
    s: int
    basis: tuple[LaurentPoly, LaurentPoly]
    dual_basis: tuple[LaurentPoly, LaurentPoly]


def _fundamental(datum: RootDatum, s: int, sign: int = 1) -> LaurentPoly:
    return monomial(tuple(sign * v for v in datum.fundamental_weight(s)))


def frobenius_data(datum: RootDatum, s: int) -> RankOneFrobeniusData:
    datum.check_index(s)
    basis = (LaurentPoly.one(datum.rank), _fundamental(datum, s))
    dual = (-monomial(tuple(-v for v in datum.simple_root(s))), _fundamental(datum, s, -1))
    for i, x in enumerate(basis):
        for j, g in enumerate(dual):
            if demazure(datum, s, x * g) != (1 if i == j else 0):
                raise AssertionError(f"dual basis condition fails at ({i},{j}) for s={s}")
    return RankOneFrobeniusData(s, basis, dual)


def decompose(datum: RootDatum, f: LaurentPoly, s: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Write ``f = a + b e^{w_s}`` with ``a, b`` both s-invariant.

    >>> from ksbim.root_datum import build_root_datum
    >>> a, b = decompose(build_root_datum("A1"), monomial((2,)), 0)
    >>> str(a), str(b)
    ('-1', 'x + x^-1')
    """
    w = _fundamental(datum, s)
    b = demazure(datum, s, f * _fundamental(datum, s, -1))
    a = demazure(datum, s, f) - b * demazure(datum, s, w)
    if a + b * w != f:
        raise AssertionError("decomposition does not reconstruct its input")
    return a, b


def casimir(datum: RootDatum, s: int) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """Pairs ``(x_i, g_i)`` of dual bases; the Casimir element is their sum."""
    data = frobenius_data(datum, s)
    return list(zip(data.basis, data.dual_basis))


def pairing(datum: RootDatum, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return induction(datum, f * g)


@dataclass(frozen=True)
class SteinbergData:
    elements: tuple[WeylElement, ...]
    basis: tuple[LaurentPoly, ...]
    gram: tuple[tuple[LaurentPoly, ...], ...]
    det: LaurentPoly
    dual: tuple[LaurentPoly, ...]
    gram_inverse: tuple[tuple[LaurentPoly, ...], ...]

    def index(self, w: WeylElement) -> int:
        return self.elements.index(w)

    def to_json(self) -> dict:
        keys = [w.label() for w in self.elements]
        return {
            "order": keys,
            "basis": {k: b.to_json() for k, b in zip(keys, self.basis)},
            "dual": {k: b.to_json() for k, b in zip(keys, self.dual)},
            "gram": [[g.to_json() for g in row] for row in self.gram],
            "det": self.det.to_json(),
        }


def steinberg_candidate(datum: RootDatum) -> list[LaurentPoly]:
    """``e_w = w^-1(e^{lam_w})`` where ``lam_w`` sums the fundamental weights
    ``w_i`` with ``w^-1(a_i)`` negative, in ShortLex order of ``w``."""
    out = []
    for w in weyl_group(datum):
        winv = datum.inverse(w)
        lam = [0] * datum.rank
        for i in datum.right_descents(winv):
            lam[i] = 1
        out.append(weyl_act_poly(winv, monomial(tuple(lam))))
    return out


def steinberg(datum: RootDatum, basis: Sequence[LaurentPoly] | None = None) -> SteinbergData:
    """Steinberg basis, Gram matrix of the induction pairing, and dual basis.

    A custom candidate family may be passed; it is accepted only if its Gram
    determinant is a unit, otherwise ``CandidateBasisFailed`` is raised.
    """
    elements = tuple(weyl_group(datum))
    basis = tuple(steinberg_candidate(datum) if basis is None else basis)
    if len(basis) != len(elements):
        raise CandidateBasisFailed(f"need {len(elements)} candidates, got {len(basis)}")
    n = len(basis)
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            gram[i][j] = gram[j][i] = pairing(datum, basis[i], basis[j])
    try:
        det, inv = laurent_inverse(gram)
    except InexactDivision:
        det, inv = None, []
    if det is None or not inv or det not in (LaurentPoly.one(datum.rank), -LaurentPoly.one(datum.rank)):
        raise CandidateBasisFailed(f"Gram determinant is {det}, not a sign")
    dual = []
    for j in range(n):
        e = LaurentPoly.zero(datum.rank)
        for u in range(n):
            if inv[u][j]:
                e = e + inv[u][j] * basis[u]
        dual.append(e)
    return SteinbergData(
        elements,
        basis,
        tuple(tuple(r) for r in gram),
        det,
        tuple(dual),
        tuple(tuple(r) for r in inv),
    )


def expand_in_steinberg(datum: RootDatum, f: LaurentPoly, sd: SteinbergData) -> dict[WeylElement, LaurentPoly]:
    """Coefficients ``c_w = <f, e*_w>`` with ``f = sum c_w e_w``."""
    coeffs = {w: pairing(datum, f, d) for w, d in zip(sd.elements, sd.dual)}
    total = LaurentPoly.zero(datum.rank)
    for w, b in zip(sd.elements, sd.basis):
        total = total + coeffs[w] * b
    if total != f:
        raise AssertionError("Steinberg expansion does not reconstruct its input")
    for c in coeffs.values():
        if not is_invariant(datum, c):
            raise AssertionError("Steinberg coefficient is not W-invariant")
    return coeffs
