"""Hom-space ranks between Bott-Samelson bimodules.

The predicted rank of ``Hom(B(x), B(y))`` counts pairs of subsequences of
``x`` and ``y`` with equal Weyl group products.  It is checked against the
dimension of the commutant of the two right actions after specialising the
torus variables at random distinct primes.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bimodule import (
    GENERATORS,
    BimoduleMorphism,
    BSWord,
    identity_morphism,
    is_bimodule_map,
    morphism_compose,
    morphism_tensor,
    right_mul_matrix,
    ring_generators,
)
from .demazure import irr_character
from .errors import BudgetExceeded, ShapeMismatch
from .frobenius import steinberg
from .laurent import LaurentPoly, Specializer, monomial, weyl_act_poly
from .linalg import nullity, rank
from .root_datum import RootDatum, WeylElement

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
          53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

DEFAULT_BUDGET = 6
MAX_GENERATED = 5000


def subsequence_products(datum: RootDatum, x: Sequence[int]) -> Counter:
    """Multiset ``{w: m_w(x)}`` of products over all ``2^|x|`` subsequences."""
    counts: Counter = Counter()
    for eps in itertools.product((0, 1), repeat=len(x)):
        counts[datum.element([s for s, bit in zip(x, eps) if bit])] += 1
    return counts


def hom_rank_predicted(datum: RootDatum, x: Sequence[int], y: Sequence[int]) -> int:
    mx, my = subsequence_products(datum, x), subsequence_products(datum, y)
    return sum(m * my[w] for w, m in mx.items())


@dataclass
class HomRankReport:
    x: BSWord
    y: BSWord
    predicted: int
    computed: list[tuple[int, int]] = field(default_factory=list)
    collisions: int = 0

    @property
    def agreed(self) -> bool:
        return bool(self.computed) and all(n == self.predicted for _, n in self.computed)

    def to_json(self) -> dict:
        return {
            "x": [s + 1 for s in self.x],
            "y": [s + 1 for s in self.y],
            "predicted": self.predicted,
            "trials": [{"seed": s, "nullity": n} for s, n in self.computed],
            "agreed": self.agreed,
        }

    @classmethod
    def from_json(cls, data: dict) -> HomRankReport:
        return cls(
            tuple(s - 1 for s in data["x"]),
            tuple(s - 1 for s in data["y"]),
            data["predicted"],
            [(t["seed"], t["nullity"]) for t in data["trials"]],
        )


# --------------------------------------------------------------------------
# Specialisation
# --------------------------------------------------------------------------

def trial_seed(seed: int, trial: int) -> int:
    return seed * 1000 + trial


def _separates(datum: RootDatum, point: Sequence[int]) -> bool:
    """Whether the W-translates of ``point`` are pairwise distinct."""
    spec = Specializer(point)
    seen = set()
    for w in datum:
        key = tuple(spec(weyl_act_poly(w, monomial(datum.fundamental_weight(i)))) for i in range(datum.rank))
        if key in seen:
            return False
        seen.add(key)
    return True


def specialization_point(datum: RootDatum, stream_seed: int) -> tuple[list[int], int]:
    """Distinct primes drawn from a seeded stream, redrawn on collisions.

    Returns the point and the number of rejected draws.
    """
    rng = random.Random(stream_seed)
    rejected = 0
    while True:
        point = rng.sample(PRIMES, datum.rank)
        if _separates(datum, point):
            return point, rejected
        rejected += 1


def _specialize_matrix(spec: Specializer, m) -> list[list[Fraction]]:
    return [[spec(a) if a else Fraction(0) for a in row] for row in m]


def _commutant_rows(a_mats, b_mats, nx: int, ny: int) -> list[list[Fraction]]:
    # unknown M is ny x nx, variable index a*nx + b; one row per (generator, a, c)
    # for the entry (M A - B M)[a][c]
    rows = []
    for A, B in zip(a_mats, b_mats):
        for a in range(ny):
            for c in range(nx):
                row = [Fraction(0)] * (nx * ny)
                for b in range(nx):
                    if A[b][c]:
                        row[a * nx + b] += A[b][c]
                for d in range(ny):
                    if B[a][d]:
                        row[d * nx + c] -= B[a][d]
                rows.append(row)
    return rows


def balanced_generators(datum: RootDatum) -> list[LaurentPoly]:
    """Generators of R as an algebra over R^W: Steinberg basis plus the
    fundamental characters, which generate R^W."""
    sd = steinberg(datum)
    chars = [irr_character(datum, datum.fundamental_weight(i)) for i in range(datum.rank)]
    return list(sd.basis) + chars


def commutant_nullity(datum: RootDatum, x: BSWord, y: BSWord, point: Sequence[int],
                      generators: Sequence[LaurentPoly] | None = None) -> int:
    gens = ring_generators(datum) if generators is None else generators
    spec = Specializer(point)
    a_mats = [_specialize_matrix(spec, right_mul_matrix(datum, x, r)) for r in gens]
    b_mats = [_specialize_matrix(spec, right_mul_matrix(datum, y, r)) for r in gens]
    nx, ny = 2 ** len(x), 2 ** len(y)
    return nullity(_commutant_rows(a_mats, b_mats, nx, ny), nx * ny)


def hom_rank_specialized(datum: RootDatum, x: Sequence[int], y: Sequence[int], seed: int = 0,
                         trials: int = 3, budget: int = DEFAULT_BUDGET,
                         generators: str = "ring") -> HomRankReport:
    """Commutant dimension at ``trials`` seeded prime specialisations.

    ``generators="ring"`` intertwines right multiplication by ``e^{+-w_i}``
    (Hom over R (x) R); ``generators="balanced"`` uses generators of R over
    R^W (Hom over R (x)_{R^W} R).
    """
    x, y = tuple(x), tuple(y)
    for s in x + y:
        datum.check_index(s)
    if len(x) + len(y) > budget:
        raise BudgetExceeded(f"|x| + |y| = {len(x) + len(y)} exceeds budget {budget}")
    if trials < 1:
        raise ValueError("trials must be positive")
    if generators == "ring":
        gens = ring_generators(datum)
    elif generators == "balanced":
        gens = balanced_generators(datum)
    else:
        raise ValueError(f"unknown generator set {generators!r}")
    report = HomRankReport(x, y, hom_rank_predicted(datum, x, y))
    for t in range(trials):
        ts = trial_seed(seed, t)
        point, rejected = specialization_point(datum, ts)
        report.collisions += rejected
        report.computed.append((ts, commutant_nullity(datum, x, y, point, gens)))
    return report


def hom_to_twisted_rank(datum: RootDatum, w: WeylElement, seed: int = 0, trials: int = 3) -> int:
    """Generic rank of ``Hom(R, R_w)``: ``f`` with ``f (r - w(r)) = 0``.

    Minimum over the trial specialisations (a special point can only raise
    the nullity).
    """
    best = None
    for t in range(trials):
        point, _ = specialization_point(datum, trial_seed(seed, t))
        spec = Specializer(point)
        rows = [[spec(r - weyl_act_poly(w, r))] for r in ring_generators(datum)]
        n = nullity(rows, 1)
        best = n if best is None else min(best, n)
    return best


# --------------------------------------------------------------------------
# Generated morphisms
# --------------------------------------------------------------------------

def _layers(datum: RootDatum, z: BSWord, max_length: int):
    """Every generator placed at every position of ``z``, padded by identities."""
    out = []
    for p in range(len(z) + 1):
        left, right = z[:p], z[p:]
        cands = []
        if len(z) < max_length:
            cands += [GENERATORS["unit"](datum, s) for s in range(datum.rank)]
        if right:
            s = right[0]
            cands.append(GENERATORS["counit"](datum, s))
            if len(z) < max_length:
                cands.append(GENERATORS["comult"](datum, s))
            if len(right) > 1 and right[1] == s:
                cands.append(GENERATORS["mult"](datum, s))
        for g in cands:
            rest = right[len(g.source):]
            m = morphism_tensor(datum, identity_morphism(datum, left), g)
            m = morphism_tensor(datum, m, identity_morphism(datum, rest))
            out.append(m)
    return out


def generate_hom(datum: RootDatum, x: Sequence[int], y: Sequence[int], depth: int,
                 max_length: int | None = None) -> list[BimoduleMorphism]:
    """Morphisms ``B(x) -> B(y)`` built from identities and the four Frobenius
    structure maps by at most ``depth`` successive compositions.

    Intermediate words are capped at ``max_length`` letters (default one more
    than the longer of ``x`` and ``y``); duplicates are removed by matrix.
    """
    x, y = tuple(x), tuple(y)
    if depth < 1:
        raise ValueError("depth must be positive")
    if max_length is None:
        max_length = max(len(x), len(y)) + 1
    layer_cache: dict[BSWord, list] = {}
    frontier = [identity_morphism(datum, x)]
    seen = {(x, frontier[0].matrix)}
    found = [frontier[0]] if x == y else []
    for _ in range(depth):
        nxt = []
        for phi in frontier:
            layers = layer_cache.get(phi.target)
            if layers is None:
                layers = layer_cache[phi.target] = _layers(datum, phi.target, max_length)
            for layer in layers:
                psi = morphism_compose(layer, phi)
                key = (psi.target, psi.matrix)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(psi)
                if psi.target == y:
                    found.append(psi)
                if len(seen) > MAX_GENERATED:
                    raise BudgetExceeded(f"more than {MAX_GENERATED} generated morphisms")
        frontier = nxt
    for m in found:
        if not is_bimodule_map(datum, m):
            raise AssertionError("generated morphism is not a bimodule map")
    return found


def span_rank(datum: RootDatum, ms: Sequence[BimoduleMorphism], seed: int = 0, trials: int = 3) -> int:
    """Left R-rank of the span of ``ms``, via rank of specialised coefficients."""
    if not ms:
        return 0
    shape = (ms[0].source, ms[0].target)
    if any((m.source, m.target) != shape for m in ms):
        raise ShapeMismatch("span_rank needs morphisms with a common source and target")
    best = None
    for t in range(trials):
        point, _ = specialization_point(datum, trial_seed(seed, t))
        spec = Specializer(point)
        rows = [[spec(a) if a else 0 for row in m.matrix for a in row] for m in ms]
        r = rank(rows)
        best = r if best is None else min(best, r)
    return best


def bs_square_idempotents(datum: RootDatum, s: int) -> tuple[BimoduleMorphism, BimoduleMorphism]:
    """``e = comult o mult`` on ``B(s, s)`` and its complement ``id - e``."""
    e = morphism_compose(GENERATORS["comult"](datum, s), GENERATORS["mult"](datum, s))
    return e, identity_morphism(datum, (s, s)) - e


def specialized_rank(datum: RootDatum, f: BimoduleMorphism, seed: int = 0) -> int:
    point, _ = specialization_point(datum, trial_seed(seed, 0))
    return rank(_specialize_matrix(Specializer(point), f.matrix))
