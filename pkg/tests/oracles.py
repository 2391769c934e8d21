"""Independent oracles used to freeze and re-derive expected values.

None of these go through the code path they check: Weyl groups are built by
plain matrix closure, Demazure operators by polynomial division in sympy,
dimensions by the Weyl product formula over an invariant bilinear form.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy as sp

from ksbim.laurent import LaurentPoly


def reflection_matrices(cartan):
    n = len(cartan)
    return [
        sp.Matrix(n, n, lambda r, c: (1 if r == c else 0) - (cartan[r][i] if c == i else 0))
        for i in range(n)
    ]


def weyl_closure(cartan):
    """All Weyl group matrices by naive closure under right multiplication."""
    gens = reflection_matrices(cartan)
    n = len(cartan)
    ident = sp.eye(n)
    key = lambda m: tuple(m)
    seen = {key(ident): ident}
    todo = [ident]
    while todo:
        m = todo.pop()
        for g in gens:
            p = m * g
            if key(p) not in seen:
                seen[key(p)] = p
                todo.append(p)
    return list(seen.values())


def positive_roots_by_orbit(cartan):
    """Positive roots in fundamental-weight coordinates: W-orbit of the simple
    roots, filtered by sign of the simple-root coordinates."""
    n = len(cartan)
    C = sp.Matrix(cartan)
    simple = [C[:, i] for i in range(n)]
    roots = set()
    for w in weyl_closure(cartan):
        for a in simple:
            roots.add(tuple(w * a))
    Cinv = C.inv()
    return {r for r in roots if all(v >= 0 for v in Cinv * sp.Matrix(r))}


def reduced_words_brute(cartan, target_matrix, length):
    """All words of the given length whose product is the target matrix."""
    gens = reflection_matrices(cartan)
    n = len(cartan)
    out = []
    for word in itertools.product(range(n), repeat=length):
        m = sp.eye(n)
        for i in word:
            m = m * gens[i]
        if m == target_matrix:
            out.append(word)
    return out


# -- sympy bridge -------------------------------------------------------------

def symbols(rank):
    return sp.symbols(f"x1:{rank + 1}")


def to_sympy(f: LaurentPoly):
    xs = symbols(f.rank)
    return sum(
        (sp.Rational(Fraction(c).numerator, Fraction(c).denominator) * sp.Mul(*[x**k for x, k in zip(xs, e)])
         for e, c in f.items()),
        sp.Integer(0),
    )


def from_sympy(expr, rank) -> LaurentPoly:
    xs = symbols(rank)
    expr = sp.expand(expr)
    terms = {}
    for term in sp.Add.make_args(expr):
        if term == 0:
            continue
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        exp = tuple(int(powers.get(x, 0)) for x in xs)
        terms[exp] = terms.get(exp, 0) + Fraction(int(coeff.p), int(coeff.q))
    return LaurentPoly(rank, terms)


def demazure_by_division(cartan, s, f: LaurentPoly) -> LaurentPoly:
    """``(f - e^{-a_s} s(f)) / (1 - e^{-a_s})`` with sympy cancellation.

    On ``e^lam`` the numerator is ``e^lam - e^{s.lam}`` because
    ``s.lam = s(lam) - a_s``.
    """
    n = len(cartan)
    xs = symbols(n)
    alpha = [cartan[r][s] for r in range(n)]
    num = sp.Integer(0)
    for e, c in f.items():
        sl = [e[r] - (e[s] + 1) * alpha[r] for r in range(n)]
        mono = sp.Mul(*[x**k for x, k in zip(xs, e)])
        mono2 = sp.Mul(*[x**k for x, k in zip(xs, sl)])
        num += sp.Rational(Fraction(c).numerator, Fraction(c).denominator) * (mono - mono2)
    den = 1 - sp.Mul(*[x ** (-a) for x, a in zip(xs, alpha)])
    q = sp.cancel(sp.together(num / den))
    return from_sympy(q, n)


def symmetrizer(cartan):
    """``d_i`` with ``d_i C_ij = d_j C_ji`` (so ``(a_i, a_j) = d_i C_ij``)."""
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
    return d


def weyl_dimension_formula(cartan, weight):
    """``prod_{a>0} <lam + rho, a^vee> / <rho, a^vee>`` via the invariant form."""
    n = len(cartan)
    d = symmetrizer(cartan)
    C = sp.Matrix(cartan)
    num = Fraction(1)
    den = Fraction(1)
    for beta in positive_roots_by_orbit(cartan):
        c = [Fraction(int(v.p), int(v.q)) for v in C.inv() * sp.Matrix(beta)]
        norm = sum(c[i] * d[i] * cartan[i][j] * c[j] for i in range(n) for j in range(n))

        def pair(lam):
            return 2 * sum(c[j] * d[j] * lam[j] for j in range(n)) / norm

        num *= pair([v + 1 for v in weight])
        den *= pair([1] * n)
    return num / den


def sympy_rank(rows):
    if not rows:
        return 0
    return sp.Matrix([[sp.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in r] for r in rows]).rank()


# -- random inputs -------------------------------------------------------------

def random_poly(rng: random.Random, rank: int, terms: int = 4, spread: int = 3, coeff: int = 3) -> LaurentPoly:
    out = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(-spread, spread) for _ in range(rank))
        out[e] = out.get(e, 0) + rng.choice([c for c in range(-coeff, coeff + 1) if c])
    return LaurentPoly(rank, out)


def random_monomial(rng: random.Random, rank: int, spread: int = 3) -> LaurentPoly:
    e = tuple(rng.randint(-spread, spread) for _ in range(rank))
    return LaurentPoly(rank, {e: 1})
