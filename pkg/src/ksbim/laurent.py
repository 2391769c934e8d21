"""Exact multivariate Laurent polynomials: the representation ring of a torus.

A ``LaurentPoly`` maps integer exponent vectors (weights in fundamental-weight
coordinates) to exact rational coefficients.  Coefficients are normalised to
``int`` when integral and ``Fraction`` otherwise; zero coefficients are never
stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DivisionByZero,
    InexactDivision,
    ParseError,
    RankMismatch,
    ZeroSpecializationEntry,
)
from .root_datum import RootDatum, Weight, WeylElement, weyl_act

Rational = Union[int, Fraction]


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Weight, Rational] | Iterable[tuple[Weight, Rational]] = ()):
        self.rank = rank
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, Rational] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != rank:
                raise RankMismatch(f"exponent {exp} does not have length {rank}")
            acc[exp] = acc.get(exp, 0) + c
        self._terms = {e: _norm(c) for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict[Weight, Rational]) -> LaurentPoly:
        # trusted constructor: terms already normalised and zero-free
        p = cls.__new__(cls)
        p.rank = rank
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> LaurentPoly:
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank: int) -> LaurentPoly:
        return cls._raw(rank, {(0,) * rank: 1})

    @classmethod
    def constant(cls, rank: int, c: Rational) -> LaurentPoly:
        return monomial((0,) * rank, c)

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict[Weight, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: Sequence[int]) -> Rational:
        return self._terms.get(tuple(exp), 0)

    def sorted_terms(self, descending: bool = True) -> list[tuple[Weight, Rational]]:
        return sorted(self._terms.items(), reverse=descending)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading(self) -> tuple[Weight, Rational]:
        """Lexicographically largest term."""
        e = max(self._terms)
        return e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.rank: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.rank != self.rank:
                raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.rank, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Weight, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.rank, {e: _norm(c) for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def scale(self, c: Rational) -> LaurentPoly:
        if c == 0:
            return LaurentPoly.zero(self.rank)
        return LaurentPoly._raw(self.rank, {e: _norm(v * c) for e, v in self._terms.items()})

    def shift(self, weight: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial ``e^weight``."""
        return LaurentPoly._raw(
            self.rank, {tuple(a + b for a, b in zip(e, weight)): c for e, c in self._terms.items()}
        )

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("only monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.rank, {tuple(k * v for v in e): _norm(Fraction(c) ** k)})
        out = LaurentPoly.one(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def to_json(self) -> dict:
        out = []
        for e, c in self.sorted_terms():
            c = Fraction(c)
            out.append({"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)})
        return {"terms": out}

    @classmethod
    def from_json(cls, data: Mapping, rank: int | None = None) -> LaurentPoly:
        terms = data["terms"]
        if rank is None:
            if not terms:
                raise ParseError("rank of an empty polynomial must be given")
            rank = len(terms[0]["exp"])
        return cls(rank, [(tuple(t["exp"]), Fraction(int(t["num"]), int(t["den"]))) for t in terms])


# --------------------------------------------------------------------------
# Public operations
# --------------------------------------------------------------------------

def monomial(weight: Sequence[int], c: Rational = 1) -> LaurentPoly:
    """``c * e^weight``; the zero polynomial when ``c == 0``."""
    weight = tuple(weight)
    if c == 0:
        return LaurentPoly._raw(len(weight), {})
    return LaurentPoly._raw(len(weight), {weight: _norm(c)})


def weyl_act_poly(w: WeylElement, f: LaurentPoly) -> LaurentPoly:
    if f.rank != w.rank:
        raise RankMismatch(f"rank-{w.rank} element acting on rank-{f.rank} polynomial")
    return LaurentPoly._raw(f.rank, {weyl_act(w, e): c for e, c in f.items()})


def simple_reflect_poly(datum: RootDatum, s: int, f: LaurentPoly) -> LaurentPoly:
    datum.check_index(s)
    if f.rank != datum.rank:
        raise RankMismatch(f"rank-{datum.rank} datum acting on rank-{f.rank} polynomial")
    col = [datum.cartan[r][s] for r in range(datum.rank)]
    return LaurentPoly._raw(
        f.rank, {tuple(v - e[s] * a for v, a in zip(e, col)): c for e, c in f.items()}
    )


def is_invariant(datum: RootDatum, f: LaurentPoly, gens: Iterable[int] | None = None) -> bool:
    """Whether ``f`` is fixed by the listed simple reflections (all if ``None``)."""
    gens = range(datum.rank) if gens is None else gens
    return all(simple_reflect_poly(datum, s, f) == f for s in gens)


def _exponent_box(f: LaurentPoly) -> tuple[list[int], list[int]]:
    exps = list(f._terms)
    cols = list(zip(*exps))
    return [min(c) for c in cols], [max(c) for c in cols]


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``q * g == f``; raises ``InexactDivision`` otherwise.

    Long division by leading terms in lexicographic order.  A quotient must
    have its Newton polytope equal to ``Newt(f) - Newt(g)``, so every quotient
    term lies in a coordinate box fixed in advance; leaving that box proves
    the division inexact, which also makes the loop terminate.
    """
    g = f._coerce(g)
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(f.rank)
    if g.is_monomial():
        (e, c), = g.items()
        q = f.shift([-v for v in e]).scale(Fraction(1) / Fraction(c))
        return q
    fmin, fmax = _exponent_box(f)
    gmin, gmax = _exponent_box(g)
    lo = [a - b for a, b in zip(fmin, gmin)]
    hi = [a - b for a, b in zip(fmax, gmax)]
    if any(a > b for a, b in zip(lo, hi)):
        raise InexactDivision(f"({f}) is not divisible by ({g})")
    g_lead, g_c = g.leading()
    g_terms = list(g.items())
    rem = dict(f._terms)
    quot: dict[Weight, Rational] = {}
    while rem:
        r_lead = max(rem)
        t = tuple(a - b for a, b in zip(r_lead, g_lead))
        if any(v < a or v > b for v, a, b in zip(t, lo, hi)):
            raise InexactDivision(f"({f}) is not divisible by ({g})")
        c = _norm(Fraction(rem[r_lead]) / g_c)
        quot[t] = c
        for e, gc in g_terms:
            key = tuple(a + b for a, b in zip(t, e))
            v = rem.get(key, 0) - c * gc
            if v:
                rem[key] = _norm(v)
            else:
                rem.pop(key, None)
    q = LaurentPoly._raw(f.rank, quot)
    if q * g != f:
        raise InexactDivision("verification multiply failed")
    return q


def specialize(f: LaurentPoly, point: Sequence[Rational]) -> Fraction:
    """Evaluate at a point with nonzero rational coordinates."""
    if len(point) != f.rank:
        raise RankMismatch(f"point of length {len(point)} for rank-{f.rank} polynomial")
    point = [Fraction(p) for p in point]
    if any(p == 0 for p in point):
        raise ZeroSpecializationEntry("specialization entries must be nonzero")
    total = Fraction(0)
    for e, c in f.items():
        term = Fraction(c)
        for p, k in zip(point, e):
            if k:
                term *= p ** k
        total += term
    return total


class Specializer:
    """Evaluate many polynomials at one point, caching monomial values."""

    def __init__(self, point: Sequence[Rational]):
        self.point = [Fraction(p) for p in point]
        if any(p == 0 for p in self.point):
            raise ZeroSpecializationEntry("specialization entries must be nonzero")
        self._mono: dict[Weight, Fraction] = {}

    def __call__(self, f: LaurentPoly) -> Fraction:
        if len(self.point) != f.rank:
            raise RankMismatch(f"point of length {len(self.point)} for rank-{f.rank} polynomial")
        total = Fraction(0)
        for e, c in f.items():
            v = self._mono.get(e)
            if v is None:
                v = Fraction(1)
                for p, k in zip(self.point, e):
                    if k:
                        v *= p ** k
                self._mono[e] = v
            total += c * v
        return total


# --------------------------------------------------------------------------
# Text format
# --------------------------------------------------------------------------

def variable_names(rank: int) -> list[str]:
    return ["x"] if rank == 1 else [f"x{i + 1}" for i in range(rank)]


def format_poly(f: LaurentPoly) -> str:
    """Render with terms in descending lexicographic exponent order.

    >>> format_poly(LaurentPoly(1, {(1,): 1, (-1,): 1}))
    'x + x^-1'
    """
    if f.is_zero():
        return "0"
    names = variable_names(f.rank)
    parts = []
    for e, c in f.sorted_terms():
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


_FACTOR_RE = re.compile(r"^(x\d*)(?:\^(-?\d+))?$")


def parse_poly(text: str, rank: int) -> LaurentPoly:
    """Parse the text rendering produced by ``format_poly``."""
    names = variable_names(rank)
    index = {n: i for i, n in enumerate(names)}
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    # split on +/- that are not exponent signs
    tokens = re.split(r"(?<!\^)([+-])", s)
    terms: list[tuple[Weight, Rational]] = []
    sign = 1
    pending = None
    for tok in tokens:
        if tok == "":
            continue
        if tok in "+-":
            if pending is not None or (tok == "+" and not terms):
                raise ParseError(f"misplaced {tok!r} in {text!r}")
            pending = tok
            sign = -1 if tok == "-" else 1
            continue
        if terms and pending is None:
            raise ParseError(f"missing operator before {tok!r}")
        pending = None
        coeff: Rational = 1
        exp = [0] * rank
        for factor in tok.split("*"):
            if not factor:
                raise ParseError(f"malformed term {tok!r}")
            m = _FACTOR_RE.match(factor)
            if m:
                if m.group(1) not in index:
                    raise ParseError(f"unknown variable {m.group(1)!r} for rank {rank}")
                exp[index[m.group(1)]] += int(m.group(2) or 1)
                continue
            try:
                coeff *= Fraction(factor)
            except ValueError:
                raise ParseError(f"cannot parse factor {factor!r}") from None
        terms.append((tuple(exp), sign * coeff))
        sign = 1
    if pending is not None or not terms:
        raise ParseError(f"dangling operator in {text!r}")
    return LaurentPoly(rank, terms)
