"""Finite root data of simply connected semisimple type and their Weyl groups.

Weights are integer tuples in the fundamental-weight basis, so that
``weight[i]`` is the pairing of the weight with the i-th simple coroot.  The
Cartan matrix is stored with ``cartan[i][j] = <alpha_i^vee, alpha_j>``; the
simple root ``alpha_j`` is therefore column ``j`` of the Cartan matrix.

Generator indices are 0-based throughout the Python API.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import (
    IndexOutOfRange,
    MalformedCartan,
    NotFiniteType,
    RankMismatch,
    UnknownType,
)

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

MAX_WEYL_ORDER = 10**6
MAX_POSITIVE_ROOTS = 10**4


# --------------------------------------------------------------------------
# Cartan matrices of the irreducible finite types (Bourbaki labelling)
# --------------------------------------------------------------------------

def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _cartan_irreducible(letter: str, n: int) -> list[list[int]]:
    if letter == "A" and n >= 1:
        return _chain(n)
    if letter == "B" and n >= 2:
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if letter == "C" and n >= 2:
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if letter == "D" and n >= 4:
        c = _chain(n - 1) + [[0] * (n - 1)]
        for row in c:
            row.append(0)
        c[n - 1][n - 1] = 2
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        return c
    if letter == "E" and n in (6, 7, 8):
        # nodes 1-3-4-5-6-7-8 form a chain, node 2 hangs off node 4
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        for i, j in edges:
            c[i][j] = c[j][i] = -1
        return c
    if letter == "F" and n == 4:
        c = _chain(4)
        c[2][1] = -2
        return c
    if letter == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise UnknownType(f"unknown Cartan type {letter}{n}")


def block_diagonal(blocks: Sequence[Sequence[Sequence[int]]]) -> list[list[int]]:
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[offset + i][offset + j] = v
        offset += len(b)
    return out


_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


def cartan_matrix(label: str) -> list[list[int]]:
    """Cartan matrix for a label such as ``"B2"`` or ``"A1xA1"``."""
    blocks = []
    for part in label.replace("×", "x").split("x"):
        m = _TYPE_RE.match(part.strip())
        if not m:
            raise UnknownType(f"cannot parse type label {label!r}")
        blocks.append(_cartan_irreducible(m.group(1), int(m.group(2))))
    return block_diagonal(blocks)


def validate_cartan(cartan: Sequence[Sequence[int]]) -> Matrix:
    n = len(cartan)
    if n == 0:
        raise MalformedCartan("empty Cartan matrix")
    rows = []
    for row in cartan:
        if len(row) != n:
            raise MalformedCartan("Cartan matrix must be square")
        if any(not isinstance(v, int) or isinstance(v, bool) for v in row):
            raise MalformedCartan("Cartan entries must be integers")
        rows.append(tuple(row))
    for i in range(n):
        if rows[i][i] != 2:
            raise MalformedCartan(f"diagonal entry ({i},{i}) is {rows[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise MalformedCartan(f"off-diagonal entry ({i},{j}) is positive")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise MalformedCartan(f"entries ({i},{j}) and ({j},{i}) must vanish together")
    return tuple(rows)


# --------------------------------------------------------------------------
# Weyl group elements and the root datum
# --------------------------------------------------------------------------

def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _apply(m: Matrix, v: Sequence[int]) -> Weight:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element with its ShortLex-minimal reduced word.

    ``matrix`` acts on weight coordinates (column vectors); it is the product
    of the simple reflection matrices along ``word``.
    """

    word: tuple[int, ...]
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def is_identity(self) -> bool:
        return not self.word

    def label(self, base: int = 1) -> str:
        return ",".join(str(i + base) for i in self.word) if self.word else "e"

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.word)


@dataclass(frozen=True)
class RootDatum:
    cartan: Matrix
    label: str | None = None

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def check_index(self, s: int) -> None:
        if not isinstance(s, int) or not 0 <= s < self.rank:
            raise IndexOutOfRange(f"generator index {s} out of range for rank {self.rank}")

    def check_weight(self, weight: Sequence[int]) -> None:
        if len(weight) != self.rank:
            raise RankMismatch(f"weight {tuple(weight)} has length {len(weight)}, rank is {self.rank}")

    def simple_root(self, i: int) -> Weight:
        self.check_index(i)
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        self.check_index(i)
        return tuple(1 if k == i else 0 for k in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def zero_weight(self) -> Weight:
        return (0,) * self.rank

    def alpha_to_weight(self, coeffs: Sequence[int]) -> Weight:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        n = self.rank
        return tuple(sum(self.cartan[i][j] * coeffs[j] for j in range(n)) for i in range(n))

    # -- roots -----------------------------------------------------------

    @cached_property
    def positive_roots_alpha(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates; simple roots first."""
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        found = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                if beta == simple[i]:
                    continue
                k = sum(beta[j] * self.cartan[i][j] for j in range(n))
                gamma = tuple(beta[j] - (k if j == i else 0) for j in range(n))
                if min(gamma) < 0:
                    raise NotFiniteType("simple reflection produced a mixed-sign root")
                if gamma not in found:
                    found.add(gamma)
                    queue.append(gamma)
                    if len(found) > MAX_POSITIVE_ROOTS:
                        raise NotFiniteType("positive root generation exceeded bound")
        rest = sorted(found - set(simple), key=lambda c: (sum(c), c))
        return tuple(simple) + tuple(rest)

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(self.alpha_to_weight(c) for c in self.positive_roots_alpha)

    @cached_property
    def _positive_set(self) -> frozenset[Weight]:
        return frozenset(self.positive_roots)

    def is_positive_root(self, weight: Weight) -> bool:
        return weight in self._positive_set

    def is_negative_root(self, weight: Weight) -> bool:
        return tuple(-v for v in weight) in self._positive_set

    # -- Weyl group ------------------------------------------------------

    @cached_property
    def reflection_matrices(self) -> tuple[Matrix, ...]:
        n = self.rank
        mats = []
        for i in range(n):
            # s_i(lam) = lam - lam[i] * alpha_i
            mats.append(tuple(
                tuple((1 if r == c else 0) - (self.cartan[r][i] if c == i else 0) for c in range(n))
                for r in range(n)
            ))
        return tuple(mats)

    @cached_property
    def _elements(self) -> tuple[WeylElement, ...]:
        # Level-by-level BFS; processing each level in ShortLex order of the
        # words and appending generators in index order hits every element
        # first through its ShortLex-minimal reduced word.
        self.positive_roots_alpha  # finite-type check before enumerating W
        n = self.rank
        ident = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
        seen = {ident: ()}
        level = [((), ident)]
        out = [WeylElement((), ident)]
        while level:
            nxt = []
            for word, mat in level:
                for i in range(n):
                    m2 = _matmul(mat, self.reflection_matrices[i])
                    if m2 not in seen:
                        w2 = word + (i,)
                        seen[m2] = w2
                        nxt.append((w2, m2))
                        out.append(WeylElement(w2, m2))
                        if len(out) > MAX_WEYL_ORDER:
                            raise NotFiniteType("Weyl group generation exceeded bound")
            level = nxt
        return tuple(out)

    @cached_property
    def _by_matrix(self) -> dict[Matrix, WeylElement]:
        return {w.matrix: w for w in self._elements}

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def identity(self) -> WeylElement:
        return self._elements[0]

    @cached_property
    def longest(self) -> WeylElement:
        top = max(w.length for w in self._elements)
        return next(w for w in self._elements if w.length == top)

    def simple(self, i: int) -> WeylElement:
        self.check_index(i)
        return self._by_matrix[self.reflection_matrices[i]]

    def from_matrix(self, matrix: Matrix) -> WeylElement:
        return self._by_matrix[matrix]

    def element(self, word: Sequence[int]) -> WeylElement:
        """Canonical element for an arbitrary (not necessarily reduced) word."""
        n = self.rank
        mat = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
        for i in word:
            self.check_index(i)
            mat = _matmul(mat, self.reflection_matrices[i])
        return self._by_matrix[mat]

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self._by_matrix[_matmul(u.matrix, v.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.element(tuple(reversed(w.word)))

    def right_descents(self, w: WeylElement) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.is_negative_root(_apply(w.matrix, self.simple_root(i))))

    def reduced_words(self, w: WeylElement) -> list[tuple[int, ...]]:
        """All reduced words of ``w``, sorted lexicographically."""
        if w.is_identity():
            return [()]
        words = []
        for i in self.right_descents(w):
            shorter = self.multiply(w, self.simple(i))
            words.extend(u + (i,) for u in self.reduced_words(shorter))
        return sorted(words)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self._elements)

    def __repr__(self) -> str:
        name = self.label or f"cartan={[list(r) for r in self.cartan]}"
        return f"RootDatum({name})"


# --------------------------------------------------------------------------
# Public operations
# --------------------------------------------------------------------------

def build_root_datum(spec: str | Sequence[Sequence[int]] | dict) -> RootDatum:
    """Build a root datum from a type label, a Cartan matrix, or its JSON form.

    >>> d = build_root_datum("A2")
    >>> d.cartan, len(d.positive_roots), d.order
    (((2, -1), (-1, 2)), 3, 6)
    """
    if isinstance(spec, dict):
        if "type" in spec:
            return build_root_datum(spec["type"])
        if "cartan" in spec:
            return build_root_datum(spec["cartan"])
        raise MalformedCartan("JSON root datum needs a 'type' or 'cartan' key")
    if isinstance(spec, str):
        label = spec.strip().upper().replace("×", "X").replace("X", "x")
        datum = RootDatum(validate_cartan(cartan_matrix(label)), label)
    else:
        datum = RootDatum(validate_cartan(spec))
    datum._elements  # constructive finite-type check
    return datum


def simple_reflect(datum: RootDatum, s: int, weight: Sequence[int]) -> Weight:
    datum.check_index(s)
    datum.check_weight(weight)
    k = weight[s]
    return tuple(weight[r] - k * datum.cartan[r][s] for r in range(datum.rank))


def weyl_group(datum: RootDatum) -> list[WeylElement]:
    """All elements in ShortLex order of their canonical words."""
    return sorted(datum, key=lambda w: (w.length, w.word))


def weyl_act(w: WeylElement, weight: Sequence[int]) -> Weight:
    if len(weight) != w.rank:
        raise RankMismatch(f"weight of length {len(weight)} acted on by rank-{w.rank} element")
    return _apply(w.matrix, weight)


def dot_act(w: WeylElement, weight: Sequence[int]) -> Weight:
    """Affine action ``w(lam + rho) - rho`` with ``rho`` the all-ones vector."""
    if len(weight) != w.rank:
        raise RankMismatch(f"weight of length {len(weight)} acted on by rank-{w.rank} element")
    shifted = _apply(w.matrix, [v + 1 for v in weight])
    return tuple(v - 1 for v in shifted)


def cell_characters(datum: RootDatum, w: WeylElement) -> frozenset[Weight]:
    """Torus characters of the Bruhat cell of ``w``: positive roots sent to
    negative roots by ``w^-1``."""
    out = set()
    for beta in datum.positive_roots:
        image = _apply(w.matrix, [-v for v in beta])
        if datum.is_positive_root(image):
            out.add(image)
    return frozenset(out)
