"""Finite root systems from Cartan data, and Weyl group elements.

Cartan convention: ``A[i][j] = <beta_j, h_i>``, the value of the simple
coroot ``h_i`` on the simple root ``beta_j``.  Simple roots are indexed from
0 in the Python API and from 1 in every text form (``s1``, ``x1``, ``q1``).

Roots and weights are coordinate vectors in the simple-root basis.  A Weyl
group element is stored as its integer action matrix on those coordinates, so
equality of elements is equality of matrices.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

from .errors import NonFiniteType, NotARoot, RankGuardError

DEFAULT_MAX_RANK = 8
DEFAULT_MAX_ORDER = 10**6

Root = tuple  # tuple[int, ...]
Matrix = tuple  # tuple[tuple[int, ...], ...]


def _det(rows) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def _inverse(rows) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class CartanData:
    """A Cartan matrix of finite type together with its symmetrizer."""

    matrix: Matrix
    symmetrizer: tuple = ()

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.matrix)
        m = len(a)
        if m == 0 or any(len(row) != m for row in a):
            raise NonFiniteType("Cartan matrix must be square and nonempty")
        for i in range(m):
            if a[i][i] != 2:
                raise NonFiniteType(f"diagonal entry A[{i}][{i}] must be 2")
            for j in range(m):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    raise NonFiniteType(f"bad off-diagonal pair at ({i}, {j})")
        object.__setattr__(self, "matrix", a)
        d = tuple(self.symmetrizer) or _symmetrizer(a)
        if len(d) != m or any(x <= 0 for x in d):
            raise NonFiniteType("symmetrizer must have m positive entries")
        b = [[d[i] * a[i][j] for j in range(m)] for i in range(m)]
        if any(b[i][j] != b[j][i] for i in range(m) for j in range(m)):
            raise NonFiniteType("D*A is not symmetric")
        for k in range(1, m + 1):
            if _det([row[:k] for row in b[:k]]) <= 0:
                raise NonFiniteType("symmetrized Cartan matrix is not positive definite")
        object.__setattr__(self, "symmetrizer", tuple(int(x) for x in d))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @cached_property
    def bilinear(self) -> Matrix:
        """Gram matrix ``(beta_i, beta_j) = D_i A[i][j]``."""
        d, a = self.symmetrizer, self.matrix
        return tuple(tuple(d[i] * a[i][j] for j in range(self.rank)) for i in range(self.rank))

    def to_json(self):
        return [list(r) for r in self.matrix]


def _symmetrizer(a) -> tuple:
    m = len(a)
    d: list = [None] * m
    for start in range(m):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(m):
                if j == i or a[i][j] == 0:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    queue.append(j)
                elif d[j] != want:
                    raise NonFiniteType("Cartan matrix is not symmetrizable")
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


# -- presets ----------------------------------------------------------------

def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    """Cartan matrix of the given Dynkin type in Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    kind = kind.upper()
    if kind == "A" and n >= 1:
        for i in range(n - 1):
            link(i, i + 1)
    elif kind == "B" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # beta_n short
    elif kind == "C" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # beta_n long
    elif kind == "D" and n >= 4:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif kind == "E" and n in (6, 7, 8):
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif kind == "F" and n == 4:
        link(0, 1)
        link(1, 2, -2, -1)  # beta_1, beta_2 long
        link(2, 3)
    elif kind == "G" and n == 2:
        link(0, 1, -3, -1)  # beta_1 short
    else:
        raise ValueError(f"unknown Dynkin type {kind}{n}")
    return a


PRESETS = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6")


def preset(name: str) -> CartanData:
    name = name.strip().upper()
    if len(name) < 2 or not name[1:].isdigit():
        raise ValueError(f"bad type name {name!r}")
    return CartanData(tuple(map(tuple, cartan_matrix(name[0], int(name[1:])))))


# -- Weyl group elements ----------------------------------------------------

@dataclass(frozen=True)
class WeylElem:
    """Weyl group element, canonical as its action matrix on root coordinates."""

    matrix: Matrix

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        a, b = self.matrix, other.matrix
        n = len(a)
        cols = list(zip(*b))
        return WeylElem(tuple(tuple(sum(x * y for x, y in zip(a[i], cols[j])) for j in range(n))
                              for i in range(n)))

    def apply(self, v: Sequence) -> tuple:
        return tuple(sum(x * y for x, y in zip(row, v)) for row in self.matrix)

    def column(self, i: int) -> tuple:
        """Image of the simple root beta_i."""
        return tuple(row[i] for row in self.matrix)

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row))


def is_positive(v: Sequence) -> bool:
    return any(x > 0 for x in v) and all(x >= 0 for x in v)


def is_negative(v: Sequence) -> bool:
    return any(x < 0 for x in v) and all(x <= 0 for x in v)


def word_name(word: Sequence[int]) -> str:
    """``s2s1`` style name of a word of 0-based indices; ``e`` when empty."""
    return "".join(f"s{i + 1}" for i in word) or "e"


class RootSystem:
    """Roots, coroot pairings and Weyl group operations for a Cartan matrix.

    Build instances through :func:`build_root_system`.
    """

    def __init__(self, cartan: CartanData, positive_roots, weyl_order: int):
        self.cartan = cartan
        self.rank = m = cartan.rank
        self.positive_roots: list[Root] = positive_roots
        self.weyl_order = weyl_order
        self.root_index = {r: k for k, r in enumerate(positive_roots)}
        a = cartan.matrix
        self.simple_reflections = [
            WeylElem(tuple(tuple(int(r == c) - (a[i][c] if r == i else 0) for c in range(m))
                           for r in range(m)))
            for i in range(m)
        ]
        self.identity = WeylElem(tuple(tuple(int(r == c) for c in range(m)) for r in range(m)))
        gram = cartan.bilinear
        d = cartan.symmetrizer
        self.coroot_table: list[tuple] = []
        for alpha in positive_roots:
            norm = sum(alpha[i] * gram[i][j] * alpha[j] for i in range(m) for j in range(m))
            coeffs = []
            for i in range(m):
                num = 2 * alpha[i] * d[i]
                if num % norm:
                    raise NonFiniteType(f"non-integral coroot for {alpha}")
                coeffs.append(num // norm)
            self.coroot_table.append(tuple(coeffs))
        inv = _inverse(a)
        # omega_j = sum_k (A^-1)[k][j] beta_k
        self.fundamental_weights = [tuple(inv[k][j] for k in range(m)) for j in range(m)]
        self.reflections = [self._reflection(k) for k in range(len(positive_roots))]
        self.w0 = self.longest_element()
        self.dynkin_involution = tuple(
            next(j for j in range(m) if self.w0.column(i) == tuple(-int(k == j) for k in range(m)))
            for i in range(m)
        )

    def __repr__(self):
        return f"RootSystem(rank={self.rank}, |Phi+|={len(self.positive_roots)})"

    def _reflection(self, k: int) -> WeylElem:
        alpha, co = self.positive_roots[k], self.coroot_table[k]
        a, m = self.cartan.matrix, self.rank
        # h_alpha(beta_j) = sum_i co_i A[i][j]
        h = [sum(co[i] * a[i][j] for i in range(m)) for j in range(m)]
        return WeylElem(tuple(tuple(int(r == c) - alpha[r] * h[c] for c in range(m))
                              for r in range(m)))

    # -- roots ------------------------------------------------------------

    def index_of(self, alpha: Sequence) -> int:
        try:
            return self.root_index[tuple(alpha)]
        except KeyError:
            raise NotARoot(f"{tuple(alpha)} is not a positive root") from None

    def is_root(self, v: Sequence) -> bool:
        v = tuple(v)
        return v in self.root_index or tuple(-x for x in v) in self.root_index

    def pairing(self, alpha: Sequence, j: int) -> int:
        """h_alpha(omega_j): the j-th coefficient of the coroot of alpha."""
        v = tuple(alpha)
        if v in self.root_index:
            return self.coroot_table[self.root_index[v]][j]
        neg = tuple(-x for x in v)
        if neg in self.root_index:
            return -self.coroot_table[self.root_index[neg]][j]
        raise NotARoot(f"{v} is not a root")

    def height(self, alpha: Sequence) -> int:
        return sum(alpha)

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i) for k in range(self.rank))

    def reflection(self, alpha: Sequence) -> WeylElem:
        """The reflection s_alpha for a positive root alpha."""
        return self.reflections[self.index_of(alpha)]

    # -- Weyl group operations ---------------------------------------------

    def s(self, i: int) -> WeylElem:
        return self.simple_reflections[i]

    def from_word(self, word: Sequence[int]) -> WeylElem:
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i]
        return w

    def multiply(self, u: WeylElem, w: WeylElem) -> WeylElem:
        return u * w

    def inverse(self, w: WeylElem) -> WeylElem:
        return self.from_word(reversed(self.reduced_word(w)))

    def act_on_root(self, w: WeylElem, alpha: Sequence) -> Root:
        return w.apply(alpha)

    def act_on_weight(self, w: WeylElem, lam: Sequence) -> tuple:
        return tuple(sum(x * Fraction(y) for x, y in zip(row, lam)) for row in w.matrix)

    def has_right_descent(self, w: WeylElem, i: int) -> bool:
        """True when l(w s_i) < l(w), i.e. w(beta_i) < 0."""
        return any(row[i] < 0 for row in w.matrix)

    def length(self, w: WeylElem) -> int:
        return sum(1 for alpha in self.positive_roots if is_negative(w.apply(alpha)))

    def reduced_word(self, w: WeylElem) -> tuple:
        """Reduced word (0-based letters) obtained by stripping the smallest
        right descent repeatedly."""
        word = []
        while True:
            i = next((i for i in range(self.rank) if self.has_right_descent(w, i)), None)
            if i is None:
                break
            word.append(i)
            w = w * self.simple_reflections[i]
        return tuple(reversed(word))

    def name(self, w: WeylElem) -> str:
        return word_name(self.reduced_word(w))

    def longest_element(self) -> WeylElem:
        w = self.identity
        while True:
            i = next((i for i in range(self.rank) if not self.has_right_descent(w, i)), None)
            if i is None:
                return w
            w = w * self.simple_reflections[i]

    def bruhat_leq(self, x: WeylElem, y: WeylElem) -> bool:
        """Bruhat order test by the subword property along the reduced word of y.

        For a right descent s of y, x <= y iff min(x, xs) <= ys.
        """
        lx, ly = self.length(x), self.length(y)
        while True:
            if lx > ly:
                return False
            if ly == 0:
                return lx == 0
            i = next(i for i in range(self.rank) if self.has_right_descent(y, i))
            s = self.simple_reflections[i]
            if self.has_right_descent(x, i):
                x = x * s
                lx -= 1
            y = y * s
            ly -= 1


def _positive_roots(cartan: CartanData, bound: int = 10000) -> list:
    a, m = cartan.matrix, cartan.rank
    simple = [tuple(int(k == i) for k in range(m)) for i in range(m)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        alpha = queue.popleft()
        for i in range(m):
            c = sum(a[i][j] * alpha[j] for j in range(m))
            if c == 0:
                continue
            beta = tuple(x - c * int(k == i) for k, x in enumerate(alpha))
            if all(x >= 0 for x in beta) and beta not in seen:
                seen.add(beta)
                queue.append(beta)
                if len(seen) > bound:
                    raise NonFiniteType("root closure does not terminate")
    return sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))


def _orbit_size(a, j: int, cap: int) -> int:
    """Size of the Weyl orbit of the fundamental weight omega_j."""
    m = len(a)
    start = tuple(int(k == j) for k in range(m))
    seen = {start}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(m):
            if lam[i] == 0:
                continue
            # beta_i in fundamental-weight coordinates is column i of A
            mu = tuple(lam[k] - lam[i] * a[k][i] for k in range(m))
            if mu not in seen:
                seen.add(mu)
                queue.append(mu)
                if len(seen) > cap:
                    return cap + 1
    return len(seen)


def weyl_group_order(cartan: CartanData, cap: int = DEFAULT_MAX_ORDER) -> int:
    """|W| via |W| = |W omega_last| * |W(levi)|, recursively; stops above ``cap``."""
    a = [list(r) for r in cartan.matrix]
    order = 1
    while a:
        m = len(a)
        order *= _orbit_size(a, m - 1, cap)
        if order > cap:
            return cap + 1
        a = [row[:-1] for row in a[:-1]]
    return order


def max_rank_from_env() -> int:
    raw = os.environ.get("EQSC_MAX_RANK")
    return int(raw) if raw else DEFAULT_MAX_RANK


def build_root_system(cartan: CartanData | str, *, max_rank: int | None = None,
                      max_order: int = DEFAULT_MAX_ORDER) -> RootSystem:
    """Construct the root system of a finite-type Cartan matrix or preset name."""
    if isinstance(cartan, str):
        cartan = preset(cartan)
    elif not isinstance(cartan, CartanData):
        cartan = CartanData(tuple(map(tuple, cartan)))
    limit = max_rank_from_env() if max_rank is None else max_rank
    if cartan.rank > limit:
        raise RankGuardError(f"rank {cartan.rank} exceeds the limit {limit}")
    order = weyl_group_order(cartan, max_order)
    if order > max_order:
        raise RankGuardError(f"|W| exceeds the limit {max_order}")
    return RootSystem(cartan, _positive_roots(cartan), order)
