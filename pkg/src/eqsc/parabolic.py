"""Minimal coset representatives W^P and the orders on them.

Elements of W^P are addressed by their position in ``ParabolicQuotient.elements``
(sorted by length, then reduced word).  Most methods accept either that
integer index or the :class:`WeylElem` itself.
"""
from __future__ import annotations

from typing import Iterable

from .rootsys import RootSystem, WeylElem, build_root_system, word_name


class ParabolicQuotient:
    """All of W^P for a choice of simple roots ``delta_P`` spanning the Levi part.

    Attributes
    ----------
    elements : list of WeylElem
        W^P in canonical order; ``elements[0]`` is the identity.
    codims : list of int
        ``codims[k] = dim X - length(elements[k])``.
    duals : list of int
        Index of the minimal representative of ``w0 w W_P``.
    wbar0 : int
        Index of the minimal representative of ``w0 W_P`` (the unit class).
    s_of_beta : dict
        For each simple root outside ``delta_P``, the index of the dual of
        ``s_beta`` (the divisor class).
    """

    def __init__(self, rs: RootSystem, delta_P: Iterable[int] = ()):
        self.rs = rs
        m = rs.rank
        self.delta_P = frozenset(delta_P)
        if not self.delta_P <= set(range(m)):
            raise ValueError(f"parabolic indices {sorted(self.delta_P)} out of range")
        self.quantum_roots = tuple(i for i in range(m) if i not in self.delta_P)
        self.phi_P_plus = frozenset(
            k for k, alpha in enumerate(rs.positive_roots)
            if all(alpha[i] == 0 for i in self.quantum_roots)
        )
        self.outside_roots = tuple(k for k in range(len(rs.positive_roots))
                                   if k not in self.phi_P_plus)
        self.dim = len(self.outside_roots)

        levels = [[rs.identity]]
        seen = {rs.identity}
        while levels[-1]:
            nxt = []
            for w in levels[-1]:
                for i in range(m):
                    x = rs.s(i) * w
                    if x not in seen and self._is_minimal(x):
                        seen.add(x)
                        nxt.append(x)
            levels.append(nxt)
        keyed = []
        for length, level in enumerate(levels):
            for w in level:
                keyed.append(((length, rs.reduced_word(w)), w))
        keyed.sort(key=lambda t: t[0])
        self.elements: list[WeylElem] = [w for _, w in keyed]
        self.words = [key[1] for key, _ in keyed]
        self.lengths = [key[0] for key, _ in keyed]
        self._index = {w: k for k, w in enumerate(self.elements)}
        self.size = len(self.elements)
        self.codims = [self.dim - l for l in self.lengths]

        w0 = rs.w0
        self.duals = [self.index(self.min_rep(w0 * w)) for w in self.elements]
        self.wbar0 = self.index(self.min_rep(w0))
        self.s_of_beta = {b: self.duals[self.index(rs.s(b))] for b in self.quantum_roots}

        self.bruhat = [[rs.bruhat_leq(x, y) for y in self.elements] for x in self.elements]
        d = self.duals
        self.prec_table = [[self.bruhat[d[u]][d[w]] for w in range(self.size)]
                           for u in range(self.size)]

        # up_covers[u]: (root index, target) with u s_alpha in W^P, codim + 1
        self.up_covers: list[list[tuple[int, int]]] = []
        for u, w in enumerate(self.elements):
            row = []
            for k in self.outside_roots:
                x = self._index.get(w * rs.reflections[k])
                if x is not None and self.codims[x] == self.codims[u] + 1:
                    row.append((k, x))
            self.up_covers.append(row)

    def __repr__(self):
        return (f"ParabolicQuotient(rank={self.rs.rank}, delta_P={sorted(self.delta_P)}, "
                f"|W^P|={self.size})")

    def _is_minimal(self, w: WeylElem) -> bool:
        return not any(self.rs.has_right_descent(w, j) for j in self.delta_P)

    # -- addressing --------------------------------------------------------

    def index(self, w) -> int:
        if isinstance(w, int):
            if not 0 <= w < self.size:
                raise IndexError(f"element index {w} out of range")
            return w
        try:
            return self._index[w]
        except KeyError:
            raise ValueError("element is not a minimal coset representative") from None

    def contains(self, w: WeylElem) -> bool:
        return w in self._index

    def element(self, k) -> WeylElem:
        return self.elements[self.index(k)]

    def name(self, k) -> str:
        return word_name(self.words[self.index(k)])

    def word(self, k) -> tuple:
        return self.words[self.index(k)]

    # -- maps --------------------------------------------------------------

    def min_rep(self, w: WeylElem) -> WeylElem:
        """Minimal-length element of the coset w W_P."""
        rs = self.rs
        while True:
            j = next((j for j in sorted(self.delta_P) if rs.has_right_descent(w, j)), None)
            if j is None:
                return w
            w = w * rs.s(j)

    def min_rep_index(self, w: WeylElem) -> int:
        return self._index[self.min_rep(w)]

    def dual(self, w) -> int:
        return self.duals[self.index(w)]

    def codim(self, w) -> int:
        return self.codims[self.index(w)]

    def length(self, w) -> int:
        return self.lengths[self.index(w)]

    def is_root_in_levi(self, alpha) -> bool:
        return self.rs.index_of(alpha) in self.phi_P_plus

    # -- orders ------------------------------------------------------------

    def prec(self, u, w) -> bool:
        """Reflexive reversed Bruhat order: u^vee <= w^vee."""
        return self.prec_table[self.index(u)][self.index(w)]

    def cov(self, u, w) -> list:
        """Cov(u, w) as a list of positive roots in root order."""
        u, w = self.index(u), self.index(w)
        return [self.rs.positive_roots[k] for k, x in self.up_covers[u] if self.prec_table[x][w]]

    def cov_pairs(self, u: int, w: int) -> list[tuple[int, int]]:
        """(root index, u s_alpha) for the roots of Cov(u, w)."""
        return [(k, x) for k, x in self.up_covers[u] if self.prec_table[x][w]]

    def interval(self, u: int, w: int) -> list[int]:
        """V(u, w) = {v : u <= v <= w} in the reversed order."""
        return [v for v in range(self.size) if self.prec_table[u][v] and self.prec_table[v][w]]

    def chain_prec_table(self, covers_only: bool = True) -> list[list[bool]]:
        """Transitive closure of the steps u -> u s_alpha (alpha outside the
        Levi part, u s_alpha in W^P, codimension rising), computed directly
        rather than through the Bruhat subword test.

        With ``covers_only`` the steps are restricted to codimension + 1.
        """
        n = self.size
        steps = [[x for _, x in row] for row in self.up_covers]
        if not covers_only:
            steps = []
            for u, w in enumerate(self.elements):
                row = []
                for k in self.outside_roots:
                    x = self._index.get(w * self.rs.reflections[k])
                    if x is not None and self.codims[x] > self.codims[u]:
                        row.append(x)
                steps.append(row)
        reach = [[u == w for w in range(n)] for u in range(n)]
        for u in sorted(range(n), key=lambda k: -self.codims[k]):
            for x in steps[u]:
                reach[u] = [a or b for a, b in zip(reach[u], reach[x])]
        return reach


def build_quotient(rs: RootSystem | str, delta_P: Iterable[int] = ()) -> ParabolicQuotient:
    if isinstance(rs, str):
        rs = build_root_system(rs)
    return ParabolicQuotient(rs, delta_P)


def all_parabolics(rank: int):
    """Every subset of simple-root indices, smallest first."""
    from itertools import combinations
    for k in range(rank + 1):
        yield from (frozenset(c) for c in combinations(range(rank), k))

