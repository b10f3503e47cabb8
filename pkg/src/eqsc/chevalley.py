"""Equivariant quantum Chevalley operators.

Multiplication by a divisor class sigma(s(beta)) is given in closed form:
classical Bruhat covers weighted by h_alpha(omega_beta), quantum terms
q^{d(alpha)} for roots whose coset projection drops the codimension by
n(alpha) - 1, and the diagonal equivariant coefficient phi(D(s_beta, w^vee)).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qdegree
from .errors import InternalInconsistency
from .parabolic import ParabolicQuotient
from .poly import Polynomial, phi
from .rootsys import RootSystem, WeylElem


def d_form_word(rs: RootSystem, i: int, w: WeylElem) -> tuple:
    """D(s_beta_i, w) as the sum over the letters equal to i of a reduced word."""
    total = [0] * rs.rank
    prefix = rs.identity
    for letter in rs.reduced_word(w):
        if letter == i:
            for k, c in enumerate(prefix.column(i)):
                total[k] += c
        prefix = prefix * rs.s(letter)
    return tuple(total)


def d_form_weight(rs: RootSystem, i: int, w: WeylElem) -> tuple:
    """D(s_beta_i, w) as omega_i - w(omega_i)."""
    omega = rs.fundamental_weights[i]
    image = rs.act_on_weight(w, omega)
    return tuple(Fraction(a) - b for a, b in zip(omega, image))


def d_form(rs: RootSystem, i: int, w: WeylElem) -> tuple:
    """The D-form, computed both ways; raises if the two disagree."""
    by_word = d_form_word(rs, i, w)
    by_weight = d_form_weight(rs, i, w)
    if tuple(Fraction(x) for x in by_word) != by_weight:
        raise InternalInconsistency(f"D-form mismatch: {by_word} vs {by_weight}")
    return by_word


@dataclass(frozen=True)
class ChevalleyTerm:
    target: int
    degree: tuple
    coeff: Polynomial


@dataclass(frozen=True)
class ChevalleyExpansion:
    beta: int
    w: int
    terms: tuple

    def as_dict(self) -> dict:
        return {(t.target, t.degree): t.coeff for t in self.terms}


class ChevalleyData:
    """All Chevalley expansions of one quotient, precomputed.

    ``incoming[beta][w]`` lists ``(source, degree, coeff)`` for every
    non-diagonal term of ``sigma(s(beta)) o sigma(source)`` landing on w; the
    recursion for structure constants needs this reverse view.
    """

    def __init__(self, pq: ParabolicQuotient):
        self.pq = pq
        rs = pq.rs
        self.nvars = rs.rank
        self.n = qdegree.grading_vector(pq)
        self.zero_degree = qdegree.zero_degree(pq)
        self.root_degree = {k: tuple(rs.coroot_table[k][b] for b in pq.quantum_roots)
                            for k in pq.outside_roots}
        self.root_n = {k: qdegree.weighted_deg(d, self.n) for k, d in self.root_degree.items()}

        self.diag = {}
        for b in pq.quantum_roots:
            self.diag[b] = [phi(d_form(rs, b, pq.elements[pq.duals[w]]), rs.dynkin_involution)
                            for w in range(pq.size)]

        self.expansions = {b: [self._expand(b, w) for w in range(pq.size)]
                           for b in pq.quantum_roots}
        self.incoming = {b: [[] for _ in range(pq.size)] for b in pq.quantum_roots}
        for b in pq.quantum_roots:
            for w, exp in enumerate(self.expansions[b]):
                for t in exp.terms:
                    if t.target == w and not any(t.degree):
                        continue
                    self.incoming[b][t.target].append((w, t.degree, t.coeff))
        self._f_cache: dict = {}

    def _expand(self, b: int, w: int) -> ChevalleyExpansion:
        pq, rs = self.pq, self.pq.rs
        nv = self.nvars
        acc: dict = {}

        def put(target, degree, coeff):
            key = (target, degree)
            acc[key] = acc.get(key, Polynomial.zero(nv)) + coeff

        diag = self.diag[b][w]
        if diag:
            put(w, self.zero_degree, diag)
        for k, x in pq.up_covers[w]:
            c = rs.coroot_table[k][b]
            if c:
                put(x, self.zero_degree, Polynomial.const(nv, c))
        elem = pq.elements[w]
        for k in pq.outside_roots:
            c = rs.coroot_table[k][b]
            if not c:
                continue
            x = pq.min_rep_index(elem * rs.reflections[k])
            if pq.codims[x] == pq.codims[w] + 1 - self.root_n[k]:
                put(x, self.root_degree[k], Polynomial.const(nv, c))
        n = self.n
        terms = tuple(ChevalleyTerm(t, d, c)
                      for (t, d), c in sorted(acc.items(),
                                              key=lambda kv: (qdegree.sort_key(kv[0][1], n), kv[0][0]))
                      if c)
        return ChevalleyExpansion(b, w, terms)

    def f_form(self, w: int, u: int, b: int) -> Polynomial:
        key = (w, u, b)
        f = self._f_cache.get(key)
        if f is None:
            f = self._f_cache[key] = self.diag[b][w] - self.diag[b][u]
        return f

    def choose_beta(self, w: int, u: int) -> int:
        for b in self.pq.quantum_roots:
            if self.f_form(w, u, b):
                return b
        raise InternalInconsistency(
            f"no beta separates {self.pq.name(w)} and {self.pq.name(u)}")


_CACHE: dict = {}


def chevalley_data(pq: ParabolicQuotient) -> ChevalleyData:
    data = _CACHE.get(id(pq))
    if data is None or data.pq is not pq:
        data = _CACHE[id(pq)] = ChevalleyData(pq)
    return data


def diag_coeff(pq: ParabolicQuotient, beta: int, w) -> Polynomial:
    """c_{s(beta), w}^w = phi(D(s_beta, w^vee))."""
    return chevalley_data(pq).diag[beta][pq.index(w)]


def f_form(pq: ParabolicQuotient, w, u, beta: int) -> Polynomial:
    """F_{w,u}(beta) = c_{s(beta),w}^w - c_{s(beta),u}^u."""
    return chevalley_data(pq).f_form(pq.index(w), pq.index(u), beta)


def choose_beta(pq: ParabolicQuotient, w, u) -> int:
    """Smallest simple root outside the Levi part with F_{w,u}(beta) != 0."""
    return chevalley_data(pq).choose_beta(pq.index(w), pq.index(u))


def chevalley_expand(pq: ParabolicQuotient, beta: int, w) -> ChevalleyExpansion:
    """sigma(s(beta)) o sigma(w) as a list of (target, degree, coefficient)."""
    return chevalley_data(pq).expansions[beta][pq.index(w)]
