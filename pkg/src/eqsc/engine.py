"""Equivariant quantum Littlewood-Richardson coefficients by double induction.

Degrees are processed in ascending weighted order.  Within a degree d:

* step 1 computes every diagonal cell c_{w,w}^{w,d} from the unit law via the
  affine chain c_{u0,w}^{w,d} = R(u0,w;f) c_{w,w}^{w,d} + E'(u0,w;f,d);
* step 2 fills every other cell stratum by stratum, polynomial degree
  descending, with the associativity recursion applied to an index u != w.

The recursion is read off the Chevalley data: comparing the coefficient of
q^d sigma(w) in sigma(s(beta)) o (sigma(u) o sigma(v)) and in
(sigma(s(beta)) o sigma(u)) o sigma(v) gives

    F_{w,u}(beta) c_{u,v}^{w,d} = sum_{(u',e) != (u,0)} K(beta,u)[u',e] c_{u',v}^{w,d-e}
                                 - sum_{w' -> w} K(beta,w')[w,e] c_{u,v}^{w',d-e}.
"""
from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iproduct

from . import qdegree
from .chevalley import ChevalleyData, chevalley_data
from .errors import (InternalInconsistency, PolynomialDivisionError,
                     PreconditionViolated, StratumNotReady, ZeroR)
from .parabolic import ParabolicQuotient
from .poly import Polynomial, RatFn, format_poly

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EngineConfig:
    prune: bool = True
    symmetric: bool = True
    threads: int = 1


# -- path sums ---------------------------------------------------------------

@dataclass
class PathGraph:
    """Gamma(u, w; f): vertices V(u, w), edges v -> v s_alpha, RatFn weights."""

    u: int
    w: int
    vertices: list
    edges: dict  # v -> list of (root index, target, weight)

    def paths(self):
        """Every oriented path from u to w, as a list of vertices."""
        out = []

        def walk(v, acc):
            if v == self.w:
                out.append(acc)
                return
            for _, x, _ in self.edges.get(v, ()):
                walk(x, acc + [x])

        walk(self.u, [self.u])
        return out


def _check_pair(pq: ParabolicQuotient, u: int, w: int):
    if not pq.prec_table[u][w]:
        raise PreconditionViolated(f"{pq.name(u)} is not below {pq.name(w)} in the reversed order")


def is_valid_assignment(pq: ParabolicQuotient, u, w, f: dict) -> bool:
    cd = chevalley_data(pq)
    u, w = pq.index(u), pq.index(w)
    dom = [v for v in pq.interval(u, w) if v != w]
    if set(f) != set(dom):
        return False
    for v in dom:
        b = f[v]
        if b not in pq.quantum_roots:
            return False
        F = cd.f_form(w, v, b)
        if not F or not F.has_nonnegative_coeffs():
            return False
    return True


def default_assignment(pq: ParabolicQuotient, u, w) -> dict:
    """alpha(v) = first root of Cov(v, w); beta(v) = first beta with
    F_{v s_alpha, v}(beta) != 0."""
    cd = chevalley_data(pq)
    u, w = pq.index(u), pq.index(w)
    _check_pair(pq, u, w)
    f = {}
    for v in pq.interval(u, w):
        if v == w:
            continue
        pairs = pq.cov_pairs(v, w)
        if not pairs:
            raise InternalInconsistency(f"Cov({pq.name(v)}, {pq.name(w)}) is empty")
        x = pairs[0][1]
        f[v] = cd.choose_beta(x, v)
    if not is_valid_assignment(pq, u, w, f):
        raise InternalInconsistency("default assignment is not valid")
    return f


def valid_choices(pq: ParabolicQuotient, w: int, v: int) -> list:
    cd = chevalley_data(pq)
    out = []
    for b in pq.quantum_roots:
        F = cd.f_form(w, v, b)
        if F and F.has_nonnegative_coeffs():
            out.append(b)
    return out


def random_assignment(pq: ParabolicQuotient, u, w, rng: random.Random | None = None) -> dict:
    rng = rng or random.Random(0)
    u, w = pq.index(u), pq.index(w)
    _check_pair(pq, u, w)
    return {v: rng.choice(valid_choices(pq, w, v)) for v in pq.interval(u, w) if v != w}


def all_assignments(pq: ParabolicQuotient, u, w):
    u, w = pq.index(u), pq.index(w)
    _check_pair(pq, u, w)
    dom = [v for v in pq.interval(u, w) if v != w]
    for combo in iproduct(*(valid_choices(pq, w, v) for v in dom)):
        yield dict(zip(dom, combo))


def path_graph(pq: ParabolicQuotient, u, w, f: dict | None = None) -> PathGraph:
    cd = chevalley_data(pq)
    u, w = pq.index(u), pq.index(w)
    if f is None:
        f = default_assignment(pq, u, w)
    verts = pq.interval(u, w)
    edges = {}
    for v in verts:
        if v == w:
            continue
        b = f[v]
        F = cd.f_form(w, v, b)
        row = []
        for k, x in pq.cov_pairs(v, w):
            h = pq.rs.coroot_table[k][b]
            if h:
                row.append((k, x, RatFn(Polynomial.const(cd.nvars, h), F)))
        edges[v] = row
    return PathGraph(u, w, verts, edges)


def path_sum_R(pq: ParabolicQuotient, u, w, f: dict | None = None) -> RatFn:
    """R(u, w; f), the total weight of all paths u -> w, by dynamic programming."""
    g = path_graph(pq, u, w, f)
    nv = pq.rs.rank
    acc = {g.w: RatFn.one(nv)}
    for v in sorted(g.vertices, key=lambda k: -pq.codims[k]):
        if v == g.w:
            continue
        total = RatFn.zero(nv)
        for _, x, wt in g.edges[v]:
            total = total + wt * acc[x]
        acc[v] = total
    return acc[g.u]


# -- class vectors -------------------------------------------------------------

@dataclass
class ClassVector:
    """sum_{(w, d)} q^d c_{w,d} sigma(w), with polynomial coefficients."""

    nvars: int
    entries: dict = field(default_factory=dict)

    @classmethod
    def basis(cls, pq: ParabolicQuotient, w) -> "ClassVector":
        return cls(pq.rs.rank, {(pq.index(w), qdegree.zero_degree(pq)): Polynomial.one(pq.rs.rank)})

    def add_term(self, w: int, d: tuple, c: Polynomial):
        key = (w, d)
        s = self.entries.get(key, Polynomial.zero(self.nvars)) + c
        if s:
            self.entries[key] = s
        else:
            self.entries.pop(key, None)

    def __add__(self, other: "ClassVector") -> "ClassVector":
        out = ClassVector(self.nvars, dict(self.entries))
        for (w, d), c in other.entries.items():
            out.add_term(w, d, c)
        return out

    def scale(self, c: Polynomial, e: tuple) -> "ClassVector":
        out = ClassVector(self.nvars)
        for (w, d), x in self.entries.items():
            out.add_term(w, qdegree.add(d, e), x * c)
        return out

    def __eq__(self, other):
        return isinstance(other, ClassVector) and self.entries == other.entries

    def specialize_zero(self) -> dict:
        """x -> 0: the integer quantum coefficients."""
        out = {}
        for key, c in self.entries.items():
            v = c.substitute_zero()
            if v:
                out[key] = v
        return out

    def sorted_items(self, n):
        return sorted(self.entries.items(), key=lambda kv: (qdegree.sort_key(kv[0][1], n), kv[0][0]))

    def format(self, pq: ParabolicQuotient) -> str:
        n = qdegree.grading_vector(pq)
        parts = []
        for (w, d), c in self.sorted_items(n):
            qs = qdegree.format_q(d, pq)
            basis = f"σ({pq.name(w)})"
            if c == 1:
                coeff = qs
            else:
                text = format_poly(c)
                if len(c.terms) > 1:
                    text = f"({text})"
                coeff = f"{qs}·{text}" if qs else text
            parts.append(f"{coeff}·{basis}" if coeff else basis)
        if not parts:
            return "0"
        return " + ".join(parts)


# -- the engine ----------------------------------------------------------------

class EqlrEngine:
    """Computes and caches c_{u,v}^{w,d} for one quotient.

    ``prune`` enables the vanishing shortcuts (negative polynomial degree,
    the quantum vanishing bound, the d = 0 inclusion rule, unit law everywhere).  With
    ``symmetric=False`` the cells (u, v) and (v, u) are stored and computed
    separately, which turns commutativity into a checkable statement.
    """

    def __init__(self, pq: ParabolicQuotient, prune: bool = True, symmetric: bool = True,
                 threads: int = 1):
        self.pq = pq
        self.prune = prune
        self.symmetric = symmetric
        self.threads = max(1, int(threads))
        self.cd: ChevalleyData = chevalley_data(pq)
        self.nvars = pq.rs.rank
        self.n = self.cd.n
        self.zero = qdegree.zero_degree(pq)
        self._zero_poly = Polynomial.zero(self.nvars)
        self.table: dict = {}
        self.complete: set = set()
        self._current = None      # degree being filled
        self._done_p = None       # strata >= this are finished for the current degree
        self._memo_E: dict = {}
        self.by_codim: dict = {}
        for k, c in enumerate(pq.codims):
            self.by_codim.setdefault(c, []).append(k)

    @classmethod
    def from_config(cls, pq: ParabolicQuotient, cfg: EngineConfig) -> "EqlrEngine":
        return cls(pq, prune=cfg.prune, symmetric=cfg.symmetric, threads=cfg.threads)

    # -- keys and grading ----------------------------------------------------

    def _key(self, u, v, w, d):
        if self.symmetric and v < u:
            u, v = v, u
        return (d, u, v, w)

    def poly_degree(self, u: int, v: int, w: int, d: tuple) -> int:
        c = self.pq.codims
        return c[u] + c[v] - c[w] - qdegree.weighted_deg(d, self.n)

    def _pruned(self, u, v, w, d):
        """True when a vanishing rule gives c_{u,v}^{w,d} = 0 outright."""
        if not self.prune:
            return False
        p = self.poly_degree(u, v, w, d)
        if p < 0:
            return True
        c = self.pq.codims
        prec = self.pq.prec_table
        if any(d):
            wd = c[w] + qdegree.weighted_deg(d, self.n)
            return c[u] + 1 > wd or c[v] + 1 > wd
        return not (prec[u][w] and prec[v][w])

    def _unit(self, u, v, w, d):
        """Value forced by the unit law, or None."""
        wb = self.pq.wbar0
        if u == wb:
            other = v
        elif v == wb:
            other = u
        else:
            return None
        return Polynomial.one(self.nvars) if (other == w and not any(d)) else self._zero_poly

    # -- table access ----------------------------------------------------------

    def _lookup(self, u, v, w, d):
        key = self._key(u, v, w, d)
        val = self.table.get(key)
        if val is not None:
            return val
        if d in self.complete:
            return self._zero_poly
        if d == self._current and self._done_p is not None \
                and self.poly_degree(u, v, w, d) >= self._done_p:
            return self._zero_poly
        raise StratumNotReady(f"cell {key} requested before its stratum was completed")

    def _store(self, u, v, w, d, val: Polynomial):
        if val:
            self.table[self._key(u, v, w, d)] = val

    # -- recursion pieces -------------------------------------------------------

    def _divide(self, total, F, what):
        try:
            if isinstance(total, RatFn):
                return (total / F).to_polynomial()
            return total.exact_div(F)
        except PolynomialDivisionError as exc:
            raise PolynomialDivisionError(f"denominator does not clear at {what}: {exc}") from None

    def _mrec(self, a, b, w, d, same_degree):
        """F_{w,a}(beta) c_{a,b}^{w,d} from the recursion; a != w.

        ``same_degree(x, y, t)`` supplies c_{x,y}^{t,d} for the same degree d.
        """
        cd = self.cd
        beta = cd.choose_beta(w, a)
        total = self._zero_poly
        for t in cd.expansions[beta][a].terms:
            e = t.degree
            if not any(e):
                if t.target == a:
                    continue
                total = total + t.coeff * same_degree(t.target, b, w)
            elif qdegree.leq(e, d):
                total = total + t.coeff * self._lookup(t.target, b, w, qdegree.sub(d, e))
        for src, e, k in cd.incoming[beta][w]:
            if not any(e):
                total = total - k * same_degree(a, b, src)
            elif qdegree.leq(e, d):
                total = total - k * self._lookup(a, b, src, qdegree.sub(d, e))
        return self._divide(total, cd.f_form(w, a, beta),
                            (self.pq.name(a), self.pq.name(b), self.pq.name(w), d))

    def reduce_nonprec(self, u, v, w, d) -> Polynomial:
        """E_{u,v,w}(d): c_{u,v}^{w,d} for u (or v) not below w.

        Recursion on the index that is not below w; same-degree terms stay of
        that kind, lower degrees come from the table.
        """
        prec = self.pq.prec_table
        if prec[u][w]:
            if prec[v][w]:
                raise PreconditionViolated("reduce_nonprec needs u or v not below w")
            u, v = v, u
        if not any(d) and self.prune:
            return self._zero_poly
        key = (d, u, v, w)
        val = self._memo_E.get(key)
        if val is not None:
            return val
        if self.prune and self._pruned(u, v, w, d):
            val = self._zero_poly
        else:
            unit = self._unit(u, v, w, d) if self.prune else None
            if unit is not None:
                val = unit
            else:
                val = self._mrec(u, v, w, d, lambda x, y, t: self.reduce_nonprec(x, y, t, d))
        self._memo_E[key] = val
        return val

    def _chain(self, w: int, d: tuple, f: dict | None = None):
        """Affine coefficients A(u0) = (r, e) with c_{u0,w}^{w,d} = r x + e."""
        pq, cd = self.pq, self.cd
        prec = pq.prec_table
        nv = self.nvars
        if f is None:
            f = default_assignment(pq, pq.wbar0, w)
        verts = sorted(pq.interval(pq.wbar0, w), key=lambda k: -pq.codims[k])
        A = {w: (RatFn.one(nv), RatFn.zero(nv))}
        for u0 in verts:
            if u0 == w:
                continue
            beta = f[u0]
            r = RatFn.zero(nv)
            e = RatFn.zero(nv)
            for t in cd.expansions[beta][u0].terms:
                deg = t.degree
                if not any(deg):
                    if t.target == u0:
                        continue
                    if prec[t.target][w]:
                        rr, ee = A[t.target]
                        r = r + rr * t.coeff
                        e = e + ee * t.coeff
                    else:
                        e = e + t.coeff * self.reduce_nonprec(t.target, w, w, d)
                elif qdegree.leq(deg, d):
                    e = e + t.coeff * self._lookup(t.target, w, w, qdegree.sub(d, deg))
            for src, deg, k in cd.incoming[beta][w]:
                if not any(deg):
                    e = e - k * self.reduce_nonprec(w, u0, src, d)
                elif qdegree.leq(deg, d):
                    e = e - k * self._lookup(u0, w, src, qdegree.sub(d, deg))
            F = cd.f_form(w, u0, beta)
            A[u0] = (r / F, e / F)
        return A

    def diagonal_coeff(self, w, d: tuple | None = None, f: dict | None = None) -> Polynomial:
        """c_{w,w}^{w,d} = (delta_{d,0} - E'(wbar0, w; f, d)) / R(wbar0, w; f)."""
        w = self.pq.index(w)
        d = self.zero if d is None else tuple(d)
        if d not in self.complete and d != self._current:
            self.ensure_degree(d)
        key = self._key(w, w, w, d)
        if d in self.complete:
            return self.table.get(key, self._zero_poly)
        return self._diagonal(w, d, f)

    def _diagonal(self, w, d, f=None):
        if w == self.pq.wbar0:
            return Polynomial.one(self.nvars) if not any(d) else self._zero_poly
        if self.prune and self.poly_degree(w, w, w, d) < 0:
            return self._zero_poly
        A = self._chain(w, d, f)
        r, e = A[self.pq.wbar0]
        if not r:
            raise ZeroR(f"R(wbar0, {self.pq.name(w)}) vanished")
        delta = 1 if not any(d) else 0
        x = (RatFn._lift(delta, self.nvars) - e) / r
        if not x.is_polynomial():
            raise PolynomialDivisionError(
                f"diagonal coefficient at {self.pq.name(w)}, d={d} is not a polynomial: {x}")
        return x.to_polynomial()

    # -- scheduling ----------------------------------------------------------------

    def _cell(self, u, v, w, d):
        if self._pruned(u, v, w, d):
            return self._zero_poly
        if self.prune:
            unit = self._unit(u, v, w, d)
            if unit is not None:
                return unit
        if u == w:
            if v == w:
                raise InternalInconsistency("diagonal cell reached step 2")
            u, v = v, u
        key = (d, u, v, w)
        memo = self._memo_E.get(key)
        if memo is not None:
            return memo
        return self._mrec(u, v, w, d, lambda x, y, t: self._lookup(x, y, t, d))

    def _stratum_cells(self, d, p):
        pq = self.pq
        c = pq.codims
        wd = qdegree.weighted_deg(d, self.n)
        out = []
        for u in range(pq.size):
            vs = range(u, pq.size) if self.symmetric else range(pq.size)
            for v in vs:
                cw = c[u] + c[v] - wd - p
                for w in self.by_codim.get(cw, ()):
                    if u == v == w:
                        continue
                    out.append((u, v, w))
        return out

    def _compute_degree(self, d):
        pq = self.pq
        log.debug("degree %s: start", d)
        self._current = d
        self._done_p = None
        self._memo_E = {}
        for w in range(pq.size):
            self._store(w, w, w, d, self._diagonal(w, d))
        wd = qdegree.weighted_deg(d, self.n)
        top = 2 * pq.dim - wd
        bottom = 0 if self.prune else -pq.dim - wd
        for p in range(top, bottom - 1, -1):
            cells = self._stratum_cells(d, p)
            if self.threads > 1 and len(cells) > 1:
                with ThreadPoolExecutor(self.threads) as ex:
                    vals = list(ex.map(lambda t: self._cell(*t, d), cells))
            else:
                vals = [self._cell(u, v, w, d) for u, v, w in cells]
            for (u, v, w), val in zip(cells, vals):
                self._store(u, v, w, d, val)
            self._done_p = p
        self.complete.add(d)
        self._current = None
        self._done_p = None
        self._memo_E = {}
        log.debug("degree %s: done, table size %d", d, len(self.table))

    def ensure_degree(self, d: tuple):
        for e in qdegree.degrees_below(tuple(d), self.n):
            if e not in self.complete:
                self._compute_degree(e)

    def ensure_up_to(self, bound: int):
        for e in qdegree.degrees_up_to(self.n, bound):
            self.ensure_degree(e)

    # -- public API ------------------------------------------------------------

    def compute(self, u, v, w, d: tuple | None = None) -> Polynomial:
        pq = self.pq
        u, v, w = pq.index(u), pq.index(v), pq.index(w)
        d = self.zero if d is None else tuple(d)
        if len(d) != len(self.zero) or any(x < 0 for x in d):
            raise ValueError(f"degree {d} does not fit this quotient")
        if self.prune and self._pruned(u, v, w, d):
            return self._zero_poly
        self.ensure_degree(d)
        return self.table.get(self._key(u, v, w, d), self._zero_poly)

    def multiply(self, u, v) -> ClassVector:
        pq = self.pq
        u, v = pq.index(u), pq.index(v)
        bound = pq.codims[u] + pq.codims[v]
        self.ensure_up_to(bound)
        out = ClassVector(self.nvars)
        for d in qdegree.degrees_up_to(self.n, bound):
            for w in range(pq.size):
                val = self.table.get(self._key(u, v, w, d))
                if val:
                    out.add_term(w, d, val)
        return out

    def multiply_vectors(self, a: ClassVector, b: ClassVector) -> ClassVector:
        out = ClassVector(self.nvars)
        for (w1, d1), c1 in a.entries.items():
            for (w2, d2), c2 in b.entries.items():
                prod = self.multiply(w1, w2).scale(c1 * c2, qdegree.add(d1, d2))
                out = out + prod
        return out

    def full_table(self) -> dict:
        """Every nonzero c_{u,v}^{w,d} with (u, v) ranging over all ordered pairs."""
        pq = self.pq
        self.ensure_up_to(2 * pq.dim)
        out = {}
        for u in range(pq.size):
            for v in range(pq.size):
                for (w, d), c in self.multiply(u, v).entries.items():
                    out[(u, v, w, d)] = c
        return out
