"""Independent ground truth for the engine.

* Billey's subword sum for c_{u,w}^w (the restriction of sigma(u) to the
  fixed point w);
* a localization (GKM) solver for the d = 0 structure constants;
* the quantum presentation Z[q][h]/(h^{n+1} - q) of projective space.

Nothing here touches the recursion used by the engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IndexOutOfRange, PolynomialDivisionError, SingularSystem
from .parabolic import ParabolicQuotient, build_quotient
from .poly import Polynomial, phi
from .rootsys import RootSystem


def billey_roots(rs: RootSystem, word) -> list:
    """r(j) = s_{i1} ... s_{i(j-1)}(beta_{ij}) for every position of ``word``."""
    out = []
    prefix = rs.identity
    for i in word:
        out.append(prefix.column(i))
        prefix = prefix * rs.s(i)
    return out


def billey_r(pq: ParabolicQuotient, w, j: int) -> tuple:
    """r_w(j) over the canonical reduced word of w^vee; j is 1-based."""
    word = pq.word(pq.dual(w))
    if not 1 <= j <= len(word):
        raise IndexOutOfRange(f"position {j} outside 1..{len(word)}")
    return billey_roots(pq.rs, word[:j])[-1]


def billey_sum(rs: RootSystem, word, target) -> Polynomial:
    """phi of the sum over reduced subwords of ``word`` spelling ``target``.

    Subwords are enumerated by dynamic programming over (partial product):
    a state survives only while its subword stays reduced.
    """
    nv = rs.rank
    inv = rs.dynkin_involution
    states = {rs.identity: Polynomial.one(nv)}
    target_len = rs.length(target)
    for i, root in zip(word, billey_roots(rs, word)):
        factor = phi(root, inv)
        s = rs.s(i)
        new = dict(states)
        for x, val in states.items():
            if rs.has_right_descent(x, i):
                continue
            y = x * s
            # prune prefixes that already overshoot the target length
            if rs.length(y) > target_len:
                continue
            new[y] = new.get(y, Polynomial.zero(nv)) + val * factor
        states = new
    return states.get(target, Polynomial.zero(nv))


def billey_cuw(pq: ParabolicQuotient, u, w, word=None) -> Polynomial:
    """c_{u,w}^w via Billey's formula over a reduced word of w^vee.

    ``word`` overrides the canonical reduced word (any reduced word of w^vee
    gives the same value).
    """
    rs = pq.rs
    wv = pq.element(pq.dual(w))
    uv = pq.element(pq.dual(u))
    if word is None:
        word = pq.word(pq.dual(w))
    elif rs.from_word(word) != wv or len(word) != rs.length(wv):
        raise ValueError("word is not a reduced word of w^vee")
    return billey_sum(rs, word, uv)


def localization(pq: ParabolicQuotient) -> list:
    """loc[u][x] = sigma(u) restricted to the fixed point x."""
    return [[billey_cuw(pq, u, x) if pq.prec_table[u][x] else Polynomial.zero(pq.rs.rank)
             for x in range(pq.size)] for u in range(pq.size)]


class GKMSolver:
    """d = 0 structure constants from fixed-point restrictions.

    For each fixed point x (increasing in the reversed order),
    sigma(u)|_x sigma(v)|_x = sum_{w <= x} c_{u,v}^w sigma(w)|_x is triangular
    and is solved for c_{u,v}^x by exact division.
    """

    def __init__(self, pq: ParabolicQuotient):
        self.pq = pq
        self.loc = localization(pq)
        self.order = sorted(range(pq.size), key=lambda k: (pq.codims[k], k))
        self._cache: dict = {}

    def constants(self, u, v) -> dict:
        pq = self.pq
        u, v = pq.index(u), pq.index(v)
        key = (min(u, v), max(u, v))
        if key in self._cache:
            return self._cache[key]
        loc = self.loc
        prec = pq.prec_table
        c: dict = {}
        for x in self.order:
            rhs = loc[u][x] * loc[v][x]
            for w, cw in c.items():
                if prec[w][x] and w != x:
                    rhs = rhs - cw * loc[w][x]
            diag = loc[x][x]
            if not diag:
                raise SingularSystem(f"sigma({pq.name(x)}) vanishes at its own fixed point")
            try:
                val = rhs.exact_div(diag)
            except PolynomialDivisionError as exc:
                raise SingularSystem(f"non-polynomial constant at {pq.name(x)}: {exc}") from None
            if val:
                c[x] = val
        self._cache[key] = c
        return c


def gkm_constants(pq: ParabolicQuotient, u, v, w) -> Polynomial:
    solver = getattr(pq, "_gkm_solver", None)
    if solver is None:
        solver = pq._gkm_solver = GKMSolver(pq)
    return solver.constants(u, v).get(pq.index(w), Polynomial.zero(pq.rs.rank))


@dataclass
class MismatchReport:
    checked: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, example):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < 20:
                self.examples.append(example)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"checked": self.checked, "failed": self.failed, "examples": self.examples}


def projective_space_quotient(n: int) -> ParabolicQuotient:
    return build_quotient(f"A{n}", range(1, n))


def projective_space_check(n: int, engine_factory=None) -> MismatchReport:
    """Powers of the divisor on P^n at x = 0 against h^k, h^{n+1} = q."""
    from .engine import ClassVector, EqlrEngine

    if n < 1:
        raise ValueError("n must be positive")
    pq = projective_space_quotient(n)
    eng = engine_factory(pq) if engine_factory else EqlrEngine(pq)
    by_codim = {pq.codims[k]: k for k in range(pq.size)}
    h = ClassVector.basis(pq, pq.s_of_beta[0])
    power = ClassVector.basis(pq, pq.wbar0)
    report = MismatchReport()
    for k in range(1, n + 2):
        power = eng.multiply_vectors(power, h)
        got = power.specialize_zero()
        if k <= n:
            want = {(by_codim[k], (0,)): 1}
        else:
            want = {(pq.wbar0, (1,)): 1}
        report.record(got == want, {"power": k,
                                    "got": {f"{pq.name(w)}@{d}": c for (w, d), c in got.items()},
                                    "want": {f"{pq.name(w)}@{d}": c for (w, d), c in want.items()}})
    return report
