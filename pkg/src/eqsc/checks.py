"""Invariant suites run by ``eqsc check`` and by the tests.

Each suite fills a :class:`MismatchReport`; ``run_checks`` merges them into
one JSON-ready report.
"""
from __future__ import annotations

import random
from itertools import product

from . import qdegree
from .chevalley import chevalley_data
from .engine import ClassVector, EqlrEngine, all_assignments, path_sum_R, random_assignment
from .oracle import MismatchReport, billey_cuw, gkm_constants, projective_space_check
from .parabolic import ParabolicQuotient
from .poly import Polynomial, format_poly


def _cell_name(pq, u, v, w, d):
    return {"u": pq.name(u), "v": pq.name(v), "w": pq.name(w), "d": list(d)}


def check_properties(pq: ParabolicQuotient, eng: EqlrEngine, rep: MismatchReport | None = None):
    """Homogeneity, positivity and denominator clearance on every stored value,
    and quantum vanishing bound when the engine ran without pruning."""
    rep = rep or MismatchReport()
    eng.ensure_up_to(2 * pq.dim)
    c = pq.codims
    for (d, u, v, w), val in sorted(eng.table.items()):
        where = _cell_name(pq, u, v, w, d)
        rep.record(isinstance(val, Polynomial), {"check": "denominator", **where})
        p = eng.poly_degree(u, v, w, d)
        rep.record(val.is_homogeneous(p) and p >= 0,
                   {"check": "homogeneity", "expected": p, "value": format_poly(val), **where})
        rep.record(val.has_nonnegative_coeffs(),
                   {"check": "positivity", "value": format_poly(val), **where})
        if not eng.prune and any(d):
            wd = c[w] + qdegree.weighted_deg(d, eng.n)
            if c[u] + 1 > wd or c[v] + 1 > wd:
                rep.record(False, {"check": "main-lemma", "value": format_poly(val), **where})
    return rep


def check_chevalley(pq: ParabolicQuotient, eng: EqlrEngine, rep: MismatchReport | None = None):
    """multiply(s(beta), w) reproduces the Chevalley input, mixed terms included."""
    rep = rep or MismatchReport()
    cd = chevalley_data(pq)
    for b in pq.quantum_roots:
        sb = pq.s_of_beta[b]
        for w in range(pq.size):
            want = {(t.target, t.degree): t.coeff for t in cd.expansions[b][w].terms}
            got = eng.multiply(sb, w).entries
            rep.record(got == want, {"check": "chevalley", "beta": b + 1, "w": pq.name(w)})
    return rep


def check_ring(pq: ParabolicQuotient, eng: EqlrEngine, rep: MismatchReport | None = None,
               assoc_limit: int | None = None, seed: int = 0):
    """Unit law, commutativity and associativity as ClassVector identities.

    Commutativity is only informative for an engine built with
    ``symmetric=False``.  Associativity is exhaustive unless ``assoc_limit``
    caps the number of sampled triples.
    """
    rep = rep or MismatchReport()
    n = pq.size
    unit = pq.wbar0
    for v in range(n):
        rep.record(eng.multiply(unit, v) == ClassVector.basis(pq, v),
                   {"check": "unit", "v": pq.name(v)})
        rep.record(eng.multiply(v, unit) == ClassVector.basis(pq, v),
                   {"check": "unit", "v": pq.name(v)})
    for u in range(n):
        for v in range(u + 1, n):
            rep.record(eng.multiply(u, v) == eng.multiply(v, u),
                       {"check": "commutativity", "u": pq.name(u), "v": pq.name(v)})
    triples = list(product(range(n), repeat=3))
    if assoc_limit is not None and len(triples) > assoc_limit:
        triples = random.Random(seed).sample(triples, assoc_limit)
    for a, b, c in triples:
        left = eng.multiply_vectors(eng.multiply(a, b), ClassVector.basis(pq, c))
        right = eng.multiply_vectors(ClassVector.basis(pq, a), eng.multiply(b, c))
        rep.record(left == right, {"check": "associativity", "a": pq.name(a),
                                   "b": pq.name(b), "c": pq.name(c)})
    return rep


def check_billey(pq: ParabolicQuotient, eng: EqlrEngine, rep: MismatchReport | None = None):
    rep = rep or MismatchReport()
    for u in range(pq.size):
        for w in range(pq.size):
            got = eng.compute(u, w, w)
            want = billey_cuw(pq, u, w)
            rep.record(got == want, {"check": "billey", "u": pq.name(u), "w": pq.name(w),
                                     "engine": format_poly(got), "oracle": format_poly(want)})
            rep.record(bool(want) == pq.prec_table[u][w],
                       {"check": "billey-support", "u": pq.name(u), "w": pq.name(w)})
    return rep


def check_gkm(pq: ParabolicQuotient, eng: EqlrEngine, rep: MismatchReport | None = None):
    rep = rep or MismatchReport()
    for u, v, w in product(range(pq.size), repeat=3):
        got = eng.compute(u, v, w)
        want = gkm_constants(pq, u, v, w)
        rep.record(got == want, {"check": "gkm", **_cell_name(pq, u, v, w, eng.zero),
                                 "engine": format_poly(got), "oracle": format_poly(want)})
    return rep


def check_assignments(pq: ParabolicQuotient, rep: MismatchReport | None = None,
                      max_assignments: int = 64, seed: int = 0):
    """R(u, w; f) does not depend on f, and R(u,w)/R(wbar0,w) = billey_cuw(u, w)."""
    rep = rep or MismatchReport()
    rng = random.Random(seed)
    for w in range(pq.size):
        base = path_sum_R(pq, pq.wbar0, w)
        rep.record(bool(base), {"check": "R-nonzero", "u": pq.name(pq.wbar0), "w": pq.name(w)})
        for u in range(pq.size):
            if not pq.prec_table[u][w]:
                continue
            ref = path_sum_R(pq, u, w)
            rep.record(bool(ref), {"check": "R-nonzero", "u": pq.name(u), "w": pq.name(w)})
            fs = [random_assignment(pq, u, w, rng) for _ in range(2)]
            for k, f in enumerate(all_assignments(pq, u, w)):
                if k >= max_assignments:
                    break
                fs.append(f)
            for f in fs:
                rep.record(path_sum_R(pq, u, w, f) == ref,
                           {"check": "R-independence", "u": pq.name(u), "w": pq.name(w),
                            "f": {pq.name(v): b + 1 for v, b in f.items()}})
            rep.record(ref / base == billey_cuw(pq, u, w),
                       {"check": "R-ratio", "u": pq.name(u), "w": pq.name(w)})
    return rep


def run_checks(pq: ParabolicQuotient, oracle: str | None = None, prune: bool = True,
               threads: int = 1, assoc_limit: int | None = 4096) -> MismatchReport:
    """The invariant suite, or one oracle suite when ``oracle`` is given."""
    rep = MismatchReport()
    if oracle == "pn":
        for n in (1, 2, 3):
            sub = projective_space_check(n, lambda q: EqlrEngine(q, prune=prune, threads=threads))
            rep.checked += sub.checked
            rep.failed += sub.failed
            rep.examples.extend(sub.examples[:5] if sub.failed else [])
        return rep
    eng = EqlrEngine(pq, prune=prune, threads=threads)
    if oracle == "billey":
        return check_billey(pq, eng, rep)
    if oracle == "gkm":
        return check_gkm(pq, eng, rep)
    if oracle is not None:
        raise ValueError(f"unknown oracle {oracle!r}")
    raw = EqlrEngine(pq, prune=False, symmetric=False, threads=threads)
    check_properties(pq, raw, rep)
    check_properties(pq, eng, rep)
    for key, val in raw.table.items():
        d, u, v, w = key
        rep.record(eng.compute(u, v, w, d) == val,
                   {"check": "prune-agreement", **_cell_name(pq, u, v, w, d)})
    for (d, u, v, w), val in eng.table.items():
        rep.record(raw.compute(u, v, w, d) == val,
                   {"check": "prune-agreement", **_cell_name(pq, u, v, w, d)})
    check_chevalley(pq, eng, rep)
    check_ring(pq, raw, rep, assoc_limit=assoc_limit)
    check_billey(pq, eng, rep)
    check_assignments(pq, rep)
    return rep
