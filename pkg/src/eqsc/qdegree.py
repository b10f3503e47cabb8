"""Curve degrees, the grading of the quantum parameters, and degree orders.

A degree is a plain tuple of nonnegative integers, one entry per simple root
outside the Levi part (in increasing index order, i.e. ``pq.quantum_roots``).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import RootInLevi
from .parabolic import ParabolicQuotient

Degree = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class QuantumGrading:
    """Complex degree n_beta of each q_beta, keyed by simple-root index."""

    n: dict

    def vector(self, pq: ParabolicQuotient) -> tuple:
        return tuple(self.n[b] for b in pq.quantum_roots)


def n_beta(pq: ParabolicQuotient) -> QuantumGrading:
    """n_beta = h_beta(sum of the positive roots outside the Levi part)."""
    rs = pq.rs
    total = [0] * rs.rank
    for k in pq.outside_roots:
        for i, c in enumerate(rs.positive_roots[k]):
            total[i] += c
    a = rs.cartan.matrix
    return QuantumGrading({b: sum(a[b][j] * total[j] for j in range(rs.rank))
                           for b in pq.quantum_roots})


def grading_vector(pq: ParabolicQuotient) -> tuple:
    return n_beta(pq).vector(pq)


def d_of_alpha(pq: ParabolicQuotient, alpha: Sequence[int]) -> Degree:
    k = pq.rs.index_of(alpha)
    if k in pq.phi_P_plus:
        raise RootInLevi(f"{tuple(alpha)} lies in the Levi part")
    co = pq.rs.coroot_table[k]
    return tuple(co[b] for b in pq.quantum_roots)


def n_of_alpha(pq: ParabolicQuotient, alpha: Sequence[int]) -> int:
    return weighted_deg(d_of_alpha(pq, alpha), grading_vector(pq))


def zero_degree(pq: ParabolicQuotient) -> Degree:
    return (0,) * len(pq.quantum_roots)


def weighted_deg(d: Degree, n: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(d, n))


def is_zero(d: Degree) -> bool:
    return not any(d)


def leq(d1: Degree, d2: Degree) -> bool:
    """Componentwise d1 <= d2."""
    return all(a <= b for a, b in zip(d1, d2))


def sub(d1: Degree, d2: Degree) -> Degree:
    return tuple(a - b for a, b in zip(d1, d2))


def add(d1: Degree, d2: Degree) -> Degree:
    return tuple(a + b for a, b in zip(d1, d2))


def sort_key(d: Degree, n: Sequence[int]):
    """Weighted degree first, graded-lex to break ties."""
    return (weighted_deg(d, n), sum(d), tuple(-x for x in d))


def degrees_below(d: Degree, n: Sequence[int]) -> list:
    """All degrees e <= d componentwise, in processing order."""
    return sorted(product(*(range(x + 1) for x in d)), key=lambda e: sort_key(e, n))


def degrees_up_to(n: Sequence[int], bound: int) -> list:
    """All degrees with weighted degree at most ``bound``, in processing order."""
    out = []

    def rec(prefix, left):
        i = len(prefix)
        if i == len(n):
            out.append(tuple(prefix))
            return
        for k in range(left // n[i] + 1):
            rec(prefix + [k], left - k * n[i])

    if bound >= 0:
        rec([], bound)
    return sorted(out, key=lambda e: sort_key(e, n))


def format_degree(d: Degree) -> str:
    return "d=(" + ",".join(map(str, d)) + ")"


def format_q(d: Degree, pq: ParabolicQuotient) -> str:
    """``q1^a*q2^b`` with q indexed by simple roots (1-based); empty for d = 0."""
    parts = []
    for b, k in zip(pq.quantum_roots, d):
        if k == 1:
            parts.append(f"q{b + 1}")
        elif k > 1:
            parts.append(f"q{b + 1}^{k}")
    return "*".join(parts)


def parse_degree(text: str, pq: ParabolicQuotient) -> Degree:
    """Parse ``0``, ``1,0`` or ``1 0`` into a degree for this quotient."""
    s = text.strip().strip("()")
    k = len(pq.quantum_roots)
    if s in ("", "0"):
        return (0,) * k
    parts = [p for p in s.replace(",", " ").split()]
    if len(parts) != k or not all(p.isdigit() for p in parts):
        raise ValueError(f"degree {text!r} needs {k} nonnegative integers")
    return tuple(int(p) for p in parts)
