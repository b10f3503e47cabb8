"""Command-line front end: ``eqsc coeff|product|table|chevalley|check``.

Exit codes: 0 success, 1 usage error, 2 invariant or oracle failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources

from . import qdegree
from .checks import run_checks
from .chevalley import chevalley_data
from .config import COMMANDS, FORMATS, ORACLES, JobConfig, parse_element, parse_group
from .engine import ClassVector, EqlrEngine
from .errors import EqscError, InternalInconsistency, PolynomialDivisionError
from .parabolic import ParabolicQuotient
from .poly import Polynomial, format_poly

NOTE = "x_i = -beta_i (negative simple roots)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eqsc", description="Equivariant quantum Schubert structure constants of G/P.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--group", help="preset (A1, B2, G2, ...) or a Cartan matrix as JSON")
    p.add_argument("--parabolic", help='1-based simple indices spanning the Levi part; "" for G/B')
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--w")
    p.add_argument("--d", help='degree, e.g. "0" or "1,0"')
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--no-prune", dest="prune", action="store_false", default=None)
    p.add_argument("--threads", type=int)
    p.add_argument("--oracle", choices=ORACLES)
    p.add_argument("--config", help="JSON file mirroring JobConfig; flags override it")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(ns) -> JobConfig:
    cfg = JobConfig.load(ns.config) if ns.config else JobConfig()
    cfg.command = ns.command
    if ns.group is not None:
        cfg.group = parse_group(ns.group)
    if ns.parabolic is not None:
        cfg.parabolic = ns.parabolic
    for name in ("u", "v", "w", "d", "format", "threads", "oracle", "prune"):
        val = getattr(ns, name)
        if val is not None:
            setattr(cfg, name, val)
    return cfg.validate()


# -- output helpers ------------------------------------------------------------

def word_list(pq: ParabolicQuotient, k: int) -> list:
    return [i + 1 for i in pq.word(k)]


def coeff_record(pq, u, v, w, d, poly: Polynomial) -> dict:
    return {"u": word_list(pq, u), "v": word_list(pq, v), "w": word_list(pq, w),
            "d": list(d), "poly": poly.to_json()}


def product_records(pq, u, v, vec: ClassVector) -> list:
    n = qdegree.grading_vector(pq)
    return [coeff_record(pq, u, v, w, d, c) for (w, d), c in vec.sorted_items(n)]


def load_schema() -> dict:
    text = resources.files("eqsc").joinpath("schema/coefficient.schema.json").read_text()
    return json.loads(text)


def _element(cfg, pq, name):
    text = getattr(cfg, name)
    if text is None:
        raise UsageError(f"--{name} is required for {cfg.command}")
    return pq.index(parse_element(text, pq.rs, pq))


# -- commands -------------------------------------------------------------------

def run(cfg: JobConfig, out=None) -> int:
    out = out or sys.stdout
    pq = cfg.quotient()
    fmt = cfg.format

    def emit(s=""):
        out.write(s + "\n")

    if cfg.command == "check":
        rep = run_checks(pq, oracle=cfg.oracle, prune=cfg.prune, threads=cfg.threads)
        emit(json.dumps(rep.to_json(), sort_keys=True))
        return 0 if rep.ok else 2

    eng = EqlrEngine(pq, prune=cfg.prune, threads=cfg.threads)

    if cfg.command == "coeff":
        u, v, w = (_element(cfg, pq, k) for k in ("u", "v", "w"))
        d = qdegree.parse_degree(cfg.d or "0", pq)
        val = eng.compute(u, v, w, d)
        if fmt == "json":
            emit(json.dumps(coeff_record(pq, u, v, w, d, val)))
        else:
            emit(format_poly(val))
        return 0

    if cfg.command == "product":
        u, v = _element(cfg, pq, "u"), _element(cfg, pq, "v")
        vec = eng.multiply(u, v)
        if fmt == "json":
            emit(json.dumps(product_records(pq, u, v, vec)))
        else:
            emit(vec.format(pq))
        return 0

    if cfg.command == "table":
        records = []
        if fmt == "text":
            emit(f"# {NOTE}")
        for u in range(pq.size):
            for v in range(u, pq.size):
                vec = eng.multiply(u, v)
                if fmt == "json":
                    records.extend(product_records(pq, u, v, vec))
                else:
                    emit(f"σ({pq.name(u)}) ∘ σ({pq.name(v)}) = {vec.format(pq)}")
        if fmt == "json":
            emit(json.dumps(records))
        return 0

    if cfg.command == "chevalley":
        cd = chevalley_data(pq)
        only = _element(cfg, pq, "w") if cfg.w is not None else None
        records = []
        for b in pq.quantum_roots:
            sb = pq.s_of_beta[b]
            for w in range(pq.size):
                if only is not None and w != only:
                    continue
                vec = ClassVector(pq.rs.rank)
                for t in cd.expansions[b][w].terms:
                    vec.add_term(t.target, t.degree, t.coeff)
                if fmt == "json":
                    records.extend(product_records(pq, sb, w, vec))
                else:
                    emit(f"σ(s(β{b + 1})) ∘ σ({pq.name(w)}) = {vec.format(pq)}")
        if fmt == "json":
            emit(json.dumps(records))
        return 0

    raise UsageError(f"unknown command {cfg.command}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(ns)
        return run(cfg)
    except (InternalInconsistency, PolynomialDivisionError) as exc:
        print(f"eqsc: invariant failure: {exc}", file=sys.stderr)
        return 2
    except (UsageError, EqscError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"eqsc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
