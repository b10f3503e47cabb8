"""Job configuration and parsing of user-facing inputs (1-based indices)."""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .errors import BadIndex, NotMinimalRepresentative
from .parabolic import ParabolicQuotient, build_quotient
from .rootsys import RootSystem, WeylElem, build_root_system, word_name

COMMANDS = ("coeff", "product", "table", "chevalley", "check")
FORMATS = ("text", "json")
ORACLES = ("billey", "gkm", "pn")


@dataclass
class JobConfig:
    group: str | list = "A1"
    parabolic: list = field(default_factory=list)
    command: str = "table"
    u: str | None = None
    v: str | None = None
    w: str | None = None
    d: str | None = None
    format: str = "text"
    prune: bool = True
    threads: int = 1
    oracle: str | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.oracle is not None and self.oracle not in ORACLES:
            raise ValueError(f"unknown oracle {self.oracle!r}")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ValueError("threads must be a positive integer")
        return self

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "JobConfig":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "JobConfig":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path: str | Path) -> "JobConfig":
        return cls.from_json(Path(path).read_text())

    def root_system(self) -> RootSystem:
        return build_root_system(self.group if isinstance(self.group, str) else
                                 [list(r) for r in self.group])

    def quotient(self) -> ParabolicQuotient:
        rs = self.root_system()
        return build_quotient(rs, parse_parabolic(self.parabolic, rs.rank))


def parse_group(text: str):
    """A preset name, or a Cartan matrix written as JSON."""
    s = text.strip()
    if s.startswith("["):
        return json.loads(s)
    return s


def parse_indices(text, rank: int) -> list:
    """1-based simple indices from "1 2", "1,2", "s1s2", a list, or "" / "e"."""
    if isinstance(text, (list, tuple)):
        items = [str(x) for x in text]
    else:
        s = str(text).strip()
        if s in ("", "e"):
            return []
        if re.fullmatch(r"(s\d+)+", s):
            items = re.findall(r"\d+", s)
        else:
            items = s.replace(",", " ").split()
    out = []
    for tok in items:
        if not tok.lstrip("-").isdigit():
            raise BadIndex(f"{tok!r} is not an index")
        i = int(tok)
        if not 1 <= i <= rank:
            raise BadIndex(f"index {i} outside 1..{rank}")
        out.append(i - 1)
    return out


def parse_parabolic(text, rank: int) -> list:
    return sorted(set(parse_indices(text, rank)))


def parse_element(text, rs: RootSystem, pq: ParabolicQuotient | None = None) -> WeylElem:
    """Product of the listed simple reflections, left to right.

    With ``pq`` given the element must already be a minimal coset
    representative; otherwise the error names the projection.
    """
    word = parse_indices(text, rs.rank)
    w = rs.from_word(word)
    if pq is not None and not pq.contains(w):
        proj = pq.min_rep(w)
        name = " ".join(str(i + 1) for i in rs.reduced_word(proj)) or "e"
        raise NotMinimalRepresentative(
            f"{word_name(word)} is not a minimal coset representative; did you mean {name!r}?")
    return w
