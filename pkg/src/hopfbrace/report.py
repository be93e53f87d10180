"""Check reports and the named precondition errors shared by all modules."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lintensor import Morphism, mor_eq


@dataclass
class Law:
    name: str
    passed: bool
    witness: dict | None = None
    elapsed_ms: float = 0.0
    group: str = "axiom"

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "group": self.group, "verdict": self.verdict}
        out["witness"] = self.witness
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


@dataclass
class CheckReport:
    subject: str
    laws: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(l.passed for l in self.laws)

    @property
    def overall(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def law(self, name: str) -> Law:
        for l in self.laws:
            if l.name == name:
                return l
        raise KeyError(name)

    def verdict(self, name: str) -> bool:
        return self.law(name).passed

    def failed(self) -> list:
        return [l.name for l in self.laws if not l.passed]

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for l in other.laws:
            self.laws.append(Law(prefix + l.name, l.passed, l.witness, l.elapsed_ms, l.group))
        return self

    def add(self, name: str, passed: bool, group: str = "axiom", witness=None) -> "CheckReport":
        self.laws.append(Law(name, passed, witness, 0.0, group))
        return self

    def to_json(self, timing: bool = False) -> dict:
        return {
            "subject": self.subject,
            "overall": self.overall,
            "laws": [l.to_json(timing) for l in self.laws],
        }

    def summary(self) -> str:
        lines = [f"{self.subject}: {self.overall.upper()}"]
        for l in self.laws:
            mark = "ok  " if l.passed else "FAIL"
            lines.append(f"  {mark} {l.name}")
            if l.witness:
                lines.append(f"       at {tuple(l.witness['labels'])}")
                lines.append(f"       lhs {_terms(l.witness['lhs'])}")
                lines.append(f"       rhs {_terms(l.witness['rhs'])}")
        return "\n".join(lines)


def _terms(terms: list) -> str:
    if not terms:
        return "0"
    return " + ".join(f"{c}·{'⊗'.join(lab)}" if lab else c for lab, c in terms)


def check_equal(name: str, lhs: Morphism, rhs: Morphism, jobs: int | None = None,
                group: str = "axiom") -> Law:
    t0 = time.perf_counter()
    res = mor_eq(lhs, rhs, jobs=jobs)
    ms = (time.perf_counter() - t0) * 1000
    wit = None
    if not res.equal:
        w = res.witness
        wit = {
            "index": w.index,
            "labels": list(w.labels),
            "lhs": w.image_terms(lhs.cod, w.lhs),
            "rhs": w.image_terms(rhs.cod, w.rhs),
        }
    return Law(name, res.equal, wit, ms, group)


def run_laws(subject: str, laws: Iterable[Sequence], jobs: int | None = None) -> CheckReport:
    """``laws``: (name, lhs, rhs) or (name, lhs, rhs, group)."""
    rep = CheckReport(subject)
    for entry in laws:
        name, lhs, rhs = entry[:3]
        group = entry[3] if len(entry) > 3 else "axiom"
        rep.laws.append(check_equal(name, lhs, rhs, jobs, group))
    return rep


class PreconditionFailed(Exception):
    """A construction or checker refused its input.  CLI exit code 3."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


class NoAntipode(PreconditionFailed):
    pass


class AntipodeNotInvertible(PreconditionFailed):
    pass


class BadCharacteristic(PreconditionFailed):
    pass


class InvalidMatchedPair(PreconditionFailed):
    pass


class InvalidAction(PreconditionFailed):
    pass


class NotInCocommutativityClass(PreconditionFailed):
    pass


class NotCocommutative(PreconditionFailed):
    pass


class ConditionFailed(PreconditionFailed):
    pass


class InvalidBrace(PreconditionFailed):
    pass


class InvalidInput(PreconditionFailed):
    pass


class NotConvolutionInverse(PreconditionFailed):
    pass
