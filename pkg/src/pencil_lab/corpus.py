"""JSON Lines corpus of fractions with optional expectations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .mpoly import default_names
from .parse import parse
from .spectrum import SpectrumReport, spectrum, spectrum_multivar

__all__ = ["CorpusEntry", "CorpusError", "EntryResult", "load_corpus", "run_entry", "run_corpus"]

EXPECT_KEYS = {"composite", "rho", "spectrum_size", "bounds"}


class CorpusError(ValueError):
    pass


@dataclass
class CorpusEntry:
    name: str
    nvars: int
    f: str
    expect: dict = field(default_factory=dict)
    vars: list[str] | None = None

    @property
    def variables(self) -> list[str]:
        return self.vars or default_names(self.nvars)


@dataclass
class EntryResult:
    name: str
    ok: bool
    report: SpectrumReport | None = None
    failures: list[str] = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "failures": self.failures,
            "error": self.error,
            "report": self.report.to_json() if self.report else None,
        }


def _validate(obj, seen: set[str]) -> CorpusEntry:
    if not isinstance(obj, dict):
        raise CorpusError("entry must be a JSON object")
    name, nvars, f = obj.get("name"), obj.get("nvars"), obj.get("f")
    if not isinstance(name, str) or not name:
        raise CorpusError("missing or empty 'name'")
    if name in seen:
        raise CorpusError(f"duplicate name {name!r}")
    if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 2:
        raise CorpusError("'nvars' must be an integer >= 2")
    if not isinstance(f, str) or not f.strip():
        raise CorpusError("'f' must be a nonempty expression string")
    expect = obj.get("expect", {})
    if not isinstance(expect, dict) or set(expect) - EXPECT_KEYS:
        raise CorpusError(f"'expect' may only contain {sorted(EXPECT_KEYS)}")
    names = obj.get("vars")
    if names is not None and (not isinstance(names, list) or len(names) != nvars):
        raise CorpusError("'vars' must list exactly nvars names")
    return CorpusEntry(name, nvars, f, expect, names)


def load_corpus(lines: Iterable[str]) -> list[CorpusEntry | EntryResult]:
    """Parse corpus lines; malformed lines become failed results in place."""
    out: list[CorpusEntry | EntryResult] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        label = f"line {lineno}"
        try:
            obj = json.loads(line)
            if isinstance(obj, dict) and isinstance(obj.get("name"), str):
                label = obj["name"]
            entry = _validate(obj, seen)
        except (json.JSONDecodeError, CorpusError) as exc:
            out.append(EntryResult(label, False, error=f"schema: {exc}"))
            continue
        seen.add(entry.name)
        out.append(entry)
    return out


def _check(entry: CorpusEntry, report: SpectrumReport) -> list[str]:
    fails = []
    exp = entry.expect
    if "composite" in exp and exp["composite"] != report.composite:
        fails.append(f"composite: expected {exp['composite']}, got {report.composite}")
    if "rho" in exp and exp["rho"] != report.rho:
        fails.append(f"rho: expected {exp['rho']}, got {report.rho}")
    if "spectrum_size" in exp and exp["spectrum_size"] != report.spectrum_size():
        fails.append(f"spectrum_size: expected {exp['spectrum_size']}, got {report.spectrum_size()}")
    for key, want in exp.get("bounds", {}).items():
        got = report.bounds.get(key)
        if got != want:
            fails.append(f"bounds.{key}: expected {want}, got {got}")
    return fails


def run_entry(entry: CorpusEntry, seed: int = 0, retry_budget: int = 8,
              max_degree: int | None = None) -> EntryResult:
    try:
        f = parse(entry.f, entry.variables)
        if f.is_constant():
            raise ValueError("constant fraction")
        if max_degree is not None and f.degree > max_degree:
            raise ValueError(f"degree {f.degree} exceeds the limit {max_degree}")
        if entry.nvars == 2:
            report = spectrum(f, seed)
        else:
            report = spectrum_multivar(f, seed, retry_budget)
    except Exception as exc:  # reported per entry, the run continues
        return EntryResult(entry.name, False, error=f"{type(exc).__name__}: {exc}")
    fails = _check(entry, report)
    return EntryResult(entry.name, not fails, report, fails)


def run_corpus(lines: Iterable[str], seed: int = 0, retry_budget: int = 8,
               max_degree: int | None = None) -> list[EntryResult]:
    results = []
    for item in load_corpus(lines):
        if isinstance(item, EntryResult):
            results.append(item)
        else:
            results.append(run_entry(item, seed, retry_budget, max_degree))
    return results
