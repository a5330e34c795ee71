"""Pass/fail reports shared by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ['Check', 'Report']


@dataclass
class Check:
    name: str
    passed: bool
    residual: float | None = None
    detail: str = ''

    def to_json(self) -> dict:
        d = {'name': self.name, 'passed': self.passed}
        if self.residual is not None:
            d['residual'] = float(f'{self.residual:.12g}')
        if self.detail:
            d['detail'] = self.detail
        return d


@dataclass
class Report:
    """Outcome of one verification; passes iff every check passes."""
    specs: tuple
    checks: list[Check] = field(default_factory=list)
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, residual=None, detail='') -> Check:
        c = Check(name, bool(passed), None if residual is None else float(residual), detail)
        self.checks.append(c)
        return c

    def check(self, name) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        d = {'specs': [s if isinstance(s, dict) else s.to_json() for s in self.specs],
             'passed': self.passed, 'checks': [c.to_json() for c in self.checks]}
        if self.counterexample is not None:
            d['counterexample'] = self.counterexample
        if self.details:
            d['details'] = self.details
        return d
