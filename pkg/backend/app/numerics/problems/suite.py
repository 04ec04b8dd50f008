# app/numerics/problems/suite.py
"""
The seven benchmark test functions.

Each Problem wraps a scalar function with an evaluation counter, a real-domain
guard and a reference root. The suite itself lives in data/suite.json so the
CLI can list it and generate_reference_roots.py can write refined digits back.

f7 is printed with cos(pi/2), a constant zero, under which 1/3 is not a root
(and there is no real root at all). The suite reads it as cos(pi*x/2), which
makes 1/3 exact; settings.F7_LITERAL switches back to the printed form.
"""
import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import mpmath
from mpmath import mp, mpf

from app.config import settings
from app.numerics.exceptions import DomainError
from app.numerics.problems.expression import compile_expression, evaluate_constant
from app.numerics.problems.refine import polish_root, refine_root
from app.schemas.problem import Domain, ProblemEntry

logger = logging.getLogger(__name__)

DATA_FILE = Path(__file__).parent / "data" / "suite.json"


class Problem:
    """
    A named scalar function f: BigScalar -> BigScalar.

    Calling the problem counts the evaluation; `value` evaluates without
    counting (reference-root refinement, analysis stencils).
    Instances are not shared between concurrent solves: use `fresh()`.
    """

    def __init__(
        self,
        name: str,
        func: Callable[[mpf], mpf],
        expression: Optional[str] = None,
        domain: Optional[Domain] = None,
        bracket: Optional[Tuple[str, str]] = None,
        listed_root: Optional[str] = None,
        exact_root: Optional[str] = None,
        stored_root: Optional[str] = None,
    ):
        self.name = name
        self.func = func
        self.expression = expression
        self.domain = domain or Domain()
        self.bracket = tuple(bracket) if bracket is not None else None
        self.listed_root = listed_root
        self.exact_root = exact_root
        self.stored_root = stored_root
        self.calls = 0

    @classmethod
    def from_entry(cls, item: ProblemEntry, literal: bool = False) -> "Problem":
        if literal and item.literal_expression:
            # The printed f7 has no real root
            return cls(
                name=item.name,
                func=compile_expression(item.literal_expression),
                expression=item.literal_expression,
                domain=item.domain,
                listed_root=item.listed_root,
            )
        return cls(
            name=item.name,
            func=compile_expression(item.expression),
            expression=item.expression,
            domain=item.domain,
            bracket=item.bracket,
            listed_root=item.listed_root,
            exact_root=item.exact_root,
            stored_root=item.root,
        )

    @classmethod
    def from_expression(cls, text: str, name: Optional[str] = None, bracket=None) -> "Problem":
        return cls(name=name or text, func=compile_expression(text), expression=text, bracket=bracket)

    # ---------------- evaluation ----------------

    def admissible(self, x: mpf) -> bool:
        d = self.domain
        if d.lower is not None:
            lower = mpf(d.lower)
            if x < lower or (d.lower_open and x == lower):
                return False
        if d.upper is not None:
            upper = mpf(d.upper)
            if x > upper or (d.upper_open and x == upper):
                return False
        return all(x != mpf(p) for p in d.exclude)

    def value(self, x: mpf) -> mpf:
        """Evaluate without counting. Raises DomainError outside the domain."""
        if not self.admissible(x):
            raise DomainError(f"{self.name} undefined at {mpmath.nstr(x, 12)} (domain {self.domain.describe()})")
        try:
            return self.func(x)
        except ZeroDivisionError as e:
            raise DomainError(f"{self.name}: {e}") from e

    def __call__(self, x: mpf) -> mpf:
        self.calls += 1
        return self.value(x)

    @property
    def counter(self) -> int:
        return self.calls

    def reset(self) -> None:
        self.calls = 0

    def fresh(self) -> "Problem":
        """Same function, independent counter."""
        return Problem(
            name=self.name,
            func=self.func,
            expression=self.expression,
            domain=self.domain,
            bracket=self.bracket,
            listed_root=self.listed_root,
            exact_root=self.exact_root,
            stored_root=self.stored_root,
        )

    def derivative(self) -> "Problem":
        """f' by mpmath's high-precision numerical differentiation (Newton baseline only)."""
        func = self.func
        return Problem(
            name=f"{self.name}'",
            func=lambda x: mpmath.diff(func, x),
            domain=self.domain,
        )

    # ---------------- reference root ----------------

    @property
    def has_reference_root(self) -> bool:
        return bool(self.exact_root or self.stored_root or self.bracket)

    def reference_root(self) -> Optional[mpf]:
        """
        Root good to the current working precision, or None when unknown.

        Exact roots are evaluated from their expression; otherwise the bisection
        reference (settings.REFERENCE_DIGITS deep) is polished to mp.dps.
        """
        if self.exact_root:
            return evaluate_constant(self.exact_root)
        if not self.has_reference_root:
            return None
        if self.expression is not None:
            return +_cached_reference_root(
                self.name,
                self.expression,
                self.domain.model_dump_json(),
                self.bracket,
                self.stored_root,
                settings.REFERENCE_DIGITS,
                mp.dps,
            )
        return _reference_root(self, settings.REFERENCE_DIGITS)

    def __repr__(self) -> str:
        return f"Problem({self.name!r}, calls={self.calls})"


def _reference_root(problem: Problem, depth: int) -> mpf:
    if problem.stored_root:
        base = mpf(problem.stored_root)
        depth = max(depth, len(problem.stored_root.lstrip("-").replace(".", "")) - 1)
    else:
        base = refine_root(problem, problem.bracket, depth)
    if mp.dps > depth:
        return polish_root(problem, base, depth)
    return +base


@lru_cache(maxsize=128)
def _cached_reference_root(name, expression, domain_json, bracket, stored_root, depth, dps) -> mpf:
    problem = Problem(
        name=name,
        func=compile_expression(expression),
        domain=Domain.model_validate_json(domain_json),
        bracket=bracket,
        stored_root=stored_root,
    )
    source = "stored digits" if stored_root else "bisection"
    logger.info(f"[PROBLEMS] Reference root of {name} at {dps} digits from {source}")
    return _reference_root(problem, depth)


@lru_cache(maxsize=1)
def load_entries() -> Tuple[ProblemEntry, ...]:
    with open(DATA_FILE, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    items = tuple(ProblemEntry(**entry) for entry in raw)
    logger.debug(f"[PROBLEMS] Loaded {len(items)} problems from {DATA_FILE.name}")
    return items


def suite(literal_f7: Optional[bool] = None) -> List[Problem]:
    """Fresh f1..f7 instances in suite order."""
    literal = settings.F7_LITERAL if literal_f7 is None else literal_f7
    return [Problem.from_entry(item, literal=literal) for item in load_entries()]


def get_problem(name: str, literal_f7: Optional[bool] = None) -> Problem:
    for problem in suite(literal_f7):
        if problem.name == name:
            return problem
    raise KeyError(f"unknown problem '{name}'")
