from app.numerics.problems.expression import compile_expression, evaluate_constant
from app.numerics.problems.refine import bisect, polish_root, refine_root
from app.numerics.problems.suite import Problem, get_problem, load_entries, suite

__all__ = [
    "compile_expression",
    "evaluate_constant",
    "bisect",
    "polish_root",
    "refine_root",
    "Problem",
    "get_problem",
    "load_entries",
    "suite",
]
