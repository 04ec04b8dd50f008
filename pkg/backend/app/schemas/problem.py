# app/schemas/problem.py
from typing import List, Optional, Tuple

from pydantic import BaseModel


class Domain(BaseModel):
    """Admissible real inputs of a test function"""

    lower: Optional[str] = None
    upper: Optional[str] = None
    lower_open: bool = False
    upper_open: bool = False
    exclude: List[str] = []  # isolated points, e.g. the pole of 1/(2x)

    def describe(self) -> str:
        if self.lower is None and self.upper is None and not self.exclude:
            return "R"
        left = "(" if self.lower_open or self.lower is None else "["
        right = ")" if self.upper_open or self.upper is None else "]"
        text = f"{left}{self.lower or '-inf'}, {self.upper or 'inf'}{right}"
        if self.exclude:
            text += " \\ {" + ", ".join(self.exclude) + "}"
        return text


class ProblemEntry(BaseModel):
    """One entry of the problem suite data file"""

    name: str
    expression: str
    literal_expression: Optional[str] = None  # the printed form, when it differs
    domain: Domain = Domain()
    bracket: Optional[Tuple[str, str]] = None
    listed_root: Optional[str] = None  # published decimal root
    exact_root: Optional[str] = None  # expression, e.g. "1/3"
    root: Optional[str] = None  # refined digits written by generate_reference_roots.py
