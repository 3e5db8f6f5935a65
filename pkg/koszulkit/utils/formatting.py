import re
from typing import Any, Dict, Iterable, List, Sequence, Union

from sympy import Poly, Rational, factor, symbols
from sympy.polys.domains import QQ

from koszulkit.exceptions import InputError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

z = symbols("z")


def parse_rational(value: Union[int, str]) -> Any:
    """Parse an integer or a "p/q" string into an exact rational"""
    if isinstance(value, bool):
        raise InputError(f"invalid rational coefficient: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    match = _RATIONAL.match(str(value))
    if not match:
        raise InputError(f"invalid rational coefficient: {value!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise InputError(f"zero denominator in coefficient: {value!r}")
    return QQ(numerator, denominator)


def format_rational(value: Any) -> str:
    """Format an exact rational as "p" or "p/q" """
    numerator, denominator = int(QQ.numer(value)), int(QQ.denom(value))
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def polynomial_expr(coefficients: Dict[int, int]):
    """Build a sympy expression in z from {exponent: coefficient}"""
    return sum(
        (Rational(c) * z**e for e, c in sorted(coefficients.items())), Rational(0)
    )


def format_polynomial(coefficients: Dict[int, int], factored: bool = False) -> str:
    """Render a polynomial in z, optionally factored over the rationals"""
    expr = polynomial_expr(coefficients)
    if factored:
        return str(factor(expr))
    if expr == 0:
        return "0"
    return str(Poly(expr, z).as_expr())


def render_tsv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Render rows as an aligned tab separated table"""
    table: List[List[str]] = [list(columns)] + [[str(v) for v in row] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    lines = ["\t".join(cell.rjust(widths[i]) for i, cell in enumerate(line)) for line in table]
    return "\n".join(lines) + "\n"
