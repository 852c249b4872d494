"""
Series literals: canonical text and JSON term lists.

Text form sorts terms by total degree, then by x-exponent descending, e.g.
"1 - 1/2*x*y + y^2". Lambda-polynomial coefficients are parenthesized,
e.g. "(lam)*x + (1/2 - lam^2)*x*y".
"""

import json
import math
import re
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..consts import FLOAT_FORMAT, LAMBDA_SYMBOL
from ..errors import ParseError
from .coeffs import ONE, Coeff, LambdaPoly, from_literal, normalize, to_fraction, to_literal
from .series1 import Series1
from .series2 import Series2

_EXPONENT = re.compile(r"^([a-z]+)(?:\^(\d+))?$")


# Rendering

def _monomial(powers: Sequence[Tuple[str, int]]) -> str:
    return "*".join(name if p == 1 else f"{name}^{p}" for name, p in powers if p)


def _render_terms(entries: Sequence[Tuple[Sequence[Tuple[str, int]], Coeff]]) -> str:
    pieces: List[Tuple[str, str]] = []
    for powers, c in entries:
        mono = _monomial(powers)
        if isinstance(c, LambdaPoly) and c.degree >= 1:
            body = f"({c.render()})"
            pieces.append(('+', f"{body}*{mono}" if mono else body))
            continue
        value = c.coeffs[0] if isinstance(c, LambdaPoly) else c
        sign = '-' if value < 0 else '+'
        mag = abs(value)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    text = ('-' if sign == '-' else '') + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def render_series2(s: Series2) -> str:
    return _render_terms([((('x', xk), ('y', yk)), c) for xk, yk, c in s.terms()])


def render_series1(s: Series1, var: str = 'x') -> str:
    return _render_terms([(((var, i),), c) for i, c in s.terms()])


# Parsing

def _split_signed(text: str) -> List[Tuple[int, str]]:
    """Split at top-level + and - into (sign, term) pairs."""
    parts: List[Tuple[int, str]] = []
    depth, sign, start = 0, 1, 0
    text = text.strip()
    if text.startswith('-'):
        sign, start = -1, 1
    elif text.startswith('+'):
        start = 1
    i = start
    while i < len(text):
        ch = text[i]
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' in {text!r}")
        elif ch in '+-' and depth == 0 and i > start and text[i - 1] not in '^*/':
            parts.append((sign, text[start:i].strip()))
            sign = 1 if ch == '+' else -1
            start = i + 1
        i += 1
    if depth:
        raise ParseError(f"unbalanced '(' in {text!r}")
    parts.append((sign, text[start:].strip()))
    for _, term in parts:
        if not term:
            raise ParseError(f"empty term in {text!r}")
    return parts


def parse_lambda_poly(text: str, symbol: str = LAMBDA_SYMBOL) -> LambdaPoly:
    acc = LambdaPoly()
    for sign, term in _split_signed(text):
        coefficient, power = Fraction(sign), 0
        for factor in term.split('*'):
            factor = factor.strip()
            match = _EXPONENT.match(factor)
            if match and match.group(1) == symbol:
                power += int(match.group(2) or 1)
            else:
                coefficient *= to_fraction(factor)
        acc = acc + LambdaPoly.monomial(power, coefficient)
    return acc


def _parse_term(term: str, variables: Sequence[str]) -> Tuple[Dict[str, int], Coeff]:
    powers = {name: 0 for name in variables}
    coefficient: Coeff = ONE
    rest = term
    if rest.startswith('('):
        close = rest.index(')')
        coefficient = parse_lambda_poly(rest[1:close])
        rest = rest[close + 1:].lstrip('*')
    for factor in filter(None, (f.strip() for f in rest.split('*'))):
        match = _EXPONENT.match(factor)
        if match and match.group(1) in powers:
            powers[match.group(1)] += int(match.group(2) or 1)
        elif match and match.group(1) == LAMBDA_SYMBOL:
            coefficient = coefficient * LambdaPoly.monomial(int(match.group(2) or 1))
        else:
            coefficient = coefficient * to_fraction(factor)
    return powers, coefficient


def parse_series2(text: str, order: int) -> Series2:
    """Parse canonical (or any sum-of-monomials) text in x and y."""
    if text.strip() == "0":
        return Series2.zero(order)
    terms: Dict[Tuple[int, int], Coeff] = {}
    for sign, term in _split_signed(text):
        powers, c = _parse_term(term, ('x', 'y'))
        key = (powers['x'], powers['y'])
        terms[key] = terms.get(key, 0) + c * sign
    return Series2.from_terms(terms, order)


def parse_series1(text: str, order: int, var: str = 'x') -> Series1:
    if text.strip() == "0":
        return Series1.zero(order)
    terms: Dict[int, Coeff] = {}
    for sign, term in _split_signed(text):
        powers, c = _parse_term(term, (var,))
        terms[powers[var]] = terms.get(powers[var], 0) + c * sign
    return Series1.from_terms(terms, order)


# JSON

def series2_to_terms(s: Series2) -> List[Dict[str, Any]]:
    return [{'xk': xk, 'yk': yk, 'c': to_literal(c)} for xk, yk, c in s.terms()]


def series1_to_terms(s: Series1) -> List[Dict[str, Any]]:
    return [{'k': i, 'c': to_literal(c)} for i, c in s.terms()]


def series2_from_terms(terms: Any, order: int, field: Optional[str] = None) -> Series2:
    """Build a Series2 from a JSON term list; every failure names the field."""
    if not isinstance(terms, list):
        raise ParseError("expected a list of terms", field=field)
    table: Dict[Tuple[int, int], Coeff] = {}
    for index, term in enumerate(terms):
        where = f"{field}[{index}]" if field else f"[{index}]"
        if not isinstance(term, dict) or not {'xk', 'yk', 'c'} <= set(term):
            raise ParseError("term needs keys xk, yk, c", field=where)
        xk, yk = term['xk'], term['yk']
        if not isinstance(xk, int) or not isinstance(yk, int) or xk < 0 or yk < 0:
            raise ParseError("exponents must be non-negative integers", field=where)
        try:
            c = from_literal(term['c'])
        except ParseError as exc:
            raise ParseError(str(exc), field=where) from exc
        table[(xk, yk)] = normalize(table.get((xk, yk), 0) + c)
    return Series2.from_terms(table, order)


def parse_json_document(text: str) -> Any:
    """json.loads with errors mapped to ParseError carrying the line."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc


_FLOAT_TAG = "\x00float:"
_TAGGED_FLOAT = re.compile(r'"\\u0000float:([^"]*)"')


def _tag_floats(value: Any) -> Any:
    """Replace finite floats with tagged FLOAT_FORMAT text, recursively."""
    if isinstance(value, float):
        return _FLOAT_TAG + FLOAT_FORMAT % value if math.isfinite(value) else value
    if isinstance(value, dict):
        return {key: _tag_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_tag_floats(item) for item in value]
    return value


def dump_json(payload: Any) -> str:
    """
    Deterministic JSON rendering used for every machine-readable output.

    Keys are sorted and finite floats carry 17 significant digits.
    """
    text = json.dumps(_tag_floats(payload), sort_keys=True, indent=2)
    return _TAGGED_FLOAT.sub(r"\1", text)
