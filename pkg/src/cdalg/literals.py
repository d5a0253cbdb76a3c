"""Element literals, the CLI expression grammar, and JSON serialization.

Literals look like ``e1 + 2*e10 - 1/2*e15``; a bare rational is an e0
multiple and whitespace never matters.  The expression grammar accepted
by ``parse_expression`` extends literals with parentheses, a
left-associative ``*`` (the algebra is nonassociative, so chains like
``a*b*c`` are evaluated left to right and anything else must be
parenthesized), and the function forms ``conj(x)``, ``tilde(x)`` and
``assoc(a, b, c)``.

``format_element`` emits the canonical form: terms in ascending basis
order, so ``parse(format(x)) == x`` and formatting a parsed literal
normalizes it.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .element import (
    CDElement,
    associator,
    conjugate,
    make_basis,
    multiply,
    scale,
    tilde,
    zero,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<basis>e\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<punct>[+\-*/(),]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad character at position {pos}: {text[pos:]!r}")
        pos = m.end()
        for kind in ("basis", "int", "name", "punct"):
            value = m.group(kind)
            if value is not None:
                tokens.append((kind, value))
                break
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], level: int):
        self.tokens = tokens
        self.pos = 0
        self.level = level

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, value: str) -> None:
        tok = self.take()
        if tok[1] != value:
            raise ValueError(f"expected {value!r}, got {tok[1]!r}")

    # expr := term (('+'|'-') term)*
    def expr(self) -> CDElement:
        acc = self.term()
        while (tok := self.peek()) and tok[1] in "+-":
            self.take()
            rhs = self.term()
            acc = acc + rhs if tok[1] == "+" else acc - rhs
        return acc

    # term := factor ('*' factor)* , left-associative
    def term(self) -> CDElement:
        acc = self.factor()
        while (tok := self.peek()) and tok[1] == "*":
            self.take()
            acc = multiply(acc, self.factor())
        return acc

    # factor := ['+'|'-'] atom
    def factor(self) -> CDElement:
        sign = 1
        while (tok := self.peek()) and tok[1] in "+-":
            self.take()
            if tok[1] == "-":
                sign = -sign
        atom = self.atom()
        return -atom if sign < 0 else atom

    def atom(self) -> CDElement:
        kind, value = self.take()
        if kind == "basis":
            return make_basis(self.level, int(value[1:]))
        if kind == "int":
            coeff = Fraction(int(value))
            if (tok := self.peek()) and tok[1] == "/":
                self.take()
                dkind, dvalue = self.take()
                if dkind != "int":
                    raise ValueError(f"expected integer denominator, got {dvalue!r}")
                coeff = Fraction(int(value), int(dvalue))
            # juxtaposed coefficient: "2e10" or "1/2e10"
            if (tok := self.peek()) and tok[0] == "basis":
                return scale(coeff, self.atom())
            return scale(coeff, make_basis(self.level, 0))
        if kind == "punct" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            if value in ("conj", "tilde"):
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return conjugate(arg) if value == "conj" else tilde(arg)
            if value == "assoc":
                self.expect("(")
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(",")
                c = self.expr()
                self.expect(")")
                return associator(a, b, c)
            raise ValueError(f"unknown function {value!r}")
        raise ValueError(f"unexpected token {value!r}")


def parse_expression(text: str, level: int) -> CDElement:
    """Evaluate an expression at the given level."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    parser = _Parser(tokens, level)
    result = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input: {parser.tokens[parser.pos:]}")
    return result


def parse_element(text: str, level: int) -> CDElement:
    """Parse an element literal (a restricted expression)."""
    return parse_expression(text, level)


def _format_term(index: int, coeff: Fraction) -> str:
    if index == 0:
        return str(coeff)
    if coeff == 1:
        return f"e{index}"
    if coeff == -1:
        return f"-e{index}"
    return f"{coeff}*e{index}"


def format_element(x: CDElement) -> str:
    """Canonical literal: terms in ascending basis order, '0' for zero."""
    parts = []
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        term = _format_term(i, c)
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts) if parts else "0"


def element_to_dict(x: CDElement) -> dict:
    """JSON shape: {"level": n, "coeffs": ["p/q", ...]}."""
    return {"level": x.level, "coeffs": [str(c) for c in x.coeffs]}


def element_from_dict(data: dict) -> CDElement:
    level = int(data["level"])
    coeffs = [Fraction(c) for c in data["coeffs"]]
    if len(coeffs) != 1 << level:
        raise ValueError("coefficient count does not match level")
    return CDElement(level, tuple(coeffs))


def element_to_json(x: CDElement) -> str:
    return json.dumps(element_to_dict(x), sort_keys=True)


def element_from_json(text: str) -> CDElement:
    return element_from_dict(json.loads(text))
