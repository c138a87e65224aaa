"""Text and JSON formats for monomial ideals.

Input files look like::

    ring n=2
    I = x1^2, x2^2

Blank lines and lines starting with ``#`` are ignored.  Monomials are
products of ``x<idx>`` or ``x<idx>^<exp>`` joined by ``*``; ``1`` is the unit
monomial and an empty right-hand side is the zero ideal.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .monomials import Monomial, MonomialIdeal, RingContext, minimalize

__all__ = ["parse_ideal", "format_ideal", "ideal_to_json", "ideal_from_json"]

_RING = re.compile(r"\s*ring\s+n\s*=\s*(\S*)\s*$")


class _Cursor:
    def __init__(self, text, lineno, offset):
        self.text = text
        self.pos = offset
        self.lineno = lineno

    def error(self, message, pos=None):
        return ParseError(message, self.lineno, (self.pos if pos is None else pos) + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, what):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if not token.lstrip("+-"):
            raise self.error(f"expected {what}", start)
        return int(token), start


def _parse_monomial(cur, n):
    exps = [0] * n
    if cur.peek() == "1":
        cur.pos += 1
        return Monomial(exps)
    while True:
        if cur.peek() != "x":
            raise cur.error("expected a variable like x1 or the unit monomial 1")
        cur.pos += 1
        idx, start = cur.integer("a variable index")
        if not 1 <= idx <= n:
            raise cur.error(f"variable index {idx} out of range 1..{n}", start)
        power = 1
        if cur.peek() == "^":
            cur.pos += 1
            power, start = cur.integer("an exponent")
            if power <= 0:
                raise cur.error(f"exponent must be positive, got {power}", start)
        exps[idx - 1] += power
        if cur.peek() != "*":
            return Monomial(exps)
        cur.pos += 1


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [(k, line) for k, line in enumerate(text.splitlines(), start=1)
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input; expected 'ring n=<int>'", 1, 1)
    lineno, header = lines[0]
    match = _RING.match(header)
    if not match:
        raise ParseError("expected header 'ring n=<int>'", lineno, 1)
    value = match.group(1)
    if not value.isdigit() or int(value) < 1:
        raise ParseError(f"ring size must be a positive integer, got {value!r}",
                         lineno, match.start(1) + 1)
    n = int(value)
    if len(lines) < 2:
        raise ParseError("missing ideal line 'I = ...'", lineno + 1, 1)
    if len(lines) > 2:
        raise ParseError("unexpected extra line", lines[2][0], 1)
    lineno, body = lines[1]
    cur = _Cursor(body, lineno, 0)
    if cur.peek() != "I":
        raise cur.error("expected 'I = ...'")
    cur.pos += 1
    cur.expect("=")
    gens = []
    if cur.peek():
        while True:
            gens.append(_parse_monomial(cur, n))
            nxt = cur.peek()
            if not nxt:
                break
            if nxt != ",":
                raise cur.error(f"unexpected character {nxt!r}")
            cur.pos += 1
    return minimalize(gens, RingContext(n))


def format_ideal(ideal: MonomialIdeal) -> str:
    body = ", ".join(str(g) for g in ideal.gens)
    return f"ring n={ideal.n}\nI = {body}".rstrip() + "\n"


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {
        "ring": {"num_vars": ideal.n},
        "generators": [list(g) for g in ideal.gens],
        "text": format_ideal(ideal),
    }


def ideal_from_json(data: dict) -> MonomialIdeal:
    return MonomialIdeal(RingContext(data["ring"]["num_vars"]), data["generators"])
