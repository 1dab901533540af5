"""Expression grammar shared by the CLI, reports, and tests.

Variables are ``x1..xn`` (1-based).  When an element lives over a doubled
variable block, the dual block renders with a ``d`` prefix: sources
``x1..xn``, duals ``dx1..dxn``.  Further doublings stack prefixes by block
position (``ddx1`` for the third block of size n, and so on); parsing maps a
token with q ``d`` prefixes and number k to index q*base + (k-1) for the
declared base block size.

Terms:

* power series / polynomials: ``3*x1^2*x2``, exponent 1 written bare;
* divided powers: ``x1^[2]*x2^[1]`` (plain ``x1`` parses as ``x1^[1]``);
* words: ``x1.x2.x1``;
* scalars: integers ``-3`` or fractions ``2/5`` (reduced mod p over F_p);

joined with ``+`` and ``-``.  The zero element prints as ``0``.
"""

from __future__ import annotations

import re

from .dividedpower import DPElement
from .errors import ArityError, ParseError, ShapeMismatch
from .powerseries import EMPTY_INDEX, MultiIndex, SeriesElement
from .scalars import FieldSpec, Scalar
from .zinbiel import ZinElement

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<num>\d+)|(?P<var>d*x\d+)|(?P<sym>[+\-*/^\[\].])")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group()), pos))
        elif m.lastgroup == "var":
            name = m.group()
            q = len(name) - len(name.lstrip("d"))
            tokens.append(("var", (q, int(name[q + 1:])), pos))
        elif m.lastgroup == "sym":
            tokens.append((m.group(), None, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, kind: str, field: FieldSpec,
                 arity: int, base_arity: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.kind = kind
        self.field = field
        self.arity = arity
        self.base = base_arity

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, expect: str | None = None):
        tag, value, pos = self.tokens[self.i]
        if expect is not None and tag != expect:
            raise ParseError(f"expected {expect!r}, found {tag!r}", pos)
        self.i += 1
        return value, pos

    def var_index(self) -> int:
        (q, k), pos = self.take("var")
        if k < 1 or k > self.base:
            raise ArityError(f"variable number {k} outside base block of "
                             f"size {self.base} (at position {pos})")
        idx = q * self.base + (k - 1)
        if idx >= self.arity:
            raise ArityError(f"variable block {q} exceeds arity {self.arity} "
                             f"(at position {pos})")
        return idx

    def coefficient(self) -> Scalar:
        num, _ = self.take("num")
        if self.peek() == "/":
            self.take()
            den, pos = self.take("num")
            if den == 0:
                raise ParseError("zero denominator", pos)
            return self.field.from_fraction(num, den)
        return self.field.embed(num)

    def basis(self):
        """One monomial or word; returns a key or None for a bare scalar."""
        if self.kind == "zinbiel":
            letters = [self.var_index()]
            while self.peek() == ".":
                self.take()
                letters.append(self.var_index())
            return tuple(letters)
        pairs = []
        while True:
            v = self.var_index()
            e = 1
            if self.peek() == "^":
                self.take()
                if self.kind == "dividedpower":
                    self.take("[")
                    e, pos = self.take("num")
                    self.take("]")
                else:
                    e, pos = self.take("num")
                if e < 1:
                    raise ParseError("exponents must be positive", pos)
            pairs.append((v, e))
            if self.peek() == "*" and self.tokens[self.i + 1][0] == "var":
                self.take()
                continue
            break
        return MultiIndex.make(pairs)

    def term(self):
        if self.peek() == "num":
            c = self.coefficient()
            if self.peek() == "*":
                self.take()
                return self.basis(), c
            return None, c  # bare scalar: a constant term
        return self.basis(), self.field.one()

    def expression(self):
        terms = []
        op = "+"
        if self.peek() in ("+", "-"):
            op = self.peek()
            self.take()
        key, c = self.term()
        terms.append((key, -c if op == "-" else c))
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.take()
            key, c = self.term()
            terms.append((key, -c if op == "-" else c))
        if self.peek() != "end":
            raise ParseError("trailing input", self.tokens[self.i][2])
        return terms


def parse_element(text: str, theory, arity: int, base_arity: int | None = None):
    """Parse an expression into the theory's element type over ``arity``."""
    base = base_arity if base_arity is not None else arity
    parser = _Parser(text, theory.kind, theory.field, arity, base)
    terms = parser.expression()
    constants_ok = theory.kind == "polynomial"
    if not constants_ok and any(k is None for k, _ in terms):
        raise ParseError("constant terms are only allowed in the polynomial "
                         "theory", 0)
    if theory.kind == "zinbiel":
        return ZinElement.from_terms(arity, theory.field, terms)
    if theory.kind == "dividedpower":
        return DPElement.from_terms(arity, theory.field, terms)
    fixed = [(EMPTY_INDEX if k is None else k, c) for k, c in terms]
    return SeriesElement.from_terms(arity, theory.field, theory.series_cap,
                                    theory.series_reduced, fixed)


# -- printing ---------------------------------------------------------------


def variable_name(i: int, base: int) -> str:
    q, r = divmod(i, base)
    return "d" * q + f"x{r + 1}"


def format_scalar(s: Scalar) -> str:
    return str(s.value)


def _scalar_sign_split(s: Scalar) -> tuple[bool, str]:
    """(is_negative, magnitude) for joining with + and - (Q only has signs)."""
    if s.field.p is None and s.value < 0:
        return True, str(-s.value)
    return False, str(s.value)


def format_element(elem, base_arity: int | None = None) -> str:
    base = base_arity if base_arity is not None else elem.arity
    if isinstance(elem, ZinElement):
        keys = sorted(elem.coeffs, key=lambda w: (len(w), w))
        render = lambda w: ".".join(variable_name(i, base) for i in w)
    elif isinstance(elem, DPElement):
        keys = sorted(elem.coeffs, key=lambda mi: (mi.degree(), tuple(mi)))
        render = lambda mi: "*".join(f"{variable_name(v, base)}^[{e}]"
                                     for v, e in mi)
    elif isinstance(elem, SeriesElement):
        keys = sorted(elem.coeffs, key=lambda mi: (mi.degree(), tuple(mi)))

        def render(mi):
            return "*".join(variable_name(v, base) +
                            (f"^{e}" if e > 1 else "")
                            for v, e in mi)
    else:
        raise ShapeMismatch(f"cannot format {type(elem).__name__}")
    if not keys:
        return "0"
    pieces = []
    for k, key in enumerate(keys):
        neg, mag = _scalar_sign_split(elem.coeffs[key])
        body = render(key)
        if body == "":
            piece = mag
        elif mag == "1":
            piece = body
        else:
            piece = f"{mag}*{body}"
        if k == 0:
            pieces.append(("-" if neg else "") + piece)
        else:
            pieces.append(("- " if neg else "+ ") + piece)
    return " ".join(pieces)
