"""Surface syntax for Toeplitz symbols.

Grammar (whitespace insignificant, offsets in bytes):

    expr  := ('-')? term (('+'|'-') term)*
    term  := coeff ('*')? atom | atom | coeff
    atom  := 'z' ('^' int)? | 'zbar' ('^' int)? | 'indicator(' real ')'
    coeff := rational 'p/q' | decimal | '(' re ('+'|'-') im 'i' ')'

Rationals and decimals are parsed exactly as fractions and converted to
floating point once, when the term is stored.  The indicator atom takes
no coefficient (its normalization is fixed).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .toeplitz import SymbolExpr

_SYMBOL_CHARS = "+-*/^()"
_NAMES = ("z", "zbar", "indicator", "i")


@dataclass(frozen=True)
class Token:
    kind: str       # "number", "name", one of +-*/^(), or "end"
    text: str
    offset: int
    value: object = None
    integral: bool = False


def _tokenize(source: str):
    tokens = []
    pos = 0
    n = len(source)
    while pos < n:
        ch = source[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _SYMBOL_CHARS:
            tokens.append(Token(ch, ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and source[pos].isdigit():
                pos += 1
            integral = True
            if pos < n and source[pos] == ".":
                integral = False
                pos += 1
                while pos < n and source[pos].isdigit():
                    pos += 1
            mantissa = source[start:pos]
            exponent = 0
            if pos < n and source[pos] in "eE":
                mark = pos
                pos += 1
                if pos < n and source[pos] in "+-":
                    pos += 1
                if pos >= n or not source[pos].isdigit():
                    raise ParseError("malformed exponent", mark, ("digit",))
                digits_start = pos
                while pos < n and source[pos].isdigit():
                    pos += 1
                exponent = int(source[mark + 1:pos])
                integral = False
            value = Fraction(mantissa)
            if exponent > 0:
                value *= Fraction(10) ** exponent
            elif exponent < 0:
                value /= Fraction(10) ** (-exponent)
            tokens.append(Token("number", source[start:pos], start, value, integral))
            continue
        if ch.isalpha():
            start = pos
            while pos < n and source[pos].isalpha():
                pos += 1
            word = source[start:pos]
            if word not in _NAMES:
                raise ParseError(f"unknown name {word!r}", start, _NAMES[:3])
            tokens.append(Token("name", word, start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos,
                         ("number", "z", "zbar", "indicator"))
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, expected: tuple) -> Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(f"unexpected {token.text or 'end of input'!r}",
                             token.offset, expected)
        return self.advance()

    # coeff := rational | decimal | '(' re (+|-) im 'i' ')'
    def parse_coeff(self) -> complex:
        token = self.peek()
        if token.kind == "number":
            return complex(float(self.parse_signed_fraction(sign=1)), 0.0)
        if token.kind == "(":
            self.advance()
            real = self.parse_signed_fraction(sign=self.take_sign(optional=True))
            nxt = self.peek()
            if nxt.kind == ")":
                self.advance()
                return complex(float(real), 0.0)
            sign = self.take_sign(optional=False)
            imag = self.parse_signed_fraction(sign=sign)
            name = self.expect("name", ("i",))
            if name.text != "i":
                raise ParseError("imaginary part must end in 'i'", name.offset, ("i",))
            self.expect(")", (")",))
            return complex(float(real), float(imag))
        raise ParseError(f"unexpected {token.text or 'end of input'!r}",
                         token.offset, ("number", "("))

    def take_sign(self, optional: bool) -> int:
        token = self.peek()
        if token.kind == "+":
            self.advance()
            return 1
        if token.kind == "-":
            self.advance()
            return -1
        if optional:
            return 1
        raise ParseError(f"unexpected {token.text or 'end of input'!r}",
                         token.offset, ("+", "-"))

    def parse_signed_fraction(self, sign: int) -> Fraction:
        token = self.expect("number", ("number",))
        value = token.value
        if self.peek().kind == "/":
            if not token.integral:
                raise ParseError("rational numerator must be an integer",
                                 token.offset, ("integer",))
            self.advance()
            denom = self.expect("number", ("integer",))
            if not denom.integral or denom.value == 0:
                raise ParseError("rational denominator must be a nonzero integer",
                                 denom.offset, ("integer",))
            value = value / denom.value
        return sign * value

    # atom := z (^ int)? | zbar (^ int)? | indicator ( real )
    def parse_atom(self):
        token = self.expect("name", ("z", "zbar", "indicator"))
        if token.text == "i":
            raise ParseError("'i' is only valid inside a complex coefficient",
                             token.offset, ("z", "zbar", "indicator"))
        if token.text == "indicator":
            self.expect("(", ("(",))
            j_token = self.expect("number", ("number",))
            j_value = j_token.value
            if self.peek().kind == "/":
                self.advance()
                denom = self.expect("number", ("integer",))
                j_value = j_value / denom.value
            self.expect(")", (")",))
            if not j_value > 1:
                raise ParseError("indicator parameter must exceed 1",
                                 j_token.offset, ("real > 1",))
            return ("indicator", float(j_value))
        exponent = 1
        if self.peek().kind == "^":
            self.advance()
            num = self.expect("number", ("integer",))
            if not num.integral:
                raise ParseError("exponent must be an integer", num.offset, ("integer",))
            exponent = int(num.value)
            if exponent < 1:
                raise ParseError("exponent must be >= 1", num.offset, ("integer >= 1",))
        return ("term", exponent if token.text == "z" else -exponent)

    def parse_term(self, sign: int) -> None:
        token = self.peek()
        coeff = complex(sign, 0)
        have_coeff = False
        if token.kind in ("number", "("):
            coeff = sign * self.parse_coeff()
            have_coeff = True
            if self.peek().kind == "*":
                self.advance()
            elif self.peek().kind != "name":
                self.terms[0] = self.terms.get(0, 0j) + coeff
                return
        self.apply_atom(self.parse_atom(), coeff, sign, have_coeff)

    def apply_atom(self, atom, coeff: complex, sign: int, have_coeff: bool) -> None:
        kind, value = atom
        if kind == "indicator":
            if have_coeff or sign != 1:
                raise ParseError("indicator term cannot carry a coefficient or sign",
                                 self.tokens[self.index - 1].offset, ("indicator",))
            self.indicators.append(value)
            return
        self.terms[value] = self.terms.get(value, 0j) + coeff

    def parse(self) -> SymbolExpr:
        self.terms: dict = {}
        self.indicators: list = []
        sign = 1
        if self.peek().kind == "-":
            self.advance()
            sign = -1
        self.parse_term(sign)
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.advance().kind == "+" else -1
            self.parse_term(sign)
        end = self.peek()
        if end.kind != "end":
            raise ParseError(f"trailing input {end.text!r}", end.offset, ("+", "-", "end"))
        if len(self.indicators) > 1:
            raise ParseError("at most one indicator term", 0, ("indicator",))
        indicator_j = self.indicators[0] if self.indicators else None
        try:
            return SymbolExpr(self.terms, indicator_j=indicator_j)
        except ValueError as exc:
            raise ParseError(str(exc), 0, ()) from exc


def parse_symbol(text: str) -> SymbolExpr:
    """Parse symbol source text; raise ParseError with offset on rejection."""
    return _Parser(text).parse()


def _format_real(x: float) -> str:
    return f"{x:.17g}"


def _atom_text(exponent: int) -> str:
    if exponent >= 2:
        return f"z^{exponent}"
    if exponent == 1:
        return "z"
    if exponent == -1:
        return "zbar"
    return f"zbar^{-exponent}"


def format_symbol(symbol: SymbolExpr) -> str:
    """Canonical text form; reparsing reproduces the symbol exactly."""
    pieces = []     # (sign, body) with sign in "+-"
    for exponent in sorted(symbol.terms, reverse=True):
        coeff = symbol.terms[exponent]
        atom = _atom_text(exponent) if exponent != 0 else ""
        if coeff.imag == 0.0:
            real = coeff.real
            sign = "-" if real < 0 else "+"
            mag = abs(real)
            if not atom:
                body = _format_real(mag)
            elif mag == 1.0:
                body = atom
            else:
                body = f"{_format_real(mag)}*{atom}"
        else:
            sign = "+"
            im_sign = "+" if coeff.imag >= 0 else "-"
            body = (f"({_format_real(coeff.real)}{im_sign}"
                    f"{_format_real(abs(coeff.imag))}i)")
            if atom:
                body += f"*{atom}"
        pieces.append((sign, body))
    if symbol.indicator_j is not None:
        pieces.append(("+", f"indicator({_format_real(symbol.indicator_j)})"))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
