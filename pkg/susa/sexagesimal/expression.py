"""

The `expression` module evaluates small infix expressions over sexagesimal numerals, such as `14,24 * 0;5` or `(10 + 7) / 2`.

Grammar::

    expression := term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := '-' factor | '(' expression ')' | numeral

Numerals follow `parse_sex`. Evaluation is exact; errors raise `NumeralSyntaxError` with the column of the offending token.
"""
import re
import typing

from susa.sexagesimal import arithmetic
from susa.sexagesimal.numerals import NumeralSyntaxError, SexRational, parse_sex

__all__ = ("evaluate",)

TOKEN_PATTERN = re.compile(r"\s*(?:(?P<numeral>[0-9][0-9,;]*)|(?P<operator>[-+*/()]))")

OPERATORS: dict[str, typing.Callable[[SexRational, SexRational], SexRational]] = {
    "+": arithmetic.add,
    "-": arithmetic.sub,
    "*": arithmetic.mul,
    "/": arithmetic.div,
}


class Token(typing.NamedTuple):
    kind: str
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            column = position + len(text[position:]) - len(text[position:].lstrip()) + 1
            raise NumeralSyntaxError(
                f"Unexpected character {text[column - 1]!r}", text, column
            )
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind) + 1))
        position = match.end()
    return tokens


class Parser:
    """A recursive descent evaluator over a token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> typing.Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.peek()
        if token is None:
            raise NumeralSyntaxError("Unexpected end of expression", self.text, len(self.text) + 1)
        self.index += 1
        return token

    def expression(self) -> SexRational:
        value = self.term()
        while (token := self.peek()) is not None and token.text in "+-":
            self.advance()
            value = OPERATORS[token.text](value, self.term())
        return value

    def term(self) -> SexRational:
        value = self.factor()
        while (token := self.peek()) is not None and token.text in "*/":
            self.advance()
            value = OPERATORS[token.text](value, self.factor())
        return value

    def factor(self) -> SexRational:
        token = self.advance()
        if token.text == "-":
            return -self.factor()
        if token.text == "(":
            value = self.expression()
            closing = self.advance()
            if closing.text != ")":
                raise NumeralSyntaxError("Expected ')'", self.text, closing.column)
            return value
        if token.kind == "numeral":
            try:
                return parse_sex(token.text)
            except NumeralSyntaxError as error:
                raise NumeralSyntaxError(
                    "Invalid numeral", self.text, token.column + error.column - 1
                ) from error
        raise NumeralSyntaxError(f"Unexpected {token.text!r}", self.text, token.column)

    def parse(self) -> SexRational:
        if not self.tokens:
            raise NumeralSyntaxError("Empty expression", self.text, 1)
        value = self.expression()
        if (token := self.peek()) is not None:
            raise NumeralSyntaxError(f"Unexpected {token.text!r}", self.text, token.column)
        return value


def evaluate(expression: str) -> SexRational:
    """
    Evaluates an infix expression over sexagesimal numerals exactly.

    Args:
        expression (str):
             For example `14,24 * 0;5`, which evaluates to 72 (`1,12`).

    Returns:
        SexRational:
             The exact value.

    Raises:
        NumeralSyntaxError:
             On malformed input.
        ZeroDivisionError:
             On division by zero.

    """
    return Parser(expression).parse()
