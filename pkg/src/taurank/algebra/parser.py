"""
Parser for the line oriented quiver format (``.qa`` files)::

    # comments start with a hash
    name: ALG-B
    convention: after
    vertices: 1 2 3
    arrow a: 2 -> 1
    arrow b: 3 -> 2
    relations:
    a*b

``a*b`` means "first b, then a" under the default ``after`` convention.
With ``convention: before`` paths are written in travel order and are
normalised on input. Every line after ``relations:`` holds one relation,
a sum of terms ``[+|-] [coefficient [*]] path`` with rational
coefficients such as ``-1/2 a1*b2``.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from taurank.algebra.quiver import Arrow
from taurank.algebra.quiver import Path
from taurank.algebra.quiver import Quiver
from taurank.algebra.quiver import RelationPoly
from taurank.exceptions import NonComposablePathError
from taurank.exceptions import NonParallelRelationError
from taurank.exceptions import QuiverSyntaxError
from taurank.exceptions import UnknownArrowError


from typing import Literal
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Iterator

    Convention = Literal['after', 'before']


IDENTIFIER = r'[A-Za-z_][A-Za-z0-9_]*'
TOKEN = re.compile(
    rf'(?P<number>\d+(?:/\d+)?)|(?P<name>{IDENTIFIER})|(?P<op>[+\-*])'
    r'|(?P<space>\s+)|(?P<error>.)'
)
ARROW = re.compile(
    rf'^arrow\s+(?P<name>{IDENTIFIER})\s*:\s*(?P<source>\S+)\s*->'
    r'\s*(?P<target>\S+)\s*$'
)
HEADER = re.compile(r'^(?P<key>[a-z_]+)\s*:\s*(?P<value>.*)$')


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


@dataclass(frozen=True)
class ParsedQuiver:
    quiver: Quiver
    relations: tuple[RelationPoly, ...]
    name: str | None = None
    convention: 'Convention' = 'after'


def strip_comment(line: str) -> str:
    return line.split('#', 1)[0].rstrip()


def tokenize(text: str, line: int, offset: int = 0) -> 'Iterator[Token]':
    for match in TOKEN.finditer(text):
        kind = match.lastgroup
        assert kind is not None
        column = offset + match.start() + 1
        if kind == 'space':
            continue
        if kind == 'error':
            raise QuiverSyntaxError(
                f'unexpected character {match.group()!r}', line, column
            )
        yield Token(kind, match.group(), column)


class TermParser:
    """
    Recursive descent over one line of terms.

    Produces ``(coefficient, names, column)`` triples; names are kept in
    the order they were written and interpreted by the caller.
    """

    def __init__(self, text: str, line: int, offset: int = 0):
        self.tokens = list(tokenize(text, line, offset))
        self.position = 0
        self.line = line
        self.end_column = offset + len(text) + 1

    def peek(self) -> Token | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise QuiverSyntaxError(
                'unexpected end of line', self.line, self.end_column
            )
        self.position += 1
        return token

    def error(self, message: str, token: Token | None) -> QuiverSyntaxError:
        column = token.column if token else self.end_column
        return QuiverSyntaxError(message, self.line, column)

    def terms(self) -> list[tuple[Fraction, tuple[str, ...], int]]:
        result = []
        first = True
        while self.peek() is not None or first:
            sign = Fraction(1)
            token = self.peek()
            if token is not None and token.kind == 'op' and token.text in '+-':
                self.take()
                if token.text == '-':
                    sign = Fraction(-1)
            elif not first:
                raise self.error("expected '+' or '-'", token)
            first = False

            coefficient = Fraction(1)
            token = self.peek()
            if token is not None and token.kind == 'number':
                self.take()
                try:
                    coefficient = Fraction(token.text)
                except ZeroDivisionError:
                    raise self.error('zero denominator', token) from None
                following = self.peek()
                if following is not None and following.text == '*':
                    self.take()

            token = self.take()
            if token.kind != 'name':
                raise self.error('expected a path', token)
            names = [token.text]
            column = token.column
            while (following := self.peek()) is not None \
                    and following.text == '*':
                self.take()
                token = self.take()
                if token.kind != 'name':
                    raise self.error('expected an arrow name', token)
                names.append(token.text)
            result.append((sign * coefficient, tuple(names), column))
        return result


def resolve_path(
    quiver:     Quiver,
    names:      tuple[str, ...],
    convention: 'Convention',
    line:       int,
    column:     int,
    allow_idempotents: bool = False
) -> Path:
    if convention == 'before':
        names = tuple(reversed(names))
    if allow_idempotents and len(names) == 1 \
            and not quiver.has_arrow(names[0]) \
            and names[0].startswith('e') \
            and names[0][1:] in quiver.vertices:
        return Path.trivial(quiver.vertex_index(names[0][1:]))
    for name in names:
        if not quiver.has_arrow(name):
            raise UnknownArrowError(f'unknown arrow: {name}', line, column)
    path = quiver.path(names)
    if path is None:
        raise NonComposablePathError(
            f'path {"*".join(names)} is not composable', line, column
        )
    return path


def parse_terms(
    quiver:     Quiver,
    text:       str,
    line:       int,
    convention: 'Convention' = 'after',
    min_length: int = 2,
    allow_idempotents: bool = False
) -> tuple[tuple[Fraction, Path], ...]:
    terms = []
    first_column = 0
    for coefficient, names, column in TermParser(text, line).terms():
        path = resolve_path(
            quiver, names, convention, line, column, allow_idempotents
        )
        if terms:
            reference = terms[0][1]
            if (path.source, path.target) != (
                    reference.source, reference.target):
                raise NonParallelRelationError(
                    f'term {"*".join(names)} is not parallel to the '
                    f'first term (column {first_column})', line, column
                )
        else:
            first_column = column
        if path.length < min_length and path.arrows:
            raise QuiverSyntaxError(
                f'paths must have length at least {min_length}',
                line, column
            )
        terms.append((coefficient, path))
    return tuple(terms)


def parse_quiver_file(text: str) -> ParsedQuiver:
    name: str | None = None
    convention: Convention = 'after'
    vertices: tuple[str, ...] | None = None
    arrows: list[Arrow] = []
    arrow_lines: list[tuple[int, str, str, str]] = []
    relation_lines: list[tuple[int, str]] = []
    in_relations = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        if not line.strip():
            continue
        if in_relations:
            relation_lines.append((number, line))
            continue

        stripped = line.strip()
        column = len(line) - len(line.lstrip()) + 1
        if stripped.startswith('arrow ') or stripped.startswith('arrow\t'):
            match = ARROW.match(stripped)
            if match is None:
                raise QuiverSyntaxError(
                    "expected 'arrow NAME: SOURCE -> TARGET'",
                    number, column
                )
            arrow_lines.append((
                number, match['name'], match['source'], match['target']
            ))
            continue

        match = HEADER.match(stripped)
        if match is None:
            raise QuiverSyntaxError(
                f'cannot parse line: {stripped!r}', number, column
            )
        key, value = match['key'], match['value'].strip()
        if key == 'relations':
            if value:
                raise QuiverSyntaxError(
                    "relations start on the line after 'relations:'",
                    number, column + len('relations:')
                )
            in_relations = True
        elif key == 'vertices':
            if vertices is not None:
                raise QuiverSyntaxError('vertices declared twice', number,
                                        column)
            vertices = tuple(value.split())
            if not vertices:
                raise QuiverSyntaxError('no vertices declared', number,
                                        column)
            if len(set(vertices)) != len(vertices):
                raise QuiverSyntaxError('duplicate vertex label', number,
                                        column)
        elif key == 'convention':
            if value not in ('after', 'before'):
                raise QuiverSyntaxError(
                    f'unknown convention: {value}', number, column
                )
            convention = value  # type:ignore[assignment]
        elif key == 'name':
            name = value
        else:
            raise QuiverSyntaxError(f'unknown header: {key}', number,
                                    column)

    if vertices is None:
        raise QuiverSyntaxError("missing 'vertices:' line", 1, 1)

    seen = set()
    for number, arrow_name, source, target in arrow_lines:
        if arrow_name in seen:
            raise QuiverSyntaxError(
                f'duplicate arrow name: {arrow_name}', number, 1
            )
        seen.add(arrow_name)
        for label in (source, target):
            if label not in vertices:
                raise QuiverSyntaxError(
                    f'arrow {arrow_name} uses undeclared vertex {label}',
                    number, 1
                )
        arrows.append(Arrow(
            arrow_name, vertices.index(source), vertices.index(target)
        ))

    quiver = Quiver(vertices, tuple(arrows))
    relations = tuple(
        RelationPoly(parse_terms(quiver, line, number, convention))
        for number, line in relation_lines
    )
    return ParsedQuiver(quiver, relations, name, convention)


def parse_elements(
    quiver:     Quiver,
    text:       str,
    convention: 'Convention' = 'after'
) -> list[tuple[tuple[Fraction, Path], ...]]:
    """
    Parses an ideal file: one algebra element per line, terms are paths
    of any positive length or idempotents ``e<vertex>``.
    """
    elements = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        if not line.strip():
            continue
        elements.append(parse_terms(
            quiver, line, number, convention,
            min_length=1, allow_idempotents=True
        ))
    return elements
