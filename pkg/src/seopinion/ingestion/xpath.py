"""A small XPath evaluator covering the subset used by site rule configs.

Supported grammar (validated at parse time):

    xpath     := ('/' | '//') step (('/' | '//') step)* '/' 'text()'
    step      := NAME predicate*
    predicate := '[@' NAME '=' quoted ']'   attribute equality
               | '[' INTEGER ']'            1-based position (child axis only)

`//` selects descendants, `/` selects children. Expressions must end in a
`/text()` terminal and return the matched text nodes in document order.
Anything outside this subset raises ValidationError.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import ValidationError
from .htmldom import Element

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.:-]*")


@dataclass(frozen=True)
class AttrPredicate:
    name: str
    value: str


@dataclass(frozen=True)
class PositionPredicate:
    index: int  # 1-based


Predicate = Union[AttrPredicate, PositionPredicate]


@dataclass(frozen=True)
class Step:
    descendant: bool  # // vs /
    name: str
    predicates: tuple[Predicate, ...]


@dataclass(frozen=True)
class XPathExpr:
    source: str
    steps: tuple[Step, ...]  # element steps; the trailing text() is implicit


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> ValidationError:
        return ValidationError(f"invalid xpath {self.text!r} at {self.pos}: {message}")

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def name(self) -> str:
        match = _NAME_RE.match(self.text, self.pos)
        if not match:
            raise self.fail("expected a name")
        self.pos = match.end()
        return match.group(0)

    def quoted(self) -> str:
        if self.eof() or self.text[self.pos] not in "'\"":
            raise self.fail("expected quoted string")
        quote = self.text[self.pos]
        end = self.text.find(quote, self.pos + 1)
        if end < 0:
            raise self.fail("unterminated string")
        value = self.text[self.pos + 1 : end]
        self.pos = end + 1
        return value

    def predicates(self, descendant: bool) -> tuple[Predicate, ...]:
        preds: list[Predicate] = []
        while self.take("["):
            if self.take("@"):
                attr = self.name()
                if not self.take("="):
                    raise self.fail("expected '=' in attribute predicate")
                value = self.quoted()
                preds.append(AttrPredicate(attr, value))
            else:
                start = self.pos
                while not self.eof() and self.text[self.pos].isdigit():
                    self.pos += 1
                if start == self.pos:
                    raise self.fail("expected '@attr' or a position number")
                index = int(self.text[start : self.pos])
                if index < 1:
                    raise self.fail("positions are 1-based")
                if descendant:
                    raise self.fail("positional predicate requires the child axis")
                preds.append(PositionPredicate(index))
            if not self.take("]"):
                raise self.fail("expected ']'")
        return tuple(preds)


def parse_xpath(text: str) -> XPathExpr:
    """Parse and validate an expression; raises ValidationError on any error."""
    parser = _Parser(text.strip())
    steps: list[Step] = []
    saw_text = False
    while not parser.eof():
        descendant = False
        if parser.take("//"):
            descendant = True
        elif parser.take("/"):
            descendant = False
        else:
            raise parser.fail("expected '/' or '//'")
        if parser.take("text()"):
            if descendant:
                raise parser.fail("text() requires the child axis")
            if not parser.eof():
                raise parser.fail("text() must be the final step")
            saw_text = True
            break
        name = parser.name()
        steps.append(Step(descendant, name, parser.predicates(descendant)))
    if not steps:
        raise parser.fail("empty expression")
    if not saw_text:
        raise parser.fail("expression must end in /text()")
    return XPathExpr(source=text.strip(), steps=tuple(steps))


def _apply_step(contexts: list[Element], step: Step) -> list[Element]:
    out: list[Element] = []
    seen: set[int] = set()
    for ctx in contexts:
        pool = ctx.iter_elements() if step.descendant else ctx.child_elements()
        matched = [e for e in pool if e.tag == step.name]
        for pred in step.predicates:
            if isinstance(pred, AttrPredicate):
                matched = [e for e in matched if e.attrs.get(pred.name) == pred.value]
            else:
                matched = [matched[pred.index - 1]] if pred.index <= len(matched) else []
        for e in matched:
            if id(e) not in seen:
                seen.add(id(e))
                out.append(e)
    return out


def evaluate(expr: XPathExpr, root: Element) -> list[str]:
    """Evaluate against a parsed document; returns raw text nodes in order."""
    contexts = [root]
    for step in expr.steps:
        contexts = _apply_step(contexts, step)
        if not contexts:
            return []
    texts: list[str] = []
    for ctx in contexts:
        texts.extend(ctx.text_nodes())
    return texts
