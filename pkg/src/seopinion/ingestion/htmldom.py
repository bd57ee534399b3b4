"""Lenient HTML parsing into a minimal DOM for XPath evaluation.

Built on the stdlib tolerant parser; recovers from the common tag-soup
patterns on real product pages (unclosed li/p/tr/td, stray end tags, void
elements) without trying to be a full browser parser.
"""

from __future__ import annotations

from html.parser import HTMLParser
from typing import Iterator, Union

VOID_ELEMENTS = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)

# starting <key> implicitly closes any open tag in the value set
_IMPLIED_CLOSES = {
    "li": {"li"},
    "p": {"p"},
    "tr": {"tr", "td", "th"},
    "td": {"td", "th"},
    "th": {"td", "th"},
    "thead": {"tr", "td", "th"},
    "tbody": {"tr", "td", "th"},
    "tfoot": {"tr", "td", "th"},
    "option": {"option"},
    "dt": {"dt", "dd"},
    "dd": {"dt", "dd"},
}


class Element:
    """One element node; children mix Elements and raw text strings."""

    __slots__ = ("tag", "attrs", "children")

    def __init__(self, tag: str, attrs: dict[str, str] | None = None) -> None:
        self.tag = tag
        self.attrs = attrs or {}
        self.children: list[Union["Element", str]] = []

    def child_elements(self) -> list["Element"]:
        return [c for c in self.children if isinstance(c, Element)]

    def iter_elements(self) -> Iterator["Element"]:
        """All descendant elements in document order (self excluded)."""
        for child in self.children:
            if isinstance(child, Element):
                yield child
                yield from child.iter_elements()

    def text_nodes(self) -> list[str]:
        """Direct text children, untrimmed."""
        return [c for c in self.children if isinstance(c, str)]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<Element {self.tag} attrs={self.attrs} children={len(self.children)}>"


class _TreeBuilder(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.root = Element("#document")
        self._stack = [self.root]

    def _open(self, tag: str, attrs: list[tuple[str, str | None]], push: bool) -> None:
        implied = _IMPLIED_CLOSES.get(tag)
        if implied:
            while len(self._stack) > 1 and self._stack[-1].tag in implied:
                self._stack.pop()
        element = Element(tag, {k: (v or "") for k, v in attrs})
        self._stack[-1].children.append(element)
        if push and tag not in VOID_ELEMENTS:
            self._stack.append(element)

    def handle_starttag(self, tag: str, attrs: list[tuple[str, str | None]]) -> None:
        self._open(tag, attrs, push=True)

    def handle_startendtag(self, tag: str, attrs: list[tuple[str, str | None]]) -> None:
        self._open(tag, attrs, push=False)

    def handle_endtag(self, tag: str) -> None:
        # pop to the matching open tag; ignore stray end tags entirely
        for i in range(len(self._stack) - 1, 0, -1):
            if self._stack[i].tag == tag:
                del self._stack[i:]
                return

    def handle_data(self, data: str) -> None:
        if data:
            self._stack[-1].children.append(data)


def parse_html(text: str) -> Element:
    """Parse (possibly malformed) HTML into a document root element."""
    builder = _TreeBuilder()
    builder.feed(text)
    builder.close()
    return builder.root
