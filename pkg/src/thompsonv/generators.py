"""The standard four-element generating set of V and words over it.

Any finite generating set changes word length only by a multiplicative
constant; this fixed choice is recorded in report metadata so that lengths
are comparable across runs. Words are tuples of signed symbols and evaluate
left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .elements import Element
from .trees import ParseError

GENERATOR_NAMES = ("x0", "x1", "c", "pi")

_GENERATOR_TEXT = {
    "x0": "(.,(.,.))|((.,.),.)|[1,2,3]",
    "x1": "(.,(.,(.,.)))|(.,((.,.),.))|[1,2,3,4]",
    "c": "(.,(.,.))|(.,(.,.))|[2,3,1]",
    "pi": "(.,(.,.))|(.,(.,.))|[2,1,3]",
}


@dataclass(frozen=True, slots=True)
class GenSymbol:
    name: str
    exp: int = 1

    def __post_init__(self) -> None:
        if self.name not in GENERATOR_NAMES:
            raise ValueError(f"unknown generator {self.name!r}")
        if self.exp not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {self.exp}")

    def inverse(self) -> GenSymbol:
        return GenSymbol(self.name, -self.exp)

    def __str__(self) -> str:
        return self.name if self.exp == 1 else f"{self.name}^-1"


Word = tuple[GenSymbol, ...]


@lru_cache(maxsize=None)
def generator_element(name: str) -> Element:
    return Element.parse(_GENERATOR_TEXT[name])


def standard_generators() -> list[Element]:
    """The elements x0, x1, c, pi, in that order."""
    return [generator_element(name) for name in GENERATOR_NAMES]


@lru_cache(maxsize=None)
def symbol_element(symbol: GenSymbol) -> Element:
    g = generator_element(symbol.name)
    return g if symbol.exp == 1 else g.inverse()


def format_word(word: Word) -> str:
    return " ".join(str(s) for s in word)


def parse_word(text: str) -> Word:
    """Whitespace-separated symbols, each optionally suffixed by ^-1."""
    out: list[GenSymbol] = []
    offset = 0
    for token in text.split():
        offset = text.index(token, offset)
        name, sep, suffix = token.partition("^")
        if name not in GENERATOR_NAMES or (sep and suffix != "-1"):
            raise ParseError(f"bad word symbol {token!r}", offset)
        out.append(GenSymbol(name, -1 if sep else 1))
        offset += len(token)
    return tuple(out)


def invert_word(word: Word) -> Word:
    return tuple(s.inverse() for s in reversed(word))


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs; keeps spliced conjugates short."""
    out: list[GenSymbol] = []
    for s in word:
        if out and out[-1].name == s.name and out[-1].exp == -s.exp:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def power_word(symbol_name: str, n: int) -> Word:
    s = GenSymbol(symbol_name, 1 if n >= 0 else -1)
    return (s,) * abs(n)


def evaluate_word(word: Word) -> Element:
    """Left-to-right product of the symbols; the empty word is the identity."""
    out = Element.identity()
    for s in word:
        out = out * symbol_element(s)
    return out
