"""Freely reduced words in a free group with numbered generators x1, x2, ...

A word is stored as a tuple of nonzero ints: +k for x_k, -k for x_k^{-1}.
All public constructors freely reduce, so ``Word`` values are canonical and
two words are equal iff they are the same element of the free group.

Conventions (used throughout the package):

* conjugation  a^g = g^{-1} a g
* commutator  [a, b] = a^{-1} b^{-1} a b
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from commlab import kernels


class Letter(NamedTuple):
    """A single generator occurrence: generator index and a sign (+1 or -1)."""

    index: int
    sign: int


class ParseError(ValueError):
    """Raised on malformed word or braid text; carries the token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position


@dataclass(frozen=True)
class Word:
    """A freely reduced word; ``letters`` holds signed generator indices."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for c in self.letters:
            if not isinstance(c, int) or c == 0:
                raise ValueError(f"invalid letter {c!r}: want a nonzero int")
            if c == -prev:
                raise ValueError("word is not freely reduced; use free_reduce")
            prev = c

    @classmethod
    def identity(cls) -> Word:
        return cls(())

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> Word:
        if index < 1:
            raise ValueError(f"generator index must be >= 1, got {index}")
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        return cls((sign * index,))

    def __mul__(self, other: Word) -> Word:
        return Word(kernels.multiply_reduced(self.letters, other.letters))

    def inverse(self) -> Word:
        return Word(kernels.invert_reduced(self.letters))

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        out = Word.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self, by: Word) -> Word:
        """self^by = by^{-1} * self * by."""
        return by.inverse() * self * by

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def symbols(self) -> Iterator[Letter]:
        for c in self.letters:
            yield Letter(abs(c), 1 if c > 0 else -1)

    def max_index(self) -> int:
        """Largest generator index appearing (0 for the identity)."""
        return max((abs(c) for c in self.letters), default=0)

    def __str__(self) -> str:
        return render_word(self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def free_reduce(letters: Iterable[int]) -> Word:
    """Build a Word from an arbitrary letter string, reducing as needed."""
    letters = tuple(letters)
    for c in letters:
        if not isinstance(c, int) or c == 0:
            raise ValueError(f"invalid letter {c!r}: want a nonzero int")
    return Word(kernels.reduce_letters(letters))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^{-1} b^{-1} a b."""
    return a.inverse() * b.inverse() * a * b


_WORD_TOKEN = re.compile(r"^x([1-9][0-9]*)(\^-1)?$")


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens ``x<k>`` and ``x<k>^-1``.

    The empty string parses to the identity. Indices start at 1; anything
    else (x0, stray characters, missing index) raises ParseError with the
    offending token position.
    """
    return free_reduce(_parse_letters(text, "x"))


def render_word(w: Word) -> str:
    """Inverse of parse_word; the identity renders as the empty string."""
    return " ".join(
        f"x{abs(c)}" if c > 0 else f"x{abs(c)}^-1" for c in w.letters
    )


def _parse_letters(text: str, symbol: str) -> list[int]:
    pattern = re.compile(rf"^{symbol}([1-9][0-9]*)(\^-1)?$")
    letters: list[int] = []
    for pos, token in enumerate(text.split(), start=1):
        m = pattern.match(token)
        if m is None:
            raise ParseError(f"bad token {token!r}", pos)
        index = int(m.group(1))
        letters.append(-index if m.group(2) else index)
    return letters
