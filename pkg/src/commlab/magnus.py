"""Truncated Magnus expansion over noncommuting indeterminates.

The expansion sends x_k to 1 + X_k and x_k^{-1} to the alternating geometric
series 1 - X_k + X_k^2 - ... truncated at the cutoff degree. Monomials are
tuples of generator indices, so X_1 X_2 is the key (1, 2) and the constant
term is the empty tuple. A word lies in the k-th lower central series term
gamma_k of the free group iff its expansion minus 1 has no monomial of
degree below k, which makes membership decidable by expanding at cutoff k-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from commlab.words import Word

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial truncated beyond ``cutoff``; zero coefficients dropped."""

    cutoff: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.cutoff < 0:
            raise ValueError(f"cutoff must be >= 0, got {self.cutoff}")
        for mono, coeff in self.terms.items():
            if len(mono) > self.cutoff:
                raise ValueError(f"monomial {mono} exceeds cutoff {self.cutoff}")
            if coeff == 0:
                raise ValueError(f"zero coefficient stored for {mono}")

    @classmethod
    def one(cls, cutoff: int) -> TruncatedSeries:
        return cls(cutoff, {(): 1})

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if self.cutoff != other.cutoff:
            raise ValueError(
                f"cutoff mismatch: {self.cutoff} vs {other.cutoff}"
            )
        acc: dict[Monomial, int] = {}
        cutoff = self.cutoff
        for m1, c1 in self.terms.items():
            room = cutoff - len(m1)
            for m2, c2 in other.terms.items():
                if len(m2) > room:
                    continue
                mono = m1 + m2
                val = acc.get(mono, 0) + c1 * c2
                if val:
                    acc[mono] = val
                elif mono in acc:
                    del acc[mono]
        return TruncatedSeries(cutoff, acc)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    @property
    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def min_positive_degree(self) -> int | None:
        """Smallest degree >= 1 carrying a nonzero term, None if there is none."""
        degrees = [len(m) for m in self.terms if m]
        return min(degrees) if degrees else None

    def render(self) -> str:
        """Deterministic text form, monomials sorted by degree then lex."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            coeff = self.terms[mono]
            if mono:
                body = " ".join(f"X{i}" for i in mono)
                if abs(coeff) != 1:
                    body = f"{abs(coeff)}·{body}"
            else:
                body = str(abs(coeff))
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _letter_series(letter: int, cutoff: int) -> TruncatedSeries:
    k = abs(letter)
    if letter > 0:
        terms: dict[Monomial, int] = {(): 1}
        if cutoff >= 1:
            terms[(k,)] = 1
        return TruncatedSeries(cutoff, terms)
    terms = {(k,) * d: (-1) ** d for d in range(cutoff + 1)}
    return TruncatedSeries(cutoff, terms)


def expand(w: Word, cutoff: int) -> TruncatedSeries:
    """Magnus expansion of a word, truncated beyond degree ``cutoff``."""
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    out = TruncatedSeries.one(cutoff)
    for c in w.letters:
        out = out * _letter_series(c, cutoff)
    return out


def gamma_membership(w: Word, k: int) -> bool:
    """Whether w lies in gamma_k of the ambient free group (k >= 1)."""
    if k < 1:
        raise ValueError(f"lower central index must be >= 1, got {k}")
    low = expand(w, k - 1).min_positive_degree()
    return low is None
