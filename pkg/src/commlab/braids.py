"""Braid words, pure-braid generators, strand deletion, and Brunnian sampling.

A braid on n strands is a freely reduced word in the Artin generators
sigma_1..sigma_{n-1}, stored like a free-group word: +i for sigma_i, -i for
its inverse. Only free cancellation is applied in storage; braid relations
are never rewritten. Equality of braids as group elements is decided through
the induced automorphism of the free group (`artin_action`), which is
faithful.

Letter order convention: words act left to right, so in ``a * b`` the braid
``a`` is performed first and `artin_action(a * b) == artin_action(a) *
artin_action(b)` with the same left-to-right composition.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from commlab import kernels
from commlab.finite import Permutation
from commlab.words import ParseError, Word, _parse_letters


@dataclass(frozen=True)
class Braid:
    """A braid on ``strands`` strands as a reduced word in the sigmas."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"need at least one strand, got {self.strands}")
        prev = 0
        for c in self.letters:
            if not isinstance(c, int) or not 1 <= abs(c) < self.strands:
                raise ValueError(
                    f"letter {c!r} out of range for {self.strands} strands"
                )
            if c == -prev:
                raise ValueError("braid word is not freely reduced")
            prev = c

    @classmethod
    def identity(cls, strands: int) -> Braid:
        return cls(strands)

    @classmethod
    def generator(cls, strands: int, index: int, sign: int = 1) -> Braid:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        return cls(strands, (sign * index,))

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable[int]) -> Braid:
        return cls(strands, kernels.reduce_letters(letters))

    def __mul__(self, other: Braid) -> Braid:
        if self.strands != other.strands:
            raise ValueError(
                f"strand mismatch: {self.strands} vs {other.strands}"
            )
        return Braid(
            self.strands, kernels.multiply_reduced(self.letters, other.letters)
        )

    def inverse(self) -> Braid:
        return Braid(self.strands, kernels.invert_reduced(self.letters))

    def __pow__(self, n: int) -> Braid:
        base = self if n >= 0 else self.inverse()
        out = Braid.identity(self.strands)
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self, by: Braid) -> Braid:
        """self^by = by^{-1} * self * by."""
        return by.inverse() * self * by

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return render_braid(self)

    def __repr__(self) -> str:
        return f"Braid({self.strands}, {str(self)!r})"


def braid_commutator(a: Braid, b: Braid) -> Braid:
    """[a, b] = a^{-1} b^{-1} a b."""
    return a.inverse() * b.inverse() * a * b


def parse_braid(text: str, strands: int) -> Braid:
    """Parse whitespace-separated tokens ``s<i>`` and ``s<i>^-1``.

    Generator indices must satisfy 1 <= i < strands; violations raise
    ParseError carrying the offending token position.
    """
    letters = _parse_letters(text, "s")
    for pos, c in enumerate(letters, start=1):
        if abs(c) >= strands:
            raise ParseError(
                f"generator s{abs(c)} out of range for {strands} strands", pos
            )
    return Braid.from_letters(strands, letters)


def render_braid(b: Braid) -> str:
    """Inverse of parse_braid; the identity renders as the empty string."""
    return " ".join(
        f"s{abs(c)}" if c > 0 else f"s{abs(c)}^-1" for c in b.letters
    )


# ---------------------------------------------------------------------------
# the induced free-group automorphism


@dataclass(frozen=True)
class ArtinAutomorphism:
    """Automorphism of the free group x_1..x_rank induced by a braid."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError(
                f"want {self.rank} images, got {len(self.images)}"
            )

    @classmethod
    def identity(cls, rank: int) -> ArtinAutomorphism:
        return cls(rank, tuple(Word.generator(k) for k in range(1, rank + 1)))

    @property
    def is_identity(self) -> bool:
        return all(
            img.letters == (k,) for k, img in enumerate(self.images, start=1)
        )

    def apply(self, w: Word) -> Word:
        if w.max_index() > self.rank:
            raise ValueError(f"word uses generators beyond rank {self.rank}")
        out = Word.identity()
        for c in w.letters:
            img = self.images[abs(c) - 1]
            out = out * (img if c > 0 else img.inverse())
        return out

    def __mul__(self, other: ArtinAutomorphism) -> ArtinAutomorphism:
        """Left-to-right composition: apply self first, then other."""
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return ArtinAutomorphism(
            self.rank, tuple(other.apply(img) for img in self.images)
        )


def artin_action(b: Braid) -> ArtinAutomorphism:
    """The automorphism of the free group on x_1..x_strands induced by b.

    sigma_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i; letters of
    the braid word act left to right.
    """
    images = kernels.artin_images(b.strands, b.letters)
    return ArtinAutomorphism(b.strands, tuple(Word(t) for t in images))


def is_trivial(b: Braid) -> bool:
    """True iff b is the identity braid (the Artin action is faithful)."""
    return artin_action(b).is_identity


def strand_permutation(b: Braid) -> Permutation:
    """The permutation sending each strand's start position to its end."""
    occupant = list(range(b.strands))
    for c in b.letters:
        i = abs(c) - 1
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    images = bytearray(b.strands)
    for pos, strand in enumerate(occupant):
        images[strand] = pos
    return Permutation(bytes(images))


def is_pure(b: Braid) -> bool:
    return strand_permutation(b).is_identity


def delete_strand(b: Braid, j: int) -> Braid:
    """Remove the strand that starts at position j and renumber the rest.

    Follows the strand geometrically through the word, drops every crossing
    it participates in, and shifts the remaining generator indices down by
    one wherever the deleted strand sits to their left.
    """
    if b.strands < 2:
        raise ValueError("need at least two strands to delete one")
    if not 1 <= j <= b.strands:
        raise ValueError(f"strand {j} out of range for {b.strands} strands")
    pos = j
    out: list[int] = []
    for c in b.letters:
        i = abs(c)
        if pos == i:
            pos = i + 1
        elif pos == i + 1:
            pos = i
        else:
            k = i - 1 if pos < i else i
            out.append(k if c > 0 else -k)
    return Braid.from_letters(b.strands - 1, out)


def is_brunnian(b: Braid) -> bool:
    """True iff b is pure and every single strand deletion is trivial."""
    if not is_pure(b):
        return False
    if b.strands == 1:
        return True
    return all(is_trivial(delete_strand(b, j)) for j in range(1, b.strands + 1))


# ---------------------------------------------------------------------------
# pure-braid generators


def gen_a(i: int, j: int, n: int) -> Braid:
    """The generator linking strands i and j in front of the others:
    sigma_{j-1} .. sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} .. sigma_{j-1}^{-1}.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    prefix = list(range(j - 1, i, -1))
    letters = prefix + [i, i] + [-k for k in reversed(prefix)]
    return Braid(n, tuple(letters))


def gen_a0(j: int, n: int) -> tuple[Braid, Braid]:
    """Both closing forms of the front-strand generator at position j.

    Returns the product form
    ``(A_{j,j+1} .. A_{j,n})^{-1} (A_{1,j} .. A_{j-1,j})^{-1}`` and the
    sigma-palindrome form
    ``(s_j .. s_{n-2} s_{n-1}^2 s_{n-2} .. s_j)^{-1}
    (s_{j-1} .. s_2 s_1^2 s_2 .. s_{j-1})^{-1}``;
    the two induce the same Artin automorphism.
    """
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    above = Braid.identity(n)
    for k in range(j + 1, n + 1):
        above = above * gen_a(j, k, n)
    below = Braid.identity(n)
    for i in range(1, j):
        below = below * gen_a(i, j, n)
    product_form = above.inverse() * below.inverse()

    up = list(range(j, n))
    down = list(range(j - 1, 0, -1))
    inv_up = [-c for c in reversed(up + up[::-1])]
    inv_down = [-c for c in reversed(down + down[::-1])]
    sigma_form = Braid.from_letters(n, inv_up + inv_down)
    return product_form, sigma_form


def gen_t(i: int, n: int) -> Braid:
    """The braid linking strand i and strand n in front of all others:
    sigma_i^{-1} .. sigma_{n-2}^{-1} sigma_{n-1}^2 sigma_{n-2} .. sigma_i.

    Equal to gen_a(i, n, n) in the braid group: the stored words differ but
    the induced automorphisms agree.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n-1, got i={i}, n={n}")
    prefix = [-k for k in range(i, n - 1)]
    letters = prefix + [n - 1, n - 1] + list(range(n - 2, i - 1, -1))
    return Braid(n, tuple(letters))


# ---------------------------------------------------------------------------
# Brunnian sampling


def sample_brun_generators(
    n: int, conj_depth: int, seed: int, count: int
) -> Iterator[Braid]:
    """Seeded stream of symmetric-commutator generators on n strands.

    Each sample is a left-normed commutator [[r_1, r_2], ..., r_{n-1}] whose
    arguments visit t_1..t_{n-1} in a shuffled order, each inverted half the
    time and conjugated by a short pure braid (a word of up to conj_depth
    letters in the A_{i,j} generators). Every emitted braid is Brunnian.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if conj_depth < 0:
        raise ValueError(f"conj_depth must be >= 0, got {conj_depth}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    rng = random.Random(seed)
    pure_gens = [
        gen_a(i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)
    ]
    for _ in range(count):
        order = list(range(1, n))
        rng.shuffle(order)
        value: Braid | None = None
        for index in order:
            r = gen_t(index, n)
            if rng.random() < 0.5:
                r = r.inverse()
            conj = Braid.identity(n)
            for _ in range(rng.randint(0, conj_depth)):
                g = rng.choice(pure_gens)
                conj = conj * (g if rng.random() < 0.5 else g.inverse())
            r = r.conjugate(conj)
            value = r if value is None else braid_commutator(value, r)
        assert value is not None
        yield value


# ---------------------------------------------------------------------------
# corpus files

_CORPUS_HEADER = re.compile(r"^# strands=(\d+) seed=(-?\d+)$")


def dump_corpus(braids: Sequence[Braid], strands: int, seed: int) -> str:
    """One braid per line under a `# strands=<n> seed=<s>` header."""
    lines = [f"# strands={strands} seed={seed}"]
    for b in braids:
        if b.strands != strands:
            raise ValueError(
                f"corpus is on {strands} strands, braid has {b.strands}"
            )
        lines.append(render_braid(b))
    return "\n".join(lines) + "\n"


def load_corpus(text: str) -> tuple[int, int, list[Braid]]:
    """Inverse of dump_corpus; returns (strands, seed, braids)."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty corpus")
    m = _CORPUS_HEADER.match(lines[0])
    if m is None:
        raise ValueError(f"bad corpus header: {lines[0]!r}")
    strands, seed = int(m.group(1)), int(m.group(2))
    braids = [parse_braid(line, strands) for line in lines[1:]]
    return strands, seed, braids
