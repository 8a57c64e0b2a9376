"""One-relator presentations, normal-closure membership, sphere certificates.

The central object is the group G = <x_1..x_m | x_1 x_2 ... x_m = 1>, which
is concretely free of rank m-1 once x_m is rewritten as (x_1...x_{m-1})^-1.
For a subset P of the generators, membership in the normal closure <<P>> is
decidable by killing the letters of P and, when the surviving relator allows
it, eliminating one survivor that occurs exactly once (a Tietze move onto an
explicit free basis). The same engine covers surface-group presentations with
a single relator; when no survivor occurs exactly once the answer is reported
as None (undecided by this tool) rather than guessed.

On top of membership sit two certificate routines:

* pi2_check: for m=2 both closures are the whole group and all sampled
  commutators vanish, so the quotient of the intersection by the symmetric
  commutator subgroup is the free group of rank 1.
* pi3_certificate: for m=3 the word [x1, x2] lies in the intersection of all
  three closures but not in gamma_3, while every sampled symmetric-commutator
  generator lies in both; the quotient at n=3 is therefore nontrivial.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from commlab import kernels
from commlab.magnus import gamma_membership
from commlab.sampling import SubgroupSpec, random_reduced_word, symmetric_generators
from commlab.words import Word, commutator, render_word


@dataclass(frozen=True)
class OneRelatorPresentation:
    """Group <named generators | relator = 1>."""

    names: tuple[str, ...]
    relator: Word

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("presentation needs at least one generator")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        if self.relator.max_index() > len(self.names):
            raise ValueError("relator uses generators beyond the listed names")

    @property
    def rank(self) -> int:
        return len(self.names)


def sphere_presentation(m: int) -> OneRelatorPresentation:
    """<x_1 .. x_m | x_1 x_2 ... x_m = 1>, free of rank m-1."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    names = tuple(f"x{i}" for i in range(1, m + 1))
    return OneRelatorPresentation(names, Word(tuple(range(1, m + 1))))


def projective_plane_presentation(m: int) -> OneRelatorPresentation:
    """<a1, x_1 .. x_m | a1^2 = x_1 ... x_m>, free of rank m."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    names = ("a1",) + tuple(f"x{i}" for i in range(1, m + 1))
    relator = [1, 1] + [-(k + 1) for k in range(m, 0, -1)]
    return OneRelatorPresentation(names, Word(tuple(relator)))


def surface_presentation(
    genus: int, boundary: int, m: int, oriented: bool = True
) -> OneRelatorPresentation:
    """Punctured-surface group with marked generators x_1..x_m.

    Oriented: <a_i, b_i, y_j, x_k | [a_1,b_1]...[a_g,b_g] = y_1..y_t x_1..x_m>
    with genus > 0 or boundary > 0. Non-oriented: the a_i^2 product takes the
    left side and genus > 1 or boundary > 0 is required.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if genus < 0 or boundary < 0:
        raise ValueError("genus and boundary must be >= 0")
    if oriented and genus == 0 and boundary == 0:
        raise ValueError("oriented case needs genus > 0 or boundary > 0")
    if not oriented and genus <= 1 and boundary == 0:
        raise ValueError("non-oriented case needs genus > 1 or boundary > 0")
    names: list[str] = []
    left: list[int] = []
    if oriented:
        for i in range(1, genus + 1):
            a = len(names) + 1
            names += [f"a{i}", f"b{i}"]
            left += [-a, -(a + 1), a, a + 1]
    else:
        if genus == 0:
            raise ValueError("non-oriented case needs genus >= 1")
        for i in range(1, genus + 1):
            a = len(names) + 1
            names.append(f"a{i}")
            left += [a, a]
    right: list[int] = []
    for j in range(1, boundary + 1):
        names.append(f"y{j}")
        right.append(len(names))
    for k in range(1, m + 1):
        names.append(f"x{k}")
        right.append(len(names))
    relator = kernels.multiply_reduced(
        tuple(left), kernels.invert_reduced(tuple(right))
    )
    return OneRelatorPresentation(tuple(names), Word(relator))


def one_relator_membership(
    pres: OneRelatorPresentation, w: Word, killed: Iterable[int]
) -> bool | None:
    """Whether w lies in the normal closure of the killed generators.

    Kills the generators of ``killed`` in both the relator and w. A word
    whose killed image reduces to the identity is always a member. Otherwise,
    if the surviving relator is empty the quotient is free and the image
    decides membership; if not, some survivor occurring exactly once in the
    relator is eliminated by a Tietze move, which again leaves a free group.
    Returns None when no such survivor exists (undecided).
    """
    killed = frozenset(killed)
    for g in killed:
        if not 1 <= g <= pres.rank:
            raise ValueError(f"generator index {g} out of range")
    if w.max_index() > pres.rank:
        raise ValueError("word uses generators beyond the presentation")
    survives = lambda c: abs(c) not in killed
    s = kernels.reduce_letters(filter(survives, pres.relator.letters))
    image = kernels.reduce_letters(filter(survives, w.letters))
    if not image:
        return True
    if not s:
        return False
    counts = Counter(abs(c) for c in s)
    once = sorted(g for g, k in counts.items() if k == 1)
    if not once:
        return None
    e = once[0]
    pos = next(i for i, c in enumerate(s) if abs(c) == e)
    u, v = s[:pos], s[pos + 1 :]
    # relator u e^eps v = 1 solves to e = u^-1 v^-1 (eps=+1) or e = v u
    if s[pos] > 0:
        repl = kernels.multiply_reduced(
            kernels.invert_reduced(u), kernels.invert_reduced(v)
        )
    else:
        repl = kernels.multiply_reduced(v, u)
    repl_inv = kernels.invert_reduced(repl)
    out: list[int] = []
    for c in image:
        if abs(c) == e:
            out.extend(repl if c > 0 else repl_inv)
        else:
            out.append(c)
    return not kernels.reduce_letters(out)


# ---------------------------------------------------------------------------
# the sphere case


@dataclass(frozen=True)
class SpherePresentation:
    """<x_1..x_m | x_1...x_m = 1> with elements stored over x_1..x_{m-1}."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"need m >= 2, got {self.m}")

    @property
    def rank(self) -> int:
        return self.m - 1

    def eliminate(self, raw: Word | Iterable[int]) -> Word:
        """Rewrite x_m as (x_1...x_{m-1})^-1, giving a rank m-1 word."""
        letters = raw.letters if isinstance(raw, Word) else tuple(raw)
        last_inv = tuple(-k for k in range(self.m - 1, 0, -1))
        out: list[int] = []
        for c in letters:
            if not isinstance(c, int) or c == 0 or abs(c) > self.m:
                raise ValueError(f"letter {c!r} out of range for m={self.m}")
            if abs(c) < self.m:
                out.append(c)
            elif c > 0:
                out.extend(last_inv)
            else:
                out.extend(range(1, self.m))
        return Word(kernels.reduce_letters(out))


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks of generator indices covering {1..m}."""

    m: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            if block & seen:
                raise ValueError("partition blocks must be disjoint")
            seen |= block
        if seen != set(range(1, self.m + 1)):
            raise ValueError(f"blocks must cover exactly 1..{self.m}")

    @classmethod
    def singletons(cls, m: int) -> Partition:
        return cls(m, tuple(frozenset({i}) for i in range(1, m + 1)))

    def __len__(self) -> int:
        return len(self.blocks)


def in_block_closure(pres: SpherePresentation, w: Word, block: Iterable[int]) -> bool:
    """Whether w (over x_1..x_{m-1}) lies in the normal closure of the block."""
    block = frozenset(block)
    if not block:
        raise ValueError("block must be nonempty")
    if w.max_index() >= pres.m:
        raise ValueError("word is not in eliminated form")
    answer = one_relator_membership(sphere_presentation(pres.m), w, block)
    assert answer is not None  # a full product relator always decides
    return answer


def in_intersection(pres: SpherePresentation, w: Word, partition: Partition) -> bool:
    if partition.m != pres.m:
        raise ValueError(f"partition is over m={partition.m}, group has m={pres.m}")
    return all(in_block_closure(pres, w, block) for block in partition.blocks)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Pi2Report:
    trials: int
    in_r1_passes: int
    in_r2_passes: int
    commutator_passes: int
    quotient_rank: int

    @property
    def passed(self) -> bool:
        return (
            self.in_r1_passes
            == self.in_r2_passes
            == self.commutator_passes
            == self.trials
            and self.quotient_rank == 1
        )


def pi2_check(seed: int, trials: int = 1000) -> Pi2Report:
    """Fuzzed evidence that for m=2 both closures fill the whole group.

    Every sampled element must lie in <<x_1>> and in <<x_2>>, and every
    sampled symmetric-commutator generator must reduce to the identity (the
    rank-1 free group is abelian), leaving the quotient free of rank 1.
    """
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    pres = SpherePresentation(2)
    rng = random.Random(seed)
    in_r1 = in_r2 = 0
    for _ in range(trials):
        w = random_reduced_word(rng, 1, rng.randint(0, 12))
        in_r1 += in_block_closure(pres, w, {1})
        in_r2 += in_block_closure(pres, w, {2})
    specs = (
        SubgroupSpec((Word((1,)),), "R1"),
        SubgroupSpec((Word((-1,)),), "R2"),
    )
    trivial = sum(
        g.is_identity
        for g in symmetric_generators(specs, conj_depth=4, seed=seed, count=trials)
    )
    return Pi2Report(
        trials=trials,
        in_r1_passes=in_r1,
        in_r2_passes=in_r2,
        commutator_passes=trivial,
        quotient_rank=pres.rank,
    )


@dataclass(frozen=True)
class Pi3Report:
    m: int
    n: int
    partition: tuple[tuple[int, ...], ...]
    witness_word: str
    witness_in_intersection: bool
    witness_in_gamma: bool
    gamma_level: int
    samples: int
    intersection_passes: int
    gamma_passes: int

    @property
    def passed(self) -> bool:
        return (
            self.witness_in_intersection
            and not self.witness_in_gamma
            and self.intersection_passes == self.samples
            and self.gamma_passes == self.samples
        )


def pi3_certificate(seed: int, samples: int = 500, conj_depth: int = 4) -> Pi3Report:
    """Certificate that the m=n=3 quotient is nontrivial.

    The witness [x1, x2] lies in all three closures but not in gamma_3,
    while every sampled symmetric-commutator generator lies in both the
    intersection and gamma_3; its coset is therefore nontrivial.
    """
    if samples < 0:
        raise ValueError(f"samples must be >= 0, got {samples}")
    pres = SpherePresentation(3)
    partition = Partition.singletons(3)
    witness = commutator(Word((1,)), Word((2,)))
    specs = (
        SubgroupSpec((Word((1,)),), "R1"),
        SubgroupSpec((Word((2,)),), "R2"),
        SubgroupSpec((Word((-2, -1)),), "R3"),
    )
    in_inter = in_gamma = 0
    for g in symmetric_generators(specs, conj_depth, seed, count=samples):
        in_inter += in_intersection(pres, g, partition)
        in_gamma += gamma_membership(g, 3)
    return Pi3Report(
        m=3,
        n=3,
        partition=tuple(tuple(sorted(b)) for b in partition.blocks),
        witness_word=render_word(witness),
        witness_in_intersection=in_intersection(pres, witness, partition),
        witness_in_gamma=gamma_membership(witness, 3),
        gamma_level=3,
        samples=samples,
        intersection_passes=in_inter,
        gamma_passes=in_gamma,
    )
