import itertools
import random

import pytest

from commlab.brackets import left_normed
from commlab.magnus import gamma_membership
from commlab.sampling import (
    SubgroupSpec,
    fat_generators,
    random_reduced_word,
    surjective_over,
    symmetric_generators,
    symmetric_generators_fix1,
)
from commlab.words import Word, parse_word


def single_letter_specs(n):
    return [
        SubgroupSpec((Word.generator(i),), label=f"R{i}") for i in range(1, n + 1)
    ]


def take(stream, k):
    return list(itertools.islice(stream, k))


def test_spec_requires_generators():
    with pytest.raises(ValueError):
        SubgroupSpec(())


def test_single_subgroup_depth_zero_is_the_constant_stream():
    (spec,) = single_letter_specs(1)
    out = take(symmetric_generators([spec], conj_depth=0, seed=5), 10)
    assert out == [Word.generator(1)] * 10


def test_streams_are_deterministic_given_seed():
    specs = single_letter_specs(3)
    a = take(symmetric_generators(specs, conj_depth=3, seed=11), 30)
    b = take(symmetric_generators(specs, conj_depth=3, seed=11), 30)
    c = take(symmetric_generators(specs, conj_depth=3, seed=12), 30)
    assert a == b
    assert a != c
    fa = take(fat_generators(specs, max_weight=4, conj_depth=2, seed=7), 20)
    fb = take(fat_generators(specs, max_weight=4, conj_depth=2, seed=7), 20)
    assert fa == fb


def test_count_argument_bounds_the_stream():
    specs = single_letter_specs(2)
    assert len(list(symmetric_generators(specs, 0, 1, count=7))) == 7
    assert len(list(fat_generators(specs, 3, 0, 1, count=4))) == 4


def test_symmetric_depth_zero_hits_both_orderings():
    specs = single_letter_specs(2)
    x1, x2 = Word.generator(1), Word.generator(2)
    seen = set(take(symmetric_generators(specs, conj_depth=0, seed=3), 40))
    expected = {left_normed([x1, x2]), left_normed([x2, x1])}
    assert seen == expected


def test_fix1_forces_the_first_slot():
    specs = single_letter_specs(2)
    out = take(symmetric_generators_fix1(specs, conj_depth=0, seed=9), 20)
    assert set(out) == {parse_word("x1^-1 x2^-1 x1 x2")}

    specs3 = single_letter_specs(3)
    x = [Word.generator(i) for i in (1, 2, 3)]
    seen = set(take(symmetric_generators_fix1(specs3, conj_depth=0, seed=10), 60))
    assert seen == {
        left_normed([x[0], x[1], x[2]]),
        left_normed([x[0], x[2], x[1]]),
    }


def test_emitted_words_lie_in_gamma_n():
    for n in (1, 2, 3):
        specs = single_letter_specs(n)
        for w in take(symmetric_generators(specs, conj_depth=2, seed=n), 25):
            assert gamma_membership(w, n)
        for w in take(fat_generators(specs, n + 2, 2, seed=n), 25):
            assert gamma_membership(w, n)


def test_fat_stream_validates_weight():
    specs = single_letter_specs(3)
    with pytest.raises(ValueError):
        take(fat_generators(specs, max_weight=2, conj_depth=0, seed=1), 1)


def test_fat_weight_two_emissions_are_the_two_commutators():
    specs = single_letter_specs(2)
    x1, x2 = Word.generator(1), Word.generator(2)
    seen = set(take(fat_generators(specs, 2, 0, seed=2), 30))
    assert seen == {left_normed([x1, x2]), left_normed([x2, x1])}


def test_surjectivity_helper():
    assert not surjective_over((1, 1, 1), 2)
    assert surjective_over((2, 1, 1), 2)
    assert surjective_over((3, 1, 2), 3)
    assert not surjective_over((3, 1, 3), 3)


def test_empty_subgroup_list_rejected():
    with pytest.raises(ValueError):
        take(symmetric_generators([], 0, 0), 1)
    with pytest.raises(ValueError):
        take(fat_generators([], 1, 0, 0), 1)
    with pytest.raises(ValueError):
        take(symmetric_generators(single_letter_specs(2), -1, 0), 1)


def test_random_reduced_word_is_reduced_and_sized():
    rng = random.Random(50)
    for _ in range(200):
        length = rng.randint(0, 12)
        w = random_reduced_word(rng, rank=3, length=length)
        assert len(w) == length  # Word construction enforces reducedness
    assert random_reduced_word(rng, 0, 5).is_identity
    with pytest.raises(ValueError):
        random_reduced_word(rng, -1, 2)
