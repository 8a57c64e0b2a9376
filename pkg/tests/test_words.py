import random

import pytest

from commlab.words import (
    Letter,
    ParseError,
    Word,
    commutator,
    free_reduce,
    parse_word,
    render_word,
)


def rand_letters(rng, rank=3, length=12):
    return [rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(length)]


def rand_word(rng, rank=3, length=8):
    return free_reduce(rand_letters(rng, rank, length))


def test_reduce_cancels_adjacent_pairs():
    assert free_reduce([1, -1]).is_identity
    assert free_reduce([1, 2, -2, 1]).letters == (1, 1)
    assert free_reduce([]) == Word.identity()


def test_reduce_is_idempotent_on_fuzzed_strings():
    rng = random.Random(20)
    for _ in range(300):
        w = rand_word(rng, rank=4, length=20)
        assert free_reduce(w.letters) == w


def test_word_constructor_rejects_unreduced_and_bad_letters():
    with pytest.raises(ValueError):
        Word((1, -1))
    with pytest.raises(ValueError):
        Word((0,))
    with pytest.raises(ValueError):
        free_reduce([1, 0])
    with pytest.raises(ValueError):
        Word.generator(0)
    with pytest.raises(ValueError):
        Word.generator(1, sign=2)


def test_multiplication_cancels_at_the_seam():
    a = free_reduce([1, 2])
    b = free_reduce([-2, -1, 3])
    assert (a * b).letters == (3,)


def test_group_laws_on_fuzzed_triples():
    rng = random.Random(21)
    for _ in range(300):
        a, b, c = (rand_word(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a * a.inverse()).is_identity
        assert (a.inverse() * a).is_identity
        assert a * Word.identity() == a


def test_conjugate_convention():
    x1, x2 = Word.generator(1), Word.generator(2)
    assert x1.conjugate(x2).letters == (-2, 1, 2)
    rng = random.Random(22)
    for _ in range(100):
        a, g, h = (rand_word(rng) for _ in range(3))
        assert a.conjugate(g).conjugate(h) == a.conjugate(g * h)


def test_commutator_convention():
    x1, x2 = Word.generator(1), Word.generator(2)
    assert commutator(x1, x2).letters == (-1, -2, 1, 2)
    assert commutator(x1, x1).is_identity
    rng = random.Random(23)
    for _ in range(100):
        a, b = rand_word(rng), rand_word(rng)
        assert commutator(a, b).inverse() == commutator(b, a)
        # [a, b] = a^-1 a^b
        assert commutator(a, b) == a.inverse() * a.conjugate(b)


def test_powers():
    x = Word.generator(1)
    assert (x**3).letters == (1, 1, 1)
    assert (x**-2).letters == (-1, -1)
    assert (x**0).is_identity


def test_symbols_and_max_index():
    w = parse_word("x3 x1^-1")
    assert list(w.symbols()) == [Letter(3, 1), Letter(1, -1)]
    assert w.max_index() == 3
    assert Word.identity().max_index() == 0


def test_parse_render_round_trip():
    rng = random.Random(24)
    for _ in range(200):
        w = rand_word(rng, rank=5, length=10)
        assert parse_word(render_word(w)) == w
    assert parse_word("") == Word.identity()
    assert parse_word("   ") == Word.identity()
    assert render_word(Word.identity()) == ""
    assert parse_word("x2 x2^-1").is_identity


def test_parse_rejects_bad_tokens():
    for text, pos in [
        ("x0", 1),
        ("x1 x0", 2),
        ("x01", 1),
        ("y1", 1),
        ("x1^1", 1),
        ("x1 ^-1", 2),
        ("x-1", 1),
        ("x1^-2", 1),
    ]:
        with pytest.raises(ParseError) as err:
            parse_word(text)
        assert err.value.position == pos
