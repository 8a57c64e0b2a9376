import random

import pytest

from commlab.homotopy import (
    OneRelatorPresentation,
    Partition,
    Pi2Report,
    Pi3Report,
    SpherePresentation,
    in_block_closure,
    in_intersection,
    one_relator_membership,
    pi2_check,
    pi3_certificate,
    projective_plane_presentation,
    sphere_presentation,
    surface_presentation,
)
from commlab.magnus import gamma_membership
from commlab.sampling import SubgroupSpec, random_reduced_word, symmetric_generators
from commlab.words import Word, commutator, free_reduce


def oracle_member(m, w, killed):
    """Independent decision for the sphere case.

    Same quotient, different route: erase the killed letters, then rewrite
    the LAST surviving generator (the engine picks the first) as the inverse
    of the product of the others and reduce. Both must agree.
    """
    killed = frozenset(killed)
    survivors = [k for k in range(1, m + 1) if k not in killed]
    image = [c for c in w.letters if abs(c) not in killed]
    if not survivors:
        return not free_reduce(image).letters
    e = survivors[-1]
    others = survivors[:-1]
    # s_1 ... s_j e = 1 in the quotient, so e = s_j^-1 ... s_1^-1
    repl = [-k for k in reversed(others)]
    repl_inv = list(others)
    out = []
    for c in image:
        out.extend(repl if c == e else repl_inv if c == -e else [c])
    return not free_reduce(out).letters


def rand_sphere_word(rng, m, length=14):
    return random_reduced_word(rng, m - 1, rng.randint(0, length))


# ---------------------------------------------------------------------------
# presentations


def test_sphere_presentation_shape():
    pres = sphere_presentation(3)
    assert pres.names == ("x1", "x2", "x3")
    assert pres.relator.letters == (1, 2, 3)
    assert pres.rank == 3
    with pytest.raises(ValueError):
        sphere_presentation(1)


def test_projective_plane_presentation_shape():
    pres = projective_plane_presentation(2)
    assert pres.names == ("a1", "x1", "x2")
    assert pres.relator.letters == (1, 1, -3, -2)
    with pytest.raises(ValueError):
        projective_plane_presentation(1)


def test_surface_presentation_shapes():
    pres = surface_presentation(1, 1, 2)
    assert pres.names == ("a1", "b1", "y1", "x1", "x2")
    assert pres.relator.letters == (-1, -2, 1, 2, -5, -4, -3)
    non_or = surface_presentation(2, 0, 1, oriented=False)
    assert non_or.names == ("a1", "a2", "x1")
    assert non_or.relator.letters == (1, 1, 2, 2, -3)
    punctured = surface_presentation(0, 1, 1)
    assert punctured.names == ("y1", "x1")
    assert punctured.relator.letters == (-2, -1)


def test_surface_presentation_validation():
    with pytest.raises(ValueError):
        surface_presentation(1, 0, 0)
    with pytest.raises(ValueError):
        surface_presentation(0, 0, 2)  # sphere-like, not covered here
    with pytest.raises(ValueError):
        surface_presentation(1, 0, 2, oriented=False)  # Klein bottle excluded
    with pytest.raises(ValueError):
        surface_presentation(-1, 0, 2)


def test_one_relator_presentation_validation():
    with pytest.raises(ValueError):
        OneRelatorPresentation((), Word.identity())
    with pytest.raises(ValueError):
        OneRelatorPresentation(("x1", "x1"), Word((1,)))
    with pytest.raises(ValueError):
        OneRelatorPresentation(("x1",), Word((2,)))


# ---------------------------------------------------------------------------
# membership


def test_membership_hand_examples():
    pres = sphere_presentation(3)
    comm = commutator(Word((1,)), Word((2,)))
    # killing x3 leaves <x1,x2 | x1 x2>, where x2 = x1^-1 and commutators die
    assert one_relator_membership(pres, comm, {3}) is True
    assert one_relator_membership(pres, comm, {1}) is True
    assert one_relator_membership(pres, comm, {2}) is True
    assert one_relator_membership(pres, Word((1,)), {3}) is False
    assert one_relator_membership(pres, Word((1,)), {2}) is False
    assert one_relator_membership(pres, Word((1, 2)), {3}) is True
    assert one_relator_membership(pres, Word((1,)), {1}) is True
    assert one_relator_membership(pres, Word((1,)).conjugate(Word((2,))), {1}) is True
    assert one_relator_membership(pres, Word.identity(), {2}) is True


def test_membership_validation():
    pres = sphere_presentation(3)
    with pytest.raises(ValueError):
        one_relator_membership(pres, Word((1,)), {0})
    with pytest.raises(ValueError):
        one_relator_membership(pres, Word((1,)), {4})
    with pytest.raises(ValueError):
        one_relator_membership(pres, Word((4,)), {1})


def test_membership_undecided_cases_return_none():
    # killing both marked generators of the torus relator leaves [a1, b1],
    # where every survivor repeats and the Tietze move is unavailable
    pres = surface_presentation(1, 0, 2)
    assert one_relator_membership(pres, Word((1,)), {3, 4}) is None
    assert one_relator_membership(pres, Word.identity(), {3, 4}) is True
    proj = projective_plane_presentation(2)
    assert one_relator_membership(proj, Word((1,)), {2, 3}) is None


def test_membership_decides_surface_cases_with_a_single_survivor():
    # killing only x1 of the torus relator leaves [a1,b1] x2^-1: x2 occurs
    # once, so the quotient is free on a1, b1 with x2 = [a1, b1]
    pres = surface_presentation(1, 0, 2)
    relation = commutator(Word((1,)), Word((2,))) * Word((-4,))
    assert one_relator_membership(pres, relation, {3}) is True
    assert one_relator_membership(pres, Word((4,)), {3}) is False
    assert one_relator_membership(pres, Word((1,)), {3}) is False


def test_membership_matches_independent_elimination_on_fuzz():
    rng = random.Random(50)
    for _ in range(400):
        m = rng.randint(2, 5)
        pres = sphere_presentation(m)
        block = set(rng.sample(range(1, m + 1), rng.randint(1, m)))
        w = random_reduced_word(rng, m, rng.randint(0, 14))
        got = one_relator_membership(pres, w, block)
        assert got is not None
        assert got == oracle_member(m, w, block)


def test_membership_is_conjugation_invariant_and_multiplicative():
    rng = random.Random(51)
    pres = sphere_presentation(4)
    block = {2, 4}
    members = [Word((2,)), Word((4,)).conjugate(Word((1, 3)))]
    for _ in range(200):
        w = random_reduced_word(rng, 4, rng.randint(0, 10))
        g = random_reduced_word(rng, 4, rng.randint(0, 6))
        flag = one_relator_membership(pres, w, block)
        assert one_relator_membership(pres, w.conjugate(g), block) == flag
        if flag:
            members.append(w)
    u = rng.choice(members)
    v = rng.choice(members)
    assert one_relator_membership(pres, u * v, block) is True
    assert one_relator_membership(pres, u.inverse(), block) is True


def test_membership_is_monotone_in_the_block():
    rng = random.Random(52)
    pres = sphere_presentation(4)
    for _ in range(200):
        small = set(rng.sample(range(1, 5), rng.randint(1, 3)))
        big = small | {rng.randint(1, 4)}
        w = random_reduced_word(rng, 4, rng.randint(0, 10))
        if one_relator_membership(pres, w, small):
            assert one_relator_membership(pres, w, big) is True


def test_members_have_balanced_exponent_sums():
    # the closure abelianises onto multiples of the all-ones vector over
    # the surviving generators, a cheap necessary condition
    rng = random.Random(53)
    pres = sphere_presentation(4)
    for _ in range(300):
        block = set(rng.sample(range(1, 5), rng.randint(1, 3)))
        w = random_reduced_word(rng, 4, rng.randint(0, 12))
        if one_relator_membership(pres, w, block):
            survivors = [k for k in range(1, 5) if k not in block]
            sums = {
                sum(1 if c == k else -1 if c == -k else 0 for c in w.letters)
                for k in survivors
            }
            assert len(sums) == 1


# ---------------------------------------------------------------------------
# the eliminated sphere form


def test_eliminate_rewrites_the_last_generator():
    pres = SpherePresentation(3)
    assert pres.eliminate([3]).letters == (-2, -1)
    assert pres.eliminate([-3]).letters == (1, 2)
    assert pres.eliminate([1, 3]).letters == (1, -2, -1)
    assert pres.eliminate(Word((1, 2, 3))).is_identity
    assert SpherePresentation(2).eliminate([2]).letters == (-1,)
    assert pres.rank == 2
    with pytest.raises(ValueError):
        pres.eliminate([4])
    with pytest.raises(ValueError):
        pres.eliminate([0])
    with pytest.raises(ValueError):
        SpherePresentation(1)


def test_block_closure_spec_behaviour():
    pres = SpherePresentation(3)
    comm = commutator(Word((1,)), Word((2,)))
    assert in_block_closure(pres, comm, {1})
    assert in_block_closure(pres, comm, {2})
    assert in_block_closure(pres, comm, {3})
    assert not in_block_closure(pres, Word((1,)), {3})
    with pytest.raises(ValueError):
        in_block_closure(pres, Word((1,)), set())
    with pytest.raises(ValueError):
        in_block_closure(pres, Word((3,)), {1})  # not in eliminated form


def test_block_closure_agrees_with_eliminated_membership():
    rng = random.Random(54)
    pres = SpherePresentation(4)
    for _ in range(200):
        w = rand_sphere_word(rng, 4)
        block = set(rng.sample(range(1, 5), rng.randint(1, 4)))
        expected = one_relator_membership(sphere_presentation(4), w, block)
        assert in_block_closure(pres, w, block) == expected


def test_partition_validation():
    part = Partition.singletons(3)
    assert len(part) == 3
    assert part.blocks[0] == frozenset({1})
    with pytest.raises(ValueError):
        Partition(3, (frozenset({1, 2}),))  # misses 3
    with pytest.raises(ValueError):
        Partition(3, (frozenset({1, 2}), frozenset({2, 3})))  # overlap
    with pytest.raises(ValueError):
        Partition(2, (frozenset(), frozenset({1, 2})))


def test_intersection_checks_every_block():
    pres = SpherePresentation(3)
    part = Partition.singletons(3)
    assert in_intersection(pres, commutator(Word((1,)), Word((2,))), part)
    assert not in_intersection(pres, Word((1,)), part)
    with pytest.raises(ValueError):
        in_intersection(pres, Word((1,)), Partition.singletons(4))


# ---------------------------------------------------------------------------
# certificates


def test_pi2_report_passes_and_is_deterministic():
    rep = pi2_check(seed=60, trials=150)
    assert isinstance(rep, Pi2Report)
    assert rep.passed
    assert rep.quotient_rank == 1
    assert rep.in_r1_passes == rep.in_r2_passes == 150
    assert pi2_check(seed=60, trials=150) == rep
    assert pi2_check(seed=61, trials=0).passed
    with pytest.raises(ValueError):
        pi2_check(seed=0, trials=-1)


def test_pi3_certificate_passes_and_freezes_the_witness():
    rep = pi3_certificate(seed=62, samples=60)
    assert isinstance(rep, Pi3Report)
    assert rep.passed
    assert rep.witness_word == "x1^-1 x2^-1 x1 x2"
    assert rep.witness_in_intersection
    assert not rep.witness_in_gamma
    assert (rep.m, rep.n, rep.gamma_level) == (3, 3, 3)
    assert rep.partition == ((1,), (2,), (3,))
    assert rep.intersection_passes == rep.gamma_passes == 60
    assert pi3_certificate(seed=62, samples=60) == rep
    assert pi3_certificate(seed=63, samples=0).passed
    with pytest.raises(ValueError):
        pi3_certificate(seed=0, samples=-1)


def test_sampled_symmetric_generators_land_in_intersection_and_gamma():
    pres = SpherePresentation(3)
    part = Partition.singletons(3)
    specs = (
        SubgroupSpec((Word((1,)),), "R1"),
        SubgroupSpec((Word((2,)),), "R2"),
        SubgroupSpec((Word((-2, -1)),), "R3"),
    )
    for g in symmetric_generators(specs, conj_depth=3, seed=64, count=40):
        assert in_intersection(pres, g, part)
        assert gamma_membership(g, 3)
