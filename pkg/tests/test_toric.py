import random

import pytest
from hypothesis import given, strategies as st

from fibrox import (
    BoundExceededError,
    binomial,
    fibers,
    first_failing_degree,
    generated_up_to,
    generation_degrees,
    Monomial,
    ideal,
    minimalize,
    mono,
    parse_binomial,
    quadratic_kernel,
)
from fibrox.sampling import random_equigenerated_ideal
from fibrox.toric import InvalidMoveError

from tests.oracles import brute_generated_up_to, brute_quadratic_kernel, minimal_generator_counts
from tests.strategies import ideals

# Frozen from the oracle in tests/oracles.py (minimal_generator_counts).
I1_COUNTS = {2: 17, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 0}
I2_COUNTS = {2: 15, 3: 0, 4: 2}
EXAMPLE_M_COUNTS = {2: 6, 3: 0, 4: 0, 5: 0, 6: 0}


def rels(*texts):
    return {parse_binomial(t) for t in texts}


def test_frozen_counts_match_oracle(intro_i1, intro_i2, example_m):
    assert minimal_generator_counts(intro_i1, 8) == I1_COUNTS
    assert minimal_generator_counts(intro_i2, 4) == I2_COUNTS
    assert minimal_generator_counts(example_m, 6) == EXAMPLE_M_COUNTS


def test_quadratic_kernel_examples(example_m, final_remark):
    assert len(quadratic_kernel(example_m)) == 7
    assert quadratic_kernel(final_remark) == rels("t1*t4 - t2^2", "t2*t4 - t3^2")
    assert quadratic_kernel(ideal((1, 1, 1))) == set()


@given(ideals())
def test_quadratic_kernel_matches_brute_force(I):
    qk = quadratic_kernel(I)
    assert qk == brute_quadratic_kernel(I)
    assert all(r.is_balanced(I) for r in qk)


def test_fiber_examples(example_m):
    f1 = fibers(example_m, 1)
    assert len(f1) == 6 and all(len(f.members) == 1 for f in f1)
    by_image = {f.image: f.members for f in fibers(example_m, 2)}
    assert by_image[mono(4, 2, 0)] == ((1, 4), (2, 2))
    assert by_image[mono(3, 2, 1)] == ((1, 6), (2, 5), (3, 4))


@given(ideals())
def test_fibers_partition(I):
    for k in (1, 2, 3):
        fs = fibers(I, k)
        members = [m for f in fs for m in f.members]
        assert len(members) == len(set(members))
        assert [f.image for f in fs] == sorted((f.image for f in fs), reverse=True)
    f2 = fibers(I, 2)
    assert sum(len(f.members) - 1 for f in f2) == generation_degrees(I, 2).new_generators[2]


def test_fiber_cap():
    I = ideal(*[(10 - e, e) for e in range(11)])
    with pytest.raises(BoundExceededError):
        fibers(I, 6, cap=1000)


def test_generated_up_to_intro(intro_i1, intro_i2):
    assert generated_up_to(intro_i1, quadratic_kernel(intro_i1), 8)
    assert first_failing_degree(intro_i2, quadratic_kernel(intro_i2), 4) == 4


@given(ideals())
def test_empty_move_set(I):
    assert generated_up_to(I, set(), 2) == (not quadratic_kernel(I))


def test_invalid_move_is_rejected(example_m):
    with pytest.raises(InvalidMoveError) as exc:
        generated_up_to(example_m, {binomial((1, 2), (3, 4))}, 3)
    assert exc.value.move == binomial((1, 2), (3, 4))


@given(ideals(max_degree=3, max_q=6), st.randoms(use_true_random=False))
def test_generated_up_to_matches_brute_force(I, rnd):
    qk = sorted(quadratic_kernel(I))
    moves = set(rnd.sample(qk, rnd.randint(0, len(qk))))
    assert generated_up_to(I, moves, 4) == brute_generated_up_to(I, moves, 4)


@given(ideals(max_degree=3, max_q=6), st.randoms(use_true_random=False))
def test_generated_up_to_is_monotone(I, rnd):
    qk = sorted(quadratic_kernel(I))
    small = set(rnd.sample(qk, rnd.randint(0, len(qk))))
    if generated_up_to(I, small, 4):
        assert generated_up_to(I, set(qk), 4)


def test_generation_degrees_examples(example_m, intro_i1, intro_i2):
    assert generation_degrees(example_m, 6).new_generators == EXAMPLE_M_COUNTS
    assert generation_degrees(intro_i1, 8).new_generators == I1_COUNTS
    rep = generation_degrees(intro_i2, 4)
    assert rep.new_generators == I2_COUNTS
    assert rep.generator_degrees == [2, 4]
    assert not rep.quadratically_generated
    assert generation_degrees(ideal((2, 1, 0)), 6).generator_degrees == []


@given(ideals(max_degree=3, max_q=7))
def test_generation_counts_match_oracle(I):
    rep = generation_degrees(I, 4)
    assert rep.new_generators == minimal_generator_counts(I, 4)
    for k, rs in rep.relations.items():
        assert all(r.degree == k and r.is_balanced(I) for r in rs)
    all_rel = [r for rs in rep.relations.values() for r in rs]
    assert generated_up_to(I, all_rel, 4)


@given(st.integers(0, 10**6))
def test_generation_counts_do_not_depend_on_member_order(seed):
    # permuting the variables reorders generators and fiber members; the counts must not move
    rng = random.Random(seed)
    I = random_equigenerated_ideal(rng, degrees=range(2, 4), max_q=7)
    perm = list(range(I.n))
    rng.shuffle(perm)
    J = minimalize([Monomial(tuple(g.exps[p] for p in perm)) for g in I.gens])
    assert generation_degrees(J, 4).new_generators == generation_degrees(I, 4).new_generators


def test_certified_quadratic_for_tor_counterexample():
    I = ideal((4, 0), (3, 1), (2, 2), (0, 4))
    assert generation_degrees(I, 8).quadratically_generated


def test_more_counterexample_is_principal():
    I = ideal((2, 2, 0), (2, 0, 2), (0, 2, 2), (0, 0, 4))
    rep = generation_degrees(I, 8)
    assert rep.new_generators == {2: 1, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 0}
