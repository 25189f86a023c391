import random
from fractions import Fraction

import pytest

from curvequiv.fricke import trace_square_equivalent
from curvequiv.pit import (NO_REFUTATION, REFUTED, diagonal_witness, pit_trace_equiv,
                           weighted_exponent_sum)
from curvequiv.sl2 import Mat2, RepAssignment, SamplerConfig
from curvequiv.words import WordError, parse_word

from conftest import random_nontrivial, random_word

G, H = parse_word("a^2 B a b"), parse_word("a^2 b a B")


def test_a_b_refuted_with_reverifiable_witness():
    a, b = parse_word("a"), parse_word("b")
    v = pit_trace_equiv(a, b, rank=2, samples=64)
    assert v.outcome == REFUTED
    assert v.witness.verify(a, b)
    assert v.samples_used == v.witness.sample_index + 1


def test_manual_witness_from_docs():
    # a -> [[2,1],[1,1]], b -> identity: 9 != 4
    from curvequiv.pit import Witness
    rep = RepAssignment((Mat2(2, 1, 1, 1), Mat2.identity()))
    w = Witness(rep, (Fraction(3), Fraction(2)))
    assert w.verify(parse_word("a"), parse_word("b"))


def test_horowitz_no_refutation():
    v = pit_trace_equiv(G, H, rank=2, samples=1000, config=SamplerConfig(seed=1))
    assert v.outcome == NO_REFUTATION and v.samples_used == 1000 and v.witness is None


def test_inverse_never_refuted(rng):
    for rank in (2, 3, 4):
        w = random_nontrivial(rng, 10, rank=rank)
        v = pit_trace_equiv(w, w.inverse(), rank=rank, samples=20)
        assert v.outcome == NO_REFUTATION


def test_rank_mismatch():
    with pytest.raises(WordError):
        pit_trace_equiv(parse_word("a c", 3), parse_word("a"), rank=2)


def test_samples_validated():
    with pytest.raises(ValueError):
        pit_trace_equiv(G, H, samples=0)


def test_parallel_matches_sequential(rng):
    for _ in range(20):
        w1, w2 = random_nontrivial(rng, 8, rank=3), random_nontrivial(rng, 8, rank=3)
        cfg = SamplerConfig(seed=rng.randrange(2**32), shear_bound=1, shear_count=2)
        seq = pit_trace_equiv(w1, w2, rank=3, samples=40, config=cfg)
        par = pit_trace_equiv(w1, w2, rank=3, samples=40, config=cfg, workers=4)
        assert seq == par
        assert seq.to_json() == par.to_json()


def test_consistency_with_fricke():
    rng = random.Random(17)
    refuted = total_false = 0
    for trial in range(100):
        w1 = random_nontrivial(rng, 8)
        # half the pairs are conjugates (equivalent), half unrelated
        w2 = w1.conjugate_by(random_word(rng, 4)) if trial % 2 else random_nontrivial(rng, 8)
        exact = trace_square_equivalent(w1, w2).equivalent
        v = pit_trace_equiv(w1, w2, config=SamplerConfig(seed=trial))
        if exact:
            assert v.outcome == NO_REFUTATION
        else:
            total_false += 1
            refuted += v.refuted
            if v.refuted:
                assert v.witness.verify(w1, w2)
    assert refuted == total_false


def test_diagonal_witness_counterexample_pair():
    w, wp = parse_word("a^-2 b a B"), parse_word("a^-2 b a b")
    phi = {0: 0, 1: 1}
    assert weighted_exponent_sum(phi, w) == 0 and weighted_exponent_sum(phi, wp) == 2
    v = diagonal_witness(phi, w, wp)
    assert v.outcome == REFUTED
    assert v.witness.traces == (Fraction(2), Fraction(17, 4))
    assert [t * t for t in v.witness.traces] == [4, Fraction(289, 16)]
    assert v.witness.verify(w, wp)


def test_diagonal_witness_inverse_and_zero(rng):
    for _ in range(50):
        w = random_nontrivial(rng, 10)
        phi = {0: rng.randint(-3, 3), 1: rng.randint(-3, 3)}
        assert diagonal_witness(phi, w, w.inverse()).outcome == NO_REFUTATION
        w2 = random_nontrivial(rng, 10)
        assert diagonal_witness({0: 0, 1: 0}, w, w2).outcome == NO_REFUTATION


def test_diagonal_refuted_iff_abs_sums_differ(rng):
    for _ in range(300):
        w1, w2 = random_nontrivial(rng, 10, rank=3), random_nontrivial(rng, 10, rank=3)
        phi = {g: rng.randint(-2, 2) for g in range(3)}
        n1, n2 = weighted_exponent_sum(phi, w1), weighted_exponent_sum(phi, w2)
        assert diagonal_witness(phi, w1, w2).refuted == (abs(n1) != abs(n2))


def test_diagonal_missing_weight():
    with pytest.raises(WordError):
        diagonal_witness({0: 1}, parse_word("a b"), parse_word("a"))


def test_verdict_json_shape():
    v = pit_trace_equiv(parse_word("a"), parse_word("b"), config=SamplerConfig(seed=9))
    data = v.to_json()
    assert data["outcome"] == "refuted" and data["seed"] == 9
    assert set(data["witness"]) == {"sample", "rep", "traces", "squares"}
    assert pit_trace_equiv(G, H, samples=3).to_json()["witness"] is None
