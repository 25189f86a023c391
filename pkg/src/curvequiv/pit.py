"""One-sided refutation of trace equivalence by exact random evaluation.

A ``refuted`` verdict carries a representation under which the squared
traces differ, which is a proof.  ``no-refutation`` is only evidence.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .sl2 import Mat2, RepAssignment, SL2Sampler, SamplerConfig, format_rational, word_trace
from .words import MissingGeneratorError, Word, WordError, generator_symbol

REFUTED = "refuted"
NO_REFUTATION = "no-refutation"
DEFAULT_SAMPLES = 64


@dataclass(frozen=True)
class Witness:
    rep: RepAssignment
    traces: tuple[Fraction, Fraction]
    sample_index: int | None = None

    def verify(self, w1: Word, w2: Word) -> bool:
        """Re-evaluate both words; true when the stored traces reproduce and their squares differ."""
        t1, t2 = word_trace(self.rep, w1), word_trace(self.rep, w2)
        return (t1, t2) == self.traces and t1 * t1 != t2 * t2

    def to_json(self) -> dict:
        return {
            "sample": self.sample_index,
            "rep": self.rep.to_json(),
            "traces": [format_rational(t) for t in self.traces],
            "squares": [format_rational(t * t) for t in self.traces],
        }


@dataclass(frozen=True)
class PitVerdict:
    outcome: str
    samples_used: int
    seed: int
    witness: Witness | None = None

    @property
    def refuted(self) -> bool:
        return self.outcome == REFUTED

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "samples": self.samples_used,
            "seed": self.seed,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _check_rank(w: Word, rank: int) -> None:
    if w.rank_needed() > rank:
        raise WordError(f"word uses generator {generator_symbol(w.rank_needed() - 1)!r} "
                        f"beyond declared rank {rank}")


def _test_sample(sampler: SL2Sampler, index: int, rank: int, w1: Word, w2: Word) -> Witness | None:
    rep = sampler.representation(index, rank)
    t1, t2 = word_trace(rep, w1), word_trace(rep, w2)
    if t1 * t1 != t2 * t2:
        return Witness(rep, (t1, t2), index)
    return None


def pit_trace_equiv(w1: Word, w2: Word, rank: int = 2, samples: int = DEFAULT_SAMPLES,
                    config: SamplerConfig | None = None, workers: int = 1) -> PitVerdict:
    """Look for a representation separating tr(w1)^2 from tr(w2)^2.

    Both words are evaluated under the same representation for each sample.
    With ``workers > 1`` samples run concurrently in blocks; the reported
    witness is always the one with the smallest sample index, so the verdict
    does not depend on scheduling.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    _check_rank(w1, rank)
    _check_rank(w2, rank)
    config = config or SamplerConfig()
    sampler = SL2Sampler(config)

    if workers <= 1:
        for i in range(samples):
            witness = _test_sample(sampler, i, rank, w1, w2)
            if witness is not None:
                return PitVerdict(REFUTED, i + 1, config.seed, witness)
        return PitVerdict(NO_REFUTATION, samples, config.seed)

    block = max(workers * 4, 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for start in range(0, samples, block):
            idxs = range(start, min(start + block, samples))
            results = pool.map(lambda i: _test_sample(sampler, i, rank, w1, w2), idxs)
            found = [r for r in results if r is not None]
            if found:
                witness = min(found, key=lambda r: r.sample_index)
                return PitVerdict(REFUTED, witness.sample_index + 1, config.seed, witness)
    return PitVerdict(NO_REFUTATION, samples, config.seed)


def diagonal_witness(phi: Mapping[int, int], w1: Word, w2: Word) -> PitVerdict:
    """Evaluate both words under generator -> diag(2^phi, 2^-phi).

    The trace of a word is then ``2^n + 2^-n`` with ``n`` its phi-weighted
    exponent sum, so the squares differ exactly when ``n1 != +-n2``.
    """
    gens = w1.generators() | w2.generators()
    missing = sorted(g for g in gens if g not in phi)
    if missing:
        raise MissingGeneratorError(
            f"no weight for generators {[generator_symbol(g) for g in missing]}")
    rank = max(max(phi, default=-1), max(gens, default=-1)) + 1
    rep = RepAssignment(tuple(Mat2.diagonal(Fraction(2) ** phi.get(g, 0)) for g in range(rank)))
    t1, t2 = word_trace(rep, w1), word_trace(rep, w2)
    if t1 * t1 != t2 * t2:
        return PitVerdict(REFUTED, 1, 0, Witness(rep, (t1, t2)))
    return PitVerdict(NO_REFUTATION, 1, 0)


def weighted_exponent_sum(phi: Mapping[int, int], w: Word) -> int:
    return sum(phi[g] * e for g, e in w.exponent_sums().items())
