"""Exact determinant-one 2x2 matrices, word evaluation and a splittable shear sampler."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .words import MissingGeneratorError, Word, generator_index, generator_symbol

Number = int | Fraction


def _q(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted for exact matrices")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """``"17"`` for integers, ``"289/16"`` otherwise."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Mat2:
    a11: Fraction
    a12: Fraction
    a21: Fraction
    a22: Fraction

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, _q(getattr(self, name)))
        if self.det() != 1:
            raise ValueError(f"determinant must be 1, got {self.det()}")

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def upper_shear(cls, k: Number) -> "Mat2":
        return cls(1, k, 0, 1)

    @classmethod
    def lower_shear(cls, k: Number) -> "Mat2":
        return cls(1, 0, k, 1)

    @classmethod
    def diagonal(cls, t: Number) -> "Mat2":
        t = Fraction(t)
        return cls(t, 0, 0, 1 / t)

    def det(self) -> Fraction:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> Fraction:
        return self.a11 + self.a22

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def inverse(self) -> "Mat2":
        # det = 1, so the inverse is the adjugate
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in (self.a11, self.a12, self.a21, self.a22)]

    @classmethod
    def from_json(cls, entries: Sequence[str]) -> "Mat2":
        return cls(*entries)


@dataclass(frozen=True)
class RepAssignment:
    """A representation of the free group of the given rank, one image per generator."""

    images: tuple[Mat2, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def from_mapping(cls, images: Mapping[int | str, Mat2], rank: int | None = None) -> "RepAssignment":
        by_index = {generator_index(k) if isinstance(k, str) else k: v for k, v in images.items()}
        rank = rank if rank is not None else len(by_index)
        missing = [generator_symbol(i) for i in range(rank) if i not in by_index]
        if missing:
            raise MissingGeneratorError(f"no image for generators {missing}")
        return cls(tuple(by_index[i] for i in range(rank)))

    def __getitem__(self, gen: int) -> Mat2:
        return self.images[gen]

    def to_json(self) -> dict[str, list[str]]:
        return {generator_symbol(i): m.to_json() for i, m in enumerate(self.images)}

    @classmethod
    def from_json(cls, data: Mapping[str, Sequence[str]]) -> "RepAssignment":
        return cls.from_mapping({k: Mat2.from_json(v) for k, v in data.items()})


def evaluate_word(rep: RepAssignment, w: Word) -> Mat2:
    if w.rank_needed() > rep.rank:
        raise MissingGeneratorError(
            f"word uses generator {generator_symbol(w.rank_needed() - 1)!r}, "
            f"representation has rank {rep.rank}")
    inverses = {}
    result = Mat2.identity()
    for letter in w.letters:
        m = rep[letter.gen]
        if letter.sign < 0:
            if letter.gen not in inverses:
                inverses[letter.gen] = m.inverse()
            m = inverses[letter.gen]
        result = result @ m
    return result


def word_trace(rep: RepAssignment, w: Word) -> Fraction:
    return evaluate_word(rep, w).trace()


def trace_identity_residual(u: Mat2, v: Mat2) -> Fraction:
    """tr(uv) + tr(uv^-1) - tr(u) tr(v); identically zero on SL(2)."""
    return (u @ v).trace() + (u @ v.inverse()).trace() - u.trace() * v.trace()


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    shear_bound: int = 10
    shear_count: int = 6

    def __post_init__(self):
        if self.shear_bound < 1:
            raise ValueError("shear_bound must be >= 1")
        if self.shear_count < 2:
            raise ValueError("shear_count must be >= 2")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def shear_product(params: Sequence[int]) -> Mat2:
    """Alternating product ``U(k1) L(l1) U(k2) L(l2) ...`` of unipotent shears."""
    result = Mat2.identity()
    for i, k in enumerate(params):
        result = result @ (Mat2.upper_shear(k) if i % 2 == 0 else Mat2.lower_shear(k))
    return result


class SL2Sampler:
    """Random SL(2, Z) matrices indexed by ``(sample, slot)``.

    Every index pair owns an independent child stream of the seed, so any
    subset of samples can be drawn in any order, or concurrently, and gives
    the same matrices as a sequential sweep.
    """

    def __init__(self, config: SamplerConfig | None = None):
        self.config = config or SamplerConfig()

    def shear_params(self, sample: int, slot: int) -> list[int]:
        cfg = self.config
        ss = np.random.SeedSequence(cfg.seed, spawn_key=(sample, slot))
        rng = np.random.default_rng(ss)
        raw = rng.integers(0, 2 * cfg.shear_bound, size=cfg.shear_count)
        # map 0..2B-1 onto [-B, B] \ {0}
        return [int(r) - cfg.shear_bound if r < cfg.shear_bound else int(r) - cfg.shear_bound + 1
                for r in raw]

    def matrix(self, sample: int, slot: int = 0) -> Mat2:
        return shear_product(self.shear_params(sample, slot))

    def representation(self, sample: int, rank: int) -> RepAssignment:
        return RepAssignment(tuple(self.matrix(sample, g) for g in range(rank)))


def random_sl2(config: SamplerConfig, index: int, slot: int = 0) -> Mat2:
    return SL2Sampler(config).matrix(index, slot)
