"""Abelianization of words under declared generator images in H_1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .words import MissingGeneratorError, Word, generator_index, generator_symbol

HomologyVector = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorImageMap:
    images: Mapping[int, HomologyVector]
    dimension: int

    def __post_init__(self):
        images = {int(g): tuple(int(v) for v in vec) for g, vec in self.images.items()}
        for g, vec in images.items():
            if len(vec) != self.dimension:
                raise ValueError(f"image of {generator_symbol(g)!r} has dimension {len(vec)}, "
                                 f"expected {self.dimension}")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_vectors(cls, images: Mapping[str | int, Iterable[int]]) -> "GeneratorImageMap":
        by_index = {generator_index(k) if isinstance(k, str) else k: tuple(v)
                    for k, v in images.items()}
        dims = {len(v) for v in by_index.values()}
        if len(dims) != 1:
            raise ValueError("generator images must share one dimension")
        return cls(by_index, dims.pop())

    @classmethod
    def parse(cls, items: Iterable[str]) -> "GeneratorImageMap":
        """Parse ``["a=1,0", "b=0,1"]``."""
        images = {}
        for item in items:
            name, sep, coords = item.partition("=")
            name = name.strip()
            if not sep or len(name) != 1 or not name.isalpha() or not name.islower():
                raise ValueError(f"bad map entry {item!r}; expected e.g. a=1,0")
            try:
                images[name] = tuple(int(v) for v in coords.split(","))
            except ValueError:
                raise ValueError(f"bad coordinates in map entry {item!r}") from None
        if not images:
            raise ValueError("empty generator map")
        return cls.from_vectors(images)

    def compose(self, linear: Iterable[Iterable[int]]) -> "GeneratorImageMap":
        """Push forward along an integer matrix (rows = target coordinates)."""
        rows = [tuple(r) for r in linear]
        for r in rows:
            if len(r) != self.dimension:
                raise ValueError("matrix width does not match map dimension")
        return GeneratorImageMap(
            {g: tuple(sum(r[i] * v[i] for i in range(self.dimension)) for r in rows)
             for g, v in self.images.items()},
            len(rows))

    def to_json(self) -> dict[str, list[int]]:
        return {generator_symbol(g): list(v) for g, v in sorted(self.images.items())}


DEFAULT_MAP = GeneratorImageMap({0: (1, 0), 1: (0, 1)}, 2)


def homology_class(w: Word, m: GeneratorImageMap = DEFAULT_MAP) -> HomologyVector:
    total = [0] * m.dimension
    for gen, count in w.exponent_sums().items():
        try:
            image = m.images[gen]
        except KeyError:
            raise MissingGeneratorError(f"no homology image for {generator_symbol(gen)!r}") from None
        for i, v in enumerate(image):
            total[i] += count * v
    return tuple(total)


def plus_minus_equal(v1: HomologyVector, v2: HomologyVector) -> bool:
    if len(v1) != len(v2):
        raise ValueError(f"dimension mismatch: {len(v1)} vs {len(v2)}")
    return tuple(v1) == tuple(v2) or tuple(v1) == tuple(-x for x in v2)
