"""Intersection numbers of pants curves with the six essential arcs.

The pair of pants has fundamental group free on ``a`` and ``b``; the third
boundary class is ``c = a b^-1``.  A curve written cyclically as
``a^x1 b^y1 ... a^xn b^yn`` meets the arcs as

    l1 = sum |x_j|      l2 = sum |y_j|      w1 = 2n

and the remaining three numbers come from the same formulas in the bases
``(a, c)`` and ``(b, c)``.  A pure power of a basis generator misses the
corresponding ``w`` arc.

Why ``c = a b^-1`` and not ``(ab)^-1``: the published six-tuples for the pair
``a^-2 b a b^-1`` / ``a^-2 b a b`` are both ``(3, 2, 3, 4, 4, 6)``.  With
``c = (ab)^-1`` the w-entries come out ``(4, 6, 4)`` and ``(4, 6, 2)``, which
disagree with each other and with the published values; ``c = a b^-1``
reproduces them.  :data:`PRODUCT_INVERSE` keeps the rejected convention
available for that comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (CyclicWord, IdentityWordError, Substitution, Word, WordError,
                    cyclic_core, cyclic_reduce, parse_word, substitute)

A, B, C = 0, 1, 2


@dataclass(frozen=True)
class SyllableForm:
    """Cyclic syllable decomposition of a word over two basis generators.

    ``kind`` is ``"power"`` for a pure power of one generator (``pairs`` is
    then empty and ``power`` holds ``(generator, exponent)``), ``"single"``
    for ``a^x b^y`` with n = 1, and ``"generic"`` otherwise.
    """

    basis: tuple[int, int]
    pairs: tuple[tuple[int, int], ...]
    kind: str
    power: tuple[int, int] | None = None

    @property
    def n(self) -> int:
        return len(self.pairs)

    def same_cycle(self, other: "SyllableForm") -> bool:
        if (self.basis, self.kind, self.power) != (other.basis, other.kind, other.power):
            return False
        if self.n != other.n:
            return False
        return any(self.pairs[i:] + self.pairs[:i] == other.pairs for i in range(max(self.n, 1)))

    def first_sum(self) -> int:
        if self.kind == "power":
            return abs(self.power[1]) if self.power[0] == self.basis[0] else 0
        return sum(abs(x) for x, _ in self.pairs)

    def second_sum(self) -> int:
        if self.kind == "power":
            return abs(self.power[1]) if self.power[0] == self.basis[1] else 0
        return sum(abs(y) for _, y in self.pairs)

    def w_count(self) -> int:
        return 0 if self.kind == "power" else 2 * self.n


def syllable_decomposition(w: Word | CyclicWord, basis: tuple[int, int] = (A, B)) -> SyllableForm:
    """Split a cyclically reduced word into alternating syllables of the two basis generators.

    Plain words keep their own letter order (rotated only to start on a
    syllable of ``basis[0]``); cyclic words start from their canonical rotation.
    """
    word = w.as_word() if isinstance(w, CyclicWord) else w
    core = cyclic_core(word)
    if core.is_identity():
        raise IdentityWordError("identity word does not represent an essential curve")
    extra = core.generators() - set(basis)
    if extra:
        raise WordError(f"word uses generators outside the basis {basis}")
    syl = core.syllables()
    if len(syl) > 1 and syl[0][0] == syl[-1][0]:
        # merge wrap-around run (cannot cancel, the core is cyclically reduced)
        syl = [(syl[0][0], syl[0][1] + syl[-1][1])] + syl[1:-1]
    if len(syl) == 1:
        return SyllableForm(basis, (), "power", syl[0])
    start = next(i for i, (g, _) in enumerate(syl) if g == basis[0])
    syl = syl[start:] + syl[:start]
    pairs = tuple((syl[i][1], syl[i + 1][1]) for i in range(0, len(syl), 2))
    return SyllableForm(basis, pairs, "single" if len(pairs) == 1 else "generic")


@dataclass(frozen=True)
class PantsConvention:
    name: str
    c: Word                 # third boundary class in terms of a, b
    to_ac: Substitution     # a, b  ->  words in a, c
    to_bc: Substitution     # a, b  ->  words in b, c

    def check_bases(self) -> None:
        """Both substitutions must invert ``c -> self.c``; raise otherwise."""
        back = Substitution({A: Word.generator(A), B: Word.generator(B), C: self.c})
        for sub in (self.to_ac, self.to_bc):
            for g in (A, B):
                if substitute(substitute(Word.generator(g), sub), back) != Word.generator(g):
                    raise AssertionError(f"{self.name}: substitution is not a change of basis")


def _sub(a_img: str, b_img: str) -> Substitution:
    return Substitution({A: parse_word(a_img, 3), B: parse_word(b_img, 3)})


# c = a b^-1:  b = c^-1 a,  a = c b
STANDARD = PantsConvention("c=ab^-1", parse_word("a B"), _sub("a", "C a"), _sub("c b", "b"))
# c = (ab)^-1:  b = a^-1 c^-1,  a = c^-1 b^-1
PRODUCT_INVERSE = PantsConvention("c=(ab)^-1", parse_word("B A"), _sub("a", "A C"), _sub("C B", "b"))

CONVENTIONS = {"aB": STANDARD, "BA": PRODUCT_INVERSE}


@dataclass(frozen=True)
class SixTuple:
    l1: int
    l2: int
    l3: int
    w1: int
    w2: int
    w3: int

    def astuple(self) -> tuple[int, ...]:
        return (self.l1, self.l2, self.l3, self.w1, self.w2, self.w3)

    def to_json(self) -> dict:
        return {"l": [self.l1, self.l2, self.l3], "w": [self.w1, self.w2, self.w3]}


def arc_tuple(w: Word | CyclicWord, convention: PantsConvention = STANDARD) -> SixTuple:
    word = w.as_word() if isinstance(w, CyclicWord) else w
    if not word.generators() <= {A, B}:
        raise WordError("pants curves are words in a, b")
    if cyclic_core(word).is_identity():
        raise IdentityWordError("identity word does not represent an essential curve")
    ab = syllable_decomposition(word, (A, B))
    ac = syllable_decomposition(substitute(word, convention.to_ac), (A, C))
    bc = syllable_decomposition(substitute(word, convention.to_bc), (B, C))
    l3, l3_alt = ac.first_sum(), bc.first_sum()
    if l3 != l3_alt:
        raise AssertionError(f"l3 formulas disagree on {word}: {l3} via (a,c), {l3_alt} via (b,c)")
    return SixTuple(ab.first_sum(), ab.second_sum(), l3, ab.w_count(), ac.w_count(), bc.w_count())


def si_equivalent_in_pants(w1: Word | CyclicWord, w2: Word | CyclicWord,
                           convention: PantsConvention = STANDARD) -> bool:
    return arc_tuple(w1, convention) == arc_tuple(w2, convention)
