"""Free-group words: parsing, free and cyclic reduction, conjugacy, substitution.

A letter is a ``(generator index, sign)`` pair; generator ``0`` prints as ``a``,
``1`` as ``b`` and so on.  Words are always stored freely reduced.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

MAX_RANK = 26
DEFAULT_RANK = 2


class WordError(ValueError):
    """Base class for word-level errors."""


class ParseError(WordError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class IdentityWordError(WordError):
    """Raised when a curve-level operation receives the identity (not an essential curve)."""


class MissingGeneratorError(WordError):
    pass


class Letter(NamedTuple):
    gen: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def key(self) -> tuple[int, int]:
        # +1 sorts before -1
        return (self.gen, 0 if self.sign > 0 else 1)

    def __str__(self) -> str:
        name = generator_symbol(self.gen)
        return name if self.sign > 0 else name.upper()


def generator_symbol(index: int) -> str:
    if not 0 <= index < MAX_RANK:
        raise WordError(f"generator index {index} out of range")
    return string.ascii_lowercase[index]


def generator_index(symbol: str) -> int:
    return string.ascii_lowercase.index(symbol.lower())


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if letter.sign not in (1, -1):
            raise WordError(f"invalid sign {letter.sign}")
        if stack and stack[-1].gen == letter.gen and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(int(g), int(s)) for g, s in self.letters)
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> "Word":
        """Build from ``(generator, exponent)`` syllables, e.g. ``[(0, -2), (1, 1)]``."""
        letters = []
        for gen, exp in pairs:
            sign = 1 if exp > 0 else -1
            letters.extend([Letter(gen, sign)] * abs(exp))
        return cls(tuple(letters))

    @classmethod
    def generator(cls, index: int) -> "Word":
        return cls((Letter(index, 1),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def conjugate_by(self, u: "Word") -> "Word":
        """Return ``u w u^-1``."""
        return u * self * u.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> set[int]:
        return {letter.gen for letter in self.letters}

    def rank_needed(self) -> int:
        return max(self.generators(), default=-1) + 1

    def exponent_sums(self) -> dict[int, int]:
        sums: dict[int, int] = {}
        for letter in self.letters:
            sums[letter.gen] = sums.get(letter.gen, 0) + letter.sign
        return sums

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs as ``(generator, exponent)`` pairs (not cyclic)."""
        out: list[tuple[int, int]] = []
        for letter in self.letters:
            if out and out[-1][0] == letter.gen:
                out[-1] = (letter.gen, out[-1][1] + letter.sign)
            else:
                out.append((letter.gen, letter.sign))
        return out

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def format_word(w: Word | "CyclicWord") -> str:
    """Caret form, lowercase only: ``a^-2 b a b^-1``.  Identity prints as ``""``."""
    parts = []
    for gen, exp in Word(w.letters).syllables():
        sym = generator_symbol(gen)
        parts.append(sym if exp == 1 else f"{sym}^{exp}")
    return " ".join(parts)


def parse_word(text: str, rank: int = DEFAULT_RANK) -> Word:
    """Parse ``text`` into a freely reduced word over the first ``rank`` generators.

    Terms are a letter with an optional ``^n`` or ``^-n`` power, separated by
    whitespace or ``*``.  An uppercase letter is the inverse generator.
    """
    if not 1 <= rank <= MAX_RANK:
        raise WordError(f"rank must be in 1..{MAX_RANK}, got {rank}")
    n = len(text)
    pos = 0
    letters: list[Letter] = []

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        return Word()
    while True:
        ch = text[pos]
        if not (ch.isascii() and ch.isalpha()):
            raise ParseError(f"expected a generator letter, got {ch!r}", text, pos)
        gen = generator_index(ch)
        if gen >= rank:
            raise ParseError(f"unknown generator {ch!r} for rank {rank}", text, pos)
        sign = -1 if ch.isupper() else 1
        pos += 1
        power = 1
        if pos < n and text[pos] == "^":
            pos += 1
            neg = pos < n and text[pos] == "-"
            if neg:
                pos += 1
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected digits after '^'", text, pos)
            power = int(text[start:pos]) * (-1 if neg else 1)
        sign *= 1 if power >= 0 else -1
        letters.extend([Letter(gen, sign)] * abs(power))

        if pos == n:
            break
        after_ws = skip_ws(pos)
        if after_ws < n and text[after_ws] == "*":
            pos = skip_ws(after_ws + 1)
            if pos == n:
                raise ParseError("dangling '*'", text, pos)
        elif after_ws == n:
            break
        elif after_ws > pos:
            pos = after_ws
        else:
            raise ParseError(f"expected separator, got {text[pos]!r}", text, pos)
    return Word(tuple(letters))


def _least_rotation(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    keys = [letter.key() for letter in letters]
    best = min(range(len(keys)), key=lambda i: keys[i:] + keys[:i])
    return letters[best:] + letters[:best]


@dataclass(frozen=True)
class CyclicWord:
    """Cyclically reduced word in its canonical (lexicographically least) rotation."""

    letters: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def as_word(self) -> Word:
        return Word(self.letters)

    def inverse(self) -> "CyclicWord":
        return cyclic_reduce(self.as_word().inverse())

    def generators(self) -> set[int]:
        return {letter.gen for letter in self.letters}

    def __str__(self) -> str:
        return format_word(self)


def cyclic_core(w: Word) -> Word:
    """Strip cancelling first/last letters; the result is cyclically reduced (or empty)."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i].gen == letters[j].gen and letters[i].sign == -letters[j].sign:
        i += 1
        j -= 1
    return Word(letters[i:j + 1])


def cyclic_reduce(w: Word) -> CyclicWord:
    core = cyclic_core(w)
    if core.is_identity():
        raise IdentityWordError("identity word does not represent an essential curve")
    return CyclicWord(_least_rotation(core.letters))


def are_conjugate(w1: Word, w2: Word, allow_inverse: bool = False) -> bool:
    c1 = cyclic_reduce(w1)
    if c1 == cyclic_reduce(w2):
        return True
    return allow_inverse and c1 == cyclic_reduce(w2.inverse())


def unoriented_class(w: Word) -> CyclicWord:
    """Canonical representative of the conjugacy class of ``w`` up to inversion."""
    c = cyclic_reduce(w)
    ci = cyclic_reduce(w.inverse())
    return min(c, ci, key=lambda cw: [letter.key() for letter in cw.letters])


@dataclass(frozen=True)
class Substitution:
    """Homomorphism of free groups given by generator images."""

    images: Mapping[int, Word]

    @classmethod
    def parse(cls, spec: Mapping[str, str], rank: int = DEFAULT_RANK) -> "Substitution":
        return cls({generator_index(k): parse_word(v, rank) for k, v in spec.items()})

    def __call__(self, w: Word) -> Word:
        return substitute(w, self)


def substitute(w: Word, s: Substitution) -> Word:
    letters: list[Letter] = []
    for letter in w.letters:
        try:
            image = s.images[letter.gen]
        except KeyError:
            raise MissingGeneratorError(
                f"no image for generator {generator_symbol(letter.gen)!r}") from None
        letters.extend(image.letters if letter.sign > 0 else image.inverse().letters)
    return Word(tuple(letters))
