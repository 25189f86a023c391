"""Trace characters of rank-2 free-group words as integer polynomials.

With ``x = tr A``, ``y = tr B`` and ``z = tr AB`` every trace ``tr w(A, B)``
of a word in two determinant-one matrices is a polynomial in ``x, y, z`` with
integer coefficients.  We compute it by repeatedly applying

    tr(uv) = tr(u) tr(v) - tr(uv^-1)

to a cyclic word split at two occurrences of the same letter, ``w = gU gV``,
which turns ``tr w`` into ``tr(gU) tr(gV) - tr(U V^-1)``: three strictly
shorter words.  Words without a repeated letter are ``a``, ``b``, ``ab``,
``ab^-1`` and the commutator class, handled directly.

The decision procedure relies on the classical fact that ``(x, y, z)`` is onto
``C^3`` for representations of the free group of rank 2, so a polynomial
identity in ``x, y, z`` is the same as an identity of characters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .words import IdentityWordError, Letter, Word, WordError, cyclic_core, unoriented_class

Exponent = tuple[int, int, int]
VARIABLES = ("x", "y", "z")


def _order_key(e: Exponent):
    # total degree first, then exponents with variable priority x > z > y; sorted descending
    return (sum(e), e[0], e[2], e[1])


@dataclass(frozen=True)
class TracePolynomial:
    """Sparse polynomial in x, y, z with integer coefficients."""

    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(e): int(c) for e, c in self.terms.items() if c}
        ordered = dict(sorted(clean.items(), key=lambda t: _order_key(t[0]), reverse=True))
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def constant(cls, c: int) -> "TracePolynomial":
        return cls({(0, 0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "TracePolynomial":
        e = [0, 0, 0]
        e[VARIABLES.index(name)] = 1
        return cls({tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TracePolynomial.constant(other)
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def _coerce(self, other) -> "TracePolynomial":
        return TracePolynomial.constant(other) if isinstance(other, int) else other

    def __add__(self, other) -> "TracePolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TracePolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "TracePolynomial":
        return TracePolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "TracePolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TracePolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TracePolynomial":
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return TracePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TracePolynomial":
        result = TracePolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x, y, z) -> Fraction:
        return evaluate_polynomial(self, x, y, z)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"TracePolynomial({format_polynomial(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"x": e[0], "y": e[1], "z": e[2], "c": str(c)} for e, c in self.terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "TracePolynomial":
        return cls({(t["x"], t["y"], t["z"]): int(t["c"]) for t in data})


X = TracePolynomial.variable("x")
Y = TracePolynomial.variable("y")
Z = TracePolynomial.variable("z")


def _monomial(e: Exponent) -> str:
    parts = []
    for name, k in zip(VARIABLES, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_polynomial(p: TracePolynomial) -> str:
    """Canonical text, e.g. ``x^2*y*z - x*z^2 - x*y^2 + x``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.terms.items()):
        mono = _monomial(e)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def evaluate_polynomial(p: TracePolynomial, x, y, z) -> Fraction:
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    total = Fraction(0)
    for (i, j, k), c in p.terms.items():
        total += c * x**i * y**j * z**k
    return total


def _measure(letters: tuple[Letter, ...]) -> tuple[int, int]:
    # (length, 1 if no letter repeats); strictly decreases along the recursion
    return (len(letters), int(len(set(letters)) == len(letters)))


def _class_key(w: Word) -> tuple[Letter, ...]:
    if cyclic_core(w).is_identity():
        return ()
    return unoriented_class(w).letters


def _best_repeat_split(letters: tuple[Letter, ...]) -> tuple[int, int] | None:
    """Positions ``i < j`` of equal letters minimising ``max(j - i, n - (j - i))``."""
    n = len(letters)
    best = None
    best_cost = None
    positions: dict[Letter, list[int]] = {}
    for idx, letter in enumerate(letters):
        positions.setdefault(letter, []).append(idx)
    for idxs in positions.values():
        for p in range(len(idxs)):
            for q in range(p + 1, len(idxs)):
                d = idxs[q] - idxs[p]
                cost = max(d, n - d)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (idxs[p], idxs[q]), cost
    return best


@lru_cache(maxsize=None)
def _trace_of_class(key: tuple[Letter, ...]) -> TracePolynomial:
    n = len(key)
    if n == 0:
        return TracePolynomial.constant(2)
    if n == 1:
        return X if key[0].gen == 0 else Y
    split = _best_repeat_split(key)
    if split is not None:
        i, j = split
        rotated = key[i:] + key[:i]
        d = j - i
        u = Word(rotated[:d])           # gU
        v = Word(rotated[d:])           # gV
        rest = Word(rotated[1:d]) * Word(rotated[d + 1:]).inverse()  # U V^-1
        return _recurse(key, u) * _recurse(key, v) - _recurse(key, rest)
    if n == 2:
        if key[0].sign == key[1].sign:
            return Z
        # tr(a b^-1) = tr(a) tr(b) - tr(ab)
        return X * Y - Z
    if n == 4:
        u = Word(key[:2])
        v = Word(key[2:])
        return _recurse(key, u) * _recurse(key, v) - _recurse(key, u * v.inverse())
    raise AssertionError(f"unexpected repeat-free cyclic word of length {n}")


def _recurse(parent: tuple[Letter, ...], child: Word) -> TracePolynomial:
    child_key = _class_key(child)
    assert _measure(child_key) < _measure(parent), (parent, child_key)
    return _trace_of_class(child_key)


def _check_rank2(w: Word) -> None:
    if not w.generators() <= {0, 1}:
        raise WordError("trace polynomials are only defined for words in a, b")


def trace_polynomial(w: Word) -> TracePolynomial:
    """The polynomial P with P(tr A, tr B, tr AB) = tr w(A, B) for all A, B in SL(2)."""
    _check_rank2(w)
    return _trace_of_class(_class_key(w))


@dataclass(frozen=True)
class TraceSquareResult:
    equivalent: bool
    difference: TracePolynomial


def trace_square_equivalent(w1: Word, w2: Word) -> TraceSquareResult:
    """Decide whether tr(w1)^2 and tr(w2)^2 agree as functions on all representations."""
    for w in (w1, w2):
        _check_rank2(w)
        if cyclic_core(w).is_identity():
            raise IdentityWordError("identity word does not represent an essential curve")
    p1, p2 = trace_polynomial(w1), trace_polynomial(w2)
    diff = p1 * p1 - p2 * p2
    return TraceSquareResult(diff.is_zero(), diff)
