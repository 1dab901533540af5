"""The free Zinbiel algebra on words: half-shuffle, substitution, derivatives.

Elements are Scalar combinations of nonempty words over the variable alphabet.
The half-shuffle of two words keeps the first letter of the left word in front
and interleaves everything else:

    (v_1 ... v_n) < (w_1 ... w_m) = v_1 . shuffle(v_2 ... v_n, w_1 ... w_m)

Its symmetrisation a*b = a<b + b<a is the ordinary shuffle product.  The
substitution of words is right-nested: a word i_1 ... i_l sends its letters to
arguments and combines them as g_{i_1} < (g_{i_2} < (... < g_{i_l})).

The derivative reads off the first letter: d(x_1 ... x_n)/dx is the tail when
x_1 = x and zero otherwise, with the one-letter word contributing to a
separate constant component (the algebra is not unital).  The combinator form
re-tags the first letter of every word into the dual block.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .dividedpower import DPElement
from .errors import ShapeMismatch
from .powerseries import _accumulate
from .scalars import FieldSpec, Scalar

Word = tuple  # nonempty tuple of variable indices


def _shuffles(u: Word, w: Word):
    """Yield every interleaving of u and w, once per merge pattern."""
    if not u:
        yield w
        return
    if not w:
        yield u
        return
    for tail in _shuffles(u[1:], w):
        yield (u[0],) + tail
    for tail in _shuffles(u, w[1:]):
        yield (w[0],) + tail


def _arrangements(counts: list[tuple[int, int]]):
    """Distinct words using each variable with the given multiplicity."""
    total = sum(c for _, c in counts)
    if total == 0:
        yield ()
        return
    for k, (var, c) in enumerate(counts):
        if c == 0:
            continue
        rest = list(counts)
        rest[k] = (var, c - 1)
        for tail in _arrangements(rest):
            yield (var,) + tail


class ZinElement:
    """Finitely supported Scalar combination of words."""

    __slots__ = ("arity", "field", "coeffs")

    def __init__(self, arity: int, field: FieldSpec, coeffs: dict):
        self.arity = arity
        self.field = field
        self.coeffs = coeffs
        for w in coeffs:
            if len(w) < 1:
                raise ShapeMismatch("empty word")
            if max(w) >= arity:
                raise ShapeMismatch(f"word {w} exceeds arity {arity}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, field: FieldSpec) -> "ZinElement":
        return cls(arity, field, {})

    @classmethod
    def generator(cls, i: int, arity: int, field: FieldSpec) -> "ZinElement":
        """The one-letter word at variable i (the monad unit)."""
        if not 0 <= i < arity:
            raise ShapeMismatch(f"variable {i} out of range for arity {arity}")
        return cls(arity, field, {(i,): field.one()})

    @classmethod
    def from_terms(cls, arity: int, field: FieldSpec,
                   terms: Iterable[tuple[Word, Scalar]]) -> "ZinElement":
        coeffs: dict = {}
        for w, c in terms:
            _accumulate(coeffs, w, c)
        return cls(arity, field, coeffs)

    # -- linear structure ---------------------------------------------------

    def _check_shape(self, other: "ZinElement") -> None:
        if (self.arity, self.field) != (other.arity, other.field):
            raise ShapeMismatch("word algebra shapes differ")

    def __add__(self, other: "ZinElement") -> "ZinElement":
        self._check_shape(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            _accumulate(out, w, c)
        return ZinElement(self.arity, self.field, out)

    def __neg__(self) -> "ZinElement":
        return self.scale(self.field.embed(-1))

    def __sub__(self, other: "ZinElement") -> "ZinElement":
        return self + (-other)

    def scale(self, s: Scalar) -> "ZinElement":
        if not s:
            return ZinElement(self.arity, self.field, {})
        return ZinElement(self.arity, self.field,
                          {w: c * s for w, c in self.coeffs.items()})

    # -- products -----------------------------------------------------------

    def half_shuffle(self, other: "ZinElement") -> "ZinElement":
        self._check_shape(other)
        out: dict = {}
        for v, cv in self.coeffs.items():
            head, tail = v[0], v[1:]
            for w, cw in other.coeffs.items():
                c = cv * cw
                for s in _shuffles(tail, w):
                    _accumulate(out, (head,) + s, c)
        return ZinElement(self.arity, self.field, out)

    def __mul__(self, other: "ZinElement") -> "ZinElement":
        """The shuffle product a<b + b<a (commutative and associative)."""
        return self.half_shuffle(other) + other.half_shuffle(self)

    # -- substitution ---------------------------------------------------------

    def substitute(self, args: Sequence["ZinElement"],
                   arity: int | None = None) -> "ZinElement":
        if len(args) != self.arity:
            raise ShapeMismatch(f"{self.arity} arguments expected, got {len(args)}")
        if args:
            out_arity = args[0].arity
        elif arity is not None:
            out_arity = arity
        else:
            raise ShapeMismatch("target arity required for nullary substitution")
        for a in args:
            if (a.arity, a.field) != (out_arity, self.field):
                raise ShapeMismatch("substitution arguments disagree in shape")
        result = ZinElement.zero(out_arity, self.field)
        for w, c in self.coeffs.items():
            term = right_nested([args[i] for i in w])
            result = result + term.scale(c)
        return result

    # -- differentiation --------------------------------------------------------

    def partial(self, x: int) -> tuple["ZinElement", Scalar]:
        """Deconcatenation derivative: drop a leading x, else zero.

        One-letter words land in the constant component (x tensor the empty
        word is read as the field unit).
        """
        if not 0 <= x < self.arity:
            raise ShapeMismatch(f"variable {x} out of range")
        out: dict = {}
        const = self.field.zero()
        for w, c in self.coeffs.items():
            if w[0] != x:
                continue
            if len(w) == 1:
                const = const + c
            else:
                _accumulate(out, w[1:], c)
        return ZinElement(self.arity, self.field, out), const

    def partial_combinator(self) -> "ZinElement":
        """Move the first letter of every word into the dual block n+i."""
        n = self.arity
        out = {(n + w[0],) + w[1:]: c for w, c in self.coeffs.items()}
        return ZinElement(2 * n, self.field, out)

    def counit(self) -> tuple[Scalar, ...]:
        """Coefficients of the one-letter words."""
        out = [self.field.zero()] * self.arity
        for w, c in self.coeffs.items():
            if len(w) == 1:
                out[w[0]] = c
        return tuple(out)

    # -- shape utilities -----------------------------------------------------------

    def extend_arity(self, new_arity: int, offset: int = 0) -> "ZinElement":
        if offset < 0 or self.arity + offset > new_arity:
            raise ShapeMismatch("block does not fit in the new arity")
        return ZinElement(new_arity, self.field,
                          {tuple(i + offset for i in w): c
                           for w, c in self.coeffs.items()})

    def degrees(self) -> list[int]:
        return [len(w) for w in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZinElement):
            return NotImplemented
        return (self.arity, self.field) == (other.arity, other.field) and \
            self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"<zinbiel arity={self.arity} terms={len(self.coeffs)}>"


def right_nested(elems: Sequence[ZinElement]) -> ZinElement:
    """e_1 < (e_2 < (... < e_k)); identity on a singleton sequence."""
    if not elems:
        raise ShapeMismatch("right-nested product of an empty sequence")
    return reduce(lambda acc, e: e.half_shuffle(acc), reversed(elems[:-1]),
                  elems[-1])


def divided_to_zinbiel(f: DPElement) -> ZinElement:
    """The embedding of divided powers into words.

    A monomial x_1^[r_1]...x_p^[r_p] becomes the sum of all distinct words
    using x_i exactly r_i times, each with coefficient one.  This is an
    algebra map for the shuffle product, but it does not commute with the
    differential combinators.
    """
    out: dict = {}
    for mi, c in f.coeffs.items():
        for w in _arrangements(list(mi)):
            _accumulate(out, w, c)
    return ZinElement(f.arity, f.field, out)


def integral_candidate(g: ZinElement) -> ZinElement:
    """Fold the dual block back onto the sources: both x_i and y_i become x_i.

    This is the functor applied to the codiagonal; on a basis word it erases
    the block distinction of every letter.  It is exposed as an experimental
    antiderivative candidate, with no axioms promised.
    """
    if g.arity % 2:
        raise ShapeMismatch("block folding needs an even arity")
    half = g.arity // 2
    out: dict = {}
    for w, c in g.coeffs.items():
        folded = tuple(i if i < half else i - half for i in w)
        _accumulate(out, folded, c)
    return ZinElement(half, g.field, out)
