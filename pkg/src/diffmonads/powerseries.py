"""Multivariable power series truncated at a degree cap, and bare polynomials.

Two regimes share one representation:

* the reduced capped regime (``cap`` an integer, ``reduced`` True): series with
  no constant term, kept exact modulo monomials of degree > cap.  Substitution
  of reduced series is a congruence for this quotient, because composite
  monomial degrees only grow, so composing truncations computes the truncation
  of the composite.
* the polynomial regime (``cap`` None, ``reduced`` False): ordinary sparse
  polynomials, constants allowed, nothing discarded.

Single partial derivatives can produce constant terms, so they lower the cap
by one and clear the reduced flag; the differential combinator multiplies each
partial by a fresh dual variable, which keeps everything reduced at full cap.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NonReducedArgument, NotReduced, ShapeMismatch
from .scalars import FieldSpec, Scalar


class MultiIndex(tuple):
    """A commutative exponent vector: sorted ((var, exp), ...) with exp >= 1."""

    @classmethod
    def make(cls, pairs: Iterable[tuple[int, int]]) -> "MultiIndex":
        merged: dict[int, int] = {}
        for var, exp in pairs:
            if exp:
                merged[var] = merged.get(var, 0) + exp
        return cls(sorted((v, e) for v, e in merged.items() if e != 0))

    @classmethod
    def single(cls, var: int, exp: int = 1) -> "MultiIndex":
        return cls(((var, exp),))

    def degree(self) -> int:
        return sum(e for _, e in self)

    def exponent(self, var: int) -> int:
        for v, e in self:
            if v == var:
                return e
        return 0

    def mul(self, other: "MultiIndex") -> "MultiIndex":
        return MultiIndex.make(list(self) + list(other))

    def decrement(self, var: int) -> "MultiIndex":
        """Lower the exponent of ``var`` by one (it must be present)."""
        out = []
        for v, e in self:
            if v == var:
                if e > 1:
                    out.append((v, e - 1))
            else:
                out.append((v, e))
        return MultiIndex(out)

    def shift(self, offset: int) -> "MultiIndex":
        return MultiIndex((v + offset, e) for v, e in self)

    def max_var(self) -> int:
        return max((v for v, _ in self), default=-1)


EMPTY_INDEX = MultiIndex(())


def _accumulate(dst: dict, key, coeff: Scalar) -> None:
    cur = dst.get(key)
    if cur is None:
        if coeff:
            dst[key] = coeff
        return
    new = cur + coeff
    if new:
        dst[key] = new
    else:
        del dst[key]


class SeriesElement:
    """A finitely supported map MultiIndex -> nonzero Scalar with shape tags."""

    __slots__ = ("arity", "cap", "reduced", "field", "coeffs")

    def __init__(self, arity: int, cap: int | None, reduced: bool,
                 field: FieldSpec, coeffs: dict):
        self.arity = arity
        self.cap = cap
        self.reduced = reduced
        self.field = field
        self.coeffs = coeffs
        for mi in coeffs:
            deg = mi.degree()
            if mi.max_var() >= arity:
                raise ShapeMismatch(f"monomial {mi} exceeds arity {arity}")
            if reduced and deg < 1:
                raise NotReduced("constant term in a reduced series")
            if cap is not None and deg > cap:
                raise ShapeMismatch(f"degree {deg} exceeds cap {cap}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, field: FieldSpec, cap: int | None,
             reduced: bool = True) -> "SeriesElement":
        return cls(arity, cap, reduced, field, {})

    @classmethod
    def generator(cls, i: int, arity: int, field: FieldSpec, cap: int | None,
                  reduced: bool = True) -> "SeriesElement":
        """The degree-1 monomial x_i (the monad unit on basis vectors)."""
        if not 0 <= i < arity:
            raise ShapeMismatch(f"variable {i} out of range for arity {arity}")
        return cls(arity, cap, reduced, field, {MultiIndex.single(i): field.one()})

    @classmethod
    def from_terms(cls, arity: int, field: FieldSpec, cap: int | None,
                   reduced: bool, terms: Iterable[tuple[MultiIndex, Scalar]]
                   ) -> "SeriesElement":
        coeffs: dict = {}
        for mi, c in terms:
            _accumulate(coeffs, mi, c)
        return cls(arity, cap, reduced, field, coeffs)

    # -- linear structure ---------------------------------------------------

    def _check_shape(self, other: "SeriesElement") -> None:
        if (self.arity, self.cap, self.reduced, self.field) != \
           (other.arity, other.cap, other.reduced, other.field):
            raise ShapeMismatch("series shapes differ")

    def __add__(self, other: "SeriesElement") -> "SeriesElement":
        self._check_shape(other)
        out = dict(self.coeffs)
        for mi, c in other.coeffs.items():
            _accumulate(out, mi, c)
        return SeriesElement(self.arity, self.cap, self.reduced, self.field, out)

    def __neg__(self) -> "SeriesElement":
        return self.scale(self.field.embed(-1))

    def __sub__(self, other: "SeriesElement") -> "SeriesElement":
        return self + (-other)

    def scale(self, s: Scalar) -> "SeriesElement":
        if not s:
            return SeriesElement(self.arity, self.cap, self.reduced, self.field, {})
        return SeriesElement(self.arity, self.cap, self.reduced, self.field,
                             {mi: c * s for mi, c in self.coeffs.items()})

    # -- multiplication -----------------------------------------------------

    def __mul__(self, other: "SeriesElement") -> "SeriesElement":
        if (self.arity, self.cap, self.field) != (other.arity, other.cap, other.field):
            raise ShapeMismatch("series shapes differ")
        out: dict = {}
        cap = self.cap
        for mi, c in self.coeffs.items():
            di = mi.degree()
            for mj, d in other.coeffs.items():
                if cap is not None and di + mj.degree() > cap:
                    continue
                _accumulate(out, mi.mul(mj), c * d)
        return SeriesElement(self.arity, cap, self.reduced and other.reduced,
                             self.field, out)

    # -- substitution (the monad multiplication on tuples) -------------------

    def substitute(self, args: Sequence["SeriesElement"],
                   arity: int | None = None) -> "SeriesElement":
        """Replace variable i by args[i], expand, and truncate at the cap.

        Capped series require every argument to be reduced; the polynomial
        regime (cap None) also accepts constant-bearing arguments.
        """
        if len(args) != self.arity:
            raise ShapeMismatch(f"{self.arity} arguments expected, got {len(args)}")
        if self.cap is not None and not self.reduced:
            raise NotReduced("capped substitution needs a reduced series")
        if args:
            out_arity = args[0].arity
        elif arity is not None:
            out_arity = arity
        else:
            raise ShapeMismatch("target arity required for nullary substitution")
        reduced_out = self.reduced
        for a in args:
            if (a.arity, a.cap, a.field) != (out_arity, self.cap, self.field):
                raise ShapeMismatch("substitution arguments disagree in shape")
            if self.cap is not None and not a.reduced:
                raise NonReducedArgument("capped series composed with a "
                                         "constant-bearing argument")
            reduced_out = reduced_out and a.reduced

        powers: dict[tuple[int, int], dict] = {}

        def var_power(i: int, e: int) -> dict:
            key = (i, e)
            got = powers.get(key)
            if got is not None:
                return got
            if e == 1:
                out = dict(args[i].coeffs)
            else:
                prev = var_power(i, e - 1)
                out = {}
                for mi, c in prev.items():
                    di = mi.degree()
                    for mj, d in args[i].coeffs.items():
                        if self.cap is not None and di + mj.degree() > self.cap:
                            continue
                        _accumulate(out, mi.mul(mj), c * d)
            powers[key] = out
            return out

        result: dict = {}
        for mi, c in self.coeffs.items():
            term: dict | None = None
            for v, e in mi:
                factor = var_power(v, e)
                if term is None:
                    term = factor
                else:
                    nxt: dict = {}
                    for ma, ca in term.items():
                        da = ma.degree()
                        for mb, cb in factor.items():
                            if self.cap is not None and da + mb.degree() > self.cap:
                                continue
                            _accumulate(nxt, ma.mul(mb), ca * cb)
                    term = nxt
                if not term:
                    break
            if term is None:
                # Degree-0 monomial of the polynomial regime: a constant.
                _accumulate(result, EMPTY_INDEX, c)
            else:
                for mk, ck in term.items():
                    _accumulate(result, mk, ck * c)
        return SeriesElement(out_arity, self.cap, reduced_out, self.field, result)

    # -- differentiation ------------------------------------------------------

    def partial(self, i: int) -> "SeriesElement":
        """Formal partial derivative; caps drop by one, constants may appear."""
        if not 0 <= i < self.arity:
            raise ShapeMismatch(f"variable {i} out of range")
        out: dict = {}
        for mi, c in self.coeffs.items():
            e = mi.exponent(i)
            if e:
                _accumulate(out, mi.decrement(i), c * e)
        new_cap = None if self.cap is None else self.cap - 1
        return SeriesElement(self.arity, new_cap, False, self.field, out)

    def partial_combinator(self) -> "SeriesElement":
        """Sum over i of (df/dx_i) * y_i, with y_i the dual variable n+i.

        Each output monomial keeps the total degree of its source and carries
        exactly one unit of dual degree, so the result is reduced at the same
        cap.
        """
        if self.cap is not None and not self.reduced:
            raise NotReduced("differential combinator needs a reduced series")
        n = self.arity
        out: dict = {}
        for mi, c in self.coeffs.items():
            for v, e in mi:
                key = mi.decrement(v).mul(MultiIndex.single(n + v))
                _accumulate(out, key, c * e)
        return SeriesElement(2 * n, self.cap, self.reduced, self.field, out)

    def counit(self) -> tuple[Scalar, ...]:
        """The degree-1 coefficient vector."""
        out = [self.field.zero()] * self.arity
        for mi, c in self.coeffs.items():
            if mi.degree() == 1:
                out[mi[0][0]] = c
        return tuple(out)

    # -- shape utilities ------------------------------------------------------

    def truncate(self, new_cap: int) -> "SeriesElement":
        if self.cap is not None and new_cap > self.cap:
            raise ShapeMismatch("cannot raise a degree cap")
        out = {mi: c for mi, c in self.coeffs.items() if mi.degree() <= new_cap}
        return SeriesElement(self.arity, new_cap, self.reduced, self.field, out)

    def extend_arity(self, new_arity: int, offset: int = 0) -> "SeriesElement":
        """Relabel into a wider variable block (the functor on an injection)."""
        if offset < 0 or self.arity + offset > new_arity:
            raise ShapeMismatch("block does not fit in the new arity")
        return SeriesElement(new_arity, self.cap, self.reduced, self.field,
                             {mi.shift(offset): c for mi, c in self.coeffs.items()})

    def degrees(self) -> list[int]:
        return [mi.degree() for mi in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesElement):
            return NotImplemented
        return (self.arity, self.cap, self.reduced, self.field) == \
               (other.arity, other.cap, other.reduced, other.field) and \
               self.coeffs == other.coeffs

    def __repr__(self) -> str:
        kind = "poly" if self.cap is None else f"series(cap={self.cap})"
        return f"<{kind} arity={self.arity} terms={len(self.coeffs)}>"
