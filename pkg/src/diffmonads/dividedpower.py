"""Reduced divided power polynomials, exact in every characteristic.

A monomial with exponent k on variable x stands for the divided power x^[k],
which behaves like x^k / k! without the division ever happening.  The three
places structure constants enter:

* products: x^[k] * x^[l] = C(k+l, k) x^[k+l], one binomial per shared
  variable;
* divided powers of a monomial: peel factors with (a*b)^[n] = a^{*n} * b^[n],
  whose left part is a multinomial (nk)!/(k!)^n and whose final single-factor
  step is (x^[k])^[n] = (kn)!/(n!(k!)^n) x^[kn];
* divided powers of a sum: the usual expansion over compositions of n with the
  zero parts omitted, scalars entering as c^[n-part] = c^n.

All of these are integers computed in Z and embedded afterwards.  Using the
n! * a^[n] * b^[n] form of the product rule instead would spuriously vanish in
characteristic p, which is why the a^{*n} * b^[n] form is used.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NotReduced, ShapeMismatch
from .powerseries import MultiIndex, _accumulate
from .scalars import FieldSpec, Scalar, dp_power_coeff, factorial, binomial, multinomial


def _compositions(n: int, k: int):
    """All k-tuples of nonnegative integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _monomial_mul(a: MultiIndex, b: MultiIndex) -> tuple[int, MultiIndex]:
    """Merge two divided monomials; the constant is a product of binomials."""
    coeff = 1
    for v, e in a:
        f = b.exponent(v)
        if f:
            coeff *= binomial(e + f, e)
    return coeff, a.mul(b)


def _monomial_divided_power(mi: MultiIndex, n: int) -> tuple[int, MultiIndex]:
    """n-th divided power of a single monomial: integer constant and index."""
    if n == 1:
        return 1, mi
    exps = [e for _, e in mi]
    coeff = 1
    for e in exps[:-1]:
        coeff *= multinomial([e] * n)
    coeff *= dp_power_coeff(n, exps[-1])
    return coeff, MultiIndex((v, e * n) for v, e in mi)


class DPElement:
    """Finitely supported Scalar combination of divided power monomials."""

    __slots__ = ("arity", "field", "coeffs")

    def __init__(self, arity: int, field: FieldSpec, coeffs: dict):
        self.arity = arity
        self.field = field
        self.coeffs = coeffs
        for mi in coeffs:
            if mi.max_var() >= arity:
                raise ShapeMismatch(f"monomial {mi} exceeds arity {arity}")
            if mi.degree() < 1:
                raise NotReduced("constant term in a divided power polynomial")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, field: FieldSpec) -> "DPElement":
        return cls(arity, field, {})

    @classmethod
    def generator(cls, i: int, arity: int, field: FieldSpec) -> "DPElement":
        """The monomial x_i^[1] (the monad unit on basis vectors)."""
        if not 0 <= i < arity:
            raise ShapeMismatch(f"variable {i} out of range for arity {arity}")
        return cls(arity, field, {MultiIndex.single(i): field.one()})

    @classmethod
    def from_terms(cls, arity: int, field: FieldSpec,
                   terms: Iterable[tuple[MultiIndex, Scalar]]) -> "DPElement":
        coeffs: dict = {}
        for mi, c in terms:
            _accumulate(coeffs, mi, c)
        return cls(arity, field, coeffs)

    # -- linear structure -----------------------------------------------------

    def _check_shape(self, other: "DPElement") -> None:
        if (self.arity, self.field) != (other.arity, other.field):
            raise ShapeMismatch("divided power shapes differ")

    def __add__(self, other: "DPElement") -> "DPElement":
        self._check_shape(other)
        out = dict(self.coeffs)
        for mi, c in other.coeffs.items():
            _accumulate(out, mi, c)
        return DPElement(self.arity, self.field, out)

    def __neg__(self) -> "DPElement":
        return self.scale(self.field.embed(-1))

    def __sub__(self, other: "DPElement") -> "DPElement":
        return self + (-other)

    def scale(self, s: Scalar) -> "DPElement":
        if not s:
            return DPElement(self.arity, self.field, {})
        return DPElement(self.arity, self.field,
                         {mi: c * s for mi, c in self.coeffs.items()})

    # -- multiplication ---------------------------------------------------------

    def __mul__(self, other: "DPElement") -> "DPElement":
        self._check_shape(other)
        out: dict = {}
        for mi, c in self.coeffs.items():
            for mj, d in other.coeffs.items():
                k, merged = _monomial_mul(mi, mj)
                prod = c * d * self.field.embed(k)
                _accumulate(out, merged, prod)
        return DPElement(self.arity, self.field, out)

    def mul_int_power(self, n: int) -> "DPElement":
        """Plain n-fold product f * f * ... * f (n >= 1)."""
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    # -- divided powers ----------------------------------------------------------

    def divided_power(self, n: int) -> "DPElement":
        """f^[n] for n >= 1, by composition-expansion over the support."""
        if n < 1:
            raise ValueError("divided powers are defined for n >= 1")
        if n == 1:
            return self
        terms = list(self.coeffs.items())
        out: dict = {}
        for parts in _compositions(n, len(terms)):
            scalar = self.field.one()
            mono: MultiIndex | None = None
            const = 1
            for (mi, c), nj in zip(terms, parts):
                if nj == 0:
                    continue
                scalar = scalar * (c ** nj)
                k, powered = _monomial_divided_power(mi, nj)
                const *= k
                if mono is None:
                    mono = powered
                else:
                    k2, mono = _monomial_mul(mono, powered)
                    const *= k2
            if mono is not None:
                _accumulate(out, mono, scalar * self.field.embed(const))
        return DPElement(self.arity, self.field, out)

    # -- substitution (the monad multiplication on tuples) -------------------------

    def substitute(self, args: Sequence["DPElement"],
                   arity: int | None = None) -> "DPElement":
        """Monomial y_1^[r_1]...y_j^[r_j] maps to the product of args^[r]."""
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
        result = DPElement.zero(out_arity, self.field)
        for mi, c in self.coeffs.items():
            term: DPElement | None = None
            for v, e in mi:
                factor = args[v].divided_power(e)
                term = factor if term is None else term * factor
                if term.is_zero():
                    break
            assert term is not None
            result = result + term.scale(c)
        return result

    # -- differentiation -------------------------------------------------------------

    def partial(self, x: int) -> tuple["DPElement", Scalar]:
        """Divided-power derivative d/dx: decrement without a binomial factor.

        The bare monomial x^[1] differentiates to the field unit, reported in
        the separate constant component since the algebra has no unit element.
        """
        if not 0 <= x < self.arity:
            raise ShapeMismatch(f"variable {x} out of range")
        out: dict = {}
        const = self.field.zero()
        for mi, c in self.coeffs.items():
            e = mi.exponent(x)
            if not e:
                continue
            lowered = mi.decrement(x)
            if lowered:
                _accumulate(out, lowered, c)
            else:
                const = const + c
        return DPElement(self.arity, self.field, out), const

    def partial_combinator(self) -> "DPElement":
        """Sum over i of (d f/d x_i) * y_i^[1] with y_i the dual variable n+i."""
        n = self.arity
        out: dict = {}
        for mi, c in self.coeffs.items():
            for v, e in mi:
                key = mi.decrement(v).mul(MultiIndex.single(n + v))
                _accumulate(out, key, c)
        return DPElement(2 * n, self.field, out)

    def counit(self) -> tuple[Scalar, ...]:
        """Coefficients of the degree-1 monomials x_i^[1]."""
        out = [self.field.zero()] * self.arity
        for mi, c in self.coeffs.items():
            if mi.degree() == 1:
                out[mi[0][0]] = c
        return tuple(out)

    # -- shape utilities ---------------------------------------------------------------

    def extend_arity(self, new_arity: int, offset: int = 0) -> "DPElement":
        if offset < 0 or self.arity + offset > new_arity:
            raise ShapeMismatch("block does not fit in the new arity")
        return DPElement(new_arity, self.field,
                         {mi.shift(offset): c for mi, c in self.coeffs.items()})

    def degrees(self) -> list[int]:
        return [mi.degree() for mi in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, DPElement):
            return NotImplemented
        return (self.arity, self.field) == (other.arity, other.field) and \
            self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"<divided arity={self.arity} terms={len(self.coeffs)}>"


def factorial_collapse(f: DPElement, n: int) -> DPElement:
    """Characteristic-0 sanity form: n! * f^[n], comparable with f^{*n}."""
    return f.divided_power(n).scale(f.field.embed(factorial(n)))
