"""Homogeneous two-variable polynomials with a twisted product.

The weight-enumerator algebra in this package multiplies homogeneous
polynomials in X, Y whose coefficients are allowed to depend on an integer
parameter lambda. The product is *not* the commutative one: writing
a = sum_i a_i(lam) Y^i X^(r-i) of degree r and b of degree s, the twisted
product has coefficients

    (a * b)_u(lam) = sum_i b^(i*s) * a_i(lam) * b_(u-i)(lam - i),

i.e. each Y-power picked from the left factor scales the right factor by a
power of the base b = -q and shifts its parameter. The product is
associative (the suite checks this rather than assuming it) but not
commutative.

Coefficients are exact: ints, or Fractions where a construction genuinely
produces them (negative lambda arguments, or the inverse derivative whose
b-power twist has negative exponent).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ContextMismatch, NonIntegralResult
from .negq import NegQContext, beta_fn, bpow, triangle

Number = int | Fraction
CoeffFn = Callable[[int, int], Number]


@dataclass(frozen=True, eq=False)
class LambdaPoly:
    """Homogeneous polynomial of the given degree with lambda-dependent
    coefficients. coefficient(i, lam) is the Y^i X^(degree-i) coefficient
    and is 0 outside 0 <= i <= degree."""

    ctx: NegQContext
    degree: int
    coeff: CoeffFn

    def coefficient(self, i: int, lam: int) -> Number:
        if i < 0 or i > self.degree:
            return 0
        return self.coeff(i, lam)


@dataclass(frozen=True)
class ConcretePoly:
    """Homogeneous polynomial with fixed numeric coefficients."""

    ctx: NegQContext
    degree: int
    coefficients: tuple[Number, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("need degree+1 coefficients")

    def coefficient(self, i: int) -> Number:
        if i < 0 or i > self.degree:
            return 0
        return self.coefficients[i]

    def evaluate(self, x: Number, y: Number) -> Number:
        return sum(self.coefficients[i] * y ** i * x ** (self.degree - i)
                   for i in range(self.degree + 1))

    def to_jsonable(self) -> dict:
        for c in self.coefficients:
            if isinstance(c, Fraction) and c.denominator != 1:
                raise NonIntegralResult(f"coefficient {c} is not an integer")
        return {"degree": self.degree,
                "coefficients": [str(int(c)) for c in self.coefficients]}


def _check_ctx(a: LambdaPoly, b: LambdaPoly) -> NegQContext:
    if a.ctx != b.ctx:
        raise ContextMismatch(f"mixed parameters {a.ctx} and {b.ctx}")
    return a.ctx


def one_poly(ctx: NegQContext) -> LambdaPoly:
    return LambdaPoly(ctx, 0, lambda i, lam: 1)


def constant_poly(ctx: NegQContext, value: Number) -> LambdaPoly:
    return LambdaPoly(ctx, 0, lambda i, lam: value)


def mu_poly(ctx: NegQContext) -> LambdaPoly:
    """X + (-b^lambda - 1) Y, the rank-one enumerator seed."""
    def coeff(i: int, lam: int) -> Number:
        if i == 0:
            return 1
        return -bpow(ctx, lam) - 1
    return LambdaPoly(ctx, 1, coeff)


def nu_poly(ctx: NegQContext) -> LambdaPoly:
    """X - Y; its coefficients do not involve lambda."""
    return LambdaPoly(ctx, 1, lambda i, lam: 1 if i == 0 else -1)


def negq_product(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    """Twisted product; see the module docstring for the exact twist."""
    ctx = _check_ctx(a, b)
    r, s = a.degree, b.degree
    base = ctx.b
    cache: dict[tuple[int, int], Number] = {}

    def coeff(u: int, lam: int) -> Number:
        key = (u, lam)
        if key not in cache:
            acc: Number = 0
            for i in range(max(0, u - s), min(r, u) + 1):
                acc += base ** (i * s) * a.coefficient(i, lam) \
                    * b.coefficient(u - i, lam - i)
            cache[key] = acc
        return cache[key]

    return LambdaPoly(ctx, r + s, coeff)


def negq_power(a: LambdaPoly, k: int) -> LambdaPoly:
    """k-fold twisted power, multiplying by a on the left each step."""
    if k < 0:
        raise ValueError("power must be non-negative")
    out = one_poly(a.ctx)
    for _ in range(k):
        out = negq_product(a, out)
    return out


def poly_add(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    ctx = _check_ctx(a, b)
    deg = max(a.degree, b.degree)
    return LambdaPoly(ctx, deg,
                      lambda i, lam: a.coefficient(i, lam) + b.coefficient(i, lam))


def poly_scale(a: LambdaPoly, factor: Number) -> LambdaPoly:
    return LambdaPoly(a.ctx, a.degree,
                      lambda i, lam: factor * a.coefficient(i, lam))


def negq_transform(counts: Sequence[Number], y_sub: LambdaPoly,
                   x_sub: LambdaPoly) -> LambdaPoly:
    """Substitute polynomials for the two variables of an enumerator.

    Given enumerator coefficients counts[i] (the Y^i X^(t-i) weights) this
    returns sum_i counts[i] * y_sub^[i] * x_sub^[t-i] under the twisted
    product. Both substituends must be degree 1 so the result is again
    homogeneous of degree t.
    """
    ctx = _check_ctx(y_sub, x_sub)
    if y_sub.degree != 1 or x_sub.degree != 1:
        raise ValueError("substituends must have degree 1")
    if not counts:
        raise ValueError("need at least one coefficient")
    t = len(counts) - 1
    out: LambdaPoly | None = None
    for i, c in enumerate(counts):
        if c == 0:
            continue
        term = poly_scale(
            negq_product(negq_power(y_sub, i), negq_power(x_sub, t - i)), c)
        out = term if out is None else poly_add(out, term)
    return out if out is not None else poly_scale(negq_power(x_sub, t), 0)


def evaluate(a: LambdaPoly, x: Number, y: Number, lam: int) -> Number:
    return sum(a.coefficient(i, lam) * y ** i * x ** (a.degree - i)
               for i in range(a.degree + 1))


def concretize(a: LambdaPoly, lam: int) -> ConcretePoly:
    """Freeze the parameter; Fractions that are whole numbers become ints."""
    vals = []
    for i in range(a.degree + 1):
        v = a.coefficient(i, lam)
        if isinstance(v, Fraction) and v.denominator == 1:
            v = int(v)
        vals.append(v)
    return ConcretePoly(a.ctx, a.degree, tuple(vals))


# --------------------------------------------------------------- calculus

def negq_derivative(a: LambdaPoly, phi: int) -> LambdaPoly:
    """phi-fold q-derivative: coefficient i picks up beta(r - i, phi) and the
    degree drops by phi. Differentiating past the degree gives the zero
    polynomial."""
    if phi < 0:
        raise ValueError("phi must be non-negative")
    r = a.degree
    if phi == 0:
        return a
    if phi > r:
        return constant_poly(a.ctx, 0)
    ctx = a.ctx
    return LambdaPoly(ctx, r - phi,
                      lambda i, lam: a.coefficient(i, lam) * beta_fn(ctx, r - i, phi)
                      if 0 <= i <= r - phi else 0)


def negq_inv_derivative(a: LambdaPoly, phi: int) -> LambdaPoly:
    """phi-fold derivative in the reciprocal base.

    Term i of the input contributes b^(phi(1-i) + tri(phi)) * beta(i, phi)
    times its coefficient to output term i - phi. The b-power has negative
    exponent for i > 1, so coefficients are exact rationals in general;
    integrality is only asserted where a *consumer* requires it.
    """
    if phi < 0:
        raise ValueError("phi must be non-negative")
    r = a.degree
    if phi == 0:
        return a
    if phi > r:
        return constant_poly(a.ctx, 0)
    ctx = a.ctx

    def coeff(j: int, lam: int) -> Number:
        if j < 0 or j > r - phi:
            return 0
        i = j + phi
        return (a.coefficient(i, lam) * bpow(ctx, phi * (1 - i) + triangle(phi))
                * beta_fn(ctx, i, phi))

    return LambdaPoly(ctx, r - phi, coeff)


# ------------------------------------------------- structural combinators

def div_x(a: LambdaPoly) -> LambdaPoly:
    """Strip one factor of X. Only meaningful when the pure-Y^r coefficient
    vanishes identically; the caller is responsible for that."""
    if a.degree < 1:
        raise ValueError("cannot divide a degree-0 polynomial by X")
    return LambdaPoly(a.ctx, a.degree - 1,
                      lambda i, lam: a.coefficient(i, lam)
                      if 0 <= i <= a.degree - 1 else 0)


def div_y(a: LambdaPoly) -> LambdaPoly:
    """Strip one factor of Y. Only meaningful when the pure-X^r coefficient
    (index 0) vanishes identically."""
    if a.degree < 1:
        raise ValueError("cannot divide a degree-0 polynomial by Y")
    return LambdaPoly(a.ctx, a.degree - 1,
                      lambda i, lam: a.coefficient(i + 1, lam)
                      if 0 <= i <= a.degree - 1 else 0)


def scale_y(a: LambdaPoly) -> LambdaPoly:
    """Substitute Y -> b*Y, i.e. coefficient i gains a factor b^i."""
    base = a.ctx.b
    return LambdaPoly(a.ctx, a.degree,
                      lambda i, lam: base ** i * a.coefficient(i, lam)
                      if 0 <= i <= a.degree else 0)


def shift_lambda(a: LambdaPoly, delta: int) -> LambdaPoly:
    """Replace the parameter lambda by lambda - delta."""
    return LambdaPoly(a.ctx, a.degree,
                      lambda i, lam: a.coefficient(i, lam - delta))


def poly_from_jsonable(ctx: NegQContext, obj: dict) -> ConcretePoly:
    degree = int(obj["degree"])
    coeffs = tuple(int(c) for c in obj["coefficients"])
    return ConcretePoly(ctx, degree, coeffs)
