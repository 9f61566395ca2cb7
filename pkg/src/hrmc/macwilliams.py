"""Dual weight distributions, eigenvalue tables, and moment identities.

The rank-weight distribution of the trace-dual code is a linear image of
the primal distribution. Two independent routes compute it:

* the *eigen* route multiplies by the association-scheme eigenvalue table
  Q[x][k] (each entry a closed-form double sum), and
* the *functional* route substitutes the degree-one polynomials nu and mu
  into the enumerator under the twisted product and reads coefficients at
  parameter t.

They must agree, and a third route (enumerating the dual code directly)
is compared against both in the tests and the CLI. Keeping the routes
independent is the point: a bug in any one of them shows up as a mismatch
rather than cancelling silently.

Closed-form rank counts for extremal codes and the two families of moment
identities round out the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EvenMinimumDistance,
    IndexOutOfRange,
    NonIntegralCount,
    NonIntegralDual,
)
from .negq import (
    NegQContext,
    _gamma_frac,
    _gauss_frac,
    gauss,
    gamma_fn,
    triangle,
    xi,
)
from .polynomials import concretize, mu_poly, negq_transform, nu_poly


def krawtchouk_Q(ctx: NegQContext, k: int, x: int, t: int) -> int:
    """Eigenvalue Q_k(x) of the rank-t association scheme."""
    if not (0 <= x <= t and 0 <= k <= t):
        raise IndexOutOfRange(f"need 0 <= x,k <= t, got x={x} k={k} t={t}")
    b = ctx.b
    acc = 0
    for j in range(k + 1):
        acc += (b ** (triangle(k - j) + t * j)
                * gauss(ctx, t - j, t - k) * gauss(ctx, t - x, j))
    return (-1) ** k * acc


def krawtchouk_C(ctx: NegQContext, k: int, x: int, t: int) -> int:
    """Same eigenvalue through the alternating product formula.

    Written independently of krawtchouk_Q so the two can check each other.
    """
    if not (0 <= x <= t and 0 <= k <= t):
        raise IndexOutOfRange(f"need 0 <= x,k <= t, got x={x} k={k} t={t}")
    b = ctx.b
    acc = 0
    for ell in range(k + 1):
        acc += ((-1) ** ell * b ** (ell * (t - x) + triangle(ell))
                * gauss(ctx, x, ell) * gauss(ctx, t - x, k - ell)
                * gamma_fn(ctx, t - ell, k - ell))
    return acc


@dataclass(frozen=True)
class EigenTable:
    """values[x][k] = Q_k(x) for the rank-t scheme; row 0 is the full-space
    distribution and column 0 is all ones."""

    q: int
    t: int
    values: tuple[tuple[int, ...], ...]

    def to_jsonable(self) -> dict:
        return {"q": self.q, "t": self.t,
                "rows": [[str(v) for v in row] for row in self.values]}


def build_eigen_table(ctx: NegQContext, t: int) -> EigenTable:
    values = tuple(tuple(krawtchouk_Q(ctx, k, x, t) for k in range(t + 1))
                   for x in range(t + 1))
    return EigenTable(ctx.q, t, values)


def macwilliams_eigen(ctx: NegQContext, counts, code_size: int,
                      t: int) -> tuple[int, ...]:
    """Dual distribution via the eigenvalue table."""
    if len(counts) != t + 1:
        raise ValueError(f"need {t + 1} counts")
    out = []
    for k in range(t + 1):
        v = Fraction(sum(counts[x] * krawtchouk_Q(ctx, k, x, t)
                         for x in range(t + 1)), code_size)
        if v.denominator != 1 or v < 0:
            raise NonIntegralDual(f"dual count {k} came out {v}")
        out.append(int(v))
    return tuple(out)


def macwilliams_transform(ctx: NegQContext, counts, code_size: int,
                          t: int) -> tuple[int, ...]:
    """Dual distribution via the twisted polynomial substitution.

    Builds the substituted enumerator from iterated products of the
    degree-one seeds, deliberately avoiding the closed-form power
    coefficients used elsewhere.
    """
    if len(counts) != t + 1:
        raise ValueError(f"need {t + 1} counts")
    image = negq_transform(list(counts), nu_poly(ctx), mu_poly(ctx))
    frozen = concretize(image, t)
    out = []
    for k in range(t + 1):
        v = Fraction(frozen.coefficient(k)) / code_size
        if v.denominator != 1 or v < 0:
            raise NonIntegralDual(f"dual count {k} came out {v}")
        out.append(int(v))
    return tuple(out)


# ------------------------------------------------------------- moments

def _signed_power(ctx: NegQContext, t: int, e: int) -> int:
    """(-b^t)^e; note -b^t = -(-q)^t is negative for even t."""
    return (-(ctx.b ** t)) ** e


def moment_q(ctx: NegQContext, counts, dual_counts,
             code_sizes: tuple[int, int], t: int, phi: int) -> dict:
    """Both sides of the phi-th binomial moment identity.

    Returns {"lhs", "rhs"} exactly; the caller asserts equality so a test
    failure shows both values.
    """
    _, dual_size = code_sizes
    lhs = sum(gauss(ctx, t - i, phi) * counts[i] for i in range(t - phi + 1))
    rhs = Fraction(_signed_power(ctx, t, t - phi), dual_size) * sum(
        gauss(ctx, t - i, t - phi) * dual_counts[i] for i in range(phi + 1))
    return {"lhs": lhs, "rhs": rhs}


def moment_q_low(ctx: NegQContext, dual_size: int, t: int, phi: int) -> Fraction:
    """Simplified right side valid whenever phi is below the dual minimum
    distance (only the dual zero word contributes)."""
    return Fraction(_signed_power(ctx, t, t - phi), dual_size) * gauss(ctx, t, phi)


def moment_qinv(ctx: NegQContext, counts, dual_counts,
                code_sizes: tuple[int, int], t: int, phi: int) -> dict:
    """Both sides of the phi-th moment identity in the reciprocal base."""
    _, dual_size = code_sizes
    b = ctx.b
    lhs = sum(b ** (phi * (t - i)) * gauss(ctx, i, phi) * counts[i]
              for i in range(phi, t + 1))
    rhs = Fraction(_signed_power(ctx, t, t - phi), dual_size) * sum(
        (-1) ** i * b ** (triangle(i) + i * (phi - i))
        * gauss(ctx, t - i, t - phi) * gamma_fn(ctx, t - i, phi - i)
        * dual_counts[i] for i in range(phi + 1))
    return {"lhs": lhs, "rhs": rhs}


def moment_qinv_high(ctx: NegQContext, counts, t: int, phi: int) -> int:
    """Alternating combination that vanishes when phi exceeds the dual
    diameter; returned so callers can assert it is zero."""
    b = ctx.b
    return sum((-1) ** i * b ** (triangle(i) + i * (phi - i))
               * gauss(ctx, t - i, t - phi) * gamma_fn(ctx, t - i, phi - i)
               * counts[i] for i in range(phi + 1))


# ------------------------------------------------- summation lemmas

def delta_fn(ctx: NegQContext, lam: int, phi: int, j: int):
    """Alternating gamma sum sum_i gauss(j,i) (-1)^i b^tri(i) gamma(lam-i, phi).

    The first argument of gamma may go negative inside the sum, so the
    computation runs over exact rationals; the value itself may be a
    Fraction for some arguments.
    """
    q = ctx.q
    acc = Fraction(0)
    for i in range(j + 1):
        acc += (_gauss_frac(q, j, i) * (-1) ** i * ctx.b ** triangle(i)
                * _gamma_frac(q, lam - i, phi))
    return int(acc) if acc.denominator == 1 else acc


def epsilon_fn(ctx: NegQContext, big_lam: int, phi: int, i: int):
    """Double-product sum whose closed form is an i-shifted Gaussian.

    Matches the closed form (-1)^i b^tri(i) gauss(big_lam - i, big_lam - phi)
    whenever i <= big_lam; beyond that the two sides genuinely differ, so
    callers should stay in that range.
    """
    q = ctx.q
    b = ctx.b
    acc = Fraction(0)
    for ell in range(i + 1):
        prod = Fraction(1)
        for j in range(i - ell):
            prod *= Fraction(b) ** (phi - ell) - b ** j
        acc += (_gauss_frac(q, i, ell) * _gauss_frac(q, big_lam - i, phi - ell)
                * Fraction(b) ** (ell * (big_lam - phi))
                * (-1) ** ell * b ** triangle(ell) * prod)
    return int(acc) if acc.denominator == 1 else acc


# ------------------------------------------------- extremal distributions

def mhrd_distribution(ctx: NegQContext, t: int, d: int,
                      dual_size: int) -> tuple[int, ...]:
    """Rank distribution of a maximal code with odd minimum distance d.

    The closed form pins every count once q, t, d are fixed; dual_size must
    equal q^(t(d-1)) (the size forced on the dual of a maximal code) and is
    taken explicitly so the caller states what it believes.
    """
    if not 1 <= d <= t:
        raise ValueError(f"need 1 <= d <= t, got d={d} t={t}")
    if d % 2 == 0:
        raise EvenMinimumDistance(
            f"closed form requires odd minimum distance, got d={d}")
    expected_dual = ctx.q ** (t * (d - 1))
    if dual_size != expected_dual:
        raise ValueError(f"dual size must be {expected_dual}, got {dual_size}")
    b = ctx.b
    counts = [0] * (t + 1)
    counts[0] = 1
    for r in range(t - d + 1):
        acc = Fraction(0)
        for i in range(r + 1):
            acc += ((-1) ** (r - i) * b ** triangle(r - i)
                    * gauss(ctx, d + r, d + i) * gauss(ctx, t, d + r)
                    * (Fraction(_signed_power(ctx, t, d + i), dual_size) - 1))
        if acc.denominator != 1 or acc < 0:
            raise NonIntegralCount(f"count at rank {d + r} came out {acc}")
        counts[d + r] = int(acc)
    total = sum(counts)
    expected_total = ctx.q ** (t * (t - d + 1))
    if total != expected_total:
        raise NonIntegralCount(
            f"counts sum to {total}, expected {expected_total}")
    return tuple(counts)


def full_space_distribution(ctx: NegQContext, t: int) -> tuple[int, ...]:
    """Rank census of the whole Hermitian space, from the closed form."""
    return tuple(xi(ctx, t, h) for h in range(t + 1))
