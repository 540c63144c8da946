"""Truncated polynomials, semistandard domino tableaux and the domino Cauchy identity.

Polynomials live in ``Z[x_1..x_a, y_1..y_b, s]`` where ``s*s = q``, so a
domino tableau with ``k`` vertical dominoes contributes ``s**k`` and half-integral
spins never appear as exponents.  Every polynomial carries caps on its total
x-degree and total y-degree; products drop whatever lands above a cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterator, NamedTuple

from .dominoes import Domino, GaussianInteger, enumerate_tilings
from .shapes import (
    Partition,
    SkewShape,
    contains,
    enumerate_inner_restrictions,
    enumerate_outer_extensions,
)


class CapMismatch(ValueError):
    """Raised when combining polynomials from different rings."""


class Monomial(NamedTuple):
    x: tuple[int, ...]
    y: tuple[int, ...]
    s: int

    def x_degree(self) -> int:
        return sum(self.x)

    def y_degree(self) -> int:
        return sum(self.y)

    def order_key(self):
        # graded lexicographic: total degree first, then exponents (x, y, s) descending
        exps = self.x + self.y + (self.s,)
        return (sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class Ring:
    """Variable counts and degree caps shared by every polynomial in a computation."""

    num_x: int
    num_y: int
    x_cap: int
    y_cap: int

    def admits(self, m: Monomial) -> bool:
        return m.x_degree() <= self.x_cap and m.y_degree() <= self.y_cap


@dataclass(frozen=True)
class TruncatedPolynomial:
    ring: Ring
    terms: dict[Monomial, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        clean = {m: c for m, c in self.terms.items() if c and self.ring.admits(m)}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, ring: Ring) -> TruncatedPolynomial:
        return cls(ring)

    @classmethod
    def one(cls, ring: Ring) -> TruncatedPolynomial:
        return cls.monomial(ring)

    @classmethod
    def monomial(cls, ring: Ring, x=None, y=None, s: int = 0, coeff: int = 1) -> TruncatedPolynomial:
        x = tuple(x) if x is not None else (0,) * ring.num_x
        y = tuple(y) if y is not None else (0,) * ring.num_y
        if len(x) != ring.num_x or len(y) != ring.num_y:
            raise ValueError("exponent vector length does not match the ring")
        return cls(ring, {Monomial(x, y, s): coeff})

    @classmethod
    def x_var(cls, ring: Ring, i: int) -> TruncatedPolynomial:
        """The variable x_i (1-indexed)."""
        return cls.monomial(ring, x=_unit(ring.num_x, i))

    @classmethod
    def y_var(cls, ring: Ring, j: int) -> TruncatedPolynomial:
        return cls.monomial(ring, y=_unit(ring.num_y, j))

    def __add__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        return poly_add(self, other)

    def __sub__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        return poly_add(self, -other)

    def __neg__(self) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        return poly_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, x, y, s: int = 0) -> int:
        return self.terms.get(Monomial(tuple(x), tuple(y), s), 0)

    def s_coefficients(self, x, y) -> dict[int, int]:
        """Coefficient of ``x**x * y**y`` as a polynomial in s, keyed by s-exponent."""
        x, y = tuple(x), tuple(y)
        return {m.s: c for m, c in self.terms.items() if m.x == x and m.y == y}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].order_key())

    def transpose(self) -> TruncatedPolynomial:
        """Swap the roles of the x and y variables."""
        r = self.ring
        ring = Ring(r.num_y, r.num_x, r.y_cap, r.x_cap)
        return TruncatedPolynomial(ring, {Monomial(m.y, m.x, m.s): c for m, c in self.terms.items()})

    def to_json(self) -> list[dict]:
        return [{"x": list(m.x), "y": list(m.y), "s": m.s, "coeff": c} for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_format_term(m, c) for m, c in self.sorted_terms())


def _unit(n: int, i: int) -> tuple[int, ...]:
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def _format_term(m: Monomial, c: int) -> str:
    factors = []
    if m.s:
        factors.append(f"q^{m.s // 2}" if m.s % 2 == 0 else f"q^({m.s}/2)")
    for name, exps in (("x", m.x), ("y", m.y)):
        for i, e in enumerate(exps, 1):
            if e:
                factors.append(f"{name}{i}" + (f"^{e}" if e > 1 else ""))
    if not factors:
        return str(c)
    body = "*".join(factors)
    return body if c == 1 else f"{c}*{body}"


def _same_ring(a: TruncatedPolynomial, b: TruncatedPolynomial) -> None:
    if a.ring != b.ring:
        raise CapMismatch(f"{a.ring} vs {b.ring}")


def poly_add(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    _same_ring(a, b)
    out = dict(a.terms)
    for m, c in b.terms.items():
        out[m] = out.get(m, 0) + c
    return TruncatedPolynomial(a.ring, out)


def poly_mul(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    _same_ring(a, b)
    ring = a.ring
    out: dict[Monomial, int] = {}
    for ma, ca in a.terms.items():
        xa, ya = ma.x_degree(), ma.y_degree()
        for mb, cb in b.terms.items():
            if xa + mb.x_degree() > ring.x_cap or ya + mb.y_degree() > ring.y_cap:
                continue
            m = Monomial(
                tuple(p + q for p, q in zip(ma.x, mb.x)),
                tuple(p + q for p, q in zip(ma.y, mb.y)),
                ma.s + mb.s,
            )
            out[m] = out.get(m, 0) + ca * cb
    return TruncatedPolynomial(ring, out)


def evaluate_s_at_i(coeffs: dict[int, int]) -> GaussianInteger:
    """Evaluate a polynomial in s (exponent -> coefficient) at s = i."""
    total = GaussianInteger()
    for e, c in coeffs.items():
        total = total + GaussianInteger.i_power(e) * c
    return total


def kernel_expansion(num_x: int, num_y: int, x_cap: int, y_cap: int) -> TruncatedPolynomial:
    """Truncated expansion of prod_{i,j} 1 / ((1 - x_i y_j)(1 - s^2 x_i y_j))."""
    ring = Ring(num_x, num_y, x_cap, y_cap)
    top = min(x_cap, y_cap)
    result = TruncatedPolynomial.one(ring)
    for i in range(1, num_x + 1):
        for j in range(1, num_y + 1):
            for s_step in (0, 2):
                series = {}
                for k in range(top + 1):
                    x = tuple(k if a == i else 0 for a in range(1, num_x + 1))
                    y = tuple(k if b == j else 0 for b in range(1, num_y + 1))
                    series[Monomial(x, y, s_step * k)] = 1
                result = result * TruncatedPolynomial(ring, series)
    return result


@dataclass(frozen=True)
class SemistandardDominoTableau:
    shape: SkewShape
    dominoes: tuple[tuple[Domino, int], ...]

    def weight(self, num_vars: int) -> tuple[int, ...]:
        """Number of dominoes carrying each entry 1..num_vars."""
        w = [0] * num_vars
        for _, e in self.dominoes:
            w[e - 1] += 1
        return tuple(w)

    @property
    def vertical_count(self) -> int:
        return sum(1 for d, _ in self.dominoes if d.vertical)


def _ordered_constraints(doms: list[Domino]) -> tuple[list[Domino], list[list[tuple[int, bool]]]]:
    # Orders the dominoes so that every left or upper neighbour comes first and
    # returns, per domino, the earlier dominoes bounding its entry from below
    # together with a strictness flag.
    owner = {}
    for k, d in enumerate(doms):
        for c in d.cells:
            owner[c] = k
    preds: dict[int, dict[int, bool]] = {k: {} for k in range(len(doms))}
    for (r, c), k in owner.items():
        left = owner.get((r, c - 1))
        if left is not None and left != k:
            preds[k][left] = preds[k].get(left, False)
        up = owner.get((r - 1, c))
        if up is not None and up != k:
            preds[k][up] = True
    sorter = TopologicalSorter({k: set(p) for k, p in preds.items()})
    order = list(sorter.static_order())
    position = {k: n for n, k in enumerate(order)}
    bounds = [[(position[p], strict) for p, strict in sorted(preds[k].items())] for k in order]
    return [doms[k] for k in order], bounds


def enumerate_ssdt(shape: SkewShape, max_entry: int) -> Iterator[SemistandardDominoTableau]:
    """Semistandard domino tableaux with entries in 1..max_entry.

    Across distinct dominoes, entries weakly increase along rows and strictly
    increase down columns.
    """
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    for tiling in enumerate_tilings(shape):
        try:
            doms, bounds = _ordered_constraints(tiling.sorted_dominoes())
        except CycleError:
            continue
        entries = [0] * len(doms)

        def rec(k):
            if k == len(doms):
                yield SemistandardDominoTableau(shape, tuple(sorted(zip(doms, entries))))
                return
            low = 1
            for p, strict in bounds[k]:
                low = max(low, entries[p] + 1 if strict else entries[p])
            for e in range(low, max_entry + 1):
                entries[k] = e
                yield from rec(k + 1)

        yield from rec(0)


def g_polynomial(shape: SkewShape, ring: Ring, side: str = "x") -> TruncatedPolynomial:
    """Spin-weight generating function of semistandard domino tableaux of ``shape``.

    Uses the x variables of ``ring`` (or the y variables when ``side == "y"``);
    each tableau contributes ``s**vertical_count * x**weight``.
    """
    if side not in ("x", "y"):
        raise ValueError("side must be 'x' or 'y'")
    num_vars = ring.num_x if side == "x" else ring.num_y
    cap = ring.x_cap if side == "x" else ring.y_cap
    zeros = (0,) * (ring.num_y if side == "x" else ring.num_x)
    terms: dict[Monomial, int] = {}
    if shape.size // 2 > cap or shape.size % 2:
        return TruncatedPolynomial.zero(ring)
    for t in enumerate_ssdt(shape, num_vars) if num_vars else _empty_only(shape):
        w = t.weight(num_vars)
        m = Monomial(w, zeros, t.vertical_count) if side == "x" else Monomial(zeros, w, t.vertical_count)
        terms[m] = terms.get(m, 0) + 1
    return TruncatedPolynomial(ring, terms)


def _empty_only(shape: SkewShape):
    # with no variables only the empty shape has a (unique, empty) tableau
    if shape.size == 0:
        yield SemistandardDominoTableau(shape, ())


@dataclass(frozen=True)
class CauchyReport:
    alpha: Partition
    beta: Partition
    ring: Ring
    lhs: TruncatedPolynomial
    rhs: TruncatedPolynomial
    lhs_shapes: tuple[Partition, ...]
    rhs_shapes: tuple[Partition, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def first_difference(self) -> dict | None:
        diff = self.lhs - self.rhs
        if not diff:
            return None
        m, _ = diff.sorted_terms()[0]
        return {
            "x": list(m.x),
            "y": list(m.y),
            "s": m.s,
            "lhs": self.lhs.terms.get(m, 0),
            "rhs": self.rhs.terms.get(m, 0),
        }

    def to_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "xvars": self.ring.num_x,
            "yvars": self.ring.num_y,
            "max_dominoes": self.ring.x_cap,
            "lhs_shapes": [str(p) for p in self.lhs_shapes],
            "rhs_shapes": [str(p) for p in self.rhs_shapes],
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "first_difference": self.first_difference,
        }


def _meet(a: Partition, b: Partition) -> Partition:
    return Partition(tuple(min(p, q) for p, q in zip(a.parts, b.parts)))


def verify_cauchy(alpha: Partition, beta: Partition, num_x: int, num_y: int, max_dominoes: int) -> CauchyReport:
    """Compare both sides of the skew domino Cauchy identity up to ``max_dominoes``
    dominoes in each of X and Y.

    Left side: sum over lambda of G[lambda/alpha](X) * G[lambda/beta](Y).
    Right side: the kernel times the sum over mu of G[beta/mu](X) * G[alpha/mu](Y).
    """
    if max_dominoes < 0:
        raise ValueError("max_dominoes must be non-negative")
    ring = Ring(num_x, num_y, max_dominoes, max_dominoes)

    lhs = TruncatedPolynomial.zero(ring)
    lhs_shapes = []
    for extra in range(0, 2 * max_dominoes + 1, 2):
        for lam in enumerate_outer_extensions(alpha, extra, len(alpha) + extra):
            if not contains(lam, beta) or (lam.size - beta.size) % 2:
                continue
            if lam.size - beta.size > 2 * max_dominoes:
                continue
            gx = g_polynomial(SkewShape(lam, alpha), ring, "x")
            gy = g_polynomial(SkewShape(lam, beta), ring, "y")
            if gx and gy:
                lhs = lhs + gx * gy
                lhs_shapes.append(lam)

    meet = _meet(alpha, beta)
    mu_sum = TruncatedPolynomial.zero(ring)
    rhs_shapes = []
    for k in range(meet.size + 1):
        for mu in enumerate_inner_restrictions(meet, k):
            # beta pairs with X here and alpha with Y; the two coincide when alpha == beta
            gx = g_polynomial(SkewShape(beta, mu), ring, "x")
            gy = g_polynomial(SkewShape(alpha, mu), ring, "y")
            if gx and gy:
                mu_sum = mu_sum + gx * gy
                rhs_shapes.append(mu)
    rhs = kernel_expansion(num_x, num_y, max_dominoes, max_dominoes) * mu_sum
    return CauchyReport(alpha, beta, ring, lhs, rhs, tuple(lhs_shapes), tuple(rhs_shapes))
