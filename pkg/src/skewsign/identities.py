"""Exhaustive checks of the sign-imbalance identities and the lemmas behind them.

Every comparison is exact integer (or Gaussian integer) equality.  Reports
keep the full term tables so that a failure can be diagnosed from the report
alone.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .dominoes import (
    GaussianInteger,
    NoTiling,
    enumerate_sdt,
    enumerate_tilings,
    flip_graph,
    flip_neighbors,
    nice_and_bad_counts,
    nv_minus_bv,
    shape_invariants,
    sign_domino,
    vertical_count,
)
from .shapes import (
    Partition,
    SkewShape,
    enumerate_inner_restrictions,
    enumerate_outer_extensions,
    partitions_of,
    skew_shapes,
    v_statistic,
)
from .tableaux import imbalance


class OddSize(ValueError):
    pass


class OddN(ValueError):
    pass


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class PropositionReport:
    shape: SkewShape
    imbalance: int
    domino_sign_sum: int
    nice_parity_sum: int
    spin_sum: GaussianInteger
    v_prime: int | None
    chain: dict[str, bool] = field(hash=False)

    @property
    def imbalance_squared(self) -> int:
        return self.imbalance**2

    @property
    def spin_sum_squared(self) -> GaussianInteger:
        return self.spin_sum * self.spin_sum

    @property
    def rhs_value(self) -> int | None:
        """(-1)^(v(outer)+v(inner)) times the squared spin sum; None if that square is not real."""
        sq = self.spin_sum_squared
        if not sq.is_real():
            return None
        return _sign(v_statistic(self.shape.outer) + v_statistic(self.shape.inner)) * sq.re

    @property
    def equal(self) -> bool:
        return self.rhs_value == self.imbalance_squared

    @property
    def ok(self) -> bool:
        return self.equal and all(self.chain.values())

    def to_dict(self) -> dict:
        return {
            "shape": str(self.shape),
            "imbalance": self.imbalance,
            "imbalance_squared": self.imbalance_squared,
            "domino_sign_sum": self.domino_sign_sum,
            "nice_parity_sum": self.nice_parity_sum,
            "spin_sum": {"re": self.spin_sum.re, "im": self.spin_sum.im},
            "v_outer": v_statistic(self.shape.outer),
            "v_inner": v_statistic(self.shape.inner),
            "v_prime": self.v_prime,
            "rhs_value": self.rhs_value,
            "equal": self.equal,
            "chain": dict(self.chain),
        }


def check_proposition(shape: SkewShape) -> PropositionReport:
    """Compare I^2 with (-1)^(v(outer)+v(inner)) * (sum_D i^vertical_count)^2.

    Each step of the chain connecting the two sides is checked separately so
    a failure points at the lemma responsible:

    * ``lemma_first``: I equals the sum of domino tableau signs
    * ``lemma_nv``: sign(D) == (-1)^nv(D) for every tableau
    * ``lemma_nvbv``: nv - bv is the same for every tableau
    * ``spin_rewrite``: (sum (-1)^nv)^2 == (-1)^v' * (sum i^vd)^2
    * ``lemma_mod2``: v' and v(outer) + v(inner) have the same parity
    """
    if shape.size % 2:
        raise OddSize(f"{shape} has an odd number of cells")
    tableaux = list(enumerate_sdt(shape))
    imb = imbalance(shape)

    sign_sum = 0
    nice_sum = 0
    spin = GaussianInteger()
    sign_matches = True
    differences = set()
    for d in tableaux:
        s = sign_domino(d)
        nv, bv = nice_and_bad_counts(d)
        sign_sum += s
        nice_sum += _sign(nv)
        spin = spin + GaussianInteger.i_power(vertical_count(d))
        sign_matches &= s == _sign(nv)
        differences.add(nv - bv)

    if differences:
        v_prime = min(differences)
    else:
        try:
            v_prime = shape_invariants(shape).v_prime
        except (NoTiling, ValueError):
            v_prime = None

    v_sum = v_statistic(shape.outer) + v_statistic(shape.inner)
    twisted = spin * spin * _sign(v_prime or 0)
    chain = {
        "lemma_first": imb == sign_sum,
        "lemma_nv": sign_matches and sign_sum == nice_sum,
        "lemma_nvbv": len(differences) <= 1,
        "spin_rewrite": twisted == GaussianInteger(nice_sum * nice_sum, 0),
        "lemma_mod2": v_prime is None or (v_prime - v_sum) % 2 == 0,
    }
    return PropositionReport(shape, imb, sign_sum, nice_sum, spin, v_prime, chain)


@dataclass(frozen=True)
class Theorem1Report:
    alpha: Partition
    n: int
    lhs_terms: tuple[tuple[Partition, int, int], ...]
    rhs_terms: tuple[tuple[Partition, int, int], ...]

    @property
    def lhs(self) -> int:
        return sum(_sign(v) * sq for _, v, sq in self.lhs_terms)

    @property
    def rhs(self) -> int:
        return sum(_sign(v) * sq for _, v, sq in self.rhs_terms)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        def table(terms):
            return [{"partition": str(p), "v": v, "imbalance_squared": sq} for p, v, sq in terms]

        return {
            "alpha": str(self.alpha),
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "lhs_terms": table(self.lhs_terms),
            "rhs_terms": table(self.rhs_terms),
        }


def verify_theorem1(alpha: Partition, n: int) -> Theorem1Report:
    """Both sides of the skew sign-imbalance identity for ``alpha`` and even ``n``."""
    if n < 0 or n % 2:
        raise OddN(f"n must be a non-negative even integer, got {n}")
    lhs = tuple(
        (lam, v_statistic(lam), imbalance(SkewShape(lam, alpha)) ** 2)
        for lam in enumerate_outer_extensions(alpha, n, len(alpha) + n)
    )
    rhs = tuple(
        (mu, v_statistic(mu), imbalance(SkewShape(alpha, mu)) ** 2)
        for mu in enumerate_inner_restrictions(alpha, n)
    )
    return Theorem1Report(alpha, n, lhs, rhs)


@dataclass(frozen=True)
class TilingReport:
    """Tiling-level lemma checks for one shape."""

    shape: SkewShape
    tilings: int
    nv_minus_bv: tuple[int, ...]
    flip_edges: int
    flip_edges_preserving: bool
    components: int
    v_outer: int
    v_inner: int
    vertical_parities: tuple[int, ...]

    @property
    def v_prime(self) -> int:
        return self.nv_minus_bv[0]

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "lemma_nvbv": len(self.nv_minus_bv) == 1 and self.flip_edges_preserving,
            "lemma_mod2": (self.v_prime - self.v_outer - self.v_inner) % 2 == 0,
            "flip_connected": self.components == 1,
            "vertical_parity": len(self.vertical_parities) == 1,
        }

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "shape": str(self.shape),
            "tilings": self.tilings,
            "nv_minus_bv_values": list(self.nv_minus_bv),
            "flip_edges": self.flip_edges,
            "components": self.components,
            "v_outer": self.v_outer,
            "v_inner": self.v_inner,
            "checks": self.checks,
        }


def check_tilings(shape: SkewShape) -> TilingReport:
    """nv - bv on every tiling and across every flip edge, plus flip connectivity."""
    tilings = list(enumerate_tilings(shape))
    if not tilings:
        raise NoTiling(f"{shape} has no domino tiling")
    values = {}
    for t in tilings:
        values[t.dominoes] = nv_minus_bv(t)
    preserving = True
    edges = 0
    for t in tilings:
        for nb in flip_neighbors(t):
            edges += 1
            preserving &= values[nb.dominoes] == values[t.dominoes]
    graph = flip_graph(shape)
    return TilingReport(
        shape=shape,
        tilings=len(tilings),
        nv_minus_bv=tuple(sorted(set(values.values()))),
        flip_edges=edges // 2,
        flip_edges_preserving=preserving,
        components=graph.components,
        v_outer=v_statistic(shape.outer),
        v_inner=v_statistic(shape.inner),
        vertical_parities=tuple(sorted({vertical_count(t) % 2 for t in tilings})),
    )


@dataclass
class SweepReport:
    checks: int = 0
    passed: int = 0
    by_kind: dict[str, list[int]] = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def failed(self) -> int:
        return self.checks - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, kind: str, ok: bool, detail: dict) -> None:
        self.checks += 1
        self.passed += ok
        counts = self.by_kind.setdefault(kind, [0, 0])
        counts[0] += 1
        counts[1] += ok
        if not ok and self.counterexample is None:
            self.counterexample = {"kind": kind, **detail}

    def to_dict(self) -> dict:
        return {
            "checks": self.checks,
            "passed": self.passed,
            "failed": self.failed,
            "by_kind": {k: {"checks": c, "passed": p} for k, (c, p) in sorted(self.by_kind.items())},
            "counterexample": self.counterexample,
        }


def _run_item(item) -> list[tuple[str, bool, dict]]:
    kind, payload = item
    if kind == "theorem1":
        alpha, n = payload
        report = verify_theorem1(alpha, n)
        return [("theorem1", report.equal, report.to_dict())]
    shape = payload
    out = []
    if shape.size % 2 == 0:
        prop = check_proposition(shape)
        out.append(("proposition", prop.ok, prop.to_dict()))
    try:
        tiling = check_tilings(shape)
    except NoTiling:
        return out
    out.append(("tilings", tiling.ok, tiling.to_dict()))
    return out


def sweep(
    max_alpha_size: int,
    n_values: Iterable[int],
    max_cells: int | None = None,
    jobs: int = 1,
) -> SweepReport:
    """Run the identity checks over exhaustive families.

    Theorem 1 is checked for every alpha with ``|alpha| <= max_alpha_size`` and
    every n in ``n_values``.  When ``max_cells`` is given, the proposition
    and the tiling lemmas are checked for every skew shape whose outer
    partition has at most ``max_cells`` cells.
    """
    n_values = list(n_values)
    for n in n_values:
        if n < 0 or n % 2:
            raise OddN(f"n must be a non-negative even integer, got {n}")
    items: list = [
        ("theorem1", (alpha, n))
        for size in range(max_alpha_size + 1)
        for alpha in partitions_of(size)
        for n in n_values
    ]
    if max_cells is not None:
        items.extend(("shape", s) for s in skew_shapes(max_cells))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_item, items, chunksize=16))
    else:
        results = [_run_item(item) for item in items]

    report = SweepReport()
    for batch in results:
        for kind, ok, detail in batch:
            report.record(kind, ok, detail)
    return report
