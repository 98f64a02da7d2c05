"""Characteristic-zero cohomology oracle for homogeneous bundles on Grass(l, m).

A bundle is reduced to a sum of pure terms L_x(Q) x L_y(R), where Q is the
rank-l tautological quotient and R the rank-(m-l) sub.  Cohomology of a pure
term comes from the dotted Weyl-group action on the concatenated weight: add
rho = (m-1, ..., 0); a repeated entry kills everything, otherwise the unique
nonzero degree is the inversion count.

Everything here is characteristic zero and every report says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .partitions import Partition, conjugate, enumerate_box, weyl_dim
from .schurcalc import SchurSum, cauchy_expand, tensor_weights

CHAR_ZERO_NOTE = "characteristic-zero cohomology oracle"


# ---------------------------------------------------------------------------
# Bundle expressions

# factor tags: one weight on the quotient side or the sub side per factor
def wedge_q(a: int):
    return ("q", ("wedge", a))


def wedge_q_dual(a: int):
    return ("q", ("wedge_dual", a))


def sym_q(t: int):
    return ("q", ("sym", t))


def det_q(k: int):
    return ("q", ("det", k))


def schur_q(weight: tuple[int, ...]):
    return ("q", ("schur", tuple(weight)))


def wedge_r(b: int):
    return ("r", ("wedge", b))


def det_r(k: int):
    return ("r", ("det", k))


def schur_r(weight: tuple[int, ...]):
    return ("r", ("schur", tuple(weight)))


@dataclass(frozen=True)
class BundleExpression:
    """Formal tensor product of Schur-type factors in Q and R on Grass(l, m)."""

    l: int
    m: int
    factors: tuple = ()

    def __post_init__(self):
        if not (1 <= self.l < self.m):
            raise ValueError("need 1 <= l < m")

    def _factor_weight(self, side: str, spec) -> tuple[int, ...]:
        rank = self.l if side == "q" else self.m - self.l
        kind, arg = spec
        if kind == "wedge":
            if not 0 <= arg <= rank:
                raise ValueError(f"wedge power {arg} out of range for rank {rank}")
            return (1,) * arg + (0,) * (rank - arg)
        if kind == "wedge_dual":
            if not 0 <= arg <= rank:
                raise ValueError(f"wedge power {arg} out of range for rank {rank}")
            return (0,) * (rank - arg) + (-1,) * arg
        if kind == "sym":
            if arg < 0:
                raise ValueError("negative symmetric power")
            return (arg,) + (0,) * (rank - 1)
        if kind == "det":
            return (arg,) * rank
        if kind == "schur":
            w = tuple(arg)
            if len(w) != rank:
                raise ValueError(f"weight {w} has wrong length for rank {rank}")
            if any(w[i] < w[i + 1] for i in range(rank - 1)):
                raise ValueError(f"weight {w} is not dominant")
            return w
        raise ValueError(f"unknown factor kind {kind}")

    def normalize(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Expand to pure terms (q_weight, r_weight, multiplicity)."""
        qsum = SchurSum.unit(self.l)
        rsum = SchurSum.unit(self.m - self.l)
        for side, spec in self.factors:
            w = self._factor_weight(side, spec)
            target = qsum if side == "q" else rsum
            rank = target.rank
            nxt = SchurSum(rank)
            for x, mult in target.terms.items():
                for z, mz in tensor_weights(x, w, rank).terms.items():
                    nxt.add(z, mult * mz)
            if side == "q":
                qsum = nxt
            else:
                rsum = nxt
        out = []
        for x, mx in qsum.items():
            for y, my in rsum.items():
                out.append((x, y, mx * my))
        return out


# ---------------------------------------------------------------------------
# Cohomology tables


@dataclass
class CohomologyTable:
    """Map degree -> {dominant GL(m) weight: multiplicity}, with dimensions."""

    m: int
    entries: dict[int, dict[tuple[int, ...], int]] = field(default_factory=dict)

    def add(self, degree: int, weight: tuple[int, ...], mult: int) -> None:
        if mult == 0:
            return
        row = self.entries.setdefault(degree, {})
        row[weight] = row.get(weight, 0) + mult
        if row[weight] == 0:
            del row[weight]
        if not row:
            del self.entries[degree]

    def merge(self, other: "CohomologyTable", scale: int = 1) -> None:
        for deg, row in other.entries.items():
            for w, mult in row.items():
                self.add(deg, w, scale * mult)

    def dim(self, degree: int) -> int:
        return sum(mult * weyl_dim(w) for w, mult in self.entries.get(degree, {}).items())

    def degrees(self) -> dict[int, int]:
        return {deg: self.dim(deg) for deg in sorted(self.entries)}

    def euler(self) -> int:
        return sum((-1) ** deg * self.dim(deg) for deg in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def vanishes_above(self, cutoff: int = 0) -> bool:
        return all(deg <= cutoff for deg in self.entries)


def bott_cohomology(l: int, m: int, x: Iterable[int], y: Iterable[int]) -> CohomologyTable:
    """Cohomology of the pure term L_x(Q) x L_y(R) on Grass(l, m)."""
    x = tuple(int(v) for v in x)
    y = tuple(int(v) for v in y)
    if len(x) != l or len(y) != m - l:
        raise ValueError(f"weights must have lengths {l} and {m - l}")
    for w in (x, y):
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"weight {w} is not dominant")
    lam = x + y
    rho = tuple(range(m - 1, -1, -1))
    v = tuple(a + b for a, b in zip(lam, rho))
    table = CohomologyTable(m)
    if len(set(v)) < m:
        return table
    inversions = sum(1 for i in range(m) for j in range(i + 1, m) if v[i] < v[j])
    dotted = tuple(a - b for a, b in zip(sorted(v, reverse=True), rho))
    table.add(inversions, dotted, 1)
    return table


def cohomology_of(expr: BundleExpression) -> CohomologyTable:
    """Cohomology of a bundle expression, term by pure term."""
    table = CohomologyTable(expr.m)
    for x, y, mult in expr.normalize():
        table.merge(bott_cohomology(expr.l, expr.m, x, y), scale=mult)
    return table


def serre_dual_term(l: int, m: int, x: tuple[int, ...], y: tuple[int, ...]):
    """Weights of the Serre-dual pure term: dual bundle twisted by the
    canonical bundle det(Q)^{-(m-l)} x det(R)^{l}."""
    xd = tuple(-v for v in reversed(x))
    yd = tuple(-v for v in reversed(y))
    return (tuple(v - (m - l) for v in xd), tuple(v + l for v in yd))


# ---------------------------------------------------------------------------
# Vanishing checkers


@dataclass
class CheckCase:
    inputs: dict
    degrees: dict[int, int]
    passed: bool

    def to_json(self) -> dict:
        return {
            "input": self.inputs,
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
            "pass": self.passed,
        }


@dataclass
class CheckReport:
    check: str
    parameters: dict
    cases: list[CheckCase]
    passed: bool
    assumptions: tuple[str, ...] = (CHAR_ZERO_NOTE,)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "assumptions": list(self.assumptions),
            "cases": [c.to_json() for c in self.cases],
            "pass": self.passed,
        }


def _report(check: str, parameters: dict, cases: list[CheckCase]) -> CheckReport:
    return CheckReport(check, parameters, cases, all(c.passed for c in cases))


def _hom_factors(alpha: Partition, beta: Partition):
    """Factors of Hom(wedge^{alpha'}Q, wedge^{beta'}Q)."""
    out = [wedge_q_dual(a) for a in conjugate(alpha).parts]
    out += [wedge_q(b) for b in conjugate(beta).parts]
    return out


def check_hom_vanishing(l: int, m: int, alpha, delta) -> CheckReport:
    """Higher cohomology of (wedge^{alpha'}Q)^dual x L_delta(Q) vanishes,
    for alpha in the l x (m-l) box and any shape delta with <= l rows."""
    alpha, delta = Partition.of(alpha), Partition.of(delta)
    if not alpha.fits_in_box(l, m - l):
        raise ValueError(f"{alpha.parts} does not fit in the {l} x {m - l} box")
    if len(delta) > l:
        raise ValueError(f"{delta.parts} has more than {l} rows")
    factors = [wedge_q_dual(a) for a in conjugate(alpha).parts]
    factors.append(schur_q(delta.padded(l)))
    table = cohomology_of(BundleExpression(l, m, tuple(factors)))
    case = CheckCase(
        {"alpha": list(alpha.parts), "delta": list(delta.parts)},
        table.degrees(),
        table.vanishes_above(0),
    )
    return _report("hom-vanishing", {"l": l, "m": m}, [case])


def check_tilting_grass(l: int, m: int) -> CheckReport:
    """No higher self-extensions between box wedge powers of Q: for every
    pair (alpha, beta) in the box, H^{>0}(Hom(wedge^{alpha'}Q, wedge^{beta'}Q)) = 0."""
    box = enumerate_box(l, m - l)
    cases = []
    for alpha in box:
        for beta in box:
            table = cohomology_of(BundleExpression(l, m, tuple(_hom_factors(alpha, beta))))
            cases.append(
                CheckCase(
                    {"alpha": list(alpha.parts), "beta": list(beta.parts)},
                    table.degrees(),
                    table.vanishes_above(0),
                )
            )
    return _report("tilting-grassmannian", {"l": l, "m": m}, cases)


def _sym_degree_terms(t: int, bundle_rank: int, aux_dim: int):
    """Degree-t piece of Sym(aux x Q) with aux a trivial aux_dim-dim factor:
    pairs (shape, multiplicity = dim of the aux-side Schur module)."""
    out = []
    for g, (dim_bundle, dim_aux) in cauchy_expand(t, bundle_rank, aux_dim):
        out.append((g, dim_aux))
    return out


def check_tilting_springer(l: int, m: int, n: int, t_max: int = 3) -> CheckReport:
    """Degreewise vanishing making the pulled-back bundle tilting on the
    total space: Sym_t of (trivial n-dim) x Q tensored into each Hom pair
    has no higher cohomology, for t <= t_max."""
    if not (1 <= l < min(m, n)):
        raise ValueError("need 1 <= l < min(m, n)")
    box = enumerate_box(l, m - l)
    cases = []
    for t in range(t_max + 1):
        sym_terms = _sym_degree_terms(t, l, n)
        for alpha in box:
            for beta in box:
                table = CohomologyTable(m)
                for g, mult in sym_terms:
                    factors = _hom_factors(alpha, beta) + [schur_q(g.padded(l))]
                    table.merge(
                        cohomology_of(BundleExpression(l, m, tuple(factors))), scale=mult
                    )
                cases.append(
                    CheckCase(
                        {"t": t, "alpha": list(alpha.parts), "beta": list(beta.parts)},
                        table.degrees(),
                        table.vanishes_above(0),
                    )
                )
    return _report(
        "tilting-springer", {"l": l, "m": m, "n": n, "t_max": t_max}, cases
    )


def check_dualizing_vanishing(l: int, m: int, n: int, t_max: int = 3) -> CheckReport:
    """Degreewise vanishing against the dualizing twist det(Q)^{n-m}, needed
    for the endomorphism module to be maximal Cohen-Macaulay; requires m <= n."""
    if m > n:
        raise ValueError("requires m <= n")
    if not 1 <= l < m:
        raise ValueError("need 1 <= l < m")
    box = enumerate_box(l, m - l)
    cases = []
    for t in range(t_max + 1):
        sym_terms = _sym_degree_terms(t, l, n)
        for alpha in box:
            for beta in box:
                table = CohomologyTable(m)
                for g, mult in sym_terms:
                    factors = _hom_factors(alpha, beta)
                    factors.append(det_q(n - m))
                    factors.append(schur_q(g.padded(l)))
                    table.merge(
                        cohomology_of(BundleExpression(l, m, tuple(factors))), scale=mult
                    )
                cases.append(
                    CheckCase(
                        {"t": t, "alpha": list(alpha.parts), "beta": list(beta.parts)},
                        table.degrees(),
                        table.vanishes_above(0),
                    )
                )
    return _report(
        "dualizing-vanishing", {"l": l, "m": m, "n": n, "t_max": t_max}, cases
    )


def check_fm_kernel(l: int, m: int, n: int, t_max: int = 3) -> CheckReport:
    """Degreewise vanishing behind the kernel pushforward in the derived
    embedding: H^{>0}((wedge^{alpha'}Q)^dual x Sym_t(Q x W)) = 0, with W a
    trivial l-dimensional factor (a fiber of the second quotient bundle)."""
    if m > n:
        raise ValueError("requires m <= n")
    if not 1 <= l < m:
        raise ValueError("need 1 <= l < m")
    box = enumerate_box(l, m - l)
    cases = []
    for t in range(t_max + 1):
        sym_terms = _sym_degree_terms(t, l, l)
        for alpha in box:
            table = CohomologyTable(m)
            for g, mult in sym_terms:
                factors = [wedge_q_dual(a) for a in conjugate(alpha).parts]
                factors.append(schur_q(g.padded(l)))
                table.merge(
                    cohomology_of(BundleExpression(l, m, tuple(factors))), scale=mult
                )
            cases.append(
                CheckCase(
                    {"t": t, "alpha": list(alpha.parts)},
                    table.degrees(),
                    table.vanishes_above(0),
                )
            )
    return _report("fm-kernel-vanishing", {"l": l, "m": m, "n": n, "t_max": t_max}, cases)
