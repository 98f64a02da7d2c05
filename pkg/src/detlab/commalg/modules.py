"""Graded free modules, module elements, maps, and presentations.

Grading convention: a free module carries the degree of each basis generator.
A module element is homogeneous of degree d when every term (pos, mono)
satisfies deg(mono) + degrees[pos] = d.  A map is homogeneous of degree zero
when each column is homogeneous of the degree of its source generator, so a
nonzero entry at (row, col) has polynomial degree
source_degree(col) - target_degree(row).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import Polynomial, PolyRing


@dataclass(frozen=True)
class FreeModule:
    ring: PolyRing
    degrees: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def basis_vector(self, pos: int) -> "Vector":
        return Vector(self.ring, {(pos, self.ring.zero_mono): self.ring.coeff(1)})

    def zero(self) -> "Vector":
        return Vector(self.ring, {})


class Vector:
    """Element of a free module: dict from (position, exponent tuple) to coeff."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def positions(self):
        return {pos for pos, _ in self.terms}

    def component(self, pos: int) -> Polynomial:
        return Polynomial(
            self.ring, {m: c for (p, m), c in self.terms.items() if p == pos}
        )

    def degree(self, degrees: tuple[int, ...]) -> int:
        """Degree of a homogeneous vector; raises if not homogeneous."""
        degs = {sum(m) + degrees[p] for (p, m) in self.terms}
        if len(degs) > 1:
            raise ValueError(f"vector is not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_homogeneous(self, degrees: tuple[int, ...]) -> bool:
        return len({sum(m) + degrees[p] for (p, m) in self.terms}) <= 1

    def __add__(self, other: "Vector") -> "Vector":
        ring = self.ring
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = ring.coeff_add(out.get(t, 0), c)
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return Vector(ring, out)

    def __neg__(self) -> "Vector":
        ring = self.ring
        return Vector(ring, {t: ring.coeff_neg(c) for t, c in self.terms.items()})

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def scaled(self, c) -> "Vector":
        ring = self.ring
        c = ring.coeff(c)
        if not c:
            return Vector(ring, {})
        return Vector(ring, {t: ring.coeff_mul(v, c) for t, v in self.terms.items()})

    def poly_scaled(self, p: Polynomial) -> "Vector":
        ring = self.ring
        out: dict = {}
        for (pos, m1), c1 in self.terms.items():
            for m2, c2 in p.terms.items():
                t = (pos, tuple(a + b for a, b in zip(m1, m2)))
                s = ring.coeff_add(out.get(t, 0), ring.coeff_mul(c1, c2))
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return Vector(ring, out)

    def shifted_positions(self, offset: int) -> "Vector":
        return Vector(self.ring, {(p + offset, m): c for (p, m), c in self.terms.items()})

    def restricted(self, lo: int, hi: int, offset: int = 0) -> "Vector":
        return Vector(
            self.ring,
            {(p + offset, m): c for (p, m), c in self.terms.items() if lo <= p < hi},
        )

    def sort_key(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.terms == other.terms

    def __repr__(self):
        return f"Vector({dict(sorted(self.terms.items()))})"


@dataclass
class ModuleMap:
    """Map of graded free modules, stored as columns (images of source gens)."""

    source: FreeModule
    target: FreeModule
    columns: list[Vector]

    def __post_init__(self):
        if len(self.columns) != self.source.rank:
            raise ValueError("column count must match source rank")

    @staticmethod
    def from_entries(
        source: FreeModule, target: FreeModule, entries: list[list[Polynomial]]
    ) -> "ModuleMap":
        """entries[row][col], rows indexed by target generators."""
        ring = source.ring
        cols = []
        for c in range(source.rank):
            terms: dict = {}
            for r in range(target.rank):
                for m, v in entries[r][c].terms.items():
                    terms[(r, m)] = v
            cols.append(Vector(ring, terms))
        return ModuleMap(source, target, cols)

    def entry(self, row: int, col: int) -> Polynomial:
        return self.columns[col].component(row)

    def entries(self) -> list[list[Polynomial]]:
        return [
            [self.entry(r, c) for c in range(self.source.rank)]
            for r in range(self.target.rank)
        ]

    def apply(self, v: Vector) -> Vector:
        out = Vector(self.source.ring, {})
        for (pos, m), c in v.terms.items():
            ring = self.source.ring
            out = out + self.columns[pos].poly_scaled(Polynomial(ring, {m: c}))
        return out

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """self o inner (inner applied first)."""
        cols = [self.apply(c) for c in inner.columns]
        return ModuleMap(inner.source, self.target, cols)

    def kronecker(self, other: "ModuleMap") -> "ModuleMap":
        """Tensor product of maps; indices are (self-major, other-minor)."""
        ring = self.source.ring
        s_degs = tuple(
            a + b for a in self.source.degrees for b in other.source.degrees
        )
        t_degs = tuple(
            a + b for a in self.target.degrees for b in other.target.degrees
        )
        src = FreeModule(ring, s_degs)
        tgt = FreeModule(ring, t_degs)
        t2 = other.target.rank
        cols = []
        for c1 in self.columns:
            for c2 in other.columns:
                terms: dict = {}
                for (p1, m1), v1 in c1.terms.items():
                    for (p2, m2), v2 in c2.terms.items():
                        t = (p1 * t2 + p2, tuple(a + b for a, b in zip(m1, m2)))
                        s = ring.coeff_add(terms.get(t, 0), ring.coeff_mul(v1, v2))
                        if s:
                            terms[t] = s
                        else:
                            terms.pop(t, None)
                cols.append(Vector(ring, terms))
        return ModuleMap(src, tgt, cols)

    def transpose(self) -> "ModuleMap":
        entries = self.entries()
        t = [[entries[r][c] for r in range(self.target.rank)] for c in range(self.source.rank)]
        # transposing swaps the grading roles; negate degrees to stay homogeneous
        src = FreeModule(self.source.ring, tuple(-d for d in self.target.degrees))
        tgt = FreeModule(self.source.ring, tuple(-d for d in self.source.degrees))
        return ModuleMap.from_entries(src, tgt, t)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.columns)

    def is_homogeneous(self) -> bool:
        return all(
            c.is_homogeneous(self.target.degrees)
            and (c.is_zero() or c.degree(self.target.degrees) == self.source.degrees[i])
            for i, c in enumerate(self.columns)
        )


@dataclass
class ModulePresentation:
    """Graded module given by generators and relations: coker of a map."""

    generators: FreeModule
    relations: ModuleMap

    def __post_init__(self):
        if self.relations.target.degrees != self.generators.degrees:
            raise ValueError("relations must land in the generator module")

    @property
    def ring(self) -> PolyRing:
        return self.generators.ring

    @property
    def gen_degrees(self) -> tuple[int, ...]:
        return self.generators.degrees

    @property
    def relation_vectors(self) -> list[Vector]:
        return self.relations.columns

    @staticmethod
    def of_free(module: FreeModule) -> "ModulePresentation":
        empty = ModuleMap(FreeModule(module.ring, ()), module, [])
        return ModulePresentation(module, empty)

    @staticmethod
    def from_relations(
        generators: FreeModule, vectors: list[Vector]
    ) -> "ModulePresentation":
        degs = tuple(v.degree(generators.degrees) for v in vectors)
        src = FreeModule(generators.ring, degs)
        return ModulePresentation(generators, ModuleMap(src, generators, list(vectors)))


@dataclass
class HilbertSeries:
    """numerator / (1-t)^denom_power with an integer Laurent numerator."""

    numerator: dict[int, int]
    denom_power: int

    def copy(self) -> "HilbertSeries":
        return HilbertSeries(dict(self.numerator), self.denom_power)

    def canonical(self) -> "HilbertSeries":
        num = {d: c for d, c in self.numerator.items() if c}
        denom = self.denom_power
        while denom > 0 and num and sum(num.values()) == 0:
            expos = sorted(num)
            q: dict[int, int] = {}
            acc = 0
            for d in range(expos[0], expos[-1] + 1):
                acc += num.get(d, 0)
                if acc:
                    q[d] = acc
            num = q
            denom -= 1
        return HilbertSeries(num, denom)

    def shifted(self, k: int) -> "HilbertSeries":
        return HilbertSeries({d + k: c for d, c in self.numerator.items()}, self.denom_power)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        if other.denom_power != self.denom_power:
            a, b = self.canonical(), other.canonical()
            top = max(a.denom_power, b.denom_power)
            a = a._with_denom(top)
            b = b._with_denom(top)
        else:
            a, b = self, other
        num = dict(a.numerator)
        for d, c in b.numerator.items():
            num[d] = num.get(d, 0) + c
            if not num[d]:
                del num[d]
        return HilbertSeries(num, a.denom_power)

    def scaled(self, k: int) -> "HilbertSeries":
        return HilbertSeries({d: k * c for d, c in self.numerator.items()} if k else {}, self.denom_power)

    def _with_denom(self, denom: int) -> "HilbertSeries":
        out = dict(self.numerator)
        for _ in range(denom - self.denom_power):
            nxt: dict[int, int] = {}
            for d, c in out.items():
                nxt[d] = nxt.get(d, 0) + c
                nxt[d + 1] = nxt.get(d + 1, 0) - c
            out = {d: c for d, c in nxt.items() if c}
        return HilbertSeries(out, denom)

    def coefficients(self, upto: int) -> list[int]:
        """Power-series coefficients in degrees 0..upto (negative-degree
        numerator terms still contribute)."""
        from math import comb

        n = self.denom_power
        out = [0] * (upto + 1)
        for d, c in self.numerator.items():
            for k in range(max(d, 0), upto + 1):
                if n == 0:
                    if k == d:
                        out[k] += c
                else:
                    out[k] += c * comb(k - d + n - 1, n - 1)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.numerator == b.numerator and a.denom_power == b.denom_power

    def __str__(self) -> str:
        num = " + ".join(
            f"{c}*t^{d}" for d, c in sorted(self.numerator.items())
        ) or "0"
        return f"({num}) / (1-t)^{self.denom_power}"


# ---------------------------------------------------------------------------
# JSON exchange format: polynomial = list of [coeff-string, exponent-array];
# maps = row-major nested lists plus source/target degree arrays.


def poly_to_json(p: Polynomial) -> list:
    return [[str(c), list(m)] for m, c in sorted(p.terms.items())]


def poly_from_json(ring: PolyRing, data: list) -> Polynomial:
    terms = {}
    for cs, expo in data:
        c = ring.coeff(Fraction(cs)) if not ring.char else ring.coeff(int(cs))
        if c:
            terms[tuple(expo)] = c
    return Polynomial(ring, terms)


def ring_to_json(ring: PolyRing) -> dict:
    return {"nvars": ring.nvars, "char": ring.char, "names": list(ring.names)}


def ring_from_json(data: dict) -> PolyRing:
    return PolyRing(data["nvars"], data["char"], tuple(data["names"]))


def map_to_json(fmap: ModuleMap) -> dict:
    return {
        "source_degrees": list(fmap.source.degrees),
        "target_degrees": list(fmap.target.degrees),
        "matrix": [[poly_to_json(e) for e in row] for row in fmap.entries()],
    }


def map_from_json(ring: PolyRing, data: dict) -> ModuleMap:
    src = FreeModule(ring, tuple(data["source_degrees"]))
    tgt = FreeModule(ring, tuple(data["target_degrees"]))
    entries = [
        [poly_from_json(ring, e) for e in row] for row in data["matrix"]
    ]
    return ModuleMap.from_entries(src, tgt, entries)


def presentation_to_json(pres: ModulePresentation) -> dict:
    return {
        "ring": ring_to_json(pres.ring),
        "generator_degrees": list(pres.gen_degrees),
        "relations": map_to_json(pres.relations),
    }


def presentation_from_json(data: dict) -> ModulePresentation:
    ring = ring_from_json(data["ring"])
    rel = map_from_json(ring, data["relations"])
    gens = FreeModule(ring, tuple(data["generator_degrees"]))
    return ModulePresentation(gens, rel)
