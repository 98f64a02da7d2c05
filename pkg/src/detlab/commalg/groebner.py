"""Buchberger engine for submodules of graded free modules.

Monomial order: graded reverse lexicographic on ring monomials, extended
term-over-position to module terms.  Kernels are computed by elimination: a
block order makes every target-component term larger than every
source-component term, so basis elements supported in the source block cut
out the kernel.

Pair management follows Gebauer-Moller.  The coprime (product) criterion is
only applied when both elements are supported in a single position, where the
rank-one proof applies verbatim; the chain criteria are position-safe.
"""

from __future__ import annotations

import heapq
from operator import add
from typing import Callable, Iterable, Sequence

from .modules import FreeModule, ModuleMap, Vector
from .rings import PolyRing

Term = tuple[int, tuple[int, ...]]


def grevlex_key(mono: tuple[int, ...]):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def top_key(term: Term):
    pos, mono = term
    return (0, grevlex_key(mono), -pos)


def elim_key(split: int) -> Callable[[Term], tuple]:
    """Block order: positions below `split` dominate everything else."""

    def key(term: Term):
        pos, mono = term
        return (1 if pos < split else 0, grevlex_key(mono), -pos)

    return key


class _Elt:
    __slots__ = ("terms", "lead", "lead_pos", "lead_mono", "single_pos", "degree")

    def __init__(self, terms: dict, lead: Term, degree: int):
        self.terms = terms
        self.lead = lead
        self.lead_pos = lead[0]
        self.lead_mono = lead[1]
        self.single_pos = all(p == lead[0] for p, _ in terms)
        self.degree = degree


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _coprime(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class GroebnerEngine:
    """Incremental Buchberger over a free module.

    `degrees` (degree of each position) only steers pair selection; it is the
    grading of the ambient free module when known.
    """

    def __init__(
        self,
        ring: PolyRing,
        key: Callable[[Term], tuple] = top_key,
        degrees: Sequence[int] | None = None,
    ):
        self.ring = ring
        self.key = key
        self.degrees = tuple(degrees) if degrees is not None else None
        self.basis: list[_Elt] = []
        self._by_pos: dict[int, list[int]] = {}
        self._pairs: list = []
        self._dropped: set[tuple[int, int]] = set()
        self._pair_lcms: dict[tuple[int, int], tuple[int, ...]] = {}

    # -- basic helpers ---------------------------------------------------------
    def _pos_degree(self, pos: int) -> int:
        return self.degrees[pos] if self.degrees is not None else 0

    def _lead_of(self, terms: dict) -> Term:
        key = self.key
        return max(terms, key=key)

    def _make_monic(self, terms: dict, lead: Term) -> dict:
        ring = self.ring
        c = terms[lead]
        if c == 1:
            return terms
        inv = ring.coeff_inv(c)
        return {t: ring.coeff_mul(v, inv) for t, v in terms.items()}

    # -- reduction ---------------------------------------------------------------
    def reduce_terms(self, terms: dict) -> dict:
        """Full normal form of a term dict against the current basis."""
        ring = self.ring
        p = ring.char
        key = self.key
        by_pos = self._by_pos
        basis = self.basis
        work = dict(terms)
        out: dict = {}
        heap = [(_neg(key(t)), t) for t in work]
        heapq.heapify(heap)
        while heap:
            _, t = heapq.heappop(heap)
            c = work.get(t)
            if not c:
                continue
            pos, mono = t
            reducer = None
            for idx in by_pos.get(pos, ()):
                g = basis[idx]
                if _divides(g.lead_mono, mono):
                    reducer = g
                    break
            if reducer is None:
                out[t] = c
                del work[t]
                continue
            shift = tuple(map(lambda a, b: a - b, mono, reducer.lead_mono))
            if p:
                q = c % p
                for (gp, gm), gc in reducer.terms.items():
                    nt = (gp, tuple(map(add, gm, shift)))
                    cur = work.get(nt)
                    nv = ((cur or 0) - q * gc) % p
                    if nv:
                        if cur is None:
                            heapq.heappush(heap, (_neg(key(nt)), nt))
                        work[nt] = nv
                    elif cur is not None:
                        del work[nt]
            else:
                q = c
                for (gp, gm), gc in reducer.terms.items():
                    nt = (gp, tuple(map(add, gm, shift)))
                    cur = work.get(nt)
                    nv = (cur or 0) - q * gc
                    if nv:
                        if cur is None:
                            heapq.heappush(heap, (_neg(key(nt)), nt))
                        work[nt] = nv
                    elif cur is not None:
                        del work[nt]
        return out

    def normal_form(self, v: Vector) -> Vector:
        return Vector(self.ring, self.reduce_terms(v.terms))

    # -- pair bookkeeping ---------------------------------------------------------
    def _pair_entry(self, i: int, j: int, lcm: tuple[int, ...], pos: int):
        sdeg = sum(lcm) + self._pos_degree(pos)
        return (sdeg, self.key((pos, lcm)), i, j)

    def _update_pairs(self, t_idx: int) -> None:
        """Gebauer-Moller update after appending basis element t_idx."""
        t = self.basis[t_idx]
        pos = t.lead_pos
        peers = [i for i in self._by_pos.get(pos, ()) if i != t_idx]
        lcms = {i: _lcm(self.basis[i].lead_mono, t.lead_mono) for i in peers}

        # B criterion: drop old pairs strictly covered by the new element
        for i in peers:
            for j in peers:
                if i >= j:
                    continue
                pk = (i, j)
                if pk in self._dropped or pk not in self._pair_lcms:
                    continue
                old = self._pair_lcms[pk]
                if (
                    _divides(t.lead_mono, old)
                    and lcms[i] != old
                    and lcms[j] != old
                ):
                    self._dropped.add(pk)

        # M criterion: keep (i,t) only if no other lcm strictly divides it
        survivors = []
        for i in peers:
            li = lcms[i]
            if any(
                _divides(lcms[j], li) and lcms[j] != li for j in peers if j != i
            ):
                continue
            survivors.append(i)

        # F criterion: one pair per lcm value; a coprime member kills its class
        by_lcm: dict[tuple[int, ...], list[int]] = {}
        for i in survivors:
            by_lcm.setdefault(lcms[i], []).append(i)
        for lcm_val, members in sorted(by_lcm.items()):
            coprime_ok = any(
                _coprime(self.basis[i].lead_mono, t.lead_mono)
                and self.basis[i].single_pos
                and t.single_pos
                for i in members
            )
            if coprime_ok:
                continue
            i = min(members)
            pk = (i, t_idx)
            self._pair_lcms[pk] = lcm_val
            heapq.heappush(self._pairs, self._pair_entry(i, t_idx, lcm_val, pos))

    def _append(self, terms: dict) -> None:
        lead = self._lead_of(terms)
        terms = self._make_monic(terms, lead)
        deg = sum(lead[1]) + self._pos_degree(lead[0])
        elt = _Elt(terms, lead, deg)
        idx = len(self.basis)
        self.basis.append(elt)
        self._by_pos.setdefault(elt.lead_pos, []).append(idx)
        self._update_pairs(idx)

    # -- public driving -------------------------------------------------------------
    def seed(self, vectors: Iterable[Vector]) -> None:
        """Install vectors assumed to be a pairwise-complete Groebner basis.

        No pairs are generated among them; later elements pair against them
        normally.  Must be called before any add/complete.
        """
        if self.basis or self._pairs:
            raise RuntimeError("seed must come first")
        for v in vectors:
            if v.is_zero():
                continue
            lead = self._lead_of(v.terms)
            terms = self._make_monic(dict(v.terms), lead)
            deg = sum(lead[1]) + self._pos_degree(lead[0])
            elt = _Elt(terms, lead, deg)
            idx = len(self.basis)
            self.basis.append(elt)
            self._by_pos.setdefault(elt.lead_pos, []).append(idx)

    def add_generator(self, v: Vector) -> bool:
        """Reduce and append; returns True when the reduction is nonzero."""
        r = self.reduce_terms(v.terms)
        if not r:
            return False
        self._append(r)
        return True

    def complete(self) -> None:
        while self._pairs:
            entry = heapq.heappop(self._pairs)
            i, j = entry[2], entry[3]
            if (i, j) in self._dropped:
                continue
            fi, fj = self.basis[i], self.basis[j]
            lcm = self._pair_lcms[(i, j)]
            si = tuple(map(lambda a, b: a - b, lcm, fi.lead_mono))
            sj = tuple(map(lambda a, b: a - b, lcm, fj.lead_mono))
            ring = self.ring
            s: dict = {}
            for (p_, m), c in fi.terms.items():
                s[(p_, tuple(map(add, m, si)))] = c
            for (p_, m), c in fj.terms.items():
                t = (p_, tuple(map(add, m, sj)))
                nv = ring.coeff_add(s.get(t, 0), ring.coeff_neg(c))
                if nv:
                    s[t] = nv
                else:
                    s.pop(t, None)
            r = self.reduce_terms(s)
            if r:
                self._append(r)

    def reduced_basis(self) -> list[Vector]:
        """Reduced Groebner basis: minimal lead terms, fully tail-reduced,
        sorted by lead term."""
        self.complete()
        keep: list[int] = []
        for idx, g in enumerate(self.basis):
            redundant = False
            for jdx, h in enumerate(self.basis):
                if jdx == idx or h.lead_pos != g.lead_pos:
                    continue
                if _divides(h.lead_mono, g.lead_mono) and (
                    h.lead_mono != g.lead_mono or jdx < idx
                ):
                    redundant = True
                    break
            if not redundant:
                keep.append(idx)
        out = []
        for idx in keep:
            g = self.basis[idx]
            others = _ReducerView(self, [k for k in keep if k != idx])
            r = others.reduce_terms(g.terms)
            if r:
                lead = self._lead_of(r)
                out.append(Vector(self.ring, self._make_monic(r, lead)))
        out.sort(key=lambda v: self.key(self._lead_of(v.terms)))
        return out


class _ReducerView:
    """Reduction against a subset of an engine's basis (for interreduction)."""

    def __init__(self, engine: GroebnerEngine, indices: list[int]):
        self.ring = engine.ring
        self.key = engine.key
        self.basis = engine.basis
        self._by_pos: dict[int, list[int]] = {}
        for idx in indices:
            self._by_pos.setdefault(engine.basis[idx].lead_pos, []).append(idx)

    reduce_terms = GroebnerEngine.reduce_terms


def _neg(key):
    """Negate an order key for use in a min-heap."""
    flag, (deg, revneg), negpos = key
    return (-flag, (-deg, tuple(-x for x in revneg)), -negpos)


# ---------------------------------------------------------------------------
# Convenience fronts


def groebner(
    ring: PolyRing,
    vectors: Iterable[Vector],
    key: Callable[[Term], tuple] = top_key,
    degrees: Sequence[int] | None = None,
) -> list[Vector]:
    """Reduced Groebner basis of the submodule generated by `vectors`."""
    eng = GroebnerEngine(ring, key, degrees)
    for v in vectors:
        eng.add_generator(v)
    return eng.reduced_basis()


def groebner_ideal(ring: PolyRing, polys) -> list:
    """Reduced Groebner basis of an ideal, as rank-one vectors' polynomials."""
    from .rings import Polynomial

    vecs = [Vector(ring, {(0, m): c for m, c in p.terms.items()}) for p in polys]
    gb = groebner(ring, vecs)
    return [Polynomial(ring, {m: c for (_, m), c in v.terms.items()}) for v in gb]


def ideal_to_vectors(ring: PolyRing, polys, rank: int, positions=None) -> list[Vector]:
    """Embed ideal generators at every position of a rank-`rank` module."""
    out = []
    for pos in positions if positions is not None else range(rank):
        for p in polys:
            out.append(Vector(ring, {(pos, m): c for m, c in p.terms.items()}))
    return out


def normal_form(ring: PolyRing, v: Vector, basis: Iterable[Vector],
                key: Callable[[Term], tuple] = top_key) -> Vector:
    """Normal form against an arbitrary basis (assumed a Groebner basis)."""
    eng = GroebnerEngine(ring, key)
    eng.seed(basis)
    return eng.normal_form(v)


def kernel_vectors(
    fmap: ModuleMap, target_quotient_gb: Sequence[Vector] = ()
) -> list[Vector]:
    """Generators (a Groebner basis) of the kernel of source -> target/Q.

    `target_quotient_gb` must be a TOP-grevlex Groebner basis of the
    submodule Q of the target that is being quotiented out (empty for a
    plain kernel of a map of free modules).
    """
    ring = fmap.source.ring
    t = fmap.target.rank
    s = fmap.source.rank
    degrees = fmap.target.degrees + fmap.source.degrees
    eng = GroebnerEngine(ring, elim_key(t), degrees)
    eng.seed(target_quotient_gb)
    one = ring.coeff(1)
    for j in range(s):
        terms = dict(fmap.columns[j].terms)
        terms[(t + j, ring.zero_mono)] = one
        eng.add_generator(Vector(ring, terms))
    eng.complete()
    # elements led in the source block live entirely in it (elimination order)
    kernel_idx = [i for i, g in enumerate(eng.basis) if g.lead_pos >= t]
    keep: list[int] = []
    for i in kernel_idx:
        g = eng.basis[i]
        if not any(
            j != i
            and eng.basis[j].lead_pos == g.lead_pos
            and _divides(eng.basis[j].lead_mono, g.lead_mono)
            and (eng.basis[j].lead_mono != g.lead_mono or j < i)
            for j in kernel_idx
        ):
            keep.append(i)
    out = []
    for i in keep:
        view = _ReducerView(eng, [j for j in keep if j != i])
        r = view.reduce_terms(eng.basis[i].terms)
        if r:
            lead = max(r, key=eng.key)
            out.append(Vector(ring, eng._make_monic(r, lead)).restricted(t, t + s, -t))
    out.sort(key=lambda v: [(p, grevlex_key(m)) for p, m in sorted(v.terms)])
    return out


def syzygies(fmap: ModuleMap) -> ModuleMap:
    """Map whose image is the kernel of fmap (columns generate the kernel)."""
    cols = kernel_vectors(fmap)
    degs = tuple(c.degree(fmap.source.degrees) for c in cols)
    src = FreeModule(fmap.source.ring, degs)
    return ModuleMap(src, fmap.source, cols)


def minimal_generators(
    ring: PolyRing,
    vectors: Sequence[Vector],
    degrees: tuple[int, ...],
    quotient_gb: Sequence[Vector] = (),
) -> list[Vector]:
    """Extract a minimal generating set from homogeneous module generators,
    optionally modulo a submodule given by a Groebner basis.

    Processes by increasing degree; a candidate already inside the submodule
    generated by the kept ones (plus the quotient) is dropped (graded
    Nakayama makes the greedy sweep exact).
    """

    def canon(v: Vector):
        return (v.degree(degrees), [(p, grevlex_key(m), str(c)) for (p, m), c in sorted(v.terms.items())])

    eng = GroebnerEngine(ring, top_key, degrees)
    eng.seed(quotient_gb)
    kept: list[Vector] = []
    for v in sorted((v for v in vectors if not v.is_zero()), key=canon):
        if eng.add_generator(v):
            kept.append(v)
            eng.complete()
    return kept
