"""Hom modules of finitely presented graded modules, duals, and rank oracles.

Hom(M, N) is the kernel of composition with M's relations inside
Hom(F0_M, N) = N^{a0}.  Concretely: a homomorphism is a tuple of vectors
(v_1, ..., v_a0) in the generator module of N, one per generator of M,
subject to every relation of M landing in the relation submodule of N.  The
ambient free module is indexed by pairs (M-generator, N-generator), flattened
M-major, with basis degree deg_N(i) - deg_M(k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import (
    GroebnerEngine,
    groebner,
    kernel_vectors,
    minimal_generators,
    top_key,
)
from .modules import FreeModule, ModuleMap, ModulePresentation, Vector
from .rings import PolyRing


@dataclass
class HomModule(ModulePresentation):
    """Presentation of Hom(M, N) with the ambient bookkeeping kept around.

    `hom_generators` are vectors in the ambient N^{a0}; `presentation`
    relations are among those generators.
    """

    source: ModulePresentation = None
    target: ModulePresentation = None
    ambient: FreeModule = None
    hom_generators: list[Vector] = None

    def element_columns(self, idx: int) -> list[Vector]:
        """Generator idx as a tuple of columns in the generator module of the
        target (one column per source generator)."""
        b0 = self.target.generators.rank
        a0 = self.source.generators.rank
        v = self.hom_generators[idx]
        cols = []
        for k in range(a0):
            cols.append(v.restricted(k * b0, (k + 1) * b0, -k * b0))
        return cols


def _ambient(M: ModulePresentation, N: ModulePresentation) -> FreeModule:
    degs = []
    for dk in M.gen_degrees:
        for di in N.gen_degrees:
            degs.append(di - dk)
    return FreeModule(M.ring, tuple(degs))


def _embedded_relation_gb(N: ModulePresentation, blocks: int,
                          gb: list[Vector] | None = None) -> list[Vector]:
    """Groebner basis of the relation submodule of N^blocks (block-diagonal)."""
    if gb is None:
        gb = groebner(N.ring, N.relation_vectors, degrees=N.gen_degrees)
    b0 = N.generators.rank
    out = []
    for blk in range(blocks):
        for v in gb:
            out.append(v.shifted_positions(blk * b0))
    return out


def hom_module(M: ModulePresentation, N: ModulePresentation) -> HomModule:
    """Presentation of Hom(M, N) over the common polynomial ring.

    When both arguments are modules over a quotient ring (their relations
    contain the quotient ideal times each generator), this is the Hom over
    that quotient.
    """
    if M.ring != N.ring:
        raise ValueError("modules must share a ring")
    ring = M.ring
    a0 = M.generators.rank
    b0 = N.generators.rank
    ambient = _ambient(M, N)
    rel_M = M.relation_vectors
    a1 = len(rel_M)
    n_gb = groebner(ring, N.relation_vectors, degrees=N.gen_degrees)

    if a1 == 0 or a0 == 0:
        gens = [ambient.basis_vector(i) for i in range(ambient.rank)]
    else:
        # target of the constraint map: one block of N's generator module per
        # relation of M
        tgt_degs = []
        rel_degs = [v.degree(M.gen_degrees) for v in rel_M]
        for e in rel_degs:
            for di in N.gen_degrees:
                tgt_degs.append(di - e)
        tgt = FreeModule(ring, tuple(tgt_degs))
        cols = []
        for k in range(a0):
            coefs = [rel_M[q].component(k) for q in range(a1)]
            for i in range(b0):
                terms: dict = {}
                for q, poly in enumerate(coefs):
                    for m, c in poly.terms.items():
                        terms[(q * b0 + i, m)] = c
                cols.append(Vector(ring, terms))
        constraint = ModuleMap(ambient, tgt, cols)
        quotient_gb = _embedded_relation_gb(N, a1, n_gb)
        gens = kernel_vectors(constraint, quotient_gb)

    # trim generators modulo the target relations: Hom lives in the quotient
    # of the preimage by the embedded relation submodule of N^{a0}
    amb_quotient = _embedded_relation_gb(N, a0, n_gb)
    gens = minimal_generators(ring, gens, ambient.degrees, amb_quotient)
    gen_degs = tuple(v.degree(ambient.degrees) for v in gens)
    hom_free = FreeModule(ring, gen_degs)
    # relations among the hom generators, modulo N-relations in each block
    if gens:
        into_ambient = ModuleMap(hom_free, ambient, list(gens))
        rels = kernel_vectors(into_ambient, amb_quotient)
        rels = minimal_generators(ring, rels, gen_degs)
    else:
        rels = []
    rel_degs2 = tuple(v.degree(gen_degs) for v in rels)
    relmap = ModuleMap(FreeModule(ring, rel_degs2), hom_free, rels)
    return HomModule(
        generators=hom_free,
        relations=relmap,
        source=M,
        target=N,
        ambient=ambient,
        hom_generators=list(gens),
    )


def dual_module(M: ModulePresentation, over: ModulePresentation | None = None) -> HomModule:
    """Hom(M, ring) by default, or Hom(M, over) for a quotient-ring dual."""
    if over is None:
        over = ModulePresentation.of_free(FreeModule(M.ring, (0,)))
    return hom_module(M, over)


def membership_engine(ring: PolyRing, vectors, degrees) -> GroebnerEngine:
    eng = GroebnerEngine(ring, top_key, degrees)
    for v in vectors:
        eng.add_generator(v)
    eng.complete()
    return eng


def cokernel_is_zero(columns: list[Vector], N: ModulePresentation) -> bool:
    """Does the map into N with the given images of generators surject?

    The cokernel N / (image + relations) vanishes iff every generator of N
    reduces to zero against image columns plus relations.
    """
    eng = membership_engine(
        N.ring, list(columns) + N.relation_vectors, N.gen_degrees
    )
    return all(
        eng.normal_form(N.generators.basis_vector(i)).is_zero()
        for i in range(N.generators.rank)
    )


def modulo_zero(v: Vector, submodule_engine: GroebnerEngine) -> bool:
    return submodule_engine.normal_form(v).is_zero()


def random_rank(fmap: ModuleMap, point) -> int:
    """Rank of the map specialized at a point, by exact Gaussian elimination."""
    ring = fmap.source.ring
    rows = fmap.target.rank
    cols = fmap.source.rank
    mat = [
        [fmap.entry(r, c).evaluate(point) for c in range(cols)] for r in range(rows)
    ]
    return matrix_rank(ring, mat)


def matrix_rank(ring: PolyRing, mat) -> int:
    rows = len(mat)
    if rows == 0:
        return 0
    cols = len(mat[0])
    mat = [row[:] for row in mat]
    rank = 0
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = ring.coeff_inv(mat[r][c])
        mat[r] = [ring.coeff_mul(x, inv) for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [
                    ring.coeff_add(x, ring.coeff_neg(ring.coeff_mul(f, y)))
                    for x, y in zip(mat[i], mat[r])
                ]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank
