import math

import pytest

from detlab.partitions import Partition, all_partitions, conjugate, weyl_dim
from detlab.schurcalc import (
    SchurSum,
    cauchy_expand,
    exterior_expand,
    lr_coefficients,
    schur_character,
    tensor_weights,
)


def parts_map(coeffs):
    return {g.parts: c for g, c in coeffs.items()}


def test_lr_examples():
    assert parts_map(lr_coefficients((1,), (1,))) == {(2,): 1, (1, 1): 1}
    assert parts_map(lr_coefficients((2, 1), (1,))) == {
        (3, 1): 1,
        (2, 2): 1,
        (2, 1, 1): 1,
    }
    assert parts_map(lr_coefficients((), (3, 2))) == {(3, 2): 1}


def test_lr_classic_value():
    # s_21 * s_21: the (3,2,1) coefficient is 2
    out = parts_map(lr_coefficients((2, 1), (2, 1)))
    assert out[(3, 2, 1)] == 2
    assert out[(4, 2)] == 1
    assert sum(c for c in out.values()) == 8


def test_lr_degree_additivity():
    for a in all_partitions(4):
        for b in all_partitions(4):
            for g, c in lr_coefficients(a, b).items():
                assert c > 0
                assert g.size == a.size + b.size


def test_lr_symmetry():
    shapes = all_partitions(4)
    for a in shapes:
        for b in shapes:
            if a.size + b.size > 8:
                continue
            assert lr_coefficients(a, b) == lr_coefficients(b, a)


def test_character_consistency():
    """LR multiplicities against the independent tableau oracle."""
    shapes = all_partitions(6)
    for nvars in (2, 3):
        for a in shapes:
            for b in shapes:
                if a.size + b.size > 6 or a.size + b.size == 0:
                    continue
                lhs = schur_character(a, nvars) * schur_character(b, nvars)
                rhs = None
                for g, c in lr_coefficients(a, b).items():
                    t = schur_character(g, nvars).scaled(c)
                    rhs = t if rhs is None else rhs + t
                assert lhs == rhs, (a.parts, b.parts, nvars)


def test_exterior_expand_examples():
    assert exterior_expand((2, 1), 3).terms == {(2, 1, 0): 1, (1, 1, 1): 1}
    assert exterior_expand((2, 1), 2).terms == {(2, 1): 1}
    assert exterior_expand((1,), 1).terms == {(1,): 1}
    assert exterior_expand((2, 2), 2).terms == {(2, 2): 1}


def test_exterior_expand_rejects_tall_shapes():
    with pytest.raises(ValueError):
        exterior_expand((1, 1, 1), 2)


def test_exterior_expand_leading_multiplicity_one():
    for l in (2, 3):
        for p in all_partitions(6, max_rows=l):
            s = exterior_expand(p, l)
            assert s.terms[p.padded(l)] == 1


def test_exterior_expand_dimension():
    for l in (1, 2, 3):
        for p in all_partitions(6, max_rows=l):
            s = exterior_expand(p, l)
            expected = math.prod(math.comb(l, c) for c in conjugate(p).parts)
            assert s.dimension() == expected


def test_tensor_weights_examples():
    assert tensor_weights((0, 0), (2, 0), 2).terms == {(2, 0): 1}
    assert tensor_weights((-1, -1), (2, 0), 2).terms == {(1, -1): 1}
    assert tensor_weights((1, 0), (0, -1), 2).terms == {(1, -1): 1, (0, 0): 1}


def test_tensor_weights_reduces_to_lr():
    for l in (2, 3):
        shapes = [p for p in all_partitions(3, max_rows=l)]
        for a in shapes:
            for b in shapes:
                if a.size + b.size > 6:
                    continue
                got = tensor_weights(a.padded(l), b.padded(l), l).terms
                want = {}
                for g, c in lr_coefficients(a, b).items():
                    if len(g) <= l:
                        want[g.padded(l)] = c
                assert got == want


def test_tensor_weights_rejects_non_dominant():
    with pytest.raises(ValueError):
        tensor_weights((0, 1), (0, 0), 2)


def test_cauchy_examples():
    assert [g.parts for g, _ in cauchy_expand(0, 2, 2)] == [()]
    out = cauchy_expand(2, 2, 2)
    assert {g.parts: d for g, d in out} == {(2,): (3, 3), (1, 1): (1, 1)}
    assert sum(d1 * d2 for _, (d1, d2) in out) == math.comb(5, 2)
    assert [g.parts for g, _ in cauchy_expand(3, 1, 5)] == [(3,)]


def test_cauchy_dimension_identity():
    for t in range(6):
        for l1 in (1, 2, 3):
            for l2 in (1, 2, 3):
                total = sum(d1 * d2 for _, (d1, d2) in cauchy_expand(t, l1, l2))
                assert total == math.comb(l1 * l2 + t - 1, t)


def test_schur_character_examples():
    assert schur_character((1,), 2).coeffs == {(1, 0): 1, (0, 1): 1}
    assert schur_character((2, 1), 2).coeffs == {(2, 1): 1, (1, 2): 1}
    assert schur_character((1, 1, 1), 2).is_zero()


def test_character_symmetry():
    c = schur_character((3, 1), 3)
    for e, v in c.coeffs.items():
        assert c.coeffs[tuple(sorted(e))] == v


def test_schur_sum_drops_and_validates():
    s = SchurSum(2)
    s.add((1, 1), 2)
    s.add((1, 1), -2)
    assert s.terms == {}
    with pytest.raises(ValueError):
        s.add((0, 1), 1)
    with pytest.raises(ValueError):
        s.add((1, 0, 0), 1)
