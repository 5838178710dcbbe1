"""Ground data: Jacobi validation, the CE differential, closedness of phi."""

import pytest

from supdeform.exterior import FORM, GradedElement, ce_differential, d, is_closed
from supdeform.liealg import (
    LieAlgebraSpec,
    OneForm,
    abelian,
    heisenberg3,
    solvable2,
    validate_jacobi,
)

ALGEBRAS = [solvable2(), heisenberg3(), abelian(3)]


def test_jacobi_ok_on_reference_algebras():
    for alg in ALGEBRAS:
        assert validate_jacobi(alg) is None


def test_jacobi_violation_detected():
    fake = LieAlgebraSpec(3, {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 1): 1})
    violation = validate_jacobi(fake)
    assert violation is not None
    assert violation.triple == (1, 2, 3)
    # sum of cyclic double brackets is [[y3,y1],y2] = [y1,y2] = y3
    assert violation.defect == (0, 0, 1)


def test_ce_differential_two_dim():
    alg = solvable2()
    assert ce_differential(alg, 1) == -GradedElement.monomial(FORM, 2, (1, 2))
    assert ce_differential(alg, 2).is_zero()


def test_ce_differential_heisenberg():
    alg = heisenberg3()
    assert ce_differential(alg, 3) == -GradedElement.monomial(FORM, 3, (1, 2))
    assert ce_differential(alg, 1).is_zero()


def test_ce_differential_index_range():
    with pytest.raises(IndexError):
        ce_differential(solvable2(), 3)


def test_is_closed_examples():
    alg = solvable2()
    assert is_closed(alg, OneForm.dual_basis(2, 2))
    assert not is_closed(alg, OneForm.dual_basis(2, 1))
    assert is_closed(alg, OneForm.zero(2))


def test_d_squared_zero_on_every_basis_form():
    from itertools import combinations

    for alg in ALGEBRAS:
        for deg in range(alg.n + 1):
            for ids in combinations(range(1, alg.n + 1), deg):
                form = GradedElement.monomial(FORM, alg.n, ids)
                assert d(alg, d(alg, form)).is_zero()


def test_d_is_a_derivation_on_pairs():
    for alg in ALGEBRAS:
        n = alg.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                zi = GradedElement.monomial(FORM, n, (i,))
                zj = GradedElement.monomial(FORM, n, (j,))
                left = d(alg, zi.wedge(zj))
                right = d(alg, zi).wedge(zj) - zi.wedge(d(alg, zj))
                assert left == right


def test_structure_constant_antisymmetry_and_duplicates():
    alg = solvable2()
    assert alg.c(1, 2, 1) == 1
    assert alg.c(2, 1, 1) == -1
    with pytest.raises(ValueError):
        LieAlgebraSpec(2, {(1, 1, 2): 1})
    with pytest.raises(ValueError):
        LieAlgebraSpec(2, {(1, 2, 1): 1, (2, 1, 1): 1})  # inconsistent duplicate
