"""Skew two-tensors, classical r-matrices, induced dual brackets, weak
homomorphisms, and deformation transfer.

Frozen expectations (the e wedge f square on sl2, the dual bracket on
the line algebra, the transfer verdicts) are hand computations recorded
in the docstrings.
"""

from __future__ import annotations

import itertools
from fractions import Fraction as Q

import pytest

from homlie.linalg import Matrix, matrix
from homlie.ooperator import induced_hom_pre_lie, rho_t, subadjacent
from homlie.rmatrix import (
    WedgeTwoTensor,
    cybe_sum,
    graded_bracket_wedge,
    induced_dual_bracket,
    invariant_two_tensor_basis,
    invariant_wedge_basis,
    is_invariant,
    is_r_matrix,
    operator_to_tensor,
    rmatrix_deformation_transfer,
    tensor_to_operator,
    two_tensor_square,
    weak_homomorphism_check,
)
from homlie.structures import (
    HomLieAlgebra,
    catalog,
    coadjoint_rep,
    verify_hom_lie,
)

FIXTURES = catalog()


def wedge(dim, i, j, c=1):
    return WedgeTwoTensor.from_dict(dim, {(i, j): Q(c)})


def test_two_tensor_container():
    r = WedgeTwoTensor.from_dict(3, {(0, 1): 2, (1, 2): 0})
    assert r.coeffs == (((0, 1), Q(2)),)
    assert r.coeff_dict() == {(0, 1): Q(2)}
    assert not r.is_zero()
    assert WedgeTwoTensor.from_dict(3, {}).is_zero()
    assert r.add(r.scale(Q(-1))).is_zero()
    assert r.scale(Q(1, 2)).coeff_dict() == {(0, 1): Q(1)}
    with pytest.raises(ValueError):
        WedgeTwoTensor(dim=2, coeffs=(((1, 0), Q(1)),))
    with pytest.raises(ValueError):
        wedge(2, 0, 1).add(wedge(3, 0, 1))


def test_skew_matrix_roundtrip():
    r = WedgeTwoTensor.from_dict(2, {(0, 1): Q(1)})
    m = tensor_to_operator(r)
    assert m == matrix([[0, 1], [-1, 0]])
    assert operator_to_tensor(m) == r
    with pytest.raises(ValueError):
        operator_to_tensor(Matrix.identity(2))
    with pytest.raises(ValueError):
        operator_to_tensor(matrix([[0, 1, 0], [-1, 0, 0]]))


def test_invariant_wedge_dimensions():
    """With an identity twist every wedge vector is invariant; the
    twisted fixtures kill exactly the monomials whose eigenvalue product
    is not 1."""
    expected = {
        "abelian2": 1,
        "aff1": 1,
        "aff1_twisted": 0,
        "sl2": 3,
        "heisenberg3": 3,
        "heisenberg3_twisted": 1,
    }
    for name, dim in expected.items():
        g = FIXTURES[name]
        assert len(invariant_two_tensor_basis(g)) == dim, name
    survivors = invariant_wedge_basis(FIXTURES["heisenberg3_twisted"], 2)
    assert survivors == [{(0, 1): Q(1)}]
    assert is_invariant(FIXTURES["heisenberg3_twisted"], wedge(3, 0, 1))
    assert not is_invariant(FIXTURES["heisenberg3_twisted"], wedge(3, 0, 2))
    assert not is_invariant(FIXTURES["aff1_twisted"], wedge(2, 0, 1))


def test_r_matrix_aff1():
    g = FIXTURES["aff1"]
    report = is_r_matrix(g, wedge(2, 0, 1))
    assert report.verdict and report.routes_agree
    assert report.cybe_zero and report.operator_report.ok
    assert report.wedge_square == ()


def test_r_matrix_sl2_classification():
    """On sl2: h^e and h^f square to zero monomial by monomial, while
    [e^f, e^f] = 2 h^e^f by the two cross terms [e,f] = h."""
    g = FIXTURES["sl2"]
    for (i, j) in ((0, 1), (0, 2)):
        report = is_r_matrix(g, wedge(3, i, j))
        assert report.verdict and report.routes_agree, (i, j)
    square = two_tensor_square(g, wedge(3, 1, 2))
    assert square == {(0, 1, 2): Q(2)}
    report = is_r_matrix(g, wedge(3, 1, 2))
    assert not report.verdict
    assert report.routes_agree
    assert not report.cybe_zero and not report.operator_report.ok
    assert report.wedge_square == (((0, 1, 2), Q(2)),)
    assert any(f.law == "wedge_square" for f in report.failures)


def test_r_matrix_requires_context():
    g = FIXTURES["aff1_twisted"]
    with pytest.raises(ValueError):
        is_r_matrix(g, wedge(2, 0, 1))  # not invariant
    with pytest.raises(ValueError):
        is_r_matrix(FIXTURES["aff1"], wedge(3, 0, 1))  # wrong dimension
    singular = HomLieAlgebra.build(dim=2, brackets={},
                                   alpha=Matrix.zero(2, 2))
    with pytest.raises(ValueError):
        is_r_matrix(singular, wedge(2, 0, 1))


def test_cybe_parts():
    g = FIXTURES["sl2"]
    good = cybe_sum(g, wedge(3, 0, 1))
    assert good.is_zero and good.total == ()
    bad = cybe_sum(g, wedge(3, 1, 2))
    assert not bad.is_zero
    for part in (bad.part_12_13, bad.part_12_23, bad.part_13_23):
        for (indices, q) in part:
            assert len(indices) == 3 and q != 0


def test_induced_dual_bracket_aff1():
    """r = e1^e2 on [e1,e2] = e2 gives [eps1, eps2]_r = -eps1 on the
    dual, checked by hand through the coadjoint action."""
    g = FIXTURES["aff1"]
    dual = induced_dual_bracket(g, wedge(2, 0, 1))
    assert dual.brackets_dict() == {(0, 1): (Q(-1), Q(0))}
    assert dual.alpha == Matrix.identity(2)
    assert dual.basis == ("e1*", "e2*")
    assert verify_hom_lie(dual).ok


def test_dual_bracket_matches_subadjacent_route():
    """The direct dual bracket equals the sub-adjacent algebra of the
    hom-pre-Lie product induced by r# on the coadjoint module."""
    cases = [("aff1", (0, 1)), ("sl2", (0, 1)), ("sl2", (0, 2)),
             ("heisenberg3", (0, 1)), ("heisenberg3", (0, 2)),
             ("heisenberg3_twisted", (0, 1)), ("abelian2", (0, 1))]
    for name, (i, j) in cases:
        g = FIXTURES[name]
        r = wedge(g.dim, i, j)
        if not is_r_matrix(g, r).verdict:
            continue
        direct = induced_dual_bracket(g, r)
        coadj = coadjoint_rep(g)
        sharp = tensor_to_operator(r)
        via = subadjacent(induced_hom_pre_lie(g, coadj, sharp))
        assert direct.brackets_dict() == via.brackets_dict(), (name, i, j)
        assert direct.alpha == via.alpha, (name, i, j)


def test_dual_bracket_requires_r_matrix():
    g = FIXTURES["sl2"]
    with pytest.raises(ValueError):
        induced_dual_bracket(g, wedge(3, 1, 2))


def test_rho_r_is_coadjoint_of_dual():
    """The representation rho_{r#} of the dual algebra back on g is the
    coadjoint representation of the dual algebra."""
    for name, (i, j) in [("aff1", (0, 1)), ("sl2", (0, 1)),
                         ("heisenberg3", (0, 2))]:
        g = FIXTURES[name]
        r = wedge(g.dim, i, j)
        dual = induced_dual_bracket(g, r)
        action = rho_t(g, coadjoint_rep(g), tensor_to_operator(r))
        dual_coadj = coadjoint_rep(dual)
        assert action.beta == dual_coadj.beta, name
        assert action.rho == dual_coadj.rho, name
        assert action.algebra.brackets_dict() == dual.brackets_dict()


def test_graded_bracket_wedge_symmetry_and_frozen_value():
    """Grade-(2,2) brackets are symmetric, and [h^e, h^f] = -4 h^e^f on
    sl2 by the two cross terms [h,f] = -2f and [e,h] = -2e."""
    g = FIXTURES["sl2"]
    u = {(0, 1): Q(1)}
    v = {(0, 2): Q(1)}
    uv = graded_bracket_wedge(g, u, 2, v, 2)
    vu = graded_bracket_wedge(g, v, 2, u, 2)
    assert uv == vu
    assert uv == {(0, 1, 2): Q(-4)}
    with pytest.raises(ValueError):
        graded_bracket_wedge(g, {(0, 1): Q(1)}, 3, v, 2)


def test_weak_homomorphism_instance():
    """On the abelian plane, (phi, psi) = (2 id, id) is a weak
    homomorphism from e1^e2 to (1/2) e1^e2, and the companion operator
    homomorphism runs from the second sharp to the first."""
    g = FIXTURES["abelian2"]
    r1 = wedge(2, 0, 1)
    r2 = wedge(2, 0, 1, Q(1, 2))
    phi = Matrix.identity(2).scale(Q(2))
    psi = Matrix.identity(2)
    report = weak_homomorphism_check(g, phi, psi, r1, r2)
    assert report.ok
    assert report.operator_hom.ok
    assert report.operator_hom_agrees
    swapped = weak_homomorphism_check(g, phi, psi, r2, r1)
    assert not swapped.tensor_condition
    assert not swapped.ok
    assert swapped.operator_hom_agrees


def test_weak_homomorphism_condition_breakdown():
    g = FIXTURES["aff1"]
    r = wedge(2, 0, 1)
    not_endo = matrix([[0, 1], [1, 0]])
    report = weak_homomorphism_check(g, not_endo, Matrix.identity(2), r, r)
    assert not report.phi_bracket_homomorphism
    assert not report.ok
    identity = weak_homomorphism_check(g, Matrix.identity(2),
                                       Matrix.identity(2), r, r)
    assert identity.ok and identity.operator_hom_agrees


def test_transfer_linear_mode():
    g = FIXTURES["aff1"]
    r = wedge(2, 0, 1)
    report = rmatrix_deformation_transfer(g, r, [r.scale(Q(3))])
    assert report.mode == "linear"
    assert report.ok and report.routes_agree
    assert report.wedge_per_order == ((0, True), (1, True), (2, True))
    assert report.operator_linear is not None
    assert report.operator_linear.valid


def test_transfer_linear_blocked_direction():
    """Deforming h^e by h^f on sl2 fails at order one on both routes:
    [r, tau] + [tau, r] = -8 h^e^f."""
    g = FIXTURES["sl2"]
    report = rmatrix_deformation_transfer(g, wedge(3, 0, 1),
                                          [wedge(3, 0, 2)])
    assert not report.ok
    assert report.routes_agree
    assert report.wedge_per_order[0] == (0, True)
    assert report.wedge_per_order[1] == (1, False)
    assert not report.operator_linear.valid


def test_transfer_truncated_mode():
    g = FIXTURES["aff1"]
    r = wedge(2, 0, 1)
    report = rmatrix_deformation_transfer(g, r, [r, r], mode="truncated")
    assert report.mode == "truncated"
    assert report.ok and report.routes_agree
    assert report.operator_formal is not None
    assert report.operator_formal.ok
    assert all(zero for _, zero in report.wedge_per_order)
    failing = rmatrix_deformation_transfer(
        FIXTURES["sl2"], wedge(3, 0, 1), [wedge(3, 0, 2)],
        mode="truncated")
    assert not failing.ok and failing.routes_agree


def test_transfer_errors():
    g = FIXTURES["sl2"]
    with pytest.raises(ValueError):
        rmatrix_deformation_transfer(g, wedge(3, 1, 2), [wedge(3, 0, 1)])
    twisted = FIXTURES["aff1_twisted"]
    with pytest.raises(ValueError):
        rmatrix_deformation_transfer(twisted, WedgeTwoTensor.from_dict(2, {}),
                                     [wedge(2, 0, 1)])
    aff1 = FIXTURES["aff1"]
    r = wedge(2, 0, 1)
    with pytest.raises(ValueError):
        rmatrix_deformation_transfer(aff1, r, [r, r], mode="linear")
    with pytest.raises(ValueError):
        rmatrix_deformation_transfer(aff1, r, [r], mode="bogus")
    with pytest.raises(ValueError):
        rmatrix_deformation_transfer(aff1, r, [wedge(3, 0, 1)])


def test_r_matrix_grid_route_agreement():
    """Scaled invariant tensors on every regular fixture: the three
    routes agree at each grid point."""
    scalars = (Q(-1), Q(0), Q(1, 2), Q(1))
    for name, g in FIXTURES.items():
        basis = invariant_two_tensor_basis(g)
        for r0 in basis:
            for c in scalars:
                report = is_r_matrix(g, r0.scale(c))
                assert report.routes_agree, (name, c)
