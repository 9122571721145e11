"""Linear and formal deformations of O-operators with obstruction theory.

A deformation of an O-operator T is a polynomial T_t = T + sum t^k T_k
whose coefficients are twist-compatible maps V -> g such that T_t
satisfies the O-operator identity order by order:

    sum over i+j=k of
        [T_i(u), T_j(v)] - T_i({T_j(u), v} - {T_j(v), u}) = 0.

For a linear deformation T + t K this reduces to three conditions: K is
twist-compatible, K is a 1-cocycle of the complex attached to T, and K
is itself an O-operator.  The order-(k+1) equation of a formal
deformation reads {{T, T_{k+1}}} = Theta where

    Theta = -1/2 sum over i+j=k+1, i,j >= 1 of {{T_i, T_j}}

is the obstruction; extending a deformation by one order is solving
that linear equation over the twist-compatible maps.

A Nijenhuis element x (fixed by alpha, with vanishing squares
[[x, y], [x, z]], rho([x, y]) rho(x) and [x, T rho(x)(v) + [T(v), x]])
generates the trivial linear deformation with generator

    K = delta_T(x),    K(v) = rho_T(beta^{-1}(v))(x),

certified by the degree-wise O-operator homomorphism
(id + t ad_x^dag, id + t rho(x)^dag) from T_t to T, where
ad_x^dag(y) = alpha^{-1}([x, y]) and rho(x)^dag(v) = beta^{-1}(rho(x)(v)).

Everything here requires a regular algebra and an invertible module
twist; non-regular input raises ValueError up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochain import (
    Cochain,
    coboundary,
    cohomology_dims,
    compatible_subspace_basis,
    zero_coboundary,
)
from .graded import derived_bracket
from .linalg import (
    Matrix,
    Q,
    Vector,
    basis_vector,
    is_zero_vector,
    vadd,
    vsub,
    vzero,
)
from .ooperator import is_o_operator, operator_complex
from .reporting import Failure, matrix_failures
from .structures import HomLieAlgebra, Representation, pair_list


def _require_regular(g: HomLieAlgebra, rep: Representation) -> None:
    if not g.is_regular:
        raise ValueError("deformation theory needs an invertible alpha")
    if not rep.beta.is_invertible():
        raise ValueError("deformation theory needs an invertible beta")


def _require_base(g: HomLieAlgebra, rep: Representation, t: Matrix) -> None:
    report = is_o_operator(g, rep, t)
    if not report.ok:
        raise ValueError(f"the base map is not an O-operator: {report.failures[0]}")


@dataclass(frozen=True)
class TruncatedDeformation:
    """A polynomial family T_t = base + sum_{k=1}^{order} t^k terms[k-1]."""

    base: Matrix
    terms: tuple

    def __post_init__(self):
        for m in self.terms:
            if m.shape != self.base.shape:
                raise ValueError("all coefficients must have the base's shape")

    @classmethod
    def of(cls, base: Matrix, terms=()) -> "TruncatedDeformation":
        return cls(base=base, terms=tuple(terms))

    @property
    def order(self) -> int:
        return len(self.terms)

    def coefficient(self, k: int) -> Matrix:
        if k == 0:
            return self.base
        if 1 <= k <= len(self.terms):
            return self.terms[k - 1]
        return Matrix.zero(*self.base.shape)

    def coefficients(self) -> list:
        return [self.base, *self.terms]


def _deformation_equation_defect(g, rep, coeffs, k, a, b) -> Vector:
    """The order-k coefficient of the deformed identity at (e_a, e_b)."""
    total = vzero(g.dim)
    ea = basis_vector(rep.dim, a)
    eb = basis_vector(rep.dim, b)
    for i in range(k + 1):
        j = k - i
        ti, tj = coeffs[i], coeffs[j]
        lhs = g.bracket(ti.column(a), tj.column(b))
        inner = vsub(rep.act(tj.column(a), eb), rep.act(tj.column(b), ea))
        total = vadd(total, vsub(lhs, ti.apply(inner)))
    return total


@dataclass(frozen=True)
class LinearDeformationReport:
    cocycle: bool
    generator_twist_compatible: bool
    generator_quadratic: bool
    failures: tuple

    @property
    def generator_is_o_operator(self) -> bool:
        return self.generator_twist_compatible and self.generator_quadratic

    @property
    def valid(self) -> bool:
        return self.cocycle and self.generator_is_o_operator

    @property
    def ok(self) -> bool:
        return self.valid


def linear_deformation_check(g: HomLieAlgebra, rep: Representation,
                             t: Matrix, k: Matrix) -> LinearDeformationReport:
    """Whether T + t K is a linear deformation of the O-operator T.

    The three conditions are exactly the order-1 and order-2 equations of
    the deformed identity plus twist compatibility of the generator.
    """
    _require_regular(g, rep)
    _require_base(g, rep, t)
    if k.shape != t.shape:
        raise ValueError("the generator must have the operator's shape")
    failures = []
    twist = matrix_failures("generator_twist", (), k @ rep.beta, g.alpha @ k)
    failures.extend(twist)
    cocycle = True
    for (a, b) in pair_list(rep.dim):
        ea = basis_vector(rep.dim, a)
        eb = basis_vector(rep.dim, b)
        lhs = vadd(g.bracket(t.column(a), k.column(b)),
                   g.bracket(k.column(a), t.column(b)))
        rhs = vadd(
            t.apply(vsub(rep.act(k.column(a), eb), rep.act(k.column(b), ea))),
            k.apply(vsub(rep.act(t.column(a), eb), rep.act(t.column(b), ea))),
        )
        if lhs != rhs:
            cocycle = False
            failures.append(Failure("deformation_cocycle", (a, b), lhs, rhs))
    generator = is_o_operator(g, rep, k)
    quadratic = generator.quadratic
    for f in generator.failures:
        if f.law == "o_operator_identity":
            failures.append(Failure("generator_o_operator", f.indices,
                                    f.lhs, f.rhs))
    return LinearDeformationReport(
        cocycle=cocycle,
        generator_twist_compatible=not twist,
        generator_quadratic=quadratic,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class NijenhuisElementReport:
    fixed_by_twist: bool
    bracket_square: bool
    action_square: bool
    generator_bracket: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return (self.fixed_by_twist and self.bracket_square
                and self.action_square and self.generator_bracket)


def nijenhuis_element_check(g: HomLieAlgebra, rep: Representation,
                            t: Matrix, x: Vector) -> NijenhuisElementReport:
    """The four conditions making x generate a trivial deformation of T:

        alpha(x) = x,
        [[x, y], [x, z]] = 0,
        rho([x, y]) rho(x) = 0,
        [x, T rho(x)(v) + [T(v), x]] = 0.
    """
    _require_regular(g, rep)
    _require_base(g, rep, t)
    x = tuple(x)
    failures = []
    fixed = g.alpha.apply(x) == x
    if not fixed:
        failures.append(Failure("fixed_point", (), g.alpha.apply(x), x))
    bracket_square = True
    for (j, kk) in pair_list(g.dim):
        value = g.bracket(g.bracket(x, basis_vector(g.dim, j)),
                          g.bracket(x, basis_vector(g.dim, kk)))
        if not is_zero_vector(value):
            bracket_square = False
            failures.append(Failure("bracket_square", (j, kk),
                                    value, vzero(g.dim)))
    action_square = True
    for j in range(g.dim):
        xy = g.bracket(x, basis_vector(g.dim, j))
        composed = rep.rho_of(xy) @ rep.rho_of(x)
        if not composed.is_zero():
            action_square = False
            for a in range(rep.dim):
                column = composed.column(a)
                if not is_zero_vector(column):
                    failures.append(Failure("action_square", (j, a),
                                            column, vzero(rep.dim)))
    generator_bracket = True
    for a in range(rep.dim):
        ea = basis_vector(rep.dim, a)
        inner = vadd(t.apply(rep.act(x, ea)),
                     g.bracket(t.column(a), x))
        value = g.bracket(x, inner)
        if not is_zero_vector(value):
            generator_bracket = False
            failures.append(Failure("generator_bracket", (a,),
                                    value, vzero(g.dim)))
    return NijenhuisElementReport(
        fixed_by_twist=fixed,
        bracket_square=bracket_square,
        action_square=action_square,
        generator_bracket=generator_bracket,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class ConditionResult:
    """One homomorphism condition at one polynomial degree."""

    condition: str
    degree: int
    holds: bool
    failures: tuple


def _coeff(terms: list, k: int, shape: tuple) -> Matrix:
    if 0 <= k < len(terms):
        return terms[k]
    return Matrix.zero(*shape)


def _morphism_conditions(g: HomLieAlgebra, rep: Representation,
                         from_terms: list, to_terms: list,
                         phi_g_terms: list, phi_v_terms: list,
                         up_to: int) -> tuple:
    """Degree-wise conditions for (phi_g_t, phi_v_t) to be an O-operator
    homomorphism from the first polynomial family to the second."""
    results = []
    op_shape = from_terms[0].shape
    g_shape = (g.dim, g.dim)
    v_shape = (rep.dim, rep.dim)
    for k in range(up_to + 1):
        lhs = Matrix.zero(*op_shape)
        rhs = Matrix.zero(*op_shape)
        for i in range(k + 1):
            lhs = lhs + _coeff(phi_g_terms, i, g_shape) @ _coeff(
                from_terms, k - i, op_shape)
            rhs = rhs + _coeff(to_terms, i, op_shape) @ _coeff(
                phi_v_terms, k - i, v_shape)
        failures = tuple(matrix_failures("operator_intertwine", (k,), lhs, rhs))
        results.append(ConditionResult("operator_intertwine", k,
                                       not failures, failures))
    for k in range(up_to + 1):
        failures = []
        phi_k = _coeff(phi_g_terms, k, g_shape)
        for (i, j) in pair_list(g.dim):
            lhs = phi_k.apply(g.bracket_basis(i, j))
            rhs = vzero(g.dim)
            for a in range(k + 1):
                rhs = vadd(rhs, g.bracket(
                    _coeff(phi_g_terms, a, g_shape).column(i),
                    _coeff(phi_g_terms, k - a, g_shape).column(j)))
            if lhs != rhs:
                failures.append(Failure("bracket_homomorphism", (k, i, j),
                                        lhs, rhs))
        results.append(ConditionResult("bracket_homomorphism", k,
                                       not failures, tuple(failures)))
    for k in range(up_to + 1):
        failures = []
        phi_v_k = _coeff(phi_v_terms, k, v_shape)
        for j in range(g.dim):
            lhs = Matrix.zero(*v_shape)
            for a in range(k + 1):
                lhs = lhs + rep.rho_of(
                    _coeff(phi_g_terms, a, g_shape).column(j)
                ) @ _coeff(phi_v_terms, k - a, v_shape)
            rhs = phi_v_k @ rep.rho[j]
            failures.extend(matrix_failures("action_equivariance", (k, j),
                                            lhs, rhs))
        results.append(ConditionResult("action_equivariance", k,
                                       not failures, tuple(failures)))
    for k in range(up_to + 1):
        failures = []
        phi_k = _coeff(phi_g_terms, k, g_shape)
        phi_v_k = _coeff(phi_v_terms, k, v_shape)
        failures.extend(matrix_failures("twist_commute_algebra", (k,),
                                        phi_k @ g.alpha, g.alpha @ phi_k))
        failures.extend(matrix_failures("twist_commute_module", (k,),
                                        phi_v_k @ rep.beta,
                                        rep.beta @ phi_v_k))
        results.append(ConditionResult("twist_commute", k,
                                       not failures, tuple(failures)))
    return tuple(results)


@dataclass(frozen=True)
class TrivialDeformationResult:
    generator: Matrix
    element_report: NijenhuisElementReport
    linear_report: LinearDeformationReport
    certificate: tuple

    @property
    def certificate_holds(self) -> bool:
        return all(c.holds for c in self.certificate)

    @property
    def ok(self) -> bool:
        return (self.element_report.ok and self.linear_report.valid
                and self.certificate_holds)


def trivial_deformation_from_nijenhuis(g: HomLieAlgebra, rep: Representation,
                                       t: Matrix, x: Vector
                                       ) -> TrivialDeformationResult:
    """The linear deformation generated by a Nijenhuis element, together
    with the degree-wise certificate that it is trivial.

    The certificate checks, for degrees 0..2 of the affine pair
    (id + t ad_x^dag, id + t rho(x)^dag), all four homomorphism
    conditions from T + t delta_T(x) to T; every product of two affine
    factors has degree at most 2, so order 2 is exhaustive.
    """
    _require_regular(g, rep)
    _require_base(g, rep, t)
    element = nijenhuis_element_check(g, rep, t, x)
    x = tuple(x)
    desc = operator_complex(g, rep, t)
    generator = zero_coboundary(desc, x).as_matrix()
    linear = linear_deformation_check(g, rep, t, generator)
    alpha_inv = g.alpha.inverse()
    beta_inv = rep.beta.inverse()
    ad_dag = alpha_inv @ Matrix.from_columns(
        [g.bracket(x, basis_vector(g.dim, j)) for j in range(g.dim)],
        nrows=g.dim)
    rho_dag = beta_inv @ rep.rho_of(x)
    certificate = _morphism_conditions(
        g, rep,
        from_terms=[t, generator],
        to_terms=[t],
        phi_g_terms=[Matrix.identity(g.dim), ad_dag],
        phi_v_terms=[Matrix.identity(rep.dim), rho_dag],
        up_to=2,
    )
    return TrivialDeformationResult(
        generator=generator,
        element_report=element,
        linear_report=linear,
        certificate=certificate,
    )


@dataclass(frozen=True)
class FormalDeformationReport:
    twist_compatible: bool
    per_order: tuple
    failures: tuple

    @property
    def first_failing_order(self):
        for k, holds in self.per_order:
            if not holds:
                return k
        return None

    @property
    def ok(self) -> bool:
        return self.twist_compatible and all(h for _, h in self.per_order)


def formal_deformation_check(g: HomLieAlgebra, rep: Representation,
                             d: TruncatedDeformation) -> FormalDeformationReport:
    """Check the deformed identity order by order up to d.order and the
    twist compatibility of every coefficient.

    The order-0 equation is the O-operator identity of the base, so a
    passing report certifies the base as well.
    """
    _require_regular(g, rep)
    coeffs = d.coefficients()
    failures = []
    twist_ok = True
    for k, ti in enumerate(coeffs):
        found = matrix_failures("twist_intertwine", (k,),
                                ti @ rep.beta, g.alpha @ ti)
        if found:
            twist_ok = False
            failures.extend(found)
    per_order = []
    for k in range(d.order + 1):
        holds = True
        for (a, b) in pair_list(rep.dim):
            defect = _deformation_equation_defect(g, rep, coeffs, k, a, b)
            if not is_zero_vector(defect):
                holds = False
                failures.append(Failure("deformation_equation", (k, a, b),
                                        defect, vzero(g.dim)))
        per_order.append((k, holds))
    return FormalDeformationReport(
        twist_compatible=twist_ok,
        per_order=tuple(per_order),
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class InfinitesimalReport:
    index: int | None
    twist_compatible: bool | None
    is_cocycle: bool | None
    note: str = ""

    @property
    def ok(self) -> bool:
        return bool(self.is_cocycle)


def infinitesimal_check(g: HomLieAlgebra, rep: Representation,
                        d: TruncatedDeformation) -> InfinitesimalReport:
    """Locate the first nonzero coefficient and test the cocycle condition
    it must satisfy in the complex attached to the base."""
    _require_regular(g, rep)
    _require_base(g, rep, d.base)
    index = None
    for k in range(1, d.order + 1):
        if not d.coefficient(k).is_zero():
            index = k
            break
    if index is None:
        return InfinitesimalReport(index=None, twist_compatible=None,
                                   is_cocycle=None,
                                   note="trivial deformation, no infinitesimal")
    tk = d.coefficient(index)
    compatible = (tk @ rep.beta) == (g.alpha @ tk)
    desc = operator_complex(g, rep, d.base)
    image = coboundary(desc, Cochain.from_linear_map(tk))
    return InfinitesimalReport(index=index, twist_compatible=compatible,
                               is_cocycle=image.is_zero())


def obstruction(g: HomLieAlgebra, rep: Representation,
                d: TruncatedDeformation) -> Cochain:
    """Theta = -1/2 sum over i+j=order+1, i,j >= 1 of {{T_i, T_j}}.

    The deformation must be valid up to its stated order.
    """
    _require_regular(g, rep)
    report = formal_deformation_check(g, rep, d)
    if not report.ok:
        raise ValueError(
            f"obstruction needs a valid deformation: {report.failures[0]}")
    total = Cochain.zero(2, rep.dim, g.dim)
    k = d.order + 1
    for i in range(1, k):
        j = k - i
        if j < 1 or j > d.order:
            continue
        part = derived_bracket(rep, Cochain.from_linear_map(d.coefficient(i)),
                               Cochain.from_linear_map(d.coefficient(j)))
        total = total + part
    return total.scale(Q(-1, 2))


@dataclass(frozen=True)
class ExtensionResult:
    theta: Cochain
    obstructed: bool
    solution: Matrix | None
    extended: TruncatedDeformation | None
    dim_image: int
    dim_h2: int

    @property
    def ok(self) -> bool:
        return not self.obstructed


def extend_order(g: HomLieAlgebra, rep: Representation,
                 d: TruncatedDeformation) -> ExtensionResult:
    """Solve {{T, X}} = Theta for the next coefficient, if possible.

    X ranges over the twist-compatible maps V -> g; the deterministic
    solver (first-nonzero pivots, free variables zero) makes the chosen
    solution canonical.  When the system is inconsistent the deformation
    is obstructed and the class of Theta in H^2 is the witness.
    """
    _require_regular(g, rep)
    theta = obstruction(g, rep, d)
    desc = operator_complex(g, rep, d.base)
    basis = compatible_subspace_basis(desc, 1)
    t_cochain = Cochain.from_linear_map(d.base)
    flat_len = len(theta.to_flat())
    columns = [derived_bracket(rep, t_cochain, b).to_flat() for b in basis]
    system = Matrix.from_columns(columns, nrows=flat_len)
    coords = system.solve(theta.to_flat())
    dim_image = system.rank()
    dim_h2 = cohomology_dims(desc, 2).dim_h
    if coords is None:
        return ExtensionResult(theta=theta, obstructed=True, solution=None,
                               extended=None, dim_image=dim_image,
                               dim_h2=dim_h2)
    solution = Cochain.zero(1, rep.dim, g.dim)
    for c, b in zip(coords, basis):
        if c != 0:
            solution = solution + b.scale(c)
    next_term = solution.as_matrix()
    extended = TruncatedDeformation(base=d.base, terms=d.terms + (next_term,))
    return ExtensionResult(theta=theta, obstructed=False, solution=next_term,
                           extended=extended, dim_image=dim_image,
                           dim_h2=dim_h2)


@dataclass(frozen=True)
class EquivalenceReport:
    conditions: tuple
    infinitesimal_relation: bool

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.conditions)


def equivalence_check(g: HomLieAlgebra, rep: Representation,
                      d1: TruncatedDeformation, d2: TruncatedDeformation,
                      x: Vector, phi_g_terms=(), phi_v_terms=(),
                      up_to: int | None = None) -> EquivalenceReport:
    """Whether the formal isomorphism pair built from x (plus optional
    higher-degree witnesses) carries d1 to d2 coefficient-wise.

    The pair starts with id + t ad_x^dag on g and id + t rho(x)^dag on V;
    entries of phi_g_terms and phi_v_terms continue the series from
    degree 2.  Also reports whether the infinitesimals differ by the
    coboundary of x, which equivalent deformations must satisfy.
    """
    _require_regular(g, rep)
    _require_base(g, rep, d1.base)
    if d1.base != d2.base:
        raise ValueError("equivalent deformations must share the base operator")
    x = tuple(x)
    if g.alpha.apply(x) != x:
        raise ValueError("the generating element must be fixed by alpha")
    if up_to is None:
        up_to = max(d1.order, d2.order, 1 + len(phi_g_terms),
                    1 + len(phi_v_terms)) + 1
    alpha_inv = g.alpha.inverse()
    ad_dag = alpha_inv @ Matrix.from_columns(
        [g.bracket(x, basis_vector(g.dim, j)) for j in range(g.dim)],
        nrows=g.dim)
    rho_dag = rep.beta.inverse() @ rep.rho_of(x)
    conditions = _morphism_conditions(
        g, rep,
        from_terms=d1.coefficients(),
        to_terms=d2.coefficients(),
        phi_g_terms=[Matrix.identity(g.dim), ad_dag, *phi_g_terms],
        phi_v_terms=[Matrix.identity(rep.dim), rho_dag, *phi_v_terms],
        up_to=up_to,
    )
    desc = operator_complex(g, rep, d1.base)
    delta_x = zero_coboundary(desc, x).as_matrix()
    relation = (d1.coefficient(1) - d2.coefficient(1)) == delta_x
    return EquivalenceReport(conditions=conditions,
                             infinitesimal_relation=relation)
