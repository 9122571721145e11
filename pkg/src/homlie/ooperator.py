"""O-operators, Rota-Baxter operators, and the structures they induce.

A linear map T: V -> g on a representation (V, beta, rho) of (g, alpha)
is an O-operator when it intertwines the twists, T . beta = alpha . T,
and satisfies

    [T(u), T(v)] = T({T(u), v} - {T(v), u}),    {x, v} = rho(x)(v).

Equivalent characterizations implemented here: the graph of T is a
subalgebra of the semidirect product closed under the twist; the block
map N_T = [[0, T], [0, 0]] is a Nijenhuis operator on the semidirect
product; T is a Maurer-Cartan element of the derived bracket, meaning
it is twist-compatible and {{T, T}} = 0.

Every O-operator induces a hom-pre-Lie product u . v = {T(u), v} on V,
whose commutator is the sub-adjacent hom-Lie algebra V^c, and a
representation rho_T of V^c back on g:

    rho_T(v)(x) = [T(v), x] + T({x, v}).

A Rota-Baxter operator of weight lambda and degree s on g itself is an
alpha-commuting R with

    [R(x), R(y)] = R([alpha^s R(x), y] + [x, alpha^s R(y)] + lambda [x, y]);

at weight zero these are exactly the O-operators on the alpha^s-twisted
adjoint representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochain import Cochain, ComplexDescriptor, coboundary
from .graded import derived_bracket
from .linalg import (
    Matrix,
    Q,
    Vector,
    basis_vector,
    is_zero_vector,
    vadd,
    vscale,
    vsub,
    vzero,
)
from .reporting import Failure, matrix_failures
from .structures import (
    HomLieAlgebra,
    Representation,
    pair_list,
    semidirect_product,
)


@dataclass(frozen=True)
class OOperatorReport:
    intertwines: bool
    quadratic: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.intertwines and self.quadratic


def _quadratic_defect(g: HomLieAlgebra, rep: Representation, t: Matrix,
                      a: int, b: int) -> Vector:
    """[T e_a, T e_b] - T({T e_a, e_b} - {T e_b, e_a}) for basis a, b."""
    ta = t.column(a)
    tb = t.column(b)
    lhs = g.bracket(ta, tb)
    inner = vsub(rep.act(ta, basis_vector(rep.dim, b)),
                 rep.act(tb, basis_vector(rep.dim, a)))
    return vsub(lhs, t.apply(inner))


def is_o_operator(g: HomLieAlgebra, rep: Representation, t: Matrix) -> OOperatorReport:
    """Check both O-operator conditions on all basis vectors and pairs."""
    if t.shape != (g.dim, rep.dim):
        raise ValueError("operator must map the module into the algebra")
    failures = []
    lhs = t @ rep.beta
    rhs = g.alpha @ t
    twist_failures = matrix_failures("twist_intertwine", (), lhs, rhs)
    failures.extend(twist_failures)
    quadratic = True
    for (a, b) in pair_list(rep.dim):
        defect = _quadratic_defect(g, rep, t, a, b)
        if not is_zero_vector(defect):
            quadratic = False
            failures.append(Failure("o_operator_identity", (a, b),
                                    defect, vzero(g.dim)))
    return OOperatorReport(
        intertwines=not twist_failures,
        quadratic=quadratic,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class RotaBaxterReport:
    commutes_with_twist: bool
    identity: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.commutes_with_twist and self.identity


def is_rota_baxter(g: HomLieAlgebra, r: Matrix, s: int = 0,
                   weight=Q(0)) -> RotaBaxterReport:
    """Check the degree-s, weight-lambda Rota-Baxter conditions."""
    weight = Q(weight)
    failures = []
    commute_failures = matrix_failures("twist_commute", (),
                                       r @ g.alpha, g.alpha @ r)
    failures.extend(commute_failures)
    alpha_s = g.alpha_power(s)
    identity = True
    for (i, j) in pair_list(g.dim):
        ri = r.column(i)
        rj = r.column(j)
        lhs = g.bracket(ri, rj)
        inside = vadd(
            vadd(g.bracket(alpha_s.apply(ri), basis_vector(g.dim, j)),
                 g.bracket(basis_vector(g.dim, i), alpha_s.apply(rj))),
            vscale(weight, g.bracket_basis(i, j)),
        )
        rhs = r.apply(inside)
        if lhs != rhs:
            identity = False
            failures.append(Failure("rota_baxter_identity", (i, j), lhs, rhs))
    return RotaBaxterReport(
        commutes_with_twist=not commute_failures,
        identity=identity,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class GraphReport:
    bracket_closed: bool
    twist_closed: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.bracket_closed and self.twist_closed


def graph_check(g: HomLieAlgebra, rep: Representation, t: Matrix) -> GraphReport:
    """Whether Gr(T) = {T(v) + v} is a subalgebra of g + V closed under
    the twist alpha + beta."""
    if t.shape != (g.dim, rep.dim):
        raise ValueError("operator must map the module into the algebra")
    semi = semidirect_product(rep)
    n = g.dim
    failures = []
    bracket_closed = True
    for (a, b) in pair_list(rep.dim):
        u = t.column(a) + basis_vector(rep.dim, a)
        w = t.column(b) + basis_vector(rep.dim, b)
        value = semi.bracket(u, w)
        g_part, v_part = value[:n], value[n:]
        if g_part != t.apply(v_part):
            bracket_closed = False
            failures.append(Failure("graph_bracket_closed", (a, b),
                                    g_part, t.apply(v_part)))
    twist_closed = True
    for a in range(rep.dim):
        lhs = g.alpha.apply(t.column(a))
        rhs = t.apply(rep.beta.column(a))
        if lhs != rhs:
            twist_closed = False
            failures.append(Failure("graph_twist_closed", (a,), lhs, rhs))
    return GraphReport(
        bracket_closed=bracket_closed,
        twist_closed=twist_closed,
        failures=tuple(failures),
    )


def build_nt(t: Matrix) -> Matrix:
    """The block operator N_T = [[0, T], [0, 0]] on g + V."""
    n, m = t.shape
    rows = [vzero(n) + t.row(i) for i in range(n)]
    rows += [vzero(n + m) for _ in range(m)]
    return Matrix(tuple(rows), ncols=n + m)


@dataclass(frozen=True)
class NijenhuisReport:
    commutes_with_twist: bool
    identity: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.commutes_with_twist and self.identity


def nijenhuis_operator_check(h: HomLieAlgebra, n: Matrix) -> NijenhuisReport:
    """Whether N commutes with the twist and satisfies

        [N(x), N(y)] = N([N(x), y] - [N(y), x] - N([x, y])).
    """
    failures = []
    commute_failures = matrix_failures("twist_commute", (),
                                       n @ h.alpha, h.alpha @ n)
    failures.extend(commute_failures)
    identity = True
    for (i, j) in pair_list(h.dim):
        ni = n.column(i)
        nj = n.column(j)
        lhs = h.bracket(ni, nj)
        inside = vsub(
            vsub(h.bracket(ni, basis_vector(h.dim, j)),
                 h.bracket(nj, basis_vector(h.dim, i))),
            n.apply(h.bracket_basis(i, j)),
        )
        rhs = n.apply(inside)
        if lhs != rhs:
            identity = False
            failures.append(Failure("nijenhuis_identity", (i, j), lhs, rhs))
    return NijenhuisReport(
        commutes_with_twist=not commute_failures,
        identity=identity,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class MaurerCartanOperatorReport:
    twist_compatible: bool
    derived_square_zero: bool

    @property
    def ok(self) -> bool:
        return self.twist_compatible and self.derived_square_zero


def o_operator_maurer_cartan_check(g: HomLieAlgebra, rep: Representation,
                                   t: Matrix) -> MaurerCartanOperatorReport:
    """T as a Maurer-Cartan element: twist-compatible and {{T, T}} = 0."""
    compatible = (t @ rep.beta) == (g.alpha @ t)
    one = Cochain.from_linear_map(t)
    square = derived_bracket(rep, one, one)
    return MaurerCartanOperatorReport(
        twist_compatible=compatible,
        derived_square_zero=square.is_zero(),
    )


def _require_o_operator(g, rep, t, unchecked: bool) -> None:
    if unchecked:
        return
    report = is_o_operator(g, rep, t)
    if not report.ok:
        first = report.failures[0]
        raise ValueError(f"not an O-operator: {first}")


@dataclass(frozen=True)
class HomPreLie:
    """A bilinear product with twist; verify_hom_pre_lie checks the axioms.

    table[i][j] holds e_i . e_j as a coordinate vector (all ordered
    pairs, the product is not antisymmetric).
    """

    dim: int
    basis: tuple
    twist: Matrix
    table: tuple

    def product(self, u: Vector, v: Vector) -> Vector:
        out = vzero(self.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                out = vadd(out, tuple(a * b * c for c in self.table[i][j]))
        return out


@dataclass(frozen=True)
class HomPreLieReport:
    twist_multiplicative: bool
    left_symmetry: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.twist_multiplicative and self.left_symmetry


def verify_hom_pre_lie(p: HomPreLie) -> HomPreLieReport:
    """Check beta(u . v) = beta(u) . beta(v) and the twisted
    left-symmetry

        (u . v) . beta(w) - beta(u) . (v . w)
            = (v . u) . beta(w) - beta(v) . (u . w).
    """
    failures = []
    multiplicative = True
    for i in range(p.dim):
        for j in range(p.dim):
            lhs = p.twist.apply(p.table[i][j])
            rhs = p.product(p.twist.column(i), p.twist.column(j))
            if lhs != rhs:
                multiplicative = False
                failures.append(Failure("twist_multiplicative", (i, j), lhs, rhs))
    symmetric = True
    for i in range(p.dim):
        for j in range(i + 1, p.dim):
            for k in range(p.dim):
                bw = p.twist.column(k)
                lhs = vsub(p.product(p.table[i][j], bw),
                           p.product(p.twist.column(i), p.table[j][k]))
                rhs = vsub(p.product(p.table[j][i], bw),
                           p.product(p.twist.column(j), p.table[i][k]))
                if lhs != rhs:
                    symmetric = False
                    failures.append(Failure("left_symmetry", (i, j, k),
                                            lhs, rhs))
    return HomPreLieReport(
        twist_multiplicative=multiplicative,
        left_symmetry=symmetric,
        failures=tuple(failures),
    )


def induced_hom_pre_lie(g: HomLieAlgebra, rep: Representation, t: Matrix,
                        unchecked: bool = False) -> HomPreLie:
    """The product u . v = {T(u), v} on V induced by an O-operator."""
    _require_o_operator(g, rep, t, unchecked)
    table = tuple(
        tuple(rep.act(t.column(a), basis_vector(rep.dim, b))
              for b in range(rep.dim))
        for a in range(rep.dim)
    )
    return HomPreLie(dim=rep.dim, basis=rep.basis, twist=rep.beta, table=table)


def subadjacent(p: HomPreLie) -> HomLieAlgebra:
    """The commutator algebra [u, v] = u . v - v . u of a hom-pre-Lie."""
    brackets = {}
    for (i, j) in pair_list(p.dim):
        value = vsub(p.table[i][j], p.table[j][i])
        if not is_zero_vector(value):
            brackets[(i, j)] = value
    return HomLieAlgebra.build(dim=p.dim, brackets=brackets,
                               alpha=p.twist, basis=p.basis)


def rho_t(g: HomLieAlgebra, rep: Representation, t: Matrix,
          unchecked: bool = False) -> Representation:
    """The action rho_T(v)(x) = [T(v), x] + T({x, v}) of the sub-adjacent
    algebra of T back on (g, alpha)."""
    _require_o_operator(g, rep, t, unchecked)
    vc = subadjacent(induced_hom_pre_lie(g, rep, t, unchecked=True))
    rho = []
    for a in range(rep.dim):
        ta = t.column(a)
        columns = [
            vadd(g.bracket(ta, basis_vector(g.dim, j)),
                 t.apply(rep.act(basis_vector(g.dim, j),
                                 basis_vector(rep.dim, a))))
            for j in range(g.dim)
        ]
        rho.append(Matrix.from_columns(columns, nrows=g.dim))
    return Representation(algebra=vc, dim=g.dim, basis=g.basis,
                          beta=g.alpha, rho=tuple(rho))


def operator_complex(g: HomLieAlgebra, rep: Representation, t: Matrix,
                     unchecked: bool = False) -> ComplexDescriptor:
    """The cochain complex of an O-operator: cochains on the sub-adjacent
    algebra V^c with coefficients in (g, alpha) through rho_T."""
    action = rho_t(g, rep, t, unchecked=unchecked)
    return ComplexDescriptor(source=action.algebra, coeff=action)


def operator_coboundary(g: HomLieAlgebra, rep: Representation, t: Matrix,
                        p: Cochain, unchecked: bool = False) -> Cochain:
    """The coboundary of the complex attached to the O-operator T."""
    desc = operator_complex(g, rep, t, unchecked=unchecked)
    return coboundary(desc, p)


@dataclass(frozen=True)
class OperatorHomReport:
    algebra_morphism: bool
    operator_intertwine: bool
    module_twist: bool
    action_equivariant: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return (self.algebra_morphism and self.operator_intertwine
                and self.module_twist and self.action_equivariant)


def o_operator_hom_check(g: HomLieAlgebra, rep: Representation,
                         phi_g: Matrix, phi_v: Matrix,
                         t_from: Matrix, t_to: Matrix) -> OperatorHomReport:
    """Whether (phi_g, phi_v) is a homomorphism of O-operators from
    t_from to t_to on the same representation:

        t_to . phi_v = phi_g . t_from,
        phi_v . beta = beta . phi_v,
        phi_v({x, v}) = {phi_g(x), phi_v(v)},

    with phi_g a hom-Lie endomorphism of g.
    """
    failures = []
    morphism = True
    commute = matrix_failures("endomorphism_twist_commute", (),
                              phi_g @ g.alpha, g.alpha @ phi_g)
    if commute:
        morphism = False
        failures.extend(commute)
    for (i, j) in pair_list(g.dim):
        lhs = phi_g.apply(g.bracket_basis(i, j))
        rhs = g.bracket(phi_g.column(i), phi_g.column(j))
        if lhs != rhs:
            morphism = False
            failures.append(Failure("endomorphism_bracket", (i, j), lhs, rhs))
    chain = matrix_failures("operator_intertwine", (),
                            t_to @ phi_v, phi_g @ t_from)
    failures.extend(chain)
    module = matrix_failures("module_twist_commute", (),
                             phi_v @ rep.beta, rep.beta @ phi_v)
    failures.extend(module)
    equivariant = True
    for i in range(g.dim):
        lhs = phi_v @ rep.rho[i]
        rhs = rep.rho_of(phi_g.column(i)) @ phi_v
        found = matrix_failures("action_equivariance", (i,), lhs, rhs)
        if found:
            equivariant = False
            failures.extend(found)
    return OperatorHomReport(
        algebra_morphism=morphism,
        operator_intertwine=not chain,
        module_twist=not module,
        action_equivariant=equivariant,
        failures=tuple(failures),
    )


def rb_induced_bracket(g: HomLieAlgebra, r: Matrix, s: int = 0) -> HomLieAlgebra:
    """The descendent bracket of a degree-s weight-zero Rota-Baxter
    operator,

        [x, y]_R = [alpha^s R(x), y] + [x, alpha^s R(y)],

    on the same space with the same twist."""
    alpha_s = g.alpha_power(s)
    brackets = {}
    for (i, j) in pair_list(g.dim):
        value = vadd(
            g.bracket(alpha_s.apply(r.column(i)), basis_vector(g.dim, j)),
            g.bracket(basis_vector(g.dim, i), alpha_s.apply(r.column(j))),
        )
        if not is_zero_vector(value):
            brackets[(i, j)] = value
    return HomLieAlgebra.build(dim=g.dim, brackets=brackets,
                               alpha=g.alpha, basis=g.basis)
