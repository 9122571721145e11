"""Hom-Lie algebras, their representations, and standard constructions.

A hom-Lie algebra is a vector space with an antisymmetric bracket and a
linear twist alpha satisfying multiplicativity

    alpha([x, y]) = [alpha(x), alpha(y)]

and the hom-Jacobi identity

    [alpha(x), [y, z]] + [alpha(y), [z, x]] + [alpha(z), [x, y]] = 0.

A representation of (g, alpha) is a space V with twist beta and an action
rho: g -> End(V) satisfying

    rho(alpha(x)) . beta = beta . rho(x)
    rho([x, y]) . beta   = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x).

Brackets are stored only on basis pairs i < j; everything else follows by
antisymmetry.  Verifiers return structured reports and never raise on a
failing law, so broken inputs can be diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import (
    Matrix,
    Q,
    Vector,
    basis_vector,
    is_zero_vector,
    vadd,
    vneg,
    vscale,
    vsub,
    vzero,
)
from .reporting import Failure, matrix_failures


@lru_cache(maxsize=None)
def _pair_position(dim: int) -> dict:
    """Position of each ordered pair i < j in the lexicographic pair list."""
    position = {}
    k = 0
    for i in range(dim):
        for j in range(i + 1, dim):
            position[(i, j)] = k
            k += 1
    return position


def pair_list(dim: int) -> list:
    """All basis pairs i < j in lexicographic order."""
    return sorted(_pair_position(dim))


def default_basis(dim: int, prefix: str = "e") -> tuple:
    return tuple(f"{prefix}{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class HomLieAlgebra:
    """A finite-dimensional algebra with antisymmetric bracket and twist.

    table holds [e_i, e_j] for i < j in lexicographic pair order, each as
    a coordinate vector.  The axioms are not enforced on construction;
    run verify_hom_lie to check them.
    """

    dim: int
    basis: tuple
    alpha: Matrix
    table: tuple

    def __post_init__(self):
        if len(self.basis) != self.dim:
            raise ValueError("basis labels do not match dim")
        if self.alpha.shape != (self.dim, self.dim):
            raise ValueError("alpha has the wrong shape")
        expected = self.dim * (self.dim - 1) // 2
        if len(self.table) != expected:
            raise ValueError("bracket table has the wrong length")
        for value in self.table:
            if len(value) != self.dim:
                raise ValueError("bracket value has the wrong length")

    @classmethod
    def build(cls, dim, brackets, alpha=None, basis=None) -> "HomLieAlgebra":
        """Assemble an algebra from a sparse {(i, j): vector} bracket dict.

        Keys must have i < j; omitted pairs get the zero bracket.  alpha
        defaults to the identity.
        """
        if alpha is None:
            alpha = Matrix.identity(dim)
        if basis is None:
            basis = default_basis(dim)
        table = []
        seen = set(brackets)
        for (i, j) in pair_list(dim):
            seen.discard((i, j))
            value = brackets.get((i, j))
            if value is None:
                table.append(vzero(dim))
            else:
                table.append(tuple(Q(c) for c in value))
        if seen:
            raise ValueError(f"bracket keys must satisfy i < j, got {sorted(seen)}")
        return cls(dim=dim, basis=tuple(basis), alpha=alpha, table=tuple(table))

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any i, j, using antisymmetry."""
        if i == j:
            return vzero(self.dim)
        if i < j:
            return self.table[_pair_position(self.dim)[(i, j)]]
        return vneg(self.table[_pair_position(self.dim)[(j, i)]])

    def bracket(self, u: Vector, v: Vector) -> Vector:
        """Bilinear extension of the basis bracket."""
        out = vzero(self.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0 or i == j:
                    continue
                out = vadd(out, vscale(a * b, self.bracket_basis(i, j)))
        return out

    def alpha_power(self, s: int) -> Matrix:
        return self.alpha.power(s)

    def alpha_apply(self, x: Vector) -> Vector:
        return self.alpha.apply(x)

    @property
    def is_regular(self) -> bool:
        return self.alpha.is_invertible()

    def brackets_dict(self) -> dict:
        """Sparse {(i, j): vector} view of the table, zero pairs omitted."""
        out = {}
        for (i, j) in pair_list(self.dim):
            value = self.bracket_basis(i, j)
            if not is_zero_vector(value):
                out[(i, j)] = value
        return out


@dataclass(frozen=True)
class HomLieReport:
    multiplicative: bool
    hom_jacobi: bool
    regular: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.multiplicative and self.hom_jacobi

    @property
    def failing_tuples(self) -> tuple:
        return tuple(f.indices for f in self.failures)


def verify_hom_lie(g: HomLieAlgebra) -> HomLieReport:
    """Check multiplicativity and hom-Jacobi on all basis tuples."""
    failures = []
    multiplicative = True
    for (i, j) in pair_list(g.dim):
        lhs = g.alpha.apply(g.bracket_basis(i, j))
        rhs = g.bracket(g.alpha.apply(basis_vector(g.dim, i)),
                        g.alpha.apply(basis_vector(g.dim, j)))
        if lhs != rhs:
            multiplicative = False
            failures.append(Failure("multiplicativity", (i, j), lhs, rhs))
    hom_jacobi = True
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(j + 1, g.dim):
                defect = vadd(
                    vadd(
                        g.bracket(g.alpha.apply(basis_vector(g.dim, i)),
                                  g.bracket_basis(j, k)),
                        g.bracket(g.alpha.apply(basis_vector(g.dim, j)),
                                  g.bracket_basis(k, i)),
                    ),
                    g.bracket(g.alpha.apply(basis_vector(g.dim, k)),
                              g.bracket_basis(i, j)),
                )
                if not is_zero_vector(defect):
                    hom_jacobi = False
                    failures.append(
                        Failure("hom_jacobi", (i, j, k), defect, vzero(g.dim))
                    )
    return HomLieReport(
        multiplicative=multiplicative,
        hom_jacobi=hom_jacobi,
        regular=g.is_regular,
        failures=tuple(failures),
    )


def from_lie_with_morphism(g: HomLieAlgebra, phi: Matrix) -> HomLieAlgebra:
    """Twist an ordinary Lie algebra (alpha = id) along an endomorphism.

    phi must commute with the brackets; the result has bracket
    phi([x, y]) and twist phi.
    """
    if g.alpha != Matrix.identity(g.dim):
        raise ValueError("the input must be an ordinary Lie algebra (alpha = id)")
    for (i, j) in pair_list(g.dim):
        lhs = phi.apply(g.bracket_basis(i, j))
        rhs = g.bracket(phi.apply(basis_vector(g.dim, i)),
                        phi.apply(basis_vector(g.dim, j)))
        if lhs != rhs:
            raise ValueError(
                f"phi is not a Lie algebra endomorphism: fails at pair ({i}, {j})"
            )
    table = tuple(phi.apply(g.bracket_basis(i, j)) for (i, j) in pair_list(g.dim))
    return HomLieAlgebra(dim=g.dim, basis=g.basis, alpha=phi, table=table)


@dataclass(frozen=True)
class Representation:
    """An action of a hom-Lie algebra on a twisted space (V, beta).

    rho holds one matrix per algebra basis vector.  Axioms are checked by
    verify_representation, not on construction.
    """

    algebra: HomLieAlgebra
    dim: int
    basis: tuple
    beta: Matrix
    rho: tuple

    def __post_init__(self):
        if len(self.basis) != self.dim:
            raise ValueError("basis labels do not match dim")
        if self.beta.shape != (self.dim, self.dim):
            raise ValueError("beta has the wrong shape")
        if len(self.rho) != self.algebra.dim:
            raise ValueError("need one action matrix per algebra basis vector")
        for m in self.rho:
            if m.shape != (self.dim, self.dim):
                raise ValueError("action matrix has the wrong shape")

    @classmethod
    def build(cls, algebra, beta, rho, basis=None) -> "Representation":
        dim = beta.nrows
        if basis is None:
            basis = default_basis(dim, prefix="v")
        return cls(algebra=algebra, dim=dim, basis=tuple(basis),
                   beta=beta, rho=tuple(rho))

    def rho_of(self, x: Vector) -> Matrix:
        """Action matrix of an arbitrary algebra element."""
        out = Matrix.zero(self.dim, self.dim)
        for i, c in enumerate(x):
            if c != 0:
                out = out + self.rho[i].scale(c)
        return out

    def act(self, x: Vector, v: Vector) -> Vector:
        """{x, v} = rho(x)(v)."""
        return self.rho_of(x).apply(v)


@dataclass(frozen=True)
class RepresentationReport:
    twist_intertwine: bool
    module_equation: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.twist_intertwine and self.module_equation


def verify_representation(rep: Representation) -> RepresentationReport:
    """Check both representation axioms on all basis vectors and pairs."""
    g = rep.algebra
    failures = []
    twist_ok = True
    for i in range(g.dim):
        lhs = rep.rho_of(g.alpha.apply(basis_vector(g.dim, i))) @ rep.beta
        rhs = rep.beta @ rep.rho[i]
        found = matrix_failures("twist_intertwine", (i,), lhs, rhs)
        if found:
            twist_ok = False
            failures.extend(found)
    module_ok = True
    for (i, j) in pair_list(g.dim):
        lhs = rep.rho_of(g.bracket_basis(i, j)) @ rep.beta
        ai = rep.rho_of(g.alpha.apply(basis_vector(g.dim, i)))
        aj = rep.rho_of(g.alpha.apply(basis_vector(g.dim, j)))
        rhs = ai @ rep.rho[j] - aj @ rep.rho[i]
        found = matrix_failures("module_equation", (i, j), lhs, rhs)
        if found:
            module_ok = False
            failures.extend(found)
    return RepresentationReport(
        twist_intertwine=twist_ok,
        module_equation=module_ok,
        failures=tuple(failures),
    )


def adjoint_rep(g: HomLieAlgebra, s: int = 0) -> Representation:
    """The alpha^s-twisted adjoint action ad^s_x(y) = [alpha^s(x), y].

    Negative s needs a regular algebra.
    """
    alpha_s = g.alpha_power(s)
    rho = tuple(
        Matrix.from_columns(
            [g.bracket(alpha_s.apply(basis_vector(g.dim, i)),
                       basis_vector(g.dim, j))
             for j in range(g.dim)],
            nrows=g.dim,
        )
        for i in range(g.dim)
    )
    return Representation(algebra=g, dim=g.dim, basis=g.basis,
                          beta=g.alpha, rho=rho)


def trivial_rep(g: HomLieAlgebra, dim: int = 1) -> Representation:
    """The zero action on (V, id)."""
    return Representation(
        algebra=g,
        dim=dim,
        basis=default_basis(dim, prefix="v"),
        beta=Matrix.identity(dim),
        rho=tuple(Matrix.zero(dim, dim) for _ in range(g.dim)),
    )


def dual_rep(rep: Representation) -> Representation:
    """The dual representation on V* for invertible twists.

    With the dual-basis pairing, beta* = (beta^{-1})^T and

        rho*(x) = -(rho(alpha^{-1}(x)) . beta^{-2})^T,

    which satisfies both representation axioms whenever rep does.
    """
    g = rep.algebra
    if not g.is_regular:
        raise ValueError("dual representation needs an invertible alpha")
    if not rep.beta.is_invertible():
        raise ValueError("dual representation needs an invertible beta")
    alpha_inv = g.alpha.inverse()
    beta_minus2 = rep.beta.power(-2)
    rho_star = tuple(
        (-(rep.rho_of(alpha_inv.apply(basis_vector(g.dim, i))) @ beta_minus2))
        .transpose()
        for i in range(g.dim)
    )
    return Representation(
        algebra=g,
        dim=rep.dim,
        basis=tuple(f"{name}*" for name in rep.basis),
        beta=rep.beta.inverse().transpose(),
        rho=rho_star,
    )


def coadjoint_rep(g: HomLieAlgebra) -> Representation:
    """Dual of the untwisted adjoint representation."""
    return dual_rep(adjoint_rep(g, 0))


def semidirect_product(rep: Representation) -> HomLieAlgebra:
    """The semidirect sum g + V with bracket

        [x + u, y + v] = [x, y] + rho(x)(v) - rho(y)(u)

    and twist alpha + beta.  The axioms are deliberately not enforced: the
    result is a hom-Lie algebra exactly when rep is a representation,
    which verify_hom_lie can test.
    """
    g = rep.algebra
    n, m = g.dim, rep.dim
    total = n + m
    alpha_rows = []
    for i in range(n):
        alpha_rows.append(g.alpha.row(i) + vzero(m))
    for a in range(m):
        alpha_rows.append(vzero(n) + rep.beta.row(a))
    brackets = {}
    for (i, j) in pair_list(n):
        value = g.bracket_basis(i, j)
        if not is_zero_vector(value):
            brackets[(i, j)] = value + vzero(m)
    for i in range(n):
        for a in range(m):
            value = rep.rho[i].column(a)
            if not is_zero_vector(value):
                brackets[(i, n + a)] = vzero(n) + value
    return HomLieAlgebra.build(
        dim=total,
        brackets=brackets,
        alpha=Matrix(alpha_rows),
        basis=g.basis + rep.basis,
    )


def abelian2() -> HomLieAlgebra:
    """Two-dimensional abelian algebra with identity twist."""
    return HomLieAlgebra.build(dim=2, brackets={})


def aff1() -> HomLieAlgebra:
    """The affine line: [e1, e2] = e2, identity twist."""
    return HomLieAlgebra.build(dim=2, brackets={(0, 1): (0, 1)})


def aff1_twisted() -> HomLieAlgebra:
    """Twisted affine line: [e1, e2] = 2 e2 with alpha = diag(1, 2)."""
    return HomLieAlgebra.build(
        dim=2,
        brackets={(0, 1): (0, 2)},
        alpha=Matrix.diagonal([1, 2]),
    )


def sl2() -> HomLieAlgebra:
    """sl(2) in the basis (h, e, f) with identity twist."""
    return HomLieAlgebra.build(
        dim=3,
        brackets={
            (0, 1): (0, 2, 0),
            (0, 2): (0, 0, -2),
            (1, 2): (1, 0, 0),
        },
        basis=("h", "e", "f"),
    )


def heisenberg3() -> HomLieAlgebra:
    """Heisenberg algebra [e1, e2] = e3 with identity twist."""
    return HomLieAlgebra.build(dim=3, brackets={(0, 1): (0, 0, 1)})


def heisenberg3_twisted() -> HomLieAlgebra:
    """Heisenberg bracket with the diagonal twist diag(2, 1/2, 1)."""
    return HomLieAlgebra.build(
        dim=3,
        brackets={(0, 1): (0, 0, 1)},
        alpha=Matrix.diagonal([Q(2), Q(1, 2), Q(1)]),
    )


def catalog() -> dict:
    """Named example algebras, ordered by increasing complexity."""
    return {
        "abelian2": abelian2(),
        "aff1": aff1(),
        "aff1_twisted": aff1_twisted(),
        "sl2": sl2(),
        "heisenberg3": heisenberg3(),
        "heisenberg3_twisted": heisenberg3_twisted(),
    }
