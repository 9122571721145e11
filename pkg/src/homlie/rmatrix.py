"""Skew r-matrices, the Yang-Baxter equation, and O-operator transfer.

A skew two-tensor r = sum r_ab e_a wedge e_b on a regular algebra
(g, alpha) corresponds to the operator r#: g* -> g with

    <xi, r#(eta)> = <xi (x) eta, r>,

whose matrix in dual bases is the skew coefficient matrix itself.  For
alpha-invariant r (meaning (alpha (x) alpha) r = r, in matrices
alpha R alpha^T = R) three characterizations of the r-matrix property
are implemented side by side:

  * the graded wedge bracket [r, r]_g vanishes, where

        [x_1^...^x_n, y_1^...^y_m]_g
            = sum_{i,j} (-1)^{i+j} [x_i, y_j] ^ alpha(x_1) ^ ...
              (x_i, y_j omitted, all other factors twisted) ... ^ alpha(y_m);

  * the classical Yang-Baxter sum
    [r^12, r^13] + [r^12, r^23] + [r^13, r^23] vanishes in g (x) g (x) g,
    expanded with tilde(x) = alpha(x) on the passive slots;

  * r# is an O-operator with respect to the coadjoint representation.

An r-matrix induces a bracket on the dual space,

    [xi, eta]_r = {r#(xi), eta} - {r#(eta), xi}

({,} the coadjoint action), making g* a hom-Lie algebra with twist
(alpha^{-1})^T; it is the sub-adjacent algebra of the O-operator r#.
Weak homomorphisms of r-matrices and the transfer of linear and formal
deformations along r -> r# are implemented as route-by-route checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alternating import increasing_tuples, wedge_coords
from .deformation import (
    FormalDeformationReport,
    LinearDeformationReport,
    TruncatedDeformation,
    formal_deformation_check,
    linear_deformation_check,
)
from .linalg import (
    Matrix,
    Q,
    basis_vector,
    is_zero_vector,
    vscale,
)
from .ooperator import (
    OOperatorReport,
    OperatorHomReport,
    is_o_operator,
    o_operator_hom_check,
)
from .reporting import Failure
from .structures import HomLieAlgebra, coadjoint_rep, pair_list


@dataclass(frozen=True)
class WedgeTwoTensor:
    """A skew two-tensor stored by its coefficients on e_i wedge e_j, i < j."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        for (i, j), q in self.coeffs:
            if not (0 <= i < j < self.dim):
                raise ValueError(f"wedge index pair ({i}, {j}) out of order")

    @classmethod
    def from_dict(cls, dim: int, entries: dict) -> "WedgeTwoTensor":
        coeffs = []
        for (i, j) in sorted(entries):
            q = Q(entries[(i, j)])
            if q != 0:
                coeffs.append(((i, j), q))
        return cls(dim=dim, coeffs=tuple(coeffs))

    def coeff_dict(self) -> dict:
        return {pair: q for pair, q in self.coeffs}

    def skew_matrix(self) -> Matrix:
        """The matrix of r# in dual bases (also the coefficient matrix)."""
        rows = [[Q(0)] * self.dim for _ in range(self.dim)]
        for (i, j), q in self.coeffs:
            rows[i][j] = q
            rows[j][i] = -q
        return Matrix(tuple(tuple(row) for row in rows), ncols=self.dim)

    @classmethod
    def from_skew_matrix(cls, m: Matrix) -> "WedgeTwoTensor":
        if not m.is_square():
            raise ValueError("a two-tensor needs a square matrix")
        if m.transpose() != -m:
            raise ValueError("the matrix is not skew-symmetric")
        entries = {}
        for (i, j) in pair_list(m.nrows):
            if m.entry(i, j) != 0:
                entries[(i, j)] = m.entry(i, j)
        return cls.from_dict(m.nrows, entries)

    def add(self, other: "WedgeTwoTensor") -> "WedgeTwoTensor":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        entries = self.coeff_dict()
        for pair, q in other.coeffs:
            entries[pair] = entries.get(pair, Q(0)) + q
        return WedgeTwoTensor.from_dict(self.dim, entries)

    def scale(self, c) -> "WedgeTwoTensor":
        c = Q(c)
        return WedgeTwoTensor.from_dict(
            self.dim, {pair: c * q for pair, q in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs


def tensor_to_operator(r: WedgeTwoTensor) -> Matrix:
    """The map r#: g* -> g of a skew two-tensor, as a matrix."""
    return r.skew_matrix()


def operator_to_tensor(m: Matrix) -> WedgeTwoTensor:
    """The skew two-tensor of a map g* -> g; rejects non-skew matrices."""
    return WedgeTwoTensor.from_skew_matrix(m)


def is_invariant(g: HomLieAlgebra, r: WedgeTwoTensor) -> bool:
    """Whether (alpha (x) alpha) r = r."""
    m = r.skew_matrix()
    return (g.alpha @ m @ g.alpha.transpose()) == m


def invariant_wedge_basis(g: HomLieAlgebra, grade: int) -> list:
    """Canonical basis of the twist-invariant grade-k wedge vectors.

    Each basis element is returned as a sparse {increasing tuple:
    coefficient} dict over the wedge monomials.
    """
    tuples = increasing_tuples(g.dim, grade)
    if not tuples:
        return []
    alpha_cols = [g.alpha.column(i) for i in range(g.dim)]
    size = len(tuples)
    rows = [[Q(0)] * size for _ in range(size)]
    for col, indices in enumerate(tuples):
        minors = wedge_coords([alpha_cols[i] for i in indices], g.dim)
        for row, other in enumerate(tuples):
            value = minors.get(other, Q(0))
            rows[row][col] = value - (Q(1) if row == col else Q(0))
    kernel = Matrix(tuple(tuple(r) for r in rows), ncols=size).kernel_basis()
    out = []
    for v in kernel:
        out.append({tuples[p]: c for p, c in enumerate(v) if c != 0})
    return out


def invariant_two_tensor_basis(g: HomLieAlgebra) -> list:
    """The invariant wedge-square basis, wrapped as two-tensors."""
    return [WedgeTwoTensor.from_dict(g.dim, d)
            for d in invariant_wedge_basis(g, 2)]


def graded_bracket_wedge(g: HomLieAlgebra, u: dict, grade_u: int,
                         v: dict, grade_v: int) -> dict:
    """The graded bracket of wedge vectors, as sparse coefficient dicts."""
    alpha_cols = [g.alpha.column(i) for i in range(g.dim)]
    out = {}
    for iu, cu in u.items():
        if len(iu) != grade_u:
            raise ValueError("monomial does not match the stated grade")
        for iv, cv in v.items():
            if len(iv) != grade_v:
                raise ValueError("monomial does not match the stated grade")
            scale = cu * cv
            for pi in range(grade_u):
                for pj in range(grade_v):
                    bracket = g.bracket_basis(iu[pi], iv[pj])
                    if is_zero_vector(bracket):
                        continue
                    sign = Q(-1) if (pi + pj) % 2 == 1 else Q(1)
                    vectors = [bracket]
                    vectors += [alpha_cols[iu[k]]
                                for k in range(grade_u) if k != pi]
                    vectors += [alpha_cols[iv[k]]
                                for k in range(grade_v) if k != pj]
                    for indices, minor in wedge_coords(vectors, g.dim).items():
                        out[indices] = out.get(indices, Q(0)) + scale * sign * minor
    return {indices: c for indices, c in out.items() if c != 0}


def two_tensor_square(g: HomLieAlgebra, r: WedgeTwoTensor) -> dict:
    """[r, r]_g as a sparse grade-3 coefficient dict."""
    d = r.coeff_dict()
    return graded_bracket_wedge(g, d, 2, d, 2)


@dataclass(frozen=True)
class CybeSum:
    """The three slot sums of the Yang-Baxter expression and their total,
    each a canonical sparse tuple of ((a, b, c), coefficient)."""

    dim: int
    part_12_13: tuple
    part_12_23: tuple
    part_13_23: tuple
    total: tuple

    @property
    def is_zero(self) -> bool:
        return not self.total


def _tensor3_accumulate(store: dict, u, v, w, sign: int) -> None:
    for a, ca in enumerate(u):
        if ca == 0:
            continue
        for b, cb in enumerate(v):
            if cb == 0:
                continue
            for c, cc in enumerate(w):
                if cc == 0:
                    continue
                key = (a, b, c)
                store[key] = store.get(key, Q(0)) + sign * ca * cb * cc


def _canonical3(store: dict) -> tuple:
    return tuple(sorted((k, q) for k, q in store.items() if q != 0))


def cybe_sum(g: HomLieAlgebra, r: WedgeTwoTensor) -> CybeSum:
    """The classical Yang-Baxter sum of r in g (x) g (x) g.

    r is decomposed as sum over its coefficient pairs of
    q (e_a (x) e_b - e_b (x) e_a); passive slots carry the twist.
    """
    terms = []
    for (a, b), q in r.coeffs:
        terms.append((vscale(q, basis_vector(g.dim, a)),
                      basis_vector(g.dim, b)))
    twisted = [(g.alpha.apply(x), g.alpha.apply(y)) for x, y in terms]
    p1, p2, p3 = {}, {}, {}
    for (xi, yi), (txi, tyi) in zip(terms, twisted):
        for (xj, yj), (txj, tyj) in zip(terms, twisted):
            _tensor3_accumulate(p1, g.bracket(xi, xj), tyi, tyj, 1)
            _tensor3_accumulate(p1, g.bracket(xi, yj), tyi, txj, -1)
            _tensor3_accumulate(p1, g.bracket(yi, xj), txi, tyj, -1)
            _tensor3_accumulate(p1, g.bracket(yi, yj), txi, txj, 1)
            _tensor3_accumulate(p2, txi, g.bracket(yi, xj), tyj, 1)
            _tensor3_accumulate(p2, txi, g.bracket(yi, yj), txj, -1)
            _tensor3_accumulate(p2, tyi, g.bracket(xi, xj), tyj, -1)
            _tensor3_accumulate(p2, tyi, g.bracket(xi, yj), txj, 1)
            _tensor3_accumulate(p3, txi, txj, g.bracket(yi, yj), 1)
            _tensor3_accumulate(p3, txi, tyj, g.bracket(yi, xj), -1)
            _tensor3_accumulate(p3, tyi, txj, g.bracket(xi, yj), -1)
            _tensor3_accumulate(p3, tyi, tyj, g.bracket(xi, xj), 1)
    total = {}
    for part in (p1, p2, p3):
        for key, q in part.items():
            total[key] = total.get(key, Q(0)) + q
    return CybeSum(
        dim=g.dim,
        part_12_13=_canonical3(p1),
        part_12_23=_canonical3(p2),
        part_13_23=_canonical3(p3),
        total=_canonical3(total),
    )


def _require_rmatrix_context(g: HomLieAlgebra, r: WedgeTwoTensor) -> None:
    if r.dim != g.dim:
        raise ValueError("the two-tensor does not live on this algebra")
    if not g.is_regular:
        raise ValueError("r-matrix checks need an invertible alpha")
    if not is_invariant(g, r):
        raise ValueError("the two-tensor is not invariant under the twist")


@dataclass(frozen=True)
class RMatrixReport:
    wedge_square_zero: bool
    cybe_zero: bool
    operator_report: OOperatorReport
    wedge_square: tuple
    failures: tuple

    @property
    def routes_agree(self) -> bool:
        return (self.wedge_square_zero == self.cybe_zero
                == self.operator_report.ok)

    @property
    def verdict(self) -> bool:
        return self.wedge_square_zero

    @property
    def ok(self) -> bool:
        return self.verdict


def is_r_matrix(g: HomLieAlgebra, r: WedgeTwoTensor) -> RMatrixReport:
    """Decide the r-matrix property along all three routes.

    Requires a regular algebra and an invariant tensor (ValueError
    otherwise).  The verdict is the vanishing of [r, r]_g; the other two
    routes are computed independently and reported for comparison.
    """
    _require_rmatrix_context(g, r)
    square = two_tensor_square(g, r)
    square_zero = not square
    failures = []
    if not square_zero:
        for indices in sorted(square):
            failures.append(Failure("wedge_square", indices,
                                    (square[indices],), (Q(0),)))
    cybe = cybe_sum(g, r)
    operator = is_o_operator(g, coadjoint_rep(g), tensor_to_operator(r))
    return RMatrixReport(
        wedge_square_zero=square_zero,
        cybe_zero=cybe.is_zero,
        operator_report=operator,
        wedge_square=tuple(sorted(square.items())),
        failures=tuple(failures),
    )


def induced_dual_bracket(g: HomLieAlgebra, r: WedgeTwoTensor) -> HomLieAlgebra:
    """The hom-Lie algebra on g* induced by an r-matrix:

        [xi, eta]_r = {r#(xi), eta} - {r#(eta), xi}

    with twist (alpha^{-1})^T, computed directly from the coadjoint
    action (not through the sub-adjacent construction, so the two paths
    can be compared)."""
    _require_rmatrix_context(g, r)
    report = is_r_matrix(g, r)
    if not report.verdict:
        raise ValueError("the two-tensor is not an r-matrix")
    coadj = coadjoint_rep(g)
    sharp = tensor_to_operator(r)
    brackets = {}
    for (a, b) in pair_list(g.dim):
        value = tuple(
            x - y for x, y in zip(
                coadj.act(sharp.column(a), basis_vector(g.dim, b)),
                coadj.act(sharp.column(b), basis_vector(g.dim, a)),
            )
        )
        if not is_zero_vector(value):
            brackets[(a, b)] = value
    return HomLieAlgebra.build(
        dim=g.dim,
        brackets=brackets,
        alpha=g.alpha.inverse().transpose(),
        basis=coadj.basis,
    )


@dataclass(frozen=True)
class WeakHomReport:
    phi_bracket_homomorphism: bool
    phi_twist_commute: bool
    psi_twist_commute: bool
    tensor_condition: bool
    bracket_condition: bool
    operator_hom: OperatorHomReport
    failures: tuple

    @property
    def ok(self) -> bool:
        return (self.phi_bracket_homomorphism and self.phi_twist_commute
                and self.psi_twist_commute and self.tensor_condition
                and self.bracket_condition)

    @property
    def operator_hom_agrees(self) -> bool:
        return self.ok == self.operator_hom.ok


def weak_homomorphism_check(g: HomLieAlgebra, phi: Matrix, psi: Matrix,
                            r1: WedgeTwoTensor, r2: WedgeTwoTensor
                            ) -> WeakHomReport:
    """Whether (phi, psi) is a weak homomorphism from r1 to r2:

        phi a hom-Lie endomorphism,
        psi . alpha = alpha . psi,
        (psi (x) id)(r1) = (id (x) phi)(r2),
        psi([phi(x), y]) = [x, psi(y)].

    The companion check is the O-operator homomorphism (phi, psi^T)
    from r2# to r1# over the coadjoint representation; the full weak
    homomorphism conditions hold exactly when that one does.
    """
    _require_rmatrix_context(g, r1)
    _require_rmatrix_context(g, r2)
    failures = []
    bracket_homo = True
    for (i, j) in pair_list(g.dim):
        lhs = phi.apply(g.bracket_basis(i, j))
        rhs = g.bracket(phi.column(i), phi.column(j))
        if lhs != rhs:
            bracket_homo = False
            failures.append(Failure("phi_bracket", (i, j), lhs, rhs))
    phi_twist = (phi @ g.alpha) == (g.alpha @ phi)
    if not phi_twist:
        failures.append(Failure("phi_twist_commute", ()))
    psi_twist = (psi @ g.alpha) == (g.alpha @ psi)
    if not psi_twist:
        failures.append(Failure("psi_twist_commute", ()))
    m1 = r1.skew_matrix()
    m2 = r2.skew_matrix()
    tensor_ok = (psi @ m1) == (m2 @ phi.transpose())
    if not tensor_ok:
        failures.append(Failure("tensor_condition", ()))
    bracket_cond = True
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = psi.apply(g.bracket(phi.column(i), basis_vector(g.dim, j)))
            rhs = g.bracket(basis_vector(g.dim, i), psi.column(j))
            if lhs != rhs:
                bracket_cond = False
                failures.append(Failure("intertwine_bracket", (i, j),
                                        lhs, rhs))
    operator_hom = o_operator_hom_check(
        g, coadjoint_rep(g),
        phi_g=phi, phi_v=psi.transpose(),
        t_from=tensor_to_operator(r2), t_to=tensor_to_operator(r1),
    )
    return WeakHomReport(
        phi_bracket_homomorphism=bracket_homo,
        phi_twist_commute=phi_twist,
        psi_twist_commute=psi_twist,
        tensor_condition=tensor_ok,
        bracket_condition=bracket_cond,
        operator_hom=operator_hom,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class TransferReport:
    mode: str
    operator_valid: bool
    wedge_per_order: tuple
    operator_linear: LinearDeformationReport | None = None
    operator_formal: FormalDeformationReport | None = None

    @property
    def wedge_valid(self) -> bool:
        return all(zero for _, zero in self.wedge_per_order)

    @property
    def routes_agree(self) -> bool:
        return self.operator_valid == self.wedge_valid

    @property
    def ok(self) -> bool:
        return self.operator_valid and self.wedge_valid


def rmatrix_deformation_transfer(g: HomLieAlgebra, r: WedgeTwoTensor,
                                 terms, mode: str = "auto") -> TransferReport:
    """Check a deformation of r along both routes and compare.

    The operator route deforms r# over the coadjoint representation; the
    wedge route checks the coefficients of [r_t, r_t]_g.  In linear mode
    (a single generator tau) the full polynomial identity is required,
    with coefficients at t^0, t^1, t^2; in truncated mode the orders run
    up to the number of terms.  r must be an r-matrix and every term
    invariant.
    """
    terms = list(terms)
    report = is_r_matrix(g, r)
    if not report.verdict:
        raise ValueError("the base two-tensor is not an r-matrix")
    for k, tau in enumerate(terms):
        if tau.dim != g.dim:
            raise ValueError("deformation term does not live on this algebra")
        if not is_invariant(g, tau):
            raise ValueError(f"deformation term {k + 1} is not invariant")
    if mode == "auto":
        mode = "linear" if len(terms) == 1 else "truncated"
    if mode not in ("linear", "truncated"):
        raise ValueError(f"unknown transfer mode {mode!r}")
    coadj = coadjoint_rep(g)
    sharp = tensor_to_operator(r)
    tensors = [r, *terms]
    if mode == "linear":
        if len(terms) != 1:
            raise ValueError("linear mode needs exactly one generator")
        linear = linear_deformation_check(g, coadj, sharp,
                                          tensor_to_operator(terms[0]))
        wedge_orders = []
        for k in (0, 1, 2):
            total = {}
            for i in range(k + 1):
                j = k - i
                if i > 1 or j > 1:
                    continue
                part = graded_bracket_wedge(
                    g, tensors[i].coeff_dict(), 2,
                    tensors[j].coeff_dict(), 2)
                for key, q in part.items():
                    total[key] = total.get(key, Q(0)) + q
            wedge_orders.append((k, not any(q != 0 for q in total.values())))
        return TransferReport(
            mode="linear",
            operator_valid=linear.valid,
            wedge_per_order=tuple(wedge_orders),
            operator_linear=linear,
        )
    deformation = TruncatedDeformation.of(
        sharp, [tensor_to_operator(t) for t in terms])
    formal = formal_deformation_check(g, coadj, deformation)
    wedge_orders = []
    for k in range(len(terms) + 1):
        total = {}
        for i in range(k + 1):
            j = k - i
            if i >= len(tensors) or j >= len(tensors):
                continue
            part = graded_bracket_wedge(
                g, tensors[i].coeff_dict(), 2, tensors[j].coeff_dict(), 2)
            for key, q in part.items():
                total[key] = total.get(key, Q(0)) + q
        wedge_orders.append((k, not any(q != 0 for q in total.values())))
    return TransferReport(
        mode="truncated",
        operator_valid=formal.ok,
        wedge_per_order=tuple(wedge_orders),
        operator_formal=formal,
    )
