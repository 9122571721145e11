"""Twist-compatible cochains and the coboundary of a representation.

An n-cochain is an alternating multilinear map from the source algebra
into the coefficient space.  Only the maps compatible with the twists,

    tau(f(v_1, ..., v_n)) = f(sigma v_1, ..., sigma v_n),

form the complex; compatible_subspace_basis computes that subspace
exactly.  The coboundary of an n-cochain f is

    (delta f)(x_1, ..., x_{n+1})
        = sum_i (-1)^{i+1} rho(alpha^{n-1}(x_i)) f(..., x_i omitted, ...)
        + sum_{i<j} (-1)^{i+j} f([x_i, x_j], alpha(x_1), ...,
                                 alpha hats at i, j, ..., alpha(x_{n+1})).

The same machinery drives both directions of interest: cochains on g
with values in a module V, and cochains on the sub-adjacent algebra of
an O-operator with values back in g.  A ComplexDescriptor packages one
such direction as (source algebra, coefficient representation).

For regular structures the complex extends to degree zero: C^0 is the
fixed-point space of the coefficient twist and

    (delta_0 w)(x) = rho(sigma^{-1}(x))(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .alternating import increasing_tuples, sort_with_sign, wedge_coords
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
from .structures import HomLieAlgebra, Representation


@lru_cache(maxsize=None)
def _tuple_positions(dim: int, arity: int) -> dict:
    return {t: p for p, t in enumerate(increasing_tuples(dim, arity))}


@dataclass(frozen=True)
class Cochain:
    """An alternating map stored densely on increasing basis tuples.

    values holds one coefficient vector (length target_dim) per
    increasing arity-tuple of source indices, in combinations order.
    Arity 0 stores the single value on the empty tuple.
    """

    arity: int
    source_dim: int
    target_dim: int
    values: tuple

    def __post_init__(self):
        expected = len(increasing_tuples(self.source_dim, self.arity))
        if len(self.values) != expected:
            raise ValueError("wrong number of coefficient vectors")
        for v in self.values:
            if len(v) != self.target_dim:
                raise ValueError("coefficient vector has the wrong length")

    @classmethod
    def zero(cls, arity: int, source_dim: int, target_dim: int) -> "Cochain":
        count = len(increasing_tuples(source_dim, arity))
        return cls(arity, source_dim, target_dim,
                   tuple(vzero(target_dim) for _ in range(count)))

    @classmethod
    def from_values(cls, arity, source_dim, target_dim, entries) -> "Cochain":
        """Build from a sparse {increasing tuple: vector} dict."""
        values = []
        seen = set(entries)
        for t in increasing_tuples(source_dim, arity):
            seen.discard(t)
            v = entries.get(t)
            values.append(tuple(Q(c) for c in v) if v is not None
                          else vzero(target_dim))
        if seen:
            raise ValueError(
                f"keys must be increasing index tuples, got {sorted(seen)}")
        return cls(arity, source_dim, target_dim, tuple(values))

    @classmethod
    def from_linear_map(cls, m: Matrix) -> "Cochain":
        """Wrap a matrix as the arity-1 cochain e_j -> column j."""
        return cls(1, m.ncols, m.nrows,
                   tuple(m.column(j) for j in range(m.ncols)))

    def as_matrix(self) -> Matrix:
        if self.arity != 1:
            raise ValueError("only arity-1 cochains are matrices")
        return Matrix.from_columns(list(self.values), nrows=self.target_dim)

    @property
    def index_tuples(self) -> list:
        return increasing_tuples(self.source_dim, self.arity)

    def coeff(self, indices: tuple) -> Vector:
        return self.values[_tuple_positions(self.source_dim, self.arity)[indices]]

    def evaluate_basis(self, indices) -> Vector:
        """Value on basis vectors in any order, with the alternating sign."""
        sorted_sign = sort_with_sign(tuple(indices))
        if sorted_sign is None:
            return vzero(self.target_dim)
        ordered, sign = sorted_sign
        value = self.coeff(ordered)
        return value if sign == 1 else vscale(sign, value)

    def evaluate(self, vectors) -> Vector:
        """Multilinear evaluation on arbitrary coordinate vectors."""
        vectors = list(vectors)
        if len(vectors) != self.arity:
            raise ValueError("wrong number of arguments")
        if self.arity == 0:
            return self.values[0]
        out = vzero(self.target_dim)
        for indices, minor in wedge_coords(vectors, self.source_dim).items():
            out = vadd(out, vscale(minor, self.coeff(indices)))
        return out

    def _require_like(self, other: "Cochain") -> None:
        if (self.arity, self.source_dim, self.target_dim) != (
                other.arity, other.source_dim, other.target_dim):
            raise ValueError("cochain shape mismatch")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._require_like(other)
        return Cochain(self.arity, self.source_dim, self.target_dim,
                       tuple(vadd(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._require_like(other)
        return Cochain(self.arity, self.source_dim, self.target_dim,
                       tuple(vsub(a, b) for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def scale(self, c) -> "Cochain":
        c = Q(c)
        return Cochain(self.arity, self.source_dim, self.target_dim,
                       tuple(vscale(c, v) for v in self.values))

    def is_zero(self) -> bool:
        return all(is_zero_vector(v) for v in self.values)

    def to_flat(self) -> Vector:
        """Concatenation of the coefficient vectors, combinations order."""
        out = []
        for v in self.values:
            out.extend(v)
        return tuple(out)

    @classmethod
    def from_flat(cls, arity, source_dim, target_dim, flat) -> "Cochain":
        count = len(increasing_tuples(source_dim, arity))
        if len(flat) != count * target_dim:
            raise ValueError("flat vector has the wrong length")
        values = tuple(
            tuple(flat[p * target_dim + t] for t in range(target_dim))
            for p in range(count)
        )
        return cls(arity, source_dim, target_dim, values)


def is_twist_compatible(f: Cochain, sigma: Matrix, tau: Matrix) -> bool:
    """Whether f(sigma v_1, ..., sigma v_n) = tau(f(v_1, ..., v_n))."""
    for indices in f.index_tuples:
        args = [sigma.column(i) for i in indices]
        if f.evaluate(args) != tau.apply(f.coeff(indices)):
            return False
    return True


@dataclass(frozen=True)
class ComplexDescriptor:
    """One direction of the cohomology machinery.

    source is the algebra whose wedge powers index the cochains; coeff is
    a representation of source providing the values, the action, and the
    coefficient twist.  The source twist is source.alpha, the coefficient
    twist is coeff.beta.
    """

    source: HomLieAlgebra
    coeff: Representation

    def __post_init__(self):
        if self.coeff.algebra is not self.source and self.coeff.algebra != self.source:
            raise ValueError("the coefficients must represent the source algebra")

    @classmethod
    def for_representation(cls, rep: Representation) -> "ComplexDescriptor":
        return cls(source=rep.algebra, coeff=rep)

    @property
    def source_dim(self) -> int:
        return self.source.dim

    @property
    def target_dim(self) -> int:
        return self.coeff.dim

    @property
    def is_regular(self) -> bool:
        return (self.source.alpha.is_invertible()
                and self.coeff.beta.is_invertible())

    def zero(self, arity: int) -> Cochain:
        return Cochain.zero(arity, self.source_dim, self.target_dim)


def compatible_maps_basis(sigma: Matrix, tau: Matrix, arity: int) -> list:
    """Canonical basis of the alternating maps f with f . sigma^n = tau . f.

    Solves the linear system f(sigma e_I) = tau(f(e_I)) over the flat
    coordinates; the deterministic kernel basis makes the result stable.
    """
    sd, td = sigma.nrows, tau.nrows
    tuples = increasing_tuples(sd, arity)
    if not tuples:
        return []
    columns_of_sigma = [sigma.column(i) for i in range(sd)]
    nflat = len(tuples) * td
    rows = []
    for p, indices in enumerate(tuples):
        minors = wedge_coords([columns_of_sigma[i] for i in indices], sd)
        for t in range(td):
            row = [Q(0)] * nflat
            for q, other in enumerate(tuples):
                minor = minors.get(other)
                if minor:
                    row[q * td + t] += minor
            for u in range(td):
                row[p * td + u] -= tau.entry(t, u)
            rows.append(tuple(row))
    kernel = Matrix(tuple(rows), ncols=nflat).kernel_basis()
    return [Cochain.from_flat(arity, sd, td, v) for v in kernel]


def compatible_subspace_basis(desc: ComplexDescriptor, arity: int) -> list:
    """Canonical basis of the twist-compatible arity-cochains of desc."""
    if arity == 0:
        return [Cochain(0, desc.source_dim, desc.target_dim, (w,))
                for w in zero_fixed_point_basis(desc)]
    return compatible_maps_basis(desc.source.alpha, desc.coeff.beta, arity)


def zero_fixed_point_basis(desc: ComplexDescriptor) -> list:
    """Basis of C^0: the fixed points of the coefficient twist."""
    tau = desc.coeff.beta
    return (tau - Matrix.identity(desc.target_dim)).kernel_basis()


def zero_coboundary(desc: ComplexDescriptor, w: Vector) -> Cochain:
    """delta_0 on a fixed point of the coefficient twist (regular only)."""
    if not desc.source.alpha.is_invertible():
        raise ValueError("the degree-zero coboundary needs an invertible twist")
    if desc.coeff.beta.apply(w) != tuple(Q(c) for c in w):
        raise ValueError("delta_0 is only defined on fixed points of the twist")
    sigma_inv = desc.source.alpha.inverse()
    w = tuple(Q(c) for c in w)
    values = tuple(
        desc.coeff.act(sigma_inv.column(j), w) for j in range(desc.source_dim)
    )
    return Cochain(1, desc.source_dim, desc.target_dim, values)


def coboundary(desc: ComplexDescriptor, f: Cochain) -> Cochain:
    """The coboundary of f; arity-0 inputs route through delta_0."""
    if (f.source_dim, f.target_dim) != (desc.source_dim, desc.target_dim):
        raise ValueError("cochain does not live on this complex")
    if f.arity == 0:
        return zero_coboundary(desc, f.values[0])
    g = desc.source
    n = f.arity
    alpha_nm1 = g.alpha_power(n - 1)
    alpha_cols = [g.alpha.column(i) for i in range(g.dim)]
    values = []
    for indices in increasing_tuples(g.dim, n + 1):
        total = vzero(desc.target_dim)
        for pos in range(n + 1):
            rest = indices[:pos] + indices[pos + 1:]
            inner = f.coeff(rest)
            if is_zero_vector(inner):
                continue
            actor = alpha_nm1.column(indices[pos])
            term = desc.coeff.act(actor, inner)
            total = vadd(total, term if pos % 2 == 0 else vscale(-1, term))
        for pi in range(n + 1):
            for pj in range(pi + 1, n + 1):
                bracket = g.bracket_basis(indices[pi], indices[pj])
                if is_zero_vector(bracket):
                    continue
                args = [bracket] + [
                    alpha_cols[indices[k]]
                    for k in range(n + 1) if k != pi and k != pj
                ]
                term = f.evaluate(args)
                total = vadd(total,
                             term if (pi + pj) % 2 == 0 else vscale(-1, term))
        values.append(total)
    return Cochain(n + 1, g.dim, desc.target_dim, tuple(values))


@lru_cache(maxsize=None)
def coboundary_matrix(desc: ComplexDescriptor, arity: int) -> Matrix:
    """Matrix of the coboundary on full flat coordinates (arity >= 1)."""
    if arity < 1:
        raise ValueError("the matrix form starts at arity 1")
    sd, td = desc.source_dim, desc.target_dim
    ncols = len(increasing_tuples(sd, arity)) * td
    nrows = len(increasing_tuples(sd, arity + 1)) * td
    columns = []
    for k in range(ncols):
        unit = Cochain.from_flat(arity, sd, td, basis_vector(ncols, k))
        columns.append(coboundary(desc, unit).to_flat())
    return Matrix.from_columns(columns, nrows=nrows)


def compatible_inclusion(desc: ComplexDescriptor, arity: int) -> Matrix:
    """Columns are the flat coordinates of the compatible basis."""
    sd, td = desc.source_dim, desc.target_dim
    nrows = len(increasing_tuples(sd, arity)) * td
    basis = compatible_subspace_basis(desc, arity)
    return Matrix.from_columns([b.to_flat() for b in basis], nrows=nrows)


@dataclass(frozen=True)
class CohomologyDims:
    arity: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int

    @property
    def dim_h(self) -> int:
        return self.dim_cocycles - self.dim_coboundaries


def _restricted_rank(desc: ComplexDescriptor, arity: int) -> tuple:
    """(number of compatible basis cochains, rank of delta on them)."""
    basis = compatible_subspace_basis(desc, arity)
    if not basis:
        return 0, 0
    images = [coboundary(desc, b).to_flat() for b in basis]
    height = len(images[0])
    if height == 0:
        return len(basis), 0
    return len(basis), Matrix.from_columns(images, nrows=height).rank()


def cohomology_dims(desc: ComplexDescriptor, arity: int) -> CohomologyDims:
    """Exact dimensions of cochains, cocycles, coboundaries and H^n.

    For a regular descriptor the complex is extended by the degree-zero
    piece, so coboundaries in degree one include the image of delta_0.
    For a non-regular one the complex starts at arity 1 and degree zero
    reports zeros.
    """
    if arity < 0:
        raise ValueError("negative arity")
    extended = desc.is_regular
    if arity == 0:
        if not extended:
            return CohomologyDims(0, 0, 0, 0)
        basis = compatible_subspace_basis(desc, 0)
        count = len(basis)
        if count == 0:
            return CohomologyDims(0, 0, 0, 0)
        images = [coboundary(desc, b).to_flat() for b in basis]
        rank = Matrix.from_columns(images, nrows=len(images[0])).rank()
        return CohomologyDims(0, count, count - rank, 0)
    count, rank_out = _restricted_rank(desc, arity)
    cocycles = count - rank_out
    if arity == 1:
        if extended:
            basis0 = compatible_subspace_basis(desc, 0)
            if basis0:
                images = [coboundary(desc, b).to_flat() for b in basis0]
                boundaries = Matrix.from_columns(
                    images, nrows=len(images[0])).rank()
            else:
                boundaries = 0
        else:
            boundaries = 0
    else:
        _, boundaries = _restricted_rank(desc, arity - 1)
    return CohomologyDims(arity, count, cocycles, boundaries)
