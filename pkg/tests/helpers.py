"""Shared test utilities: random rational data and independent oracles.

The oracles here deliberately avoid the package's Matrix and dataclass
machinery; they work on nested lists of Fractions so that agreement
between package verdicts and oracle verdicts is meaningful evidence.
"""

from __future__ import annotations

from fractions import Fraction

from homlie.linalg import Matrix

DENOMS = (1, 1, 1, 2, 3)


def rand_scalar(rng, lo=-2, hi=2) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(DENOMS))


def rand_vector(rng, n, lo=-2, hi=2) -> tuple:
    return tuple(rand_scalar(rng, lo, hi) for _ in range(n))


def rand_matrix(rng, nrows, ncols, lo=-2, hi=2) -> Matrix:
    return Matrix(tuple(rand_vector(rng, ncols, lo, hi)
                        for _ in range(nrows)), ncols=ncols)


def rand_invertible(rng, n, lo=-2, hi=2) -> Matrix:
    while True:
        m = rand_matrix(rng, n, n, lo, hi)
        if m.det() != 0:
            return m


# ---------------------------------------------------------------------------
# Independent oracles on plain nested lists.
#
# A bracket table is a dict {(i, j): list-of-Fractions} for i < j; alpha
# and rho matrices are lists of rows; vectors are lists.


def _tbl_bracket(table, dim, i, j):
    if i == j:
        return [Fraction(0)] * dim
    if i < j:
        value = table.get((i, j))
        return list(value) if value is not None else [Fraction(0)] * dim
    value = table.get((j, i))
    if value is None:
        return [Fraction(0)] * dim
    return [-c for c in value]


def _mat_apply(rows, vec):
    return [sum((r * v for r, v in zip(row, vec)), Fraction(0)) for row in rows]


def _lin_bracket(table, dim, u, v):
    out = [Fraction(0)] * dim
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            for k, c in enumerate(_tbl_bracket(table, dim, i, j)):
                out[k] += a * b * c
    return out


def oracle_hom_lie(table, alpha_rows, dim):
    """(multiplicative_ok, jacobi_ok, failing_pairs, failing_triples)."""
    alpha_cols = [[row[i] for row in alpha_rows] for i in range(dim)]
    bad_pairs = []
    for i in range(dim):
        for j in range(i + 1, dim):
            lhs = _mat_apply(alpha_rows, _tbl_bracket(table, dim, i, j))
            rhs = _lin_bracket(table, dim, alpha_cols[i], alpha_cols[j])
            if lhs != rhs:
                bad_pairs.append((i, j))
    bad_triples = []
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                total = [Fraction(0)] * dim
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = _tbl_bracket(table, dim, b, c)
                    part = _lin_bracket(table, dim, alpha_cols[a], inner)
                    for p, val in enumerate(part):
                        total[p] += val
                if any(x != 0 for x in total):
                    bad_triples.append((i, j, k))
    return not bad_pairs, not bad_triples, bad_pairs, bad_triples


def oracle_representation(table, alpha_rows, dim, beta_rows, rho_list, vdim):
    """(axiom1_ok, axiom2_ok) for the two representation laws."""
    alpha_cols = [[row[i] for row in alpha_rows] for i in range(dim)]

    def rho_of(x):
        out = [[Fraction(0)] * vdim for _ in range(vdim)]
        for i, c in enumerate(x):
            if c == 0:
                continue
            for r in range(vdim):
                for s in range(vdim):
                    out[r][s] += c * rho_list[i][r][s]
        return out

    def mat_mul(a, b):
        return [[sum((a[r][t] * b[t][s] for t in range(vdim)), Fraction(0))
                 for s in range(vdim)] for r in range(vdim)]

    axiom1 = True
    for i in range(dim):
        lhs = mat_mul(rho_of(alpha_cols[i]), beta_rows)
        rhs = mat_mul(beta_rows, rho_list[i])
        if lhs != rhs:
            axiom1 = False
    axiom2 = True
    for i in range(dim):
        for j in range(i + 1, dim):
            lhs = mat_mul(rho_of(_tbl_bracket(table, dim, i, j)), beta_rows)
            a = mat_mul(rho_of(alpha_cols[i]), rho_list[j])
            b = mat_mul(rho_of(alpha_cols[j]), rho_list[i])
            rhs = [[a[r][s] - b[r][s] for s in range(vdim)]
                   for r in range(vdim)]
            if lhs != rhs:
                axiom2 = False
    return axiom1, axiom2


def algebra_tables(g):
    """Extract plain-list tables from a HomLieAlgebra for the oracles."""
    table = {k: list(v) for k, v in g.brackets_dict().items()}
    alpha_rows = [list(row) for row in g.alpha.rows]
    return table, alpha_rows


def rep_tables(rep):
    beta_rows = [list(row) for row in rep.beta.rows]
    rho_list = [[list(row) for row in m.rows] for m in rep.rho]
    return beta_rows, rho_list
