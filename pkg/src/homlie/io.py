"""JSON interchange for algebras, representations, operators, cochains,
deformations, and skew two-tensors.

All indices in the JSON formats are 0-based.  Scalars are JSON integers
or strings "p" / "p/q"; floats are rejected so every load stays exact.

    algebra      {"dim": 2, "basis": ["e1", "e2"],
                  "alpha": [["1", "0"], ["0", "1"]],
                  "brackets": {"0,1": ["0", "1"]}}
    rep          {"algebra": <path or inline algebra>,
                  "beta": [[...]], "rho": [<one matrix per basis element>]}
    operator     {"matrix": [[...]]}
    vector       {"vector": [...]}
    cochain      {"arity": 2, "source": "g" | "V",
                  "coeffs": {"0,1": [...]}}
    deformation  {"base": <operator or bare rows>, "terms": [...],
                  "order": 2}
    two-tensor   {"wedge": {"0,1": "1/2"}, "dim": 2}

Unknown keys are rejected.  Schema violations raise SchemaError, a
ValueError subclass, so callers can treat malformed input and domain
errors uniformly.
"""

from __future__ import annotations

import dataclasses
import json
import os

from .cochain import Cochain
from .deformation import TruncatedDeformation
from .linalg import Matrix, Q, format_scalar, parse_scalar
from .reporting import Failure
from .rmatrix import WedgeTwoTensor
from .structures import HomLieAlgebra, Representation
from .ooperator import HomPreLie


class SchemaError(ValueError):
    """Raised when a JSON document does not match the expected format."""


def _require_keys(data: dict, required: tuple, optional: tuple,
                  where: str) -> None:
    if not isinstance(data, dict):
        raise SchemaError(f"{where}: expected a JSON object")
    for key in required:
        if key not in data:
            raise SchemaError(f"{where}: missing key {key!r}")
    allowed = set(required) | set(optional)
    for key in data:
        if key not in allowed:
            raise SchemaError(f"{where}: unknown key {key!r}")


def _scalar(value, where: str):
    if isinstance(value, bool):
        raise SchemaError(f"{where}: booleans are not scalars")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ValueError as exc:
            raise SchemaError(f"{where}: {exc}") from None
    if isinstance(value, float):
        raise SchemaError(
            f"{where}: floats are not exact; write the value as a string")
    raise SchemaError(f"{where}: cannot read {value!r} as a scalar")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer")
    return value


def _vector(obj, where: str) -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: expected a list of scalars")
    return tuple(_scalar(x, f"{where}[{k}]") for k, x in enumerate(obj))


def _matrix(obj, where: str) -> Matrix:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(f"{where}: expected a non-empty list of rows")
    rows = [_vector(row, f"{where}[{k}]") for k, row in enumerate(obj)]
    ncols = len(rows[0])
    for k, row in enumerate(rows):
        if len(row) != ncols:
            raise SchemaError(f"{where}: row {k} has a different length")
    return Matrix(tuple(rows), ncols=ncols)


def _index_key(key: str, where: str, arity: int | None = None) -> tuple:
    if not isinstance(key, str):
        raise SchemaError(f"{where}: keys must be strings of indices")
    if key == "":
        parts = ()
    else:
        try:
            parts = tuple(int(p.strip()) for p in key.split(","))
        except ValueError:
            raise SchemaError(
                f"{where}: key {key!r} is not a comma-separated index tuple"
            ) from None
    if arity is not None and len(parts) != arity:
        raise SchemaError(f"{where}: key {key!r} does not have {arity} indices")
    if any(p < 0 for p in parts):
        raise SchemaError(f"{where}: key {key!r} has a negative index")
    return parts


def algebra_from_dict(data, where: str = "algebra") -> HomLieAlgebra:
    _require_keys(data, ("dim",), ("basis", "alpha", "brackets"), where)
    dim = _int(data["dim"], f"{where}.dim")
    if dim <= 0:
        raise SchemaError(f"{where}.dim: must be positive")
    basis = data.get("basis")
    if basis is not None:
        if (not isinstance(basis, list) or len(basis) != dim
                or not all(isinstance(b, str) for b in basis)):
            raise SchemaError(f"{where}.basis: expected {dim} names")
    alpha = data.get("alpha")
    if alpha is not None:
        alpha = _matrix(alpha, f"{where}.alpha")
    brackets = {}
    raw = data.get("brackets", {})
    if not isinstance(raw, dict):
        raise SchemaError(f"{where}.brackets: expected an object")
    for key, value in raw.items():
        i, j = _index_key(key, f"{where}.brackets", arity=2)
        if not (0 <= i < j < dim):
            raise SchemaError(
                f"{where}.brackets: key {key!r} needs 0 <= i < j < dim")
        vec = _vector(value, f"{where}.brackets[{key!r}]")
        if len(vec) != dim:
            raise SchemaError(
                f"{where}.brackets[{key!r}]: expected {dim} entries")
        brackets[(i, j)] = vec
    try:
        return HomLieAlgebra.build(dim=dim, brackets=brackets, alpha=alpha,
                                   basis=basis)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def algebra_to_dict(g: HomLieAlgebra) -> dict:
    brackets = {}
    for (i, j), value in sorted(g.brackets_dict().items()):
        brackets[f"{i},{j}"] = [format_scalar(c) for c in value]
    return {
        "dim": g.dim,
        "basis": list(g.basis),
        "alpha": matrix_to_rows(g.alpha),
        "brackets": brackets,
    }


def rep_from_dict(data, base_dir: str = ".", where: str = "rep"
                  ) -> Representation:
    _require_keys(data, ("algebra", "rho"), ("beta", "basis"), where)
    raw_algebra = data["algebra"]
    if isinstance(raw_algebra, str):
        path = raw_algebra
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        g = load_algebra(path)
    else:
        g = algebra_from_dict(raw_algebra, where=f"{where}.algebra")
    raw_rho = data["rho"]
    if not isinstance(raw_rho, list) or len(raw_rho) != g.dim:
        raise SchemaError(
            f"{where}.rho: expected one matrix per algebra basis element")
    rho = [_matrix(m, f"{where}.rho[{k}]") for k, m in enumerate(raw_rho)]
    if rho:
        vdim = rho[0].nrows
        for k, m in enumerate(rho):
            if m.shape != (vdim, vdim):
                raise SchemaError(f"{where}.rho[{k}]: expected a "
                                  f"{vdim} x {vdim} matrix")
    elif "beta" not in data:
        raise SchemaError(f"{where}: beta is required when rho is empty")
    beta = data.get("beta")
    if beta is None:
        beta = Matrix.identity(rho[0].nrows)
    else:
        beta = _matrix(beta, f"{where}.beta")
        if not beta.is_square():
            raise SchemaError(f"{where}.beta: expected a square matrix")
    basis = data.get("basis")
    if basis is not None:
        if (not isinstance(basis, list) or len(basis) != beta.nrows
                or not all(isinstance(b, str) for b in basis)):
            raise SchemaError(f"{where}.basis: expected {beta.nrows} names")
    for k, m in enumerate(rho):
        if m.shape != (beta.nrows, beta.nrows):
            raise SchemaError(f"{where}.rho[{k}]: shape does not match beta")
    return Representation.build(algebra=g, beta=beta, rho=tuple(rho),
                                basis=basis)


def rep_to_dict(rep: Representation) -> dict:
    return {
        "algebra": algebra_to_dict(rep.algebra),
        "basis": list(rep.basis),
        "beta": matrix_to_rows(rep.beta),
        "rho": [matrix_to_rows(m) for m in rep.rho],
    }


def operator_from_dict(data, where: str = "operator") -> Matrix:
    _require_keys(data, ("matrix",), (), where)
    return _matrix(data["matrix"], f"{where}.matrix")


def vector_from_dict(data, where: str = "vector") -> tuple:
    _require_keys(data, ("vector",), (), where)
    return _vector(data["vector"], f"{where}.vector")


def cochain_from_dict(data, g: HomLieAlgebra, module_dim: int,
                      where: str = "cochain") -> Cochain:
    """Read a cochain; "source": "g" takes module values on the algebra,
    "V" takes algebra values on the module (the operator complex)."""
    _require_keys(data, ("arity", "source", "coeffs"), (), where)
    arity = _int(data["arity"], f"{where}.arity")
    if arity < 0:
        raise SchemaError(f"{where}.arity: must be non-negative")
    source = data["source"]
    if source == "g":
        source_dim, target_dim = g.dim, module_dim
    elif source == "V":
        source_dim, target_dim = module_dim, g.dim
    else:
        raise SchemaError(f'{where}.source: expected "g" or "V"')
    raw = data["coeffs"]
    if not isinstance(raw, dict):
        raise SchemaError(f"{where}.coeffs: expected an object")
    entries = {}
    for key, value in raw.items():
        indices = _index_key(key, f"{where}.coeffs", arity=arity)
        if any(not 0 <= p < source_dim for p in indices):
            raise SchemaError(f"{where}.coeffs: key {key!r} is out of range")
        if any(indices[k] >= indices[k + 1] for k in range(len(indices) - 1)):
            raise SchemaError(
                f"{where}.coeffs: key {key!r} must be strictly increasing")
        vec = _vector(value, f"{where}.coeffs[{key!r}]")
        if len(vec) != target_dim:
            raise SchemaError(
                f"{where}.coeffs[{key!r}]: expected {target_dim} entries")
        entries[indices] = vec
    return Cochain.from_values(arity=arity, source_dim=source_dim,
                               target_dim=target_dim, entries=entries)


def cochain_to_dict(c: Cochain, source: str) -> dict:
    coeffs = {}
    for indices in c.index_tuples:
        value = c.coeff(indices)
        if any(x != 0 for x in value):
            coeffs[",".join(str(i) for i in indices)] = [
                format_scalar(x) for x in value]
    return {"arity": c.arity, "source": source, "coeffs": coeffs}


def _operator_like(obj, where: str) -> Matrix:
    if isinstance(obj, dict):
        return operator_from_dict(obj, where)
    return _matrix(obj, where)


def deformation_from_dict(data, where: str = "deformation"
                          ) -> TruncatedDeformation:
    _require_keys(data, ("base",), ("terms", "order"), where)
    base = _operator_like(data["base"], f"{where}.base")
    raw_terms = data.get("terms", [])
    if not isinstance(raw_terms, list):
        raise SchemaError(f"{where}.terms: expected a list")
    terms = [_operator_like(t, f"{where}.terms[{k}]")
             for k, t in enumerate(raw_terms)]
    if "order" in data:
        order = _int(data["order"], f"{where}.order")
        if order != len(terms):
            raise SchemaError(
                f"{where}.order: {order} does not match {len(terms)} terms")
    try:
        return TruncatedDeformation.of(base, terms)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def deformation_to_dict(d: TruncatedDeformation) -> dict:
    return {
        "base": {"matrix": matrix_to_rows(d.base)},
        "terms": [{"matrix": matrix_to_rows(t)} for t in d.terms],
        "order": d.order,
    }


def rmatrix_from_dict(data, dim: int | None = None,
                      where: str = "two-tensor") -> WedgeTwoTensor:
    _require_keys(data, ("wedge",), ("dim",), where)
    if "dim" in data:
        declared = _int(data["dim"], f"{where}.dim")
        if dim is not None and declared != dim:
            raise SchemaError(
                f"{where}.dim: {declared} does not match the expected {dim}")
        dim = declared
    if dim is None:
        raise SchemaError(f"{where}: no dimension available; add a "
                          f'"dim" key or pass one explicitly')
    raw = data["wedge"]
    if not isinstance(raw, dict):
        raise SchemaError(f"{where}.wedge: expected an object")
    entries = {}
    for key, value in raw.items():
        i, j = _index_key(key, f"{where}.wedge", arity=2)
        if not (0 <= i < j < dim):
            raise SchemaError(
                f"{where}.wedge: key {key!r} needs 0 <= i < j < dim")
        entries[(i, j)] = _scalar(value, f"{where}.wedge[{key!r}]")
    return WedgeTwoTensor.from_dict(dim, entries)


def rmatrix_to_dict(r: WedgeTwoTensor) -> dict:
    return {
        "dim": r.dim,
        "wedge": {f"{i},{j}": format_scalar(q) for (i, j), q in r.coeffs},
    }


def matrix_to_rows(m: Matrix) -> list:
    return [[format_scalar(x) for x in row] for row in m.rows]


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from None


def load_algebra(path: str) -> HomLieAlgebra:
    return algebra_from_dict(load_json(path), where=path)


def load_rep(path: str) -> Representation:
    return rep_from_dict(load_json(path), base_dir=os.path.dirname(path) or ".",
                         where=path)


def load_operator(path: str) -> Matrix:
    return operator_from_dict(load_json(path), where=path)


def load_vector(path: str) -> tuple:
    return vector_from_dict(load_json(path), where=path)


def load_deformation(path: str) -> TruncatedDeformation:
    return deformation_from_dict(load_json(path), where=path)


def load_rmatrix(path: str, dim: int | None = None) -> WedgeTwoTensor:
    return rmatrix_from_dict(load_json(path), dim=dim, where=path)


def jsonable(value):
    """Convert package values into JSON-serializable structures."""
    if isinstance(value, Matrix):
        return matrix_to_rows(value)
    if isinstance(value, Q):
        return format_scalar(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, Failure):
        return str(value)
    if isinstance(value, HomLieAlgebra):
        return algebra_to_dict(value)
    if isinstance(value, Representation):
        return rep_to_dict(value)
    if isinstance(value, WedgeTwoTensor):
        return rmatrix_to_dict(value)
    if isinstance(value, TruncatedDeformation):
        return deformation_to_dict(value)
    if isinstance(value, HomPreLie):
        return {
            "dim": value.dim,
            "basis": list(value.basis),
            "twist": matrix_to_rows(value.twist),
            "products": {
                f"{i},{j}": [format_scalar(x) for x in value.table[i][j]]
                for i in range(value.dim) for j in range(value.dim)
            },
        }
    if isinstance(value, Cochain):
        return cochain_to_dict(value, source="")
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: jsonable(getattr(value, f.name))
                for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        out = {}
        for key, inner in value.items():
            if isinstance(key, tuple):
                key = ",".join(str(k) for k in key)
            out[str(key)] = jsonable(inner)
        return out
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot convert {type(value).__name__} to JSON")
