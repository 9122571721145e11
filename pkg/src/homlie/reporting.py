"""Structured check results shared by the verifier functions.

Every verifier in this package reports failures instead of raising, so a
failing structure can be diagnosed from the CLI.  A Failure pins down one
violated identity: the law's machine name, the basis indices where it
breaks, and the two evaluated sides (coordinate tuples, exact rationals).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Vector


@dataclass(frozen=True)
class Failure:
    """One violated identity at one basis tuple."""

    law: str
    indices: tuple
    lhs: Vector | None = None
    rhs: Vector | None = None

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        if self.lhs is None and self.rhs is None:
            return f"{self.law} fails at ({where})"
        return f"{self.law} fails at ({where}): lhs={self.lhs} rhs={self.rhs}"


def matrix_failures(law: str, index: tuple, lhs, rhs) -> list:
    """Compare two matrices, reporting one Failure per differing column.

    The column index is appended to the given base index so the failure
    names the exact basis vector on which the two operators disagree.
    """
    failures = []
    for j in range(lhs.ncols):
        left = lhs.column(j)
        right = rhs.column(j)
        if left != right:
            failures.append(Failure(law, index + (j,), left, right))
    return failures
