"""Alternating multilinear combinatorics.

Alternating k-linear maps are stored by their values on strictly
increasing basis index tuples.  Evaluating such a map on arbitrary
vectors expands the wedge of the arguments in the basis: the coefficient
of e_{i1} ^ ... ^ e_{ik} is the k x k minor of the argument coordinates
in rows i1 < ... < ik (a Plucker coordinate).

Shuffle permutations are produced by choosing which argument positions
feed each block; the sign of a shuffle is the parity of the number of
inversions between blocks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .linalg import Matrix, Q, Vector


def increasing_tuples(dim: int, k: int) -> list:
    """All strictly increasing k-tuples drawn from range(dim), in order."""
    return [tuple(c) for c in combinations(range(dim), k)]


def sort_with_sign(indices: Sequence[int]) -> tuple | None:
    """Sort an index tuple, tracking the permutation sign.

    Returns (sorted_tuple, sign) or None when two indices coincide, in
    which case the corresponding alternating value is zero.
    """
    items = list(indices)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and items[j - 1] == items[j]:
            return None
    return tuple(items), sign


def wedge_coords(vectors: Sequence[Vector], dim: int) -> dict:
    """Coordinates of v1 ^ ... ^ vk on increasing basis tuples.

    The value at tuple I is det of the k x k submatrix of argument
    coordinates with rows I; zero values are omitted.
    """
    k = len(vectors)
    coords = {}
    for index in combinations(range(dim), k):
        minor = Matrix(
            tuple(tuple(vectors[c][i] for c in range(k)) for i in index),
            ncols=k,
        )
        value = minor.det()
        if value != 0:
            coords[index] = value
    return coords


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct integers."""
    sign = 1
    items = list(perm)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def shuffles(p: int, q: int) -> Iterator[tuple]:
    """(p, q)-shuffles of range(p + q) with signs.

    Yields (positions, sign) where positions is the full permutation
    (first block of length p increasing, then the complementary block,
    also increasing) and sign is its permutation sign.
    """
    universe = range(p + q)
    for first in combinations(universe, p):
        chosen = set(first)
        rest = tuple(i for i in universe if i not in chosen)
        perm = first + rest
        yield perm, permutation_sign(perm)


def multi_shuffles(block_sizes: Sequence[int]) -> Iterator[tuple]:
    """Shuffles of range(sum(sizes)) into consecutive increasing blocks.

    Yields (permutation, sign) where the permutation lists the positions
    assigned to block 1, then block 2, and so on, each block increasing.
    """
    total = sum(block_sizes)

    def rec(remaining: tuple, sizes: Sequence[int]) -> Iterator[tuple]:
        if not sizes:
            yield ()
            return
        head, *tail = sizes
        for chosen in combinations(remaining, head):
            chosen_set = set(chosen)
            rest = tuple(i for i in remaining if i not in chosen_set)
            for suffix in rec(rest, tail):
                yield chosen + suffix

    for perm in rec(tuple(range(total)), block_sizes):
        yield perm, permutation_sign(perm)
