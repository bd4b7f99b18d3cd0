"""Compositions, partitions, contingency matrices, and gl_n weight data.

Compositions, partitions and weight vectors are plain integer tuples;
contingency matrices are tuples of row tuples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from .errors import DomainError, UnsupportedError


def degree(seq) -> int:
    return sum(seq)


def is_composition(seq) -> bool:
    return all(isinstance(p, int) and p >= 0 for p in seq)


def is_partition(seq) -> bool:
    if any(p <= 0 for p in seq):
        return False
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def kappa(seq) -> tuple[int, ...]:
    """Strip zero entries, preserving order."""
    if any(p < 0 for p in seq):
        raise DomainError(f"negative entry in {seq}")
    return tuple(p for p in seq if p != 0)


def dominating_partition(seq) -> tuple[int, ...]:
    """The decreasing rearrangement of kappa(seq)."""
    return tuple(sorted(kappa(seq), reverse=True))


def multinomial(parts) -> int:
    """Number of set dissections with the given nonnegative cell sizes."""
    n = factorial(sum(parts))
    for p in parts:
        n //= factorial(p)
    return n


def compositions(d: int, length: int):
    """All length-tuples of nonnegative integers summing to d, lex order."""
    if length == 0:
        if d == 0:
            yield ()
        return
    if length == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in compositions(d - first, length - 1):
            yield (first,) + rest


def partitions(d: int, max_length: int | None = None):
    """All partitions of d (optionally with bounded length), decreasing lex."""

    def gen(remaining, largest, length_left):
        if remaining == 0:
            yield ()
            return
        if length_left == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first, length_left - 1):
                yield (first,) + rest

    cap = d if max_length is None else max_length
    yield from gen(d, d, cap)


def enumerate_contingency(lam, mu) -> list[tuple[tuple[int, ...], ...]]:
    """All nonnegative matrices with row sums lam and column sums mu.

    Ordered by decreasing lexicographic order of the row-major flattening,
    which reproduces the order the worked examples are listed in.
    """
    if sum(lam) != sum(mu):
        raise DomainError(f"degree mismatch: |{lam}| != |{mu}|")
    m, n = len(lam), len(mu)
    results = []

    def fill_rows(i, col_remaining, acc):
        if i == m:
            if all(c == 0 for c in col_remaining):
                results.append(tuple(acc))
            return
        for row in _bounded_rows(lam[i], col_remaining):
            fill_rows(i + 1, [col_remaining[j] - row[j] for j in range(n)],
                      acc + [row])

    def _bounded_rows(total, bounds):
        # rows of length n summing to `total`, entry j <= bounds[j],
        # generated in decreasing lex order
        out = []

        def rec(j, left, row):
            if j == len(bounds):
                if left == 0:
                    out.append(tuple(row))
                return
            for v in range(min(left, bounds[j]), -1, -1):
                rec(j + 1, left - v, row + [v])

        rec(0, total, [])
        return out

    fill_rows(0, list(mu), [])
    results.sort(key=lambda a: tuple(-x for row in a for x in row))
    return results


def flatten_matrix(a) -> tuple[int, ...]:
    """Row-major flattening (A_11, A_12, ..., A_mn)."""
    return tuple(x for row in a for x in row)


def transpose_matrix(a):
    return tuple(zip(*a))


@lru_cache(maxsize=None)
def gl_irrep_dimension(lam: tuple[int, ...], n: int) -> int:
    """Number of semistandard tableaux of shape lam with entries in 1..n.

    Counted by direct backtracking; returns 0 when the shape has more than
    n rows.
    """
    if not is_partition(lam):
        raise DomainError(f"{lam} is not a partition")
    if len(lam) > n:
        return 0
    if not lam:
        return 1
    count = 0
    rows = len(lam)

    def fill(r, c, tableau):
        nonlocal count
        if r == rows:
            count += 1
            return
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, tableau[r][c - 1])          # weakly increasing rows
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)      # strictly increasing cols
        for v in range(lo, n + 1):
            tableau[r][c] = v
            fill(nr, nc, tableau)
        tableau[r][c] = 0

    fill(0, 0, [[0] * lam[r] for r in range(rows)])
    return count


def dominates(lam, mu) -> bool:
    """Dominance order on partitions of equal degree: lam >= mu."""
    if sum(lam) != sum(mu):
        return False
    pa = pb = 0
    for i in range(max(len(lam), len(mu))):
        pa += lam[i] if i < len(lam) else 0
        pb += mu[i] if i < len(mu) else 0
        if pa < pb:
            return False
    return True


@lru_cache(maxsize=None)
def gl_weights_of_irrep(lam: tuple[int, ...], n: int) -> frozenset:
    """Weight set of the irreducible gl_n module with polynomial highest
    weight lam: all nonnegative mu of the same degree whose decreasing
    rearrangement is dominated by lam.
    """
    if any(p < 0 for p in lam):
        raise UnsupportedError("only polynomial (partition) highest weights")
    if not is_partition(tuple(p for p in lam if p)):
        raise DomainError(f"{lam} is not a partition")
    key = dominating_partition(lam)
    if len(key) > n:
        return frozenset()
    d = sum(lam)
    out = set()
    for mu in compositions(d, n):
        if dominates(key, dominating_partition(mu)):
            out.add(mu)
    return frozenset(out)


def weight_orbit(mu) -> set:
    """Coordinate-permutation orbit of a weight vector."""
    return set(permutations(mu))


def schur_algebra_dimension(n: int, d: int) -> int:
    """C(n^2 + d - 1, d), the dimension of End_{S_d}(tensor^d C^n)."""
    return comb(n * n + d - 1, d)
