"""Partitions, GL-weights, and Schur-functor dimension calculus.

A GL(n) dominant weight is a weakly decreasing integer tuple of length n
(negative entries allowed: rational representations).  Dimensions come from
the Weyl dimension formula for GL, which is exact for any dominant weight.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, List, Sequence, Tuple

Weight = Tuple[int, ...]


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def is_partition(w: Sequence[int]) -> bool:
    return is_dominant(w) and all(x >= 0 for x in w)


def conjugate(partition: Sequence[int]) -> Tuple[int, ...]:
    parts = [x for x in partition if x > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def partitions_bounded(max_parts: int, max_size: int) -> Iterator[Tuple[int, ...]]:
    """All partitions with at most `max_parts` parts and |lambda| <= max_size,
    emitted in increasing size then lexicographic order."""

    def gen(remaining: int, parts_left: int, cap: int) -> Iterator[Tuple[int, ...]]:
        yield ()
        if parts_left == 0 or remaining == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    seen = sorted(set(gen(max_size, max_parts, max_size)), key=lambda p: (sum(p), p))
    return iter(seen)


def schur_dim(w: Sequence[int], n: int) -> int:
    """dim of the irreducible GL(n) representation with highest weight w."""
    w = tuple(w)
    if len(w) != n:
        raise ValueError(f"weight length {len(w)} != n = {n}")
    if not is_dominant(w):
        raise ValueError(f"non-dominant weight {w}")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    dim = Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)


def pieri_add_box(w: Sequence[int]) -> List[Weight]:
    """Dominant weights obtained from w by adding 1 to a single entry."""
    w = tuple(w)
    if not is_dominant(w):
        raise ValueError(f"non-dominant weight {w}")
    out = []
    for i in range(len(w)):
        cand = w[:i] + (w[i] + 1,) + w[i + 1 :]
        if is_dominant(cand):
            out.append(cand)
    return out


def g2_dim_formula(p: int, q: int, r: int) -> int:
    """Dimension of the second graded piece of the defect algebra.

    Computed from the two plethysm kernels at dimension level:
    C(r-1,2)*[C(N+1,2) - dim S_{2^p}] + C(r,2)*[C(N,2) - dim S_{2^{p-1},1,1}]
    with N = C(p+q, p) and Schur dimensions over rank p+q.
    """
    if p < 2 or q < 1 or r < 2:
        raise ValueError("require p >= 2, q >= 1, r >= 2")
    n = p + q
    N = comb(n, p)

    def padded(parts: Sequence[int]) -> Tuple[int, ...]:
        return tuple(parts) + (0,) * (n - len(parts))

    sym_kernel = comb(N + 1, 2) - schur_dim(padded([2] * p), n)
    ext_kernel = comb(N, 2) - schur_dim(padded([2] * (p - 1) + [1, 1]), n)
    return comb(r - 1, 2) * sym_kernel + comb(r, 2) * ext_kernel


def g1_dim_formula(p: int, q: int, r: int) -> int:
    """Dimension of the first graded piece: C^{r-1} tensor Lambda^p C^{p+q}."""
    if p < 2 or q < 1 or r < 2:
        raise ValueError("require p >= 2, q >= 1, r >= 2")
    return (r - 1) * comb(p + q, p)
