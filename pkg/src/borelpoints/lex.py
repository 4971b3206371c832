"""Saturated lexicographic ideals.

The saturated lex ideal in K[x_0, ..., x_n] is determined by a vector of
counts (a_0, ..., a_{n-1}): its generators are

    x_0^{a_{n-1}+1},
    x_0^{a_{n-1}} x_1^{a_{n-2}+1},
    ...,
    x_0^{a_{n-1}} x_1^{a_{n-2}} ... x_{n-2}^{a_1} x_{n-1}^{a_0},

minimalized.  For an admissible polynomial p with partition b, taking
a_j = (number of parts of b equal to j) yields the saturated lex ideal
with Hilbert polynomial p.
"""

from __future__ import annotations

from .hilbert_poly import GotzmannPartition
from .monomial_ideal import MonomialIdeal

LexCounts = tuple[int, ...]


def lex_ideal_from_counts(counts) -> MonomialIdeal:
    """The saturated lex ideal for a count vector, in len(counts)+1 variables."""
    a = tuple(int(x) for x in counts)
    if any(x < 0 for x in a):
        raise ValueError("counts must be nonnegative")
    n = len(a)
    if n < 1:
        raise ValueError("need at least one count")
    num_vars = n + 1
    gens = []
    for k in range(n):
        exps = [0] * num_vars
        for i in range(k):
            exps[i] = a[n - 1 - i]
        exps[k] = a[n - 1 - k] + (1 if k < n - 1 else 0)
        gens.append(tuple(exps))
    return MonomialIdeal.from_generators(gens, num_vars)


def counts_for_partition(partition: GotzmannPartition, n: int) -> LexCounts:
    """a_j = multiplicity of j among the parts, for 0 <= j <= n-1."""
    if n <= partition.degree:
        raise ValueError(
            "ambient dimension must exceed the polynomial degree"
        )
    return tuple(
        sum(1 for b in partition.parts if b == j) for j in range(n)
    )


def lex_ideal(partition: GotzmannPartition, n: int) -> MonomialIdeal:
    """The saturated lex ideal in K[x_0, ..., x_n] with the given polynomial."""
    return lex_ideal_from_counts(counts_for_partition(partition, n))
