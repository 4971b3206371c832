"""Borel-fixed machinery: stability tests, closures, and expansions.

Over an infinite field of characteristic p > 0, a monomial ideal is fixed
by the Borel group iff for every generator x^u, every pair i < j, and
every k whose base-p digits are dominated by those of u_j, the exchange
x_j^{-k} x_i^k x^u stays in the ideal (Pardue's criterion).  In
characteristic 0 only single-step exchanges (k = 1) are required, which is
the strongly stable condition.  Characteristic 0 is modeled here as the
exchange set {1}, so one code path covers both cases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monomial_ideal import Monomial, MonomialIdeal


@dataclass(frozen=True)
class Characteristic:
    """0 or a prime, selecting the exchange rule."""

    value: int

    def __post_init__(self):
        if self.value == 0:
            return
        if self.value < 2 or any(
            self.value % q == 0 for q in range(2, int(self.value**0.5) + 1)
        ):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.value}")

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return str(self.value)


CHAR0 = Characteristic(0)


def digitwise_leq(k: int, l: int, ch: Characteristic) -> bool:
    """Exchange-exponent dominance for the given characteristic.

    For a prime p, compares base-p digits of k and l pairwise.  For
    characteristic 0 only k = 0 and (k = 1 when l >= 1) are allowed,
    recovering single-step strongly stable exchanges.
    """
    if k < 0 or l < 0:
        raise ValueError("arguments must be nonnegative")
    if ch.is_zero:
        return k == 0 or (k == 1 and l >= 1)
    p = ch.value
    while k or l:
        if k % p > l % p:
            return False
        k //= p
        l //= p
    return True


def exchange_amounts(l: int, ch: Characteristic):
    """All k with 1 <= k <= l allowed as exchange exponents against l."""
    return [k for k in range(1, l + 1) if digitwise_leq(k, l, ch)]


def exchange(m: Monomial, i: int, j: int, k: int) -> Monomial:
    """x_j^{-k} x_i^k m; requires m[j] >= k."""
    out = list(m)
    out[j] -= k
    out[i] += k
    return tuple(out)


def is_borel_fixed(I: MonomialIdeal, ch: Characteristic) -> bool:
    """Pardue's criterion, checked on the minimal generators."""
    for g in I.gens:
        for j in range(1, I.num_vars):
            if g[j] == 0:
                continue
            for k in exchange_amounts(g[j], ch):
                for i in range(j):
                    if not I.contains(exchange(g, i, j, k)):
                        return False
    return True


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Single-step exchange closure, checked on the minimal generators."""
    return is_borel_fixed(I, CHAR0)


def borel_closure(gens, ch: Characteristic, num_vars: int) -> MonomialIdeal:
    """Smallest ideal containing gens that passes is_borel_fixed for ch.

    Iterates all legal exchanges to a fixed point, re-minimalizing each
    round.  Exchanges preserve degree, so the closure lives in the degrees
    of the input and the iteration terminates.
    """
    ideal = MonomialIdeal.from_generators(gens, num_vars)
    while True:
        missing = []
        for g in ideal.gens:
            for j in range(1, num_vars):
                if g[j] == 0:
                    continue
                for k in exchange_amounts(g[j], ch):
                    for i in range(j):
                        v = exchange(g, i, j, k)
                        if not ideal.contains(v):
                            missing.append(v)
        if not missing:
            return ideal
        ideal = MonomialIdeal.from_generators(
            ideal.gens + tuple(missing), num_vars
        )


def expandable_generators(I: MonomialIdeal) -> list[Monomial]:
    """Generators at which I can be expanded, in canonical order.

    g qualifies when no generator of I equals x_i^{-1} x_{i+1} g for some
    x_i dividing g with i < n - 1.  The caller must supply a saturated
    strongly stable ideal.
    """
    assert is_strongly_stable(I), "expandability needs a strongly stable ideal"
    assert I.saturate() == I, "expandability needs a saturated ideal"
    n = I.num_vars - 1
    gen_set = frozenset(I.gens)
    out = []
    for g in I.gens:
        blocked = any(
            g[i] > 0 and exchange(g, i + 1, i, 1) in gen_set
            for i in range(n - 1)
        )
        if not blocked:
            out.append(g)
    return out


def expand(I: MonomialIdeal, g: Monomial) -> MonomialIdeal:
    """Replace the generator g by g*x_j for max(g) <= j <= n-1.

    The result is again saturated strongly stable and its Hilbert
    polynomial is one more than that of I.
    """
    if g not in expandable_generators(I):
        raise ValueError(f"{g} is not an expandable generator of {I}")
    n = I.num_vars - 1
    if not any(g):
        raise ValueError("cannot expand at the unit monomial")
    top = max(i for i, e in enumerate(g) if e > 0)
    new_gens = [h for h in I.gens if h != g]
    new_gens.extend(
        g[:j] + (g[j] + 1,) + g[j + 1 :] for j in range(top, n)
    )
    return MonomialIdeal.from_generators(new_gens, I.num_vars)
