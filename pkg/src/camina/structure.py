"""Central series, nilpotency class, and the subgroups D(g).

D(g) = {x : [g, x] in Z(G)} is the preimage of the centralizer of gZ(G)
in G/Z(G); it drives most of the inequality checks in `pairs`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CentralElement
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    _handle,
    center,
    commutator_set,
    group_exponent,
    quotient,
    subgroup_generate,
)


@dataclass
class CentralSeries:
    """Terms of a lower or upper central series.

    class_c is None when the series stabilizes without witnessing
    nilpotency ("not nilpotent" is a value, not an error).
    """

    kind: str  # "lower" | "upper"
    terms: list[SubgroupHandle]
    class_c: int | None

    def term_orders(self) -> list[int]:
        return [t.order for t in self.terms]


def lower_central_series(G: FiniteGroup) -> CentralSeries:
    """G_1 = G, G_{i+1} = [G_i, G], until stable."""
    everything = np.arange(G.order, dtype=np.int32)
    terms = [_handle(G, everything)]
    while True:
        cur = terms[-1]
        comms = commutator_set(G, cur.members, everything)
        nxt = subgroup_generate(G, comms)
        if nxt.order == cur.order:
            break
        terms.append(nxt)
        if nxt.order == 1:
            break
    class_c = len(terms) - 1 if terms[-1].order == 1 else None
    return CentralSeries("lower", terms, class_c)


def upper_central_series(G: FiniteGroup) -> CentralSeries:
    """Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i), until stable."""
    terms = [subgroup_generate(G, ())]
    while not terms[-1].is_whole_group():
        Q, proj = quotient(G, terms[-1])
        pre = np.flatnonzero(np.isin(proj, Q.center_members()))
        if len(pre) == terms[-1].order:
            break
        terms.append(_handle(G, pre))
    class_c = len(terms) - 1 if terms[-1].is_whole_group() else None
    return CentralSeries("upper", terms, class_c)


def nilpotency_class(G: FiniteGroup) -> int | None:
    """Common class of both central series (asserted to agree)."""
    lower = lower_central_series(G)
    upper = upper_central_series(G)
    if lower.class_c != upper.class_c:
        raise AssertionError(
            f"central series disagree: lower {lower.class_c}, upper {upper.class_c}"
        )
    return lower.class_c


def second_center(G: FiniteGroup) -> SubgroupHandle:
    series = upper_central_series(G)
    idx = min(2, len(series.terms) - 1)
    return series.terms[idx]


def d_subgroup(G: FiniteGroup, g: int, Z: SubgroupHandle) -> SubgroupHandle:
    """D(g) = {x : [g, x] central}; requires Z = center(G) and g noncentral."""
    zc = center(G)
    if not (Z == zc):
        raise ValueError("Z must be the center of G")
    if g in Z:
        raise CentralElement(f"element {g} is central; D(g) would be all of G")
    m, inv = G.mul, G.inv
    comms = m[m[inv[g], inv], m[g, :]]
    members = np.flatnonzero(Z.mask[comms])
    handle = _handle(G, members)
    assert handle.closure_holds(), "D(g) failed its subgroup witness"
    return handle


def subgroup_exponent(G: FiniteGroup, members: np.ndarray) -> int:
    orders = G.element_orders()[np.asarray(members)]
    return int(math.lcm(*(int(o) for o in orders)))


def commutators_land_in(G: FiniteGroup, members: np.ndarray, target_mask) -> bool:
    """True iff [x, y] lies in the target set for all x, y in members."""
    m, inv = G.mul, G.inv
    members = np.asarray(members, dtype=np.int32)
    for a in members:
        comms = m[m[inv[a], inv[members]], m[a, members]]
        if not target_mask[comms].all():
            return False
    return True


def is_prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p^k and k >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            k, rest = 0, n
            while rest % p == 0:
                rest //= p
                k += 1
            return (p, k) if rest == 1 else None
        p += 1
    return n, 1


def quotient_exponent_over_center(G: FiniteGroup) -> tuple[int, int] | None:
    """(p, n) with exponent(G/Z(G)) = p^n, or None if not a p-group.

    The trivial quotient (abelian G) has no attached prime and also
    returns None.
    """
    Q, _ = quotient(G, center(G))
    if Q.order == 1:
        return None
    pk = is_prime_power(Q.order)
    if pk is None:
        return None
    p = pk[0]
    exp = group_exponent(Q)
    n = 0
    while exp > 1:
        exp //= p
        n += 1
    return p, n
