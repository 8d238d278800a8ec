"""Center Camina pair verdicts and the named inequality check suite.

A pair (G, N) with 1 < N < G normal is a Camina pair when every g outside
N is conjugate to the whole coset gN.  Three equivalent criteria are
implemented independently (conjugacy classes, commutator coverage,
centralizer orders) and always cross-asserted.  For a positive verdict on
N = Z(G) the full report of named inequality checks is evaluated in exact
integer arithmetic; every check records its hypothesis and conclusion
separately so vacuous passes stay visible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .characters import dixon_character_table, verify_fully_ramified
from .errors import EquivalenceViolation, InvalidPairTarget, NotApplicable
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    center,
    commutator_set,
    derived_subgroup,
    is_normal,
    joined,
    quotient,
)
from .structure import (
    is_prime_power,
    lower_central_series,
    quotient_exponent_over_center,
    upper_central_series,
)

DEFAULT_CHAR_TABLE_CAP = 256

CHECK_IDS = (
    "T1.1",
    "T1.2",
    "T1.3",
    "T1.4",
    "T1.5",
    "Texp",
    "L2.1",
    "L2.2",
    "L2.3",
    "L2.4",
    "Lcents",
    "LZ2Gp",
    "Cor2grp",
    "Cm2",
    "CGpZ",
    "T5.1",
    "LDquo",
    "Lidxp",
    "LidxpRev",
    "Csmall",
)

# Inequalities behind the check ids, with |G:Z| = p^n, |Z| = p^m,
# |G':Z| = p^l and n' the quotient exponent (exp(G/Z) = p^n'):
#   T1.1     |Z| <= |G:G'|
#   T1.2     if Z < G':  |Z| < |G':Z|^3
#   T1.3     4m + 1 <= 3n
#   T1.4     if Z < G':  |Z|^2 <= |G:Z|  or  |Z| p^4 <= |G:Z|
#   T1.5     if exp(G/Z) != p:  |Z|^2 < |G:Z|
#   Texp     |Z|^n' p^n' <= |G:Z|
#   L2.1     G is a p-group
#   L2.2     each upper central factor has exponent p
#   L2.3     Z(G) equals the last nontrivial lower central term
#   L2.4     |G:Z| is a square; characters over Z vanish off Z and
#            have chi(1)^2 = |G:Z| (checked when the table is computed)
#   Lcents   D(g)/C(g) matches Z(G) in order and elementary-abelian shape
#   LZ2Gp    if G/Z nonabelian:  |G : G'Z_2| >= |Z|
#   Cor2grp  if p = 2:  |Z|^2 <= |G:Z|
#   Cm2      |Z|^2 <= |G:Z|  or  |Z| p^3 <= |G:Z|
#   CGpZ     if |G':Z| = p:  |Z|^2 <= |G:Z|
#   T5.1     if Z < G':  m <= 3l - 1
#   LDquo    every a with C(a) and G' meeting exactly in Z has D(a)/Z abelian
#   Lidxp    if some a has D(a)/Z abelian and |G:D(a)| = p:  |Z|^2 <= |G:Z|
#   LidxpRev if |Z|^2 > |G:Z|: no a has D(a)/Z abelian with |G:D(a)| = p
#   Csmall   if some a in (G' n Z_2) - Z has C(b) <= C(a) for all
#            b in G' - Z:  3m + 2 <= 2n


@dataclass
class CaminaVerdict:
    """Outcome of the three pair criteria on one target subgroup."""

    pair_target: SubgroupHandle
    by_classes: bool
    by_commutators: bool
    by_centralizers: bool
    witness: tuple[int, int] | None
    is_camina_group: bool

    @property
    def holds(self) -> bool:
        return self.by_classes


@dataclass
class BoundCheck:
    check_id: str
    hypothesis_held: bool
    conclusion_held: bool

    @property
    def passed(self) -> bool:
        return (not self.hypothesis_held) or self.conclusion_held

    @property
    def status(self) -> str:
        if not self.hypothesis_held:
            return "VACUOUS"
        return "PASS" if self.conclusion_held else "FAIL"


@dataclass
class BoundReport:
    p: int
    n: int
    m: int
    l: int
    class_c: int | None
    quotient_exponent_n: int
    checks: list[BoundCheck] = field(default_factory=list)

    def check(self, check_id: str) -> BoundCheck:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if c.status == "FAIL"]


@dataclass
class CenterPairAnalysis:
    """analyze_center_pair result; verdict is None when not applicable."""

    group: FiniteGroup
    applicable: bool
    verdict: CaminaVerdict | None
    report: BoundReport | None


# ---------------------------------------------------------------------------
# the three criteria


def _validate_pair_target(G: FiniteGroup, N: SubgroupHandle) -> None:
    if N.order <= 1:
        raise InvalidPairTarget("pair target must be nontrivial")
    if N.order >= G.order:
        raise InvalidPairTarget("pair target must be a proper subgroup")
    if not is_normal(G, N):
        raise InvalidPairTarget("pair target must be normal")


def _outside(G: FiniteGroup, N: SubgroupHandle) -> np.ndarray:
    return np.flatnonzero(~N.mask).astype(np.int32)


def camina_by_classes(G: FiniteGroup, N: SubgroupHandle):
    """True iff the class of every g outside N contains the coset gN."""
    _validate_pair_target(G, N)
    class_of, _ = G.conjugacy_data()
    g, bad_n = _kernels.coset_class_check(G.mul, class_of, N.members, _outside(G, N))
    return (g < 0), (None if g < 0 else (int(g), int(bad_n)))


def camina_by_commutators(G: FiniteGroup, N: SubgroupHandle):
    """True iff {[y, g] : y in G} covers N for every g outside N."""
    _validate_pair_target(G, N)
    g, bad_n = _kernels.commutator_cover_check(
        G.mul, G.inv, N.members, _outside(G, N)
    )
    return (g < 0), (None if g < 0 else (int(g), int(bad_n)))


def camina_by_centralizers(G: FiniteGroup, N: SubgroupHandle):
    """True iff |C_G(g)| = |C_{G/N}(gN)| for every g outside N."""
    _validate_pair_target(G, N)
    Q, proj = quotient(G, N)
    class_of, classes = G.conjugacy_data()
    qclass_of, qclasses = Q.conjugacy_data()
    sizes = np.array([len(c) for c in classes], dtype=np.int64)
    qsizes = np.array([len(c) for c in qclasses], dtype=np.int64)
    cent_g = G.order // sizes[class_of]
    cent_q = Q.order // qsizes[qclass_of[proj]]
    outside = _outside(G, N)
    bad = np.flatnonzero(cent_g[outside] != cent_q[outside])
    if bad.size == 0:
        return True, None
    return False, (int(outside[bad[0]]), -1)


def is_camina_group(G: FiniteGroup) -> bool:
    """(G, G') is a Camina pair; false when G' is trivial or all of G."""
    Gp = derived_subgroup(G)
    if Gp.order <= 1 or Gp.order >= G.order:
        return False
    ok, _ = camina_by_classes(G, Gp)
    return ok


# ---------------------------------------------------------------------------
# center-pair analysis


def analyze_center_pair(
    G: FiniteGroup,
    with_bounds: bool = True,
    char_table_cap: int = DEFAULT_CHAR_TABLE_CAP,
) -> CenterPairAnalysis:
    """Run all three criteria on N = Z(G) and, on success, the check suite.

    Not applicable (verdict None) when Z(G) is trivial or Z(G) = G.
    """
    Z = center(G)
    if Z.order == 1 or Z.is_whole_group():
        return CenterPairAnalysis(G, False, None, None)
    b1, w1 = camina_by_classes(G, Z)
    b2, w2 = camina_by_commutators(G, Z)
    b3, w3 = camina_by_centralizers(G, Z)
    if not (b1 == b2 == b3):
        raise EquivalenceViolation(
            f"criteria disagree on {G!r}: classes={b1} commutators={b2} "
            f"centralizers={b3}"
        )
    verdict = CaminaVerdict(
        pair_target=Z,
        by_classes=b1,
        by_commutators=b2,
        by_centralizers=b3,
        witness=w1 or w2 or w3,
        is_camina_group=is_camina_group(G),
    )
    report = None
    if b1 and with_bounds:
        report = verify_bounds(G, verdict, char_table_cap=char_table_cap)
    return CenterPairAnalysis(G, True, verdict, report)


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0 and x > 1:
        x //= p
        v += 1
    return v


def _pth_power_map(G: FiniteGroup, p: int) -> np.ndarray:
    idx = np.arange(G.order, dtype=np.int32)
    pw = idx.copy()
    for _ in range(p - 1):
        pw = G.mul[pw, idx]
    return pw


def verify_bounds(
    G: FiniteGroup,
    verdict: CaminaVerdict,
    char_table_cap: int = DEFAULT_CHAR_TABLE_CAP,
) -> BoundReport:
    """Evaluate every named check for a positive center-pair verdict."""
    if not verdict.holds:
        raise ValueError("verify_bounds requires a positive verdict")
    Z = verdict.pair_target
    order = G.order

    pk = is_prime_power(order)
    upper = upper_central_series(G)
    lower = lower_central_series(G)
    if lower.class_c != upper.class_c:
        raise AssertionError("central series disagree on the class")
    class_c = upper.class_c

    if pk is None:
        # Mathematically impossible for a true verdict; report it honestly.
        report = BoundReport(0, 0, 0, 0, class_c, 0)
        report.checks.append(BoundCheck("L2.1", True, False))
        for cid in CHECK_IDS:
            if cid != "L2.1":
                report.checks.append(BoundCheck(cid, False, False))
        return report

    p, _ = pk
    m = _valuation(Z.order, p)
    n = _valuation(order // Z.order, p)
    Gp = derived_subgroup(G)
    if not Gp.mask[Z.members].all():
        raise EquivalenceViolation("Z(G) not inside G' despite a true verdict")
    l = _valuation(Gp.order // Z.order, p)
    qe = quotient_exponent_over_center(G)
    assert qe is not None and qe[0] == p
    n_exp = qe[1]

    Z2 = upper.terms[min(2, len(upper.terms) - 1)]
    pw = _pth_power_map(G, p)
    mul, inv = G.mul, G.inv
    noncentral = np.flatnonzero(~Z.mask).astype(np.int32)

    orders = G.element_orders()
    all_orders_p_powers = all(
        is_prime_power(int(o)) == (p, _valuation(int(o), p)) for o in orders if o > 1
    )

    # one pass over noncentral elements: D(g), centralizers, derived sets
    cent_matrix = mul.T == mul  # row x = centralizer mask of x
    dprime_cache: dict[bytes, np.ndarray] = {}
    lcents_ok = True
    ldquo_qualifier = False
    ldquo_ok = True
    lidxp_qualifier = False
    z_elementary = bool((pw[Z.members] == 0).all())

    for g in noncentral:
        comms = mul[mul[inv[g], inv], mul[g, :]]
        d_members = np.flatnonzero(Z.mask[comms]).astype(np.int32)
        key = d_members.tobytes()
        dprime_mask = dprime_cache.get(key)
        if dprime_mask is None:
            dset = commutator_set(G, d_members, d_members)
            dprime_mask = np.zeros(order, dtype=bool)
            dprime_mask[dset] = True
            dprime_cache[key] = dprime_mask
        c_mask = cent_matrix[g]
        c_size = int(c_mask.sum())

        # Lcents: |D:C| = |Z| and D/C elementary abelian of exponent p
        if lcents_ok:
            good = (
                len(d_members) == c_size * Z.order
                and not (dprime_mask & ~c_mask).any()
                and c_mask[pw[d_members]].all()
                and z_elementary
            )
            lcents_ok = good

        # LDquo: a with C(a) n G' = Z must have D(a)/Z abelian
        if int((c_mask & Gp.mask).sum()) == Z.order:
            ldquo_qualifier = True
            if (dprime_mask & ~Z.mask).any():
                ldquo_ok = False

        # Lidxp qualifier: D(a)/Z abelian and |G:D(a)| = p
        if order == len(d_members) * p and not (dprime_mask & ~Z.mask).any():
            lidxp_qualifier = True

    # L2.2: upper central factors have exponent p
    l22_ok = True
    for i in range(1, len(upper.terms)):
        below, here = upper.terms[i - 1], upper.terms[i]
        if not below.mask[pw[here.members]].all():
            l22_ok = False
            break

    # L2.3: Z(G) = last nontrivial lower central term
    if class_c is not None and class_c >= 1:
        gc = lower.terms[class_c - 1]
        l23_ok = gc == Z
    else:
        l23_ok = False

    # L2.4: square index, plus the character conditions at desk scale
    l24_ok = n % 2 == 0
    if l24_ok and order <= char_table_cap:
        table = dixon_character_table(G)
        ramified_ok, _ = verify_fully_ramified(G, Z, table)
        l24_ok = ramified_ok

    gpz2 = joined(Gp, Z2)
    quotient_nonabelian = l >= 1  # G/Z abelian iff G' <= Z

    def chk(cid, hyp, concl):
        return BoundCheck(cid, bool(hyp), bool(concl))

    checks = [
        chk("T1.1", True, Z.order <= order // Gp.order),
        chk("T1.2", l >= 1, m < 3 * l),
        chk("T1.3", True, 4 * m + 1 <= 3 * n),
        chk("T1.4", l >= 1, 2 * m <= n or m + 4 <= n),
        chk("T1.5", n_exp >= 2, 2 * m < n),
        chk("Texp", n_exp >= 1, n_exp * (m + 1) <= n),
        chk("L2.1", True, all_orders_p_powers),
        chk("L2.2", class_c is not None, l22_ok),
        chk("L2.3", class_c is not None, l23_ok),
        chk("L2.4", True, l24_ok),
        chk("Lcents", True, lcents_ok),
        chk("LZ2Gp", quotient_nonabelian, order // gpz2.order >= Z.order),
        chk("Cor2grp", p == 2, 2 * m <= n),
        chk("Cm2", True, 2 * m <= n or m + 3 <= n),
        chk("CGpZ", l == 1, 2 * m <= n),
        chk("T5.1", l >= 1, m <= 3 * l - 1),
        chk("LDquo", ldquo_qualifier, ldquo_ok),
        chk("Lidxp", lidxp_qualifier, 2 * m <= n),
        chk("LidxpRev", 2 * m > n, not lidxp_qualifier),
        chk("Csmall", *(_csmall(G, Z, Gp, Z2, cent_matrix, m, n))),
    ]
    return BoundReport(p, n, m, l, class_c, n_exp, checks)


def _csmall(G, Z, Gp, Z2, cent_matrix, m, n):
    """Hypothesis and conclusion of the Csmall check."""
    candidates = np.intersect1d(Gp.members, Z2.members)
    candidates = candidates[~Z.mask[candidates]]
    derived_outside = Gp.members[~Z.mask[Gp.members]]
    hyp = False
    for a in candidates:
        ca = cent_matrix[a]
        if all(not (cent_matrix[b] & ~ca).any() for b in derived_outside):
            hyp = True
            break
    return hyp, 3 * m + 2 <= 2 * n


# ---------------------------------------------------------------------------
# script C


def script_c(G: FiniteGroup, Z: SubgroupHandle, Gprime: SubgroupHandle) -> np.ndarray:
    """The set {x : C(x) meets G' beyond Z}, cross-checked two ways.

    Also verified to equal the union of C(a) over a in G' - Z; raises
    NotApplicable when Z = G' (the set is empty by convention).
    """
    if Z.order == Gprime.order:
        raise NotApplicable("script-C is empty when Z(G) = G'")
    if not Gprime.mask[Z.members].all():
        raise ValueError("expected Z <= G'")
    cent_matrix = G.mul.T == G.mul
    counts = (cent_matrix & Gprime.mask[None, :]).sum(axis=1)
    direct = np.flatnonzero(counts > Z.order)
    a_list = Gprime.members[~Z.mask[Gprime.members]]
    union = np.flatnonzero(cent_matrix[a_list].any(axis=0))
    if not np.array_equal(direct, union):
        raise EquivalenceViolation("script-C characterizations disagree")
    return direct.astype(np.int32)


# ---------------------------------------------------------------------------
# census and counterexample search


@dataclass
class CensusReport:
    order: int
    predicate: str
    hits: list[str]

    @property
    def count(self) -> int:
        return len(self.hits)


def _pred_center_pair(G, analysis) -> bool:
    return analysis.applicable and analysis.verdict.holds


def _pred_center_pair_not_camina_group(G, analysis) -> bool:
    return (
        analysis.applicable
        and analysis.verdict.holds
        and not analysis.verdict.is_camina_group
    )


def _pred_camina_group(G, analysis) -> bool:
    return is_camina_group(G)


PREDICATES = {
    "center-pair": _pred_center_pair,
    "center-pair-not-camina-group": _pred_center_pair_not_camina_group,
    "camina-group": _pred_camina_group,
}


def census(items, order: int, predicate: str) -> CensusReport:
    """Count groups of one order satisfying a named predicate.

    `items` is an iterable of (group_id, FiniteGroup) pairs.
    """
    pred = PREDICATES[predicate]
    hits = []
    for gid, G in items:
        if G.order != order:
            continue
        analysis = analyze_center_pair(G, with_bounds=False)
        if pred(G, analysis):
            hits.append(gid)
    return CensusReport(order, predicate, hits)


@dataclass
class SearchFinding:
    gid: str
    order: int
    report: BoundReport


@dataclass
class SearchReport:
    scanned: int
    strict: list[SearchFinding]
    equality: list[SearchFinding]


def search_counterexample(items, max_order: int) -> SearchReport:
    """Scan for center pairs with |Z|^2 > |G:Z|; also collect equality cases."""
    scanned = 0
    strict: list[SearchFinding] = []
    equality: list[SearchFinding] = []
    for gid, G in items:
        if G.order > max_order:
            continue
        scanned += 1
        analysis = analyze_center_pair(G, with_bounds=False)
        if not (analysis.applicable and analysis.verdict.holds):
            continue
        report = verify_bounds(G, analysis.verdict)
        if 2 * report.m > report.n:
            strict.append(SearchFinding(gid, G.order, report))
        elif 2 * report.m == report.n:
            equality.append(SearchFinding(gid, G.order, report))
    return SearchReport(scanned, strict, equality)
