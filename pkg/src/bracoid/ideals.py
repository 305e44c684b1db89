"""Left ideals, ideals, enhanced ideals, subskew bracoids, and quotients.

A left ideal of (G, N) is a subgroup M of N with gamma(G) M = M; an ideal is
additionally normal in N; an enhanced (left) ideal additionally has G_M
normal in G, where G_M = {g : g o e_N in M} is the largest subgroup of G
acting on M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    NotIdealError,
    NotLeftIdealError,
    SkewBracoid,
    gamma_function,
    verify_bracoid,
)
from .groups import GroupHom
from .perms import Permutation


@dataclass(frozen=True)
class IdealReport:
    """Classification of one subset of N, with its associated subgroup of G."""

    subset: tuple[int, ...]
    is_left_ideal: bool
    is_ideal: bool
    is_enhanced_left_ideal: bool
    is_enhanced_ideal: bool
    g_m: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "left_ideal": self.is_left_ideal,
            "ideal": self.is_ideal,
            "enhanced_left_ideal": self.is_enhanced_left_ideal,
            "enhanced_ideal": self.is_enhanced_ideal,
            "G_M": list(self.g_m),
        }


def classify_subset(b: SkewBracoid, subset) -> IdealReport:
    """Test a subset of N for all ideal conditions; never raises.

    Non-subgroups get the all-false report with empty g_m, so enumeration
    drivers can feed arbitrary subsets.  G_M is computed by the one-sided
    test g o e_N in M, which agrees with the two-sided definition for left
    ideals.
    """
    M = tuple(sorted(frozenset(subset)))
    if not b.N.is_subgroup(M):
        return IdealReport(M, False, False, False, False, ())
    Mset = frozenset(M)
    gam = gamma_function(b)
    left = all(gam[g].images[m] in Mset for g in range(b.G.order) for m in M)
    if not left:
        return IdealReport(M, False, False, False, False, ())
    g_m = tuple(g for g in range(b.G.order) if b.act(g, 0) in Mset)
    ideal = b.N.is_normal(Mset)
    enhanced = b.G.is_normal(frozenset(g_m))
    return IdealReport(M, True, ideal, enhanced, ideal and enhanced, g_m)


def sub_bracoid(b: SkewBracoid, subset) -> SkewBracoid:
    """The subskew bracoid (G_M, M) attached to a left ideal M."""
    report = classify_subset(b, subset)
    if not report.is_left_ideal:
        raise NotLeftIdealError(subset)
    Gm, g_elems = b.G.subgroup_as_group(report.g_m)
    Mg, m_elems = b.N.subgroup_as_group(report.subset)
    m_pos = {eta: i for i, eta in enumerate(m_elems)}
    action = [
        Permutation(tuple(m_pos[b.act(g, eta)] for eta in m_elems)) for g in g_elems
    ]
    return verify_bracoid(Gm, Mg, action)


def orbit_subgroup(b: SkewBracoid, subset) -> frozenset[int] | None:
    """M_H = {h o e_N : h in H} for a subgroup H of G.

    Returns M_H when it is gamma(G)-stable (then it is a left ideal); None
    when stability fails.
    """
    H = frozenset(subset)
    if not b.G.is_subgroup(H):
        raise ValueError("orbit_subgroup needs a subgroup of G")
    M = frozenset(b.act(h, 0) for h in H)
    gam = gamma_function(b)
    if any(gam[g].images[m] not in M for g in range(b.G.order) for m in M):
        return None
    report = classify_subset(b, M)
    if not report.is_left_ideal:  # cannot happen: stability + subgroup proof
        return None
    return M


def quotient_bracoid(b: SkewBracoid, subset) -> tuple[SkewBracoid, GroupHom]:
    """The quotient (G, N/M) by an ideal M, with the projection N -> N/M.

    The action descends as g o (eta M) = (g o eta) M, and the quotient
    gamma-function is the composite of gamma with the projection; both facts
    are re-verified on the constructed object.
    """
    report = classify_subset(b, subset)
    if not report.is_ideal:
        raise NotIdealError(subset)
    quo, proj = b.N.quotient(frozenset(report.subset))
    reps = [None] * quo.order
    for eta in range(b.N.order):
        if reps[proj(eta)] is None:
            reps[proj(eta)] = eta
    action = [
        Permutation(tuple(proj(b.act(g, reps[q])) for q in range(quo.order)))
        for g in range(b.G.order)
    ]
    qb = verify_bracoid(b.G, quo, action)
    gam = gamma_function(b)
    qgam = gamma_function(qb)
    for g in range(b.G.order):
        for eta in range(b.N.order):
            if qgam[g].images[proj(eta)] != proj(gam[g].images[eta]):
                raise NotIdealError(subset)  # unreachable for a true ideal
    return qb, proj


def enhanced_iff_brace_check(b: SkewBracoid, subset) -> tuple[bool, bool]:
    """(M is enhanced, reduced form of (G, N/M) is essentially a brace).

    The two flags are computed by independent routes; they agree for every
    ideal.
    """
    from .core import is_essentially_brace, reduced_form

    report = classify_subset(b, subset)
    if not report.is_ideal:
        raise NotIdealError(subset)
    qb, _ = quotient_bracoid(b, subset)
    red, _ = reduced_form(qb)
    return report.is_enhanced_ideal, is_essentially_brace(red)


@dataclass(frozen=True)
class CorrespondencePair:
    """One entry of the ideal correspondence between (G, N) and (G, N/M)."""

    subgroup: tuple[int, ...]
    quotient_subgroup: tuple[int, ...]
    report: IdealReport
    quotient_report: IdealReport


def ideal_correspondence(b: SkewBracoid, subset, max_order: int | None = None):
    """The bijection P <-> P/M between subgroups over M and subgroups of N/M.

    All four classification flags are checked to transfer in both directions
    and G_{P/M} = G_P is verified on every pair.
    """
    report = classify_subset(b, subset)
    if not report.is_ideal:
        raise NotIdealError(subset)
    M = frozenset(report.subset)
    qb, proj = quotient_bracoid(b, subset)
    over = [
        P for P in b.N.subgroups(max_order=max_order) if M <= P
    ]
    pairs = []
    seen_down = set()
    for P in over:
        down = frozenset(proj(eta) for eta in P)
        rp = classify_subset(b, P)
        rq = classify_subset(qb, down)
        flags = (
            rp.is_left_ideal == rq.is_left_ideal
            and rp.is_ideal == rq.is_ideal
            and rp.is_enhanced_left_ideal == rq.is_enhanced_left_ideal
            and rp.is_enhanced_ideal == rq.is_enhanced_ideal
        )
        if not flags:
            raise AssertionError(f"flags disagree across the correspondence at {sorted(P)}")
        if rp.is_left_ideal and rp.g_m != rq.g_m:
            raise AssertionError(f"G_P != G_(P/M) at {sorted(P)}")
        seen_down.add(down)
        pairs.append(CorrespondencePair(tuple(sorted(P)), tuple(sorted(down)), rp, rq))
    down_subgroups = {frozenset(s) for s in qb.N.subgroups(max_order=max_order)}
    if seen_down != down_subgroups:
        raise AssertionError("correspondence is not onto the subgroups of N/M")
    pairs.sort(key=lambda pr: (len(pr.subgroup), pr.subgroup))
    return pairs


def enumerate_ideals(b: SkewBracoid, max_order: int | None = None) -> list[IdealReport]:
    """Classify every subgroup of N, sorted by (order, elements)."""
    subs = b.N.subgroups(max_order=max_order)
    return [classify_subset(b, s) for s in subs]
