"""Enumeration drivers tying the modules together: equivalence and isomorphism
classes of skew bracoids over a fixed star group N.

One equivalence class per transitive subgroup of Hol(N); class ids follow the
canonical subgroup order, so they are stable across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SkewBracoid, from_hol_subgroup, is_reduced, reduced_form
from .groups import FiniteGroup, GroupHom, holomorph, perm_group_as_group
from .homs import find_isomorphism
from .perms import PermGroup


@dataclass(frozen=True)
class ClassificationRecord:
    n_spec: str
    g_spec: str | None
    equivalence_class_id: int
    isomorphism_class_id: int
    lambda_image_order: int
    reduced: bool
    bracoid: SkewBracoid


def _conjugacy_invariant(A: PermGroup) -> tuple:
    """A cheap invariant of A under conjugation inside Perm(N): the multiset
    of element cycle types."""
    types = []
    for p in A.elements:
        seen = [False] * p.degree
        lengths = []
        for start in range(p.degree):
            if seen[start]:
                continue
            k, pt = 1, p.images[start]
            seen[start] = True
            while pt != start:
                seen[pt] = True
                pt = p.images[pt]
                k += 1
            lengths.append(k)
        types.append(tuple(sorted(lengths)))
    return tuple(sorted(types))


def _surjection_onto(G: FiniteGroup, A: FiniteGroup) -> GroupHom | None:
    """A surjective homomorphism G ->> A, found through normal subgroups.

    Surjections correspond to pairs (normal K with G/K isomorphic to A, an
    isomorphism); the first normal subgroup in canonical order wins, which
    keeps the output deterministic.
    """
    if G.order % A.order != 0:
        return None
    if G.order == A.order:
        iso = G.isomorphism_to(A)
        return GroupHom(G, A, iso) if iso else None
    for K in G.subgroups():
        if len(K) != G.order // A.order or not G.is_normal(K):
            continue
        quo, proj = G.quotient(K)
        iso = quo.isomorphism_to(A)
        if iso is not None:
            return GroupHom(G, A, tuple(iso[proj(g)] for g in range(G.order)))
    return None


def enumerate_classes(
    N: FiniteGroup,
    n_spec: str,
    G: FiniteGroup | None = None,
    g_spec: str | None = None,
    max_order: int | None = None,
) -> list[ClassificationRecord]:
    """One record per transitive subgroup of Hol(N) (per equivalence class).

    With G given, only classes admitting a surjection from G are realized and
    emitted; equivalence ids still refer to the full canonical enumeration.
    Isomorphism ids group classes whose reduced forms are isomorphic.
    """
    hol = holomorph(N)
    classes = hol.transitive_subgroups(max_order=max_order)
    records: list[ClassificationRecord] = []
    iso_reps: list[tuple[int, SkewBracoid, tuple]] = []
    for eq_id, A in enumerate(classes):
        if G is None:
            b = from_hol_subgroup(N, A)
            spec_used = None
        else:
            abstract, _ = perm_group_as_group(A)
            delta = _surjection_onto(G, abstract)
            if delta is None:
                continue
            b = from_hol_subgroup(N, A, delta)
            spec_used = g_spec
        red = b if is_reduced(b) else reduced_form(b)[0]
        key = _conjugacy_invariant(A)
        iso_id = None
        for known_id, rep, rep_key in iso_reps:
            if rep_key != key or rep.G.order != red.G.order:
                continue
            if find_isomorphism(rep, red) is not None:
                iso_id = known_id
                break
        if iso_id is None:
            iso_id = len(iso_reps)
            iso_reps.append((iso_id, red, key))
        records.append(
            ClassificationRecord(
                n_spec=n_spec,
                g_spec=spec_used,
                equivalence_class_id=eq_id,
                isomorphism_class_id=iso_id,
                lambda_image_order=A.order,
                reduced=is_reduced(b),
                bracoid=b,
            )
        )
    return records
