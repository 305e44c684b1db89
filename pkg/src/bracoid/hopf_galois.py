"""Coset-space skew bracoids and Hopf-Galois structure enumeration.

For a group G with subgroup G' (standing for a Galois group and the subgroup
fixing an intermediate field), the structures on the coset space X = G/G'
correspond to binary operations * on X making (G, ., X, *, o) a skew bracoid
with o the left-translation action, equivalently to G-stable regular
subgroups rho_*(X) of Perm(X).  Field-theoretic statements are phrased
entirely through the Galois correspondence: intermediate fields are the
subgroups between G' and G that fix them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    BracoidError,
    NotSubgroupError,
    SkewBrace,
    SkewBracoid,
    brace_gamma,
    brace_quotient_bracoid,
    gamma_function,
    kernel_lambda,
    make_skew_brace,
    verify_bracoid,
)
from .groups import (
    FiniteGroup,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_quaternion,
)
from .ideals import enumerate_ideals
from .perms import BoundExceededError, PermGroup, Permutation, resolve_bound

_MAX_COSET_SPACE = 8


@dataclass(frozen=True)
class CosetSpace:
    """The left coset space G/G' with its translation action.

    Cosets are sorted by least member, so the identity coset has index 0 and
    all downstream labelings are deterministic.
    """

    G: FiniteGroup
    g_prime: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]
    translation: tuple[Permutation, ...]

    @property
    def size(self) -> int:
        return len(self.cosets)

    @property
    def reps(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def coset_of(self, g: int) -> int:
        return self.translation[g].images[0]


def coset_space(G: FiniteGroup, g_prime) -> CosetSpace:
    gp = tuple(sorted(frozenset(g_prime)))
    if not G.is_subgroup(gp):
        raise NotSubgroupError(gp)
    cosets = tuple(G.left_cosets(gp))
    coset_of = {}
    for i, c in enumerate(cosets):
        for a in c:
            coset_of[a] = i
    translation = tuple(
        Permutation(tuple(coset_of[G.mul(g, c[0])] for c in cosets))
        for g in range(G.order)
    )
    space = CosetSpace(G, gp, cosets, translation)
    kernel = frozenset(
        g for g in range(G.order) if translation[g].is_identity()
    )
    if kernel != G.normal_core(gp):
        raise BracoidError("translation kernel is not the normal core")  # unreachable
    return space


@dataclass(frozen=True)
class HgsStructure:
    """One Hopf-Galois structure at group level: a star table on X with its data."""

    space: CosetSpace
    star: FiniteGroup
    rho: PermGroup
    bracoid: SkewBracoid


def _rho_perms(star: FiniteGroup) -> tuple[Permutation, ...]:
    """Right translations y |-> y * x^-1; a homomorphic regular image of star."""
    n = star.order
    return tuple(
        Permutation(tuple(star.mul(y, star.inv(x)) for y in range(n)))
        for x in range(n)
    )


@lru_cache(maxsize=None)
def abstract_groups_of_order(n: int) -> tuple[tuple[str, FiniteGroup], ...]:
    """The built-in abstract groups of each order up to 8."""
    if n < 1 or n > _MAX_COSET_SPACE:
        raise BoundExceededError(f"abstract group list covers orders 1..{_MAX_COSET_SPACE}")
    C = make_cyclic
    families: dict[int, tuple[tuple[str, FiniteGroup], ...]] = {
        1: (("C1", C(1)),),
        2: (("C2", C(2)),),
        3: (("C3", C(3)),),
        4: (("C4", C(4)), ("C2xC2", direct_product(C(2), C(2)))),
        5: (("C5", C(5)),),
        6: (("C6", C(6)), ("D3", make_dihedral(3))),
        7: (("C7", C(7)),),
        8: (
            ("C8", C(8)),
            ("C4xC2", direct_product(C(4), C(2))),
            ("C2xC2xC2", direct_product(direct_product(C(2), C(2)), C(2))),
            ("D4", make_dihedral(4)),
            ("Q8", make_quaternion()),
        ),
    }
    return families[n]


@lru_cache(maxsize=None)
def _group_tables_on_points(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Every group table on {0..n-1} with identity 0, i.e. every way to push a
    built-in abstract group along a base-point-preserving bijection.

    Bijections differing by an automorphism give the same table, so the
    result list is deduplicated; it is sorted for determinism.
    """
    seen = set()
    for _, T in abstract_groups_of_order(n):
        for rest in itertools.permutations(range(1, n)):
            phi = (0,) + rest  # phi[t] = point carrying element t
            inv_phi = [0] * n
            for t, x in enumerate(phi):
                inv_phi[x] = t
            table = tuple(
                tuple(phi[T.table[inv_phi[x]][inv_phi[y]]] for y in range(n))
                for x in range(n)
            )
            seen.add(table)
    return tuple(sorted(seen))


def enumerate_hgs(space: CosetSpace, max_size: int | None = None) -> list[HgsStructure]:
    """All Hopf-Galois structures on the space, one per surviving star table.

    Candidate tables are every group structure on X with identity at the
    identity coset; a candidate survives iff its right-translation image is
    stable under conjugation by the translation action, tested on a
    generating set of G.  Survivors are fully re-verified as bracoids.
    """
    bound = resolve_bound(max_size, _MAX_COSET_SPACE)
    n = space.size
    if n > bound:
        raise BoundExceededError(f"coset space of size {n} exceeds bound {bound}")
    lam_gens = [space.translation[g] for g in space.G.minimal_generators]
    out = []
    for table in _group_tables_on_points(n):
        inv = [row.index(0) for row in table]
        rho_imgs = frozenset(
            tuple(table[y][inv[x]] for y in range(n)) for x in range(n)
        )
        stable = True
        for lam in lam_gens:
            li = lam.inverse().images
            for r in rho_imgs:
                if tuple(lam.images[r[li[y]]] for y in range(n)) not in rho_imgs:
                    stable = False
                    break
            if not stable:
                break
        if not stable:
            continue
        star = FiniteGroup(table)
        rho = PermGroup.from_elements(
            n, (Permutation(p) for p in rho_imgs)
        )
        bracoid = verify_bracoid(space.G, star, space.translation)
        structure = HgsStructure(space, star, rho, bracoid)
        _check_structure(structure)
        out.append(structure)
    out.sort(key=lambda h: h.star.table)
    return out


def _check_structure(h: HgsStructure):
    """Re-verify the defining invariants of an assembled structure."""
    star, rho, space = h.star, h.rho, h.space
    n = star.order
    if not rho.is_regular():
        raise BracoidError("rho is not regular")
    rho_set = set(p.images for p in rho.elements)
    gam = gamma_function(h.bracoid)
    rho_of = {x: Permutation(tuple(star.mul(y, star.inv(x)) for y in range(n))) for x in range(n)}
    for g in range(space.G.order):
        lam = space.translation[g]
        lam_inv = lam.inverse()
        for x in range(n):
            conj = lam * rho_of[x] * lam_inv
            if conj.images not in rho_set:
                raise BracoidError("rho is not G-stable")
            if conj != rho_of[gam[g].images[x]]:
                raise BracoidError("conjugation does not match the gamma twist")
    # the bijection a(eta) = eta^-1[identity coset] transports rho to star
    a = {p: p.inverse().images[0] for p in rho.elements}
    for p in rho.elements:
        for q in rho.elements:
            if star.mul(a[p], a[q]) != a[p * q]:
                raise BracoidError("a does not carry rho multiplication to star")


def opposite_hgs(h: HgsStructure) -> HgsStructure:
    """The structure with the transposed star table.

    Its right-translation image is computed from the new table and,
    independently, as the centralizer of the old rho in Perm(X); the two must
    agree.
    """
    n = h.star.order
    table = tuple(tuple(h.star.table[y][x] for y in range(n)) for x in range(n))
    star_op = FiniteGroup(table)
    rho_op = PermGroup.from_elements(n, _rho_perms(star_op))
    cent = _centralizer_of_regular(h.rho)
    if rho_op != cent:
        raise BracoidError("opposite rho disagrees with the centralizer")
    bracoid = verify_bracoid(h.space.G, star_op, h.space.translation)
    structure = HgsStructure(h.space, star_op, rho_op, bracoid)
    _check_structure(structure)
    return structure


def _centralizer_of_regular(rho: PermGroup) -> PermGroup:
    """Centralizer of a regular subgroup in the full symmetric group.

    A permutation commuting with all of rho is pinned down by the image of
    the base point: sigma(r(0)) = r(sigma(0)) for every r.  Each candidate is
    checked in full.
    """
    n = rho.degree
    base_of = {}
    for r in rho.elements:
        base_of[r.images[0]] = r
    cands = []
    for target in range(n):
        images = [0] * n
        for x in range(n):
            images[x] = base_of[x].images[target]
        sigma = Permutation(tuple(images))
        if all(sigma * r == r * sigma for r in rho.elements):
            cands.append(sigma)
    return PermGroup.from_elements(n, cands)


def hgs_isomorphism_classes(
    space: CosetSpace, structures, max_order: int | None = None
) -> list[list[int]]:
    """Partition structure indices by bracoid isomorphism.

    Structures are isomorphic iff some phi in Aut(G) with phi(G') = G'
    conjugates one rho onto the other.  Each class size is cross-checked
    against |Aut_{G'}(G)| / |Aut_{G',*}(G)|.
    """
    structures = list(structures)
    G = space.G
    gp = frozenset(space.g_prime)
    auts = [
        phi
        for phi in G.automorphisms(max_order=max_order)
        if frozenset(phi.images[g] for g in gp) == gp
    ]
    coset_of = {a: i for i, c in enumerate(space.cosets) for a in c}
    phi_x = [
        Permutation(tuple(coset_of[phi.images[c[0]]] for c in space.cosets))
        for phi in auts
    ]
    rho_sets = [frozenset(p.images for p in h.rho.elements) for h in structures]
    rho_gens = [h.rho.min_generators() or h.rho.elements[:1] for h in structures]

    def related(i: int, j: int) -> bool:
        for px in phi_x:
            pxi = px.inverse()
            if all((px * g * pxi).images in rho_sets[j] for g in rho_gens[i]):
                return True
        return False

    classes: list[list[int]] = []
    for i in range(len(structures)):
        for cls in classes:
            if related(i, cls[0]):
                cls.append(i)
                break
        else:
            classes.append([i])
    for cls in classes:
        rep = structures[cls[0]]
        star = rep.star
        fixing = sum(
            1
            for px in phi_x
            if all(
                px.images[star.mul(x, y)] == star.mul(px.images[x], px.images[y])
                for x in range(star.order)
                for y in range(star.order)
            )
        )
        if len(cls) * fixing != len(phi_x):
            raise BracoidError("class size disagrees with the automorphism index")
    return classes


@dataclass(frozen=True)
class CorrespondenceEntry:
    """One realizable intermediate field, encoded by its fixing subgroup G_Y."""

    Y: tuple[int, ...]
    G_Y: tuple[int, ...]
    realizable_field: tuple[int, ...]
    has_quotient_structure: bool
    field_is_galois_over_K: bool

    def to_json_dict(self) -> dict:
        return {
            "Y": list(self.Y),
            "G_Y": list(self.G_Y),
            "realizable_field": list(self.realizable_field),
            "has_quotient_structure": self.has_quotient_structure,
            "field_is_galois_over_K": self.field_is_galois_over_K,
        }


def hg_correspondence(h: HgsStructure) -> list[CorrespondenceEntry]:
    """One entry per left ideal Y of (G, X): the fields reachable through the
    structure, with quotient-structure and Galois flags."""
    reports = [r for r in enumerate_ideals(h.bracoid) if r.is_left_ideal]
    gp = frozenset(h.space.g_prime)
    entries = []
    for r in reports:
        g_y = frozenset(r.g_m)
        image = frozenset(h.space.coset_of(g) for g in g_y)
        if image != frozenset(r.subset):
            raise BracoidError("Y is not the coset image of G_Y")
        if not gp <= g_y:
            raise BracoidError("G' is not contained in G_Y")
        if len(g_y) != len(gp) * len(r.subset):
            raise BracoidError("degree bookkeeping |G_Y| = |G'||Y| fails")
        entries.append(
            CorrespondenceEntry(
                Y=r.subset,
                G_Y=tuple(sorted(g_y)),
                realizable_field=tuple(sorted(g_y)),
                has_quotient_structure=r.is_ideal,
                field_is_galois_over_K=r.is_enhanced_left_ideal,
            )
        )
    entries.sort(key=lambda e: (len(e.Y), e.Y))
    return entries


def galois_closure_check(h: HgsStructure) -> frozenset[int]:
    """ker(lambda) of the translation bracoid, checked equal to the core of G'."""
    ker = kernel_lambda(h.bracoid)
    core = h.space.G.normal_core(frozenset(h.space.g_prime))
    if ker != core:
        raise BracoidError("translation kernel differs from the normal core")
    return ker


def detect_brace_quotient(
    h: HgsStructure, max_order: int | None = None
) -> tuple[SkewBrace, tuple[int, ...]] | None:
    """Search for a skew brace on G with G' a strong left ideal whose quotient
    bracoid is equivalent to the structure.

    Reuses the star-table enumeration on the space G/{e}; the first witness
    in table order is returned, and None means none found at this bound (a
    bounded search is not a proof of absence).
    """
    G = h.space.G
    bound = resolve_bound(max_order, _MAX_COSET_SPACE)
    if G.order > bound:
        raise BoundExceededError(
            f"brace search needs |G| <= {bound}, got {G.order}"
        )
    full = coset_space(G, (0,))
    for candidate in enumerate_hgs(full):
        # on G/{e} the coset labels are the elements, so star lives on G itself
        brace = make_skew_brace(candidate.star, G)
        gp = frozenset(h.space.g_prime)
        if not candidate.star.is_subgroup(gp):
            continue
        gam = brace_gamma(brace)
        if any(g.images[a] not in gp for g in gam for a in gp):
            continue
        if not candidate.star.is_normal(gp):
            continue
        qb = brace_quotient_bracoid(brace, gp)
        from .core import is_equivalent

        if is_equivalent(qb, h.bracoid):
            return brace, tuple(sorted(gp))
    return None
