"""Skew bracoids: verification, characterizations, opposites, reduction, equivalence.

A skew bracoid is a 5-tuple (G, ., N, *, o) where (G, .) and (N, *) are groups
and o is a transitive action of G on N satisfying

    g o (eta * mu) == (g o eta) * (g o e_N)^-1 * (g o mu)

for all g, eta, mu.  The action is stored as a full array of permutations of
N indexed by G, which keeps every axiom check a direct loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    EXHAUSTIVE_PAIR_LIMIT,
    FiniteGroup,
    GroupHom,
    holomorph,
    perm_group_as_group,
)
from .perms import PermGroup, Permutation


class BracoidError(Exception):
    """Base class for structured skew bracoid failures."""


class ActionShapeError(BracoidError):
    pass


class NotHomomorphismError(BracoidError):
    def __init__(self, g, h):
        self.witness = (g, h)
        super().__init__(f"action is not a homomorphism: fails at g={g}, h={h}")


class NotTransitiveError(BracoidError):
    def __init__(self, missing):
        self.missing = missing
        super().__init__(f"action is not transitive: element {missing} unreachable")


class RelationError(BracoidError):
    def __init__(self, g, eta, mu):
        self.witness = (g, eta, mu)
        super().__init__(
            f"skew bracoid relation fails at (g, eta, mu) = ({g}, {eta}, {mu})"
        )


class NotRegularError(BracoidError):
    pass


class HolMembershipError(BracoidError):
    pass


class NotSurjectiveError(BracoidError):
    pass


class CocycleError(BracoidError):
    pass


class BraceRelationError(BracoidError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"skew brace relation fails at (a, b, c) = ({a}, {b}, {c})")


class SubsetError(BracoidError):
    def __init__(self, subset, message):
        self.subset = tuple(sorted(subset))
        super().__init__(message)


class NotSubgroupError(SubsetError):
    def __init__(self, subset):
        super().__init__(subset, f"{sorted(subset)} is not a subgroup")


class NotGammaStableError(SubsetError):
    def __init__(self, subset):
        super().__init__(subset, f"{sorted(subset)} is not stable under the gamma action")


class NotNormalError(SubsetError):
    def __init__(self, subset):
        super().__init__(subset, f"{sorted(subset)} is not a normal subgroup")


class NotLeftIdealError(SubsetError):
    def __init__(self, subset):
        super().__init__(subset, f"{sorted(subset)} is not a left ideal")


class NotIdealError(SubsetError):
    def __init__(self, subset):
        super().__init__(subset, f"{sorted(subset)} is not an ideal")


@dataclass(frozen=True)
class SkewBracoid:
    """Validated skew bracoid; build through ``verify_bracoid`` or the converters."""

    G: FiniteGroup
    N: FiniteGroup
    action: tuple[Permutation, ...]

    def act(self, g: int, eta: int) -> int:
        return self.action[g].images[eta]

    def lambda_image(self) -> PermGroup:
        cached = self.__dict__.get("_lambda_image")
        if cached is not None:
            return cached
        els = tuple(sorted(set(self.action)))
        gens = tuple(self.action[g] for g in self.G.minimal_generators)
        result = PermGroup(self.N.order, els, gens if gens else els[:1])
        object.__setattr__(self, "_lambda_image", result)
        return result

    def stabilizer(self, eta: int) -> frozenset[int]:
        return frozenset(g for g in range(self.G.order) if self.act(g, eta) == eta)

    def transversal(self) -> tuple[int, ...]:
        """For each eta the least g with g o e_N = eta."""
        t = [-1] * self.N.order
        for g in range(self.G.order):
            eta = self.act(g, 0)
            if t[eta] < 0:
                t[eta] = g
        return tuple(t)


def verify_bracoid(G: FiniteGroup, N: FiniteGroup, action) -> SkewBracoid:
    """Validate the skew bracoid axioms, reporting the first violation found.

    Scan order is deterministic: homomorphism failures by (g, h) ascending,
    then transitivity, then the bracoid relation by (g, eta, mu) ascending.
    """
    rows = tuple(
        a if isinstance(a, Permutation) else Permutation(tuple(a)) for a in action
    )
    if len(rows) != G.order:
        raise ActionShapeError(f"need {G.order} action rows, got {len(rows)}")
    if any(r.degree != N.order for r in rows):
        raise ActionShapeError(f"action rows must be permutations of 0..{N.order - 1}")
    if not rows[0].is_identity():
        raise NotHomomorphismError(0, 0)
    if G.order <= EXHAUSTIVE_PAIR_LIMIT:
        pairs = ((g, h) for g in range(G.order) for h in range(G.order))
    else:
        # every edge (g, h) with h a generator; multiplicativity for arbitrary
        # pairs follows by induction on words in the generators
        pairs = ((g, h) for g in range(G.order) for h in G.minimal_generators)
    for g, h in pairs:
        if rows[G.mul(g, h)] != rows[g] * rows[h]:
            raise NotHomomorphismError(g, h)
    orbit = {rows[g].images[0] for g in range(G.order)}
    if len(orbit) != N.order:
        raise NotTransitiveError(min(set(range(N.order)) - orbit))
    if G.order % N.order != 0:
        raise ActionShapeError("orbit-stabilizer violated: |N| does not divide |G|")
    ninv = [N.inv(x) for x in range(N.order)]
    for g in range(G.order):
        img = rows[g].images
        ge_inv = ninv[img[0]]
        for eta in range(N.order):
            left_part = N.mul(img[eta], ge_inv)
            for mu in range(N.order):
                if img[N.mul(eta, mu)] != N.mul(left_part, img[mu]):
                    raise RelationError(g, eta, mu)
    return SkewBracoid(G, N, rows)


def gamma_function(b: SkewBracoid) -> tuple[Permutation, ...]:
    """The gamma-function g |-> (eta |-> (g o e_N)^-1 * (g o eta)).

    Each value is checked to be an automorphism of N and the whole map a
    homomorphism into Aut(N).
    """
    N, G = b.N, b.G
    gam = []
    for g in range(G.order):
        img = b.action[g].images
        base = N.inv(img[0])
        gam.append(Permutation(tuple(N.mul(base, img[eta]) for eta in range(N.order))))
    for g in range(G.order):
        p = gam[g].images
        for x in range(N.order):
            for y in range(N.order):
                if p[N.mul(x, y)] != N.mul(p[x], p[y]):
                    raise BracoidError(f"gamma({g}) is not an automorphism")
    if G.order <= EXHAUSTIVE_PAIR_LIMIT:
        pairs = ((g, h) for g in range(G.order) for h in range(G.order))
    else:
        pairs = ((g, h) for g in range(G.order) for h in G.minimal_generators)
    for g, h in pairs:
        if gam[G.mul(g, h)] != gam[g] * gam[h]:
            raise BracoidError("gamma is not a homomorphism")
    return tuple(gam)


def to_hol_subgroup(b: SkewBracoid, max_order: int | None = None):
    """The lambda-image inside Hol(N) plus the surjection G onto its abstract copy."""
    image = b.lambda_image()
    hol = holomorph(b.N, max_order=max_order)
    if not image.is_subgroup_of(hol):
        raise HolMembershipError("lambda image is not inside Hol(N)")
    if not image.is_transitive():
        raise NotTransitiveError(0)
    abstract, pos = perm_group_as_group(image)
    hom = GroupHom(b.G, abstract, tuple(pos[b.action[g]] for g in range(b.G.order)))
    if not hom.is_surjective():
        raise NotSurjectiveError("lambda is not onto its image")  # unreachable
    return image, hom


def from_hol_subgroup(
    N: FiniteGroup,
    A: PermGroup,
    delta: GroupHom | None = None,
    max_order: int | None = None,
) -> SkewBracoid:
    """Skew bracoid from a transitive subgroup of Hol(N).

    Without ``delta`` the acting group is the abstract copy of A itself;
    otherwise ``delta`` must be a surjection onto that abstract copy, and the
    action becomes g o eta = delta(g)(eta).
    """
    if A.degree != N.order:
        raise ActionShapeError("degree of A must equal |N|")
    if not A.is_transitive():
        raise NotTransitiveError(min(set(range(N.order)) - A.orbit(0)))
    hol = holomorph(N, max_order=max_order)
    if not A.is_subgroup_of(hol):
        raise HolMembershipError("A is not a subgroup of Hol(N)")
    abstract, _ = perm_group_as_group(A)
    if delta is None:
        delta = GroupHom.identity(abstract)
    if delta.codomain.table != abstract.table:
        raise ActionShapeError("delta must land in the abstract copy of A")
    if not delta.is_surjective():
        raise NotSurjectiveError("delta must be onto A")
    action = tuple(A.elements[delta(g)] for g in range(delta.domain.order))
    return verify_bracoid(delta.domain, N, action)


@dataclass(frozen=True)
class GammaCocyclePair:
    """A homomorphism gamma: G -> Aut(N) with a surjective 1-cocycle pi: G -> N."""

    G: FiniteGroup
    N: FiniteGroup
    gamma: tuple[Permutation, ...]
    pi: tuple[int, ...]


def make_gamma_cocycle(G, N, gamma, pi) -> GammaCocyclePair:
    gamma = tuple(
        g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in gamma
    )
    pi = tuple(pi)
    if len(gamma) != G.order or len(pi) != G.order:
        raise ActionShapeError("gamma and pi must be indexed by G")
    aut = set(N.automorphisms()) if N.order <= 24 else None
    for g, a in enumerate(gamma):
        if aut is not None:
            if a not in aut:
                raise CocycleError(f"gamma({g}) is not an automorphism of N")
        else:
            p = a.images
            for x in range(N.order):
                for y in range(N.order):
                    if p[N.mul(x, y)] != N.mul(p[x], p[y]):
                        raise CocycleError(f"gamma({g}) is not an automorphism of N")
    if set(pi) != set(range(N.order)):
        raise NotSurjectiveError("pi is not surjective onto N")
    if G.order <= EXHAUSTIVE_PAIR_LIMIT:
        pairs = ((g, h) for g in range(G.order) for h in range(G.order))
    else:
        pairs = ((g, h) for g in range(G.order) for h in G.minimal_generators)
    for g, h in pairs:
        if gamma[G.mul(g, h)] != gamma[g] * gamma[h]:
            raise CocycleError(f"gamma is not a homomorphism at ({g},{h})")
        if pi[G.mul(g, h)] != N.mul(pi[g], gamma[g].images[pi[h]]):
            raise CocycleError(f"cocycle identity fails at ({g},{h})")
    return GammaCocyclePair(G, N, gamma, pi)


def to_gamma_cocycle(b: SkewBracoid) -> GammaCocyclePair:
    pi = tuple(b.act(g, 0) for g in range(b.G.order))
    return make_gamma_cocycle(b.G, b.N, gamma_function(b), pi)


def from_gamma_cocycle(p: GammaCocyclePair) -> SkewBracoid:
    """Rebuild the action as g o eta = pi(g) * gamma(g)(eta)."""
    N = p.N
    action = [
        Permutation(tuple(N.mul(p.pi[g], p.gamma[g].images[eta]) for eta in range(N.order)))
        for g in range(p.G.order)
    ]
    return verify_bracoid(p.G, N, action)


def opposite(b: SkewBracoid) -> SkewBracoid:
    """Same G and action, N replaced by its opposite group (transposed table)."""
    n = b.N.order
    table = tuple(tuple(b.N.table[y][x] for y in range(n)) for x in range(n))
    return verify_bracoid(b.G, FiniteGroup(table), b.action)


# ---------------------------------------------------------------------------
# skew braces and transport


@dataclass(frozen=True)
class SkewBrace:
    """Two group tables on one carrier satisfying a.(b*c) = (a.b) * a^-1 * (a.c)."""

    star: FiniteGroup
    dot: FiniteGroup


def make_skew_brace(star: FiniteGroup, dot: FiniteGroup) -> SkewBrace:
    if star.order != dot.order:
        raise ActionShapeError("skew brace tables must share one carrier")
    n = star.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = dot.mul(a, star.mul(b, c))
                rhs = star.mul(star.mul(dot.mul(a, b), star.inv(a)), dot.mul(a, c))
                if lhs != rhs:
                    raise BraceRelationError(a, b, c)
    return SkewBrace(star, dot)


def brace_gamma(brace: SkewBrace) -> tuple[Permutation, ...]:
    """gamma(b): a |-> b^-1 * (b . a), with the inverse taken in the star group."""
    star, dot = brace.star, brace.dot
    return tuple(
        Permutation(
            tuple(star.mul(star.inv(b), dot.mul(b, a)) for a in range(star.order))
        )
        for b in range(star.order)
    )


def brace_as_bracoid(brace: SkewBrace) -> SkewBracoid:
    """A skew brace viewed as a skew bracoid: G the dot group acting on the star group."""
    action = [Permutation(tuple(row)) for row in brace.dot.table]
    return verify_bracoid(brace.dot, brace.star, action)


def is_essentially_brace(b: SkewBracoid) -> bool:
    return b.G.order == b.N.order


def transport_to_brace(b: SkewBracoid) -> SkewBrace:
    """Transport a regular action onto N: (g o e) . (h o e) = (gh) o e."""
    if not is_essentially_brace(b):
        raise NotRegularError(
            f"transport needs |G| == |N|, got {b.G.order} != {b.N.order}"
        )
    t = b.transversal()
    n = b.N.order
    dot = tuple(
        tuple(b.act(b.G.mul(t[x], t[y]), 0) for y in range(n)) for x in range(n)
    )
    return make_skew_brace(b.N, FiniteGroup(dot))


def brace_quotient_bracoid(brace: SkewBrace, subset) -> SkewBracoid:
    """Quotient a skew brace by a strong left ideal A: the bracoid (B, B/A).

    A must be a subgroup of the star group, stable under gamma(B), and normal
    in the star group; each condition failing raises its own error.  The star
    and dot cosets of A coincide, and the action is dot-translation of cosets.
    """
    A = frozenset(subset)
    star, dot = brace.star, brace.dot
    if not star.is_subgroup(A):
        raise NotSubgroupError(A)
    gam = brace_gamma(brace)
    if any(g.images[a] not in A for g in gam for a in A):
        raise NotGammaStableError(A)
    if not star.is_normal(A):
        raise NotNormalError(A)
    star_cosets = star.left_cosets(A)
    dot_cosets = dot.left_cosets(A)
    if star_cosets != dot_cosets:
        raise BracoidError("star and dot cosets of A disagree")  # unreachable
    quo, proj = star.quotient(A)
    action = [
        Permutation(
            tuple(proj(dot.mul(g, star_cosets[q][0])) for q in range(quo.order))
        )
        for g in range(dot.order)
    ]
    return verify_bracoid(dot, quo, action)


# ---------------------------------------------------------------------------
# reduction and equivalence


def kernel_lambda(b: SkewBracoid) -> frozenset[int]:
    return frozenset(g for g in range(b.G.order) if b.action[g].is_identity())


def is_reduced(b: SkewBracoid) -> bool:
    return len(kernel_lambda(b)) == 1


def reduced_form(b: SkewBracoid) -> tuple[SkewBracoid, GroupHom]:
    """Quotient G by ker(lambda) and re-index the action; equivalent to b."""
    K = kernel_lambda(b)
    quo, proj = b.G.quotient(K)
    reps = [None] * quo.order
    for g in range(b.G.order):
        if reps[proj(g)] is None:
            reps[proj(g)] = g
    action = [b.action[reps[q]] for q in range(quo.order)]
    return verify_bracoid(quo, b.N, action), proj


def is_equivalent(b1: SkewBracoid, b2: SkewBracoid) -> bool:
    """Same star group (table equality) and identical lambda-images in Hol(N)."""
    if b1.N.table != b2.N.table:
        return False
    return b1.lambda_image() == b2.lambda_image()
