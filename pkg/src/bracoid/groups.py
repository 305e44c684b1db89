"""Finite groups as Cayley tables over element indices 0..n-1.

Index 0 is always the identity.  All derived canonical forms (sorted element
lists, coset labels by least representative, lexicographic permutation order)
flow from that convention, so structural equality is decidable by comparing
tuples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .perms import (
    DEFAULT_AUT_BOUND,
    BoundExceededError,
    PermGroup,
    Permutation,
    _all_subgroup_sets,
    _Indexed,
    resolve_bound,
)

# Full associativity and pairwise-homomorphism scans are exhaustive up to this
# order; beyond it, checks fall back to generator-based arguments (still
# complete proofs, not sampling) or fixed-seed sampling where noted.
EXHAUSTIVE_PAIR_LIMIT = 128

_ASSOC_EXHAUSTIVE_LIMIT = 64
_ASSOC_SAMPLES = 4096


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group: ``table[a][b]`` is the product a*b, identity is 0."""

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise ValueError("empty Cayley table")
        full = frozenset(range(n))
        for a, row in enumerate(self.table):
            if len(row) != n or frozenset(row) != full:
                raise ValueError(f"row {a} is not a permutation of 0..{n - 1}")
        for b in range(n):
            if frozenset(self.table[a][b] for a in range(n)) != full:
                raise ValueError(f"column {b} is not a permutation of 0..{n - 1}")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise ValueError("index 0 is not a two-sided identity")
        if n <= _ASSOC_EXHAUSTIVE_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0x5EED)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        t = self.table
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError(f"associativity fails at ({a},{b},{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a, row in enumerate(self.table):
            inv[a] = row.index(0)
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def conj(self, g: int, a: int) -> int:
        return self.mul(self.mul(g, a), self.inv(g))

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k if a != 0 else 1

    @cached_property
    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def subgroup_generated(self, gens) -> frozenset[int]:
        els = {0}
        frontier = [0]
        gens = tuple(gens)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in els:
                        els.add(y)
                        new.append(y)
            frontier = new
        return frozenset(els)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span: frozenset[int] = frozenset({0})
        while len(span) < self.order:
            g = min(i for i in range(self.order) if i not in span)
            gens.append(g)
            span = self.subgroup_generated(gens)
        return tuple(gens)

    def is_subgroup(self, subset) -> bool:
        s = frozenset(subset)
        if not s or 0 not in s or not s <= frozenset(range(self.order)):
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def is_normal(self, subset) -> bool:
        s = frozenset(subset)
        if not self.is_subgroup(s):
            return False
        return all(self.conj(g, a) in s for g in self.minimal_generators for a in s)

    def normal_core(self, subset) -> frozenset[int]:
        s = frozenset(subset)
        if not self.is_subgroup(s):
            raise ValueError("normal core needs a subgroup")
        core = s
        for g in range(self.order):
            core = core & frozenset(self.conj(g, a) for a in s)
        return core

    def left_cosets(self, subset) -> list[tuple[int, ...]]:
        """Left cosets aH, sorted by least member; the identity coset comes first."""
        s = sorted(frozenset(subset))
        if not self.is_subgroup(s):
            raise ValueError("cosets need a subgroup")
        seen = set()
        cosets = []
        for a in range(self.order):
            if a in seen:
                continue
            coset = tuple(sorted(self.table[a][h] for h in s))
            seen.update(coset)
            cosets.append(coset)
        cosets.sort(key=lambda c: c[0])
        return cosets

    def quotient(self, kernel) -> tuple["FiniteGroup", "GroupHom"]:
        """Quotient by a normal subgroup, with the projection homomorphism.

        Cosets are labelled by their least member in ascending order, so the
        identity coset is index 0 and the construction is deterministic.
        """
        k = frozenset(kernel)
        if not self.is_normal(k):
            raise ValueError("quotient needs a normal subgroup")
        cosets = self.left_cosets(k)
        coset_of = {}
        for i, coset in enumerate(cosets):
            for a in coset:
                coset_of[a] = i
        reps = [c[0] for c in cosets]
        m = len(cosets)
        table = tuple(
            tuple(coset_of[self.table[reps[i]][reps[j]]] for j in range(m))
            for i in range(m)
        )
        quo = FiniteGroup(table)
        proj = GroupHom(self, quo, tuple(coset_of[a] for a in range(self.order)))
        return quo, proj

    def subgroup_as_group(self, subset) -> tuple["FiniteGroup", tuple[int, ...]]:
        """A subgroup re-indexed as a standalone group, plus its element list."""
        s = sorted(frozenset(subset))
        if not self.is_subgroup(s):
            raise ValueError("not a subgroup")
        pos = {a: i for i, a in enumerate(s)}
        table = tuple(tuple(pos[self.table[a][b]] for b in s) for a in s)
        return FiniteGroup(table), tuple(s)

    def subgroups(self, max_order: int | None = None) -> list[frozenset[int]]:
        """All subgroups as element sets, sorted by (order, elements)."""
        from .perms import DEFAULT_SUBGROUP_BOUND

        bound = resolve_bound(max_order, DEFAULT_SUBGROUP_BOUND)
        if self.order > bound:
            raise BoundExceededError(
                f"subgroup enumeration needs order <= {bound}, got {self.order}"
            )
        idx = _Indexed(tuple(Permutation(row) for row in _regular_rows(self)))
        found = _all_subgroup_sets(idx)
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def automorphisms(self, max_order: int | None = None) -> tuple[Permutation, ...]:
        """All automorphisms as permutations of element indices.

        Searches images of a greedy minimal generating set (candidates must
        match element orders) and extends each candidate tuple to a full map,
        so the cost is |G|^(#gens) rather than |G|!.
        """
        cached = self.__dict__.get("_automorphisms")
        if cached is not None:
            return cached
        bound = resolve_bound(max_order, DEFAULT_AUT_BOUND)
        if self.order > bound:
            raise BoundExceededError(
                f"automorphism search needs order <= {bound}, got {self.order}"
            )
        gens = self.minimal_generators
        by_order: dict[int, list[int]] = {}
        for a in range(self.order):
            by_order.setdefault(self.element_order(a), []).append(a)
        auts = []
        pools = [by_order[self.element_order(g)] for g in gens]
        for imgs in itertools.product(*pools):
            m = _extend_hom(self, self, gens, imgs)
            if m is not None and len(set(m)) == self.order:
                auts.append(Permutation(m))
        result = tuple(sorted(auts))
        object.__setattr__(self, "_automorphisms", result)
        return result

    def isomorphism_to(self, other: "FiniteGroup") -> tuple[int, ...] | None:
        """First isomorphism onto ``other`` in candidate order, or None."""
        if self.order != other.order or self.order_profile != other.order_profile:
            return None
        if self.is_abelian != other.is_abelian:
            return None
        gens = self.minimal_generators
        if not gens:
            return (0,)
        by_order: dict[int, list[int]] = {}
        for a in range(other.order):
            by_order.setdefault(other.element_order(a), []).append(a)
        pools = [by_order.get(self.element_order(g), []) for g in gens]
        for imgs in itertools.product(*pools):
            m = _extend_hom(self, other, gens, imgs)
            if m is not None and len(set(m)) == self.order:
                return m
        return None

    def is_isomorphic_to(self, other: "FiniteGroup") -> bool:
        return self.isomorphism_to(other) is not None

    def all_homs_to(self, other: "FiniteGroup") -> list[tuple[int, ...]]:
        """Every group homomorphism into ``other``, as image tuples."""
        gens = self.minimal_generators
        if not gens:
            return [(0,) * 1] if self.order == 1 else []
        pools = []
        for g in gens:
            o = self.element_order(g)
            pools.append([a for a in range(other.order) if o % other.element_order(a) == 0])
        out = []
        for imgs in itertools.product(*pools):
            m = _extend_hom(self, other, gens, imgs)
            if m is not None:
                out.append(m)
        return out


def _regular_rows(G: FiniteGroup):
    # Rows of the Cayley table are the left-translation permutations.
    return tuple(tuple(row) for row in G.table)


def _extend_hom(G: FiniteGroup, H: FiniteGroup, gens, imgs) -> tuple[int, ...] | None:
    """Extend generator images to a homomorphism, or None on conflict.

    BFS from the identity checks every edge (x, x*g), which pins down the map
    on all of <gens> and proves multiplicativity for arbitrary pairs by
    induction on word length.
    """
    n = G.order
    m: list[int | None] = [None] * n
    m[0] = 0
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            mx = m[x]
            for g, h in zip(gens, imgs):
                y = G.table[x][g]
                z = H.table[mx][h]
                if m[y] is None:
                    m[y] = z
                    new.append(y)
                elif m[y] != z:
                    return None
        frontier = new
    if any(v is None for v in m):
        return None  # gens failed to generate (cannot happen for minimal_generators)
    return tuple(m)  # type: ignore[arg-type]


@dataclass(frozen=True)
class GroupHom:
    """A verified homomorphism between finite groups, as an image array."""

    domain: FiniteGroup
    codomain: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        n = self.domain.order
        if len(self.images) != n:
            raise ValueError("image array length mismatch")
        if any(i < 0 or i >= self.codomain.order for i in self.images):
            raise ValueError("image out of range")
        if self.images[0] != 0:
            raise ValueError("identity must map to identity")
        dt, ct, im = self.domain.table, self.codomain.table, self.images
        if n <= EXHAUSTIVE_PAIR_LIMIT:
            for a in range(n):
                for b in range(n):
                    if im[dt[a][b]] != ct[im[a]][im[b]]:
                        raise ValueError(f"not multiplicative at ({a},{b})")
        else:
            # checking every edge (a, a*g) over a generating set proves the
            # homomorphism property for all pairs by induction on words
            for g in self.domain.minimal_generators:
                for a in range(n):
                    if im[dt[a][g]] != ct[im[a]][im[g]]:
                        raise ValueError(f"not multiplicative at ({a},{g})")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def kernel(self) -> frozenset[int]:
        return frozenset(a for a, i in enumerate(self.images) if i == 0)

    def image(self) -> frozenset[int]:
        return frozenset(self.images)

    def is_surjective(self) -> bool:
        return len(self.image()) == self.codomain.order

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.domain.order

    @staticmethod
    def identity(G: FiniteGroup) -> "GroupHom":
        return GroupHom(G, G, tuple(range(G.order)))


# ---------------------------------------------------------------------------
# standard families


@lru_cache(maxsize=None)
def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n; index i stands for the i-th power of the generator."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


@lru_cache(maxsize=None)
def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n with s*r*s^-1 = r^-1; index 2i+j is r^i s^j."""
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")

    def mul(i, j, k, l):
        return 2 * ((i + (k if j == 0 else -k)) % n) + ((j + l) % 2)

    return FiniteGroup(
        tuple(
            tuple(mul(a // 2, a % 2, b // 2, b % 2) for b in range(2 * n))
            for a in range(2 * n)
        )
    )


@lru_cache(maxsize=None)
def make_symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters, elements in lexicographic order (identity first)."""
    if n < 1 or n > 6:
        raise ValueError("symmetric group supported for 1 <= n <= 6")
    elems = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(elems)}
    table = tuple(
        tuple(pos[tuple(p[q[i]] for i in range(n))] for q in elems) for p in elems
    )
    return FiniteGroup(table)


@lru_cache(maxsize=None)
def make_quaternion() -> FiniteGroup:
    """Quaternion group Q8; index 2u+s is the unit (1,i,j,k)[u] with sign (-1)^s."""
    units = "1ijk"
    mul_unit = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }

    def mul(a, b):
        ua, sa = units[a // 2], 1 - 2 * (a % 2)
        ub, sb = units[b // 2], 1 - 2 * (b % 2)
        sign, unit = mul_unit[(ua, ub)]
        s = sign * sa * sb
        return 2 * units.index(unit) + (0 if s == 1 else 1)

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(8)) for a in range(8)))


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """Componentwise product; the pair (a, b) sits at index a*|B| + b."""
    nb = B.order
    n = A.order * nb
    table = tuple(
        tuple(
            A.table[x // nb][y // nb] * nb + B.table[x % nb][y % nb]
            for y in range(n)
        )
        for x in range(n)
    )
    return FiniteGroup(table)


def trivial_group() -> FiniteGroup:
    return make_cyclic(1)


# ---------------------------------------------------------------------------
# permutation representations


def left_regular_rep(N: FiniteGroup) -> PermGroup:
    """Image of the left regular representation; regular of order |N|."""
    elems = tuple(sorted(Permutation(tuple(row)) for row in N.table))
    gens = tuple(Permutation(tuple(N.table[g])) for g in N.minimal_generators)
    return PermGroup(N.order, elems, gens)


def automorphism_group(N: FiniteGroup, max_order: int | None = None) -> PermGroup:
    """Aut(N) as a permutation group on element indices."""
    auts = N.automorphisms(max_order=max_order)
    small = PermGroup.generate(N.order, auts).min_generators() if len(auts) > 1 else ()
    return PermGroup(N.order, auts, small if small else auts[:1])


@lru_cache(maxsize=None)
def holomorph(N: FiniteGroup, max_order: int | None = None) -> PermGroup:
    """Hol(N) = <lambda(N), Aut(N)> inside Perm(N); order |N| * |Aut(N)|."""
    lam = left_regular_rep(N)
    aut = automorphism_group(N, max_order=max_order)
    hol = PermGroup.generate(N.order, lam.generators + aut.generators)
    if hol.order != N.order * aut.order:
        raise RuntimeError("holomorph closure has unexpected order")
    return hol


def perm_group_as_group(P: PermGroup) -> tuple[FiniteGroup, dict[Permutation, int]]:
    """Abstract Cayley-table copy of a PermGroup over its sorted element list.

    The identity permutation is lexicographically least, so it lands at
    index 0 as the FiniteGroup convention requires.
    """
    by_images = {p.images: i for i, p in enumerate(P.elements)}
    images_list = [p.images for p in P.elements]
    table = []
    for pim in images_list:
        table.append(tuple(by_images[tuple(pim[k] for k in qim)] for qim in images_list))
    pos = {p: i for i, p in enumerate(P.elements)}
    return FiniteGroup(tuple(table)), pos
