"""Permutations of {0..n-1} and permutation groups with fully enumerated closure.

Conventions used throughout the package:

* permutations compose right-to-left, ``(p * q)(x) == p(q(x))``;
* the identity permutation is lexicographically least among all permutations
  of its degree, so sorted element lists always start with the identity;
* a ``PermGroup`` stores its full element list sorted, which makes structural
  equality of groups plain tuple equality.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_SUBGROUP_BOUND = 48
DEFAULT_AUT_BOUND = 24

# Ceiling on the p-part of |P| for the Sylow-seeded transitive subgroup
# search; covers every holomorph of a group of order <= 8.
_SYLOW_PART_BOUND = 128


class BoundExceededError(Exception):
    """An enumeration was asked to search beyond its configured bound."""


def resolve_bound(explicit: int | None, default: int) -> int:
    """Effective search bound: explicit argument, else BRACOID_MAX_ORDER, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("BRACOID_MAX_ORDER")
    if env:
        return int(env)
    return default


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0..degree-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # compositions of valid permutations need no re-validation
        return _raw(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return _raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @staticmethod
    def from_cycles(text: str, degree: int) -> "Permutation":
        """Parse 0-based cycle notation, e.g. ``"(0 1 2)(3 4)"``; fixed points omitted."""
        text = text.strip()
        if text in ("", "()", "id"):
            return Permutation.identity(degree)
        if text.count("(") != text.count(")") or not text.startswith("("):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for chunk in text.replace(")", ")\n").split("\n"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"bad cycle notation: {text!r}")
            body = chunk[1:-1].replace(",", " ").split()
            cycle = [int(tok) for tok in body]
            if any(pt < 0 or pt >= degree for pt in cycle):
                raise ValueError(f"cycle point out of range 0..{degree - 1}: {chunk!r}")
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle: {chunk!r}")
            if cycle:
                cycles.append(cycle)
        images = list(range(degree))
        # apply cycles right-to-left, matching composition order
        for cycle in reversed(cycles):
            step = list(range(degree))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                step[a] = b
            images = [step[i] for i in images]
        return Permutation(tuple(images))

    def to_cycles(self) -> str:
        """Canonical cycle string: cycles sorted by least point, fixed points omitted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            pt = self.images[start]
            while pt != start:
                cycle.append(pt)
                seen[pt] = True
                pt = self.images[pt]
            if len(cycle) > 1:
                out.append("(" + " ".join(str(p) for p in cycle) + ")")
        return "".join(out) if out else "()"

    def __str__(self) -> str:
        return self.to_cycles()


def _raw(images: tuple[int, ...]) -> Permutation:
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


@dataclass(frozen=True)
class PermGroup:
    """A permutation group given by generators together with its enumerated closure."""

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    @staticmethod
    def trivial(degree: int) -> "PermGroup":
        return PermGroup(degree, (Permutation.identity(degree),), ())

    @staticmethod
    def generate(degree: int, gens) -> "PermGroup":
        """Close a generating set by breadth-first products."""
        gens = tuple(gens)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        els = {Permutation.identity(degree)}
        frontier = list(els)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in els:
                        els.add(y)
                        new.append(y)
            frontier = new
        return PermGroup(degree, tuple(sorted(els)), gens)

    @staticmethod
    def from_elements(degree: int, elements, generators=None) -> "PermGroup":
        """Wrap an already-closed element set; closure is re-checked for small orders."""
        els = tuple(sorted(set(elements)))
        if not els or not els[0].is_identity():
            raise ValueError("element set must contain the identity")
        if len(els) <= 512:
            as_set = set(els)
            for p in els:
                for q in els:
                    if p * q not in as_set:
                        raise ValueError("element set is not closed under composition")
        gens = tuple(generators) if generators is not None else els
        return PermGroup(degree, els, gens)

    def min_generators(self) -> tuple[Permutation, ...]:
        """A small generating list, grown greedily in element order."""
        cached = self.__dict__.get("_min_generators")
        if cached is not None:
            return cached
        gens: list[Permutation] = []
        if self.order > 1:
            span = {Permutation.identity(self.degree)}
            for p in self.elements:
                if p in span:
                    continue
                gens.append(p)
                span = set(PermGroup.generate(self.degree, gens).elements)
                if len(span) == self.order:
                    break
        result = tuple(gens)
        object.__setattr__(self, "_min_generators", result)
        return result

    def orbit(self, point: int) -> frozenset[int]:
        return frozenset(p.images[point] for p in self.elements)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def point_stabilizer(self, point: int) -> "PermGroup":
        stab = [p for p in self.elements if p.images[point] == point]
        return PermGroup(self.degree, tuple(sorted(stab)), ())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order == self.degree

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return set(self.elements) <= set(other.elements)

    def conjugated_by(self, t: Permutation) -> "PermGroup":
        tinv = t.inverse()
        els = tuple(sorted(t * p * tinv for p in self.elements))
        gens = tuple(t * g * tinv for g in self.generators)
        return PermGroup(self.degree, els, gens)

    def subgroups(self, max_order: int | None = None) -> list["PermGroup"]:
        """All subgroups, each canonically sorted; exhaustive, so bounded."""
        bound = resolve_bound(max_order, DEFAULT_SUBGROUP_BOUND)
        if self.order > bound:
            raise BoundExceededError(
                f"subgroup enumeration needs |P| <= {bound}, got {self.order}"
            )
        idx = _Indexed(self.elements)
        found = _all_subgroup_sets(idx)
        return _sets_to_groups(self, idx, found)

    def transitive_subgroups(self, max_order: int | None = None) -> list["PermGroup"]:
        """All transitive subgroups.

        Within the exhaustive bound this filters ``subgroups``.  Above it, for
        prime-power degree, every transitive subgroup contains a transitive
        Sylow p-subgroup, so the search seeds on transitive subgroups of one
        Sylow p-subgroup and grows upward through conjugacy-class
        representatives.
        """
        bound = resolve_bound(max_order, DEFAULT_SUBGROUP_BOUND)
        if self.order <= bound:
            return [s for s in self.subgroups(max_order=bound) if s.is_transitive()]
        if not self.is_transitive():
            return []
        p = _prime_power_root(self.degree)
        if p is None:
            raise BoundExceededError(
                f"transitive enumeration above order {bound} needs prime-power degree, "
                f"got degree {self.degree} with |P| = {self.order}"
            )
        idx = _Indexed(self.elements)
        part = 1
        while self.order % (part * p) == 0:
            part *= p
        if part > _SYLOW_PART_BOUND:
            raise BoundExceededError(
                f"Sylow {p}-part {part} exceeds internal bound {_SYLOW_PART_BOUND}"
            )
        found = _transitive_subgroup_sets(idx, self.degree, p, part)
        return _sets_to_groups(self, idx, found)


def closure(degree: int, gens) -> PermGroup:
    """Enumerated closure of a generating list (the empty list gives the trivial group)."""
    return PermGroup.generate(degree, gens)


def _prime_power_root(n: int) -> int | None:
    if n < 2:
        return None
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            return p if m == 1 else None
        p += 1
    return n  # n itself prime


class _Indexed:
    """A permutation group re-encoded as index arithmetic on 0..n-1.

    Element 0 is the identity (sorted order guarantees it).  The full
    multiplication table is materialized once; all subgroup searches then run
    on plain ints.
    """

    def __init__(self, elements: tuple[Permutation, ...]):
        self.elements = elements
        self.n = len(elements)
        index_of = {p.images: i for i, p in enumerate(elements)}
        self.index_of = index_of
        n = self.n
        flat = [0] * (n * n)
        for i, p in enumerate(elements):
            row = i * n
            pim = p.images
            for j, q in enumerate(elements):
                flat[row + j] = index_of[tuple(pim[k] for k in q.images)]
        self.flat = flat
        inv = [0] * n
        for i in range(n):
            row = i * n
            for j in range(n):
                if flat[row + j] == 0:
                    inv[i] = j
                    break
        self.inv = inv
        orders = [1] * n
        for i in range(n):
            x, k = i, 1
            while x != 0:
                x = flat[x * n + i]
                k += 1
            orders[i] = k if i != 0 else 1
        self.orders = orders

    def close(self, gens, cap: int | None = None) -> frozenset[int] | None:
        """Subgroup generated by ``gens``; None if a cap is given and exceeded."""
        n, flat = self.n, self.flat
        els = {0}
        add = els.add
        frontier = [0]
        pop = frontier.pop
        push = frontier.append
        while frontier:
            row = pop() * n
            for g in gens:
                y = flat[row + g]
                if y not in els:
                    if cap is not None and len(els) >= cap:
                        return None
                    add(y)
                    push(y)
        return frozenset(els)

    def conj_set(self, subset: frozenset[int], t: int) -> frozenset[int]:
        n, flat, ti = self.n, self.flat, self.inv[t]
        return frozenset(flat[flat[t * n + x] * n + ti] for x in subset)

    def orbit0(self, subset) -> set[int]:
        return {self.elements[i].images[0] for i in subset}

    def min_generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span = frozenset({0})
        while len(span) < self.n:
            g = min(i for i in range(self.n) if i not in span)
            gens.append(g)
            span = self.close(gens)
        return tuple(gens)


def _all_subgroup_sets(idx: _Indexed, restrict=None, max_order: int | None = None):
    """All subgroups as frozensets of indices, by bottom-up generator growth.

    Every subgroup K arises through a chain e < H_1 < ... < K adjoining one
    element at a time, and <H, g> = <H, h*g> for h in H, so it suffices to
    extend each found subgroup by one representative per H-coset.
    ``restrict`` confines the search inside a fixed subset (used for Sylow
    lattices); ``max_order`` prunes closures beyond the cap, which is still
    exhaustive for the subgroups within the cap.
    """
    pool = sorted(restrict) if restrict is not None else range(idx.n)
    flat, n = idx.flat, idx.n
    trivial = frozenset({0})
    found: dict[frozenset[int], tuple[int, ...]] = {trivial: ()}
    stack: list[tuple[frozenset[int], tuple[int, ...]]] = [(trivial, ())]
    while stack:
        H, gens = stack.pop()
        done = set(H)
        for g in pool:
            if g in done:
                continue
            for h in H:
                done.add(flat[h * n + g])
            K = idx.close(gens + (g,), cap=max_order)
            if K is None or K in found:
                continue
            found[K] = gens + (g,)
            stack.append((K, gens + (g,)))
    return found


def _sylow_set(idx: _Indexed, p: int, part: int) -> tuple[frozenset[int], tuple[int, ...]]:
    """One Sylow p-subgroup, grown greedily through p-subgroups."""
    H: frozenset[int] = frozenset({0})
    gens: tuple[int, ...] = ()
    while len(H) < part:
        for g in range(1, idx.n):
            if g in H or not _is_power_of(idx.orders[g], p):
                continue
            K = idx.close(gens + (g,), cap=part)
            if K is None or len(K) <= len(H) or not _is_power_of(len(K), p):
                continue
            H, gens = K, gens + (g,)
            break
        else:
            raise RuntimeError("Sylow growth stalled; should be impossible")
    return H, gens


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _transitive_subgroup_sets(idx: _Indexed, degree: int, p: int, part: int):
    """Transitive subgroups of a prime-power-degree group, via Sylow seeding.

    A transitive group on p^k points has a transitive Sylow p-subgroup, and
    every p-subgroup is conjugate into a fixed Sylow subgroup S.  So the
    transitive subgroups of S seed the search, classes are closed under
    conjugation, and upward growth over class representatives reaches every
    transitive subgroup.
    """
    syl, _ = _sylow_set(idx, p, part)
    lattice = _all_subgroup_sets(idx, restrict=syl)
    whole_gens = idx.min_generators()

    seen: dict[frozenset[int], None] = {}
    queue: list[tuple[frozenset[int], tuple[int, ...]]] = []

    def register(K: frozenset[int], gens: tuple[int, ...]):
        if K in seen:
            return
        orbit = {K}
        frontier = [K]
        while frontier:
            J = frontier.pop()
            for t in whole_gens:
                Jc = idx.conj_set(J, t)
                if Jc not in orbit:
                    orbit.add(Jc)
                    frontier.append(Jc)
        for J in orbit:
            seen[J] = None
        queue.append((K, gens))

    for K, gens in sorted(lattice.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        if len(idx.orbit0(K)) == degree:
            register(K, gens)

    flat, n = idx.flat, idx.n
    qi = 0
    while qi < len(queue):
        H, gens = queue[qi]
        qi += 1
        done = set(H)
        for g in range(1, n):
            if g in done:
                continue
            for h in H:
                done.add(flat[h * n + g])
            K = idx.close(gens + (g,))
            register(K, gens + (g,))
    return {K: None for K in seen}


def _sets_to_groups(parent: PermGroup, idx: _Indexed, found) -> list[PermGroup]:
    out = []
    for subset in found:
        els = tuple(sorted(idx.elements[i] for i in subset))
        gens_idx = found[subset] if isinstance(found, dict) and found[subset] else None
        gens = tuple(idx.elements[i] for i in gens_idx) if gens_idx else None
        out.append(PermGroup(parent.degree, els, gens if gens is not None else els))
    out.sort(key=lambda s: (s.order, tuple(p.images for p in s.elements)))
    return out
