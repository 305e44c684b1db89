"""Shared constructions for the test suite: the dihedral-on-cyclic family and
the small-order bracoid population used by the universally quantified tests."""

from functools import lru_cache

from bracoid import (
    FiniteGroup,
    SkewBracoid,
    direct_product,
    from_hol_subgroup,
    holomorph,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_symmetric,
    verify_bracoid,
)


def family_bracoid(n: int, d: int) -> SkewBracoid:
    """(D_n, C_d) with r^i s^j acting by eta^k |-> eta^(i + (-1)^j k); needs d | n."""
    assert n % d == 0
    G = make_dihedral(n)
    N = make_cyclic(d)
    action = [
        [(a // 2 + (k if a % 2 == 0 else -k)) % d for k in range(d)]
        for a in range(2 * n)
    ]
    return verify_bracoid(G, N, action)


def family_brace_tables(n: int):
    """The skew brace on the D_n carrier: star is r^(i+k) s^(j+l), dot is dihedral."""
    star = tuple(
        tuple(2 * ((a // 2 + b // 2) % n) + ((a + b) % 2) for b in range(2 * n))
        for a in range(2 * n)
    )
    return FiniteGroup(star), make_dihedral(n)


def r_power_subgroup(n: int, d: int) -> frozenset[int]:
    """<r^d> inside D_n as element indices."""
    return frozenset(2 * ((d * m) % n) for m in range(n // d))


def r_s_subgroup(n: int, e: int) -> frozenset[int]:
    """<r^e, s> inside D_n as element indices."""
    return frozenset(2 * ((e * m) % n) + j for m in range(n // e) for j in (0, 1))


@lru_cache(maxsize=None)
def groups_up_to_6():
    """One representative per isomorphism type of order <= 6."""
    C = make_cyclic
    return (
        ("C1", C(1)),
        ("C2", C(2)),
        ("C3", C(3)),
        ("C4", C(4)),
        ("C2xC2", direct_product(C(2), C(2))),
        ("C5", C(5)),
        ("C6", C(6)),
        ("D3", make_dihedral(3)),
    )


@lru_cache(maxsize=None)
def groups_of_order_8():
    C = make_cyclic
    return (
        ("C8", C(8)),
        ("C4xC2", direct_product(C(4), C(2))),
        ("C2xC2xC2", direct_product(direct_product(C(2), C(2)), C(2))),
        ("D4", make_dihedral(4)),
        ("Q8", make_quaternion()),
    )


@lru_cache(maxsize=None)
def groups_order_7_to_8():
    return (("C7", make_cyclic(7)),) + groups_of_order_8()


@lru_cache(maxsize=None)
def hol_classes(name_and_group):
    name, N = name_and_group
    return tuple(holomorph(N).transitive_subgroups())


@lru_cache(maxsize=None)
def population_upto_6():
    """Equivalence-class representatives over every N of order <= 6, plus the
    dihedral family instances; the shared population for the sweep tests."""
    out = []
    for name, N in groups_up_to_6():
        for i, A in enumerate(hol_classes((name, N))):
            out.append((f"{name}:class{i}(|A|={A.order})", from_hol_subgroup(N, A)))
    for n in range(1, 7):
        for d in range(1, n + 1):
            if n % d == 0:
                out.append((f"fam({n},{d})", family_bracoid(n, d)))
    return tuple(out)
