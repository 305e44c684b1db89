"""Error-path and cross-invariant coverage that does not fit a single module."""

import pytest

from bracoid import (
    GammaCocyclePair,
    GroupHom,
    Permutation,
    PermGroup,
    find_isomorphism_exhaustive,
    from_gamma_cocycle,
    from_hol_subgroup,
    gamma_function,
    holomorph,
    kernel_lambda,
    left_regular_rep,
    make_cyclic,
    make_dihedral,
    make_hom,
    make_symmetric,
    perm_group_as_group,
    reduced_form,
    to_gamma_cocycle,
)
from bracoid.core import (
    CocycleError,
    HolMembershipError,
    NotSurjectiveError,
    NotTransitiveError,
    make_gamma_cocycle,
)
from helpers import family_bracoid


class TestFromHolErrors:
    def test_not_transitive(self):
        N = make_cyclic(4)
        stab = holomorph(N).point_stabilizer(0)
        with pytest.raises(NotTransitiveError):
            from_hol_subgroup(N, stab)

    def test_not_inside_holomorph(self):
        N = make_cyclic(4)
        outside = PermGroup.generate(4, [Permutation((1, 3, 0, 2))])
        with pytest.raises(HolMembershipError):
            from_hol_subgroup(N, outside)

    def test_delta_not_surjective(self):
        N = make_cyclic(4)
        A = left_regular_rep(N)
        abstract, _ = perm_group_as_group(A)
        trivial_images = (0,) * 4
        delta = GroupHom(abstract, abstract, trivial_images)
        with pytest.raises(NotSurjectiveError):
            from_hol_subgroup(N, A, delta)


class TestCocycleErrors:
    def test_non_surjective_pi(self):
        b = family_bracoid(4, 4)
        good = to_gamma_cocycle(b)
        with pytest.raises(NotSurjectiveError):
            make_gamma_cocycle(b.G, b.N, good.gamma, (0,) * b.G.order)

    def test_cocycle_identity_violation(self):
        b = family_bracoid(4, 4)
        good = to_gamma_cocycle(b)
        pi = list(good.pi)
        pi[2], pi[4] = pi[4], pi[2]
        with pytest.raises(CocycleError):
            make_gamma_cocycle(b.G, b.N, good.gamma, tuple(pi))

    def test_gamma_not_automorphism(self):
        b = family_bracoid(4, 4)
        good = to_gamma_cocycle(b)
        gamma = list(good.gamma)
        gamma[1] = Permutation((1, 0, 3, 2))  # not multiplicative on C4
        with pytest.raises(CocycleError):
            make_gamma_cocycle(b.G, b.N, tuple(gamma), good.pi)

    def test_dataclass_direct_use_survives_roundtrip(self):
        b = family_bracoid(6, 3)
        p = to_gamma_cocycle(b)
        clone = GammaCocyclePair(p.G, p.N, p.gamma, p.pi)
        assert from_gamma_cocycle(clone).action == b.action


class TestIsomorphismInvariants:
    def test_kernel_transported_by_non_reduced_isomorphism(self):
        # twist a non-reduced bracoid by a G-automorphism and find the
        # isomorphism exhaustively; the action kernels must correspond
        b1 = family_bracoid(4, 2)
        aut = b1.G.automorphisms()[1]
        inverse = [0] * 8
        for g in range(8):
            inverse[aut.images[g]] = g
        action = [b1.action[inverse[g]] for g in range(8)]
        from bracoid import verify_bracoid

        b2 = verify_bracoid(b1.G, b1.N, action)
        h = find_isomorphism_exhaustive(b1, b2)
        assert h is not None
        assert frozenset(h.phi(g) for g in kernel_lambda(b1)) == kernel_lambda(b2)

    def test_composition_of_isomorphisms_validates(self):
        from bracoid import find_isomorphism

        S3 = make_symmetric(3)
        subs = [s for s in holomorph(S3).transitive_subgroups() if s.order == 6]
        pairs = [from_hol_subgroup(S3, A) for A in subs]
        iso_pairs = []
        for i, b1 in enumerate(pairs):
            for b2 in pairs[i + 1 :]:
                h = find_isomorphism(b1, b2)
                if h is not None:
                    iso_pairs.append((b1, b2, h))
        assert iso_pairs
        for b1, b2, h in iso_pairs:
            back = find_isomorphism(b2, b1)
            composed = tuple(back.phi(h.phi(g)) for g in range(b1.G.order))
            make_hom(b1, b1, GroupHom(b1.G, b1.G, composed))


class TestGammaFactorsThroughReduction:
    def test_reduced_gamma_matches(self):
        b = family_bracoid(8, 4)
        red, proj = reduced_form(b)
        gam = gamma_function(b)
        red_gam = gamma_function(red)
        for g in range(b.G.order):
            assert red_gam[proj(g)] == gam[g]


class TestCycleParsing:
    @pytest.mark.parametrize("bad", ["(0 1", "0 1)", "(0 9)", "(0 0)", "(x)"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            Permutation.from_cycles(bad, 4)

    def test_overlapping_cycles_compose(self):
        # right-to-left composition, matching the * operator
        p = Permutation.from_cycles("(0 1)(1 2)", 3)
        q = Permutation.from_cycles("(0 1)", 3) * Permutation.from_cycles("(1 2)", 3)
        assert p == q
