import json

import pytest

from bracoid import make_cyclic, make_dihedral, make_quaternion, make_symmetric
from bracoid.specs import (
    SpecError,
    bracoid_from_json_dict,
    bracoid_to_json_dict,
    parse_group_spec,
)
from helpers import family_bracoid


class TestMiniLanguage:
    @pytest.mark.parametrize(
        "spec,order",
        [("C1", 1), ("C6", 6), ("D4", 8), ("S3", 6), ("S4", 24), ("Q8", 8)],
    )
    def test_atoms(self, spec, order):
        G, echoed = parse_group_spec(spec)
        assert G.order == order and echoed == spec

    def test_products(self):
        G, _ = parse_group_spec("C2xC4")
        assert G.order == 8 and G.is_abelian
        H, _ = parse_group_spec("C2xC2xC2")
        assert H.order == 8 and all(H.element_order(a) <= 2 for a in range(8))

    def test_named_atoms_match_builders(self):
        assert parse_group_spec("D3")[0].table == make_dihedral(3).table
        assert parse_group_spec("S3")[0].table == make_symmetric(3).table
        assert parse_group_spec("Q8")[0].table == make_quaternion().table

    def test_inline_cayley(self):
        G, _ = parse_group_spec({"cayley": [[0, 1], [1, 0]]})
        assert G.table == make_cyclic(2).table

    def test_inline_perm_gens(self):
        G, _ = parse_group_spec({"perm_gens": ["(0 1 2)", "(0 1)"], "degree": 3})
        assert G.order == 6 and G.is_isomorphic_to(make_symmetric(3))

    def test_perm_gens_string_form(self):
        G, _ = parse_group_spec('{"perm_gens": ["(0 1 2 3)"], "degree": 4}')
        assert G.order == 4

    @pytest.mark.parametrize(
        "bad",
        ["", "C0", "Cx", "Q16", "C2x", "D-1", "{//}", {"perm_gens": ["(0 9)"], "degree": 3}],
    )
    def test_rejects_bad_specs(self, bad):
        with pytest.raises(SpecError):
            parse_group_spec(bad)


class TestBracoidJson:
    def test_roundtrip(self):
        b = family_bracoid(6, 3)
        data = bracoid_to_json_dict(b, g_spec="D6", n_spec="C3")
        again = bracoid_from_json_dict(json.loads(json.dumps(data)))
        assert again.action == b.action
        assert again.G.table == b.G.table

    def test_missing_key(self):
        with pytest.raises(SpecError):
            bracoid_from_json_dict({"G": "C2", "N": "C2"})

    def test_action_row_shape_checked(self):
        data = bracoid_to_json_dict(family_bracoid(4, 2))
        data["action"][0] = [0, "x"]
        with pytest.raises(SpecError):
            bracoid_from_json_dict(data)
