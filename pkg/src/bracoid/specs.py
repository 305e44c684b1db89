"""The group-spec mini-language and JSON (de)serialization for CLI and files.

Spec strings: ``C<n>``, ``D<n>`` (order 2n), ``S<n>``, ``Q8``, and
``x``-products such as ``C2xC4``.  Inline JSON alternatives:
``{"cayley": [[...]]}`` or ``{"perm_gens": ["(0 1 2)", ...], "degree": k}``
with 0-based cycle notation and fixed points omitted.
"""

from __future__ import annotations

import json
import re

from .core import SkewBracoid, verify_bracoid
from .groups import (
    FiniteGroup,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_symmetric,
    perm_group_as_group,
)
from .perms import PermGroup, Permutation


class SpecError(Exception):
    """Unparseable group or bracoid description."""


_ATOM_RE = re.compile(r"^([CDS])(\d+)$|^(Q8)$")


def _parse_atom(atom: str) -> FiniteGroup:
    m = _ATOM_RE.match(atom)
    if not m:
        raise SpecError(f"unrecognized group atom {atom!r}")
    if m.group(3):
        return make_quaternion()
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise SpecError(f"group atom {atom!r} needs a positive parameter")
    if kind == "C":
        return make_cyclic(n)
    if kind == "D":
        return make_dihedral(n)
    try:
        return make_symmetric(n)
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def parse_group_spec(spec) -> tuple[FiniteGroup, str]:
    """Parse a spec string or inline JSON object; returns the group and the
    canonical spec echoed back for output records."""
    if isinstance(spec, dict):
        if "cayley" in spec:
            try:
                table = tuple(tuple(int(x) for x in row) for row in spec["cayley"])
                return FiniteGroup(table), json.dumps({"cayley": [list(r) for r in table]}, sort_keys=True)
            except (TypeError, ValueError) as exc:
                raise SpecError(f"bad cayley table: {exc}") from None
        if "perm_gens" in spec:
            try:
                degree = int(spec["degree"])
                gens = [Permutation.from_cycles(s, degree) for s in spec["perm_gens"]]
            except (KeyError, TypeError, ValueError) as exc:
                raise SpecError(f"bad perm_gens spec: {exc}") from None
            group = PermGroup.generate(degree, gens)
            abstract, _ = perm_group_as_group(group)
            return abstract, json.dumps(
                {"degree": degree, "perm_gens": sorted(spec["perm_gens"])}, sort_keys=True
            )
        raise SpecError(f"JSON group spec needs 'cayley' or 'perm_gens': {spec!r}")
    if not isinstance(spec, str):
        raise SpecError(f"group spec must be a string or object, got {type(spec).__name__}")
    text = spec.strip()
    if text.startswith("{"):
        try:
            return parse_group_spec(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SpecError(f"bad JSON group spec: {exc}") from None
    parts = text.split("x")
    if not parts or any(not p for p in parts):
        raise SpecError(f"bad group spec {text!r}")
    group = _parse_atom(parts[0])
    for part in parts[1:]:
        group = direct_product(group, _parse_atom(part))
    return group, text


def group_to_spec(G: FiniteGroup) -> str:
    """Inline JSON spec for an arbitrary group (used when no name is known)."""
    return json.dumps({"cayley": [list(r) for r in G.table]}, sort_keys=True)


def bracoid_to_json_dict(b: SkewBracoid, g_spec: str | None = None, n_spec: str | None = None) -> dict:
    return {
        "G": g_spec if g_spec is not None else group_to_spec(b.G),
        "N": n_spec if n_spec is not None else group_to_spec(b.N),
        "action": [list(p.images) for p in b.action],
    }


def bracoid_from_json_dict(data: dict) -> SkewBracoid:
    if not isinstance(data, dict):
        raise SpecError("bracoid JSON must be an object")
    for key in ("G", "N", "action"):
        if key not in data:
            raise SpecError(f"bracoid JSON is missing {key!r}")
    G, _ = parse_group_spec(data["G"])
    N, _ = parse_group_spec(data["N"])
    try:
        action = [tuple(int(x) for x in row) for row in data["action"]]
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad action array: {exc}") from None
    return verify_bracoid(G, N, action)


def load_bracoid(path: str) -> SkewBracoid:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from None
    return bracoid_from_json_dict(data)


def rho_generator_strings(rho: PermGroup) -> list[str]:
    gens = rho.min_generators()
    if not gens:
        return ["()"]
    return [g.to_cycles() for g in gens]
