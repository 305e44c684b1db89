"""Command-line surface.

Subcommands: verify, enumerate, hgs, reduce, iso, ideals.  All output is
JSON lines (or an indented array with --pretty) in canonical order, so
identical inputs give byte-identical outputs.  Exit codes: 0 ok, 1 semantic
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import enumerate_classes
from .core import (
    BracoidError,
    is_equivalent,
    kernel_lambda,
    reduced_form,
)
from .homs import reduced_forms_isomorphic
from .hopf_galois import (
    coset_space,
    enumerate_hgs,
    hg_correspondence,
    hgs_isomorphism_classes,
)
from .ideals import enumerate_ideals
from .perms import BoundExceededError
from .specs import (
    SpecError,
    bracoid_to_json_dict,
    load_bracoid,
    parse_group_spec,
    rho_generator_strings,
)

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_USAGE = 2


def _emit(records: list[dict], args) -> None:
    if args.pretty:
        text = json.dumps(records, indent=2, sort_keys=True)
    else:
        text = "\n".join(json.dumps(r, sort_keys=True) for r in records)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_common(sub):
    sub.add_argument("--pretty", action="store_true", help="indented JSON array output")
    sub.add_argument("--out", default=None, help="write output to a file")
    sub.add_argument(
        "--max-order",
        type=int,
        default=None,
        help="override the default search bounds (use with care)",
    )


def _warn_bound(args):
    if args.max_order is not None:
        print(
            f"warning: search bound overridden to {args.max_order}; "
            "large searches may be slow",
            file=sys.stderr,
        )


def cmd_verify(args) -> int:
    try:
        b = load_bracoid(args.file)
    except SpecError as exc:
        print(json.dumps({"status": "parse-error", "detail": str(exc)}, sort_keys=True))
        return EXIT_USAGE
    except BracoidError as exc:
        payload = {"status": "invalid", "detail": str(exc)}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            payload["witness"] = list(witness)
        print(json.dumps(payload, sort_keys=True))
        return EXIT_SEMANTIC
    _emit(
        [{"status": "valid", "G_order": b.G.order, "N_order": b.N.order}],
        args,
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _warn_bound(args)
    try:
        N, n_spec = parse_group_spec(args.n_spec)
        G = g_spec = None
        if args.g:
            G, g_spec = parse_group_spec(args.g)
        records = enumerate_classes(
            N, n_spec, G=G, g_spec=g_spec, max_order=args.max_order
        )
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except BoundExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SEMANTIC
    _emit(
        [
            {
                "N_spec": r.n_spec,
                "G_spec": r.g_spec,
                "equivalence_class_id": r.equivalence_class_id,
                "isomorphism_class_id": r.isomorphism_class_id,
                "lambda_image_order": r.lambda_image_order,
                "reduced": r.reduced,
                "bracoid": bracoid_to_json_dict(r.bracoid, n_spec=r.n_spec),
            }
            for r in records
        ],
        args,
    )
    return EXIT_OK


def cmd_hgs(args) -> int:
    _warn_bound(args)
    try:
        G, g_spec = parse_group_spec(args.g_spec)
        gens = []
        if args.gprime:
            try:
                gens = [int(tok) for tok in args.gprime.replace(",", " ").split()]
            except ValueError:
                raise SpecError(f"bad generator list {args.gprime!r}") from None
        if any(g < 0 or g >= G.order for g in gens):
            raise SpecError("G' generator index out of range")
        gp = G.subgroup_generated(gens)
        space = coset_space(G, gp)
        structures = enumerate_hgs(space, max_size=args.max_order)
        classes = hgs_isomorphism_classes(space, structures, max_order=args.max_order)
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (BoundExceededError, BracoidError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SEMANTIC
    class_of = {}
    for cid, cls in enumerate(classes):
        for i in cls:
            class_of[i] = cid
    _emit(
        [
            {
                "G": g_spec,
                "G_prime": sorted(gp),
                "star_table": [list(row) for row in h.star.table],
                "rho_gens": rho_generator_strings(h.rho),
                "iso_class": class_of[i],
                "correspondence": [e.to_json_dict() for e in hg_correspondence(h)],
            }
            for i, h in enumerate(structures)
        ],
        args,
    )
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        b = load_bracoid(args.file)
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except BracoidError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SEMANTIC
    red, proj = reduced_form(b)
    _emit(
        [
            {
                "kernel": sorted(kernel_lambda(b)),
                "reduced_G_order": red.G.order,
                "projection": list(proj.images),
                "bracoid": bracoid_to_json_dict(red),
                "was_reduced": red.G.order == b.G.order,
            }
        ],
        args,
    )
    return EXIT_OK


def cmd_iso(args) -> int:
    try:
        b1 = load_bracoid(args.file1)
        b2 = load_bracoid(args.file2)
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except BracoidError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SEMANTIC
    hom = reduced_forms_isomorphic(b1, b2)
    record: dict = {
        "reduced_forms_isomorphic": hom is not None,
        "equivalent": is_equivalent(b1, b2),
    }
    if hom is not None:
        record["phi"] = list(hom.phi.images)
        record["phi_n"] = list(hom.phi_n.images)
    _emit([record], args)
    return EXIT_OK


def cmd_ideals(args) -> int:
    try:
        b = load_bracoid(args.file)
        reports = enumerate_ideals(b, max_order=args.max_order)
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (BracoidError, BoundExceededError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SEMANTIC
    _emit([r.to_json_dict() for r in reports], args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracoid",
        description="construct, verify, classify, and relate finite skew bracoids",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="validate a bracoid JSON file")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("enumerate", help="equivalence classes of bracoids over N")
    p.add_argument("n_spec", help="group spec for N, e.g. C4 or D3")
    p.add_argument("--g", default=None, help="optional acting-group spec")
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("hgs", help="Hopf-Galois structures on G/G'")
    p.add_argument("g_spec", help="group spec for G")
    p.add_argument(
        "--gprime",
        default="",
        help="comma- or space-separated generator indices of G' (empty = trivial)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_hgs)

    p = subs.add_parser("reduce", help="reduced form of a bracoid file")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_reduce)

    p = subs.add_parser("iso", help="isomorphism of the reduced forms of two files")
    p.add_argument("file1")
    p.add_argument("file2")
    _add_common(p)
    p.set_defaults(func=cmd_iso)

    p = subs.add_parser("ideals", help="classify every subgroup of N")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_ideals)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
