"""Command-line front end.

Commands: construct, classify, report, verify, catalog.  A group comes either
from --manifest PATH (JSON) or from --family/--side/--n/--m/--k flags.

Exit codes: 0 success, 1 parse or validation error, 2 math-domain error
(non-free action, unclassifiable group), 3 closure cap exceeded.
"""

import argparse
import json
import sys

from .catalog import emit_catalog
from .errors import (
    CapExceeded,
    ConstraintViolated,
    NotElliptic,
    NotFreeAction,
    ParseError,
    ValidationError,
)
from .manifest import Manifest, parse_manifest
from .pipeline import construct_payload, run_report, run_verify


def _manifest_from_args(args):
    if args.manifest:
        with open(args.manifest, "r", encoding="utf-8") as fh:
            text = fh.read()
        manifest = parse_manifest(text)
    else:
        if not args.family:
            raise ValidationError("provide --manifest or --family")
        obj = {"family": args.family, "side": args.side}
        params = {}
        if args.n is not None:
            params["n"] = args.n
        if args.m is not None:
            params["m"] = args.m
        if args.k is not None:
            params["k"] = args.k
        if params:
            obj["params"] = params
        manifest = parse_manifest(json.dumps(obj))
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.samples is not None:
        overrides["samples"] = args.samples
    if args.tol is not None:
        overrides["tol"] = args.tol
    if overrides:
        manifest = Manifest(**{**manifest.__dict__, **overrides})
    return manifest


def _flatten(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for key in obj:
            lines.extend(_flatten(obj[key], f"{prefix}{key}."))
    elif isinstance(obj, list):
        lines.append(f"{prefix[:-1]} = {json.dumps(obj)}")
    else:
        lines.append(f"{prefix[:-1]} = {json.dumps(obj)}")
    return lines


def _emit(payload, args):
    if args.format == "text":
        text = "\n".join(_flatten(payload)) + "\n"
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parser():
    p = argparse.ArgumentParser(
        prog="spaceforms",
        description="Exact isometry groups of the 3-sphere: classification, "
                    "framing and contact-structure verdicts.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("construct", "build a group and emit its generators and elements"),
        ("classify", "classify a free group into its Hopf case"),
        ("report", "classification plus contact/framing verdicts"),
        ("verify", "run the numeric verification suite"),
        ("catalog", "enumerate all families up to a group-order bound"),
    ]:
        q = sub.add_parser(name, help=helptext)
        q.add_argument("--manifest", help="path to a JSON manifest")
        q.add_argument("--family", help="family name (Cyclic, Quaternionic, "
                                        "BinT, BinO, BinI, DiagonalQ, DiagonalT)")
        q.add_argument("--side", default="left", choices=["left", "right"])
        q.add_argument("--n", type=int)
        q.add_argument("--m", type=int)
        q.add_argument("--k", type=int)
        q.add_argument("--seed", type=int)
        q.add_argument("--samples", type=int)
        q.add_argument("--tol", type=float)
        q.add_argument("--out", default="")
        q.add_argument("--format", default="json", choices=["json", "csv", "text"])
        if name == "catalog":
            q.add_argument("--max-order", type=int, required=True)
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.command == "catalog":
            out_base = args.out or "catalog"
            rows, json_path, csv_path = emit_catalog(
                args.max_order, out_base, seed=args.seed if args.seed is not None else 42
            )
            sys.stdout.write(
                f"wrote {len(rows)} rows to {json_path} and {csv_path}\n"
            )
            return 0
        manifest = _manifest_from_args(args)
        if args.command == "construct":
            _emit(construct_payload(manifest), args)
        elif args.command == "classify":
            report = run_report(manifest)
            _emit({
                "group": report["group"],
                "classification": report["classification"],
                "constraint_violations": report["constraint_violations"],
            }, args)
        elif args.command == "report":
            _emit(run_report(manifest), args)
        elif args.command == "verify":
            result = run_verify(manifest)
            _emit(result, args)
            return 0 if result["all_pass"] else 2
        return 0
    except (ParseError, ValidationError, ConstraintViolated, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except NotFreeAction as exc:
        witness = f" (witness: {exc.witness!r})" if exc.witness is not None else ""
        sys.stderr.write(f"error: {exc}{witness}\n")
        return 2
    except NotElliptic as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
