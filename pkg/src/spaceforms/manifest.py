"""Manifest parsing: JSON descriptions of a group plus verification config."""

import json
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError, ConstraintViolated
from .families import FAMILIES, FamilySpec, validate_spec
from .spingroups import pair_from_json

_TOP_KEYS = {
    "family", "params", "side",
    "generators", "conductor",
    "seed", "samples", "tol",
    "out", "format",
}
_PARAM_KEYS = {"n", "m", "k"}


@dataclass(frozen=True)
class Manifest:
    spec: object = None            # FamilySpec, or None for raw generators
    generators: tuple = ()
    conductor: int = 0
    seed: int = 42
    samples: int = 1000
    tol: float = 1e-9
    out: str = ""
    fmt: str = "json"


def _int_field(obj, key, default, minimum):
    val = obj.get(key, default)
    if not isinstance(val, int) or isinstance(val, bool) or val < minimum:
        raise ValidationError(f"{key} must be an integer >= {minimum}")
    return val


def parse_manifest(text):
    """Validated Manifest from JSON text; unknown keys are rejected and
    family constraints are checked up front."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ValidationError("manifest must be a JSON object")
    unknown = set(obj) - _TOP_KEYS
    if unknown:
        raise ValidationError(f"unknown manifest keys: {sorted(unknown)}")

    has_family = "family" in obj
    has_gens = "generators" in obj
    if has_family == has_gens:
        raise ValidationError("exactly one of 'family' and 'generators' must be present")

    seed = _int_field(obj, "seed", 42, 0)
    samples = _int_field(obj, "samples", 1000, 1)
    tol = obj.get("tol", 1e-9)
    if not isinstance(tol, (int, float)) or isinstance(tol, bool) or tol <= 0:
        raise ValidationError("tol must be a positive number")
    out = obj.get("out", "")
    fmt = obj.get("format", "json")
    if fmt not in ("json", "csv", "text"):
        raise ValidationError("format must be one of json, csv, text")

    if has_family:
        fam = obj["family"]
        if fam not in FAMILIES:
            raise ValidationError(f"unknown family {fam!r}; expected one of {list(FAMILIES)}")
        params = obj.get("params", {})
        if not isinstance(params, dict):
            raise ValidationError("params must be an object")
        bad = set(params) - _PARAM_KEYS
        if bad:
            raise ValidationError(f"unknown params keys: {sorted(bad)}")
        for key, val in params.items():
            if not isinstance(val, int) or isinstance(val, bool):
                raise ValidationError(f"params.{key} must be an integer")
        side = obj.get("side", "left")
        if side not in ("left", "right"):
            raise ValidationError("side must be 'left' or 'right'")
        spec = FamilySpec(
            fam,
            n=params.get("n", 0),
            m=params.get("m", 1),
            k=params.get("k", 3 if fam == "DiagonalQ" else 0),
            side=side,
        )
        try:
            validate_spec(spec)
        except ConstraintViolated as exc:
            raise ValidationError(str(exc)) from None
        return Manifest(spec=spec, seed=seed, samples=samples, tol=float(tol),
                        out=out, fmt=fmt)

    gens_json = obj["generators"]
    if not isinstance(gens_json, list) or not gens_json:
        raise ValidationError("generators must be a non-empty list of pairs")
    try:
        gens = tuple(pair_from_json(g) for g in gens_json)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad generator entry: {exc}") from None
    conductor = _int_field(obj, "conductor", 0, 0)
    return Manifest(generators=gens, conductor=conductor, seed=seed,
                    samples=samples, tol=float(tol), out=out, fmt=fmt)
