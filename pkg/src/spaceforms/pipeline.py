"""Report and verification pipelines driven by a Manifest."""

import numpy as np

from .classify import classify, validate_constraints
from .families import build_family
from .geometry import (
    adjoint_matrix,
    adjoint_preimages,
    conjugation_pullback_residual,
    contact_condition,
    fixed_point_oracle,
    framing_transition_residual,
    invariance_check,
    pair_to_vec,
    qmul,
    sample_s3,
    _sample_quaternions,
)
from .spingroups import DEFAULT_CAP, closure, group_to_json
from .topology import contact_verdicts

FRAMING_SAMPLES = 500
FRAMING_TOL = 1e-10
BROKEN_DEFECT = 0.1


def construct_group(manifest, cap=DEFAULT_CAP):
    if manifest.spec is not None:
        return build_family(manifest.spec, cap=cap)
    return closure(
        manifest.generators,
        conductor=manifest.conductor or None,
        cap=cap,
    )


def _group_info(group):
    return {
        "order": group.order,
        "pairs": len(group.elements),
        "conductor": group.conductor,
    }


def run_report(manifest, cap=DEFAULT_CAP):
    """Construct, classify and evaluate the contact/framing verdicts."""
    group = construct_group(manifest, cap=cap)
    result = classify(group)
    report = contact_verdicts(group)
    out = {
        "group": _group_info(group),
        "classification": result.to_json(),
        "constraint_violations": validate_constraints(result),
        "contact": report.to_json(),
    }
    if manifest.spec is not None:
        out["spec"] = manifest.spec.to_json()
    return out


def _check(name, params, passed, worst, witness=None):
    row = {
        "name": name,
        "params": params,
        "pass": bool(passed),
        "worst_residual": float(worst),
    }
    if witness is not None:
        row["witness"] = witness
    return row


def run_verify(manifest, cap=DEFAULT_CAP):
    """Numeric verification suite for the manifest's group.

    Checks: positivity of the standard contact form, plane invariance per
    group element against the exact circle-union membership of its right
    component, exact/numeric freeness agreement per element, the adjoint
    2:1 covering, and the two framing identities.
    """
    group = construct_group(manifest, cap=cap)
    seed, count, tol = manifest.seed, manifest.samples, manifest.tol
    checks = []

    samples = sample_s3(count, seed)
    margins = [contact_condition(p) for p in samples]
    worst = min(margins)
    checks.append(_check(
        "contact_condition",
        {"seed": seed, "samples": count, "threshold": 1e-3},
        worst > 1e-3, worst,
    ))

    mismatches = []
    worst_inv, max_broken = 0.0, 0.0
    n_expected_broken = 0
    for e in group.elements:
        expected = e.right.in_circle_union()
        res = invariance_check(e, samples, tol=tol)
        if expected:
            worst_inv = max(worst_inv, res.worst_defect)
        else:
            n_expected_broken += 1
            max_broken = max(max_broken, res.worst_defect)
        if res.invariant != expected:
            mismatches.append(e)
    inv_pass = not mismatches and (n_expected_broken == 0 or max_broken > BROKEN_DEFECT)
    checks.append(_check(
        "plane_invariance",
        {"seed": seed, "samples": count, "tol": tol,
         "elements": len(group.elements), "expected_broken": n_expected_broken,
         "max_broken_defect": max_broken},
        inv_pass, worst_inv,
        witness=None if not mismatches else repr(mismatches[0]),
    ))

    disagreements = 0
    for e in group.elements:
        if e.is_identity() or e.is_minus_identity():
            continue
        exact_fixed = e.left.real_part() == e.right.real_part()
        numeric_fixed = fixed_point_oracle(e, tol=1e-9) is not None
        if exact_fixed != numeric_fixed:
            disagreements += 1
    checks.append(_check(
        "fixed_point_agreement",
        {"elements": len(group.elements), "tol": 1e-9},
        disagreements == 0, float(disagreements),
    ))

    qs = _sample_quaternions(100, seed)
    worst = max(
        float(np.linalg.norm(adjoint_matrix(q) - adjoint_matrix((-q[0], -q[1]))))
        for q in qs
    )
    checks.append(_check(
        "adjoint_double_cover", {"seed": seed, "samples": 100, "tol": 1e-12},
        worst <= 1e-12, worst,
    ))

    worst = 0.0
    two_sheets = True
    for q in _sample_quaternions(50, seed + 1):
        rot = adjoint_matrix(q)
        a, b = adjoint_preimages(rot)
        if np.linalg.norm(pair_to_vec(a) + pair_to_vec(b)) > 1e-12:
            two_sheets = False
        worst = max(worst, float(np.linalg.norm(adjoint_matrix(a) - rot)))
    checks.append(_check(
        "adjoint_preimages", {"seed": seed + 1, "samples": 50, "tol": 1e-8},
        two_sheets and worst <= 1e-8, worst,
    ))

    qs = _sample_quaternions(FRAMING_SAMPLES, seed)
    worst = max(framing_transition_residual(q) for q in qs)
    checks.append(_check(
        "framing_transition",
        {"seed": seed, "samples": FRAMING_SAMPLES, "tol": FRAMING_TOL},
        worst <= FRAMING_TOL, worst,
    ))
    worst = max(conjugation_pullback_residual(q) for q in qs)
    checks.append(_check(
        "conjugation_pullback",
        {"seed": seed, "samples": FRAMING_SAMPLES, "tol": FRAMING_TOL},
        worst <= FRAMING_TOL, worst,
    ))

    return {
        "group": _group_info(group),
        "params": {"seed": seed, "samples": count, "tol": tol},
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks),
    }


def construct_payload(manifest, cap=DEFAULT_CAP, include_elements=True):
    group = construct_group(manifest, cap=cap)
    payload = group_to_json(group, include_elements=include_elements)
    payload["order"] = group.order
    return payload
