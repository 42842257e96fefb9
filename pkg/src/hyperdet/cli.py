"""Command line front end: analyze / generate / verify.

All reports are JSON on stdout; exit status 0 means the run itself
succeeded (a degenerate verdict is data, not a failure).  Nonzero exit
statuses: 2 for malformed input or bad arguments (with a machine readable
error object on stdout), 1 for a verify run that found counterexamples.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .bundle import constant_rank_check, fiber_at, sample_pair
from .linalg import rational_from_str, rational_to_str
from .sl2 import ModuleSpec, equivariant_basis, is_equivariant, multiplication_tensor, theorem_cases
from .tensor import Tensor3, flattening_rank, is_nondegenerate, random_tensor


def _fail(kind, message, **extra):
    obj = {"error": {"kind": kind, "message": message, **extra}}
    print(json.dumps(obj))
    return 2


def _verdict_dict(v):
    out = {"kind": v.kind}
    out["witness"] = (
        [[rational_to_str(x) for x in vec] for vec in v.witness]
        if v.witness is not None
        else None
    )
    out["certificate"] = (
        {
            "variables": list(v.certificate[0].variables) if v.certificate else [],
            "generators": [str(g) for g in v.certificate],
        }
        if v.certificate is not None
        else None
    )
    if v.field_hint is not None:
        out["fieldHint"] = {
            "prime": v.field_hint.prime,
            "a": list(v.field_hint.point_a),
            "b": list(v.field_hint.point_b),
            "certified": False,
        }
    return out


def _load_tensor(path):
    data = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return Tensor3.from_dict(json.loads(data))


def run_analyze(path, specs=None, seed=1, samples=100):
    """Analyze a tensor file; returns (exit_code, report dict)."""
    timings = {}
    t0 = time.perf_counter()
    try:
        t = _load_tensor(path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return 2, {"error": {"kind": "bad-input", "message": str(exc)}}
    timings["loadMs"] = round((time.perf_counter() - t0) * 1000, 3)

    t0 = time.perf_counter()
    surjective = flattening_rank(t) == t.dim_c
    timings["flatteningMs"] = round((time.perf_counter() - t0) * 1000, 3)

    t0 = time.perf_counter()
    verdict = is_nondegenerate(t)
    timings["decisionMs"] = round((time.perf_counter() - t0) * 1000, 3)

    t0 = time.perf_counter()
    fiber_dim = 0
    for idx in range(samples):
        a, b = sample_pair(t, seed, idx)
        fiber_dim = max(fiber_dim, len(fiber_at(t, a, b)))
    timings["samplingMs"] = round((time.perf_counter() - t0) * 1000, 3)

    equivariance = None
    if specs is not None:
        t0 = time.perf_counter()
        try:
            spec_a, spec_b, spec_c = (ModuleSpec.parse(s) for s in specs.split(";"))
            equivariance = is_equivariant(t, spec_a, spec_b, spec_c)
        except ValueError as exc:
            return 2, {"error": {"kind": "bad-specs", "message": str(exc)}}
        timings["equivarianceMs"] = round((time.perf_counter() - t0) * 1000, 3)

    report = {
        "format": list(t.format),
        "boundary": t.boundary_format,
        "surjective": surjective,
        "verdict": _verdict_dict(verdict),
        "fiberDimSample": fiber_dim,
        "equivariance": equivariance,
        "seed": seed,
        "samples": samples,
        "timings": timings,
    }
    return 0, report


def run_generate(args):
    """Build a tensor from a generator spec; returns (exit_code, payload dict)."""
    if args.kind == "schwarzenberger":
        return 0, multiplication_tensor(args.n, args.m).to_dict()
    if args.kind == "random":
        try:
            t = random_tensor(args.dimA, args.dimB, args.dimC, args.seed, args.height)
        except ValueError as exc:
            return 2, {"error": {"kind": "bad-arguments", "message": str(exc)}}
        return 0, t.to_dict()
    # equivariant
    try:
        spec_a = ModuleSpec.parse(args.specA)
        spec_b = ModuleSpec.parse(args.specB)
        spec_c = ModuleSpec.parse(args.specC)
        coeffs = [rational_from_str(c) for c in args.coeffs]
    except ValueError as exc:
        return 2, {"error": {"kind": "bad-arguments", "message": str(exc)}}
    basis = equivariant_basis(spec_a, spec_b, spec_c)
    if len(coeffs) != len(basis):
        return 2, {
            "error": {
                "kind": "coefficient-count",
                "message": f"expected {len(basis)} coefficient(s) for "
                f"{spec_a};{spec_b};{spec_c}, got {len(coeffs)}",
                "expected": len(basis),
            }
        }
    t = Tensor3.zero(spec_a.dim, spec_b.dim, spec_c.dim)
    for c, basis_elt in zip(coeffs, basis):
        t = t.add(basis_elt.scale(c))
    return 0, t.to_dict()


def run_verify(max_dim_a, max_dim_b, samples=5, seed=1, stream=None):
    """Run the classification harness, emitting one JSON line per case.

    Returns (exit_code, summary dict); exit 0 iff there were no
    counterexamples.
    """
    count = 0
    bad = 0
    for case in theorem_cases(max_dim_a, max_dim_b, samples, seed):
        count += 1
        if not case.conforms:
            bad += 1
        if stream is not None:
            print(json.dumps(case.to_json_dict()), file=stream, flush=True)
    summary = {
        "summary": {
            "maxDimA": max_dim_a,
            "maxDimB": max_dim_b,
            "samples": samples,
            "seed": seed,
            "cases": count,
            "counterexamples": bad,
        }
    }
    return (0 if bad == 0 else 1), summary


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperdet",
        description="Exact nondegeneracy analysis of 3-tensors over the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="decide nondegeneracy of a tensor JSON file")
    p_an.add_argument("tensor", help="path to tensor JSON, or - for stdin")
    p_an.add_argument("--specs", help='module specs "A;B;C" for an equivariance check')
    p_an.add_argument("--seed", type=int, default=1)
    p_an.add_argument("--samples", type=int, default=100)

    p_gen = sub.add_parser("generate", help="emit a tensor as JSON")
    gsub = p_gen.add_subparsers(dest="kind", required=True)
    g_s = gsub.add_parser("schwarzenberger", help="multiplication tensor of binary forms")
    g_s.add_argument("n", type=int)
    g_s.add_argument("m", type=int)
    g_e = gsub.add_parser("equivariant", help="combination of the equivariant basis")
    g_e.add_argument("specA")
    g_e.add_argument("specB")
    g_e.add_argument("specC")
    g_e.add_argument("coeffs", nargs="*", help="rational coefficients, one per basis element")
    g_r = gsub.add_parser("random", help="seeded random integer tensor")
    g_r.add_argument("dimA", type=int)
    g_r.add_argument("dimB", type=int)
    g_r.add_argument("dimC", type=int)
    g_r.add_argument("--seed", type=int, default=1)
    g_r.add_argument("--height", type=int, default=5)

    p_ver = sub.add_parser("verify", help="classification harness over module triples")
    p_ver.add_argument("maxDimA", type=int)
    p_ver.add_argument("maxDimB", type=int)
    p_ver.add_argument("--samples", type=int, default=5)
    p_ver.add_argument("--seed", type=int, default=1)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    if args.command == "analyze":
        code, payload = run_analyze(
            args.tensor, specs=args.specs, seed=args.seed, samples=args.samples
        )
        print(json.dumps(payload))
        return code
    if args.command == "generate":
        code, payload = run_generate(args)
        print(json.dumps(payload))
        return code
    if args.command == "verify":
        if args.maxDimA < 2 or args.maxDimB < 2:
            return _fail("bad-arguments", "dimension bounds must be at least 2")
        code, summary = run_verify(
            args.maxDimA, args.maxDimB, samples=args.samples, seed=args.seed, stream=sys.stdout
        )
        print(json.dumps(summary))
        return code
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
