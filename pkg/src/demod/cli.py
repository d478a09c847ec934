"""Command-line front end.

Exit codes: 0 on success, 1 when a proof fails to check or an experiment
detects a violation, 2 for usage, parse or sort errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import bench, fileformat as ff
from .hilbert import check_hilbert, zi_axiom_schemata
from .nd import check_nd, nd_length
from .rewriting import FuelExhausted, RewriteSystem, check_left_linear, critical_pairs, joinable, normalize
from .sexpr import SexprError
from .syntax import SortError
from .theories import (
    OrderConfig,
    add_signature,
    add_system,
    build_HHA,
    build_HO,
    build_WS,
    classes_signature,
    fz_axioms,
    hha_signature,
)
from .translate import (
    TranslationError,
    hilbert_to_nd,
    nd_to_hilbert,
    zi_hilbert_to_fz_modulo,
    zi_nd_to_hha,
)

BUILTIN_SYSTEMS = ("add", "ho", "ws", "hha", "hha-noind")


def _resolve_system(name: Optional[str], order: int):
    """A builtin system id or a rules file; returns (system, signature)."""
    cfg = OrderConfig(order)
    if name is None or name == "empty":
        return RewriteSystem("empty", (), terminating=True, confluent=True), classes_signature(order, True)
    if name == "add":
        return add_system(), add_signature()
    if name == "ho":
        return build_HO(cfg), classes_signature(order)
    if name == "ws":
        return build_WS(cfg), classes_signature(order)
    if name == "hha":
        return build_HHA(cfg), hha_signature(cfg)
    if name == "hha-noind":
        return build_HHA(cfg).auto_fallback, hha_signature(cfg)
    path = Path(name)
    if not path.exists():
        raise SystemExit(f"unknown system {name!r} (builtins: {', '.join(BUILTIN_SYSTEMS)})")
    sig_path = Path(str(path) + ".sig")
    if not sig_path.exists():
        raise SexprError(f"rules file {name} needs a signature file {sig_path}")
    sig = ff.signature_from_sx(ff.loads(sig_path.read_text()))
    system = ff.system_from_sx(ff.loads(path.read_text()), sig)
    return system, sig


def _read_axioms(path: Optional[str], sig):
    if path is None:
        return {}
    return dict(ff.presentation_from_sx(ff.loads(Path(path).read_text()), sig).axioms)


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    if getattr(args, "json", None):
        Path(args.json).write_text(text + "\n")
    else:
        print(text)


def cmd_check_nd(args) -> int:
    system, sig = _resolve_system(args.system, args.order)
    doc = ff.loads(Path(args.proof).read_text())
    proof = ff.nd_proof_from_document(doc, sig)
    assumptions = _read_axioms(args.axioms, sig)
    if args.axioms is None and args.system is None:
        assumptions = dict(fz_axioms().axioms)
    verdict = check_nd(proof, assumptions=assumptions, system=system, mode=args.mode, fuel=args.fuel)
    _emit(args, {
        "ok": verdict.ok,
        "length": verdict.length,
        "rewrite_steps": verdict.rewrite_steps,
        "error": verdict.error,
    })
    if not verdict.ok:
        print(f"{args.proof}: {verdict.error}", file=sys.stderr)
    return 0 if verdict.ok else 1


def cmd_check_hilbert(args) -> int:
    sig = classes_signature(args.order, True)
    proof = ff.hilbert_from_sx(ff.loads(Path(args.proof).read_text()), sig)
    cat = zi_axiom_schemata(OrderConfig(args.order), classical=not args.intuitionistic)
    verdict = check_hilbert(proof, cat)
    _emit(args, {"ok": verdict.ok, "length": verdict.length, "error": verdict.error})
    if not verdict.ok:
        print(f"{args.proof}: {verdict.error}", file=sys.stderr)
    return 0 if verdict.ok else 1


def cmd_normalize(args) -> int:
    system, sig = _resolve_system(args.system, args.order)
    sx = ff.loads(Path(args.input).read_text() if Path(args.input).exists() else args.input)
    try:
        obj = ff.prop_from_sx(sx, sig)
    except Exception:
        obj = ff.term_from_sx(sx, sig)
    try:
        nf, trace = normalize(obj, system, fuel=args.fuel)
    except FuelExhausted as exc:
        _emit(args, {"ok": False, "error": str(exc), "steps": exc.steps_taken})
        return 1
    out_sx = ff.prop_to_sx(nf) if not hasattr(nf, "sort") else ff.term_to_sx(nf)
    _emit(args, {"ok": True, "normal_form": ff.dumps(out_sx).strip(), "steps": len(trace)})
    return 0


def cmd_confluence(args) -> int:
    system, _ = _resolve_system(args.system, args.order)
    pairs = critical_pairs(system)
    rows = []
    all_joined = True
    for pair in pairs:
        try:
            _, tl = normalize(pair.left, system, fuel=args.fuel)
            _, tr = normalize(pair.right, system, fuel=args.fuel)
            joined = joinable(pair, system, fuel=args.fuel)
            steps = len(tl) + len(tr)
        except FuelExhausted:
            joined, steps = False, None
        all_joined &= joined
        rows.append({
            "rules": list(pair.rules),
            "peak": str(pair.peak),
            "position": list(pair.position),
            "joinable": joined,
            "steps": steps,
        })
    _emit(args, {
        "system": system.name,
        "left_linear": check_left_linear(system),
        "critical_pairs": rows,
        "all_joinable": all_joined,
    })
    return 0 if all_joined else 1


def cmd_probe(args) -> int:
    if args.system == "ws" and args.exhaustive:
        report = bench.probe_ws_exhaustive(args.max_size)
        ok = report.summary["flat_within_size"]
    elif args.system == "hha":
        report = bench.probe_hha_nontermination()
        ok = report.summary["always_exhausts"]
    else:
        system, _ = _resolve_system(args.system, args.order)
        report = bench.probe_sampled(system, OrderConfig(args.order), args.samples, args.max_size, args.seed)
        ok = True
    _emit(args, json.loads(report.to_json()))
    return 0 if ok else 1


def cmd_translate(args) -> int:
    order = args.order
    sig = hha_signature(OrderConfig(order))
    if args.direction in ("hilbert-nd", "hilbert-fz"):
        cat = zi_axiom_schemata(OrderConfig(order + 1))
        proof = ff.hilbert_from_sx(ff.loads(Path(args.proof).read_text()), sig)
        if args.direction == "hilbert-nd":
            out = hilbert_to_nd(proof, cat)
        else:
            out = zi_hilbert_to_fz_modulo(proof, cat)
        doc = ff.nd_proof_document(out.proof)
        report = {
            "input_length": len(proof.lines),
            "output_length": nd_length(out.proof),
            "assumptions": [name for name, _ in out.assumptions],
        }
    elif args.direction == "nd-hilbert":
        cat = zi_axiom_schemata(OrderConfig(order))
        proof = ff.nd_proof_from_document(ff.loads(Path(args.proof).read_text()), sig)
        instances = _read_instances(args.instances, sig)
        out_h = nd_to_hilbert(proof, cat, instances)
        doc = ff.hilbert_to_sx(out_h)
        report = {"input_length": nd_length(proof), "output_length": len(out_h.lines)}
    elif args.direction == "nd-hha":
        proof = ff.nd_proof_from_document(ff.loads(Path(args.proof).read_text()), sig)
        instances = _read_instances(args.instances, sig)
        out_p = zi_nd_to_hha(proof, instances)
        doc = ff.nd_proof_document(out_p)
        report = {"input_length": nd_length(proof), "output_length": nd_length(out_p)}
    else:
        raise SystemExit(f"unknown direction {args.direction!r}")
    text = ff.dumps(doc)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    print(json.dumps(report), file=sys.stderr)
    return 0


def _read_instances(path: Optional[str], sig):
    if path is None:
        return {}
    sx = ff.loads(Path(path).read_text())
    if not (isinstance(sx, list) and sx and sx[0] == "instances"):
        raise SexprError("expected (instances (name (schema ...)) ...)")
    return {form[0]: ff.instance_from_sx(form[1], sig) for form in sx[1:]}


def cmd_bench_add(args) -> int:
    report = bench.bench_add(args.n)
    _emit(args, json.loads(report.to_json()))
    modulo = [r["length"] for r in report.rows if r["system"] == "modulo"]
    return 0 if all(l == 1 for l in modulo) else 1


def cmd_bench_fragments(args) -> int:
    report = bench.bench_fragments(args.samples, args.seed)
    _emit(args, json.loads(report.to_json()))
    return 0 if report.summary["all_constant"] else 1


def cmd_bench_growth(args) -> int:
    report = bench.bench_growth(args.count, args.count, args.seed)
    _emit(args, json.loads(report.to_json()))
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="demod", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, system=True):
        p.add_argument("--order", type=int, default=1, help="order parameter i")
        p.add_argument("--fuel", type=int, default=None)
        p.add_argument("--json", metavar="OUT", default=None, help="write the report to a file")
        if system:
            p.add_argument("--system", default=None, help="builtin system id or rules file")

    p = sub.add_parser("check-nd", help="check a natural-deduction-modulo proof")
    p.add_argument("proof")
    p.add_argument("--axioms", default=None, help="axioms file for named assumptions")
    p.add_argument("--mode", choices=("auto", "witnessed", "mixed"), default="mixed")
    common(p)
    p.set_defaults(func=cmd_check_nd)

    p = sub.add_parser("check-hilbert", help="check a schematic-system proof")
    p.add_argument("proof")
    p.add_argument("--intuitionistic", action="store_true")
    common(p, system=False)
    p.set_defaults(func=cmd_check_hilbert)

    p = sub.add_parser("normalize", help="rewrite a term or proposition to normal form")
    p.add_argument("input", help="an s-expression or a file containing one")
    common(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("confluence", help="critical pairs and joinability")
    common(p)
    p.set_defaults(func=cmd_confluence)

    p = sub.add_parser("probe", help="derivational-length probes")
    p.add_argument("--max-size", type=int, default=10)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--exhaustive", action="store_true")
    common(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("translate", help="run a proof translation")
    p.add_argument("direction", choices=("hilbert-nd", "hilbert-fz", "nd-hilbert", "nd-hha"))
    p.add_argument("proof")
    p.add_argument("--instances", default=None, help="schema instances for nd inputs")
    p.add_argument("--out", default=None)
    common(p, system=False)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("bench-add", help="the addition speed-up experiment")
    p.add_argument("n", type=int, nargs="?", default=16)
    common(p, system=False)
    p.set_defaults(func=cmd_bench_add)

    p = sub.add_parser("bench-fragments", help="fragment length constancy")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=2024)
    common(p, system=False)
    p.set_defaults(func=cmd_bench_fragments)

    p = sub.add_parser("bench-growth", help="translation growth on a random corpus")
    p.add_argument("--count", type=int, default=120)
    p.add_argument("--seed", type=int, default=2024)
    common(p, system=False)
    p.set_defaults(func=cmd_bench_growth)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SexprError, ff.FormatError, SortError, TranslationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
