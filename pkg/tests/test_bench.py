import json
import math

import pytest

from demod.bench import (
    bench_add,
    bench_fragments,
    bench_growth,
    enumerate_probe_terms,
    fit_growth,
    gen_add_axiomatic_proof,
    gen_add_modulo_proof,
    probe_hha_nontermination,
    probe_sampled,
    probe_ws_exhaustive,
    random_hilbert_corpus,
    random_nd_corpus,
)
from demod.hilbert import check_hilbert, hilbert_length, zi_axiom_schemata
from demod.nd import check_nd, nd_length
from demod.syntax import size
from demod.theories import OrderConfig, add_compatible_axioms, add_system, build_HO


def test_gen_add_proofs():
    add = add_system()
    axioms = add_compatible_axioms().as_dict()
    # n = 0: the axiomatic proof is a single instantiation of the base axiom
    zero = gen_add_axiomatic_proof(0)
    v0 = check_nd(zero, assumptions=axioms)
    assert v0.ok and v0.length == 1
    for n in (1, 3, 5):
        vm = check_nd(gen_add_modulo_proof(n), system=add)
        assert vm.ok and vm.length == 1
        va = check_nd(gen_add_axiomatic_proof(n), assumptions=axioms)
        assert va.ok, va.error
        assert va.length == 1 + 5 * n


def test_bench_add_report():
    report = bench_add(6)
    modulo = [r for r in report.rows if r["system"] == "modulo"]
    axiomatic = [r for r in report.rows if r["system"] == "axiomatic"]
    assert all(r["length"] == 1 for r in modulo)
    lengths = [r["length"] for r in axiomatic]
    assert lengths == sorted(lengths) and len(set(lengths)) == len(lengths)
    fit = report.summary["axiomatic_fit"]
    assert fit["class"] == "linear"
    assert abs(fit["params"]["slope"] - 5.0) < 1e-9
    parsed = json.loads(report.to_json())
    assert parsed["experiment"] == "add-speedup"
    assert report.to_csv().splitlines()[0].startswith("length")


def test_fit_growth_classes():
    xs = list(range(1, 20))
    assert fit_growth(xs, [7.0] * 19)["class"] == "constant"
    assert fit_growth(xs, [3 * x + 1 for x in xs])["class"] == "linear"
    assert fit_growth(xs, [x * x for x in xs])["class"] == "power"
    got = fit_growth(xs, [2.0**x for x in xs])
    assert got["class"] == "exponential"


def test_probe_terms_cover_sizes():
    seen = {}
    for term, has, nested in enumerate_probe_terms(5):
        seen.setdefault(size(term), 0)
        seen[size(term)] += 1
    assert set(seen) == {1, 2, 3, 4, 5}
    assert seen[1] == 3  # 0, 1^0, nil


def test_ws_probe_small():
    report = probe_ws_exhaustive(7)
    assert report.summary["flat_within_size"]
    assert report.summary["nested_over_size"] == 0  # stacking needs size > 8
    report2 = probe_ws_exhaustive(9)
    assert report2.summary["flat_within_size"]
    assert report2.summary["nested_over_size"] > 0
    assert report2.summary["worst_nested"] is not None


def test_probe_sampled_ho():
    ho = build_HO(OrderConfig(1))
    report = probe_sampled(ho, OrderConfig(1), samples=40, max_depth=3, seed=5)
    assert len(report.rows) == 40
    assert report.summary["fit"]["class"] in ("constant", "linear", "power")


def test_probe_hha_nontermination():
    report = probe_hha_nontermination((5, 50))
    assert report.summary["always_exhausts"]


def test_random_corpora_check():
    cat = zi_axiom_schemata(OrderConfig(2))
    for proof in random_hilbert_corpus(10, seed=42):
        assert check_hilbert(proof, cat).ok
    cat1 = zi_axiom_schemata(OrderConfig(1))
    for proof, instances in random_nd_corpus(10, seed=43):
        assumptions = {n: cat1.instantiate(i) for n, i in instances.items()}
        assert check_nd(proof, assumptions=assumptions).ok


def test_bench_fragments_constancy():
    report = bench_fragments(samples=5, seed=11)
    assert report.summary["all_constant"]
    for row in report.rows:
        assert row["min_length"] == row["max_length"]


def test_bench_growth_summary():
    report = bench_growth(hilbert_count=15, nd_count=15, seed=9)
    s = report.summary
    assert s["corpus_size"] == 30
    assert s["hilbert_to_nd"]["max_ratio"] < 40
    assert s["nd_to_hilbert_restricted"]["max_ratio"] <= 37
    assert s["nd_to_hilbert_general"]["max_log_ratio"] <= math.log(37)


def test_report_rows_recheck_from_serialized_form():
    from demod import fileformat as ff
    from demod.theories import add_signature

    sig = add_signature()
    axioms = add_compatible_axioms().as_dict()
    add = add_system()
    for n in (1, 4, 9):
        for proof, system, assumptions in (
            (gen_add_modulo_proof(n), add, {}),
            (gen_add_axiomatic_proof(n), None, axioms),
        ):
            text = ff.dumps(ff.nd_proof_document(proof))
            back = ff.nd_proof_from_document(ff.loads(text), sig)
            verdict = check_nd(back, assumptions=assumptions, system=system)
            assert verdict.ok, verdict.error
            assert verdict.length == nd_length(proof)
