import pytest

from demod.rewriting import (
    CongruenceError,
    FuelExhausted,
    Rule,
    RuleError,
    RewriteStep,
    RewriteSystem,
    Trace,
    check_left_linear,
    congruent,
    congruent_auto,
    connecting_trace,
    critical_pairs,
    first_redex,
    joinable,
    leftmost_innermost,
    longest_derivation,
    match,
    normalize,
    random_strategy,
    rewrite_redexes,
    unify,
    verify_trace,
)
from demod.syntax import TRUE, Var, alpha_equal, arith, size
from demod.theories import (
    ZERO,
    add_atom,
    add_system,
    numeral,
    s_,
    var0,
)

ADD = add_system()
x, y, z = var0("x"), var0("y"), var0("z")


def test_rule_format_enforced():
    with pytest.raises(RuleError):
        Rule("bad", x, ZERO)  # bare variable left side
    with pytest.raises(RuleError):
        Rule("bad", s_(x), add_atom(x, x, x))  # term lhs, prop rhs
    with pytest.raises(RuleError):
        Rule("bad", s_(x), y)  # extra variable on the right


def test_match_examples():
    got = match(add_atom(s_(x), y, s_(z)), add_atom(s_(ZERO), ZERO, s_(ZERO)))
    assert got == {x: ZERO, y: ZERO, z: ZERO}
    # nonlinear left side: repeated variable needs equal images
    assert match(add_atom(ZERO, y, y), add_atom(ZERO, ZERO, s_(ZERO))) is None
    assert match(add_atom(ZERO, y, y), add_atom(ZERO, s_(ZERO), s_(ZERO))) == {y: s_(ZERO)}


def test_match_respects_sorts():
    l = Var("l", arith(1))
    assert match(x, l) is None


def test_redex_order_and_single_root_redex():
    subject = add_atom(s_(ZERO), y, s_(y))
    redexes = rewrite_redexes(subject, ADD)
    assert len(redexes) == 1
    pos, rule, sigma = redexes[0]
    assert pos == () and rule.name == "add-step"
    nf, trace = normalize(add_atom(ZERO, y, y), ADD)
    assert nf == TRUE and len(trace) == 1
    assert rewrite_redexes(nf, ADD) == []


def test_normalize_add_example():
    # Add(2,2,4) -> Add(1,2,3) -> Add(0,2,2) -> true, three steps
    start = add_atom(numeral(2), numeral(2), numeral(4))
    nf, trace = normalize(start, ADD)
    assert nf == TRUE
    assert len(trace) == 3
    assert verify_trace(start, TRUE, trace, ADD)


def test_normalize_fuel_guard():
    start = add_atom(numeral(5), numeral(5), numeral(10))
    with pytest.raises(FuelExhausted):
        normalize(start, ADD, fuel=3)


def test_congruent_auto():
    assert congruent_auto(add_atom(numeral(2), numeral(2), numeral(4)), TRUE, ADD)
    assert congruent_auto(add_atom(x, y, z), add_atom(x, y, z), ADD)
    # Add(1,1,1) normalizes to Add(0,1,0), not true
    assert not congruent_auto(add_atom(numeral(1), numeral(1), numeral(1)), TRUE, ADD)


def test_congruent_auto_requires_flags():
    weak = RewriteSystem("weak", ADD.rules, terminating=False, confluent=False)
    with pytest.raises(CongruenceError):
        congruent_auto(TRUE, TRUE, weak)
    with pytest.raises(CongruenceError):
        congruent(add_atom(ZERO, y, y), TRUE, weak)


def test_verify_trace_empty_and_bad_position():
    assert verify_trace(add_atom(x, y, z), add_atom(x, y, z), Trace(None, None), ADD)
    bad = Trace(None, None, (RewriteStep((2, 9), "add-base", ()),))
    assert not verify_trace(add_atom(ZERO, y, y), TRUE, bad, ADD)
    wrong_rule = Trace(None, None, (RewriteStep((), "no-such", ()),))
    assert not verify_trace(add_atom(ZERO, y, y), TRUE, wrong_rule, ADD)


def test_verify_trace_backward():
    start = add_atom(ZERO, y, y)
    fwd = connecting_trace(start, TRUE, ADD)
    assert verify_trace(start, TRUE, fwd, ADD)
    back = fwd.reversed()
    assert verify_trace(TRUE, start, back, ADD)


def test_unify_occurs_check_and_sorts():
    assert unify(s_(x), s_(ZERO)) == {x: ZERO}
    assert unify(x, s_(x)) is None
    got = unify(add_atom(s_(x), y, s_(z)), add_atom(s_(ZERO), z, s_(y)))
    assert got is not None


def test_critical_pairs_add_and_empty():
    assert critical_pairs(ADD) == []
    empty = RewriteSystem("empty", ())
    assert critical_pairs(empty) == []
    assert check_left_linear(empty)


def test_left_linear():
    assert not check_left_linear(ADD)  # add-base repeats y
    linear = RewriteSystem("lin", (Rule("r", s_(x), x),), terminating=True, confluent=True)
    assert check_left_linear(linear)


def test_longest_derivation():
    assert longest_derivation(TRUE, ADD) == 0
    assert longest_derivation(add_atom(numeral(1), ZERO, numeral(1)), ADD) == 2
    assert longest_derivation(add_atom(numeral(3), numeral(3), numeral(6)), ADD) == 4


def test_congruence_properties_reflexive_symmetric_transitive():
    a = add_atom(numeral(2), numeral(2), numeral(4))
    b = add_atom(numeral(1), numeral(2), numeral(3))
    c = TRUE
    for p in (a, b, c):
        assert congruent_auto(p, p, ADD)
    assert congruent_auto(a, b, ADD) and congruent_auto(b, a, ADD)
    assert congruent_auto(a, b, ADD) and congruent_auto(b, c, ADD) and congruent_auto(a, c, ADD)


def test_strategies_agree_on_confluent_system():
    start = add_atom(numeral(3), numeral(1), numeral(4))
    nf_lo, _ = normalize(start, ADD)
    nf_li, _ = normalize(start, ADD, strategy=leftmost_innermost)
    nf_rand, _ = normalize(start, ADD, strategy=random_strategy(7))
    assert alpha_equal(nf_lo, nf_li) and alpha_equal(nf_lo, nf_rand)


def test_first_redex_matches_listing():
    subject = add_atom(s_(ZERO), ZERO, s_(ZERO))
    assert first_redex(subject, ADD) == rewrite_redexes(subject, ADD)[0]
    assert first_redex(TRUE, ADD) is None


def test_strategy_independence_on_flagged_systems():
    # confluent + terminating built-in systems: the normal form is the same
    # under outermost, innermost and random redex choice
    import random as _r

    from demod.bench import enumerate_probe_terms
    from demod.syntax import alpha_equal as aeq
    from demod.theories import (
        OrderConfig,
        build_HO,
        build_WS,
        encode_prop,
        eq as eq_,
        member,
        plus,
    )

    rng = _r.Random(99)
    cases = []
    for n in range(400):
        a, b = rng.randrange(6), rng.randrange(6)
        cases.append((ADD, add_atom(numeral(a), numeral(b), numeral(rng.randrange(12)))))
    ws = build_WS(OrderConfig(1))
    fragment = [t for t, has, _ in enumerate_probe_terms(7) if has]
    for t in rng.sample(fragment, 400):
        cases.append((ws, t))
    ho = build_HO(OrderConfig(1))
    hole = var0("h")
    for n in range(300):
        prop = eq_(plus(hole, numeral(rng.randrange(2))), hole)
        enc = encode_prop(prop, (hole,))
        cases.append((ho, member([numeral(rng.randrange(3))], enc.cls)))
    assert len(cases) >= 1000
    for system, subject in cases:
        nf_lo, _ = normalize(subject, system)
        nf_li, _ = normalize(subject, system, strategy=leftmost_innermost)
        nf_rand, _ = normalize(subject, system, strategy=random_strategy(rng.randrange(1 << 30)))
        assert aeq(nf_lo, nf_li) and aeq(nf_lo, nf_rand), subject
