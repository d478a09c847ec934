"""Natural deduction modulo: proof objects and the checker.

Every node states its conclusion.  Where a rule applies "modulo" (the side
conditions of the form C <->* A > B), the node carries enough witnesses to
reduce checking to congruence tests, and each congruence obligation may carry
an explicit rewrite trace (``via``).  Obligations without a trace are decided
by normalization; in ``witnessed`` mode a missing trace is only accepted for
alpha-equal sides.

Proof length is the number of inference nodes; hypothesis and assumption
leaves do not count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .rewriting import (
    CongruenceError,
    FuelExhausted,
    RewriteSystem,
    Trace,
    connecting_trace,
    normalize,
    verify_trace,
)
from .syntax import (
    And,
    Exists,
    FALSE,
    Forall,
    Imp,
    Or,
    Proposition,
    TRUE,
    Term,
    Var,
    alpha_equal,
    apply_substitution,
    free_variables,
)


@dataclass(frozen=True)
class Hyp:
    label: str
    prop: Proposition


@dataclass(frozen=True)
class Assume:
    name: str
    prop: Proposition


@dataclass(frozen=True)
class ImpI:
    conclusion: Proposition
    hyp: Proposition
    label: str
    sub: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class ImpE:
    conclusion: Proposition
    minor: "Proof"
    major: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class AndI:
    conclusion: Proposition
    left: "Proof"
    right: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class AndE:
    conclusion: Proposition
    other: Proposition
    side: str  # which component the conclusion is
    sub: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class OrI:
    conclusion: Proposition
    other: Proposition
    side: str  # which side the premise proves
    sub: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class OrE:
    conclusion: Proposition
    left: Proposition
    right: Proposition
    label_left: str
    label_right: str
    major: "Proof"
    sub_left: "Proof"
    sub_right: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class ForallI:
    conclusion: Proposition
    var: Var
    body: Proposition
    eigen: Var
    sub: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class ForallE:
    conclusion: Proposition
    var: Var
    body: Proposition
    term: Term
    sub: "Proof"
    via: Optional[Trace] = None  # premise <->* forall var. body
    via2: Optional[Trace] = None  # conclusion <->* body[term/var]


@dataclass(frozen=True)
class ExistsI:
    conclusion: Proposition
    var: Var
    body: Proposition
    term: Term
    sub: "Proof"
    via: Optional[Trace] = None  # conclusion <->* exists var. body
    via2: Optional[Trace] = None  # premise <->* body[term/var]


@dataclass(frozen=True)
class ExistsE:
    conclusion: Proposition
    var: Var
    body: Proposition
    eigen: Var
    label: str
    major: "Proof"
    sub: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class TopI:
    conclusion: Proposition
    via: Optional[Trace] = None


@dataclass(frozen=True)
class BotE:
    conclusion: Proposition
    sub: "Proof"
    via: Optional[Trace] = None


@dataclass(frozen=True)
class Tnd:
    conclusion: Proposition
    disjunct: Proposition
    via: Optional[Trace] = None


@dataclass(frozen=True)
class IndI:
    """Induction as an inference rule, replacing the induction rewrite rule."""

    conclusion: Proposition
    cls: Term
    term: Term
    eigen: Var
    label: str
    base: "Proof"
    step: "Proof"


Proof = Union[
    Hyp,
    Assume,
    ImpI,
    ImpE,
    AndI,
    AndE,
    OrI,
    OrE,
    ForallI,
    ForallE,
    ExistsI,
    ExistsE,
    TopI,
    BotE,
    Tnd,
    IndI,
]

LEAVES = (Hyp, Assume)


def premises(p: Proof) -> tuple[Proof, ...]:
    if isinstance(p, LEAVES):
        return ()
    if isinstance(p, (ImpI, AndE, OrI, ForallI, ForallE, ExistsI, BotE)):
        return (p.sub,)
    if isinstance(p, ImpE):
        return (p.minor, p.major)
    if isinstance(p, AndI):
        return (p.left, p.right)
    if isinstance(p, OrE):
        return (p.major, p.sub_left, p.sub_right)
    if isinstance(p, ExistsE):
        return (p.major, p.sub)
    if isinstance(p, IndI):
        return (p.base, p.step)
    return ()


def conclusion_of(p: Proof) -> Proposition:
    if isinstance(p, LEAVES):
        return p.prop
    return p.conclusion


def nd_length(p: Proof) -> int:
    """Number of inference nodes; leaves are not inferences."""
    count = 0
    stack = [p]
    while stack:
        node = stack.pop()
        if not isinstance(node, LEAVES):
            count += 1
        stack.extend(premises(node))
    return count


def proof_size(p: Proof) -> int:
    count = 0
    stack = [p]
    while stack:
        count += 1
        stack.extend(premises(stack.pop()))
    return count


@dataclass(frozen=True)
class Verdict:
    ok: bool
    length: int
    error: Optional[str] = None
    rewrite_steps: int = 0

    def __bool__(self) -> bool:
        return self.ok


class CheckFailure(Exception):
    pass


MODES = ("auto", "witnessed", "mixed")


@dataclass
class _Ctx:
    assumptions: Mapping[str, Proposition]
    system: RewriteSystem
    mode: str
    fuel: Optional[int]
    steps: int = 0

    def congruent(self, p: Proposition, q: Proposition, via: Optional[Trace]) -> None:
        """Require p <->* q, by trace replay or by normalization."""
        if alpha_equal(p, q):
            return
        if via is not None and self.mode in ("witnessed", "mixed"):
            if not verify_trace(p, q, via, self.system):
                raise CheckFailure(f"trace does not certify {p} <->* {q}")
            self.steps += len(via)
            return
        if self.mode == "witnessed":
            raise CheckFailure(f"missing trace for {p} <->* {q} in witnessed mode")
        try:
            sub = self.system.congruence_system()
            np_, tp = normalize(p, sub, self.fuel)
            nq_, tq = normalize(q, sub, self.fuel)
        except (CongruenceError, FuelExhausted) as exc:
            raise CheckFailure(f"cannot decide {p} <->* {q}: {exc}") from exc
        self.steps += len(tp) + len(tq)
        if not alpha_equal(np_, nq_):
            raise CheckFailure(f"congruence fails: {p} and {q} have normal forms {np_} vs {nq_}")


def check_nd(
    proof: Proof,
    assumptions: Mapping[str, Proposition] | Iterable[tuple[str, Proposition]] = (),
    system: Optional[RewriteSystem] = None,
    mode: str = "auto",
    fuel: Optional[int] = None,
) -> Verdict:
    """Check a natural-deduction-modulo proof; all hypotheses must discharge."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if system is None:
        system = RewriteSystem("empty", (), terminating=True, confluent=True)
    if not isinstance(assumptions, Mapping):
        assumptions = dict(assumptions)
    ctx = _Ctx(assumptions, system, mode, fuel)
    length = nd_length(proof)
    try:
        open_hyps, _ = _check(proof, ctx)
    except CheckFailure as exc:
        return Verdict(False, length, str(exc), ctx.steps)
    except RecursionError:
        return Verdict(False, length, "proof too deep for the checker", ctx.steps)
    if open_hyps:
        labels = sorted({label for label, _ in open_hyps})
        return Verdict(False, length, f"undischarged hypotheses {labels}", ctx.steps)
    return Verdict(True, length, None, ctx.steps)


def _discharge(
    open_hyps: list[tuple[str, Proposition]], label: str, expected: Proposition
) -> list[tuple[str, Proposition]]:
    remaining = []
    for lab, prop in open_hyps:
        if lab == label:
            if not alpha_equal(prop, expected):
                raise CheckFailure(
                    f"hypothesis [{label}] states {prop}, discharge expects {expected}"
                )
        else:
            remaining.append((lab, prop))
    return remaining


def _freshness(eigen: Var, props: Iterable[Proposition], where: str) -> None:
    for prop in props:
        if eigen in free_variables(prop):
            raise CheckFailure(f"eigenvariable {eigen} is free in {where}: {prop}")


def _check(p: Proof, ctx: _Ctx) -> tuple[list[tuple[str, Proposition]], list[Proposition]]:
    """Returns (open hypotheses, assumption propositions) of the subtree."""
    if isinstance(p, Hyp):
        return [(p.label, p.prop)], []
    if isinstance(p, Assume):
        stated = ctx.assumptions.get(p.name)
        if stated is None:
            raise CheckFailure(f"assumption {p.name!r} is not among the named assumptions")
        if not alpha_equal(stated, p.prop):
            raise CheckFailure(f"assumption {p.name!r} states {stated}, leaf says {p.prop}")
        return [], [p.prop]

    if isinstance(p, ImpI):
        hyps, assums = _check(p.sub, ctx)
        ctx.congruent(p.conclusion, Imp(p.hyp, conclusion_of(p.sub)), p.via)
        return _discharge(hyps, p.label, p.hyp), assums

    if isinstance(p, ImpE):
        h1, a1 = _check(p.minor, ctx)
        h2, a2 = _check(p.major, ctx)
        ctx.congruent(conclusion_of(p.major), Imp(conclusion_of(p.minor), p.conclusion), p.via)
        return h1 + h2, a1 + a2

    if isinstance(p, AndI):
        h1, a1 = _check(p.left, ctx)
        h2, a2 = _check(p.right, ctx)
        ctx.congruent(p.conclusion, And(conclusion_of(p.left), conclusion_of(p.right)), p.via)
        return h1 + h2, a1 + a2

    if isinstance(p, AndE):
        hyps, assums = _check(p.sub, ctx)
        if p.side == "left":
            shape = And(p.conclusion, p.other)
        elif p.side == "right":
            shape = And(p.other, p.conclusion)
        else:
            raise CheckFailure(f"bad side {p.side!r}")
        ctx.congruent(conclusion_of(p.sub), shape, p.via)
        return hyps, assums

    if isinstance(p, OrI):
        hyps, assums = _check(p.sub, ctx)
        if p.side == "left":
            shape = Or(conclusion_of(p.sub), p.other)
        elif p.side == "right":
            shape = Or(p.other, conclusion_of(p.sub))
        else:
            raise CheckFailure(f"bad side {p.side!r}")
        ctx.congruent(p.conclusion, shape, p.via)
        return hyps, assums

    if isinstance(p, OrE):
        h0, a0 = _check(p.major, ctx)
        hl, al = _check(p.sub_left, ctx)
        hr, ar = _check(p.sub_right, ctx)
        ctx.congruent(conclusion_of(p.major), Or(p.left, p.right), p.via)
        if not alpha_equal(conclusion_of(p.sub_left), p.conclusion):
            raise CheckFailure("left branch of case split does not prove the conclusion")
        if not alpha_equal(conclusion_of(p.sub_right), p.conclusion):
            raise CheckFailure("right branch of case split does not prove the conclusion")
        hl = _discharge(hl, p.label_left, p.left)
        hr = _discharge(hr, p.label_right, p.right)
        return h0 + hl + hr, a0 + al + ar

    if isinstance(p, ForallI):
        hyps, assums = _check(p.sub, ctx)
        want = apply_substitution(p.body, {p.var: p.eigen})
        if not alpha_equal(conclusion_of(p.sub), want):
            raise CheckFailure(
                f"universal introduction premise {conclusion_of(p.sub)} is not {want}"
            )
        if p.eigen != p.var and p.eigen in free_variables(p.body):
            raise CheckFailure(f"eigenvariable {p.eigen} occurs in the generalized body")
        _freshness(p.eigen, (prop for _, prop in hyps), "an open hypothesis")
        _freshness(p.eigen, assums, "an assumption")
        ctx.congruent(p.conclusion, Forall(p.var, p.body), p.via)
        return hyps, assums

    if isinstance(p, ForallE):
        hyps, assums = _check(p.sub, ctx)
        ctx.congruent(conclusion_of(p.sub), Forall(p.var, p.body), p.via)
        ctx.congruent(p.conclusion, apply_substitution(p.body, {p.var: p.term}), p.via2)
        return hyps, assums

    if isinstance(p, ExistsI):
        hyps, assums = _check(p.sub, ctx)
        ctx.congruent(p.conclusion, Exists(p.var, p.body), p.via)
        ctx.congruent(conclusion_of(p.sub), apply_substitution(p.body, {p.var: p.term}), p.via2)
        return hyps, assums

    if isinstance(p, ExistsE):
        h0, a0 = _check(p.major, ctx)
        h1, a1 = _check(p.sub, ctx)
        ctx.congruent(conclusion_of(p.major), Exists(p.var, p.body), p.via)
        if not alpha_equal(conclusion_of(p.sub), p.conclusion):
            raise CheckFailure("existential elimination branch does not prove the conclusion")
        hyp_prop = apply_substitution(p.body, {p.var: p.eigen})
        h1 = _discharge(h1, p.label, hyp_prop)
        if p.eigen != p.var and p.eigen in free_variables(p.body):
            raise CheckFailure(f"eigenvariable {p.eigen} occurs in the witness body")
        _freshness(p.eigen, [p.conclusion], "the conclusion")
        _freshness(p.eigen, (prop for _, prop in h1), "an open hypothesis")
        _freshness(p.eigen, a1, "an assumption")
        return h0 + h1, a0 + a1

    if isinstance(p, TopI):
        ctx.congruent(p.conclusion, TRUE, p.via)
        return [], []

    if isinstance(p, BotE):
        hyps, assums = _check(p.sub, ctx)
        ctx.congruent(conclusion_of(p.sub), FALSE, p.via)
        return hyps, assums

    if isinstance(p, Tnd):
        ctx.congruent(p.conclusion, Or(p.disjunct, Imp(p.disjunct, FALSE)), p.via)
        return [], []

    if isinstance(p, IndI):
        from .theories import ZERO, member, s_  # layering: theory shapes for this rule only

        hb, ab = _check(p.base, ctx)
        hs, as_ = _check(p.step, ctx)
        if not alpha_equal(conclusion_of(p.base), member([ZERO], p.cls)):
            raise CheckFailure("induction base premise must conclude <0> eps class")
        if not alpha_equal(conclusion_of(p.step), member([s_(p.eigen)], p.cls)):
            raise CheckFailure("induction step premise must conclude <s(eigen)> eps class")
        hs = _discharge(hs, p.label, member([p.eigen], p.cls))
        if not alpha_equal(p.conclusion, member([p.term], p.cls)):
            raise CheckFailure("induction conclusion must be <term> eps class")
        _freshness(p.eigen, [p.conclusion], "the conclusion")
        _freshness(p.eigen, (prop for _, prop in hb + hs), "an open hypothesis")
        _freshness(p.eigen, ab + as_, "an assumption")
        return hb + hs, ab + as_

    raise CheckFailure(f"unknown proof node {p!r}")


# ---------------------------------------------------------------------------
# Congruence obligations as data, and trace witnessing


def obligations(p: Proof) -> tuple[tuple[Proposition, Proposition, str], ...]:
    """The congruence obligations of one node as (left, right, via-field) triples."""
    if isinstance(p, ImpI):
        return ((p.conclusion, Imp(p.hyp, conclusion_of(p.sub)), "via"),)
    if isinstance(p, ImpE):
        return ((conclusion_of(p.major), Imp(conclusion_of(p.minor), p.conclusion), "via"),)
    if isinstance(p, AndI):
        return ((p.conclusion, And(conclusion_of(p.left), conclusion_of(p.right)), "via"),)
    if isinstance(p, AndE):
        shape = And(p.conclusion, p.other) if p.side == "left" else And(p.other, p.conclusion)
        return ((conclusion_of(p.sub), shape, "via"),)
    if isinstance(p, OrI):
        shape = (
            Or(conclusion_of(p.sub), p.other)
            if p.side == "left"
            else Or(p.other, conclusion_of(p.sub))
        )
        return ((p.conclusion, shape, "via"),)
    if isinstance(p, OrE):
        return ((conclusion_of(p.major), Or(p.left, p.right), "via"),)
    if isinstance(p, ForallI):
        return ((p.conclusion, Forall(p.var, p.body), "via"),)
    if isinstance(p, ForallE):
        return (
            (conclusion_of(p.sub), Forall(p.var, p.body), "via"),
            (p.conclusion, apply_substitution(p.body, {p.var: p.term}), "via2"),
        )
    if isinstance(p, ExistsI):
        return (
            (p.conclusion, Exists(p.var, p.body), "via"),
            (conclusion_of(p.sub), apply_substitution(p.body, {p.var: p.term}), "via2"),
        )
    if isinstance(p, ExistsE):
        return ((conclusion_of(p.major), Exists(p.var, p.body), "via"),)
    if isinstance(p, TopI):
        return ((p.conclusion, TRUE, "via"),)
    if isinstance(p, BotE):
        return ((conclusion_of(p.sub), FALSE, "via"),)
    if isinstance(p, Tnd):
        return ((p.conclusion, Or(p.disjunct, Imp(p.disjunct, FALSE)), "via"),)
    return ()


def witness_all(p: Proof, system: RewriteSystem, fuel: Optional[int] = None) -> Proof:
    """Attach an explicit trace to every nontrivial obligation lacking one.

    Obligations with traces keep them; the rest are connected through the
    congruence system, so the result checks in witnessed mode.
    """
    from dataclasses import replace as _replace

    if isinstance(p, LEAVES):
        return p
    updates: dict[str, object] = {}
    for name in ("sub", "minor", "major", "left", "right", "sub_left", "sub_right", "base", "step"):
        if hasattr(p, name):
            updates[name] = witness_all(getattr(p, name), system, fuel)
    node = _replace(p, **updates)
    for left, right, slot in obligations(node):
        if getattr(node, slot) is None and not alpha_equal(left, right):
            node = _replace(node, **{slot: connecting_trace(left, right, system, fuel)})
    return node
