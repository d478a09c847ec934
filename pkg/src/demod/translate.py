"""Proof translations between the schematic system, natural deduction and
the modulo presentations.

The schematic-to-natural-deduction direction replaces every inference by a
fixed tree; premises referenced by modus ponens are inlined, and the
generalization/particularization rules inline a copy of their premise
derivation with the eigenvariable renamed fresh, which keeps all
eigenvariable conditions checkable.  The reverse direction is the familiar
bracket-abstraction construction: an abstraction pass over proof trees,
falling back to a line-level deduction-theorem pass after an implication
introduction, with two pinned propositional lemmas for abstracting over the
quantifier rules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace as _dc_replace
from typing import Callable, Mapping, Optional

from .fragments import fz_fragment, hha_fragment
from .hilbert import (
    Catalogue,
    GenLine,
    HilbertProof,
    HypLine,
    Line,
    MpLine,
    PROPOSITIONAL,
    PartLine,
    SchemaInstance,
    SchemaLine,
    Template,
    check_hilbert,
    instance,
)
from .nd import (
    AndE,
    AndI,
    Assume,
    BotE,
    ExistsE,
    ExistsI,
    ForallE,
    ForallI,
    Hyp,
    ImpE,
    ImpI,
    IndI,
    OrE,
    OrI,
    Proof,
    Tnd,
    TopI,
    check_nd,
    conclusion_of,
    obligations,
    premises,
)
from .rewriting import RewriteSystem, Trace, connecting_trace
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
    fresh_name,
)
from .theories import Presentation, fz_axioms


class TranslationError(Exception):
    pass


@dataclass(frozen=True)
class NDTranslation:
    proof: Proof
    assumptions: tuple[tuple[str, Proposition], ...]
    instances: tuple[tuple[str, SchemaInstance], ...]

    def assumption_dict(self) -> dict[str, Proposition]:
        return dict(self.assumptions)

    def instance_dict(self) -> dict[str, SchemaInstance]:
        return dict(self.instances)


class _Gensym:
    def __init__(self, prefix: str = "t"):
        self.counter = itertools.count(1)
        self.prefix = prefix

    def __call__(self) -> str:
        return f"{self.prefix}{next(self.counter)}"


# ---------------------------------------------------------------------------
# Classical schema templates in natural deduction

CLASSICAL = set(PROPOSITIONAL)


def _classical_proof(inst: SchemaInstance, cat: Catalogue, lab: _Gensym) -> Optional[Proof]:
    name = inst.schema
    if name in PROPOSITIONAL:
        wanted, _ = PROPOSITIONAL[name]
        props = [inst.prop(n) for n in wanted]
        return _PROP_TEMPLATES[name](lab, *props)
    if name.startswith("UI^"):
        tmpl = inst.template("A")
        alpha = inst.metavar("alpha", Var("a", tmpl.arity[0]))
        tau = inst.term("tau")
        l = lab()
        closure = Forall(alpha, tmpl.apply([alpha]))
        body = tmpl.apply([alpha])
        return ImpI(
            Imp(closure, tmpl.apply([tau])),
            hyp=closure,
            label=l,
            sub=ForallE(tmpl.apply([tau]), var=alpha, body=body, term=tau, sub=Hyp(l, closure)),
        )
    if name.startswith("EI^"):
        tmpl = inst.template("A")
        alpha = inst.metavar("alpha", Var("a", tmpl.arity[0]))
        tau = inst.term("tau")
        l = lab()
        at_tau = tmpl.apply([tau])
        closure = Exists(alpha, tmpl.apply([alpha]))
        return ImpI(
            Imp(at_tau, closure),
            hyp=at_tau,
            label=l,
            sub=ExistsI(closure, var=alpha, body=tmpl.apply([alpha]), term=tau, sub=Hyp(l, at_tau)),
        )
    return None


def _imp_chain(lab: _Gensym, hyps: list[Proposition], body_of: Callable[..., Proof]) -> Proof:
    """Hypothesize each proposition, build the body, then discharge in order."""
    labels = [lab() for _ in hyps]
    leaves = [Hyp(l, h) for l, h in zip(labels, hyps)]
    proof = body_of(*leaves)
    for l, h in zip(reversed(labels), reversed(hyps)):
        proof = ImpI(Imp(h, conclusion_of(proof)), hyp=h, label=l, sub=proof)
    return proof


def _t_i(lab, a):
    return _imp_chain(lab, [a], lambda x: x)


def _t_k(lab, a, b):
    return _imp_chain(lab, [a, b], lambda x, y: x)


def _t_w(lab, a, b):
    def body(f, x):
        return ImpE(b, minor=x, major=ImpE(Imp(a, b), minor=x, major=f))

    return _imp_chain(lab, [Imp(a, Imp(a, b)), a], body)


def _t_c(lab, a, b, c):
    def body(f, y, x):
        return ImpE(c, minor=y, major=ImpE(Imp(b, c), minor=x, major=f))

    return _imp_chain(lab, [Imp(a, Imp(b, c)), b, a], body)


def _t_b(lab, a, b, c):
    def body(f, g, x):
        return ImpE(c, minor=ImpE(b, minor=x, major=f), major=g)

    return _imp_chain(lab, [Imp(a, b), Imp(b, c), a], body)


def _t_proj(side):
    def build(lab, a, b):
        conc = a if side == "left" else b
        other = b if side == "left" else a
        return _imp_chain(
            lab, [And(a, b)], lambda p: AndE(conc, other=other, side=side, sub=p)
        )

    return build


def _t_pair(lab, a, b, c):
    def body(f, g, x):
        return AndI(And(b, c), ImpE(b, minor=x, major=f), ImpE(c, minor=x, major=g))

    return _imp_chain(lab, [Imp(a, b), Imp(a, c), a], body)


def _t_inj(side):
    def build(lab, a, b):
        prem = a if side == "left" else b
        other = b if side == "left" else a
        return _imp_chain(
            lab, [prem], lambda x: OrI(Or(a, b), other=other, side=side, sub=x)
        )

    return build


def _t_case(lab, a, b, c):
    def body(f, g, d):
        la, lb = f"{d.label}a", f"{d.label}b"
        return OrE(
            c,
            left=a,
            right=b,
            label_left=la,
            label_right=lb,
            major=d,
            sub_left=ImpE(c, minor=Hyp(la, a), major=f),
            sub_right=ImpE(c, minor=Hyp(lb, b), major=g),
        )

    return _imp_chain(lab, [Imp(a, c), Imp(b, c), Or(a, b)], body)


def _t_contradiction(lab, a, b):
    def body(f, g, x):
        return ImpE(FALSE, minor=ImpE(b, minor=x, major=f), major=ImpE(Imp(b, FALSE), minor=x, major=g))

    return _imp_chain(lab, [Imp(a, b), Imp(a, Imp(b, FALSE)), a], body)


def _t_efsq(lab, a, b):
    def body(f, x):
        return BotE(b, sub=ImpE(FALSE, minor=x, major=f))

    return _imp_chain(lab, [Imp(a, FALSE), a], body)


_PROP_TEMPLATES: dict[str, Callable[..., Proof]] = {
    "I": _t_i,
    "K": _t_k,
    "W": _t_w,
    "C": _t_c,
    "B": _t_b,
    "proj-l": _t_proj("left"),
    "proj-r": _t_proj("right"),
    "pair": _t_pair,
    "inj-l": _t_inj("left"),
    "inj-r": _t_inj("right"),
    "case": _t_case,
    "contradiction": _t_contradiction,
    "efsq": _t_efsq,
    "T": lambda lab: TopI(TRUE),
    "TND": lambda lab, a: Tnd(Or(a, Imp(a, FALSE)), disjunct=a),
}


# ---------------------------------------------------------------------------
# Schematic system to natural deduction


def _rename_lines(lines: tuple[Line, ...], old: Var, new: Var) -> tuple[Line, ...]:
    sub = {old: new}

    def fix_inst(inst: SchemaInstance) -> SchemaInstance:
        templates = tuple(
            (
                n,
                t
                if old in t.params
                else Template(t.params, apply_substitution(t.body, sub)),
            )
            for n, t in inst.templates
        )
        terms = tuple((n, apply_substitution(t, sub)) for n, t in inst.terms)
        return SchemaInstance(inst.schema, templates, terms, inst.metavars)

    out = []
    for line in lines:
        j = line.just
        if isinstance(j, SchemaLine):
            j = SchemaLine(fix_inst(j.instance))
        elif isinstance(j, (GenLine, PartLine)) and j.eigen == old:
            j = type(j)(j.ref, new)
        out.append(Line(j, apply_substitution(line.prop, sub)))
    return tuple(out)


def _check_eigen_clear(prem: Proof, eigen: Var) -> None:
    """An eigenvariable free in an axiom instance of the premise derivation
    cannot be generalized while keeping instances as assumptions."""
    stack = [prem]
    while stack:
        node = stack.pop()
        if isinstance(node, Assume) and eigen in free_variables(node.prop):
            raise TranslationError(
                f"generalized variable occurs in the axiom instance {node.name!r}"
            )
        stack.extend(premises(node))


def _hilbert_to_nd_engine(
    proof: HilbertProof,
    cat: Catalogue,
    leaf_handler: Callable[[SchemaInstance, Proposition], Proof],
) -> Proof:
    lab = _Gensym("g")
    fresh_count = itertools.count(1)

    def tree(lines: tuple[Line, ...], k: int) -> Proof:
        line = lines[k]
        j = line.just
        if isinstance(j, SchemaLine):
            classical = _classical_proof(j.instance, cat, lab)
            if classical is not None:
                if not alpha_equal(conclusion_of(classical), line.prop):
                    raise TranslationError(
                        f"template for {j.instance.schema} concludes "
                        f"{conclusion_of(classical)}, line says {line.prop}"
                    )
                return classical
            return leaf_handler(j.instance, line.prop)
        if isinstance(j, MpLine):
            return ImpE(line.prop, minor=tree(lines, j.minor - 1), major=tree(lines, j.major - 1))
        if isinstance(j, GenLine):
            shape = line.prop
            assert isinstance(shape, Imp) and isinstance(shape.right, Forall)
            fresh = Var(f"e{next(fresh_count)}", j.eigen.sort)
            renamed = _rename_lines(lines[: j.ref], j.eigen, fresh)
            prem = tree(renamed, j.ref - 1)
            _check_eigen_clear(prem, fresh)
            l = lab()
            body_inst = apply_substitution(shape.right.body, {shape.right.var: fresh})
            e1 = ImpE(body_inst, minor=Hyp(l, shape.left), major=prem)
            e2 = ForallI(shape.right, var=shape.right.var, body=shape.right.body, eigen=fresh, sub=e1)
            return ImpI(shape, hyp=shape.left, label=l, sub=e2)
        if isinstance(j, PartLine):
            shape = line.prop
            assert isinstance(shape, Imp) and isinstance(shape.left, Exists)
            fresh = Var(f"e{next(fresh_count)}", j.eigen.sort)
            renamed = _rename_lines(lines[: j.ref], j.eigen, fresh)
            prem = tree(renamed, j.ref - 1)
            _check_eigen_clear(prem, fresh)
            lm, lw = lab(), lab()
            body_inst = apply_substitution(shape.left.body, {shape.left.var: fresh})
            e1 = ImpE(shape.right, minor=Hyp(lw, body_inst), major=prem)
            e2 = ExistsE(
                shape.right,
                var=shape.left.var,
                body=shape.left.body,
                eigen=fresh,
                label=lw,
                major=Hyp(lm, shape.left),
                sub=e1,
            )
            return ImpI(shape, hyp=shape.left, label=lm, sub=e2)
        raise TranslationError(f"cannot translate line justification {j!r}")

    return tree(proof.lines, len(proof.lines) - 1)


AXIOM_SCHEMATA = ("refl", "leibniz", "zero-ne-s", "inj-s", "onto-s", "plus-zero", "plus-s", "times-zero", "times-s", "ind")


def hilbert_to_nd(proof: HilbertProof, cat: Catalogue) -> NDTranslation:
    """Pure natural deduction, keeping identity/arithmetic/induction/
    comprehension instances as named assumptions."""
    verdict = check_hilbert(proof, cat)
    if not verdict.ok:
        raise TranslationError(f"input does not check: {verdict.error}")
    counter = itertools.count(1)
    assumptions: dict[str, Proposition] = {}
    instances: dict[str, SchemaInstance] = {}

    def handler(inst: SchemaInstance, prop: Proposition) -> Proof:
        name = f"{inst.schema}.{next(counter)}"
        assumptions[name] = prop
        instances[name] = inst
        return Assume(name, prop)

    out = _hilbert_to_nd_engine(proof, cat, handler)
    return NDTranslation(out, tuple(assumptions.items()), tuple(instances.items()))


def zi_hilbert_to_fz_modulo(proof: HilbertProof, cat: Catalogue) -> NDTranslation:
    """Natural deduction modulo the class system, assumptions within FZ."""
    verdict = check_hilbert(proof, cat)
    if not verdict.ok:
        raise TranslationError(f"input does not check: {verdict.error}")
    fz = fz_axioms().as_dict()
    used: dict[str, Proposition] = {}

    def handler(inst: SchemaInstance, prop: Proposition) -> Proof:
        name = inst.schema
        if name == "leibniz" or name == "ind" or name.startswith("comp^"):
            frag = fz_fragment(name, inst.template("A"))
            for used_name in frag.assumptions:
                used[used_name] = fz[used_name]
            if not alpha_equal(conclusion_of(frag.proof), prop):
                raise TranslationError(f"fragment for {name} concludes a different instance")
            return frag.proof
        if name in fz:
            axiom = fz[name]
            if not alpha_equal(axiom, prop):
                raise TranslationError(f"{name} instance differs from the axiom")
            used[name] = axiom
            return Assume(name, axiom)
        raise TranslationError(f"no modulo fragment for schema {name!r}")

    out = _hilbert_to_nd_engine(proof, cat, handler)
    return NDTranslation(out, tuple(used.items()), ())


# ---------------------------------------------------------------------------
# Natural deduction to the schematic system


class _Buf:
    def __init__(self):
        self.lines: list[Line] = []

    def add(self, just, prop: Proposition) -> int:
        self.lines.append(Line(just, prop))
        return len(self.lines)

    def schema(self, name: str, props: list[tuple[str, Proposition]]) -> int:
        inst = instance(name, templates=props)
        _, build = PROPOSITIONAL[name]
        wanted = PROPOSITIONAL[name][0]
        got = dict(props)
        prop = build(*(got[n] for n in wanted))
        return self.add(SchemaLine(inst), prop)

    def line(self, k: int) -> Line:
        return self.lines[k - 1]

    def extend_from(self, other: "_Buf") -> dict[int, int]:
        offset = len(self.lines)
        remap = {}
        for idx, line in enumerate(other.lines, start=1):
            j = line.just
            if isinstance(j, MpLine):
                j = MpLine(j.minor + offset, j.major + offset)
            elif isinstance(j, GenLine):
                j = GenLine(j.ref + offset, j.eigen)
            elif isinstance(j, PartLine):
                j = PartLine(j.ref + offset, j.eigen)
            self.lines.append(Line(j, line.prop))
            remap[idx] = idx + offset
        return remap


def _pi1(buf: _Buf, a: Proposition, b: Proposition, c: Proposition) -> int:
    """(a > b > c) > (a & b) > c from the propositional schemata; 17 lines."""
    ab = And(a, b)
    l1 = buf.schema("proj-l", [("A", a), ("B", b)])
    l2 = buf.schema("proj-r", [("A", a), ("B", b)])
    l3 = buf.schema("B", [("A", ab), ("B", a), ("C", Imp(b, c))])
    l4 = buf.add(MpLine(l1, l3), Imp(Imp(a, Imp(b, c)), Imp(ab, Imp(b, c))))
    l5 = buf.schema("C", [("A", ab), ("B", b), ("C", c)])
    l6 = buf.schema("B", [("A", ab), ("B", b), ("C", Imp(ab, c))])
    l7 = buf.add(MpLine(l2, l6), Imp(Imp(b, Imp(ab, c)), Imp(ab, Imp(ab, c))))
    l8 = buf.schema("W", [("A", ab), ("B", c)])
    l9 = buf.schema(
        "B", [("A", Imp(a, Imp(b, c))), ("B", Imp(ab, Imp(b, c))), ("C", Imp(b, Imp(ab, c)))]
    )
    l10 = buf.add(MpLine(l4, l9), Imp(buf.line(l5).prop, Imp(Imp(a, Imp(b, c)), Imp(b, Imp(ab, c)))))
    l11 = buf.add(MpLine(l5, l10), Imp(Imp(a, Imp(b, c)), Imp(b, Imp(ab, c))))
    l12 = buf.schema(
        "B", [("A", Imp(a, Imp(b, c))), ("B", Imp(b, Imp(ab, c))), ("C", Imp(ab, Imp(ab, c)))]
    )
    l13 = buf.add(MpLine(l11, l12), Imp(buf.line(l7).prop, Imp(Imp(a, Imp(b, c)), Imp(ab, Imp(ab, c)))))
    l14 = buf.add(MpLine(l7, l13), Imp(Imp(a, Imp(b, c)), Imp(ab, Imp(ab, c))))
    l15 = buf.schema(
        "B", [("A", Imp(a, Imp(b, c))), ("B", Imp(ab, Imp(ab, c))), ("C", Imp(ab, c))]
    )
    l16 = buf.add(MpLine(l14, l15), Imp(buf.line(l8).prop, Imp(Imp(a, Imp(b, c)), Imp(ab, c))))
    return buf.add(MpLine(l8, l16), Imp(Imp(a, Imp(b, c)), Imp(ab, c)))


def _pi2(buf: _Buf, a: Proposition, b: Proposition, c: Proposition) -> int:
    """((a & b) > c) > a > b > c; 17 lines."""
    ab = And(a, b)
    l1 = buf.schema("K", [("A", a), ("B", b)])
    l2 = buf.schema("I", [("A", b)])
    l3 = buf.schema("pair", [("A", b), ("B", a), ("C", b)])
    l4 = buf.schema("B", [("A", a), ("B", Imp(b, a)), ("C", Imp(Imp(b, b), Imp(b, ab)))])
    l5 = buf.add(MpLine(l1, l4), Imp(buf.line(l3).prop, Imp(a, Imp(Imp(b, b), Imp(b, ab)))))
    l6 = buf.add(MpLine(l3, l5), Imp(a, Imp(Imp(b, b), Imp(b, ab))))
    l7 = buf.schema("C", [("A", a), ("B", Imp(b, b)), ("C", Imp(b, ab))])
    l8 = buf.add(MpLine(l6, l7), Imp(Imp(b, b), Imp(a, Imp(b, ab))))
    l9 = buf.add(MpLine(l2, l8), Imp(a, Imp(b, ab)))
    l10 = buf.schema("B", [("A", b), ("B", ab), ("C", c)])
    l11 = buf.schema("C", [("A", Imp(b, ab)), ("B", Imp(ab, c)), ("C", Imp(b, c))])
    l12 = buf.add(MpLine(l10, l11), Imp(Imp(ab, c), Imp(Imp(b, ab), Imp(b, c))))
    l13 = buf.schema("B", [("A", a), ("B", Imp(b, ab)), ("C", Imp(b, c))])
    l14 = buf.add(MpLine(l9, l13), Imp(Imp(Imp(b, ab), Imp(b, c)), Imp(a, Imp(b, c))))
    l15 = buf.schema(
        "B", [("A", Imp(ab, c)), ("B", Imp(Imp(b, ab), Imp(b, c))), ("C", Imp(a, Imp(b, c)))]
    )
    l16 = buf.add(MpLine(l12, l15), Imp(buf.line(l14).prop, Imp(Imp(ab, c), Imp(a, Imp(b, c)))))
    return buf.add(MpLine(l14, l16), Imp(Imp(ab, c), Imp(a, Imp(b, c))))


def _mp_abs_block(buf: _Buf, m_minor: int, m_major: int, a: Proposition, p: Proposition, q: Proposition) -> int:
    """From a>p and a>(p>q) derive a>q; the seven-line modus ponens block."""
    c1 = buf.schema("C", [("A", a), ("B", p), ("C", q)])
    c2 = buf.add(MpLine(m_major, c1), Imp(p, Imp(a, q)))
    c3 = buf.schema("B", [("A", a), ("B", p), ("C", Imp(a, q))])
    c4 = buf.add(MpLine(m_minor, c3), Imp(Imp(p, Imp(a, q)), Imp(a, Imp(a, q))))
    c5 = buf.add(MpLine(c2, c4), Imp(a, Imp(a, q)))
    c6 = buf.schema("W", [("A", a), ("B", q)])
    return buf.add(MpLine(c5, c6), Imp(a, q))


def _uses_hyp(p: Proof, label: str) -> bool:
    if isinstance(p, Hyp):
        return p.label == label
    if isinstance(p, Assume):
        return False
    if isinstance(p, ImpI) and p.label == label:
        return False
    if isinstance(p, ExistsE) and p.label == label:
        return _uses_hyp(p.major, label)
    if isinstance(p, OrE):
        branches = [_uses_hyp(p.major, label)]
        if p.label_left != label:
            branches.append(_uses_hyp(p.sub_left, label))
        if p.label_right != label:
            branches.append(_uses_hyp(p.sub_right, label))
        return any(branches)
    if isinstance(p, IndI) and p.label == label:
        return _uses_hyp(p.base, label)
    return any(_uses_hyp(q, label) for q in premises(p))


def _avoid_capture(body: Proposition, terms: list[Term]) -> Proposition:
    """Rename binders in body so the given terms substitute freely."""
    clash = set()
    for t in terms:
        clash |= {v.name for v in free_variables(t)}

    def go(q):
        if isinstance(q, (Forall, Exists)):
            if q.var.name in clash:
                taken = clash | {v.name for v in free_variables(q.body)}
                fresh = Var(fresh_name(q.var.name, taken), q.var.sort)
                return type(q)(fresh, go(apply_substitution(q.body, {q.var: fresh})))
            return type(q)(q.var, go(q.body))
        if isinstance(q, (And, Or, Imp)):
            return type(q)(go(q.left), go(q.right))
        return q

    return go(body)


def _quantifier_instance(kind: str, var: Var, body: Proposition, term: Term) -> SchemaInstance:
    safe = _avoid_capture(body, [term])
    return instance(
        f"{kind}^{var.sort.level}",
        templates=[("A", Template((var,), safe))],
        terms=[("tau", term)],
        metavars=[("alpha", var)],
    )


class _NdToHilbert:
    def __init__(self, cat: Catalogue, instances: Mapping[str, SchemaInstance]):
        self.cat = cat
        self.instances = instances

    # -- plain translation ---------------------------------------------------

    def tree(self, p: Proof, buf: _Buf) -> int:
        if isinstance(p, Hyp):
            return buf.add(HypLine(p.label), p.prop)
        if isinstance(p, Assume):
            inst = self.instances.get(p.name)
            if inst is None:
                raise TranslationError(f"assumption {p.name!r} has no schema instance")
            return buf.add(SchemaLine(inst), p.prop)
        if isinstance(p, TopI):
            return buf.add(SchemaLine(instance("T")), TRUE)
        if isinstance(p, Tnd):
            return buf.add(
                SchemaLine(instance("TND", templates=[("A", p.disjunct)])), p.conclusion
            )
        if isinstance(p, ImpI):
            return self.abstract_tree(p.sub, p.hyp, p.label, buf)
        if isinstance(p, ImpE):
            m1 = self.tree(p.minor, buf)
            m2 = self.tree(p.major, buf)
            return buf.add(MpLine(m1, m2), p.conclusion)
        if isinstance(p, AndI):
            a = conclusion_of(p.left)
            b = conclusion_of(p.right)
            m1 = self.tree(p.left, buf)
            m2 = self.tree(p.right, buf)
            k1 = buf.schema("K", [("A", b), ("B", a)])
            k2 = buf.add(MpLine(m2, k1), Imp(a, b))
            k3 = buf.schema("I", [("A", a)])
            k4 = buf.schema("pair", [("A", a), ("B", a), ("C", b)])
            k5 = buf.add(MpLine(k3, k4), Imp(Imp(a, b), Imp(a, And(a, b))))
            k6 = buf.add(MpLine(k2, k5), Imp(a, And(a, b)))
            return buf.add(MpLine(m1, k6), p.conclusion)
        if isinstance(p, AndE):
            sub_c = conclusion_of(p.sub)
            m = self.tree(p.sub, buf)
            schema = "proj-l" if p.side == "left" else "proj-r"
            left = p.conclusion if p.side == "left" else p.other
            right = p.other if p.side == "left" else p.conclusion
            k = buf.schema(schema, [("A", left), ("B", right)])
            return buf.add(MpLine(m, k), p.conclusion)
        if isinstance(p, OrI):
            m = self.tree(p.sub, buf)
            schema = "inj-l" if p.side == "left" else "inj-r"
            left = conclusion_of(p.sub) if p.side == "left" else p.other
            right = p.other if p.side == "left" else conclusion_of(p.sub)
            k = buf.schema(schema, [("A", left), ("B", right)])
            return buf.add(MpLine(m, k), p.conclusion)
        if isinstance(p, OrE):
            m1 = self.tree(p.major, buf)
            ml = self.abstract_tree(p.sub_left, p.left, p.label_left, buf)
            mr = self.abstract_tree(p.sub_right, p.right, p.label_right, buf)
            d = p.conclusion
            k = buf.schema("case", [("A", p.left), ("B", p.right), ("C", d)])
            k2 = buf.add(MpLine(ml, k), Imp(Imp(p.right, d), Imp(Or(p.left, p.right), d)))
            k3 = buf.add(MpLine(mr, k2), Imp(Or(p.left, p.right), d))
            return buf.add(MpLine(m1, k3), d)
        if isinstance(p, ForallI):
            m = self.tree(p.sub, buf)
            prem = conclusion_of(p.sub)
            k1 = buf.schema("K", [("A", prem), ("B", TRUE)])
            k2 = buf.add(MpLine(m, k1), Imp(TRUE, prem))
            k3 = buf.add(GenLine(k2, p.eigen), Imp(TRUE, p.conclusion))
            k4 = buf.add(SchemaLine(instance("T")), TRUE)
            return buf.add(MpLine(k4, k3), p.conclusion)
        if isinstance(p, ForallE):
            m = self.tree(p.sub, buf)
            inst = _quantifier_instance("UI", p.var, p.body, p.term)
            built = self.cat.instantiate(inst)
            k = buf.add(SchemaLine(inst), built)
            return buf.add(MpLine(m, k), p.conclusion)
        if isinstance(p, ExistsI):
            m = self.tree(p.sub, buf)
            inst = _quantifier_instance("EI", p.var, p.body, p.term)
            built = self.cat.instantiate(inst)
            k = buf.add(SchemaLine(inst), built)
            return buf.add(MpLine(m, k), p.conclusion)
        if isinstance(p, ExistsE):
            m1 = self.tree(p.major, buf)
            hyp_prop = apply_substitution(p.body, {p.var: p.eigen})
            m2 = self.abstract_tree(p.sub, hyp_prop, p.label, buf)
            k = buf.add(PartLine(m2, p.eigen), Imp(Exists(p.var, p.body), p.conclusion))
            return buf.add(MpLine(m1, k), p.conclusion)
        if isinstance(p, BotE):
            m = self.tree(p.sub, buf)
            a = p.conclusion
            k1 = buf.schema("I", [("A", a)])
            k2 = buf.schema("K", [("A", FALSE), ("B", Imp(a, a))])
            k3 = buf.add(MpLine(m, k2), Imp(Imp(a, a), FALSE))
            k4 = buf.schema("efsq", [("A", Imp(a, a)), ("B", a)])
            k5 = buf.add(MpLine(k3, k4), Imp(Imp(a, a), a))
            return buf.add(MpLine(k1, k5), a)
        raise TranslationError(f"cannot translate node {type(p).__name__}")

    # -- abstraction over one hypothesis -------------------------------------

    def abstract_tree(self, p: Proof, a: Proposition, label: str, buf: _Buf) -> int:
        target = Imp(a, conclusion_of(p))
        if not _uses_hyp(p, label):
            m = self.tree(p, buf)
            prop = conclusion_of(p)
            k = buf.schema("K", [("A", prop), ("B", a)])
            return buf.add(MpLine(m, k), target)
        if isinstance(p, Hyp) and p.label == label:
            return buf.add(SchemaLine(instance("I", templates=[("A", a)])), Imp(a, p.prop))
        if isinstance(p, ImpI):
            inner = _Buf()
            self.abstract_tree(p.sub, p.hyp, p.label, inner)
            return self.abstract_lines(inner.lines, a, label, buf)
        if isinstance(p, ImpE):
            m1 = self.abstract_tree(p.minor, a, label, buf)
            m2 = self.abstract_tree(p.major, a, label, buf)
            return _mp_abs_block(buf, m1, m2, a, conclusion_of(p.minor), p.conclusion)
        if isinstance(p, AndI):
            b, c = conclusion_of(p.left), conclusion_of(p.right)
            m1 = self.abstract_tree(p.left, a, label, buf)
            m2 = self.abstract_tree(p.right, a, label, buf)
            k = buf.schema("pair", [("A", a), ("B", b), ("C", c)])
            k2 = buf.add(MpLine(m1, k), Imp(Imp(a, c), Imp(a, And(b, c))))
            return buf.add(MpLine(m2, k2), Imp(a, And(b, c)))
        if isinstance(p, AndE):
            sub_c = conclusion_of(p.sub)
            left = p.conclusion if p.side == "left" else p.other
            right = p.other if p.side == "left" else p.conclusion
            schema = "proj-l" if p.side == "left" else "proj-r"
            k1 = buf.schema(schema, [("A", left), ("B", right)])
            m = self.abstract_tree(p.sub, a, label, buf)
            k2 = buf.schema("B", [("A", a), ("B", sub_c), ("C", p.conclusion)])
            k3 = buf.add(MpLine(m, k2), Imp(Imp(sub_c, p.conclusion), target))
            return buf.add(MpLine(k1, k3), target)
        if isinstance(p, OrI):
            sub_c = conclusion_of(p.sub)
            left = sub_c if p.side == "left" else p.other
            right = p.other if p.side == "left" else sub_c
            schema = "inj-l" if p.side == "left" else "inj-r"
            k1 = buf.schema(schema, [("A", left), ("B", right)])
            m = self.abstract_tree(p.sub, a, label, buf)
            k2 = buf.schema("B", [("A", a), ("B", sub_c), ("C", p.conclusion)])
            k3 = buf.add(MpLine(m, k2), Imp(Imp(sub_c, p.conclusion), target))
            return buf.add(MpLine(k1, k3), target)
        if isinstance(p, OrE):
            d = p.conclusion
            bufl = _Buf()
            self.abstract_tree(p.sub_left, a, label, bufl)
            ml = self.abstract_lines(bufl.lines, p.left, p.label_left, buf)
            bufr = _Buf()
            self.abstract_tree(p.sub_right, a, label, bufr)
            mr = self.abstract_lines(bufr.lines, p.right, p.label_right, buf)
            k = buf.schema("case", [("A", p.left), ("B", p.right), ("C", Imp(a, d))])
            k2 = buf.add(
                MpLine(ml, k),
                Imp(Imp(p.right, Imp(a, d)), Imp(Or(p.left, p.right), Imp(a, d))),
            )
            k3 = buf.add(MpLine(mr, k2), Imp(Or(p.left, p.right), Imp(a, d)))
            m1 = self.abstract_tree(p.major, a, label, buf)
            k4 = buf.schema("B", [("A", a), ("B", Or(p.left, p.right)), ("C", Imp(a, d))])
            k5 = buf.add(MpLine(m1, k4), Imp(Imp(Or(p.left, p.right), Imp(a, d)), Imp(a, Imp(a, d))))
            k6 = buf.add(MpLine(k3, k5), Imp(a, Imp(a, d)))
            k7 = buf.schema("W", [("A", a), ("B", d)])
            return buf.add(MpLine(k6, k7), target)
        if isinstance(p, ForallI):
            m = self.abstract_tree(p.sub, a, label, buf)
            return buf.add(GenLine(m, p.eigen), target)
        if isinstance(p, ForallE):
            inst = _quantifier_instance("UI", p.var, p.body, p.term)
            k1 = buf.add(SchemaLine(inst), self.cat.instantiate(inst))
            m = self.abstract_tree(p.sub, a, label, buf)
            closure = Forall(p.var, p.body)
            k2 = buf.schema("B", [("A", a), ("B", closure), ("C", p.conclusion)])
            k3 = buf.add(MpLine(m, k2), Imp(Imp(closure, p.conclusion), target))
            return buf.add(MpLine(k1, k3), target)
        if isinstance(p, ExistsI):
            inst = _quantifier_instance("EI", p.var, p.body, p.term)
            k1 = buf.add(SchemaLine(inst), self.cat.instantiate(inst))
            sub_c = conclusion_of(p.sub)
            m = self.abstract_tree(p.sub, a, label, buf)
            k2 = buf.schema("B", [("A", a), ("B", sub_c), ("C", p.conclusion)])
            k3 = buf.add(MpLine(m, k2), Imp(Imp(sub_c, p.conclusion), target))
            return buf.add(MpLine(k1, k3), target)
        if isinstance(p, ExistsE):
            c = p.conclusion
            hyp_prop = apply_substitution(p.body, {p.var: p.eigen})
            bufs = _Buf()
            self.abstract_tree(p.sub, a, label, bufs)
            ms = self.abstract_lines(bufs.lines, hyp_prop, p.label, buf)
            closure = Exists(p.var, p.body)
            k1 = buf.add(PartLine(ms, p.eigen), Imp(closure, Imp(a, c)))
            m1 = self.abstract_tree(p.major, a, label, buf)
            k2 = buf.schema("B", [("A", a), ("B", closure), ("C", Imp(a, c))])
            k3 = buf.add(MpLine(m1, k2), Imp(Imp(closure, Imp(a, c)), Imp(a, Imp(a, c))))
            k4 = buf.add(MpLine(k1, k3), Imp(a, Imp(a, c)))
            k5 = buf.schema("W", [("A", a), ("B", c)])
            return buf.add(MpLine(k4, k5), target)
        if isinstance(p, BotE):
            m = self.abstract_tree(p.sub, a, label, buf)
            k = buf.schema("efsq", [("A", a), ("B", p.conclusion)])
            return buf.add(MpLine(m, k), target)
        raise TranslationError(f"cannot abstract over node {type(p).__name__}")

    # -- abstraction over finished line lists --------------------------------

    def abstract_lines(self, inner: list[Line], a: Proposition, label: str, buf: _Buf) -> int:
        mapping: dict[int, int] = {}
        for idx, line in enumerate(inner, start=1):
            j = line.just
            target = Imp(a, line.prop)
            if isinstance(j, HypLine) and j.label == label:
                mapping[idx] = buf.add(
                    SchemaLine(instance("I", templates=[("A", line.prop)])), target
                )
            elif isinstance(j, MpLine):
                p_prop = inner[j.minor - 1].prop
                mapping[idx] = _mp_abs_block(
                    buf, mapping[j.minor], mapping[j.major], a, p_prop, line.prop
                )
            elif isinstance(j, GenLine):
                shape = line.prop
                assert isinstance(shape, Imp) and isinstance(shape.right, Forall)
                x_prop = shape.left
                prem_prop = inner[j.ref - 1].prop
                assert isinstance(prem_prop, Imp)
                y_at = prem_prop.right
                w1 = _pi1(buf, a, x_prop, y_at)
                g1 = buf.add(MpLine(mapping[j.ref], w1), Imp(And(a, x_prop), y_at))
                g2 = buf.add(GenLine(g1, j.eigen), Imp(And(a, x_prop), shape.right))
                w2 = _pi2(buf, a, x_prop, shape.right)
                mapping[idx] = buf.add(MpLine(g2, w2), target)
            elif isinstance(j, PartLine):
                shape = line.prop
                assert isinstance(shape, Imp) and isinstance(shape.left, Exists)
                prem_prop = inner[j.ref - 1].prop
                assert isinstance(prem_prop, Imp)
                b_at = prem_prop.left
                c1 = buf.schema("C", [("A", a), ("B", b_at), ("C", shape.right)])
                c2 = buf.add(MpLine(mapping[j.ref], c1), Imp(b_at, Imp(a, shape.right)))
                c3 = buf.add(PartLine(c2, j.eigen), Imp(shape.left, Imp(a, shape.right)))
                c4 = buf.schema("C", [("A", shape.left), ("B", a), ("C", shape.right)])
                mapping[idx] = buf.add(MpLine(c3, c4), target)
            else:
                k0 = buf.add(j, line.prop)
                k1 = buf.schema("K", [("A", line.prop), ("B", a)])
                mapping[idx] = buf.add(MpLine(k0, k1), target)
        return mapping[len(inner)]


def nd_to_hilbert(
    proof: Proof,
    cat: Catalogue,
    instances: Mapping[str, SchemaInstance] = (),
) -> HilbertProof:
    """The bracket-abstraction translation into the schematic system.

    The input must check in pure natural deduction (no rewrite system) with
    assumptions that are schema instances named by ``instances``.
    """
    instances = dict(instances)
    assumptions = {}
    for name, inst in instances.items():
        assumptions[name] = cat.instantiate(inst)
    verdict = check_nd(proof, assumptions=assumptions)
    if not verdict.ok:
        raise TranslationError(f"input is not a pure closed proof: {verdict.error}")
    translator = _NdToHilbert(cat, instances)
    buf = _Buf()
    translator.tree(proof, buf)
    for line in buf.lines:
        if isinstance(line.just, HypLine):
            raise TranslationError("internal: hypothesis line left in the output")
    return HilbertProof(tuple(buf.lines))


# ---------------------------------------------------------------------------
# Natural deduction with schema assumptions to the axiom-free system


def zi_nd_to_hha(proof: Proof, instances: Mapping[str, SchemaInstance]) -> Proof:
    """Replace every schema-instance assumption by its axiom-free fragment."""
    instances = dict(instances)

    def rebuild(p: Proof) -> Proof:
        if isinstance(p, Assume):
            inst = instances.get(p.name)
            if inst is None:
                raise TranslationError(f"assumption {p.name!r} is not in the fragment library")
            name = inst.schema
            if name in ("leibniz", "ind") or name.startswith("comp^"):
                frag = hha_fragment(name, inst.template("A"))
            else:
                frag = hha_fragment(name)
            if not alpha_equal(conclusion_of(frag.proof), p.prop):
                raise TranslationError(f"fragment for {name} proves a different instance")
            return frag.proof
        if isinstance(p, Hyp):
            return p
        updates = {}
        for field in ("sub", "minor", "major", "left", "right", "sub_left", "sub_right", "base", "step"):
            if hasattr(p, field):
                updates[field] = rebuild(getattr(p, field))
        return _dc_replace(p, **updates)

    return rebuild(proof)


# ---------------------------------------------------------------------------
# Axiom elimination between compatible presentations


@dataclass(frozen=True)
class CompatibilityCertificate:
    """Both directions of compatibility, witnessed by checkable proofs."""

    system: RewriteSystem
    source: Presentation
    target: Presentation
    axiom_proofs: tuple[tuple[str, Proof], ...]  # source axiom -> proof modulo system
    rule_equivalences: tuple[tuple[str, Proof], ...]  # rule -> proof from target

    def axiom_proof(self, name: str) -> Proof:
        for n, p in self.axiom_proofs:
            if n == name:
                return p
        raise TranslationError(f"certificate has no proof for axiom {name!r}")

    def rule_equivalence(self, name: str) -> Proof:
        for n, p in self.rule_equivalences:
            if n == name:
                return p
        raise TranslationError(f"certificate has no equivalence proof for rule {name!r}")


def verify_certificate(cert: CompatibilityCertificate, fuel: Optional[int] = None) -> bool:
    source = cert.source.as_dict()
    for name, proof in cert.axiom_proofs:
        want = source[name]
        if not alpha_equal(conclusion_of(proof), want):
            return False
        if not check_nd(proof, system=cert.system, mode="mixed", fuel=fuel).ok:
            return False
    target = cert.target.as_dict()
    for rule in cert.system.rules:
        proof = cert.rule_equivalence(rule.name)
        if not check_nd(proof, assumptions=target).ok:
            return False
    return True


def _iff_sym(e: Proof, x: Proposition, y: Proposition) -> Proof:
    fwd = AndE(Imp(y, x), other=Imp(x, y), side="right", sub=e)
    bwd = AndE(Imp(x, y), other=Imp(y, x), side="left", sub=e)
    return AndI(And(Imp(y, x), Imp(x, y)), fwd, bwd)


def _iff_trans(e1: Proof, e2: Proof, x: Proposition, y: Proposition, z: Proposition, lab: _Gensym) -> Proof:
    exy = AndE(Imp(x, y), other=Imp(y, x), side="left", sub=e1)
    eyz = AndE(Imp(y, z), other=Imp(z, y), side="left", sub=e2)
    l1 = lab()
    fwd = ImpI(
        Imp(x, z),
        hyp=x,
        label=l1,
        sub=ImpE(z, minor=ImpE(y, minor=Hyp(l1, x), major=exy), major=eyz),
    )
    eyx = AndE(Imp(y, x), other=Imp(x, y), side="right", sub=e1)
    ezy = AndE(Imp(z, y), other=Imp(y, z), side="right", sub=e2)
    l2 = lab()
    bwd = ImpI(
        Imp(z, x),
        hyp=z,
        label=l2,
        sub=ImpE(x, minor=ImpE(y, minor=Hyp(l2, z), major=ezy), major=eyx),
    )
    return AndI(And(Imp(x, z), Imp(z, x)), fwd, bwd)


def _iff_sides(e: Proof, x: Proposition, y: Proposition) -> tuple[Proof, Proof]:
    """From e : x <=> y, the two directions x > y and y > x."""
    fwd = AndE(Imp(x, y), other=Imp(y, x), side="left", sub=e)
    bwd = AndE(Imp(y, x), other=Imp(x, y), side="right", sub=e)
    return fwd, bwd


def _lift_one(
    e: Proof, x: Proposition, y: Proposition, parent: Proposition, idx: int, lab: _Gensym
) -> tuple[Proof, Proposition]:
    """Lift e : x <=> y through one layer of the surrounding proposition."""
    e_fwd, e_bwd = _iff_sides(e, x, y)

    def half(src: Proposition, dst: Proposition, use: Proof, a: Proposition, b: Proposition) -> Proof:
        # src > dst where dst replaces a by b at the layer, given use : a > b
        l = lab()
        h = Hyp(l, src)
        if isinstance(parent, And):
            if idx == 1:
                body = AndI(dst, ImpE(b, minor=AndE(a, src.right, "left", h), major=use),
                            AndE(src.right, a, "right", h))
            else:
                body = AndI(dst, AndE(src.left, a, "left", h),
                            ImpE(b, minor=AndE(a, src.left, "right", h), major=use))
        elif isinstance(parent, Or):
            la, lb = lab(), lab()
            if idx == 1:
                sub_a = OrI(dst, other=src.right, side="left", sub=ImpE(b, Hyp(la, a), use))
                sub_b = OrI(dst, other=b, side="right", sub=Hyp(lb, src.right))
                body = OrE(dst, a, src.right, la, lb, h, sub_a, sub_b)
            else:
                sub_a = OrI(dst, other=b, side="left", sub=Hyp(la, src.left))
                sub_b = OrI(dst, other=src.left, side="right", sub=ImpE(b, Hyp(lb, a), use))
                body = OrE(dst, src.left, a, la, lb, h, sub_a, sub_b)
        elif isinstance(parent, Imp):
            if idx == 1:
                # contravariant: use must be dst.left > src.left
                l2 = lab()
                body = ImpI(
                    dst,
                    hyp=dst.left,
                    label=l2,
                    sub=ImpE(src.right, minor=ImpE(src.left, Hyp(l2, dst.left), use), major=h),
                )
            else:
                l2 = lab()
                body = ImpI(
                    dst,
                    hyp=src.left,
                    label=l2,
                    sub=ImpE(b, minor=ImpE(a, Hyp(l2, src.left), h), major=use),
                )
        elif isinstance(parent, Forall):
            v = parent.var
            inst = ForallE(a, var=v, body=a, term=v, sub=h)
            body = ForallI(dst, var=v, body=b, eigen=v, sub=ImpE(b, minor=inst, major=use))
        elif isinstance(parent, Exists):
            v = parent.var
            lw = lab()
            witness = ExistsI(dst, var=v, body=b, term=v, sub=ImpE(b, Hyp(lw, a), use))
            body = ExistsE(dst, var=v, body=a, eigen=v, label=lw, major=h, sub=witness)
        else:
            raise TranslationError(
                f"cannot lift an equivalence through {type(parent).__name__}; "
                "term-level rewriting needs equality axioms in the target"
            )
        return ImpI(Imp(src, dst), hyp=src, label=l, sub=body)

    new_parent = _replace_child(parent, idx, y)
    if isinstance(parent, Imp) and idx == 1:
        fwd = half(parent, new_parent, e_bwd, y, x)
        bwd = half(new_parent, parent, e_fwd, x, y)
    else:
        fwd = half(parent, new_parent, e_fwd, x, y)
        bwd = half(new_parent, parent, e_bwd, y, x)
    return AndI(And(Imp(parent, new_parent), Imp(new_parent, parent)), fwd, bwd), new_parent


def _replace_child(parent: Proposition, idx: int, new: Proposition) -> Proposition:
    if isinstance(parent, (And, Or, Imp)):
        return type(parent)(new, parent.right) if idx == 1 else type(parent)(parent.left, new)
    if isinstance(parent, (Forall, Exists)):
        return type(parent)(parent.var, new)
    raise TranslationError(f"no proposition child {idx} in {parent}")


def _lift_path(
    e: Proof, y: Proposition, whole: Proposition, pos: tuple, lab: _Gensym
) -> tuple[Proof, Proposition]:
    """Lift e : whole|pos <=> y through the context above pos."""
    from .syntax import children as _children

    if pos == ():
        return e, y
    idx = pos[0]
    subs = _children(whole)
    if not isinstance(whole, (And, Or, Imp, Forall, Exists)):
        raise TranslationError(
            "cannot lift an equivalence through a term position; "
            "term-level rewriting needs equality axioms in the target"
        )
    child = subs[idx - 1]
    sub_pf, new_child = _lift_path(e, y, child, pos[1:], lab)
    return _lift_one(sub_pf, child, new_child, whole, idx, lab)


def _equivalence_proof(trace: Trace, start: Proposition, cert: CompatibilityCertificate, lab: _Gensym) -> Proof:
    """A target-presentation proof of start <=> end built from a trace."""
    from .syntax import subterm_at

    cur = start
    acc: Optional[Proof] = None
    for step in trace.steps:
        rule = cert.system.rule(step.rule)
        sigma = step.substitution()
        closure_proof = cert.rule_equivalence(step.rule)
        closure = conclusion_of(closure_proof)
        inst_proof = closure_proof
        shape = closure
        while isinstance(shape, Forall):
            term = sigma.get(shape.var, shape.var)
            body = apply_substitution(shape.body, {shape.var: term})
            inst_proof = ForallE(body, var=shape.var, body=shape.body, term=term, sub=inst_proof)
            shape = body
        lhs = apply_substitution(rule.lhs, sigma)
        rhs = apply_substitution(rule.rhs, sigma)
        at = subterm_at(cur, step.position)
        if step.forward:
            if at != lhs:
                raise TranslationError("trace step does not match the current proposition")
            leg, after = _lift_path(inst_proof, rhs, cur, step.position, lab)
        else:
            if not alpha_equal(at, rhs):
                raise TranslationError("backward trace step does not match")
            flipped = _iff_sym(inst_proof, lhs, rhs)
            leg, after = _lift_path(flipped, lhs, cur, step.position, lab)
        acc = leg if acc is None else _iff_trans(acc, leg, start, cur, after, lab)
        cur = after
    if acc is None:
        raise TranslationError("empty trace needs no expansion")
    return acc


_CONCLUSION_SLOTS = {
    ImpI: ("via",),
    AndI: ("via",),
    OrI: ("via",),
    ForallI: ("via",),
    TopI: ("via",),
    Tnd: ("via",),
    ForallE: ("via2",),
    ExistsI: ("via",),
}

_PREMISE_SLOTS = {
    ImpE: (("via", "major"),),
    AndE: (("via", "sub"),),
    OrE: (("via", "major"),),
    ForallE: (("via", "sub"),),
    ExistsI: (("via2", "sub"),),
    ExistsE: (("via", "major"),),
    BotE: (("via", "sub"),),
}


def expand_congruences(proof: Proof, cert: CompatibilityCertificate, lab: Optional[_Gensym] = None) -> Proof:
    """Rewrite a proof modulo the certificate's system into a pure proof.

    Every congruence use becomes a cut with the corresponding equivalence
    proof from the target presentation.
    """
    lab = lab or _Gensym("x")

    def convert(p: Proof) -> Proof:
        if isinstance(p, (Hyp, Assume)):
            return p
        if isinstance(p, IndI):
            raise TranslationError("the induction rule has no axiomatic counterpart here")
        updates = {}
        for field in ("sub", "minor", "major", "left", "right", "sub_left", "sub_right"):
            if hasattr(p, field):
                updates[field] = convert(getattr(p, field))
        node = _dc_replace(p, **updates)

        slot_pairs = list(obligations(node))
        # premise-side conversions first: they change subproofs, not shapes
        for slots in _PREMISE_SLOTS.get(type(node), ()):
            via_name, prem_name = slots
            for left, right, slot in slot_pairs:
                if slot != via_name:
                    continue
                if alpha_equal(left, right):
                    node = _dc_replace(node, **{slot: None})
                    continue
                trace = getattr(node, slot) or connecting_trace(left, right, cert.system)
                eq_pf = _equivalence_proof(trace, left, cert, lab)
                bridge = AndE(Imp(left, right), other=Imp(right, left), side="left", sub=eq_pf)
                prem = getattr(node, prem_name)
                fixed = ImpE(right, minor=prem, major=bridge)
                node = _dc_replace(node, **{prem_name: fixed, slot: None})
        for via_name in _CONCLUSION_SLOTS.get(type(node), ()):
            for left, right, slot in obligations(node):
                if slot != via_name:
                    continue
                if alpha_equal(left, right):
                    node = _dc_replace(node, **{slot: None})
                    continue
                trace = getattr(node, slot) or connecting_trace(left, right, cert.system)
                eq_pf = _equivalence_proof(trace, left, cert, lab)
                exact = _dc_replace(node, conclusion=right, **{slot: None})
                bridge = AndE(Imp(right, left), other=Imp(left, right), side="right", sub=eq_pf)
                node = ImpE(left, minor=exact, major=bridge)
                break
        return node

    return convert(proof)


def eliminate_axioms(proof: Proof, cert: CompatibilityCertificate) -> Proof:
    """Prop-2.3-style translation between presentations compatible with one
    rewrite system: replace each source axiom by its expanded modulo proof."""
    source = cert.source.as_dict()
    expanded: dict[str, Proof] = {}

    def rebuild(p: Proof) -> Proof:
        if isinstance(p, Assume):
            if p.name in source:
                if p.name not in expanded:
                    expanded[p.name] = expand_congruences(cert.axiom_proof(p.name), cert)
                replacement = expanded[p.name]
                if not alpha_equal(conclusion_of(replacement), p.prop):
                    raise TranslationError(f"axiom {p.name!r} proof concludes something else")
                return replacement
            return p
        if isinstance(p, Hyp):
            return p
        updates = {}
        for field in ("sub", "minor", "major", "left", "right", "sub_left", "sub_right"):
            if hasattr(p, field):
                updates[field] = rebuild(getattr(p, field))
        return _dc_replace(p, **updates)

    return rebuild(proof)
