"""Concrete syntax for signatures, rules, axioms, proofs and traces.

Variables are dotted atoms ``name.sort`` (``x.0``, ``l.list``, ``p.class``);
anything else in term position is a function application ``(f a b)`` or a
nullary symbol.  Propositions use ``true``, ``false``, ``and``, ``or``,
``imp``, ``not``, ``iff``, ``forall``, ``exists`` and signature predicates.
Parsing is signature-directed, so terms carry their sorts after reading.
"""

from __future__ import annotations

from typing import Sequence

from . import nd
from .hilbert import (
    GenLine,
    HilbertProof,
    HypLine,
    Line,
    MpLine,
    PartLine,
    SchemaInstance,
    SchemaLine,
    Template,
)
from .rewriting import RewriteStep, Rule, RewriteSystem, Trace
from .sexpr import Sx, parse, show, show_pretty
from .syntax import (
    And,
    Atom,
    CLASS,
    Exists,
    FALSE,
    Falsum,
    Forall,
    FunDecl,
    Imp,
    LIST,
    Or,
    PredDecl,
    Proposition,
    Signature,
    Sort,
    TRUE,
    Term,
    Var,
    Verum,
    App,
    arith,
    iff,
    neg,
)
from .theories import Presentation

RESERVED = {"true", "false", "and", "or", "imp", "not", "iff", "forall", "exists"}


class FormatError(Exception):
    pass


# ---------------------------------------------------------------------------
# Sorts, variables, terms, propositions


def show_sort(s: Sort) -> str:
    return str(s)


def parse_sort(atom: str) -> Sort:
    if atom == "list":
        return LIST
    if atom == "class":
        return CLASS
    if atom.isdigit():
        return arith(int(atom))
    raise FormatError(f"not a sort: {atom!r}")


def show_var(v: Var) -> str:
    return f"{v.name}.{v.sort}"


def parse_var(atom: str) -> Var:
    if "." not in atom:
        raise FormatError(f"not a variable: {atom!r}")
    name, _, sort = atom.rpartition(".")
    return Var(name, parse_sort(sort))


def term_to_sx(t: Term) -> Sx:
    if isinstance(t, Var):
        return show_var(t)
    if not t.args:
        return t.fn
    return [t.fn] + [term_to_sx(a) for a in t.args]


def term_from_sx(sx: Sx, sig: Signature) -> Term:
    if isinstance(sx, str):
        if "." in sx:
            v = parse_var(sx)
            if v.sort not in sig.sorts:
                raise FormatError(f"variable {sx!r} has an undeclared sort")
            return v
        return sig.app(sx)
    head, *args = sx
    if not isinstance(head, str):
        raise FormatError(f"bad term {show(sx)}")
    return sig.app(head, *[term_from_sx(a, sig) for a in args])


def prop_to_sx(p: Proposition) -> Sx:
    if isinstance(p, Verum):
        return "true"
    if isinstance(p, Falsum):
        return "false"
    if isinstance(p, Atom):
        if not p.args:
            return [p.pred]
        return [p.pred] + [term_to_sx(a) for a in p.args]
    if isinstance(p, And):
        return ["and", prop_to_sx(p.left), prop_to_sx(p.right)]
    if isinstance(p, Or):
        return ["or", prop_to_sx(p.left), prop_to_sx(p.right)]
    if isinstance(p, Imp):
        return ["imp", prop_to_sx(p.left), prop_to_sx(p.right)]
    if isinstance(p, Forall):
        return ["forall", show_var(p.var), prop_to_sx(p.body)]
    if isinstance(p, Exists):
        return ["exists", show_var(p.var), prop_to_sx(p.body)]
    raise FormatError(f"not a proposition: {p!r}")


def prop_from_sx(sx: Sx, sig: Signature) -> Proposition:
    if sx == "true":
        return TRUE
    if sx == "false":
        return FALSE
    if isinstance(sx, str):
        raise FormatError(f"bad proposition {sx!r}")
    head, *rest = sx
    if head == "and":
        return And(prop_from_sx(rest[0], sig), prop_from_sx(rest[1], sig))
    if head == "or":
        return Or(prop_from_sx(rest[0], sig), prop_from_sx(rest[1], sig))
    if head == "imp":
        return Imp(prop_from_sx(rest[0], sig), prop_from_sx(rest[1], sig))
    if head == "iff":
        return iff(prop_from_sx(rest[0], sig), prop_from_sx(rest[1], sig))
    if head == "not":
        return neg(prop_from_sx(rest[0], sig))
    if head == "forall":
        return Forall(parse_var(rest[0]), prop_from_sx(rest[1], sig))
    if head == "exists":
        return Exists(parse_var(rest[0]), prop_from_sx(rest[1], sig))
    if isinstance(head, str) and head in sig.preds:
        return sig.atom(head, *[term_from_sx(a, sig) for a in rest])
    raise FormatError(f"unknown proposition head {head!r}")


# ---------------------------------------------------------------------------
# Signatures, rewrite systems, presentations


def signature_to_sx(sig: Signature) -> Sx:
    out: list[Sx] = ["signature", ["sorts"] + [show_sort(s) for s in sig.sorts]]
    for d in sig.fun_decls:
        out.append(["fun", d.name, [show_sort(s) for s in d.arg_sorts], show_sort(d.result)])
    for d in sig.pred_decls:
        out.append(["pred", d.name, [show_sort(s) for s in d.arg_sorts]])
    return out


def signature_from_sx(sx: Sx) -> Signature:
    if not (isinstance(sx, list) and sx and sx[0] == "signature"):
        raise FormatError("expected (signature ...)")
    sorts: list[Sort] = []
    funs: list[FunDecl] = []
    preds: list[PredDecl] = []
    for form in sx[1:]:
        head = form[0]
        if head == "sorts":
            sorts = [parse_sort(a) for a in form[1:]]
        elif head == "fun":
            _, name, args, result = form
            funs.append(FunDecl(name, tuple(parse_sort(a) for a in args), parse_sort(result)))
        elif head == "pred":
            _, name, args = form
            preds.append(PredDecl(name, tuple(parse_sort(a) for a in args)))
        else:
            raise FormatError(f"unknown signature entry {head!r}")
    return Signature(tuple(sorts), tuple(funs), tuple(preds))


def system_to_sx(system: RewriteSystem) -> Sx:
    flags = ["flags"]
    if system.terminating:
        flags.append("terminating")
    if system.confluent:
        flags.append("confluent")
    out: list[Sx] = ["rules", system.name, flags]
    for r in system.rules:
        lhs = prop_to_sx(r.lhs) if isinstance(r.lhs, Atom) else term_to_sx(r.lhs)
        rhs = prop_to_sx(r.rhs) if not isinstance(r.rhs, (Var, App)) else term_to_sx(r.rhs)
        out.append(["rule", r.name, lhs, rhs])
    return out


def system_from_sx(sx: Sx, sig: Signature) -> RewriteSystem:
    if not (isinstance(sx, list) and sx and sx[0] == "rules"):
        raise FormatError("expected (rules ...)")
    name = sx[1]
    flags = sx[2]
    terminating = "terminating" in flags
    confluent = "confluent" in flags
    rules = []
    for form in sx[3:]:
        _, rname, lhs_sx, rhs_sx = form
        lhs = _term_or_atom(lhs_sx, sig)
        if isinstance(lhs, Atom):
            rhs = prop_from_sx(rhs_sx, sig)
        else:
            rhs = term_from_sx(rhs_sx, sig)
        rules.append(Rule(rname, lhs, rhs))
    return RewriteSystem(name, tuple(rules), terminating=terminating, confluent=confluent)


def _term_or_atom(sx: Sx, sig: Signature):
    if isinstance(sx, list) and sx and isinstance(sx[0], str) and sx[0] in sig.preds:
        return prop_from_sx(sx, sig)
    return term_from_sx(sx, sig)


def presentation_to_sx(pres: Presentation) -> Sx:
    out: list[Sx] = ["axioms", pres.name]
    for name, prop in pres.axioms:
        out.append(["axiom", name, prop_to_sx(prop)])
    return out


def presentation_from_sx(sx: Sx, sig: Signature) -> Presentation:
    if not (isinstance(sx, list) and sx and sx[0] == "axioms"):
        raise FormatError("expected (axioms ...)")
    axioms = tuple((form[1], prop_from_sx(form[2], sig)) for form in sx[2:])
    return Presentation(sx[1], axioms)


# ---------------------------------------------------------------------------
# Traces


def trace_to_sx(trace: Trace) -> Sx:
    out: list[Sx] = ["trace"]
    for s in trace.steps:
        out.append(
            [
                "step",
                [str(i) for i in s.position],
                s.rule,
                "fwd" if s.forward else "bwd",
                [[show_var(v), term_to_sx(t)] for v, t in s.subst],
            ]
        )
    return out


def trace_from_sx(sx: Sx, sig: Signature) -> Trace:
    steps = []
    for form in sx[1:]:
        _, pos, rule, direction, binds = form
        subst = tuple((parse_var(v), term_from_sx(t, sig)) for v, t in binds)
        steps.append(RewriteStep(tuple(int(i) for i in pos), rule, subst, direction == "fwd"))
    return Trace(None, None, tuple(steps))


# ---------------------------------------------------------------------------
# Natural deduction proofs


def proof_to_sx(p: nd.Proof) -> Sx:
    def via(*pairs) -> list[Sx]:
        out = []
        for slot, tr in pairs:
            if tr is not None:
                out.append([slot, *trace_to_sx(tr)[1:]])
        return out

    if isinstance(p, nd.Hyp):
        return ["hyp", p.label, prop_to_sx(p.prop)]
    if isinstance(p, nd.Assume):
        return ["assume", p.name, prop_to_sx(p.prop)]
    if isinstance(p, nd.ImpI):
        return ["imp-i", prop_to_sx(p.conclusion), prop_to_sx(p.hyp), p.label,
                proof_to_sx(p.sub)] + via(("via", p.via))
    if isinstance(p, nd.ImpE):
        return ["imp-e", prop_to_sx(p.conclusion), proof_to_sx(p.minor),
                proof_to_sx(p.major)] + via(("via", p.via))
    if isinstance(p, nd.AndI):
        return ["and-i", prop_to_sx(p.conclusion), proof_to_sx(p.left),
                proof_to_sx(p.right)] + via(("via", p.via))
    if isinstance(p, nd.AndE):
        return ["and-e", prop_to_sx(p.conclusion), p.side, prop_to_sx(p.other),
                proof_to_sx(p.sub)] + via(("via", p.via))
    if isinstance(p, nd.OrI):
        return ["or-i", prop_to_sx(p.conclusion), p.side, prop_to_sx(p.other),
                proof_to_sx(p.sub)] + via(("via", p.via))
    if isinstance(p, nd.OrE):
        return ["or-e", prop_to_sx(p.conclusion), prop_to_sx(p.left), prop_to_sx(p.right),
                p.label_left, p.label_right, proof_to_sx(p.major), proof_to_sx(p.sub_left),
                proof_to_sx(p.sub_right)] + via(("via", p.via))
    if isinstance(p, nd.ForallI):
        return ["forall-i", prop_to_sx(p.conclusion), show_var(p.var), prop_to_sx(p.body),
                show_var(p.eigen), proof_to_sx(p.sub)] + via(("via", p.via))
    if isinstance(p, nd.ForallE):
        return ["forall-e", prop_to_sx(p.conclusion), show_var(p.var), prop_to_sx(p.body),
                term_to_sx(p.term), proof_to_sx(p.sub)] + via(("via", p.via), ("via2", p.via2))
    if isinstance(p, nd.ExistsI):
        return ["exists-i", prop_to_sx(p.conclusion), show_var(p.var), prop_to_sx(p.body),
                term_to_sx(p.term), proof_to_sx(p.sub)] + via(("via", p.via), ("via2", p.via2))
    if isinstance(p, nd.ExistsE):
        return ["exists-e", prop_to_sx(p.conclusion), show_var(p.var), prop_to_sx(p.body),
                show_var(p.eigen), p.label, proof_to_sx(p.major),
                proof_to_sx(p.sub)] + via(("via", p.via))
    if isinstance(p, nd.TopI):
        return ["top-i", prop_to_sx(p.conclusion)] + via(("via", p.via))
    if isinstance(p, nd.BotE):
        return ["bot-e", prop_to_sx(p.conclusion), proof_to_sx(p.sub)] + via(("via", p.via))
    if isinstance(p, nd.Tnd):
        return ["tnd", prop_to_sx(p.conclusion), prop_to_sx(p.disjunct)] + via(("via", p.via))
    if isinstance(p, nd.IndI):
        return ["ind-i", prop_to_sx(p.conclusion), term_to_sx(p.cls), term_to_sx(p.term),
                show_var(p.eigen), p.label, proof_to_sx(p.base), proof_to_sx(p.step)]
    raise FormatError(f"cannot serialize {p!r}")


def proof_from_sx(sx: Sx, sig: Signature) -> nd.Proof:
    if not isinstance(sx, list) or not sx:
        raise FormatError(f"bad proof node {show(sx)}")
    head, *rest = sx

    def vias(tail: Sequence[Sx]) -> dict[str, Trace]:
        out = {}
        for form in tail:
            if isinstance(form, list) and form and form[0] in ("via", "via2"):
                out[form[0]] = trace_from_sx(["trace"] + form[1:], sig)
            else:
                raise FormatError(f"unexpected trailing form {show(form)}")
        return out

    P = lambda k: prop_from_sx(rest[k], sig)
    T = lambda k: term_from_sx(rest[k], sig)
    V = lambda k: parse_var(rest[k])
    sub = lambda k: proof_from_sx(rest[k], sig)

    if head == "hyp":
        return nd.Hyp(rest[0], P(1))
    if head == "assume":
        return nd.Assume(rest[0], P(1))
    if head == "imp-i":
        w = vias(rest[4:])
        return nd.ImpI(P(0), P(1), rest[2], sub(3), via=w.get("via"))
    if head == "imp-e":
        w = vias(rest[3:])
        return nd.ImpE(P(0), sub(1), sub(2), via=w.get("via"))
    if head == "and-i":
        w = vias(rest[3:])
        return nd.AndI(P(0), sub(1), sub(2), via=w.get("via"))
    if head == "and-e":
        w = vias(rest[4:])
        return nd.AndE(P(0), other=P(2), side=rest[1], sub=sub(3), via=w.get("via"))
    if head == "or-i":
        w = vias(rest[4:])
        return nd.OrI(P(0), other=P(2), side=rest[1], sub=sub(3), via=w.get("via"))
    if head == "or-e":
        w = vias(rest[8:])
        return nd.OrE(P(0), P(1), P(2), rest[3], rest[4], sub(5), sub(6), sub(7), via=w.get("via"))
    if head == "forall-i":
        w = vias(rest[5:])
        return nd.ForallI(P(0), V(1), P(2), V(3), sub(4), via=w.get("via"))
    if head == "forall-e":
        w = vias(rest[5:])
        return nd.ForallE(P(0), V(1), P(2), T(3), sub(4), via=w.get("via"), via2=w.get("via2"))
    if head == "exists-i":
        w = vias(rest[5:])
        return nd.ExistsI(P(0), V(1), P(2), T(3), sub(4), via=w.get("via"), via2=w.get("via2"))
    if head == "exists-e":
        w = vias(rest[7:])
        return nd.ExistsE(P(0), V(1), P(2), V(3), rest[4], sub(5), sub(6), via=w.get("via"))
    if head == "top-i":
        w = vias(rest[1:])
        return nd.TopI(P(0), via=w.get("via"))
    if head == "bot-e":
        w = vias(rest[2:])
        return nd.BotE(P(0), sub(1), via=w.get("via"))
    if head == "tnd":
        w = vias(rest[2:])
        return nd.Tnd(P(0), P(1), via=w.get("via"))
    if head == "ind-i":
        return nd.IndI(P(0), T(1), T(2), V(3), rest[4], sub(5), sub(6))
    raise FormatError(f"unknown proof node {head!r}")


def nd_proof_document(p: nd.Proof) -> Sx:
    return ["nd-proof", proof_to_sx(p)]


def nd_proof_from_document(sx: Sx, sig: Signature) -> nd.Proof:
    if not (isinstance(sx, list) and sx and sx[0] == "nd-proof"):
        raise FormatError("expected (nd-proof ...)")
    return proof_from_sx(sx[1], sig)


# ---------------------------------------------------------------------------
# Schema instances and schematic proofs


def template_to_sx(t: Template) -> Sx:
    return ["template", [show_var(v) for v in t.params], prop_to_sx(t.body)]


def template_from_sx(sx: Sx, sig: Signature) -> Template:
    if not (isinstance(sx, list) and sx and sx[0] == "template"):
        raise FormatError("expected (template ...)")
    return Template(tuple(parse_var(v) for v in sx[1]), prop_from_sx(sx[2], sig))


def instance_to_sx(inst: SchemaInstance) -> Sx:
    out: list[Sx] = ["schema", inst.schema]
    for name, t in inst.templates:
        out.append(["prop", name, template_to_sx(t)])
    for name, t in inst.terms:
        out.append(["term", name, term_to_sx(t)])
    for name, v in inst.metavars:
        out.append(["var", name, show_var(v)])
    return out


def instance_from_sx(sx: Sx, sig: Signature) -> SchemaInstance:
    if not (isinstance(sx, list) and sx and sx[0] == "schema"):
        raise FormatError("expected (schema ...)")
    templates, terms, metavars = [], [], []
    for form in sx[2:]:
        kind, name, payload = form
        if kind == "prop":
            templates.append((name, template_from_sx(payload, sig)))
        elif kind == "term":
            terms.append((name, term_from_sx(payload, sig)))
        elif kind == "var":
            metavars.append((name, parse_var(payload)))
        else:
            raise FormatError(f"unknown instance entry {kind!r}")
    return SchemaInstance(sx[1], tuple(templates), tuple(terms), tuple(metavars))


def hilbert_to_sx(proof: HilbertProof) -> Sx:
    out: list[Sx] = ["hilbert-proof"]
    for num, line in enumerate(proof.lines, start=1):
        j = line.just
        if isinstance(j, SchemaLine):
            just: Sx = instance_to_sx(j.instance)
        elif isinstance(j, MpLine):
            just = ["mp", str(j.minor), str(j.major)]
        elif isinstance(j, GenLine):
            just = ["gen", str(j.ref), show_var(j.eigen)]
        elif isinstance(j, PartLine):
            just = ["part", str(j.ref), show_var(j.eigen)]
        elif isinstance(j, HypLine):
            just = ["hyp", j.label]
        else:
            raise FormatError(f"cannot serialize justification {j!r}")
        out.append(["line", str(num), just, prop_to_sx(line.prop)])
    return out


def hilbert_from_sx(sx: Sx, sig: Signature) -> HilbertProof:
    if not (isinstance(sx, list) and sx and sx[0] == "hilbert-proof"):
        raise FormatError("expected (hilbert-proof ...)")
    lines = []
    for expected, form in enumerate(sx[1:], start=1):
        _, num, just_sx, prop_sx = form
        if int(num) != expected:
            raise FormatError(f"line numbered {num}, expected {expected}")
        head = just_sx[0]
        if head == "schema":
            just: object = SchemaLine(instance_from_sx(just_sx, sig))
        elif head == "mp":
            just = MpLine(int(just_sx[1]), int(just_sx[2]))
        elif head == "gen":
            just = GenLine(int(just_sx[1]), parse_var(just_sx[2]))
        elif head == "part":
            just = PartLine(int(just_sx[1]), parse_var(just_sx[2]))
        elif head == "hyp":
            just = HypLine(just_sx[1])
        else:
            raise FormatError(f"unknown justification {head!r}")
        lines.append(Line(just, prop_from_sx(prop_sx, sig)))
    return HilbertProof(tuple(lines))


# ---------------------------------------------------------------------------
# Whole documents


def dumps(sx: Sx) -> str:
    return show_pretty(sx) + "\n"


def loads(text: str) -> Sx:
    return parse(text)
