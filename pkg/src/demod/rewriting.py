"""Term and proposition rewriting: matching, normalization, congruence.

A rewrite system carries capability flags.  ``congruent_auto`` (normalize and
compare) is only available when the system is declared terminating and
confluent; for systems without those guarantees a congruence can instead be
certified by an explicit trace of steps, replayed by ``verify_trace``.  A
system may also name a terminating subsystem (``auto_fallback``) used for
sound normalize-and-compare checks when the full system does not terminate.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Callable, Optional, Union

from .syntax import (
    App,
    Atom,
    Obj,
    Position,
    Proposition,
    Term,
    Var,
    alpha_equal,
    apply_substitution,
    children,
    free_variables,
    positions,
    replace_at,
    size,
    sort_of,
    subterm_at,
)


class RuleError(Exception):
    """A rewrite rule violates the rule format."""


class FuelExhausted(Exception):
    """Normalization ran out of fuel; the system may not terminate here."""

    def __init__(self, message: str, steps_taken: int = 0):
        super().__init__(message)
        self.steps_taken = steps_taken


class CongruenceError(Exception):
    """Preconditions for an automatic congruence check are not met."""


Lhs = Union[Term, Atom]


@dataclass(frozen=True)
class Rule:
    name: str
    lhs: Lhs
    rhs: Obj

    def __post_init__(self) -> None:
        if isinstance(self.lhs, Var):
            raise RuleError(f"{self.name}: left side must not be a bare variable")
        if isinstance(self.lhs, Atom):
            if not isinstance(self.rhs, Proposition):
                raise RuleError(f"{self.name}: proposition rule needs a proposition right side")
        elif isinstance(self.lhs, App):
            if not isinstance(self.rhs, (Var, App)):
                raise RuleError(f"{self.name}: term rule needs a term right side")
            if sort_of(self.lhs) != sort_of(self.rhs):
                raise RuleError(f"{self.name}: left and right sides have different sorts")
        else:
            raise RuleError(f"{self.name}: left side must be a term or an atom")
        extra = free_variables(self.rhs) - free_variables(self.lhs)
        if extra:
            raise RuleError(f"{self.name}: right side has extra variables {extra}")

    @property
    def is_term_rule(self) -> bool:
        return not isinstance(self.lhs, Atom)


@dataclass(frozen=True)
class RewriteSystem:
    name: str
    rules: tuple[Rule, ...]
    terminating: bool = False
    confluent: bool = False
    fuel_coeff: int = 200
    fuel_degree: int = 2
    auto_fallback: Optional["RewriteSystem"] = None

    def __post_init__(self) -> None:
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            raise RuleError(f"{self.name}: duplicate rule names")

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(f"{self.name} has no rule {name!r}")

    @cached_property
    def _by_head(self) -> dict[str, tuple[Rule, ...]]:
        index: dict[str, list[Rule]] = {}
        for r in self.rules:
            key = f"@{r.lhs.pred}" if isinstance(r.lhs, Atom) else r.lhs.fn
            index.setdefault(key, []).append(r)
        return {k: tuple(v) for k, v in index.items()}

    def candidates(self, subject: Obj) -> tuple[Rule, ...]:
        """Rules whose left side could match at the root of the subject."""
        if isinstance(subject, App):
            return self._by_head.get(subject.fn, ())
        if isinstance(subject, Atom):
            return self._by_head.get(f"@{subject.pred}", ())
        return ()

    def default_fuel(self, x: Obj) -> int:
        return self.fuel_coeff * size(x) ** self.fuel_degree

    def without(self, *names: str) -> "RewriteSystem":
        keep = tuple(r for r in self.rules if r.name not in set(names))
        return replace(self, rules=keep, auto_fallback=None)

    def congruence_system(self) -> "RewriteSystem":
        """The system used for normalize-and-compare congruence checks."""
        if self.terminating:
            return self
        if self.auto_fallback is not None and self.auto_fallback.terminating:
            return self.auto_fallback
        raise CongruenceError(
            f"{self.name} is not declared terminating and has no terminating subsystem"
        )


@dataclass(frozen=True)
class RewriteStep:
    position: Position
    rule: str
    subst: tuple[tuple[Var, Term], ...]
    forward: bool = True

    def substitution(self) -> dict[Var, Term]:
        return dict(self.subst)


@dataclass(frozen=True)
class Trace:
    start: Obj
    end: Obj
    steps: tuple[RewriteStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def reversed(self) -> "Trace":
        flipped = tuple(
            RewriteStep(s.position, s.rule, s.subst, not s.forward) for s in reversed(self.steps)
        )
        return Trace(self.end, self.start, flipped)

    def then(self, other: "Trace") -> "Trace":
        if not alpha_equal(self.end, other.start):
            raise RuleError("traces do not compose")
        return Trace(self.start, other.end, self.steps + other.steps)


def match(pattern: Obj, subject: Obj) -> Optional[dict[Var, Term]]:
    """First-order matching; repeated pattern variables need equal images."""
    bind: dict[Var, Term] = {}

    def go(p: Obj, s: Obj) -> bool:
        if isinstance(p, Var):
            if not isinstance(s, (Var, App)) or sort_of(s) != p.sort:
                return False
            seen = bind.get(p)
            if seen is None:
                bind[p] = s
                return True
            return seen == s
        if isinstance(p, App):
            return (
                isinstance(s, App)
                and p.fn == s.fn
                and len(p.args) == len(s.args)
                and all(go(a, b) for a, b in zip(p.args, s.args))
            )
        if isinstance(p, Atom):
            return (
                isinstance(s, Atom)
                and p.pred == s.pred
                and len(p.args) == len(s.args)
                and all(go(a, b) for a, b in zip(p.args, s.args))
            )
        return False

    return bind if go(pattern, subject) else None


Redex = tuple[Position, Rule, dict[Var, Term]]


def rewrite_redexes(x: Obj, system: RewriteSystem) -> list[Redex]:
    """All redexes, leftmost-outermost first; rule order breaks ties."""
    out: list[Redex] = []
    for pos, sub in positions(x):
        for rule in system.candidates(sub):
            sigma = match(rule.lhs, sub)
            if sigma is not None:
                out.append((pos, rule, sigma))
    return out


def first_redex(x: Obj, system: RewriteSystem) -> Optional[Redex]:
    for pos, sub in positions(x):
        for rule in system.candidates(sub):
            sigma = match(rule.lhs, sub)
            if sigma is not None:
                return (pos, rule, sigma)
    return None


def apply_redex(x: Obj, redex: Redex) -> Obj:
    pos, rule, sigma = redex
    # binders introduced by the right side must not catch substituted variables
    image = apply_substitution(rule.rhs, sigma)
    return replace_at(x, image, pos)


Strategy = Callable[[list[Redex]], Redex]


def leftmost_outermost(redexes: list[Redex]) -> Redex:
    return redexes[0]


def leftmost_innermost(redexes: list[Redex]) -> Redex:
    # negating indices makes "deeper along the leftmost spine" compare greater
    return max(redexes, key=lambda r: tuple(-i for i in r[0]))


def random_strategy(seed: int) -> Strategy:
    rng = _random.Random(seed)
    return lambda redexes: rng.choice(redexes)


def normalize(
    x: Obj,
    system: RewriteSystem,
    fuel: Optional[int] = None,
    strategy: Optional[Strategy] = None,
) -> tuple[Obj, Trace]:
    """Rewrite to normal form; raises FuelExhausted before looping forever."""
    if fuel is None:
        fuel = system.default_fuel(x)
    if fuel <= 0:
        raise FuelExhausted("normalize needs positive fuel")
    steps: list[RewriteStep] = []
    cur = x
    while True:
        if strategy is None:
            redex = first_redex(cur, system)
        else:
            candidates = rewrite_redexes(cur, system)
            redex = strategy(candidates) if candidates else None
        if redex is None:
            return cur, Trace(x, cur, tuple(steps))
        if len(steps) >= fuel:
            raise FuelExhausted(
                f"no normal form within {fuel} steps under {system.name}", len(steps)
            )
        pos, rule, sigma = redex
        cur = apply_redex(cur, redex)
        steps.append(RewriteStep(pos, rule.name, tuple(sorted(sigma.items(), key=str))))


def congruent_auto(p: Obj, q: Obj, system: RewriteSystem, fuel: Optional[int] = None) -> bool:
    """Decide p <->* q by joint normalization; needs both capability flags."""
    if not (system.terminating and system.confluent):
        raise CongruenceError(
            f"congruent_auto needs a terminating and confluent system, got {system.name}"
        )
    if alpha_equal(p, q):
        return True
    np, _ = normalize(p, system, fuel)
    nq, _ = normalize(q, system, fuel)
    return alpha_equal(np, nq)


def congruent(
    p: Obj,
    q: Obj,
    system: RewriteSystem,
    fuel: Optional[int] = None,
    counter: Optional[list[int]] = None,
) -> bool:
    """Sound congruence check: joint normalization under the congruence system.

    A positive answer always certifies p <->* q (the two normalization traces
    are rewrite derivations); a negative answer is only conclusive when the
    system used is confluent.
    """
    if alpha_equal(p, q):
        return True
    sub = system.congruence_system()
    np, tp = normalize(p, sub, fuel)
    nq, tq = normalize(q, sub, fuel)
    if counter is not None:
        counter[0] += len(tp) + len(tq)
    return alpha_equal(np, nq)


def connecting_trace(p: Obj, q: Obj, system: RewriteSystem, fuel: Optional[int] = None) -> Trace:
    """Build a trace certifying p <->* q via their common normal form."""
    if alpha_equal(p, q):
        return Trace(p, q)
    sub = system.congruence_system()
    np, tp = normalize(p, sub, fuel)
    nq, tq = normalize(q, sub, fuel)
    if not alpha_equal(np, nq):
        raise CongruenceError(f"{p} and {q} have distinct normal forms")
    return Trace(p, q, tp.steps + tq.reversed().steps)


def verify_trace(p: Obj, q: Obj, trace: Trace, system: RewriteSystem) -> bool:
    """Replay a trace step by step; backward steps replay the inverse rewrite."""
    cur = p
    for step in trace.steps:
        try:
            rule = system.rule(step.rule)
        except KeyError:
            return False
        sigma = step.substitution()
        try:
            sub = subterm_at(cur, step.position)
        except Exception:
            return False
        if step.forward:
            expected = apply_substitution(rule.lhs, sigma)
            if sub != expected:
                return False
            cur = replace_at(cur, apply_substitution(rule.rhs, sigma), step.position)
        else:
            image = apply_substitution(rule.rhs, sigma)
            if not alpha_equal(sub, image):
                return False
            cur = replace_at(cur, apply_substitution(rule.lhs, sigma), step.position)
    return alpha_equal(cur, q)


# ---------------------------------------------------------------------------
# Critical pairs


def unify(a: Obj, b: Obj) -> Optional[dict[Var, Term]]:
    """Syntactic sort-respecting unification of binder-free objects."""
    sub: dict[Var, Term] = {}

    def resolve(t: Obj) -> Obj:
        while isinstance(t, Var) and t in sub:
            t = sub[t]
        return t

    def occurs(v: Var, t: Obj) -> bool:
        t = resolve(t)
        if t == v:
            return True
        return any(occurs(v, c) for c in children(t))

    def go(s: Obj, t: Obj) -> bool:
        s, t = resolve(s), resolve(t)
        if s == t:
            return True
        if isinstance(s, Var):
            if isinstance(t, Proposition) or sort_of(t) != s.sort or occurs(s, t):
                return False
            sub[s] = t
            return True
        if isinstance(t, Var):
            return go(t, s)
        if isinstance(s, App) and isinstance(t, App):
            if s.fn != t.fn or len(s.args) != len(t.args):
                return False
            return all(go(a, b) for a, b in zip(s.args, t.args))
        if isinstance(s, Atom) and isinstance(t, Atom):
            if s.pred != t.pred or len(s.args) != len(t.args):
                return False
            return all(go(a, b) for a, b in zip(s.args, t.args))
        return False

    if not go(a, b):
        return None
    # fully apply bindings
    out: dict[Var, Term] = {}
    for v in sub:
        t = v
        while isinstance(t, Var) and t in sub:
            t = sub[t]
        out[v] = apply_substitution(t, sub) if isinstance(t, App) else t
    changed = True
    while changed:
        changed = False
        for v, t in out.items():
            t2 = apply_substitution(t, out)
            if t2 != t:
                out[v] = t2
                changed = True
    return out


@dataclass(frozen=True)
class CriticalPair:
    peak: Obj
    left: Obj
    right: Obj
    rules: tuple[str, str]
    position: Position


def _rename_apart(rule: Rule, taken: frozenset[Var]) -> Rule:
    ren: dict[Var, Term] = {}
    for v in sorted(free_variables(rule.lhs), key=str):
        if v in taken:
            name = v.name
            avoid = {w.name for w in taken} | {w.name for w in ren}
            while name in avoid:
                name += "_"
            ren[v] = Var(name, v.sort)
    if not ren:
        return rule
    return Rule(rule.name, apply_substitution(rule.lhs, ren), apply_substitution(rule.rhs, ren))


def critical_pairs(system: RewriteSystem) -> list[CriticalPair]:
    """All overlaps between left sides of renamed-apart rule pairs."""
    out: list[CriticalPair] = []
    for outer in system.rules:
        for inner_raw in system.rules:
            inner = _rename_apart(inner_raw, frozenset(free_variables(outer.lhs)))
            for pos, sub in positions(outer.lhs):
                if isinstance(sub, Var):
                    continue
                if pos == () and inner_raw.name >= outer.name:
                    continue  # self-overlap, or the mirror image of another root pair
                if isinstance(sub, Atom) != isinstance(inner.lhs, Atom):
                    continue
                sigma = unify(sub, inner.lhs)
                if sigma is None:
                    continue
                peak = apply_substitution(outer.lhs, sigma)
                left = replace_at(peak, apply_substitution(inner.rhs, sigma), pos)
                right = apply_substitution(outer.rhs, sigma)
                out.append(CriticalPair(peak, left, right, (inner_raw.name, outer.name), pos))
    return out


def joinable(pair: CriticalPair, system: RewriteSystem, fuel: Optional[int] = None) -> bool:
    nl, _ = normalize(pair.left, system, fuel)
    nr, _ = normalize(pair.right, system, fuel)
    return alpha_equal(nl, nr)


def check_left_linear(system: RewriteSystem) -> bool:
    for rule in system.rules:
        seen: set[Var] = set()
        for _, sub in positions(rule.lhs):
            if isinstance(sub, Var):
                if sub in seen:
                    return False
                seen.add(sub)
    return True


# ---------------------------------------------------------------------------
# Derivational-length probe


def longest_derivation(x: Obj, system: RewriteSystem, fuel: int = 100_000) -> int:
    """Exact maximal derivation length from x, by exhaustive memoized search."""
    memo: dict[Obj, int] = {}
    budget = [fuel]

    def go(t: Obj) -> int:
        got = memo.get(t)
        if got is not None:
            return got
        best = 0
        for redex in rewrite_redexes(t, system):
            budget[0] -= 1
            if budget[0] < 0:
                raise FuelExhausted("longest_derivation search budget exhausted")
            best = max(best, 1 + go(apply_redex(t, redex)))
        memo[t] = best
        return best

    return go(x)
