"""Many-sorted first-order syntax: sorts, signatures, terms, propositions.

Terms are variables or applications of declared function symbols; propositions
are built from atoms with the eight connective forms (falsum, verum, atom,
conjunction, disjunction, implication, universal, existential).  Equivalence
and negation are desugared eagerly (``P iff Q`` is ``(P > Q) & (Q > P)``,
``~P`` is ``P > false``).  Bound variables keep their display names; alpha
equivalence is a separate relation, substitution is capture avoiding, while
positional replacement is grafting and may capture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Union


class SortError(Exception):
    """A term or proposition violates the sort discipline."""


class PositionError(Exception):
    """A position does not resolve in the addressed object."""


# ---------------------------------------------------------------------------
# Sorts


@dataclass(frozen=True, order=True)
class Sort:
    kind: str  # "arith" | "list" | "class"
    level: int = 0

    def __str__(self) -> str:
        return str(self.level) if self.kind == "arith" else self.kind


def arith(level: int) -> Sort:
    if level < 0:
        raise SortError(f"negative arithmetic sort level {level}")
    return Sort("arith", level)


LIST = Sort("list")
CLASS = Sort("class")


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str
    sort: Sort

    def __str__(self) -> str:
        return f"{self.name}:{self.sort}"


@dataclass(frozen=True, eq=False)
class App:
    fn: str
    args: tuple["Term", ...]
    sort: Sort

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.fn, self.args, self.sort)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        return (
            self is other
            or isinstance(other, App)
            and self._hash == other._hash  # type: ignore[attr-defined]
            and self.fn == other.fn
            and self.sort == other.sort
            and self.args == other.args
        )

    def __str__(self) -> str:
        if not self.args:
            return self.fn
        return f"{self.fn}({', '.join(map(str, self.args))})"


Term = Union[Var, App]


# ---------------------------------------------------------------------------
# Propositions


class Proposition:
    __slots__ = ()


@dataclass(frozen=True)
class Falsum(Proposition):
    def __str__(self) -> str:
        return "false"


@dataclass(frozen=True)
class Verum(Proposition):
    def __str__(self) -> str:
        return "true"


FALSE = Falsum()
TRUE = Verum()


@dataclass(frozen=True, eq=False)
class Atom(Proposition):
    pred: str
    args: tuple[Term, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.pred, self.args)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        return (
            self is other
            or isinstance(other, Atom)
            and self._hash == other._hash  # type: ignore[attr-defined]
            and self.pred == other.pred
            and self.args == other.args
        )

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class And(Proposition):
    left: Proposition
    right: Proposition

    def __str__(self) -> str:
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class Or(Proposition):
    left: Proposition
    right: Proposition

    def __str__(self) -> str:
        return f"({self.left} | {self.right})"


@dataclass(frozen=True)
class Imp(Proposition):
    left: Proposition
    right: Proposition

    def __str__(self) -> str:
        return f"({self.left} > {self.right})"


@dataclass(frozen=True)
class Forall(Proposition):
    var: Var
    body: Proposition

    def __str__(self) -> str:
        return f"(all {self.var}. {self.body})"


@dataclass(frozen=True)
class Exists(Proposition):
    var: Var
    body: Proposition

    def __str__(self) -> str:
        return f"(ex {self.var}. {self.body})"


Obj = Union[Term, Proposition]


def neg(p: Proposition) -> Proposition:
    return Imp(p, FALSE)


def iff(p: Proposition, q: Proposition) -> Proposition:
    return And(Imp(p, q), Imp(q, p))


def forall(variables, body: Proposition) -> Proposition:
    """Close ``body`` under universal quantifiers, outermost first."""
    if isinstance(variables, Var):
        variables = (variables,)
    for v in reversed(tuple(variables)):
        body = Forall(v, body)
    return body


def exists(variables, body: Proposition) -> Proposition:
    if isinstance(variables, Var):
        variables = (variables,)
    for v in reversed(tuple(variables)):
        body = Exists(v, body)
    return body


# ---------------------------------------------------------------------------
# Signatures


@dataclass(frozen=True)
class FunDecl:
    name: str
    arg_sorts: tuple[Sort, ...]
    result: Sort


@dataclass(frozen=True)
class PredDecl:
    name: str
    arg_sorts: tuple[Sort, ...]


@dataclass(frozen=True)
class Signature:
    sorts: tuple[Sort, ...]
    fun_decls: tuple[FunDecl, ...]
    pred_decls: tuple[PredDecl, ...]

    def __post_init__(self) -> None:
        fn = [d.name for d in self.fun_decls]
        pn = [d.name for d in self.pred_decls]
        if len(set(fn)) != len(fn) or len(set(pn)) != len(pn):
            raise SortError("duplicate symbol declaration in signature")

    @cached_property
    def funs(self) -> Mapping[str, FunDecl]:
        return {d.name: d for d in self.fun_decls}

    @cached_property
    def preds(self) -> Mapping[str, PredDecl]:
        return {d.name: d for d in self.pred_decls}

    def app(self, name: str, *args: Term) -> App:
        decl = self.funs.get(name)
        if decl is None:
            raise SortError(f"unknown function symbol {name!r}")
        _check_args(name, decl.arg_sorts, args)
        return App(name, tuple(args), decl.result)

    def atom(self, name: str, *args: Term) -> Atom:
        decl = self.preds.get(name)
        if decl is None:
            raise SortError(f"unknown predicate symbol {name!r}")
        _check_args(name, decl.arg_sorts, args)
        return Atom(name, tuple(args))

    def extend(self, sorts=(), funs=(), preds=()) -> "Signature":
        new_sorts = self.sorts + tuple(s for s in sorts if s not in self.sorts)
        return Signature(new_sorts, self.fun_decls + tuple(funs), self.pred_decls + tuple(preds))

    def well_sorted(self, x: Obj) -> bool:
        try:
            self.check(x)
        except SortError:
            return False
        return True

    def check(self, x: Obj) -> None:
        """Raise SortError unless ``x`` is well-sorted under this signature."""
        if isinstance(x, Var):
            if x.sort not in self.sorts:
                raise SortError(f"variable {x} has undeclared sort")
        elif isinstance(x, App):
            decl = self.funs.get(x.fn)
            if decl is None:
                raise SortError(f"unknown function symbol {x.fn!r}")
            if decl.result != x.sort:
                raise SortError(f"{x.fn} declared {decl.result}, annotated {x.sort}")
            _check_args(x.fn, decl.arg_sorts, x.args)
            for a in x.args:
                self.check(a)
        elif isinstance(x, Atom):
            decl = self.preds.get(x.pred)
            if decl is None:
                raise SortError(f"unknown predicate symbol {x.pred!r}")
            _check_args(x.pred, decl.arg_sorts, x.args)
            for a in x.args:
                self.check(a)
        elif isinstance(x, (Falsum, Verum)):
            pass
        elif isinstance(x, (And, Or, Imp)):
            self.check(x.left)
            self.check(x.right)
        elif isinstance(x, (Forall, Exists)):
            self.check(x.var)
            self.check(x.body)
        else:
            raise SortError(f"not a term or proposition: {x!r}")


def _check_args(name: str, expected: tuple[Sort, ...], args: tuple[Term, ...]) -> None:
    if len(expected) != len(args):
        raise SortError(f"{name} expects {len(expected)} arguments, got {len(args)}")
    for want, got in zip(expected, args):
        if sort_of(got) != want:
            raise SortError(f"{name}: argument {got} has sort {sort_of(got)}, expected {want}")


def sort_of(t: Term) -> Sort:
    return t.sort


# ---------------------------------------------------------------------------
# Structure: size, children, positions

Position = tuple[int, ...]

ROOT: Position = ()


def children(x: Obj) -> tuple[Obj, ...]:
    """Immediate subobjects, addressed by 1-based child indices."""
    if isinstance(x, Var):
        return ()
    if isinstance(x, App):
        return x.args
    if isinstance(x, Atom):
        return x.args
    if isinstance(x, (And, Or, Imp)):
        return (x.left, x.right)
    if isinstance(x, (Forall, Exists)):
        return (x.body,)
    return ()


def _rebuild(x: Obj, parts: tuple[Obj, ...]) -> Obj:
    if isinstance(x, App):
        return App(x.fn, parts, x.sort)  # type: ignore[arg-type]
    if isinstance(x, Atom):
        return Atom(x.pred, parts)  # type: ignore[arg-type]
    if isinstance(x, (And, Or, Imp)):
        return type(x)(*parts)  # type: ignore[arg-type]
    if isinstance(x, (Forall, Exists)):
        return type(x)(x.var, parts[0])  # type: ignore[arg-type]
    raise PositionError(f"{x} has no children")


def size(x: Obj) -> int:
    return 1 + sum(size(c) for c in children(x))


def positions(x: Obj) -> Iterator[tuple[Position, Obj]]:
    """All positions, leftmost-outermost first (lexicographic pre-order)."""
    stack: list[tuple[Position, Obj]] = [(ROOT, x)]
    while stack:
        pos, obj = stack.pop()
        yield pos, obj
        subs = children(obj)
        for idx in range(len(subs), 0, -1):
            stack.append((pos + (idx,), subs[idx - 1]))


def subterm_at(x: Obj, pos: Position) -> Obj:
    cur = x
    for idx in pos:
        subs = children(cur)
        if not 1 <= idx <= len(subs):
            raise PositionError(f"position {pos} invalid in {x}")
        cur = subs[idx - 1]
    return cur


def replace_at(x: Obj, s: Obj, pos: Position) -> Obj:
    """Graft ``s`` at ``pos`` without renaming; capture is permitted."""
    spine: list[tuple[Obj, tuple[Obj, ...], int]] = []
    cur = x
    for idx in pos:
        subs = children(cur)
        if not 1 <= idx <= len(subs):
            raise PositionError(f"position {pos} invalid in {x}")
        spine.append((cur, subs, idx))
        cur = subs[idx - 1]
    new = s
    for node, subs, idx in reversed(spine):
        new = _rebuild(node, subs[: idx - 1] + (new,) + subs[idx:])
    return new


# ---------------------------------------------------------------------------
# Free variables, substitution, alpha equivalence


def free_variables(x: Obj) -> frozenset[Var]:
    if isinstance(x, Var):
        return frozenset((x,))
    if isinstance(x, (Forall, Exists)):
        return free_variables(x.body) - {x.var}
    out: frozenset[Var] = frozenset()
    for c in children(x):
        out |= free_variables(c)
    return out


def fresh_name(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


Substitution = Mapping[Var, Term]


def _subst_term(t: Term, sub: Substitution) -> Term:
    if isinstance(t, Var):
        img = sub.get(t, t)
        if sort_of(img) != t.sort:
            raise SortError(f"substitution maps {t} to {img} of sort {sort_of(img)}")
        return img
    args = tuple(_subst_term(a, sub) for a in t.args)
    if all(a is b for a, b in zip(args, t.args)):
        return t
    return App(t.fn, args, t.sort)


def apply_substitution(x: Obj, sub: Substitution) -> Obj:
    """Apply ``sub`` to free occurrences only, renaming binders to avoid capture."""
    if not sub:
        return x
    if isinstance(x, (Var, App)):
        return _subst_term(x, sub)
    if isinstance(x, Atom):
        args = tuple(_subst_term(a, sub) for a in x.args)
        if all(a is b for a, b in zip(args, x.args)):
            return x
        return Atom(x.pred, args)
    if isinstance(x, (Falsum, Verum)):
        return x
    if isinstance(x, (And, Or, Imp)):
        left = apply_substitution(x.left, sub)
        right = apply_substitution(x.right, sub)
        if left is x.left and right is x.right:
            return x
        return type(x)(left, right)
    if isinstance(x, (Forall, Exists)):
        live = {v: t for v, t in sub.items() if v != x.var}
        live = {v: t for v, t in live.items() if v in free_variables(x.body)}
        if not live:
            return x
        clash = set()
        for t in live.values():
            clash |= {w.name for w in free_variables(t)}
        binder = x.var
        body = x.body
        if binder.name in clash:
            taken = clash | {w.name for w in free_variables(body)} | {v.name for v in live}
            binder = Var(fresh_name(x.var.name, taken), x.var.sort)
            body = apply_substitution(body, {x.var: binder})
        return type(x)(binder, apply_substitution(body, live))
    raise SortError(f"not a term or proposition: {x!r}")


def subst1(x: Obj, v: Var, t: Term) -> Obj:
    return apply_substitution(x, {v: t})


def alpha_equal(p: Obj, q: Obj) -> bool:
    """Equality modulo renaming of bound variables."""
    return _alpha(p, q, {}, {}, 0)


def _alpha(p: Obj, q: Obj, lenv: dict[Var, int], renv: dict[Var, int], depth: int) -> bool:
    if not lenv and not renv and p == q:
        return True  # syntactic equality implies alpha equality
    if type(p) is not type(q):
        return False
    if isinstance(p, Var):
        li, ri = lenv.get(p), renv.get(q)
        if li is None and ri is None:
            return p == q
        return li == ri and p.sort == q.sort
    if isinstance(p, App):
        return (
            p.fn == q.fn
            and len(p.args) == len(q.args)
            and all(_alpha(a, b, lenv, renv, depth) for a, b in zip(p.args, q.args))
        )
    if isinstance(p, Atom):
        return (
            p.pred == q.pred
            and len(p.args) == len(q.args)
            and all(_alpha(a, b, lenv, renv, depth) for a, b in zip(p.args, q.args))
        )
    if isinstance(p, (Falsum, Verum)):
        return True
    if isinstance(p, (And, Or, Imp)):
        return _alpha(p.left, q.left, lenv, renv, depth) and _alpha(p.right, q.right, lenv, renv, depth)
    if isinstance(p, (Forall, Exists)):
        if p.var.sort != q.var.sort:
            return False
        lenv2 = dict(lenv)
        renv2 = dict(renv)
        lenv2[p.var] = depth
        renv2[q.var] = depth
        return _alpha(p.body, q.body, lenv2, renv2, depth + 1)
    return False


def freely_substitutable(t: Term, x: Var, p: Proposition) -> bool:
    """True iff no free occurrence of ``x`` in ``p`` is under a binder catching a variable of ``t``."""
    tvars = free_variables(t)

    def walk(q: Obj) -> bool:
        if isinstance(q, (Forall, Exists)):
            if q.var == x:
                return True  # x no longer free below
            if q.var in tvars and x in free_variables(q.body):
                return False
            return walk(q.body)
        return all(walk(c) for c in children(q))

    return walk(p)
