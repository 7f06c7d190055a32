"""Formula AST, parser and printer for the language of membership and equality.

Grammar (ASCII)::

    formula := ('forall' | 'exists') NAME ['in' term] '.' formula
             | iff
    iff     := imp ['<->' imp]
    imp     := or ['->' imp]
    or      := and ('\\/' and)*
    and     := unary ('/\\' unary)*
    unary   := '~' unary | atom
    atom    := 'bot' | 'top' | '(' formula ')' | NAME '(' term, ... ')'
             | term 'in' term | term '=' term | quantified formula
    term    := NAME | brace literal such as {{},{}}

``~p`` abbreviates ``p -> bot``, ``p <-> q`` abbreviates
``(p -> q) /\\ (q -> p)``, ``exists y in x. p`` abbreviates
``exists y. y in x /\\ p`` and ``forall y in x. p`` abbreviates
``forall y. y in x -> p``.  Quantifier bodies extend as far right as possible.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union

from .. import mset
from ..errors import HFSetsError, LiteralError


class FormulaSyntaxError(HFSetsError):
    def __init__(self, message, column):
        self.column = column
        super().__init__(f"{message} at column {column}")


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    """A fixed multiset, written as a brace literal."""

    id: int

    def __str__(self):
        return mset.to_literal(self.id)


Term = Union[Var, Const]


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Mem:
    left: Term
    right: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula


Formula = Union[Bot, Top, Mem, Eq, Pred, And, Or, Imp, Forall, Exists]
BOT, TOP = Bot(), Top()


def Not(p: Formula) -> Formula:
    return Imp(p, BOT)


def Iff(p: Formula, q: Formula) -> Formula:
    return And(Imp(p, q), Imp(q, p))


# -- tokenizer -----------------------------------------------------------------

KEYWORDS = {"forall", "exists", "in", "bot", "top"}
_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op><->|->|/\\|\\/|[~().,=])"
)


@dataclass
class _Tok:
    kind: str  # name | kw | op | lit | eof
    text: str
    col: int
    value: object = None


def _literal_end(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return i + 1
    raise FormulaSyntaxError("unterminated set literal", len(text) + 1)


def tokenize(text: str) -> list[_Tok]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos] == "{":
            end = _literal_end(text, pos)
            try:
                value = mset.parse_literal(text[pos:end])
            except LiteralError as e:
                raise FormulaSyntaxError(str(e).rsplit(" at column", 1)[0], pos + e.column) from None
            toks.append(_Tok("lit", text[pos:end], pos + 1, value))
            pos = end
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup == "name":
            kind = "kw" if m.group() in KEYWORDS else "name"
            toks.append(_Tok(kind, m.group(), pos + 1))
        elif m.lastgroup == "op":
            toks.append(_Tok("op", m.group(), pos + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text):
        return self.tok.text == text and self.tok.kind in ("op", "kw")

    def expect(self, text):
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.next()

    def fail(self, message):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise FormulaSyntaxError(f"{message}, found {found}", t.col)

    def formula(self):
        if self.at("forall") or self.at("exists"):
            return self.quantified()
        left = self.imp()
        if self.at("<->"):
            self.next()
            return Iff(left, self.imp())
        return left

    def quantified(self):
        q = self.next().text
        if self.tok.kind != "name":
            self.fail("expected a variable name")
        var = self.next().text
        bound = None
        if self.at("in"):
            self.next()
            bound = self.term()
        self.expect(".")
        body = self.formula()
        if q == "forall":
            return Forall(var, body if bound is None else Imp(Mem(Var(var), bound), body))
        return Exists(var, body if bound is None else And(Mem(Var(var), bound), body))

    def imp(self):
        left = self.disj()
        if self.at("->"):
            self.next()
            return Imp(left, self.imp())
        return left

    def disj(self):
        left = self.conj()
        while self.at("\\/"):
            self.next()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.at("/\\"):
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.at("~"):
            self.next()
            return Not(self.unary())
        return self.atom()

    def atom(self):
        t = self.tok
        if self.at("forall") or self.at("exists"):
            return self.quantified()
        if self.at("bot"):
            self.next()
            return BOT
        if self.at("top"):
            self.next()
            return TOP
        if self.at("("):
            self.next()
            inner = self.formula()
            self.expect(")")
            return inner
        if t.kind == "name" and self.toks[self.i + 1].text == "(":
            name = self.next().text
            self.next()
            args = [self.term()]
            while self.at(","):
                self.next()
                args.append(self.term())
            self.expect(")")
            return Pred(name, tuple(args))
        left = self.term()
        if self.at("in"):
            self.next()
            return Mem(left, self.term())
        if self.at("="):
            self.next()
            return Eq(left, self.term())
        self.fail("expected 'in' or '='")

    def term(self):
        t = self.tok
        if t.kind == "name":
            self.next()
            return Var(t.text)
        if t.kind == "lit":
            self.next()
            return Const(t.value)
        self.fail("expected a variable or set literal")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    phi = p.formula()
    if p.tok.kind != "eof":
        p.fail("unexpected trailing input")
    return phi


# -- printer -------------------------------------------------------------------

_QUANT, _IMP, _OR, _AND, _ATOM = range(5)


def _level(phi) -> int:
    if isinstance(phi, (Forall, Exists)):
        return _QUANT
    if isinstance(phi, Imp):
        return _ATOM if phi.right == BOT else _IMP
    if isinstance(phi, Or):
        return _OR
    if isinstance(phi, And):
        return _AND
    return _ATOM


def _bounded(phi):
    """Recognise ``exists y. y in t /\\ p`` / ``forall y. y in t -> p``."""
    inner = phi.body
    kind = And if isinstance(phi, Exists) else Imp
    if (
        isinstance(inner, kind)
        and isinstance(inner.left, Mem)
        and inner.left.left == Var(phi.var)
        and inner.left.right != Var(phi.var)
        and not (kind is Imp and inner.right == BOT)
    ):
        return inner.left.right, inner.right
    return None


def to_text(phi: Formula, level: int = _QUANT) -> str:
    s = _show(phi)
    return f"({s})" if _level(phi) < level else s


def _show(phi) -> str:
    if isinstance(phi, Bot):
        return "bot"
    if isinstance(phi, Top):
        return "top"
    if isinstance(phi, Mem):
        return f"{phi.left} in {phi.right}"
    if isinstance(phi, Eq):
        return f"{phi.left} = {phi.right}"
    if isinstance(phi, Pred):
        return f"{phi.name}({', '.join(map(str, phi.args))})"
    if isinstance(phi, Imp):
        if phi.right == BOT:
            return "~" + to_text(phi.left, _ATOM)
        return f"{to_text(phi.left, _OR)} -> {to_text(phi.right, _IMP)}"
    if isinstance(phi, Or):
        return f"{to_text(phi.left, _OR)} \\/ {to_text(phi.right, _AND)}"
    if isinstance(phi, And):
        return f"{to_text(phi.left, _AND)} /\\ {to_text(phi.right, _ATOM)}"
    q = "forall" if isinstance(phi, Forall) else "exists"
    b = _bounded(phi)
    if b is not None:
        return f"{q} {phi.var} in {b[0]}. {to_text(b[1])}"
    return f"{q} {phi.var}. {to_text(phi.body)}"


# -- structural helpers ----------------------------------------------------------

def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, (And, Or, Imp)):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, (Forall, Exists)):
        yield from subformulas(phi.body)


def _terms(phi) -> tuple:
    if isinstance(phi, (Mem, Eq)):
        return (phi.left, phi.right)
    if isinstance(phi, Pred):
        return phi.args
    return ()


def free_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, (And, Or, Imp)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, (Forall, Exists)):
        return free_vars(phi.body) - {phi.var}
    return frozenset(t.name for t in _terms(phi) if isinstance(t, Var))


def predicate_arities(phi: Formula) -> dict[str, int]:
    """Arity of every predicate symbol; raises if one symbol is used at two arities."""
    seen: dict[str, int] = {}
    for sub in subformulas(phi):
        if isinstance(sub, Pred):
            if seen.setdefault(sub.name, len(sub.args)) != len(sub.args):
                raise ValueError(f"predicate {sub.name} used with arities {seen[sub.name]} and {len(sub.args)}")
    return seen


def depth(phi: Formula) -> int:
    if isinstance(phi, (And, Or, Imp)):
        return 1 + max(depth(phi.left), depth(phi.right))
    if isinstance(phi, (Forall, Exists)):
        return 1 + depth(phi.body)
    return 0


def substitute(phi: Formula, name: str, term: Term) -> Formula:
    """Replace free occurrences of variable ``name`` by ``term``.

    Only closed terms (constants) or variables not bound in ``phi`` should be
    substituted; binders shadowing ``name`` stop the replacement.
    """
    def t(x):
        return term if x == Var(name) else x

    if isinstance(phi, Mem):
        return Mem(t(phi.left), t(phi.right))
    if isinstance(phi, Eq):
        return Eq(t(phi.left), t(phi.right))
    if isinstance(phi, Pred):
        return Pred(phi.name, tuple(t(a) for a in phi.args))
    if isinstance(phi, (And, Or, Imp)):
        return type(phi)(substitute(phi.left, name, term), substitute(phi.right, name, term))
    if isinstance(phi, (Forall, Exists)):
        if phi.var == name:
            return phi
        return type(phi)(phi.var, substitute(phi.body, name, term))
    return phi
