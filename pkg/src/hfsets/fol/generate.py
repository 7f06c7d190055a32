"""Seeded generators for random well-scoped formulas and literals."""

from __future__ import annotations

import random

from .. import mset
from .syntax import (
    BOT,
    TOP,
    And,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Mem,
    Or,
    Pred,
    Var,
)

_NAMES = ["x", "y", "z", "u", "v", "w"]


def random_formula(
    rng: random.Random,
    depth: int,
    scope: tuple[str, ...] = (),
    constants: tuple[int, ...] = (),
    predicates: dict[str, int] | None = None,
) -> Formula:
    """A formula of connective depth <= ``depth`` whose free variables lie in ``scope``."""
    terms = [Var(v) for v in scope] + [Const(c) for c in constants]
    leaves = ["bot", "top"] + (["mem", "eq"] if terms else [])
    if terms and predicates:
        leaves.append("pred")
    if depth <= 0 or (scope and rng.random() < 0.15):
        kind = rng.choice(leaves)
        if kind == "bot":
            return BOT
        if kind == "top":
            return TOP
        if kind == "pred":
            name = rng.choice(sorted(predicates))
            return Pred(name, tuple(rng.choice(terms) for _ in range(predicates[name])))
        a, b = rng.choice(terms), rng.choice(terms)
        return Mem(a, b) if kind == "mem" else Eq(a, b)
    kind = rng.choice(["and", "or", "imp", "forall", "exists"])
    if kind in ("forall", "exists"):
        var = rng.choice(_NAMES)
        body = random_formula(rng, depth - 1, tuple(dict.fromkeys(scope + (var,))), constants, predicates)
        return (Forall if kind == "forall" else Exists)(var, body)
    left = random_formula(rng, depth - 1, scope, constants, predicates)
    right = random_formula(rng, depth - 1, scope, constants, predicates)
    return {"and": And, "or": Or, "imp": Imp}[kind](left, right)


def random_mset(rng: random.Random, rank: int, width: int) -> int:
    """A random multiset of rank <= ``rank`` whose nodes have <= ``width`` occurrences."""
    if rank <= 0:
        return mset.EMPTY
    return mset.mk_sup(random_mset(rng, rank - 1, width) for _ in range(rng.randint(0, width)))
