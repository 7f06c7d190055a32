"""Brute-force enumeration of proof objects for the untruncated reading.

This is a reference oracle: it materialises every inhabitant instead of
counting, so ``len(proofs(...))`` can be compared with ``sigma_count``.  It
does not share code with the counting evaluator.  Membership proofs are
positions in the expanded child list, equality proofs are ``"refl"``, and an
implication proof is a lookup table from antecedent proofs to consequent
proofs.
"""

from __future__ import annotations

from itertools import product

from .. import mset
from ..errors import ResourceError
from .syntax import And, Bot, Const, Eq, Exists, Imp, Mem, Or, Pred, Top


def proofs(phi, val, carrier, predicates=None, cap=200_000) -> list:
    """All proof objects of ``phi``; raises ResourceError past ``cap`` objects."""
    dom = list(carrier)

    def term(t, env):
        return t.id if isinstance(t, Const) else env[t.name]

    def guard(items):
        if len(items) > cap:
            raise ResourceError("proof space too large to enumerate")
        return items

    def size_guard(n):
        if n > cap:
            raise ResourceError("proof space too large to enumerate")

    def go(p, env):
        if isinstance(p, Bot):
            return []
        if isinstance(p, Top):
            return [()]
        if isinstance(p, Mem):
            x, y = term(p.left, env), term(p.right, env)
            return [("occ", i) for i, c in enumerate(mset.expanded(y)) if c == x]
        if isinstance(p, Eq):
            return ["refl"] if term(p.left, env) == term(p.right, env) else []
        if isinstance(p, Pred):
            holds = predicates[p.name](*(term(a, env) for a in p.args))
            return [("pred", p.name)] if holds else []
        if isinstance(p, And):
            left, right = go(p.left, env), go(p.right, env)
            size_guard(len(left) * len(right))
            return [(a, b) for a in left for b in right]
        if isinstance(p, Or):
            return guard([("inl", a) for a in go(p.left, env)] + [("inr", b) for b in go(p.right, env)])
        if isinstance(p, Imp):
            src, dst = go(p.left, env), go(p.right, env)
            if len(dst) > 1:
                size_guard(len(dst) ** len(src) if len(src) < 64 else cap + 1)
            return [tuple(zip(src, table)) for table in product(dst, repeat=len(src))]
        branches = [go(p.body, {**env, p.var: e}) for e in dom]
        if isinstance(p, Exists):
            return guard([(e, pr) for e, prs in zip(dom, branches) for pr in prs])
        total = 1
        for prs in branches:
            total *= len(prs)
        size_guard(total)
        return [tuple(zip(dom, choice)) for choice in product(*branches)]

    return go(phi, dict(val or {}))
