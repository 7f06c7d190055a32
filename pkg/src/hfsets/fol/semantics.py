"""Untruncated (counting) and truncated (boolean) interpretation of formulas.

``sigma_count`` returns the number of inhabitants of the type a formula
translates to when existentials are sums, disjunctions are disjoint unions
and implications are function types.  ``tau_eval`` is the truncated
reading, where existentials and disjunctions only record inhabitedness.
Quantifiers range over an explicit finite :class:`Carrier`.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

from .. import mset
from ..errors import ResourceError, limits
from ..vset import Vset, enumerate_vsets
from .syntax import (
    And,
    Bot,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Mem,
    Or,
    Pred,
    Top,
)

Valuation = Mapping[str, "int | Vset"]
Predicates = Mapping[str, Callable[..., "bool | int"]]


@dataclass(frozen=True)
class Carrier:
    """Finite domain for quantifiers.

    ``kind`` is ``"vset"``, ``"mset"`` or ``"list"``.  Membership is always
    the multiplicity of the underlying multisets, which is 0 or 1 whenever
    the elements are iterative sets.
    """

    elements: tuple[int, ...]
    kind: str = "list"
    label: str = ""

    def __post_init__(self):
        ids = tuple(_as_id(e) for e in self.elements)
        if len(set(ids)) != len(ids):
            raise ValueError("carrier elements must be distinct")
        object.__setattr__(self, "elements", ids)

    @classmethod
    def vsets(cls, rank: int) -> Carrier:
        return cls(tuple(v.id for v in enumerate_vsets(rank)), "vset", f"vset:{rank}")

    @classmethod
    def msets(cls, rank: int, width: int) -> Carrier:
        return cls(tuple(mset.enumerate_msets(rank, width)), "mset", f"mset:{rank},{width}")

    @classmethod
    def of(cls, items: Iterable, kind: str = "list", label: str = "list") -> Carrier:
        return cls(tuple(dict.fromkeys(_as_id(e) for e in items)), kind, label)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _as_id(x) -> int:
    return x.id if isinstance(x, Vset) else int(x)


def _term(t, val):
    if isinstance(t, Const):
        return t.id
    try:
        return _as_id(val[t.name])
    except KeyError:
        raise ValueError(f"variable {t.name!r} is free and has no value") from None


def _bits_cap(max_digits):
    digits = limits.max_count_digits if max_digits is None else max_digits
    return math.ceil(digits * math.log2(10))


def _pred(phi: Pred, val, predicates) -> int:
    if predicates is None or phi.name not in predicates:
        raise ValueError(f"predicate {phi.name!r} has no interpretation")
    out = predicates[phi.name](*(_term(a, val) for a in phi.args))
    out = int(out)
    if out not in (0, 1):
        raise ValueError(f"predicate {phi.name!r} must return a truth value")
    return out


def sigma_count(
    phi: Formula,
    val: Valuation | None = None,
    carrier: Carrier | Iterable = (),
    predicates: Predicates | None = None,
    max_digits: int | None = None,
) -> int:
    """Number of proofs of ``phi`` in the untruncated interpretation.

    Raises :class:`ResourceError` when a count would exceed ``max_digits``
    decimal digits (default from :data:`hfsets.errors.limits`).
    """
    dom = carrier.elements if isinstance(carrier, Carrier) else tuple(_as_id(e) for e in carrier)
    cap = _bits_cap(max_digits)
    env = dict(val or {})

    def check(n):
        if n.bit_length() > cap:
            raise ResourceError(f"count exceeds {max_digits or limits.max_count_digits} digits")
        return n

    def go(p) -> int:
        if isinstance(p, Bot):
            return 0
        if isinstance(p, Top):
            return 1
        if isinstance(p, Mem):
            return mset.count_in(_term(p.left, env), _term(p.right, env))
        if isinstance(p, Eq):
            return int(_term(p.left, env) == _term(p.right, env))
        if isinstance(p, Pred):
            return _pred(p, env, predicates)
        if isinstance(p, And):
            a = go(p.left)
            return check(a * go(p.right)) if a else 0
        if isinstance(p, Or):
            return check(go(p.left) + go(p.right))
        if isinstance(p, Imp):
            a = go(p.left)
            if a == 0:
                return 1
            b = go(p.right)
            # b >= 2 gives at least a bits, so a > cap settles it before any float math
            if b > 1 and (a > cap or a * math.log2(b) > cap + 1):
                raise ResourceError(f"count exceeds {max_digits or limits.max_count_digits} digits")
            return check(b ** a)
        saved = env.get(p.var, _MISSING)
        try:
            if isinstance(p, Forall):
                total = 1
                for e in dom:
                    env[p.var] = e
                    total = check(total * go(p.body))
                    if not total:
                        break
            else:
                total = 0
                for e in dom:
                    env[p.var] = e
                    total = check(total + go(p.body))
            return total
        finally:
            if saved is _MISSING:
                env.pop(p.var, None)
            else:
                env[p.var] = saved

    return go(phi)


_MISSING = object()


def tau_eval(
    phi: Formula,
    val: Valuation | None = None,
    carrier: Carrier | Iterable = (),
    predicates: Predicates | None = None,
) -> bool:
    """Truth of ``phi`` in the truncated interpretation."""
    dom = carrier.elements if isinstance(carrier, Carrier) else tuple(_as_id(e) for e in carrier)

    def go(p, env) -> bool:
        if isinstance(p, Bot):
            return False
        if isinstance(p, Top):
            return True
        if isinstance(p, Mem):
            return mset.count_in(_term(p.left, env), _term(p.right, env)) > 0
        if isinstance(p, Eq):
            return _term(p.left, env) == _term(p.right, env)
        if isinstance(p, Pred):
            return bool(_pred(p, env, predicates))
        if isinstance(p, And):
            return go(p.left, env) and go(p.right, env)
        if isinstance(p, Or):
            return go(p.left, env) or go(p.right, env)
        if isinstance(p, Imp):
            return (not go(p.left, env)) or go(p.right, env)
        test = all if isinstance(p, Forall) else any
        return test(go(p.body, {**env, p.var: e}) for e in dom)

    return go(phi, dict(val or {}))


def sigma_witnesses(
    phi: Exists,
    val: Valuation | None = None,
    carrier: Carrier | Iterable = (),
    predicates: Predicates | None = None,
) -> list[tuple[int, int]]:
    """Carrier elements ``a`` with a nonzero count for the body of ``phi``,
    paired with that count (the first components of the sigma proofs)."""
    if not isinstance(phi, Exists):
        raise TypeError("witnesses exist only for an outermost existential")
    dom = carrier.elements if isinstance(carrier, Carrier) else tuple(_as_id(e) for e in carrier)
    out = []
    for e in dom:
        n = sigma_count(phi.body, {**(val or {}), phi.var: e}, dom, predicates)
        if n:
            out.append((e, n))
    return out
