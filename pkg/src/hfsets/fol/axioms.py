"""Instance-by-instance checks of set-theoretic axioms over a finite carrier.

Outer universal parameters range over the carrier.  For axioms asserting
that a set exists, the set is built explicitly (with the set operations on
iterative-set carriers and the matching multiset construction otherwise)
and the axiom body is evaluated at that witness, even when the witness is
not itself in the carrier; such instances are flagged ``escapes``.  The
carrier-bounded reading, with the existential ranging over the carrier
only, is reported alongside as ``carrier_value``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import product

from .. import mset, setops
from ..errors import NoWitness, UnknownAxiom
from ..vset import Vset, elements, is_itset
from .semantics import Carrier, sigma_count, sigma_witnesses, tau_eval
from .syntax import Exists, Formula, Var, parse_formula, substitute, to_text

AXIOMS = ("extensionality", "empty", "pairing", "union", "restricted-separation", "replacement")

DEFAULT_SEPARATION = "exists w. w in z"
DEFAULT_REPLACEMENT = "forall t. t in w <-> t = y"


@dataclass
class AxiomInstance:
    params: dict[str, int]
    holds: bool
    value: int | bool
    carrier_value: int | bool
    witness: int | None = None
    escapes: bool = False
    inner: dict[int, int | bool] = field(default_factory=dict)

    def as_dict(self) -> dict:
        lit = mset.to_literal
        return {
            "params": {k: lit(v) for k, v in self.params.items()},
            "holds": self.holds,
            "value": self.value,
            "carrier_value": self.carrier_value,
            "witness": None if self.witness is None else lit(self.witness),
            "escapes": self.escapes,
            "inner": {lit(z): v for z, v in self.inner.items()},
        }


@dataclass
class AxiomReport:
    name: str
    mode: str
    carrier: str
    instances: list[AxiomInstance]

    @property
    def holds(self) -> bool:
        return all(i.holds for i in self.instances)

    def as_dict(self) -> dict:
        return {
            "axiom": self.name,
            "mode": self.mode,
            "carrier": self.carrier,
            "holds": self.holds,
            "instances": [i.as_dict() for i in self.instances],
        }


def _is_set_carrier(carrier: Carrier) -> bool:
    return carrier.kind == "vset" or all(is_itset(e) for e in carrier)


def _msum(pairs) -> int:
    """Multiset whose multiplicities are the summed ``(child, count)`` pairs."""
    acc: Counter = Counter()
    for c, n in pairs:
        acc[c] += n
    return mset.mk_bag(acc)


def check_axiom(
    name: str,
    carrier: Carrier,
    mode: str = "tau",
    formula: str | Formula | None = None,
    predicates=None,
) -> AxiomReport:
    """Check every instance of axiom ``name`` over ``carrier``.

    ``formula`` customises the schema axioms: the separating property (free
    variable ``z``, may mention ``x``) for restricted separation, and the
    relation (free variables ``y`` and ``w``) for replacement.
    """
    if name not in AXIOMS:
        raise UnknownAxiom(f"unknown axiom {name!r}; expected one of {', '.join(AXIOMS)}")
    if mode not in ("sigma", "tau"):
        raise ValueError("mode must be 'sigma' or 'tau'")
    sets = _is_set_carrier(carrier)
    dom = carrier.elements

    def ev(phi, val):
        if mode == "sigma":
            return sigma_count(phi, val, carrier, predicates)
        return tau_eval(phi, val, carrier, predicates)

    def instance(params, body, witness=None, rhs=None, statement=None):
        stmt = statement if statement is not None else Exists("u", body)
        carrier_value = ev(stmt, params)
        if witness is None:
            return AxiomInstance(dict(params), bool(carrier_value), carrier_value, carrier_value)
        value = ev(body, {**params, "u": witness})
        inner = {z: ev(rhs, {**params, "z": z}) for z in dom} if rhs is not None else {}
        return AxiomInstance(
            dict(params), bool(value), value, carrier_value, witness,
            witness not in dom, inner,
        )

    instances = []
    if name == "extensionality":
        stmt = parse_formula("(forall z. z in x <-> z in y) -> x = y")
        for x, y in product(dom, repeat=2):
            instances.append(instance({"x": x, "y": y}, None, statement=stmt))
    elif name == "empty":
        body = parse_formula("forall z. ~z in u")
        instances.append(instance({}, body, mset.EMPTY))
    elif name == "pairing":
        rhs = parse_formula("z = x \\/ z = y")
        body = parse_formula(f"forall z. z in u <-> ({to_text(rhs)})")
        for x, y in product(dom, repeat=2):
            w = setops.pair_set(Vset(x), Vset(y)).id if sets else mset.mk_sup([x, y])
            instances.append(instance({"x": x, "y": y}, body, w, rhs))
    elif name == "union":
        rhs = parse_formula("exists y in x. z in y")
        body = parse_formula(f"forall z. z in u <-> {to_text(rhs)}")
        for x in dom:
            if sets:
                w = setops.union(Vset(x)).id
            else:
                w = _msum((z, m * k) for y, m in mset.children_of(x) for z, k in mset.children_of(y))
            instances.append(instance({"x": x}, body, w, rhs))
    elif name == "restricted-separation":
        prop = _formula(formula, DEFAULT_SEPARATION)
        rhs = parse_formula(f"z in x /\\ ({to_text(prop)})")
        body = parse_formula(f"forall z. z in u <-> {to_text(rhs)}")
        for x in dom:
            if sets:
                w = setops.separation(
                    Vset(x), lambda z: tau_eval(prop, {"x": x, "z": z.id}, carrier, predicates)
                ).id
            else:
                w = _msum(
                    (z, m * sigma_count(prop, {"x": x, "z": z}, carrier, predicates))
                    for z, m in mset.children_of(x)
                )
            instances.append(instance({"x": x}, body, w, rhs))
    else:
        rel = _formula(formula, DEFAULT_REPLACEMENT)
        r = to_text(rel)
        hyp = parse_formula(
            f"forall y in x. exists w. ({r}) /\\ (forall w2. ({_rename(rel, 'w', 'w2')}) -> w2 = w)"
        )
        rhs = parse_formula(f"exists y in x. {r}")
        body = parse_formula(f"forall w. w in u <-> {to_text(rhs)}")
        stmt = parse_formula(f"({to_text(hyp)}) -> exists u. {to_text(body)}")
        for x in dom:
            params = {"x": x}
            if not tau_eval(hyp, params, carrier, predicates):
                instances.append(instance(params, None, statement=stmt))
                continue
            related = _relation(rel, carrier, predicates)
            if sets:
                # the hypothesis guarantees a unique witness inside the carrier
                w = setops.replacement_rel(
                    Vset(x), lambda a, b: related(a.id, b.id), [Vset(e) for e in dom]
                ).id
            else:
                w = _msum(
                    (b, m) for a, m in mset.children_of(x) for b in dom if related(a, b)
                )
            inst = instance(params, body, w, None)
            inst.inner = {b: ev(rhs, {**params, "w": b}) for b in dom}
            instances.append(inst)
    return AxiomReport(name, mode, carrier.label, instances)


def _formula(formula, default) -> Formula:
    if formula is None:
        return parse_formula(default)
    return parse_formula(formula) if isinstance(formula, str) else formula


def _rename(phi: Formula, old: str, new: str) -> str:
    return to_text(substitute(phi, old, Var(new)))


def _relation(rel: Formula, carrier: Carrier, predicates) -> Callable[[int, int], bool]:
    def related(a, b):
        return tau_eval(rel, {"y": a, "w": b}, carrier, predicates)
    return related


def choice_from_formula(
    a: Vset, b: Vset, relation: str | Formula, carrier: Carrier, predicates=None
) -> tuple[Vset, dict]:
    """Build a choice function from the untruncated proof of
    ``forall x in a. exists y. y in b /\\ R(x, y)``.

    The witness for each ``x`` is the first component of the first sigma
    proof of the inner existential; its count is kept as evidence.  Returns
    the function graph and the witness map.
    """
    rel = _formula(relation, "top")
    inner = parse_formula(f"exists y. y in b /\\ ({to_text(rel)})")
    w = {}
    for x in elements(a):
        found = sigma_witnesses(inner, {"x": x.id, "b": b.id}, carrier, predicates)
        if not found:
            raise NoWitness(x)
        y, count = found[0]
        w[x] = setops.Witness(Vset(y), count)
    return setops.choice_function(a, b, w), w
