"""Set constructions on certified iterative sets.

Every operation takes and returns :class:`~hfsets.vset.Vset` handles.
Hypotheses of the form "for every x in a there is a y with ..." are passed
as witness maps: a mapping from each element of the domain to its chosen
value, optionally wrapped in :class:`Witness` to carry evidence along.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from itertools import product
from typing import NamedTuple, TypeVar

from . import mset
from .errors import CodomainViolation, DomainMismatch, NotUnique, NoWitness, check_size
from .vset import EMPTY_SET, Vset, card, elements, enumerate_vsets, image, member, rank

R = TypeVar("R")


class Witness(NamedTuple):
    value: Vset
    evidence: object = None


WitnessMap = Mapping[Vset, "Vset | Witness"]


def _value(w) -> Vset:
    return w.value if isinstance(w, Witness) else w


def empty() -> Vset:
    return EMPTY_SET


def singleton(x: Vset) -> Vset:
    return image([x])


def pair_set(x: Vset, y: Vset) -> Vset:
    return image([x, y])


def union(x: Vset) -> Vset:
    return image(z for y in elements(x) for z in elements(y))


def binary_union(x: Vset, y: Vset) -> Vset:
    return union(pair_set(x, y))


_nats = [EMPTY_SET]


def nat(n: int) -> Vset:
    """Von Neumann numeral: ``nat(n + 1) = nat(n) | {nat(n)}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_nats) <= n:
        prev = _nats[-1]
        _nats.append(image(elements(prev) + [prev]))
    return _nats[n]


def separation(x: Vset, pred: Callable[[Vset], bool]) -> Vset:
    # a subfamily of an injective family is injective: no dedup required
    return Vset(mset.mk_sup([e.id for e in elements(x) if pred(e)]))


def eps_induction(step: Callable[[Vset, list], R]) -> Callable[[Vset], R]:
    """Well-founded recursion along membership.

    Returns ``h`` with ``h(x) == step(x, [h(e) for e in elements(x)])``.
    Results are memoized per node, so shared substructure is visited once.
    """
    memo: dict[int, R] = {}

    def h(x: Vset) -> R:
        if x.id in memo:
            return memo[x.id]
        for n in mset.descendants(x.id):
            if n not in memo:
                v = Vset(n)
                memo[n] = step(v, [memo[e.id] for e in elements(v)])
        return memo[x.id]

    return h


def ordered_pair(x: Vset, y: Vset) -> Vset:
    """Kuratowski pair ``{{x}, {x, y}}``."""
    return pair_set(singleton(x), pair_set(x, y))


_unpaired: dict[int, tuple[Vset, Vset] | None] = {}


def unpair(z: Vset) -> tuple[Vset, Vset] | None:
    """Components of ``z`` if it is a Kuratowski pair, else ``None``."""
    if z.id in _unpaired:
        return _unpaired[z.id]
    found = None
    els = elements(z)
    singles = [s for s in els if card(s) == 1]
    if len(els) == 1 and singles:
        x = elements(singles[0])[0]
        found = (x, x)
    elif len(els) == 2 and len(singles) == 1:
        x = elements(singles[0])[0]
        other = next(s for s in els if s is not singles[0])
        rest = [e for e in elements(other) if e != x]
        if card(other) == 2 and len(rest) == 1:
            found = (x, rest[0])
    if found is not None and ordered_pair(*found) != z:
        found = None
    _unpaired[z.id] = found
    return found


def is_fun(a: Vset, b: Vset, f: Vset) -> bool:
    """Is ``f`` the graph of a total function from ``a`` to ``b``?"""
    seen: dict[Vset, int] = {}
    for z in elements(f):
        p = unpair(z)
        if p is None:
            return False
        x, y = p
        if not (member(x, a) and member(y, b)):
            return False
        seen[x] = seen.get(x, 0) + 1
    return all(seen.get(x) == 1 for x in elements(a))


def graph(pairs: Iterable[tuple[Vset, Vset]]) -> Vset:
    return image(ordered_pair(x, y) for x, y in pairs)


def _function_tables(a: Vset, b: Vset, max_elements):
    dom, cod = elements(a), elements(b)
    check_size(len(cod) ** len(dom), "function space", max_elements)
    for values in product(cod, repeat=len(dom)):
        yield dom, values


def exp(a: Vset, b: Vset, max_elements: int | None = None) -> Vset:
    """The set of graphs of all functions from ``a`` to ``b``."""
    return image(graph(zip(dom, vals)) for dom, vals in _function_tables(a, b, max_elements))


def replacement_rel(
    a: Vset,
    pred: Callable[[Vset, Vset], bool],
    search: Sequence[Vset] | None = None,
) -> Vset:
    """``{y : some x in a has pred(x, y)}``, with uniqueness checked.

    For each element the witness is looked up in ``search``, which defaults
    to every set of rank at most ``rank(a) + 2``.  Missing or ambiguous
    witnesses raise :class:`NoWitness` / :class:`NotUnique`.
    """
    if search is None:
        search = enumerate_vsets(rank(a) + 2) if card(a) else []
    out = []
    for x in elements(a):
        hit = None
        for y in search:
            if pred(x, y):
                if hit is not None and hit != y:
                    raise NotUnique(x, hit, y)
                hit = y
        if hit is None:
            raise NoWitness(x)
        out.append(hit)
    return image(out)


def replacement_fun(a: Vset, fn: Callable[[Vset], Vset]) -> Vset:
    return image(fn(e) for e in elements(a))


def _check_domain(a: Vset, w: WitnessMap) -> None:
    if set(w) != set(elements(a)):
        raise DomainMismatch("witness map keys differ from the elements of the domain")


def choice_function(a: Vset, b: Vset, w: WitnessMap) -> Vset:
    """Graph of the function ``x -> w[x]`` from ``a`` into ``b``."""
    _check_domain(a, w)
    for x, wx in w.items():
        if not member(_value(wx), b):
            raise CodomainViolation(f"witness for {x} lies outside the codomain")
    return graph((x, _value(w[x])) for x in elements(a))


def strong_collection(a: Vset, w: WitnessMap) -> Vset:
    """The set of witness values; every x in a meets its witness in it and
    every member comes from some x."""
    _check_domain(a, w)
    return image(_value(v) for v in w.values())


def subset_collection(a: Vset, b: Vset, max_elements: int | None = None) -> Vset:
    """The set of images of all functions from ``a`` to ``b``."""
    return image(image(vals) for _, vals in _function_tables(a, b, max_elements))


def collection_witness(a: Vset, w: WitnessMap) -> Vset:
    """The member of ``subset_collection(a, b)`` that a total witness map picks."""
    return strong_collection(a, w)


def all_witness_maps(a: Vset, b: Vset) -> Iterable[dict[Vset, Vset]]:
    dom, cod = elements(a), elements(b)
    for values in product(cod, repeat=len(dom)):
        yield dict(zip(dom, values))
