"""Iterative sets: multisets in which nothing occurs twice, hereditarily."""

from __future__ import annotations

from collections.abc import Iterable

from . import mset
from .errors import NotSetLike, ResourceError, check_size
from .mset import EMPTY, MsetId, _table


def is_itset(x: MsetId) -> bool:
    """True iff every node reachable from ``x`` has all multiplicities 1.

    The answer is memoized per node, so repeated checks are O(1).
    """
    flags = _table.itset
    cached = flags[x]
    if cached is not None:
        return cached
    for n in mset.descendants(x):  # increasing id: children before parents
        if flags[n] is None:
            flags[n] = all(m == 1 and flags[c] for c, m in _table.bags[n])
    return flags[x]


def _violation_path(x: MsetId) -> list[MsetId]:
    path = [x]
    while True:
        bag = _table.bags[path[-1]]
        if any(m > 1 for _, m in bag):
            return path
        path.append(next(c for c, _ in bag if not is_itset(c)))


class Vset:
    """A certified handle on a multiset that passed :func:`is_itset`.

    Instances are interned alongside their node, so ``is`` and ``==`` agree
    with extensional equality.  Construct through :func:`to_vset`.
    """

    __slots__ = ("id",)
    _cache: dict[MsetId, Vset] = {}

    def __new__(cls, underlying: MsetId):
        obj = cls._cache.get(underlying)
        if obj is None:
            obj = super().__new__(cls)
            obj.id = underlying
            obj = cls._cache.setdefault(underlying, obj)
        return obj

    def __repr__(self):
        return f"Vset({mset.to_literal(self.id)})"

    def __str__(self):
        return mset.to_literal(self.id)

    def __eq__(self, other):
        return isinstance(other, Vset) and self.id == other.id

    def __hash__(self):
        return hash(("Vset", self.id))

    def __lt__(self, other):
        return self.id < other.id

    def __reduce__(self):
        return (Vset, (self.id,))


def to_vset(x: MsetId | Vset) -> Vset:
    if isinstance(x, Vset):
        return x
    if not is_itset(x):
        raise NotSetLike(_violation_path(x))
    return Vset(x)


def member(x: Vset, y: Vset) -> bool:
    return mset.count_in(x.id, y.id) == 1


def elements(y: Vset) -> list[Vset]:
    return [Vset(c) for c, _ in _table.bags[y.id]]


def card(y: Vset) -> int:
    return len(_table.bags[y.id])


def image(inputs: Iterable[Vset]) -> Vset:
    """The set of the distinct values in ``inputs``."""
    return Vset(mset.mk_sup({v.id for v in inputs}))


def rank(x: MsetId | Vset) -> int:
    return mset.rank(x.id if isinstance(x, Vset) else x)


def parse_set(text: str) -> Vset:
    """Parse a literal that must already be a set (duplicates raise NotSetLike)."""
    return to_vset(mset.parse_literal(text))


EMPTY_SET = Vset(EMPTY)


def _level_sizes(rank_bound):
    n = 1
    for _ in range(rank_bound):
        if n > 64:
            return None
        n = 2 ** n
    return n


_levels: list[list[Vset]] = [[EMPTY_SET]]


def enumerate_vsets(rank_bound: int, max_elements: int | None = None) -> list[Vset]:
    """All iterative sets of rank <= ``rank_bound``.

    Level ``n + 1`` lists the subsets of level ``n`` in binary-counter order
    (subset number ``k`` contains the ``i``-th set of level ``n`` iff bit
    ``i`` of ``k`` is set), so each level is a prefix of the next.
    """
    if rank_bound < 0:
        raise ValueError("rank_bound must be non-negative")
    total = _level_sizes(rank_bound)
    if total is None:
        raise ResourceError(f"the rank-{rank_bound} fragment has more than 2**64 elements")
    check_size(total, "set fragment", max_elements)
    while len(_levels) <= rank_bound:
        prev = _levels[-1]
        ids = [v.id for v in prev]
        nxt = []
        for k in range(2 ** len(prev)):
            picked = tuple((ids[i], 1) for i in range(len(ids)) if k >> i & 1)
            node = _table.intern(tuple(sorted(picked)))
            _table.itset[node] = True
            nxt.append(Vset(node))
        _levels.append(nxt)
    return list(_levels[rank_bound])
