"""Interned hereditarily finite iterative multisets.

Every multiset is a node holding a finite bag of already-interned children.
A bag is stored canonically as a tuple of ``(child_id, multiplicity)`` pairs
sorted by child id, and structurally identical bags share one id.  Because a
node can only mention ids that exist when it is interned, ids grow along the
membership order and the node graph is acyclic.

Ids are plain ``int`` handles into a process-wide table; equality of ids is
extensional equality of multisets.
"""

from __future__ import annotations

import threading
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations_with_replacement
from math import comb

from .errors import LiteralError, check_size

MsetId = int
Bag = tuple  # tuple[tuple[MsetId, int], ...]


class _InternTable:
    def __init__(self):
        self._lock = threading.Lock()
        self.index: dict[Bag, MsetId] = {}
        self.bags: list[Bag] = []
        self.lookup: list[dict[MsetId, int]] = []
        self.ranks: list[int] = []
        self.itset: list[bool | None] = []
        self.literals: list[str | None] = []

    def intern(self, bag: Bag) -> MsetId:
        found = self.index.get(bag)
        if found is not None:
            return found
        with self._lock:
            found = self.index.get(bag)
            if found is not None:
                return found
            n = len(self.bags)
            for c, m in bag:
                if not 0 <= c < n:
                    raise ValueError(f"child {c!r} is not an interned multiset")
                if m < 1:
                    raise ValueError("multiplicities must be positive")
            self.bags.append(bag)
            self.lookup.append(dict(bag))
            self.ranks.append(1 + max(self.ranks[c] for c, _ in bag) if bag else 0)
            self.itset.append(None)
            self.literals.append(None)
            # publish last so concurrent readers never see a half-built node
            self.index[bag] = n
            return n

    def __len__(self):
        return len(self.bags)


_table = _InternTable()


def _canonical(counts: Mapping[MsetId, int]) -> Bag:
    return tuple(sorted((int(c), int(m)) for c, m in counts.items() if m))


def mk_sup(children: Iterable[MsetId] = ()) -> MsetId:
    """Intern the multiset whose elements are ``children`` (order ignored)."""
    return _table.intern(_canonical(Counter(children)))


def mk_bag(counts: Mapping[MsetId, int] | Iterable[tuple[MsetId, int]]) -> MsetId:
    """Intern a multiset given explicit multiplicities, e.g. ``{e: 10**9}``."""
    if not isinstance(counts, Mapping):
        acc: Counter = Counter()
        for c, m in counts:
            acc[c] += m
        counts = acc
    if any(m < 0 for m in counts.values()):
        raise ValueError("multiplicities must be non-negative")
    return _table.intern(_canonical(counts))


EMPTY: MsetId = mk_sup()


def is_interned(x) -> bool:
    return isinstance(x, int) and 0 <= x < len(_table)


def count_in(x: MsetId, y: MsetId) -> int:
    """Multiplicity of ``x`` in ``y``: the number of occurrences of ``x``."""
    return _table.lookup[y].get(x, 0)


def meq(x: MsetId, y: MsetId) -> bool:
    return x == y


def children_of(x: MsetId) -> Bag:
    return _table.bags[x]


def expanded(x: MsetId) -> list[MsetId]:
    """Children listed once per occurrence, in canonical order."""
    return [c for c, m in _table.bags[x] for _ in range(m)]


def size(x: MsetId) -> int:
    """Total number of occurrences (sum of multiplicities)."""
    return sum(m for _, m in _table.bags[x])


def rank(x: MsetId) -> int:
    return _table.ranks[x]


def width(x: MsetId) -> int:
    """Hereditary width: the largest ``size`` of any node reachable from ``x``."""
    best, seen, todo = 0, set(), [x]
    while todo:
        n = todo.pop()
        if n in seen:
            continue
        seen.add(n)
        best = max(best, size(n))
        todo.extend(c for c, _ in _table.bags[n])
    return best


def descendants(x: MsetId) -> list[MsetId]:
    """All nodes reachable from ``x`` (including ``x``) in increasing id order."""
    seen, todo = {x}, [x]
    while todo:
        for c, _ in _table.bags[todo.pop()]:
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return sorted(seen)


def enumerate_msets(rank_bound: int, width_bound: int, max_elements: int | None = None) -> list[MsetId]:
    """All multisets of rank <= ``rank_bound`` and hereditary width <= ``width_bound``.

    Level ``n + 1`` is every bag of at most ``width_bound`` occurrences drawn
    from level ``n``; the listing order depends only on the bounds, never on
    what else has been interned.
    """
    if rank_bound < 0 or width_bound < 0:
        raise ValueError("bounds must be non-negative")
    level = [EMPTY]
    for _ in range(rank_bound):
        check_size(comb(len(level) + width_bound, width_bound), "multiset fragment", max_elements)
        nxt, seen = [], set()
        for k in range(width_bound + 1):
            for combo in combinations_with_replacement(level, k):
                m = mk_sup(combo)
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        if len(nxt) == len(level):
            break
        level = nxt
    return level


# -- textual literals -------------------------------------------------------

def to_literal(x: MsetId) -> str:
    """Canonical brace literal; children sorted by (rank, text)."""
    lits = _table.literals
    if lits[x] is not None:
        return lits[x]
    for n in descendants(x):
        if lits[n] is None:
            parts = sorted(
                ((_table.ranks[c], lits[c]) for c, m in _table.bags[n] for _ in range(m))
            )
            lits[n] = "{" + ",".join(p for _, p in parts) + "}"
    return lits[x]


def parse_literal(text: str) -> MsetId:
    """Parse a brace literal such as ``{{},{}}``; duplicates are preserved.

    Whitespace is ignored.  Errors carry a 1-based column.
    """
    stack: list[list[MsetId]] = []
    result = None
    # "open": just saw '{'; "elem": just closed an element; "comma": just saw ','
    state = "start"
    for i, ch in enumerate(text):
        col = i + 1
        if ch.isspace():
            continue
        if result is not None:
            raise LiteralError("trailing input", col)
        if ch == "{":
            if state == "elem":
                raise LiteralError("expected ',' or '}'", col)
            stack.append([])
            state = "open"
        elif ch == "}":
            if not stack:
                raise LiteralError("unbalanced '}'", col)
            if state == "comma":
                raise LiteralError("expected element after ','", col)
            node = mk_sup(stack.pop())
            if stack:
                stack[-1].append(node)
                state = "elem"
            else:
                result = node
        elif ch == ",":
            if state != "elem":
                raise LiteralError("unexpected ','", col)
            state = "comma"
        else:
            raise LiteralError(f"unexpected character {ch!r}", col)
    if result is None:
        raise LiteralError("unterminated literal" if stack else "empty input", len(text) + 1)
    return result


# -- JSON export ------------------------------------------------------------

def to_json(x: MsetId) -> dict:
    """``{"nodes": [...], "root": n}`` with local ids in topological order."""
    nodes = descendants(x)
    local = {n: i for i, n in enumerate(nodes)}
    return {
        "nodes": [
            {"id": local[n], "children": [[local[c], m] for c, m in _table.bags[n]]}
            for n in nodes
        ],
        "root": local[x],
    }


def from_json(doc: Mapping) -> MsetId:
    made: dict[int, MsetId] = {}
    for node in doc["nodes"]:
        kids = {}
        for c, m in node["children"]:
            if c not in made:
                raise ValueError(f"node {node['id']} references {c} before its definition")
            kids[made[c]] = kids.get(made[c], 0) + int(m)
        made[node["id"]] = mk_bag(kids)
    return made[doc["root"]]


def interned_count() -> int:
    return len(_table)


__all__: Sequence[str] = [
    "EMPTY",
    "MsetId",
    "children_of",
    "count_in",
    "descendants",
    "enumerate_msets",
    "expanded",
    "from_json",
    "interned_count",
    "is_interned",
    "meq",
    "mk_bag",
    "mk_sup",
    "parse_literal",
    "rank",
    "size",
    "to_json",
    "to_literal",
    "width",
]
