import random
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import msets

from hfsets import mset
from hfsets.errors import NotSetLike, ResourceError
from hfsets.mset import EMPTY, count_in, enumerate_msets, mk_sup, parse_literal
from hfsets.setops import nat
from hfsets.vset import (
    EMPTY_SET,
    Vset,
    card,
    elements,
    enumerate_vsets,
    image,
    is_itset,
    member,
    parse_set,
    rank,
    to_vset,
)

E = EMPTY
S1 = mk_sup([E])


def v(text):
    return parse_set(text)


def _itset_by_unfolding(x):
    """Direct recursive reading of the set-like predicate, no memo."""
    bag = mset.children_of(x)
    return all(m == 1 for _, m in bag) and all(_itset_by_unfolding(c) for c, _ in bag)


def test_is_itset_examples():
    assert is_itset(E)
    assert not is_itset(mk_sup([E, E, S1]))
    assert not is_itset(mk_sup([mk_sup([E, E])]))
    assert is_itset(parse_literal("{{},{{}}}"))


@given(msets)
def test_is_itset_agrees_with_unfolding(x):
    assert is_itset(x) == _itset_by_unfolding(x)


def test_to_vset_agrees_with_is_itset_on_fragment():
    for x in enumerate_msets(2, 2):
        if is_itset(x):
            assert to_vset(x).id == x
        else:
            with pytest.raises(NotSetLike):
                to_vset(x)


def test_not_set_like_path():
    inner = mk_sup([E, E])
    outer = mk_sup([S1, mk_sup([inner])])
    with pytest.raises(NotSetLike) as err:
        to_vset(outer)
    path = err.value.path
    assert path[0] == outer and path[-1] == inner
    assert all(b in dict(mset.children_of(a)) for a, b in zip(path, path[1:]))


def test_vset_handles_are_interned():
    a = to_vset(parse_literal("{{},{{}}}"))
    b = to_vset(parse_literal("{{{}},{}}"))
    assert a is b
    assert a == b and hash(a) == hash(b)


def test_member_examples():
    assert member(EMPTY_SET, v("{{}}"))
    assert not member(v("{{}}"), v("{{}}"))


def test_member_agrees_with_multiplicity():
    v3 = enumerate_vsets(3)
    for x, y in product(v3, repeat=2):
        assert member(x, y) == (count_in(x.id, y.id) >= 1)
        assert count_in(x.id, y.id) <= 1


def test_elements():
    assert elements(EMPTY_SET) == []
    assert elements(v("{{},{{}}}")) == [EMPTY_SET, v("{{}}")]
    for y in enumerate_vsets(3):
        assert len(elements(y)) == sum(m for _, m in mset.children_of(y.id))


def test_image_examples():
    assert image([]) == EMPTY_SET
    s = v("{{}}")
    assert image([EMPTY_SET, EMPTY_SET, s]) == v("{{},{{}}}")


@given(st.lists(st.integers(0, 15), max_size=10))
def test_image_is_dedup(picks):
    v3 = enumerate_vsets(3)
    family = [v3[i] for i in picks]
    out = image(family)
    assert sorted(elements(out), key=lambda s: s.id) == sorted(set(family), key=lambda s: s.id)
    assert image(elements(out)) == out


def test_image_property_transfer():
    # any property of every input holds of every member
    rng = random.Random(7)
    v3 = enumerate_vsets(3)
    for _ in range(200):
        family = rng.sample(v3, rng.randint(0, 6))
        out = image(family)
        assert all(member(x, out) for x in family)
        prop = set(family)
        assert all(z in prop for z in elements(out))


def test_rank():
    assert rank(EMPTY_SET) == 0
    assert rank(nat(3)) == 3
    for n in range(7):
        assert rank(nat(n)) == n


def _powerset_sizes(n):
    size = 1
    for _ in range(n):
        size = 2 ** size
    return size


@pytest.mark.parametrize("n", range(5))
def test_enumerate_vsets_counts(n):
    level = enumerate_vsets(n)
    assert len(level) == _powerset_sizes(n) == [1, 2, 4, 16, 65536][n]
    assert len(set(level)) == len(level)


def test_enumerate_vsets_levels_are_powersets():
    for n in range(1, 4):
        prev = [x.id for x in enumerate_vsets(n - 1)]
        power = {frozenset(c) for k in range(len(prev) + 1) for c in combinations(prev, k)}
        got = {frozenset(c for c, _ in mset.children_of(x.id)) for x in enumerate_vsets(n)}
        assert got == power


def test_enumerate_vsets_all_certified():
    assert enumerate_vsets(0) == [EMPTY_SET]
    assert all(_itset_by_unfolding(x.id) for x in enumerate_vsets(3))


def test_enumerate_vsets_cap():
    with pytest.raises(ResourceError):
        enumerate_vsets(5)
    with pytest.raises(ResourceError):
        enumerate_vsets(4, max_elements=1000)


def test_extensionality_on_v3():
    v3 = enumerate_vsets(3)
    for x, y in product(v3, repeat=2):
        same_members = {z for z in v3 if member(z, x)} == {z for z in v3 if member(z, y)}
        assert (x == y) == same_members
        assert (x == y) == (x.id == y.id)


def test_set_and_multiset_extensionality_agree():
    v3 = enumerate_vsets(3)
    zs = enumerate_msets(2, 2)
    for x, y in product(v3, repeat=2):
        over_sets = all(member(z, x) == member(z, y) for z in v3)
        over_msets = all(count_in(z, x.id) == count_in(z, y.id) for z in zs + [z.id for z in v3])
        assert over_sets == over_msets


def test_card_and_parse_set_rejects_duplicates():
    assert card(v("{{},{{}}}")) == 2
    with pytest.raises(NotSetLike):
        parse_set("{{},{}}")


def test_vset_constructor_is_internal_but_consistent():
    assert Vset(E) is EMPTY_SET
