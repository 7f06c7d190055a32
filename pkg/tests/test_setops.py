import random
from itertools import combinations, product

import pytest

from hfsets import mset
from hfsets.errors import (
    CodomainViolation,
    DomainMismatch,
    NotUnique,
    NoWitness,
    ResourceError,
)
from hfsets.setops import (
    Witness,
    all_witness_maps,
    binary_union,
    choice_function,
    collection_witness,
    empty,
    eps_induction,
    exp,
    is_fun,
    nat,
    ordered_pair,
    pair_set,
    replacement_fun,
    replacement_rel,
    separation,
    singleton,
    strong_collection,
    subset_collection,
    union,
    unpair,
)
from hfsets.vset import (
    EMPTY_SET,
    card,
    elements,
    enumerate_vsets,
    image,
    member,
    parse_set,
    rank,
)

E = EMPTY_SET
V2 = enumerate_vsets(2)
V3 = enumerate_vsets(3)


def v(text):
    return parse_set(text)


def small_sets(max_size):
    return [image(c) for k in range(max_size + 1) for c in combinations(V2, k)]


def test_empty():
    assert elements(empty()) == []
    assert not any(member(z, empty()) for z in V3)


def test_nat():
    assert nat(0) == E
    assert nat(2) == v("{{},{{}}}")
    for n in range(7):
        assert card(nat(n)) == n
        # every smaller numeral is a member
        assert all(member(nat(k), nat(n)) for k in range(n))


def test_pair_set():
    assert pair_set(E, E) == v("{{}}")
    assert card(pair_set(E, v("{{}}"))) == 2
    for x, y in product(V2, repeat=2):
        p = pair_set(x, y)
        for z in V3:
            assert member(z, p) == (z == x or z == y)


def test_union():
    assert union(E) == E
    assert union(v("{{{}},{{},{{}}}}")) == v("{{},{{}}}")
    for x in V3:
        u = union(x)
        for z in V3:
            assert member(z, u) == any(member(y, x) and member(z, y) for y in V3)


def test_binary_union_laws():
    for x, y in product(V3, repeat=2):
        assert binary_union(x, y) == binary_union(y, x)
        assert binary_union(x, x) == x
    rng = random.Random(3)
    for _ in range(300):
        x, y, z = rng.sample(V3, 3)
        assert binary_union(binary_union(x, y), z) == binary_union(x, binary_union(y, z))


@pytest.mark.parametrize("pred", [
    lambda z: False,
    lambda z: card(z) <= 1,
    lambda z: card(z) == 0,
    lambda z: member(E, z),
])
def test_separation(pred):
    for x in V3:
        s = separation(x, pred)
        for z in V3:
            assert member(z, s) == (pred(z) and member(z, x))


def test_separation_examples():
    assert separation(V3[-1], lambda z: False) == E
    assert separation(v("{{},{{}}}"), lambda z: card(z) == 0) == v("{{}}")


def test_eps_induction_rank():
    h = eps_induction(lambda x, rs: 1 + max(rs) if rs else 0)
    for x in V3 + [nat(n) for n in range(6)]:
        assert h(x) == rank(x)


def test_eps_induction_slot_count():
    # element slots of every distinct hereditary member: |3| + |2| + |1| + |0|
    closure = eps_induction(lambda x, rs: frozenset([x]).union(*rs))
    assert sum(card(n) for n in closure(nat(3))) == 3 + 2 + 1 == 6
    # counted as a tree instead, shared members are revisited: 3 + (0 + 1 + 3)
    tree = eps_induction(lambda x, rs: len(rs) + sum(rs))
    assert tree(nat(3)) == 7


def test_eps_induction_constant():
    h = eps_induction(lambda x, rs: "c")
    assert {h(x) for x in V3} == {"c"}


def test_ordered_pair():
    assert ordered_pair(E, E) == v("{{{}}}")
    assert ordered_pair(E, v("{{}}")) != ordered_pair(v("{{}}"), E)
    for x, y, x2, y2 in product(V2, repeat=4):
        assert (ordered_pair(x, y) == ordered_pair(x2, y2)) == (x == x2 and y == y2)
    for x, y in product(V3, repeat=2):
        assert unpair(ordered_pair(x, y)) == (x, y)


def test_unpair_rejects_non_pairs():
    assert unpair(E) is None
    assert unpair(v("{{{}},{{{}}}}")) is None  # {{a},{b}}, two singletons
    assert unpair(v("{{},{{}}}")) is None


def test_is_fun_examples():
    b = v("{{},{{}}}")
    assert is_fun(E, b, E)
    one = v("{{}}")
    assert is_fun(one, one, image([ordered_pair(E, E)]))
    two_valued = image([ordered_pair(E, E), ordered_pair(E, one)])
    assert not is_fun(one, b, two_valued)
    # partial: domain element missing
    assert not is_fun(b, b, image([ordered_pair(E, E)]))
    # pair outside codomain
    assert not is_fun(one, one, image([ordered_pair(E, one)]))


def test_exp_examples():
    assert exp(E, V2[3]) == v("{{}}")
    assert exp(v("{{}}"), E) == E


def test_exp_cardinality_and_membership():
    sets = small_sets(2)
    graphs = set()
    for a, b in product(sets, repeat=2):
        graphs.update(elements(exp(a, b)))
    pool = sorted(graphs) + V3
    for a, b in product(sets, repeat=2):
        e = exp(a, b)
        assert card(e) == card(b) ** card(a)
        for c in pool:
            assert member(c, e) == is_fun(a, b, c)


def test_exp_graphs_are_sets_and_distinct():
    a, b = V2[3], V2[3]
    gs = elements(exp(a, b))
    assert len(gs) == 4
    assert all(card(g) == card(a) for g in gs)


def test_exp_cap():
    with pytest.raises(ResourceError):
        exp(nat(6), nat(6), max_elements=1000)


def test_replacement_rel():
    assert replacement_rel(E, lambda x, y: True) == E
    a = v("{{},{{}}}")
    assert replacement_rel(a, lambda x, y: y == singleton(x)) == v("{{{}},{{{}}}}")
    assert replacement_rel(v("{{{}}}"), lambda x, y: member(y, x)) == v("{{}}")


def test_replacement_rel_errors():
    a = v("{{},{{}}}")
    with pytest.raises(NoWitness):
        replacement_rel(a, lambda x, y: False, V2)
    with pytest.raises(NotUnique):
        replacement_rel(a, lambda x, y: True, V2)


def test_replacement_fun():
    a = v("{{},{{}}}")
    assert replacement_fun(a, lambda x: x) == a
    assert replacement_fun(a, singleton) == v("{{{}},{{{}}}}")
    assert replacement_fun(a, lambda x: E) == v("{{}}")


def test_choice_function():
    assert choice_function(E, V2[3], {}) == E
    a, b = v("{{}}"), v("{{},{{}}}")
    f = choice_function(a, b, {E: v("{{}}")})
    assert f == image([ordered_pair(E, v("{{}}"))])
    assert is_fun(a, b, f)


def test_choice_function_errors():
    a, b = v("{{}}"), v("{{}}")
    with pytest.raises(DomainMismatch):
        choice_function(a, b, {})
    with pytest.raises(CodomainViolation):
        choice_function(a, b, {E: v("{{}}")})


def test_choice_function_always_a_function():
    for a, b in product(small_sets(2), repeat=2):
        for w in all_witness_maps(a, b):
            tagged = {x: Witness(y, "evidence") for x, y in w.items()}
            f = choice_function(a, b, tagged)
            assert is_fun(a, b, f)
            assert all(member(ordered_pair(x, y), f) for x, y in w.items())


def test_strong_collection():
    assert strong_collection(E, {}) == E
    a = v("{{},{{}}}")
    assert strong_collection(a, {x: v("{{}}") for x in elements(a)}) == v("{{{}}}")
    with pytest.raises(DomainMismatch):
        strong_collection(a, {E: E})


def test_collection_clauses_and_replacement_route():
    for a, b in product(small_sets(2), repeat=2):
        for w in all_witness_maps(a, b):
            s = strong_collection(a, w)
            assert all(member(w[x], s) for x in elements(a))
            assert all(any(w[x] == y for x in elements(a)) for y in elements(s))
            assert s == replacement_rel(a, lambda x, y: y == w[x], elements(b))


def test_subset_collection_examples():
    assert subset_collection(v("{{}}"), v("{{},{{}}}")) == v("{{{}},{{{}}}}")
    assert subset_collection(E, V2[3]) == v("{{}}")


def test_subset_collection_contains_every_witness_image():
    for a, b in product(small_sets(2), repeat=2):
        c = subset_collection(a, b)
        for w in all_witness_maps(a, b):
            d = collection_witness(a, w)
            assert member(d, c)
            assert all(member(w[x], d) for x in elements(a))
            assert all(any(w[x] == y for x in elements(a)) for y in elements(d))


def test_all_witness_maps_count():
    a, b = v("{{},{{}}}"), V2[3]
    assert len(list(all_witness_maps(a, b))) == 4


def test_results_are_hereditarily_sets():
    from hfsets.vset import is_itset
    for x in [exp(V2[3], V2[3]), subset_collection(V2[3], V2[3]), union(V3[-1])]:
        assert is_itset(x.id)
    assert mset.rank(ordered_pair(E, E).id) == 2
