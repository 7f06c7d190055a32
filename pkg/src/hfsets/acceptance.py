"""Exhaustive and randomized checks run by ``hfsets selftest`` and the test suite.

Each check returns ``(ok, detail)``.  All tolerances are exact.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations, product

from . import mset
from .bisim import bisim, iterative_image, quotient
from .errors import ResourceError
from .fol import (
    Carrier,
    check_axiom,
    choice_from_formula,
    parse_formula,
    sigma_count,
    tau_eval,
    to_text,
)
from .fol.generate import random_formula, random_mset
from .fol.prooftrees import proofs
from .mset import EMPTY, enumerate_msets, meq
from .setops import (
    all_witness_maps,
    choice_function,
    collection_witness,
    eps_induction,
    exp,
    is_fun,
    nat,
    ordered_pair,
    pair_set,
    replacement_rel,
    separation,
    strong_collection,
    subset_collection,
    union,
)
from .vset import Vset, card, elements, enumerate_vsets, image, is_itset, member, rank

SEED = 20240521


def _subsets(items, max_size):
    for k in range(max_size + 1):
        for combo in combinations(items, k):
            yield image(combo)


def check_counts():
    expected = [1, 2, 4, 16, 65536]
    got = [len(enumerate_vsets(n)) for n in range(5)]
    if got != expected:
        return False, f"sizes {got}"
    for n in range(1, 5):
        prev = [v.id for v in enumerate_vsets(n - 1)]
        power = {frozenset(c) for k in range(len(prev) + 1) for c in combinations(prev, k)}
        level = {frozenset(c for c, _ in mset.children_of(v.id)) for v in enumerate_vsets(n)}
        if level != power:
            return False, f"level {n} is not the powerset of level {n - 1}"
    return True, "sizes 1, 2, 4, 16, 65536; each level is the powerset of the last"


def check_extensionality():
    v3 = enumerate_vsets(3)
    bad = [
        (x, y) for x, y in product(v3, repeat=2)
        if (x == y) != all(member(z, x) == member(z, y) for z in v3)
    ]
    return not bad, f"{len(v3) ** 2} pairs, {len(bad)} mismatches"


def check_mset_extensionality():
    frag = enumerate_msets(2, 2)
    zs = sorted(set(frag) | {c for x in frag for c, _ in mset.children_of(x)})
    bad = 0
    for x, y in product(frag, repeat=2):
        pointwise = all(mset.expanded(x).count(z) == mset.expanded(y).count(z) for z in zs)
        bad += meq(x, y) != pointwise
    return bad == 0, f"{len(frag) ** 2} pairs over {len(zs)} candidates, {bad} mismatches"


def check_quotient():
    frag = enumerate_msets(2, 2)
    report = quotient(frag)
    images = {iterative_image(x) for x in frag}
    expected = sum(1 for v in enumerate_vsets(2) if mset.width(v.id) <= 2)
    problems = []
    if len(report.classes) != len(images) or len(report.classes) != expected:
        problems.append(f"{len(report.classes)} classes, {len(images)} images, {expected} sets")
    if not report.injective:
        problems.append("representatives not injective")
    if not all(bisim(x, iterative_image(x).id) for x in frag):
        problems.append("x ~ iterative_image(x) fails")
    certified = [x for x in frag if is_itset(x)]
    if any(bisim(x, y) != meq(x, y) for x, y in product(certified, repeat=2)):
        problems.append("bisim differs from equality on sets")
    detail = f"{len(frag)} multisets, {len(report.classes)} classes"
    return not problems, "; ".join(problems) or detail


def _non_graphs(rng, n, exclude):
    v2 = enumerate_vsets(2)
    out = []
    while len(out) < n:
        pairs = [ordered_pair(rng.choice(v2), rng.choice(v2)) for _ in range(rng.randint(1, 4))]
        if rng.random() < 0.5:
            pairs.append(rng.choice(v2))  # not a pair at all
        else:
            x = rng.choice(v2)
            y1, y2 = rng.sample(v2, 2)
            pairs += [ordered_pair(x, y1), ordered_pair(x, y2)]
        c = image(pairs)
        if c not in exclude and c not in out:
            out.append(c)
    return out


def check_exponentials():
    rng = random.Random(SEED)
    sets = list(_subsets(enumerate_vsets(2), 3))
    graphs, bad_card = set(), 0
    exps = {}
    for a, b in product(sets, repeat=2):
        e = exp(a, b)
        exps[a, b] = e
        bad_card += card(e) != card(b) ** card(a)
        graphs.update(elements(e))
    pool = sorted(graphs) + _non_graphs(rng, 100, graphs)
    bad_member = sum(
        member(c, e) != is_fun(a, b, c) for (a, b), e in exps.items() for c in pool
    )
    ok = bad_card == 0 and bad_member == 0
    return ok, (
        f"{len(exps)} (a, b) pairs, pool of {len(pool)} candidates; "
        f"{bad_card} cardinality and {bad_member} membership mismatches"
    )


def check_constructions():
    v3 = enumerate_vsets(3)
    bad = {"pairing": 0, "union": 0, "separation": 0}
    for x, y in product(v3, repeat=2):
        p = pair_set(x, y)
        bad["pairing"] += sum(member(z, p) != (z == x or z == y) for z in v3)
    for x in v3:
        u = union(x)
        bad["union"] += sum(
            member(z, u) != any(member(y, x) and member(z, y) for y in v3) for z in v3
        )
    preds = [
        lambda z: card(z) == 0,
        lambda z: card(z) <= 1,
        lambda z: member(Vset(EMPTY), z),
    ]
    for pred, x in product(preds, v3):
        s = separation(x, pred)
        bad["separation"] += sum(member(z, s) != (pred(z) and member(z, x)) for z in v3)
    return not any(bad.values()), ", ".join(f"{k}: {v} mismatches" for k, v in bad.items())


def _random_carrier(rng, size):
    if rng.random() < 0.5:
        pool = [v.id for v in enumerate_vsets(2)] + [v.id for v in rng.sample(enumerate_vsets(3), 4)]
        kind = "vset"
    else:
        pool = enumerate_msets(2, 2)
        kind = "mset"
    return Carrier.of(rng.sample(pool, size), kind)


_PREDICATES = {
    "P": lambda x: mset.rank(x) % 2 == 0,
    "R": lambda x, y: mset.rank(x) < mset.rank(y),
}


def _random_instance(rng, depth, max_carrier):
    carrier = _random_carrier(rng, rng.randint(1, max_carrier))
    scope = ("a", "b")
    phi = random_formula(rng, rng.randint(1, depth), scope, predicates={"P": 1, "R": 2})
    val = {v: rng.choice(carrier.elements) for v in scope}
    return phi, val, carrier


def check_truncation():
    rng = random.Random(SEED)
    mismatches = 0
    for _ in range(1000):
        phi, val, carrier = _random_instance(rng, 4, 4)
        mismatches += tau_eval(phi, val, carrier, _PREDICATES) != (
            sigma_count(phi, val, carrier, _PREDICATES) > 0
        )
    validated, skipped, oracle_bad = 0, 0, 0
    while validated < 100:
        phi, val, carrier = _random_instance(rng, 3, 3)
        try:
            n = len(proofs(phi, val, carrier, _PREDICATES))
        except ResourceError:
            skipped += 1
            continue
        validated += 1
        oracle_bad += n != sigma_count(phi, val, carrier, _PREDICATES)
    ok = mismatches == 0 and oracle_bad == 0
    return ok, (
        f"1000 formulas: {mismatches} tau/sigma mismatches; 100 proof enumerations: "
        f"{oracle_bad} count mismatches ({skipped} oversized draws skipped)"
    )


def check_divergence():
    doubled = mset.mk_sup([EMPTY, EMPTY])
    x = mset.mk_sup([EMPTY, doubled])
    carrier = Carrier.of([EMPTY, doubled, x], "mset", "list")
    inner = parse_formula("exists y in x. z in y")
    n = sigma_count(inner, {"x": x, "z": EMPTY}, carrier)
    t = tau_eval(inner, {"x": x, "z": EMPTY}, carrier)
    report = check_axiom("union", carrier, "sigma")
    at_x = next(i for i in report.instances if i.params["x"] == x)
    ok = n >= 2 and t and at_x.inner[EMPTY] >= 2
    return ok, (
        f"x = {mset.to_literal(x)}, z = {{}}: sigma count {n}, tau {str(t).lower()}; "
        f"union check reports inner count {at_x.inner[EMPTY]}"
    )


def _small_domains():
    return list(_subsets(enumerate_vsets(2), 2))


def check_choice():
    doms = _small_domains()
    bad, total = 0, 0
    for a, b in product(doms, repeat=2):
        for w in all_witness_maps(a, b):
            total += 1
            f = choice_function(a, b, w)
            bad += not is_fun(a, b, f) or any(not member(ordered_pair(x, y), f) for x, y in w.items())
    carrier = Carrier.vsets(3)
    relations = ["top", "x in y", "~y = x", "y in x \\/ y = x"]
    e2e = 0
    for a, b in product(doms, repeat=2):
        for rel in relations:
            phi = parse_formula(rel)
            if not all(
                any(tau_eval(phi, {"x": x.id, "y": y.id}, carrier) for y in elements(b))
                for x in elements(a)
            ):
                continue
            f, w = choice_from_formula(a, b, phi, carrier)
            e2e += 1
            bad += not is_fun(a, b, f) or not all(
                tau_eval(phi, {"x": x.id, "y": wx.value.id}, carrier) for x, wx in w.items()
            )
    return bad == 0, f"{total} witness maps and {e2e} formula-derived choices, {bad} failures"


def check_collection():
    doms = _small_domains()
    bad, total = 0, 0
    for a, b in product(doms, repeat=2):
        c = subset_collection(a, b)
        for w in all_witness_maps(a, b):
            total += 1
            s = strong_collection(a, w)
            bad += not all(member(w[x], s) for x in elements(a))
            bad += not all(any(w[x] == y for x in elements(a)) for y in elements(s))
            bad += s != replacement_rel(a, lambda x, y: y == w[x], elements(b))
            d = collection_witness(a, w)
            bad += not member(d, c)
            bad += not all(member(w[x], d) for x in elements(a))
            bad += not all(any(w[x] == y for x in elements(a)) for y in elements(d))
    return bad == 0, f"{total} witness maps, {bad} clause failures"


def check_induction():
    h = eps_induction(lambda x, rs: 1 + max(rs) if rs else 0)
    sample = enumerate_vsets(3) + [nat(n) for n in range(6)]
    bad = [v for v in sample if h(v) != rank(v)]
    return not bad, f"{len(sample)} sets, {len(bad)} mismatches"


def check_kuratowski():
    v2 = enumerate_vsets(2)
    bad = sum(
        (ordered_pair(x, y) == ordered_pair(x2, y2)) != (x == x2 and y == y2)
        for x, y, x2, y2 in product(v2, repeat=4)
    )
    return bad == 0, f"{len(v2) ** 4} quadruples, {bad} mismatches"


DETERMINISM_ARGV = [
    ["normalize", "--dedup", "{{},{}}"],
    ["enum", "--vsets", "--rank", "3"],
    ["quotient", "--rank", "2", "--width", "2", "--json"],
    ["check", "union", "--carrier", "vset:2", "--mode", "sigma"],
]


def check_determinism():
    rng = random.Random(SEED)
    formula_bad = 0
    for _ in range(500):
        phi = random_formula(rng, rng.randint(0, 5), ("a", "b"), (EMPTY,), {"P": 1, "R": 2})
        formula_bad += parse_formula(to_text(phi)) != phi
    literal_bad = 0
    for _ in range(500):
        m = random_mset(rng, rng.randint(0, 4), 3)
        text = mset.to_literal(m)
        literal_bad += mset.parse_literal(text) != m or mset.to_literal(mset.parse_literal(text)) != text
    cli_bad = 0
    for argv in DETERMINISM_ARGV:
        outs = [
            subprocess.run(
                [sys.executable, "-m", "hfsets", *argv], capture_output=True, check=False
            ).stdout
            for _ in range(2)
        ]
        cli_bad += outs[0] != outs[1] or not outs[0]
    ok = formula_bad == literal_bad == cli_bad == 0
    return ok, (
        f"{formula_bad}/500 formula and {literal_bad}/500 literal round-trip failures; "
        f"{cli_bad}/{len(DETERMINISM_ARGV)} CLI commands differed between runs"
    )


@dataclass
class Criterion:
    key: str
    title: str
    run: Callable[[], tuple[bool, str]]


CRITERIA = [
    Criterion("counts", "hierarchy counts", check_counts),
    Criterion("extensionality", "set extensionality on V<=3", check_extensionality),
    Criterion("mset-extensionality", "multiset extensionality", check_mset_extensionality),
    Criterion("quotient", "bisimulation quotient equals V", check_quotient),
    Criterion("exponentials", "exponentials", check_exponentials),
    Criterion("constructions", "pairing, union, separation", check_constructions),
    Criterion("truncation", "tau = (sigma > 0)", check_truncation),
    Criterion("divergence", "sigma/tau divergence for union", check_divergence),
    Criterion("choice", "choice functions", check_choice),
    Criterion("collection", "strong and subset collection", check_collection),
    Criterion("induction", "membership induction", check_induction),
    Criterion("kuratowski", "ordered pair injectivity", check_kuratowski),
    Criterion("determinism", "round-trips and deterministic output", check_determinism),
]


@dataclass
class Result:
    key: str
    title: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"{mark} {self.key:<20} {self.seconds:6.2f}s  {self.detail}"


def run_one(c: Criterion) -> Result:
    t0 = time.perf_counter()
    try:
        ok, detail = c.run()
    except Exception as e:  # a crash counts as a failed criterion
        ok, detail = False, f"{type(e).__name__}: {e}"
    return Result(c.key, c.title, ok, detail, time.perf_counter() - t0)


def run(only=None) -> list[Result]:
    chosen = [c for c in CRITERIA if not only or c.key in only]
    unknown = set(only or ()) - {c.key for c in CRITERIA}
    if unknown:
        raise KeyError(f"unknown criteria: {', '.join(sorted(unknown))}")
    return [run_one(c) for c in chosen]
