"""Bisimilarity of multisets and the quotient onto iterative sets."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from . import mset
from .mset import MsetId
from .vset import Vset, image

_bisim_memo: dict[tuple[MsetId, MsetId], bool] = {}
_image_memo: dict[MsetId, Vset] = {}


def bisim(x: MsetId, y: MsetId) -> bool:
    """Every child of ``x`` is bisimilar to some child of ``y`` and vice versa."""
    if x == y:
        return True
    key = (x, y) if x < y else (y, x)
    hit = _bisim_memo.get(key)
    if hit is not None:
        return hit
    xs = [c for c, _ in mset.children_of(x)]
    ys = [c for c, _ in mset.children_of(y)]
    result = all(any(bisim(a, b) for b in ys) for a in xs) and all(
        any(bisim(a, b) for a in xs) for b in ys
    )
    _bisim_memo[key] = result
    return result


def iterative_image(x: MsetId) -> Vset:
    """Hereditary deduplication: the set a multiset represents."""
    hit = _image_memo.get(x)
    if hit is not None:
        return hit
    for n in mset.descendants(x):
        if n not in _image_memo:
            _image_memo[n] = image(_image_memo[c] for c, _ in mset.children_of(n))
    return _image_memo[x]


@dataclass
class BisimReport:
    classes: list[list[MsetId]] = field(default_factory=list)
    representatives: list[Vset] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return len(set(self.representatives)) == len(self.representatives)

    def as_dict(self) -> dict:
        return {
            "classes": [
                {
                    "representative": mset.to_literal(rep.id),
                    "members": [mset.to_literal(m) for m in cls],
                }
                for cls, rep in zip(self.classes, self.representatives)
            ],
            "injective": self.injective,
        }


def quotient(fragment: Sequence[MsetId]) -> BisimReport:
    """Partition ``fragment`` by bisimilarity and attach each class's set.

    Raises ``AssertionError`` if two members of one class had different
    iterative images, which would mean the quotient map is ill defined.
    """
    report = BisimReport()
    for x in dict.fromkeys(fragment):
        for cls in report.classes:
            if bisim(cls[0], x):
                cls.append(x)
                break
        else:
            report.classes.append([x])
    for cls in report.classes:
        reps = {iterative_image(m) for m in cls}
        if len(reps) != 1:
            raise RuntimeError("bisimilar multisets with different iterative images")
        report.representatives.append(reps.pop())
    return report
