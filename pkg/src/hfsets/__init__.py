"""Hereditarily finite iterative multisets and iterative sets.

The kernel interns multisets so that id equality is extensional equality,
certifies the hereditarily set-like ones as :class:`Vset`, and provides the
constructive set theory constructions, bisimulation quotient and a
first-order evaluator with counting and truth-valued semantics.
"""

from .bisim import BisimReport, bisim, iterative_image, quotient
from .errors import (
    CodomainViolation,
    DomainMismatch,
    HFSetsError,
    LiteralError,
    NotSetLike,
    NotUnique,
    NoWitness,
    ResourceError,
    UnknownAxiom,
    limits,
)
from .mset import (
    EMPTY,
    children_of,
    count_in,
    enumerate_msets,
    from_json,
    meq,
    mk_bag,
    mk_sup,
    parse_literal,
    to_json,
    to_literal,
)
from .setops import (
    Witness,
    choice_function,
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
    strong_collection,
    subset_collection,
    union,
)
from .vset import (
    EMPTY_SET,
    Vset,
    elements,
    enumerate_vsets,
    image,
    is_itset,
    member,
    parse_set,
    rank,
    to_vset,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "EMPTY_SET",
    "BisimReport",
    "CodomainViolation",
    "DomainMismatch",
    "HFSetsError",
    "LiteralError",
    "NoWitness",
    "NotSetLike",
    "NotUnique",
    "ResourceError",
    "UnknownAxiom",
    "Vset",
    "Witness",
    "bisim",
    "children_of",
    "choice_function",
    "count_in",
    "elements",
    "empty",
    "enumerate_msets",
    "enumerate_vsets",
    "eps_induction",
    "exp",
    "from_json",
    "image",
    "is_fun",
    "is_itset",
    "iterative_image",
    "limits",
    "member",
    "meq",
    "mk_bag",
    "mk_sup",
    "nat",
    "ordered_pair",
    "pair_set",
    "parse_literal",
    "parse_set",
    "quotient",
    "rank",
    "replacement_fun",
    "replacement_rel",
    "separation",
    "strong_collection",
    "subset_collection",
    "to_json",
    "to_literal",
    "to_vset",
    "union",
]
