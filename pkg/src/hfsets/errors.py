"""Exception hierarchy and resource limits shared by every module."""

from dataclasses import dataclass


class HFSetsError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ResourceError(HFSetsError):
    """A configured size cap would be exceeded."""


class NotSetLike(HFSetsError):
    """A multiset is not hereditarily set-like.

    ``path`` lists the node ids from the offending root down to the first
    node that has a child with multiplicity greater than one.
    """

    def __init__(self, path, message=None):
        self.path = tuple(path)
        super().__init__(message or f"not set-like (violation at depth {len(self.path) - 1})")


class LiteralError(HFSetsError):
    def __init__(self, message, column):
        self.column = column
        super().__init__(f"{message} at column {column}")


class NoWitness(HFSetsError):
    def __init__(self, x):
        self.x = x
        super().__init__("no witness in the search fragment")


class NotUnique(HFSetsError):
    def __init__(self, x, y1, y2):
        self.x, self.y1, self.y2 = x, y1, y2
        super().__init__("witness is not unique in the search fragment")


class DomainMismatch(HFSetsError):
    pass


class CodomainViolation(HFSetsError):
    pass


class UnknownAxiom(HFSetsError):
    pass


@dataclass
class Limits:
    max_elements: int = 100_000
    max_count_digits: int = 10_000


limits = Limits()


def check_size(n, what="fragment", cap=None):
    cap = limits.max_elements if cap is None else cap
    if n > cap:
        raise ResourceError(f"{what} has {n} elements, cap is {cap}")
