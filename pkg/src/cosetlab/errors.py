"""Exception types shared across the package."""

from __future__ import annotations


class CosetlabError(Exception):
    """Base class for errors raised by this package."""


class GroupSpecError(CosetlabError):
    """A group spec is structurally invalid (bad fields, bad JSON shape)."""


class NotAGroup(CosetlabError):
    """A multiplication table violates one of the group axioms."""


class OrderCapExceeded(CosetlabError):
    """A construction grew past the configured order cap."""


class UnknownFamily(CosetlabError):
    """A named-family string does not denote a supported family."""


class ParentMismatch(CosetlabError):
    """Operands belong to different parent groups."""


class EmptyCosetList(CosetlabError):
    """An operation that needs at least one coset got an empty list."""


class SubgroupCountCapExceeded(CosetlabError):
    """Subgroup enumeration found more subgroups than the configured cap."""


class CliqueCapExceeded(CosetlabError):
    """Candidate-clique enumeration visited more multisets than the cap."""


class CounterOverflow(CosetlabError):
    """A census counter left the unsigned 64-bit range."""


class CacheCorrupt(CosetlabError):
    """A cache file failed its checksum or shape checks."""


class ConsistencyError(CosetlabError):
    """Two independent computations of the same quantity disagree.

    This always indicates a bug in this package, never bad user input.
    """
