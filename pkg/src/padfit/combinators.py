"""Combinators that compose predicate families without explicit enumeration.

``simultaneously`` is the workhorse: it combines two families of
independent input groups into every pairwise union.  The remaining
combinators are the small building blocks (``no_input``, ``choose1``,
``at_most_1``, ``maybe``, ``combo``) that expressions are written in.

Algebra worth knowing (all tested): ``simultaneously`` is commutative and
associative, ``no_input`` is its identity and the empty family its
absorbing element, and it distributes over ``union_or``.
"""

from __future__ import annotations

from typing import Iterable

from .errors import EmptyChoice
from .universe import PredicateSet, Universe, same_universe


def simultaneously(p: PredicateSet, q: PredicateSet) -> PredicateSet:
    """All unions of one member of p with one member of q.

    Pairwise bitwise-OR product; quadratic in the family sizes, which is
    fine at controller scale.
    """
    same_universe(p.universe, q.universe)
    return PredicateSet(p.universe, tuple(r | s for r in p.members for s in q.members))


def union_or(p: PredicateSet, q: PredicateSet) -> PredicateSet:
    """Either family's combinations are acceptable."""
    same_universe(p.universe, q.universe)
    return PredicateSet(p.universe, p.members + q.members)


def no_input(u: Universe) -> PredicateSet:
    """The one-member family {∅}: nothing pressed."""
    return PredicateSet(u, (0,))


def choose1(u: Universe, names: Iterable[str]) -> PredicateSet:
    """Exactly one of the names is active."""
    words = tuple(u.bit(n) for n in names)
    if not words:
        raise EmptyChoice()
    return PredicateSet(u, words)


def at_most_1(u: Universe, names: Iterable[str]) -> PredicateSet:
    """Zero or one of the names is active."""
    return union_or(no_input(u), choose1(u, names))


def maybe(u: Universe, name: str) -> PredicateSet:
    """The name may be active or not, independent of everything else."""
    return PredicateSet(u, (0, u.bit(name)))


def combo(u: Universe, names: Iterable[str]) -> PredicateSet:
    """The single combination holding all names at once."""
    return PredicateSet(u, (u.word(names),))
