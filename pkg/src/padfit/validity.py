"""The validity check: can this controller, through this mapping, drive this game?

A triple is valid when every combination the game requires appears in the
controller's family after mapping.  ``check_triplet`` answers that and
says which requirements are uncovered; it also lists constants that no
mapping pair touches, which is usually the first thing to look at when a
triple fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UniverseMismatch
from .mapping import Mapping, map_predicate
from .universe import InputSet, PredicateSet, same_universe


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    missing: tuple[InputSet, ...]
    unmapped_sources: tuple[str, ...]
    unmapped_targets: tuple[str, ...]


def is_sub_predicate(p: PredicateSet, q: PredicateSet) -> bool:
    """True iff every member of p is a member of q (non-strict inclusion)."""
    same_universe(p.universe, q.universe)
    have = set(q.members)
    return all(w in have for w in p.members)


def uncovered_requirements(
    controller: PredicateSet, game: PredicateSet, m: Mapping
) -> list[InputSet]:
    """Game requirements absent from the mapped controller family, sorted."""
    if controller.universe != m.source:
        raise UniverseMismatch(m.source.name, controller.universe.name)
    if game.universe != m.target:
        raise UniverseMismatch(m.target.name, game.universe.name)
    reachable = set(map_predicate(controller, m).members)
    return [InputSet(game.universe, w) for w in game.members if w not in reachable]


def check_triplet(
    controller: PredicateSet, game: PredicateSet, m: Mapping
) -> ValidityReport:
    """Full report: validity, uncovered requirements, unmapped constants.

    Unmapped constants are warnings, not failures; the verdict depends only
    on requirement coverage.
    """
    missing = tuple(uncovered_requirements(controller, game, m))
    mapped_src = set(m.mapped_sources())
    mapped_tgt = set(m.mapped_targets())
    return ValidityReport(
        valid=not missing,
        missing=missing,
        unmapped_sources=tuple(c for c in m.source.constants if c not in mapped_src),
        unmapped_targets=tuple(c for c in m.target.constants if c not in mapped_tgt),
    )
