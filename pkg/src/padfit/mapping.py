"""Many-to-many button-to-action mappings and the predicate transform.

A :class:`Mapping` relates constants of a source universe (controller
inputs) to constants of a target universe (game actions).  One button may
drive several actions, several buttons may drive one action, and a button
may be mapped to nothing at all.  ``map_input_set`` pushes one combination
through the relation; ``map_predicate`` pushes a whole family.

Unmapped source constants contribute nothing to the image.  That is the
intended semantics, but it is also how broken configurations lose actions
silently, so the validity layer reports unmapped constants separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import SameUniverse, UniverseMismatch, UnknownConstant
from .universe import InputSet, PredicateSet, Universe


@dataclass(frozen=True)
class Mapping:
    """A deduplicated set of (source constant -> target constant) pairs."""

    source: Universe
    target: Universe
    pairs: tuple[tuple[str, str], ...]
    # bit i of the source -> OR of the target bits it drives
    _bit_targets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise SameUniverse(self.source.name)
        targets = [0] * len(self.source)
        seen: set[tuple[str, str]] = set()
        for src, tgt in self.pairs:
            if src not in self.source:
                raise UnknownConstant(src, side="source")
            if tgt not in self.target:
                raise UnknownConstant(tgt, side="target")
            seen.add((src, tgt))
            targets[self.source.index(src)] |= self.target.bit(tgt)
        canon = tuple(
            sorted(seen, key=lambda p: (self.source.index(p[0]), self.target.index(p[1])))
        )
        object.__setattr__(self, "pairs", canon)
        object.__setattr__(self, "_bit_targets", tuple(targets))

    def mapped_sources(self) -> tuple[str, ...]:
        """Source constants that appear in at least one pair, in universe order."""
        used = {src for src, _ in self.pairs}
        return tuple(c for c in self.source.constants if c in used)

    def mapped_targets(self) -> tuple[str, ...]:
        """Target constants that appear in at least one pair, in universe order."""
        used = {tgt for _, tgt in self.pairs}
        return tuple(c for c in self.target.constants if c in used)


def new_mapping(
    source: Universe, target: Universe, pairs: Iterable[tuple[str, str]]
) -> Mapping:
    """Create a mapping; an empty pair list is legal (everything unmapped)."""
    return Mapping(source, target, tuple(pairs))


def map_input_set(x: InputSet, m: Mapping) -> InputSet:
    """Union of the targets of every constant held in x."""
    if x.universe != m.source:
        raise UniverseMismatch(m.source.name, x.universe.name)
    return InputSet(m.target, _map_word(x.bits, m))


def map_predicate(p: PredicateSet, m: Mapping) -> PredicateSet:
    """Image of a whole family; distinct members may collapse together."""
    if p.universe != m.source:
        raise UniverseMismatch(m.source.name, p.universe.name)
    return PredicateSet(m.target, tuple(_map_word(w, m) for w in p.members))


def _map_word(bits: int, m: Mapping) -> int:
    out = 0
    while bits:
        low = bits & -bits
        out |= m._bit_targets[low.bit_length() - 1]
        bits ^= low
    return out
