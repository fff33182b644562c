"""Named constant universes and the bit-word encoding of input combinations.

A :class:`Universe` names the digital inputs of one controller, or the
in-game actions of one game.  Constant *i* in declaration order owns bit
*i*, so any simultaneous combination of constants is a single unsigned
word (:class:`InputSet`) and a predicate over combinations is the sorted
family of words it accepts (:class:`PredicateSet`).  Everything here is
immutable; operations build new values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    DuplicateConstant,
    EmptyUniverse,
    InvalidIdentifier,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownConstant,
)

WORD_WIDTH = 64

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Universe:
    """An ordered set of named constants, each bound to its list position."""

    name: str
    constants: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.constants:
            raise EmptyUniverse()
        if len(self.constants) > WORD_WIDTH:
            raise UniverseTooLarge(len(self.constants))
        index: dict[str, int] = {}
        for i, name in enumerate(self.constants):
            if not _IDENT_RE.match(name):
                raise InvalidIdentifier(name)
            if name in index:
                raise DuplicateConstant(name)
            index[name] = i
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.constants)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownConstant(name) from None

    def bit(self, name: str) -> int:
        return 1 << self.index(name)

    @property
    def mask(self) -> int:
        """Word with one bit per constant, all set."""
        return (1 << len(self.constants)) - 1

    def word(self, names: Iterable[str]) -> int:
        """OR together the bits of the given constants; duplicates are idempotent."""
        bits = 0
        for name in names:
            bits |= self.bit(name)
        return bits

    def names(self, word: int) -> tuple[str, ...]:
        """Decode a bit word back into constant names, in universe order."""
        return tuple(c for i, c in enumerate(self.constants) if word >> i & 1)

    def format_word(self, word: int) -> str:
        """Render a bit word as ``{a, b}``, names in universe order."""
        return "{" + ", ".join(self.names(word)) + "}"


@dataclass(frozen=True)
class InputSet:
    """One simultaneous combination of constants, as a bit word."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits & ~self.universe.mask:
            raise ValueError(f"bit word {self.bits:#x} outside universe {self.universe.name!r}")

    def names(self) -> tuple[str, ...]:
        return self.universe.names(self.bits)

    def __str__(self) -> str:
        return self.universe.format_word(self.bits)


@dataclass(frozen=True)
class PredicateSet:
    """The canonical family of input combinations a predicate accepts.

    Members are kept sorted ascending with duplicates removed, so two
    families over the same universe are equal iff their member tuples are.
    The empty family is the always-false predicate.
    """

    universe: Universe
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted(set(self.members)))
        if canon and canon[-1] & ~self.universe.mask:
            raise UnknownConstant(f"bit {canon[-1].bit_length() - 1}")
        if canon and canon[0] < 0:
            raise ValueError("negative bit word")
        object.__setattr__(self, "members", canon)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, word: int) -> bool:
        return word in set(self.members)

    def sets(self) -> tuple[InputSet, ...]:
        return tuple(InputSet(self.universe, w) for w in self.members)

    def support(self) -> int:
        """OR of all members: every constant that appears somewhere."""
        bits = 0
        for w in self.members:
            bits |= w
        return bits


def new_universe(name: str, constants: Iterable[str]) -> Universe:
    """Create a universe; constant i in ``constants`` occupies bit i."""
    return Universe(name, tuple(constants))


def input_set(u: Universe, names: Iterable[str]) -> InputSet:
    """The combination holding exactly ``names`` at once."""
    return InputSet(u, u.word(names))


def predicate_from_sets(u: Universe, sets: Iterable[Iterable[str]]) -> PredicateSet:
    """Build a predicate family by listing its accepted combinations explicitly."""
    return PredicateSet(u, tuple(u.word(names) for names in sets))


def same_universe(a: Universe, b: Universe) -> None:
    """Raise UniverseMismatch unless a and b are the same universe."""
    if a != b:
        raise UniverseMismatch(a.name, b.name)
