"""The propositional view of predicate families.

Every family has an equivalent formula in disjunctive normal form: one
minterm per accepted combination, with a positive literal for each held
constant and a negative literal for each absent one.  A :class:`Cube` is
one conjunction, stored as a pair of words: ``care_mask`` says which
variables appear, ``values`` gives their polarities; bits outside the
care mask are don't-cares.  A full-care cube is a minterm and names
exactly one input combination.

``qm_prime_implicants`` and ``qm_minimize`` implement the classic
merge-and-cover minimization: cubes identical except for one care bit's
polarity merge into a cube without that bit, cubes that never merge are
prime, and a cover is picked from the primes (essentials first, then
greedy).  Minimality of the cube count is not guaranteed, equivalence is.

``check_via_dnf`` is the formula-side validity check: a game requirement
assigns every variable, so satisfiability of its conjunction with the
controller formula reduces to some cube covering the requirement's word.
Both routes, this one and the set inclusion in :mod:`padfit.validity`,
always agree; the test suite leans on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .universe import InputSet, PredicateSet, Universe, same_universe


@dataclass(frozen=True)
class Cube:
    """One conjunction with don't-cares, as (care_mask, values) words."""

    universe: Universe
    care_mask: int
    values: int

    def __post_init__(self) -> None:
        if self.care_mask & ~self.universe.mask:
            raise ValueError("care mask outside the universe")
        if self.values & ~self.care_mask:
            raise ValueError("values set outside the care mask")

    def key(self) -> tuple[int, int]:
        """Canonical sort key for cubes of one universe."""
        return (self.care_mask, self.values)

    def __str__(self) -> str:
        return format_cube(self)


@dataclass(frozen=True)
class Dnf:
    """A disjunction of cubes, canonically ordered; no cubes means false."""

    universe: Universe
    cubes: tuple[Cube, ...]

    def __post_init__(self) -> None:
        for c in self.cubes:
            same_universe(c.universe, self.universe)
        canon = tuple(sorted(set(self.cubes), key=Cube.key))
        object.__setattr__(self, "cubes", canon)

    def __len__(self) -> int:
        return len(self.cubes)

    def __str__(self) -> str:
        return format_dnf(self)


def predicate_to_dnf(p: PredicateSet) -> Dnf:
    """One full minterm per member of the family."""
    full = p.universe.mask
    return Dnf(p.universe, tuple(Cube(p.universe, full, w) for w in p.members))


def dnf_to_predicate(d: Dnf) -> PredicateSet:
    """All satisfying assignments: each cube's don't-cares expanded both ways."""
    u = d.universe
    words: set[int] = set()
    for c in d.cubes:
        free = u.mask & ~c.care_mask
        sub = free
        while True:
            words.add(c.values | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return PredicateSet(u, tuple(words))


def cube_covers(c: Cube, x: InputSet) -> bool:
    """Does the assignment written as x satisfy the conjunction c?"""
    same_universe(c.universe, x.universe)
    return (x.bits & c.care_mask) == c.values


def check_via_dnf(game: PredicateSet, mapped_controller: Dnf) -> bool:
    """Formula-side validity: every requirement word satisfies some cube."""
    same_universe(game.universe, mapped_controller.universe)
    cubes = [(c.care_mask, c.values) for c in mapped_controller.cubes]
    return all(any((w & care) == values for care, values in cubes) for w in game.members)


def qm_prime_implicants(minterms: Sequence[InputSet]) -> list[Cube]:
    """All prime implicants of the function whose on-set is exactly ``minterms``.

    Iteratively merges cube pairs that share a care mask and differ in one
    care bit; anything never merged is prime.  There is no external
    don't-care set: the function is fully specified by its on-set.
    """
    if not minterms:
        return []
    u = minterms[0].universe
    for x in minterms[1:]:
        same_universe(x.universe, u)
    primes = _prime_words(u.mask, {x.bits for x in minterms})
    cubes = [Cube(u, care, values) for care, values in primes]
    cubes.sort(key=Cube.key)
    return cubes


def _prime_words(full_mask: int, on_set: set[int]) -> set[tuple[int, int]]:
    # tables[mask] = set of value words; work from full care masks downward
    pending: dict[int, set[int]] = {full_mask: set(on_set)}
    primes: set[tuple[int, int]] = set()
    while pending:
        mask = max(pending, key=_popcount)
        table = pending.pop(mask)
        merged: set[int] = set()
        for v in table:
            bit = mask
            while bit:
                low = bit & -bit
                if v ^ low in table:
                    merged.add(v)
                    pending.setdefault(mask ^ low, set()).add(v & ~low)
                bit ^= low
        primes.update((mask, v) for v in table - merged)
    return primes


def _popcount(word: int) -> int:
    return bin(word).count("1")


def qm_minimize(d: Dnf) -> Dnf:
    """An equivalent Dnf covering the same assignments with prime implicants.

    Essential primes (sole cover of some minterm) are taken first, the rest
    of the on-set is covered greedily by the prime covering the most still
    uncovered minterms, ties broken by canonical cube order.
    """
    on = dnf_to_predicate(d).members
    if not on:
        return Dnf(d.universe, ())
    primes = qm_prime_implicants([InputSet(d.universe, w) for w in on])
    covers = {
        c: frozenset(w for w in on if (w & c.care_mask) == c.values) for c in primes
    }

    chosen: list[Cube] = []
    covered: set[int] = set()
    for w in on:
        candidates = [c for c in primes if (w & c.care_mask) == c.values]
        if len(candidates) == 1 and candidates[0] not in chosen:
            chosen.append(candidates[0])
            covered |= covers[candidates[0]]

    uncovered = [w for w in on if w not in covered]
    while uncovered:
        best = max(
            primes,
            key=lambda c: (len(covers[c] & set(uncovered)), [-k for k in c.key()]),
        )
        chosen.append(best)
        covered |= covers[best]
        uncovered = [w for w in uncovered if w not in covered]
    return Dnf(d.universe, tuple(chosen))


def format_cube(c: Cube) -> str:
    """Render a conjunction: literals joined by " & ", "!" for negation."""
    parts = []
    for i, name in enumerate(c.universe.constants):
        bit = 1 << i
        if c.care_mask & bit:
            parts.append(name if c.values & bit else "!" + name)
    return " & ".join(parts) if parts else "true"


def format_dnf(d: Dnf) -> str:
    """Render a formula: cubes in canonical order joined by " | "."""
    if not d.cubes:
        return "false"
    return " | ".join(format_cube(c) for c in d.cubes)
