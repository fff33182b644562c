"""Exception types raised across the package.

All errors derive from :class:`PadfitError` so callers can catch the whole
family at once (the CLI does exactly that and turns them into exit code 2).
Errors raised while reading a ``.pad`` file carry a 1-based ``line`` and
``column`` where that is meaningful.
"""


class PadfitError(Exception):
    """Base class for all padfit errors."""


class InvalidIdentifier(PadfitError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"invalid identifier {name!r}")


class DuplicateConstant(PadfitError):
    def __init__(self, name: str, line: int | None = None):
        self.name = name
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate constant {name!r}{at}")


class EmptyUniverse(PadfitError):
    def __init__(self) -> None:
        super().__init__("a universe needs at least one constant")


class UniverseTooLarge(PadfitError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"universe has {count} constants, limit is 64")


class UnknownConstant(PadfitError):
    def __init__(
        self,
        name: str,
        side: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ):
        self.name = name
        self.side = side
        self.line = line
        self.column = column
        where = f" on the {side} side" if side else ""
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown constant {name!r}{where}{at}")


class UniverseMismatch(PadfitError):
    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"expected a value over universe {expected!r}, got {got!r}")


class SameUniverse(PadfitError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"mapping source and target are the same universe {name!r}")


class EmptyChoice(PadfitError):
    def __init__(self) -> None:
        super().__init__("choose1 of an empty list is ambiguous; pass at least one name")


class ArityMismatch(PadfitError):
    def __init__(self, what: str, expected: int, got: int, line: int | None = None):
        self.what = what
        self.expected = expected
        self.got = got
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"{what} takes {expected} names, got {got}{at}")


class OverlappingParts(PadfitError):
    def __init__(self, names: tuple[str, ...]):
        self.names = names
        listed = ", ".join(names)
        super().__init__(f"component parts overlap on: {listed}")


class DuplicateName(PadfitError):
    def __init__(self, name: str, line: int | None = None):
        self.name = name
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate block name {name!r}{at}")


class UnknownReference(PadfitError):
    def __init__(self, mapping: str, name: str, line: int | None = None):
        self.mapping = mapping
        self.name = name
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"mapping {mapping!r} references unknown block {name!r}{at}")


class PadSyntaxError(PadfitError):
    """A lexical or grammatical error in a ``.pad`` document."""

    def __init__(self, line: int, column: int, expected: str):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"{line}:{column}: expected {expected}")
