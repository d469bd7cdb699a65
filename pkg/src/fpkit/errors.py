"""Exception hierarchy shared across fpkit.

The CLI maps these onto exit codes: configuration problems exit 2,
violated preconditions of the normal-closure theorem exit 3, and
anything signalling an internal inconsistency exits 4.
"""


class FpkitError(Exception):
    """Base class for every error raised by fpkit."""


class ConfigError(FpkitError):
    """Malformed input: tables, words, config files."""


class GroupTableError(ConfigError):
    pass


class NotAssociative(GroupTableError):
    def __init__(self, x: int, y: int, z: int):
        self.triple = (x, y, z)
        super().__init__(f"table is not associative at ({x}, {y}, {z})")


class NoIdentity(GroupTableError):
    def __init__(self):
        super().__init__("table has no two-sided identity")


class NoInverse(GroupTableError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class NotASubgroup(ConfigError):
    pass


class NotNormal(ConfigError):
    def __init__(self, g: int, n: int):
        self.witness = (g, n)
        super().__init__(f"subgroup is not normal: conjugating {n} by {g} leaves it")


class IndexOutOfRange(ConfigError):
    pass


class WordSyntaxError(ConfigError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class FamilyMismatch(FpkitError):
    pass


class SeedMismatch(FpkitError):
    """A report was combined with a projection over a different family."""


class PreconditionError(FpkitError):
    """Input is well-formed but outside the theorem's hypotheses."""


class TrivialN(PreconditionError):
    pass


class TrivialFactor(PreconditionError):
    pass


class InvariantBreach(FpkitError):
    """A computed object failed a property it must have; indicates a bug."""
