"""Exception hierarchy shared by every module in the package."""


class PartitionLogicError(Exception):
    """Base class for all errors raised by partlogic."""


class PartitionError(PartitionLogicError, ValueError):
    pass


class OverlapError(PartitionError):
    pass


class EmptyBlockError(PartitionError):
    pass


class CoverageError(PartitionError):
    pass


class UniverseMismatchError(PartitionLogicError, ValueError):
    pass


class CapExceededError(PartitionLogicError):
    pass


class TableError(PartitionLogicError, ValueError):
    pass


class LengthError(TableError):
    pass


class CharacterError(TableError):
    pass


class ArityMismatchError(PartitionLogicError, ValueError):
    pass


class ArityError(ArityMismatchError):
    """Generic application written with the wrong number of arguments."""


class FormulaSyntaxError(PartitionLogicError):
    """Raised by the formula parser; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnboundVariableError(PartitionLogicError, KeyError):
    def __str__(self) -> str:
        return f"unbound variable {self.args[0]!r}"


class MethodUnsupportedError(PartitionLogicError):
    pass


class VariableCapError(PartitionLogicError):
    pass


class VariableError(PartitionLogicError, ValueError):
    pass


class NotInCoreError(PartitionLogicError, ValueError):
    pass
