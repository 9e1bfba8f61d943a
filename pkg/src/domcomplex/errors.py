"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed textual input. Carries the byte offset or line number of the fault."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class ContractError(ValueError):
    """An operation was called outside its precondition (e.g. on the void complex)."""


class EmbeddingError(AssertionError):
    """A claimed simplicial embedding failed; ``face`` is the offending domain face."""

    def __init__(self, message: str, face: int):
        super().__init__(message)
        self.face = face
