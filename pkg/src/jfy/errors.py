"""Exception types raised across the engine.

Grouped here so the CLI and HTTP layers can map them to exit codes and
status codes in one place.
"""


class JfyError(Exception):
    """Base class for every engine-level error."""


class FrameError(JfyError):
    """Invalid rule set handed to the frame builder."""


class EmptyBodyError(FrameError):
    pass


class LogicalHeadError(FrameError):
    pass


class NotDefinedError(FrameError):
    """An operation asked about a fact the frame does not define."""


class ComplementTooLargeError(FrameError):
    """Complementing a head would exceed the dual-body budget."""

    def __init__(self, head: str, required: int, cap: int):
        super().__init__(
            f"complementing {head} needs {required} dual bodies (cap {cap})"
        )
        self.head = head
        self.required = required
        self.cap = cap


class ParseError(JfyError):
    """Source text rejected by the rule-language parser.

    ``errors`` holds (line, column, message) triples, 1-based, one per
    recovered syntax error.
    """

    def __init__(self, errors):
        self.errors = tuple(errors)
        lines = "; ".join(f"{ln}:{col}: {msg}" for ln, col, msg in self.errors)
        super().__init__(lines or "parse error")


class EmptyDomainError(JfyError):
    """Grounding a program with variables but no constants to bind them."""


class NotGroundError(JfyError):
    """A program with variables reached a stage requiring ground rules."""


class OpenAsHeadError(JfyError):
    """A rule head uses a predicate declared open."""


class StartUnmappedError(JfyError):
    """Asked about a justification from a fact it assigns no rule."""


class NotLocallyCompleteError(JfyError):
    """A reachable defined fact has no chosen rule."""


class SearchSpaceTooLargeError(JfyError):
    """Justification search exceeded its step budget."""


class DefectDetectedError(JfyError):
    """A fact and its negation were both supported."""

    def __init__(self, facts):
        self.facts = tuple(facts)
        super().__init__(
            "defect: supported together with negation: " + ", ".join(self.facts)
        )


class NotSupportedError(JfyError):
    """Asked to explain a fact the interpretation does not support."""


class TooManyOpensError(JfyError):
    """Decision procedure refused: too many unanswered opens to sweep."""


class NotOpenError(JfyError):
    """An answer targeted a fact that is not a positive open of the frame."""


class UnknownFactError(JfyError):
    """A fact name does not resolve against the frame's vocabulary."""
