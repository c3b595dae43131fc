"""jfy: logic-program semantics through justification graphs."""

from .branching import BranchEvaluation
from .errors import (
    ComplementTooLargeError,
    DefectDetectedError,
    EmptyBodyError,
    EmptyDomainError,
    JfyError,
    LogicalHeadError,
    NotDefinedError,
    NotGroundError,
    NotLocallyCompleteError,
    NotOpenError,
    NotSupportedError,
    OpenAsHeadError,
    ParseError,
    SearchSpaceTooLargeError,
    StartUnmappedError,
    TooManyOpensError,
    UnknownFactError,
)
from .explain import (
    AddQuery,
    Answer,
    Explanation,
    Retract,
    SessionState,
    decided,
    explain,
    export_dot,
    export_json,
    new_session,
    relevant_opens,
    session_step,
)
from .facts import (
    FALSE,
    INCONSISTENT,
    TRUE,
    UNKNOWN,
    Fact,
    Literal,
    Logical,
    Sign,
    SymbolTable,
    Value,
    fact_key,
    leq,
    negate,
    sign,
)
from .frame import (
    JustificationFrame,
    Rule,
    build_frame,
    complement,
    resolve_fact,
    resolve_open_assignment,
)
from .fuzz import fuzz_check, random_program
from .justification import (
    BranchPrefix,
    Justification,
    branch_values,
    enumerate_branch_prefixes,
    is_locally_complete,
    supports,
    supports_bruteforce,
)
from .program import Program, constants_of, ground, parse, pretty, to_frame
from .semantics import (
    extended_lfp,
    kk_model,
    opens_interpretation,
    stable_models,
    support_operator,
    supported_models,
    wf_model,
)

__version__ = "0.1.0"

__all__ = [
    "AddQuery",
    "Answer",
    "BranchEvaluation",
    "BranchPrefix",
    "ComplementTooLargeError",
    "DefectDetectedError",
    "EmptyBodyError",
    "EmptyDomainError",
    "Explanation",
    "FALSE",
    "Fact",
    "INCONSISTENT",
    "JfyError",
    "Justification",
    "JustificationFrame",
    "Literal",
    "Logical",
    "LogicalHeadError",
    "NotDefinedError",
    "NotGroundError",
    "NotLocallyCompleteError",
    "NotOpenError",
    "NotSupportedError",
    "OpenAsHeadError",
    "ParseError",
    "Program",
    "Retract",
    "Rule",
    "SearchSpaceTooLargeError",
    "SessionState",
    "Sign",
    "StartUnmappedError",
    "SymbolTable",
    "TRUE",
    "TooManyOpensError",
    "UNKNOWN",
    "UnknownFactError",
    "Value",
    "branch_values",
    "build_frame",
    "complement",
    "constants_of",
    "decided",
    "enumerate_branch_prefixes",
    "explain",
    "export_dot",
    "export_json",
    "extended_lfp",
    "fact_key",
    "fuzz_check",
    "ground",
    "is_locally_complete",
    "kk_model",
    "leq",
    "negate",
    "new_session",
    "opens_interpretation",
    "parse",
    "pretty",
    "random_program",
    "relevant_opens",
    "resolve_fact",
    "resolve_open_assignment",
    "session_step",
    "sign",
    "stable_models",
    "supported_models",
    "support_operator",
    "supports",
    "supports_bruteforce",
    "to_frame",
    "wf_model",
]
