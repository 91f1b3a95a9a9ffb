"""Interpreter for certainty-weighted defeasible logic programs.

The heavy lifting happens in the compiled extension; this package re-exports
its operations. Programs are plain text in the `.pdelp` syntax, goals are
literals such as ``"engine_ok"`` or ``"~fuel_ok"``. Degrees are returned as
exact decimal strings so that equality comparisons stay exact.
"""

from ._pdelp import (
    __version__,
    arguments,
    canonical,
    check,
    max_degree,
    query,
    tree_dot,
    tree_json,
)

__all__ = [
    "__version__",
    "arguments",
    "canonical",
    "check",
    "max_degree",
    "query",
    "tree_dot",
    "tree_json",
]
