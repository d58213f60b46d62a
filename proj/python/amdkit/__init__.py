"""Difference families and AMD-code games over finite abelian groups.

Thin re-export of the compiled extension; every function takes and returns
plain dicts/lists matching the CLI's JSON schemas, with probabilities as
exact "num/den" strings.
"""

from amdkit._core import (
    AmdkitError,
    __version__,
    classify,
    construct,
    diff_table,
    evaluate,
    from_family,
    relate,
    reproduce,
    search,
    sweep_sedf,
    to_family,
    verify,
)

__all__ = [
    "AmdkitError",
    "__version__",
    "classify",
    "construct",
    "diff_table",
    "evaluate",
    "from_family",
    "relate",
    "reproduce",
    "search",
    "sweep_sedf",
    "to_family",
    "verify",
]
