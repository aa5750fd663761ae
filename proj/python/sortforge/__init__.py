"""Sorting by derivation: derived sorts, their laws and the check harness."""

import json

try:
    from . import _sortforge as _core
except ImportError:  # in-tree build, module sits next to the package
    import _sortforge as _core

ParseError = _core.ParseError
UnknownLawError = _core.UnknownLawError

ALGORITHMS = ("msort", "hsort", "qsort", "isort")
VARIANTS = ("spec", "fold", "hylo", "deforested")

sort = _core.sort
isort = _core.isort
merge = _core.merge
build_lt = _core.build_lt
build_h = _core.build_h
build_bst = _core.build_bst
is_heap = _core.is_heap
is_bst = _core.is_bst
law_ids = _core.law_ids
replay = _core.replay
counterexample = _core.counterexample


def check(laws=(), max_len=8, alphabet=4, random_cases=10_000, max_random_len=256, seed=0):
    """Run laws (all when empty) and return the JSON report as a dict."""
    text = _core.check_json(list(laws), max_len, alphabet, random_cases, max_random_len, seed)
    return json.loads(text)


__all__ = [
    "ALGORITHMS", "VARIANTS", "ParseError", "UnknownLawError", "build_bst", "build_h",
    "build_lt", "check", "counterexample", "is_bst", "is_heap", "isort", "law_ids", "merge",
    "replay", "sort",
]
