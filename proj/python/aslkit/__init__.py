"""Python access to the aslkit poset and straightening checks.

Poset arguments and results use the same JSON document format as the
``aslcheck`` command line tool; the helpers here accept and return dicts.
"""

import json

from . import _aslkit
from ._aslkit import AslkitError, __version__

__all__ = [
    "AslkitError",
    "__version__",
    "h_poset",
    "is_distributive",
    "msl_report",
    "rank3_veronese",
    "run",
    "zigzag",
]


def _dump(poset):
    return poset if isinstance(poset, str) else json.dumps(poset)


def run(*args):
    """Run aslcheck with the given arguments; returns (code, stdout, stderr)."""
    return _aslkit.run([str(a) for a in args])


def h_poset(n, d):
    return json.loads(_aslkit.h_poset(n, d))


def zigzag(poset, d):
    return json.loads(_aslkit.zigzag(_dump(poset), d))


def rank3_veronese(poset, d, force=False):
    return json.loads(_aslkit.rank3_veronese(_dump(poset), d, force))


def is_distributive(poset):
    return _aslkit.is_distributive(_dump(poset))


def msl_report(n, d, j, seed=1, field="fp:32003", max_m=2):
    return json.loads(_aslkit.msl_report(n, d, j, seed, field, max_m))
