"""Colour circle graphs given as interval overlap systems.

Thin wrapper around the native module: document-shaped results come back as
parsed dicts, scalar queries as plain values. Interval systems are dicts of
the form ``{"intervals": [{"id": ..., "left": ..., "right": ...}, ...]}``
with arbitrary real endpoints.
"""

import json as _json

from ._circlepaint import CirclePaintError, InvalidInput  # noqa: F401
from ._circlepaint import color_bound, exact_chi as _exact_chi, omega as _omega
from ._circlepaint import color as _color
from ._circlepaint import gen_lower as _gen_lower
from ._circlepaint import gen_random as _gen_random
from ._circlepaint import verify as _verify

__all__ = [
    "CirclePaintError",
    "InvalidInput",
    "color",
    "color_bound",
    "exact_chi",
    "gen_lower",
    "gen_random",
    "omega",
    "verify",
]


def _dumps(system):
    return system if isinstance(system, str) else _json.dumps(system)


def color(system, assert_bounds=False):
    """Colour a system; returns the colouring document as a dict."""
    return _json.loads(_color(_dumps(system), assert_bounds))


def omega(system):
    """Clique number of the overlap graph."""
    return _omega(_dumps(system))


def verify(system, colors):
    """True iff ``colors`` is a complete proper colouring of ``system``.

    ``colors`` may be a colouring document, a bare id->colour dict, or JSON
    text of either.
    """
    return _verify(_dumps(system), _dumps(colors))


def exact_chi(system, budget=10_000_000):
    """Exact chromatic number (branch and bound, ``budget`` search nodes)."""
    return _exact_chi(_dumps(system), budget)


def gen_lower(n, omega, verify=False, brute_limit=64):
    """Chord diagram with chromatic number far above its clique number."""
    return _json.loads(_gen_lower(n, omega, verify, brute_limit))


def gen_random(m, seed=1):
    """Uniformly random interval system with ``m`` intervals."""
    return _json.loads(_gen_random(m, seed))
