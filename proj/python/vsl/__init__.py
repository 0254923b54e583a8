"""VASS reachability, semilinear separators and the constructions around them."""

import json as _json

from ._vsl import (  # noqa: F401
    SCHEMA_VERSION,
    Vass,
    VslError,
    bezout_nonneg,
    build_un,
    build_vn,
    contains,
    fire,
    is_separator,
    minimal_separators,
    modification_loops,
    modify_vass,
    pump,
    replay,
    toy_slope,
    zero_run_path,
    zero_set,
    zero_test_gadget,
)
from . import _vsl


def shortest_run(vass, s, t, norm_bound=100, max_length=None, prune_dead=True):
    """Bounded BFS; returns the JSON report as a dict (verdict, witness, stats)."""
    return _json.loads(_vsl._shortest_run(vass, s, t, norm_bound, max_length, prune_dead))


def decide(vass, s, t, max_run_length=64, max_separator_size=4, parallel=False):
    """Alternate run and separator search; verdict is RunFound, SeparatorFound or Undecided."""
    return _json.loads(_vsl._decide(vass, s, t, max_run_length, max_separator_size, parallel))


def check_thm_simple(vass, s, t, q, a, delta, norm_bound=50):
    return _json.loads(_vsl._check_thm_simple(vass, s, t, q, a, delta, norm_bound))
