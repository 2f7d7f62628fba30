"""Exact-arithmetic toolkit for social welfare functions on ranked ballots.

Rankings are strings like ``"c1>c2>c3"`` (top candidate first), weak orders
allow ties (``"c1=c2>c3"``), and candidates are named ``c1..ck`` (1-based in
every API). Rationals are exact and travel as strings like ``"19/31"``.
Relative profiles over three candidates are four coordinates in the order
``(a2, a1, a-1, a-2)``. Profiles may be passed as dicts or JSON strings:
``{"k": 3, "weights": {"c1>c2>c3": "19/31", ...}}``.
"""

import json as _json

from swfcheck import _core
from swfcheck._core import (
    GuardError,
    IncompatError,
    ParseError,
    all_rankings,
    all_weak_orders,
    borda_diff,
    condorcet_ballot,
    full_ballot,
    gap,
    is_consistent,
    is_increasing,
    is_intermediate,
    is_separable,
    majorizes,
    maskin_g,
    promotes,
    rel_of_order,
    relative_ballot,
    rho,
)

__all__ = [
    "GuardError", "IncompatError", "ParseError",
    "all_rankings", "all_weak_orders", "borda_diff", "check_axiom",
    "check_prm_random", "classify_cc", "condorcet_ballot",
    "disagreement_search", "evaluate", "full_ballot", "gap", "is_consistent",
    "is_increasing", "is_intermediate", "is_separable", "ivm_bracket_maskin",
    "majorizes", "maskin_G", "maskin_g", "normalize_profile",
    "numberline_solutions", "pairwise_differential", "project", "promotes",
    "rel_of_order", "relative_ballot", "rho", "tau", "weakly_borda_witness",
]


def _profile_arg(profile):
    if isinstance(profile, dict):
        return _json.dumps(profile)
    return profile


def evaluate(rule, profile):
    """Weak-order result of a rule on a profile, e.g. ``"c1>c2=c3"``."""
    return _core.evaluate(rule, _profile_arg(profile))


def pairwise_differential(rule, profile, i, j):
    """Exact score differential for (ci, cj), or None for unscored rules."""
    return _core.pairwise_differential(rule, _profile_arg(profile), i, j)


def project(profile, i, j):
    """Gap distribution of a profile for the pair (ci, cj)."""
    return _core.project(_profile_arg(profile), i, j)


def maskin_G(profile, i, X="2"):
    """Full interaction score of candidate ci on a normalized profile."""
    return _core.maskin_G(_profile_arg(profile), i, X)


def tau(votes):
    """Count profile (as a dict) of a list of ranking strings."""
    return _json.loads(_core.tau(votes))


def normalize_profile(profile):
    """Rescale a profile dict/JSON so the weights total 1."""
    return _json.loads(_core.normalize_profile(_profile_arg(profile)))


def check_axiom(rule, ballot, n, axiom):
    """Run one axiom check; returns the report as a dict."""
    return _json.loads(_core.check_axiom(rule, ballot, n, axiom))


def check_prm_random(rule, pairs=10000, seed=1):
    """Profile-level monotonicity on a deterministic random pair stream."""
    return _json.loads(_core.check_prm_random(rule, pairs, seed))


def classify_cc(n, pareto=False, pr=False):
    """Surviving cycle-ballot rules as a list of dicts."""
    return _json.loads(_core.classify_cc(n, pareto, pr))


def numberline_solutions(l, m):
    """Consistent verdict tables on {0..l} for triple sum m."""
    return _json.loads(_core.numberline_solutions(l, m))


def disagreement_search(n, X="2"):
    """First integer witness where the interaction rule opposes Borda."""
    found = _core.disagreement_search(n, X)
    return None if found is None else _json.loads(found)


def ivm_bracket_maskin(lo, hi, X="2", width="1/4294967296"):
    """Exact zero or sign-change bracket on the shift path from lo to hi."""
    return _json.loads(_core.ivm_bracket_maskin(lo, hi, X, width))


def weakly_borda_witness(rule, w, profiles):
    """First profile/pair where a decisive Borda verdict is contradicted."""
    profiles = [_profile_arg(p) for p in profiles]
    found = _core.weakly_borda_witness(rule, w, profiles)
    return None if found is None else _json.loads(found)
