"""Dyson and Holstein-Primakoff boson realizations of U_q[sl(n+1)].

Thin convenience layer over the compiled ``_qboson`` extension: the main
operations return parsed JSON documents (plain dicts) matching the CLI
output.
"""

import json

try:
    from ._qboson import (
        __version__,
        analyze_json,
        build_json,
        canonical_relation,
        limit_json,
        oscillator_suite,
        standard_suite,
        verify_json,
    )
except ImportError:  # in-tree test layout: extension next to the package
    from _qboson import (
        __version__,
        analyze_json,
        build_json,
        canonical_relation,
        limit_json,
        oscillator_suite,
        standard_suite,
        verify_json,
    )

__all__ = [
    "__version__",
    "analyze",
    "analyze_json",
    "build",
    "build_json",
    "canonical_relation",
    "limit",
    "limit_json",
    "oscillator_suite",
    "standard_suite",
    "verify",
    "verify_json",
]


def build(kind, n, p, trunc, backend="exact", q=""):
    """Generator matrices, basis and metadata as a dict."""
    return json.loads(build_json(kind, n, str(p), trunc, backend, str(q)))


def verify(kind, n, p, trunc, backend="exact", q="", corpus=()):
    """Relation-suite report as a dict (defaults to the standard suite)."""
    return json.loads(
        verify_json(kind, n, str(p), trunc, backend, str(q), list(corpus))
    )


def analyze(
    kind,
    n,
    p,
    trunc,
    backend="exact",
    q="",
    weights=False,
    invariance=False,
    unitarity=False,
    irreducibility_probe=False,
):
    """Subspace / unitarity / irreducibility reports as a dict."""
    return json.loads(
        analyze_json(
            kind,
            n,
            str(p),
            trunc,
            backend,
            str(q),
            weights,
            invariance,
            unitarity,
            irreducibility_probe,
        )
    )


def limit(kind, n, p, trunc, backend="exact"):
    """Classical q -> 1 comparison report as a dict."""
    return json.loads(limit_json(kind, n, str(p), trunc, backend))
