"""Exact simplicial homology, covers, nerves, and nerve-theorem checks.

Thin wrapper over the compiled core.  Report-producing functions return
plain dicts (decoded from the core's JSON) so results are easy to inspect,
assert on, or serialize.
"""

import json as _json

from ._core import (
    Cover,
    CoverError,
    MetricSpace,
    ParseError,
    SimplicialComplex,
    TheoremFalsified,
    dowker_pair,
    facet_cover,
    g_chain_map,
    intersection,
    metric_from_coordinates as _metric_from_coordinates,
    metric_from_distances as _metric_from_distances,
    nerve,
    rank,
    snf as _snf,
    star_cover,
    vietoris_rips as _vietoris_rips,
)
from ._core import (
    check_hypotheses_json as _check_hypotheses_json,
    check_theorem_json as _check_theorem_json,
    homology_json as _homology_json,
)

__all__ = [
    "Cover",
    "CoverError",
    "MetricSpace",
    "ParseError",
    "SimplicialComplex",
    "TheoremFalsified",
    "check_hypotheses",
    "check_theorem",
    "complex_of",
    "dowker_pair",
    "facet_cover",
    "g_chain_map",
    "homology",
    "intersection",
    "metric_from_coordinates",
    "metric_from_distances",
    "nerve",
    "rank",
    "snf",
    "star_cover",
    "vietoris_rips",
]


def complex_of(simplices):
    """Downward closure of ``simplices`` (iterables of vertex labels)."""
    return SimplicialComplex.closure([[str(v) for v in s] for s in simplices])


def snf(matrix):
    """Invariant factors of an integer matrix, as Python ints."""
    return [int(f) for f in _snf(matrix)]


def homology(complex, coeff="z", reduced=False):
    """Homology of a complex, one dict per degree 0..dim.

    ``coeff`` is ``"z"`` (integers), ``"q"`` (rationals), or ``"p:<prime>"``.
    Each entry has ``degree``, ``free_rank``, and ``torsion`` (a list of
    prime-power orders; always empty over a field).
    """
    return _json.loads(_homology_json(complex, coeff, reduced))


def check_hypotheses(cover, k):
    """Acyclicity hypotheses at level ``k``; dict with ``passed`` and
    ``violations`` (each naming the intersection, degree, and group)."""
    return _json.loads(_check_hypotheses_json(cover, k))


def check_theorem(cover, k, trace=False):
    """Full nerve-theorem check at level ``k``.

    Informational when the hypotheses fail.  When they hold, raises
    TheoremFalsified if a conclusion is violated (which would indicate a
    bug, not mathematics).  With ``trace`` the report includes the
    spectral-sequence bottom row, the comparison maps, and their ranks.
    """
    return _json.loads(_check_theorem_json(cover, k, trace))


def metric_from_coordinates(points, labels=None):
    """Finite metric space from exact rational coordinates.

    Coordinates may be ints, or strings like ``"3/2"`` or ``"1.25"``;
    floats are rejected to keep the computation exact.
    """
    return _metric_from_coordinates([[_exact(c) for c in p] for p in points])


def metric_from_distances(distances, labels=None):
    """Finite metric space from an exact symmetric distance matrix."""
    rows = [[_exact(c) for c in row] for row in distances]
    return _metric_from_distances(rows, list(labels or []))


def vietoris_rips(space, r, max_dim):
    """Vietoris complex at scale ``r`` (sets of diameter < r), truncated
    to ``max_dim``.  ``r`` is exact: an int or a rational string."""
    return _vietoris_rips(space, _exact(r), max_dim)


def _exact(value):
    if isinstance(value, float):
        raise TypeError(
            "floats are inexact; pass an int or a rational string like '3/2'"
        )
    return str(value)
