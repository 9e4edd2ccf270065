"""Hypermap polynomials on graph-encoded hypermaps (gehms)."""

from .core import (
    ColoredCycle,
    Gehm,
    GehmError,
    GehmStats,
    bipartition,
    canonical_form,
    components,
    cycles,
    dumps,
    equivalent,
    euler_genus,
    hyperedge_degrees,
    hyperedges,
    is_orientable,
    isolate,
    loads,
    relabel,
    stats,
    triple_edge,
)
from .invariants import (
    GuardExceeded,
    RankData,
    count_spanning_hypertrees,
    dichromatic,
    dichromatic_delcon,
    dichromatic_multivariate,
    evaluate_tutte,
    is_hyperforest,
    is_hypertree,
    rank_data,
    tutte,
    tutte_delcon,
    tutte_from_dichromatic,
)
from .ops import (
    DUAL,
    IDENTITY,
    TRIAL,
    contract,
    delete,
    disjoint_union,
    dual,
    join,
    partial_dual,
    recolor,
    restrict,
    trial,
)
from .poly import MultiPoly, expand_xy
