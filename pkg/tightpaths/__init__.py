"""Tight paths and tight pairs in weighted graphs, with closure-lattice tooling."""

__version__ = "1.0.0"

from tightpaths.closure import (  # noqa: F401
    basic_antecedents,
    mine_closures,
    to_log_weighted_dag,
)
from tightpaths.exceptions import TightPathsException  # noqa: F401
from tightpaths.graph import VertexWeightedDag, WeightedDigraph  # noqa: F401
from tightpaths.models import Path, TightPairSet, TightPathSet  # noqa: F401
from tightpaths.tighten import tight_pairs_via_tightening  # noqa: F401
from tightpaths.tightpair import all_tight_pairs  # noqa: F401
from tightpaths.tightpath import all_tight_paths  # noqa: F401
