from .flipgraph import DEFAULT_LIMIT, enumerate_all, iter_triangulations
from .local import VisibilityForest, delete_point, insert_point, visibility_forest
from .oracle import MAX_ORACLE_N, brute_force_oracle
from .polygon import NotSimple, count_polygon_triangulations, polygon_triangulations
from .result import EnumerationError, EnumerationResult, LimitExceeded, TooLarge
from .subsets import MAX_SUBSET_V, subset_triangulation_count

__all__ = [
    "DEFAULT_LIMIT", "MAX_ORACLE_N", "MAX_SUBSET_V", "EnumerationError", "EnumerationResult",
    "LimitExceeded", "NotSimple", "TooLarge", "VisibilityForest", "brute_force_oracle",
    "count_polygon_triangulations", "delete_point", "enumerate_all", "insert_point",
    "iter_triangulations", "polygon_triangulations", "subset_triangulation_count",
    "visibility_forest",
]
