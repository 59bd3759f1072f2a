# Stanley module - Profondeur de Stanley par partitions en intervalles
from .characteristic import CapTooSmall, CharacteristicPoset, Side, characteristic_poset, default_cap
from .decomposition import (
    IntervalPartition,
    InvalidPartition,
    PartitionDiagnostics,
    StanleyDecomposition,
    partition_to_stanley_decomposition,
    verify_partition,
)
from .search import SearchBudget, exists_partition_with_min_rho, max_feasible_k
from .sdepth import SdepthResult, checked_result, sdepth, sdepth_of_poset, spdim

__all__ = [
    "CapTooSmall", "CharacteristicPoset", "Side", "characteristic_poset", "default_cap",
    "IntervalPartition", "InvalidPartition", "PartitionDiagnostics", "StanleyDecomposition",
    "partition_to_stanley_decomposition", "verify_partition",
    "SearchBudget", "exists_partition_with_min_rho", "max_feasible_k",
    "SdepthResult", "checked_result", "sdepth", "sdepth_of_poset", "spdim",
]
