"""Partitions, constrained enumeration and the statistics used by the checks."""
from .constraint import (
    UNRESTRICTED,
    Constraint,
    count,
    counts,
    enumerate_partitions,
    iter_partitions,
    pm_class,
)
from .partition import Partition, diff, slice_parts, slice_pm, staircase, union
from .special import (
    b3_count,
    b3_star_count,
    c_pair_count,
    is_b3_member,
    is_mk_member,
    is_xia_zhao_member,
    special_count,
    special_names,
    u_set_count,
)
from .stats import PartitionStats, durfee_height, mex, mex_mod, modular_rows, statistics

enumerate = enumerate_partitions  # noqa: A001  (the module-level name callers expect)

__all__ = [name for name in dir() if not name.startswith("_")]
