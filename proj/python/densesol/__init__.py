"""Finite groups, subgroup lattices and dense solitary subgroups."""

from ._core import (
    DEFAULT_ORDER_CAP,
    Group,
    GroupError,
    OrderCapExceeded,
    ZmError,
    ZmParams,
    are_isomorphic,
    classify_group,
    classify_zm,
    cyclic,
    density,
    density_report,
    dihedral,
    direct_product,
    from_spec,
    is_normal,
    lattice_report,
    quaternion,
    solitary_subgroups,
    subgroups,
    verify,
    zm_group,
    zm_info,
    zm_triples,
)

__all__ = [
    "DEFAULT_ORDER_CAP",
    "Group",
    "GroupError",
    "OrderCapExceeded",
    "ZmError",
    "ZmParams",
    "are_isomorphic",
    "classify_group",
    "classify_zm",
    "cyclic",
    "density",
    "density_report",
    "dihedral",
    "direct_product",
    "from_spec",
    "is_normal",
    "lattice_report",
    "quaternion",
    "solitary_subgroups",
    "subgroups",
    "verify",
    "zm_group",
    "zm_info",
    "zm_triples",
]
