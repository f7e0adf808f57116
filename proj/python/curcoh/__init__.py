"""Cohomology of current algebras: truncated Chevalley-Eilenberg complexes,
affine Weyl predictions, first cyclic homology and Ext between simple modules."""

from ._curcoh import (
    InvariantViolation,
    cohomology,
    detM,
    ext1,
    ext2_report,
    ext2_sl2_twopoint,
    gl_predict,
    hc1_Cf_cutoff,
    hc1_cutoff,
    hc1_finite,
    root_system_info,
    self_ext2_sl2,
    suite_names,
    table1,
    tensor_decompose,
    verify,
    weyl_dim,
)

__all__ = [
    "InvariantViolation",
    "cohomology",
    "detM",
    "ext1",
    "ext2_report",
    "ext2_sl2_twopoint",
    "gl_predict",
    "hc1_Cf_cutoff",
    "hc1_cutoff",
    "hc1_finite",
    "root_system_info",
    "self_ext2_sl2",
    "suite_names",
    "table1",
    "tensor_decompose",
    "verify",
    "weyl_dim",
]
