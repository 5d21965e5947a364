"""Virtual-endomorphism data for free abelian groups and the self-similar groups they induce."""

from .data import (
    DEFAULT_INDEX_BOUND,
    CoreResult,
    GDataSpec,
    Orbit,
    adding_data,
    check,
    contraction_certificate,
    double_adding_data,
    f_core,
    format_gdata,
    induced_representation,
    is_recurrent,
    is_strongly_recurrent,
    parse_gdata,
    random_gdata,
    represent,
    strong_domains,
)
from .family import (
    IndexMapFamily,
    commutation_check,
    delta_invariance_check,
    family_data,
    independence_check,
    realize,
    theorem_c_family,
)
from .lattice import (
    Lattice,
    VirtualEndo,
    hnf,
    image,
    index,
    intersect,
    kernel_lattice,
    left_kernel,
    member,
    preimage,
)

__all__ = [
    "DEFAULT_INDEX_BOUND",
    "CoreResult",
    "GDataSpec",
    "IndexMapFamily",
    "Lattice",
    "Orbit",
    "VirtualEndo",
    "adding_data",
    "check",
    "commutation_check",
    "contraction_certificate",
    "delta_invariance_check",
    "double_adding_data",
    "f_core",
    "family_data",
    "format_gdata",
    "hnf",
    "image",
    "independence_check",
    "index",
    "induced_representation",
    "intersect",
    "is_recurrent",
    "is_strongly_recurrent",
    "kernel_lattice",
    "left_kernel",
    "member",
    "parse_gdata",
    "preimage",
    "random_gdata",
    "realize",
    "represent",
    "strong_domains",
    "theorem_c_family",
]
