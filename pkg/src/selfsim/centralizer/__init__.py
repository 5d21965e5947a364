"""Centralizers in depth-truncated iterated wreath products."""

from .cyclic import (
    CentralizerDescription,
    NormalForm,
    OrbitComponent,
    RigidLift,
    cyclic_centralizer,
    cyclic_exponents,
    normal_form_conjugator,
    normal_form_first_term,
    rigid_lift,
    stab1_count_check,
)
from .solver import (
    PairSolver,
    centralizer_levelwise,
    centralizer_projected,
    conjugator_unit_power,
    count_pairs,
    find_conjugator,
    solve_pairs,
    solver_for,
)
from .truncated import (
    BRUTE_GUARD,
    TruncatedGroup,
    ambient_size,
    centralizer_brute,
    generated,
)
from .verify import (
    choose_h,
    exponent_check,
    fix_check,
    layer_closed_centralizer,
    verify_fix,
    verify_centralizer_structure,
    verify_theorem_A,
    verify_theorem_B,
)

__all__ = [
    "BRUTE_GUARD",
    "CentralizerDescription",
    "NormalForm",
    "OrbitComponent",
    "PairSolver",
    "RigidLift",
    "TruncatedGroup",
    "ambient_size",
    "centralizer_brute",
    "centralizer_levelwise",
    "centralizer_projected",
    "choose_h",
    "conjugator_unit_power",
    "count_pairs",
    "cyclic_centralizer",
    "cyclic_exponents",
    "exponent_check",
    "find_conjugator",
    "fix_check",
    "generated",
    "layer_closed_centralizer",
    "normal_form_conjugator",
    "normal_form_first_term",
    "rigid_lift",
    "solve_pairs",
    "solver_for",
    "stab1_count_check",
    "verify_fix",
    "verify_centralizer_structure",
    "verify_theorem_A",
    "verify_theorem_B",
]
