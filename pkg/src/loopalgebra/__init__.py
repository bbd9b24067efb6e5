"""loopalgebra: exact mod-2 homology of free infinite loop spaces.

Computes, over the two-element field, the homology of Q_0(Y+) for Y a
point, BO(1) or BO(2), the boundary maps relating them to the infinite
loop spaces of the Madsen-Tillmann spectra MTO(1) and MTO(2), and the
resulting generator counts and graded dimensions for the stable
non-orientable mapping class group.  Everything is integer/bit arithmetic;
no floating point.
"""

from .f2 import F2Matrix, binom_mod2, free_commutative_dims, kernel_basis
from .dyer_lashof import (
    adem_pair,
    compose_and_normalize,
    degree,
    excess,
    is_admissible,
    normalize,
)
from .loop_homology import (
    BaseClass,
    QGenerator,
    Resolution,
    Space,
    admissible_sequences,
    base_basis,
    dim_base,
    eval_unstable,
    q_generators,
    sq_lower,
    verify_bo2_basis,
)
from .hopf import (
    DEFAULT_TRUNCATION,
    HopfElement,
    Monomial,
    TensorElement,
    TruncationError,
    antipode,
    coproduct,
    counit,
    from_base,
    project_indecomposables,
    q_apply,
    q_of_base,
    unit,
)
from .boundary_maps import (
    DegreeRank,
    GradedMatrix,
    KernelMembershipError,
    RankTable,
    VGen,
    act_Q,
    check_surjectivity,
    dbar_matrix,
    dpartial_matrix,
    indecomposable_ambient,
    partial0,
    partial_full,
    rank_table,
    to_v_coords,
    v_basis,
    v_gen,
    v_symbol,
    verify_ak_theorem,
)

__version__ = "0.1.0"
