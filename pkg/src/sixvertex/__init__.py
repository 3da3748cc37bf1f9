"""Six-vertex transfer matrices and Q-operators from quantum-group data.

Builds the model's R-matrix, monodromy and L-operator cells over explicit
representation matrices, assembles polynomial-normalized transfer matrices
and Q-operators, solves the Bethe equations, and verifies the functional
relations (commutativity, TQ, Wronskian, factorization, TT fusion) at desk
scale.
"""

from .bethe import BetheState, bethe_residual, bethe_solve, bethe_solve_all, eigenvalue_lambda, theta_check
from .errors import (
    BudgetExceeded,
    DivergentSeries,
    NoConvergence,
    PoleCollision,
    RegimeError,
    RepMismatch,
    SingularTwist,
)
from .operators import (
    OperatorCell,
    PERM4,
    assemble_cell,
    boxtimes,
    chain_trace,
    l_cell,
    monodromy_cell,
    r_matrix,
    r_matrix_factored,
    r_variants,
    twist_image,
    twist_matrix,
)
from .params import ChainSpec, ModelParams, SpectralPoint
from .qkernel import (
    casimir_image,
    lambda2,
    lambda_rep,
    qnum,
    qpow,
    trace_finite_monomial,
    trace_verma_monomial,
    weights,
)
from .relations import (
    RelationRecord,
    partition_bruteforce,
    partition_transfer,
    run_suite,
)
from .reps import RepMatrices, rep_finite, rep_fock, rep_verma
from .transfer import SpinOperator, cmat, qop_p, sector_indices, spin_matrix, transfer_p

__version__ = "0.1.0"
