"""Three-state coined quantum walk on the Cayley graph of the dihedral group.

Layers:

- `dihedral`: exact group arithmetic and the vertex codec
- `walk`:     real-space engine (states, coins, steps, distributions)
- `spectral`: momentum-space blocks, eigensystems, long-time limits
- `oracle`:   independent dense reference operator
- `cli`:      reproducible experiment runner and presets
"""

from .dihedral import (
    DihedralParams,
    Generator,
    GroupElement,
    apply_generator_left,
    cayley_neighbors,
    decode_vertex,
    encode_vertex,
    inverse,
    multiply,
)
from .oracle import build_dense_unitary, oracle_evolve, oracle_time_average
from .spectral import (
    AnalyticEigenvalues,
    EigenSystem,
    FourierBlock,
    FourierState,
    analytic_eigenvalues,
    dtft_forward,
    dtft_inverse,
    evolve_fourier,
    limiting_distribution,
    limiting_profile,
    limiting_return_probability_theorem1,
    momentum_block,
    momentum_blocks,
    numeric_eigensystem,
)
from .walk import (
    CoinOperator,
    Distribution,
    InitialCoinState,
    WalkerState,
    dft_coin,
    evolve,
    grover_coin,
    initial_state,
    position_distribution,
    step,
    superposition_state,
    time_averaged_distribution,
)

__version__ = "0.1.0"
