"""Phase-covariant qubit channels and their performance measures."""
from .channel import (
    ChannelParams,
    apply,
    check_covariance,
    invariant_state,
    mix_unital_nonunital,
    non_unitality,
    validate_cp,
)
from .entanglement import (
    concurrence_closed,
    concurrence_spectral,
    entanglement_of_formation,
    evolve_one_sided,
    maximally_entangled,
)
from .linalg import QubitState, bloch_to_state, fidelity_qubit, state_overlap
from .measures import (
    f_max_closed,
    f_min_closed,
    fidelity_on_pure,
    measure_report,
    nu2_squared_closed,
    nu_inf_bloch,
    nu_inf_paper,
    nu_p_general,
)

__version__ = "0.1.0"
