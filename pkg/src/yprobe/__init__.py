"""Pump-probe spectroscopy of coherently driven Y-type four-level atoms.

Simulates the weak-probe susceptibility, dispersion slopes and group
velocities, dressed-state population dynamics, and pump-coherence spectra
of a four-level atom whose excited doublet decays through shared vacuum
modes (decay-induced interference), plus the reduced three-level V system.
"""

from .params import (
    ParameterError,
    ProbeGrid,
    SystemKind,
    SystemParams,
    delta_from_delta1,
    delta1_from_delta,
    interference_parameter,
)
from .liouvillian import (
    LiouvillianSet,
    build_liouvillian,
    build_v_liouvillian,
    hermitian_reconstruct,
)
from .floquet import (
    FloquetSolution,
    ProbeResponse,
    SpectrumPoint,
    dispersion_slope,
    group_velocity_ratio,
    interference_sweep,
    probe_spectrum,
    pump_coherence_sweep,
    pump_population_sweep,
    solve_floquet,
    susceptibility,
)
from .dressed import (
    DressedState,
    GammaTable,
    coherence_from_populations,
    dressed_states,
    evolve_secular,
    gamma_table,
    pump_coherence_analytic,
    secular_steady_state,
)
from .oracle import TrajectoryConfig, demodulate, integrate_full
from .presets import PRESETS, get_preset

__version__ = "0.1.0"
