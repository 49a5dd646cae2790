"""Fast closed-form RIS beam-pattern synthesis via linear-phase 2-D FIR design."""
from .angles import (
    FrequencyGridSpec,
    OmegaPoint,
    angle_to_omega,
    build_grid,
    omega_to_angle,
    validate_spacing,
)
from .baseline import design_baseline
from .errors import RisBeamError, SingularIncidenceError, SpecError
from .evaluation import beam_pattern, cross_section, normalized_tse, tse
from .geometry import (
    Direction,
    RisConfig,
    incident_phase_sum,
    incident_unit_vector,
    observation_unit_vector,
    unit_position,
)
from .pattern import (
    CircleSpot,
    CustomSpot,
    DesiredPattern,
    FrequencyGrid,
    RectSpot,
    evaluate_desired,
    load_spec,
    reference_inputs,
    reference_pattern,
    parse_spec,
    sample_to_grid,
)
from .quantization import QuantizationConfig, quantize
from .synthesis import (
    CoefficientMatrix,
    DesignReport,
    derotate_and_truncate,
    design,
    design_direct,
    design_fast,
    extract_reflection,
    hermitian_complete,
    ifft2,
    modulate_linear_phase,
)

__version__ = "0.1.0"
