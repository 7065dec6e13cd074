"""Squeeze-operator composition as (2+1)-dimensional Lorentz kinematics."""
from .correspondence import (CorrespondencePair, MinkowskiVector,
                             adjoint_boost_from_squeeze, boost_product_rotation,
                             squeeze_to_velocity,
                             transform_event, velocity_addition_via_squeeze,
                             velocity_to_squeeze)
from .errors import (IllConditionedProjection, InvalidDimension, NonConvergence,
                     NotLorentz, SuperluminalInput)
from .experiment_sim import (FringeResult, TwoModeState, apply_two_mode_squeeze,
                             fringe_intensity,
                             fringe_peak, fringe_scan, nopa_pipeline,
                             prepare_beams, two_mode_squeeze_unitary)
from .fock_oracle import (FockOperator, TruncationReport, adjoint_action_matrix,
                          build_k_ops, build_ladder, check_composition_identity,
                          matrix_exp, rotation_unitary, squeeze_unitary,
                          unitarity_residual)
from .relativity import (METRIC, Boost3, BoostDecomposition, Velocity2, add_velocities,
                         boost_matrix_rapidity, boost_matrix_velocity,
                         boost_polar_decompose, galilean_limit_check, gamma,
                         gamma_compose)
from .squeeze_algebra import (BogoliubovMatrix, CompositionResult, SqueezeParam,
                              compose, compose_squeezes_closed_form,
                              polar_decompose, rotation_bogoliubov,
                              to_bogoliubov)

__version__ = "0.1.0"
