"""Coverage by n disk agents that split a fixed total footprint."""

from .analysis import (
    expected_survivor_fraction,
    ideal_teleport_increment,
    initial_rate,
    optimal_n_linear,
)
from .coverage import CoverageGrid, cells_in_disk, coverage_percent, stamp_disk
from .dynamics import CollisionParams, FailureParams, collision_velocity_factor, failure_rate
from .engine import AgentState, ConfigError, RunResult, SimConfig, init_simulation, run, run_teleport, step
from .geometry import disk_overlap_area, radius_from_split, torus_delta, wrap_position
from .motion import VelocityProfile, WalkParams, sample_step_duration, sample_turn_angle, velocity

__version__ = "0.1.0"
