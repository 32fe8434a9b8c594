"""Split-step pseudospectral / Lax-Wendroff solver for the deep-water Saut-Xu system."""
from .errors import (CflViolation, GridMismatch, InsufficientPoints, InvalidParam,
                     NoConvergence, NonFinite, ParseError, SautXuError, SymmetryViolation,
                     UnknownKind, ValidationError)
from .model import (Bathymetry, PhysicalParams, Tendency, WaveState, dispersive_rhs,
                    from_tilde, make_bathymetry, make_initial, to_tilde, transport_speeds)
from .spectral import Grid
from .stepping import (Diagnostics, StepConfig, cfl_dt, dispersive_step, lie_step, run,
                       transport_step)

__version__ = "0.1.0"
