"""Exception types shared across the toolkit."""


class KiteOptError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class SingularConfiguration(KiteOptError):
    """Kinematic map is singular (gimbal lock, zenith position, ...)."""

    code = "singular_configuration"


class InvalidAltitude(KiteOptError):
    """Altitude at or below the roughness length; wind profile undefined."""

    code = "invalid_altitude"


class DegenerateAirspeed(KiteOptError):
    """Apparent velocity has (near) zero axial component."""

    code = "degenerate_airspeed"


class InvalidSurfaceKind(KiteOptError):
    """Unsupported (surface, coefficient kind) pair."""

    code = "invalid_surface_kind"


class NonPositiveTension(KiteOptError):
    """Winch model requires strictly positive tether tension."""

    code = "non_positive_tension"


class NonPositiveLength(KiteOptError):
    """Tether length must be strictly positive."""

    code = "non_positive_length"


class DegeneratePosition(KiteOptError):
    """Aircraft position too close to the winch origin."""

    code = "degenerate_position"


class DegenerateGeometry(KiteOptError):
    """Velocity and position nearly parallel; attitude frame undefined."""

    code = "degenerate_geometry"


class SlackSegment(KiteOptError):
    """Tension lost in a tether segment during the recursion."""

    code = "slack_segment"


class NoConvergence(KiteOptError):
    """Iterative solve failed to converge within its iteration budget."""

    code = "no_convergence"


class SingularJacobian(KiteOptError):
    """Jacobian condition number beyond the trustable range."""

    code = "singular_jacobian"


class DimensionMismatch(KiteOptError):
    """Vector length inconsistent with the documented layout."""

    code = "dimension_mismatch"


class ConfigError(KiteOptError):
    """Configuration file invalid (schema, types, unknown keys, values)."""

    code = "config_error"


class MeshMismatch(KiteOptError):
    """Two runs were produced on different meshes/paths and cannot be compared."""

    code = "mesh_mismatch"


class EvaluationError(KiteOptError):
    """Model evaluation failed at a trial point (wraps domain errors)."""

    code = "evaluation_error"


class LinearAlgebraFailure(KiteOptError):
    """KKT system remained singular beyond the regularization budget."""

    code = "linear_algebra_failure"


class StageFailure(KiteOptError):
    """A homotopy stage did not reach an optimal point."""

    code = "stage_failure"

    def __init__(self, stage_index, stage_tag, report):
        super().__init__(f"homotopy stage {stage_index} ({stage_tag}) failed: {report.status}")
        self.stage_index = stage_index
        self.stage_tag = stage_tag
        self.report = report
