"""Exception types raised by the shocklab modules."""


class ShockLabError(Exception):
    """Base class for all shocklab errors."""


class FluxMismatch(ShockLabError):
    """Endpoint fluxes differ: no standing-wave connection exists."""


class NonLaxFlux(ShockLabError):
    """Characteristic speeds violate f'(u_plus) < 0 < f'(u_minus)."""


class NoConnection(ShockLabError):
    """Profile ODE has an interior rest point between the endpoint states."""


class TruncationTooSmall(ShockLabError):
    """Profile has not converged to its endpoint states at the grid edges."""


class TailUnderflow(ShockLabError):
    """Profile tails are below machine noise; no decay rate can be fit."""


class RescaleDegenerate(ShockLabError):
    """Genuine-nonlinearity coefficient vanishes; reduced flow undefined."""


class BranchPoint(ShockLabError):
    """lambda too close to a branch point of the spatial roots."""


class LambdaOutsideDomain(ShockLabError):
    """lambda outside the region where mode integration is defined."""


class StiffnessFailure(ShockLabError):
    """Conditioned mode integration overflowed."""


class AtEigenvalue(ShockLabError):
    """Evans function vanishes: resolvent quantities are singular."""


class OutsideLowFreqDisk(ShockLabError):
    """lambda outside the low-frequency disk of the pole expansion."""


class ZeroOnContour(ShockLabError):
    """Evans function vanishes on a winding contour sample."""


class PoleOnContour(ShockLabError):
    """Inverse-Laplace contour passes through a pole of the kernel."""


class QuadratureNotConverged(ShockLabError):
    """Adaptive contour quadrature failed to stabilize."""


class BlowUp(ShockLabError):
    """Time integration left the small-data regime."""


class KernelSingularity(ShockLabError):
    """Volterra quadrature hit the kernel singularity without endpoint care."""


class WindowTooShort(ShockLabError):
    """Requested fit window spans less than a decade."""


class ConfigError(ShockLabError):
    """Invalid experiment configuration."""

    def __init__(self, message: str, key: str | None = None):
        self.key = key
        super().__init__(message if key is None else f"{key}: {message}")


class IoError(ShockLabError):
    """Artifact could not be written."""
