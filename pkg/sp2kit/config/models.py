"""Configuration models.

Defaults here are the single source of truth; ``config/default.yml`` repeats
them for discoverability and the library's keyword defaults match them.
"""

from dataclasses import dataclass, field, fields

from sp2kit.common.error import ConfigError


@dataclass(frozen=True)
class NumericsSettings:
    """Tolerances used by the matrix operations.

    Attributes:
        parabolic_tolerance: Half-trace band around 1 classified as parabolic.
        conditioning_band: Half-trace band flagged as near the class boundary.
        renormalize_interval: Squarings between determinant checks in the power oracle.
        drift_threshold: Determinant drift that triggers renormalization.
    """

    parabolic_tolerance: float = 1e-9
    conditioning_band: float = 1e-6
    renormalize_interval: int = 32
    drift_threshold: float = 1e-12


@dataclass(frozen=True)
class OscillatorSettings:
    quadrature_nodes: int = 64
    max_index: int = 12
    max_eta: float = 3.0


@dataclass(frozen=True)
class CliSettings:
    # looser than the library: decimal input rarely hits det = 1 exactly
    det_tolerance: float = 1e-8
    workers: int = 1


@dataclass(frozen=True)
class LoggingSettings:
    level: str = "warning"


@dataclass(frozen=True)
class Settings:
    """Top-level settings, one attribute per ``config/*.yml`` section."""

    numerics: NumericsSettings = field(default_factory=NumericsSettings)
    oscillator: OscillatorSettings = field(default_factory=OscillatorSettings)
    cli: CliSettings = field(default_factory=CliSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    def validate(self):
        """
        Check value ranges.

        Returns:
            The settings themselves, for chaining.

        Raises:
            ConfigError: If any tolerance or count is out of range.
        """
        for name in ("parabolic_tolerance", "conditioning_band", "drift_threshold"):
            value = getattr(self.numerics, name)
            if not 0.0 < value < 1.0:
                raise ConfigError("numerics tolerance must lie in (0, 1)", key=name, value=value)
        if self.numerics.renormalize_interval < 1:
            raise ConfigError("renormalize_interval must be positive",
                              value=self.numerics.renormalize_interval)
        if self.oscillator.quadrature_nodes < 8:
            raise ConfigError("quadrature_nodes must be at least 8",
                              value=self.oscillator.quadrature_nodes)
        if self.oscillator.max_index < 0 or self.oscillator.max_eta <= 0.0:
            raise ConfigError("oscillator range must be non-empty",
                              max_index=self.oscillator.max_index, max_eta=self.oscillator.max_eta)
        if not 0.0 < self.cli.det_tolerance < 1.0:
            raise ConfigError("cli det_tolerance must lie in (0, 1)", value=self.cli.det_tolerance)
        if self.cli.workers < 1:
            raise ConfigError("cli workers must be positive", value=self.cli.workers)
        return self


SECTIONS = {
    "numerics": NumericsSettings,
    "oscillator": OscillatorSettings,
    "cli": CliSettings,
    "logging": LoggingSettings,
}


def section_keys(section):
    """Return the field names and types of a settings section."""
    return {f.name: f.type for f in fields(SECTIONS[section])}
