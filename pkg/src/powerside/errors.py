"""Exception taxonomy shared by every module.

ValidationError subclasses signal bad inputs, configs, or physical
preconditions and map to CLI exit code 1; everything else that escapes is a
runtime failure (exit code 2).
"""


class PowersideError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(PowersideError):
    """Invalid argument, config, or input data."""


class FileMissingError(ValidationError):
    """Referenced input file does not exist."""


class MalformedWavError(ValidationError):
    """WAV container is truncated or structurally broken."""


class UnsupportedWavError(ValidationError):
    """WAV is well-formed but uses an encoding we refuse (not PCM16/float32)."""


class NegativeVoltageError(ValidationError):
    """Modulation parameters would drive the wire voltage to or below zero."""


class DegenerateTraceError(ValidationError):
    """Trace is constant (or empty) where variation is required."""


class DegenerateFeatureError(ValidationError):
    """Audio is silent; no usable feature can be extracted."""


class GeometryMismatchError(ValidationError):
    """Spectrogram/frame geometry of two operands does not agree."""


class DivergenceError(PowersideError):
    """Training produced a non-finite loss; carries diagnostics."""

    def __init__(self, message, epoch=None, batch=None, last_loss=None):
        super().__init__(message)
        self.epoch = epoch
        self.batch = batch
        self.last_loss = last_loss
