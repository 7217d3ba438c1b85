"""Exception types raised across the package."""


class SpectralignError(ValueError):
    """Base class; every error here is a bad-input error."""


class SequenceSizeError(SpectralignError):
    pass


class SequenceParseError(SpectralignError):
    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"invalid symbol {text[position]!r} at index {position}")


class MalformedAlignmentError(SpectralignError):
    pass


class PowerRangeError(SpectralignError):
    def __init__(self, value: float, channel: int | None = None):
        self.value = value
        self.channel = channel
        where = f" on channel {channel}" if channel is not None else ""
        super().__init__(f"power {value!r}{where} outside [0, 4]")


class ScenarioParseError(SpectralignError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class StepError(SpectralignError):
    """A domain error raised while running one simulation step."""

    def __init__(self, step: int, cause: Exception):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step}: {cause}")
