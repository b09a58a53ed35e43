"""Exception types raised across pvlab."""


class PvlabError(Exception):
    """Base class for library errors."""


class NotInvertible(PvlabError, ValueError):
    pass


class PrincipalCharacter(PvlabError, ValueError):
    pass


class NotPrimitive(PvlabError, ValueError):
    pass


class EvenModulus(PvlabError, ValueError):
    pass


class WindowError(PvlabError, ValueError):
    """Invalid trapezoid window parameters."""


class SupportTooWide(WindowError):
    pass


class DegenerateRamp(WindowError):
    pass


class ZeroFrequency(PvlabError, ValueError):
    pass


class HypothesisViolated(PvlabError, ValueError):
    pass


class TooLarge(PvlabError, ValueError):
    pass


class DegenerateDesign(PvlabError, ValueError):
    pass


class ConfigError(PvlabError, ValueError):
    pass


class IoError(PvlabError, OSError):
    pass


class OutputExists(IoError):
    pass
