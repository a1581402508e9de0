"""
Error types shared by every module
"""


class SteklovError(ValueError):
    """Base class for contract violations in the toolkit"""


class GridError(SteklovError):
    """Invalid time or space grid"""


class FieldError(SteklovError):
    """Field values that break the data model (non-finite, wrong length, bad index)"""


class FieldFormatError(FieldError):
    """Malformed field manifest or payload on disk"""


class WindowError(SteklovError):
    """Averaging window that does not fit the grid"""


class ExponentError(SteklovError):
    """Norm exponent outside [1, inf]"""


class ConvergenceError(SteklovError):
    """Not enough usable points for a convergence study"""


class ConfigError(SteklovError):
    """Invalid run configuration"""


class CorpusError(SteklovError):
    """Corpus entry parameter outside its documented range"""


class ReportError(SteklovError):
    """Report that cannot be produced (nothing to report, unknown format)"""
