"""Exception hierarchy shared across the package.

Each class maps to one CLI exit code so shell callers can distinguish
configuration mistakes from bad input data from degenerate datasets.
"""


class AggrokitError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ConfigError(AggrokitError):
    """Invalid, missing, or unknown configuration. Exit code 2."""

    exit_code = 2


class DataFormatError(AggrokitError):
    """Malformed input data: bad JSON, arity mismatches, duplicate ids. Exit code 3."""

    exit_code = 3


class DegenerateDataError(AggrokitError):
    """Structurally valid data the algorithms cannot use: single-class labels,
    empty vocabulary, empty corpus. Exit code 4."""

    exit_code = 4
