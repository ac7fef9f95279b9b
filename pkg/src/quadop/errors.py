"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: InputError -> 1, InternalCheckError -> 2.
Everything else is a plain bug and escapes as a normal traceback.
"""


class QuadopError(Exception):
    """Base class for errors raised deliberately by this package."""


class InputError(QuadopError):
    """Bad user input: unknown names, malformed relation text, bad operad
    files, out-of-window locality queries, non-involutive swap matrices and
    the like."""


class InternalCheckError(QuadopError):
    """A cross-validation the code performs on itself failed (for example the
    two Dong methods disagree, or the two black-product constructions differ).
    This never indicates bad input; it indicates a convention bug."""
