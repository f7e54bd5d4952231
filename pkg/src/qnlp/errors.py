"""Exception types shared across the workbench.

Plain ``ValueError`` is used for bad arguments; the classes here mark
conditions the CLI maps to distinct exit codes or that callers are
expected to catch by name.
"""


class FormatError(ValueError):
    """A file or stream does not match its declared schema."""


class UnclassifiableTextError(ValueError):
    """A phrase contains no recognized vocabulary and cannot be scored."""


class SubgraphGrowthError(RuntimeError):
    """Seed expansion exhausted the frontier before reaching the node budget."""


class GenerationError(RuntimeError):
    """Sampling rejected too many draws to produce the requested phrases."""
