"""Exception hierarchy shared across the package."""


class SeopinionError(Exception):
    """Base class for all errors raised by this package."""


# -- ingestion --

class ParseError(SeopinionError):
    """A config or data file could not be parsed."""


class ValidationError(ParseError):
    """A file parsed but violates a structural rule (missing Title rule,
    invalid XPath expression, out-of-range score, ...)."""


class NoTitleError(SeopinionError):
    """The Title rule matched nothing; the page is not a product page."""


class UnknownSiteError(SeopinionError):
    """A page references a site_id with no loaded config."""


class SchemaError(SeopinionError):
    """A persisted file does not match its documented schema."""


# -- nlp --

class DimensionMismatch(SeopinionError):
    """Two vectors of different lengths were combined."""


class ZeroVector(SeopinionError):
    """Cosine similarity is undefined for a zero vector."""


# -- aspect hierarchy --

class EmptyAspectSet(SeopinionError):
    """Aspect selection produced no aspects to build a hierarchy from."""


# -- polarity --

class UntrainedModel(SeopinionError):
    """A model was asked to predict before being trained or loaded."""


class DegenerateData(SeopinionError):
    """A labelled dataset contains only one class."""


# -- evaluation --

class TooFewExamples(SeopinionError):
    """Not enough examples for the requested number of folds."""


# -- summarization --

class EmptyAspect(SeopinionError):
    """A rating was requested for an aspect with zero classified sentences."""
