"""Semantic exception hierarchy for the searchlen package."""


class SearchlenError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SearchlenError, ValueError):
    """A model parameter is outside its domain or inconsistent."""


class CorpusError(SearchlenError):
    """Base class for corpus loading and consistency errors."""


class CorpusFormatError(CorpusError, ValueError):
    """A corpus or workload file is malformed; the message names the line."""


class EmptyCorpusError(CorpusError):
    """The input stream contained no documents."""


class UnknownLayerError(CorpusError, KeyError):
    """A named tag layer does not exist in the corpus."""


class EstimationError(SearchlenError):
    """A required parameter could not be estimated from the corpus."""


class NoRelevantError(SearchlenError):
    """The corpus contains no relevant documents, so ASL is undefined."""


class EmptyEvaluationError(SearchlenError):
    """Every workload query was excluded; the layer score is undefined."""
