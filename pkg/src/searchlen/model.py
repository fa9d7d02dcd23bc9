"""Closed-form performance model for single-term retrieval and filtering.

Documents are ranked by a single binary feature: whether they contain the
query term, optionally restricted to occurrences carrying the query's
part-of-speech tag. Under optimal ranking on that feature, the expected
position of a relevant document, the Average Search Length (ASL), is

    ASL = N/2 * (1 + t - p) + 1/2

where N is the collection size, t = Pr(document contains the term) and
p = Pr(document contains the term | document is relevant). The quantity
A = 1 + t - p is the query-dependent multiplier: A below 1 beats random
retrieval, A above 1 is worse than random.

Tagging replaces the feature "has the term" with "has the term carrying
the query tag". Writing tau for the tag rate among term documents and pi
for the tag rate among relevant term documents, the effective rates become
t*tau and p*pi, and the net change is captured by the tagging improvement
factor

    c = t*(1 - tau) - p*(1 - pi)

which is positive exactly when tagging lowers the ASL. Performance limits
follow from driving (tau, pi) to their extremes: asymptotically
N/2*(1 + t) + 1/2 >= ASL >= N/2*(1 - p) + 1/2, and, when the relevance
rate r is known, the attainable extremes tighten to
N/2*(1 + t - r*p) + 1/2 >= ASL >= N/2*(1 + r*p - p) + 1/2 because a
fraction r*p of the collection is relevant-and-term-bearing and cannot be
untagged away.

Everything in this module is a pure function of its arguments; there is no
shared state and all operations are safe to call concurrently.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from enum import Enum

from .errors import ParameterError

__all__ = [
    "CollectionParams",
    "TermParams",
    "TagParams",
    "Prediction",
    "Bounds",
    "BoundsKind",
    "Decision",
    "TaggingVerdict",
    "BreakEvenKind",
    "BreakEvenResult",
    "a_factor",
    "asl_untagged",
    "asl_positional",
    "asl_tagged",
    "tif",
    "verdict",
    "break_even_pi",
    "bounds_asymptotic",
    "bounds_exact",
    "feasibility_warnings",
]

_FEASIBILITY_SLACK = 1e-12


def _require_unit(name: str, value: float) -> None:
    # NaN fails both comparisons, so it is rejected here too.
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {value!r}")


@dataclass(frozen=True)
class CollectionParams:
    """Collection-level inputs: size and, optionally, the relevance rate.

    rel_rate (the proportion of relevant documents) is only consumed by
    the exact performance bounds; leave it None when unknown.
    """

    n_docs: int
    rel_rate: float | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n_docs, numbers.Integral) or isinstance(self.n_docs, bool):
            raise ParameterError(f"n_docs must be an integer, got {self.n_docs!r}")
        if self.n_docs < 1:
            raise ParameterError(f"n_docs must be >= 1, got {self.n_docs}")
        object.__setattr__(self, "n_docs", int(self.n_docs))
        if self.rel_rate is not None:
            _require_unit("rel_rate", self.rel_rate)


@dataclass(frozen=True)
class TermParams:
    """Per-term occurrence rates.

    t: probability that a document contains the query term.
    p: the same probability restricted to relevant documents.
    """

    t: float
    p: float

    def __post_init__(self) -> None:
        _require_unit("t", self.t)
        _require_unit("p", self.p)


@dataclass(frozen=True)
class TagParams:
    """Per-(term, tag) conditional tagging rates.

    tau: probability that a term-bearing document carries the query tag.
    pi: the same probability restricted to relevant term-bearing documents.
    """

    tau: float
    pi: float

    def __post_init__(self) -> None:
        _require_unit("tau", self.tau)
        _require_unit("pi", self.pi)


@dataclass(frozen=True)
class Prediction:
    """An ASL figure together with its multiplier: asl = n_docs/2 * a_factor + 1/2."""

    asl: float
    a_factor: float
    n_docs: int


class BoundsKind(Enum):
    ASYMPTOTIC = "asymptotic"
    EXACT = "exact"


@dataclass(frozen=True)
class Bounds:
    """Worst (upper) and best (lower) attainable ASL for a tagged search."""

    worst: float
    best: float
    kind: BoundsKind


class Decision(Enum):
    IMPROVES = "improves"
    DEGRADES = "degrades"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class TaggingVerdict:
    """Outcome of the tag-or-not decision for one (term, tag) pair.

    The identity asl_untagged - asl_tagged = n_docs/2 * tif holds by
    construction.
    """

    tif: float
    decision: Decision
    asl_untagged: float
    asl_tagged: float


class BreakEvenKind(Enum):
    VALUE = "value"
    ALWAYS_BENEFICIAL = "always"
    UNDEFINED = "undef"


@dataclass(frozen=True)
class BreakEvenResult:
    """Three-way result of the break-even computation.

    VALUE carries the unique pi at which tagging is performance-neutral.
    ALWAYS_BENEFICIAL means the improvement factor is positive for every
    pi in [0, 1] (no break-even point exists inside the unit interval).
    UNDEFINED means p = 0: no relevant document carries the term and the
    tagging decision is vacuous.
    """

    kind: BreakEvenKind
    pi: float | None = None

    @property
    def is_value(self) -> bool:
        return self.kind is BreakEvenKind.VALUE


def a_factor(term: TermParams) -> float:
    """Query-dependent ASL multiplier 1 + t - p, in [0, 2]."""
    return 1.0 + term.t - term.p


def asl_untagged(coll: CollectionParams, term: TermParams) -> Prediction:
    """Expected search length without tag information: N/2*(1 + t - p) + 1/2."""
    a = a_factor(term)
    return Prediction(asl=coll.n_docs / 2.0 * a + 0.5, a_factor=a, n_docs=coll.n_docs)


def asl_positional(coll: CollectionParams, term: TermParams) -> Prediction:
    """Expected search length computed from the two block midpoints directly.

    The term-bearing block of N*t documents has midpoint N*t/2 + 1/2 and
    holds relevant mass p; the remaining block has midpoint
    N*(1 - (1-t)/2) + 1/2 and holds relevant mass 1 - p. The relevant-mass
    weighted average is algebraically identical to asl_untagged; this
    function keeps the positional arithmetic as an independent path so the
    identity can be checked rather than assumed.
    """
    t, p = term.t, term.p
    weighted_mid = p * (t / 2.0) + (1.0 - p) * (1.0 - (1.0 - t) / 2.0)
    return Prediction(
        asl=coll.n_docs * weighted_mid + 0.5,
        a_factor=2.0 * weighted_mid,
        n_docs=coll.n_docs,
    )


def asl_tagged(coll: CollectionParams, term: TermParams, tag: TagParams) -> Prediction:
    """Expected search length when only tagged occurrences match.

    Tagging rescales the occurrence rates to (t*tau, p*pi), so this is
    asl_untagged evaluated at the effective term.
    """
    a = 1.0 + term.t * tag.tau - term.p * tag.pi
    return Prediction(asl=coll.n_docs / 2.0 * a + 0.5, a_factor=a, n_docs=coll.n_docs)


def tif(term: TermParams, tag: TagParams) -> float:
    """Tagging improvement factor c = t*(1 - tau) - p*(1 - pi).

    Positive values mean tagging reduces the ASL (improves filtering);
    negative values mean it hurts.
    """
    return term.t * (1.0 - tag.tau) - term.p * (1.0 - tag.pi)


def verdict(
    coll: CollectionParams,
    term: TermParams,
    tag: TagParams,
    tol: float = 0.0,
) -> TaggingVerdict:
    """Decide whether tagging helps, with a neutral band of width tol.

    tol widens the NEUTRAL zone around c = 0; it exists because estimated
    parameters are noisy. The default 0 is a strict sign test.
    """
    if not tol >= 0.0:
        raise ParameterError(f"tol must be >= 0, got {tol!r}")
    c = tif(term, tag)
    if c > tol:
        decision = Decision.IMPROVES
    elif c < -tol:
        decision = Decision.DEGRADES
    else:
        decision = Decision.NEUTRAL
    return TaggingVerdict(
        tif=c,
        decision=decision,
        asl_untagged=asl_untagged(coll, term).asl,
        asl_tagged=asl_tagged(coll, term, tag).asl,
    )


def break_even_pi(term: TermParams, tau: float) -> BreakEvenResult:
    """The pi at which tagging is exactly performance-neutral.

    Solving c = 0 for pi gives pi = 1 - t*(1 - tau)/p, the unique root;
    tagging improves performance above it and degrades below it. When
    t*(1 - tau) exceeds p the root falls below 0 and c is positive on the
    whole unit interval (ALWAYS_BENEFICIAL). When p = 0 the question is
    vacuous (UNDEFINED).
    """
    _require_unit("tau", tau)
    if term.p == 0.0:
        return BreakEvenResult(BreakEvenKind.UNDEFINED)
    residual = term.t * (1.0 - tau)
    if residual > term.p:
        return BreakEvenResult(BreakEvenKind.ALWAYS_BENEFICIAL)
    return BreakEvenResult(BreakEvenKind.VALUE, pi=1.0 - residual / term.p)


def bounds_asymptotic(coll: CollectionParams, term: TermParams) -> Bounds:
    """Large-collection performance limits of tagging.

    Worst case drives tau to 1 and pi to 0; best case drives tau to 0 and
    pi to 1, giving N/2*(1 + t) + 1/2 >= ASL >= N/2*(1 - p) + 1/2.
    """
    n = coll.n_docs
    return Bounds(
        worst=n / 2.0 * (1.0 + term.t) + 0.5,
        best=n / 2.0 * (1.0 - term.p) + 0.5,
        kind=BoundsKind.ASYMPTOTIC,
    )


def bounds_exact(coll: CollectionParams, term: TermParams) -> Bounds:
    """Attainable performance limits when the relevance rate r is known.

    A fraction r*p of all documents is both relevant and term-bearing, so
    tau cannot actually reach 0 (nor escape those documents when pushing
    toward the worst case); the extremes shift by r*p:

        N/2*(1 + t - r*p) + 1/2 >= ASL >= N/2*(1 + r*p - p) + 1/2

    As r*p approaches 0 (large collections, rare terms) these converge to
    the asymptotic bounds.
    """
    if coll.rel_rate is None:
        raise ParameterError("exact bounds require rel_rate on CollectionParams")
    n = coll.n_docs
    rp = coll.rel_rate * term.p
    return Bounds(
        worst=n / 2.0 * (1.0 + term.t - rp) + 0.5,
        best=n / 2.0 * (1.0 + rp - term.p) + 0.5,
        kind=BoundsKind.EXACT,
    )


def feasibility_warnings(
    coll: CollectionParams,
    term: TermParams,
    tag: TagParams | None = None,
) -> list[str]:
    """Advisory mixture-feasibility checks; returns human-readable messages.

    t is a mixture of the relevant and non-relevant occurrence rates, so
    p*r <= t <= p*r + (1 - r) must hold for empirically consistent inputs;
    the tagged analogue is pi*p*r <= tau*t <= pi*p*r + (1 - r). These are
    warnings rather than errors because parameter sweeps (break-even and
    mesh grids) deliberately cover the full unit square.
    """
    if coll.rel_rate is None:
        return []
    r = coll.rel_rate
    messages: list[str] = []
    lo = term.p * r
    hi = term.p * r + (1.0 - r)
    if not lo - _FEASIBILITY_SLACK <= term.t <= hi + _FEASIBILITY_SLACK:
        messages.append(
            f"infeasible mixture: t={term.t:g} outside [p*r, p*r + (1-r)] = "
            f"[{lo:g}, {hi:g}] for p={term.p:g}, r={r:g}"
        )
    if tag is not None:
        tagged_lo = tag.pi * term.p * r
        tagged_hi = tagged_lo + (1.0 - r)
        tagged_rate = tag.tau * term.t
        if not tagged_lo - _FEASIBILITY_SLACK <= tagged_rate <= tagged_hi + _FEASIBILITY_SLACK:
            messages.append(
                f"infeasible tagging mixture: tau*t={tagged_rate:g} outside "
                f"[pi*p*r, pi*p*r + (1-r)] = [{tagged_lo:g}, {tagged_hi:g}]"
            )
    return messages
