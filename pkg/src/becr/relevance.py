"""Per-concept relevance scores: the BECR index and extensional stability.

All scores are carried as exact ``fractions.Fraction`` values; callers
convert to float at output boundaries only.

BECR of a concept (A, B) is the mean of two terms.  The alpha term counts
base attributes of B (attributes whose removal, together with their removal
set, changes the closure) or, when there are none, attributes equivalent on
the concept (m' = A with a non-singleton closure).  The beta term rates the
minimal-generator family H of B: several generators score min(|H| / |B|, 1),
a single proper generator scores 1 / |B|, and H = {B} scores 0.

Stability is the fraction of intent subsets whose extent equals A, counted
by full enumeration over the 2^|B| subsets (no shortcut: supersets of a
qualifying subset need not qualify, and the count is exact by contract).
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .context import AttrSet, FormalContext, iter_bits
from .generators import IntentTooLarge, minimal_generators
from .lattice import ConceptLattice, FormalConcept

MAX_STABILITY_INTENT = 30
MAX_ORACLE_INTENT = 20

_ZERO = Fraction(0)
_ONE = Fraction(1)

# scores repeat heavily across the concepts of one context; memoizing the
# (numerator, denominator) -> Fraction construction keeps the scoring loop
# off the normalization path
_frac = lru_cache(maxsize=None)(Fraction)


class BaseRule(Enum):
    """Removal-set rule used by the base-attribute predicate.

    WORKED_EXAMPLE removes m together with the intent members whose extent
    is strictly smaller than m'.  LITERAL_NON_STRICT removes every y in B
    with y' a subset of m' (m included, since m' ⊆ m').
    """

    WORKED_EXAMPLE = "worked-example"
    LITERAL_NON_STRICT = "literal"


class AttributeNotInIntent(ValueError):
    """The queried attribute is not a member of the concept's intent."""


class BecrBreakdown(NamedTuple):
    alpha: Fraction
    beta: Fraction
    becr: Fraction
    base_attributes: AttrSet        # alpha witnesses; at most one of these
    equivalent_attributes: AttrSet  # two masks is non-zero
    generator_count: int


class StabilityScore(NamedTuple):
    numerator: int
    denominator: int  # always 2^|B|

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def _require_member(concept: FormalConcept, m: int) -> None:
    if m < 0 or not concept.intent >> m & 1:
        raise AttributeNotInIntent(f"attribute index {m} is not in the intent")


def _removal_set(
    ctx: FormalContext, concept: FormalConcept, m: int, rule: BaseRule
) -> AttrSet:
    m_extent = ctx.cols[m]
    removed = 1 << m
    for y in iter_bits(concept.intent):
        y_extent = ctx.cols[y]
        if (y_extent & ~m_extent) == 0:  # y' ⊆ m'
            if rule is BaseRule.LITERAL_NON_STRICT or y_extent != m_extent:
                removed |= 1 << y
    return removed


def is_base_attribute(
    ctx: FormalContext,
    concept: FormalConcept,
    m: int,
    rule: BaseRule = BaseRule.WORKED_EXAMPLE,
) -> bool:
    """True when m falls out of the closure of B minus its removal set.

    Membership test m ∈ X'' is equivalent to X' ⊆ m', which saves the second
    derivation.
    """
    _require_member(concept, m)
    rest = concept.intent & ~_removal_set(ctx, concept, m, rule)
    return bool(ctx.derive_extent(rest) & ~ctx.cols[m])


def is_extremal_attribute(
    ctx: FormalContext, concept: FormalConcept, m: int
) -> bool:
    """True when m falls out of the closure of B minus {y in B | y' = m'}."""
    _require_member(concept, m)
    m_extent = ctx.cols[m]
    same = 0
    for y in iter_bits(concept.intent):
        if ctx.cols[y] == m_extent:
            same |= 1 << y
    rest = concept.intent & ~same
    return bool(ctx.derive_extent(rest) & ~m_extent)


def equivalent_attributes(ctx: FormalContext, concept: FormalConcept) -> AttrSet:
    """Mask of intent members m with m' = A and a non-singleton closure m''.

    When m' = A the closure m'' equals the whole intent B, so the size test
    reduces to |B| > 1.
    """
    if concept.intent.bit_count() <= 1:
        return 0
    mask = 0
    for m in iter_bits(concept.intent):
        if ctx.cols[m] == concept.extent:
            mask |= 1 << m
    return mask


def alpha_term(
    ctx: FormalContext,
    concept: FormalConcept,
    rule: BaseRule = BaseRule.WORKED_EXAMPLE,
) -> tuple[Fraction, AttrSet, AttrSet]:
    """(alpha, base mask, equivalent mask) for a concept.

    Base attributes take priority; the equivalent-attribute count is used
    only when no base attribute exists.  An empty intent scores 0.

    Equivalent to calling is_base_attribute per member, but tiered: the
    extent of B minus {m} either equals A (m implied by the rest) or escapes
    m', and dropping more attributes with m can only help, so comparing one
    prefix-suffix intersection against A settles most members without any
    removal scan.  Only members failing that test take the full per-pair
    pass.
    """
    b = concept.intent
    size = b.bit_count()
    if size == 0:
        return _ZERO, 0, 0
    cols = ctx.cols
    lows = []
    exts = []
    bits = b
    while bits:
        low = bits & -bits
        bits ^= low
        lows.append(low)
        exts.append(cols[low.bit_length() - 1])
    full = ctx.all_objects
    suffixes = [full] * (size + 1)
    running = full
    for i in range(size - 1, 0, -1):
        running &= exts[i]
        suffixes[i] = running
    target = concept.extent
    base = 0
    slow = None
    prefix = full
    for i in range(size):
        if prefix & suffixes[i + 1] != target:
            base |= lows[i]
        elif slow is None:
            slow = [i]
        else:
            slow.append(i)
        prefix &= exts[i]
    if slow:
        strict = rule is BaseRule.WORKED_EXAMPLE
        for i in slow:
            e = exts[i]
            outside = ~e
            rest = full
            removed = False
            blocked = False
            for j in range(size):
                if j == i:
                    continue
                ej = exts[j]
                if ej & outside:
                    rest &= ej
                elif strict and ej == e:
                    blocked = True  # an equal-extent partner survives removal
                    break
                else:
                    removed = True
            # without removals rest equals the already-failed quick test
            if removed and not blocked and rest & outside:
                base |= lows[i]
    if base:
        return _frac(base.bit_count(), size), base, 0
    if size > 1:
        equiv = 0
        for i in range(size):
            if exts[i] == target:
                equiv |= lows[i]
        if equiv:
            return _frac(equiv.bit_count(), size), 0, equiv
    return _ZERO, 0, 0


def beta_term(concept: FormalConcept, generators: list[AttrSet]) -> Fraction:
    """Minimal-generator term of BECR.

    min(|H| / |B|, 1) when several generators exist; 1 / |B| for a single
    generator smaller than B; 0 when B is its own only generator (which
    covers the empty intent, whose sole generator is the empty set).
    """
    size = concept.intent.bit_count()
    count = len(generators)
    if count > 1:
        return _ONE if count >= size else _frac(count, size)
    if count == 1 and generators[0] != concept.intent:
        return _frac(1, size)
    return _ZERO


def becr(
    ctx: FormalContext,
    lattice: ConceptLattice,
    concept: FormalConcept,
    rule: BaseRule = BaseRule.WORKED_EXAMPLE,
) -> BecrBreakdown:
    """Full BECR breakdown: (alpha + beta) / 2 plus the witnesses."""
    alpha, base, equiv = alpha_term(ctx, concept, rule)
    generators = minimal_generators(lattice, concept)
    count = len(generators)
    # beta_term, unrolled here to keep the scored path flat
    if count > 1:
        size = concept.intent.bit_count()
        beta = _ONE if count >= size else _frac(count, size)
    elif generators[0] != concept.intent:
        beta = _frac(1, concept.intent.bit_count())
    else:
        beta = _ZERO
    # (alpha + beta) / 2 spelled as one normalization instead of two
    value = _frac(
        alpha.numerator * beta.denominator + beta.numerator * alpha.denominator,
        alpha.denominator * beta.denominator * 2,
    )
    return BecrBreakdown(alpha, beta, value, base, equiv, count)


def stability(ctx: FormalContext, concept: FormalConcept) -> StabilityScore:
    """Exact stability: |{e ⊆ B : e' = A}| / 2^|B|.

    Depth-first over the intent attributes, sharing prefix intersections;
    every subset is visited (see module docstring).  Guarded to |B| <= 30.
    """
    b = concept.intent
    k = b.bit_count()
    if k > MAX_STABILITY_INTENT:
        raise IntentTooLarge(
            f"stability enumerates 2^|B| subsets; |B| = {k} exceeds "
            f"{MAX_STABILITY_INTENT}"
        )
    cols = [ctx.cols[m] for m in iter_bits(b)]
    target = concept.extent
    if k == 0:
        return StabilityScore(1 if ctx.all_objects == target else 0, 1)
    last = k - 1

    def count(i: int, current: int) -> int:
        if i == last:
            return (current == target) + ((current & cols[i]) == target)
        return count(i + 1, current) + count(i + 1, current & cols[i])

    return StabilityScore(count(0, ctx.all_objects), 1 << k)


def stability_oracle(ctx: FormalContext, concept: FormalConcept) -> StabilityScore:
    """Oracle: derive every subset's extent from scratch and compare.

    Independent of the shared-prefix counter; guarded to |B| <= 20.
    """
    b = concept.intent
    k = b.bit_count()
    if k > MAX_ORACLE_INTENT:
        raise IntentTooLarge(
            f"stability oracle caps at {MAX_ORACLE_INTENT} intent attributes"
        )
    members = list(iter_bits(b))
    hits = 0
    for picks in range(1 << k):
        subset = 0
        for pos in range(k):
            if picks >> pos & 1:
                subset |= 1 << members[pos]
        if ctx.derive_extent(subset) == concept.extent:
            hits += 1
    return StabilityScore(hits, 1 << k)
