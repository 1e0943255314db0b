"""Concept enumeration and lattice cover structure.

Concepts are the fixed points of the derivation Galois connection: pairs
(extent, intent) with extent' = intent and intent' = extent.  They are
enumerated by Ganter's next-closure scheme in ascending lectic order of
intents (attribute 0 has the highest priority), which makes concept ids --
0-based positions in that order -- deterministic for a given context.  Id 0
is always the supremum (G, G') and the last id the infimum (M', M).
"""
from __future__ import annotations

import csv as _csv
import io
from dataclasses import dataclass, field

from .context import AttrSet, FormalContext, ObjSet, iter_bits

DEFAULT_CONCEPT_BUDGET = 1_000_000
BRUTE_FORCE_MAX_OBJECTS = 20


class ConceptBudgetExceeded(RuntimeError):
    """Enumeration passed the configured concept cap."""


class ContextTooLarge(ValueError):
    """Context exceeds a brute-force guard."""


@dataclass(frozen=True)
class FormalConcept:
    extent: ObjSet
    intent: AttrSet


def lectic_key(intent: AttrSet, width: int) -> int:
    """Sort key realizing lectic order: smallest differing attribute wins.

    Reversing the bit significance makes integer comparison agree with the
    set order A < B iff min(A xor B) lies in B.
    """
    key = 0
    for j in iter_bits(intent):
        key |= 1 << (width - 1 - j)
    return key


def enumerate_concepts(
    ctx: FormalContext,
    budget: int = DEFAULT_CONCEPT_BUDGET,
) -> list[FormalConcept]:
    """All concepts of ``ctx`` in ascending lectic order of intents.

    Raises ConceptBudgetExceeded as soon as the count would pass ``budget``.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    n = ctx.n_attributes
    intent = ctx.close_attrs(0)
    concepts = [FormalConcept(ctx.derive_extent(intent), intent)]
    full = ctx.all_attributes
    while intent != full:
        for i in reversed(range(n)):
            bit = 1 << i
            if intent & bit:
                continue
            below = bit - 1  # attributes with index < i
            candidate = ctx.close_attrs((intent & below) | bit)
            if (candidate & below) == (intent & below):
                intent = candidate
                break
        else:  # pragma: no cover - unreachable: M is always closed
            break
        if len(concepts) >= budget:
            raise ConceptBudgetExceeded(
                f"more than {budget} concepts; raise the budget to continue"
            )
        concepts.append(FormalConcept(ctx.derive_extent(intent), intent))
    return concepts


def brute_force_concepts(ctx: FormalContext) -> list[FormalConcept]:
    """Oracle enumeration: close every object subset, dedupe, sort lectically.

    Independent of next-closure; intended for testing enumerate_concepts.
    Guarded to |G| <= 20 objects.
    """
    n = ctx.n_objects
    if n > BRUTE_FORCE_MAX_OBJECTS:
        raise ContextTooLarge(
            f"brute force caps at {BRUTE_FORCE_MAX_OBJECTS} objects, got {n}"
        )
    by_intent: dict[int, int] = {}
    for objs in range(1 << n):
        intent = ctx.derive_intent(objs)
        if intent not in by_intent:
            by_intent[intent] = ctx.derive_extent(intent)
    width = ctx.n_attributes
    return [
        FormalConcept(extent, intent)
        for intent, extent in sorted(
            by_intent.items(), key=lambda kv: lectic_key(kv[0], width)
        )
    ]


@dataclass
class ConceptLattice:
    """Concepts plus their transitively reduced order (cover relation)."""

    concepts: list[FormalConcept]
    upper_covers: list[tuple[int, ...]]
    lower_covers: list[tuple[int, ...]]
    # keyed by intent: it determines the concept, and intent masks are far
    # smaller than extents on object-heavy contexts
    _index: dict[int, int] = field(repr=False, default_factory=dict)
    # intent masks in concept order, for scoring loops that walk covers
    _intents: list[int] = field(repr=False, default_factory=list)

    def __post_init__(self):
        if not self._index:
            self._index = {c.intent: i for i, c in enumerate(self.concepts)}
        if not self._intents:
            self._intents = [c.intent for c in self.concepts]

    def __len__(self) -> int:
        return len(self.concepts)

    def index_of(self, concept: FormalConcept) -> int:
        try:
            return self._index[concept.intent]
        except KeyError:
            raise ValueError("concept does not belong to this lattice") from None


def build_covers(concepts: list[FormalConcept]) -> ConceptLattice:
    """Compute upper/lower covers by minimal-superset filtering per concept."""
    n = len(concepts)
    by_size = sorted(range(n), key=lambda i: concepts[i].extent.bit_count())
    upper: list[tuple[int, ...]] = [()] * n
    lower: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        a = concepts[i].extent
        keep: list[int] = []
        for j in by_size:  # ascending extent size: minimal supersets kept first
            aj = concepts[j].extent
            if aj == a or (a & aj) != a:
                continue
            if not any((concepts[k].extent & aj) == concepts[k].extent for k in keep):
                keep.append(j)
        upper[i] = tuple(sorted(keep))
        for j in keep:
            lower[j].append(i)
    return ConceptLattice(concepts, upper, [tuple(sorted(v)) for v in lower])


def attribute_concept(lattice: ConceptLattice, m: int) -> FormalConcept:
    """mu(m): the greatest concept whose intent contains attribute ``m``."""
    best = None
    for c in lattice.concepts:
        if c.intent >> m & 1:
            if best is None or c.extent.bit_count() > best.extent.bit_count():
                best = c
    if best is None:
        raise ValueError(f"no concept carries attribute index {m}")
    return best


def concepts_csv(ctx: FormalContext, concepts: list[FormalConcept]) -> str:
    """Concept list as CSV: id, ';'-joined extent names, ';'-joined intent names."""
    buf = io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "extent", "intent"])
    for i, c in enumerate(concepts):
        writer.writerow(
            [i, ";".join(ctx.obj_names(c.extent)), ";".join(ctx.attr_names(c.intent))]
        )
    return buf.getvalue()
