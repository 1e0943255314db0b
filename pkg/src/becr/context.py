"""Binary object-attribute contexts stored as dual bit matrices.

A context couples a set of named objects with a set of named attributes
through an incidence relation.  Objects and attributes are indexed in file
order, and subsets of either side travel as plain ``int`` bitmasks: bit ``j``
of an attribute mask stands for attribute ``j``, bit ``g`` of an object mask
for object ``g``.  The context keeps both the row view (one attribute mask
per object) and the column view (one object mask per attribute), so each
derivation costs one AND per member bit of the input mask.

Derivation follows the usual Galois convention for the empty set: the shared
attributes of no objects are all attributes, and the common objects of no
attributes are all objects.
"""
from __future__ import annotations

import csv as _csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

# Masks are plain ints; the aliases keep signatures readable.
ObjSet = int
AttrSet = int


class ParseError(ValueError):
    """Input text does not encode a context in the claimed format."""


class MalformedHeader(ParseError):
    """Missing or unreadable format preamble."""


class DimensionMismatch(ParseError):
    """Declared dimensions disagree with the body."""


class IllegalCell(ParseError):
    """Cell character outside the format's alphabet."""

    def __init__(self, char: str, row: int, col: int):
        super().__init__(f"illegal cell {char!r} at row {row}, column {col}")
        self.char = char
        self.row = row
        self.col = col


class MalformedRow(ParseError):
    """Data row that cannot be interpreted at all."""


class NonBinaryCell(ParseError):
    """CSV cell holding something other than 0, 1, or empty."""


class EmptyContext(ValueError):
    """Raised where a quantity is undefined on a 0-area context."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    if mask < 0:
        raise ValueError("negative mask")
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FormalContext:
    """Immutable binary context with both row and column incidence views."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[int, ...]  # rows[g] = attribute mask of object g
    cols: tuple[int, ...]  # cols[m] = object mask of attribute m

    @classmethod
    def from_rows(
        cls,
        objects: Iterable[str],
        attributes: Iterable[str],
        rows: Iterable[int],
    ) -> "FormalContext":
        """Build and validate a context from per-object attribute masks."""
        objs = tuple(objects)
        attrs = tuple(attributes)
        row_masks = tuple(rows)
        for kind, names in (("object", objs), ("attribute", attrs)):
            seen = set()
            for name in names:
                if not name:
                    raise ValueError(f"empty {kind} name")
                if name in seen:
                    raise ValueError(f"duplicate {kind} name {name!r}")
                seen.add(name)
        if len(row_masks) != len(objs):
            raise ValueError(
                f"{len(objs)} object names but {len(row_masks)} rows"
            )
        m = len(attrs)
        cols = [0] * m
        for g, row in enumerate(row_masks):
            if row < 0 or row >> m:
                raise ValueError(f"row {g} has bits outside {m} attributes")
            for j in iter_bits(row):
                cols[j] |= 1 << g
        return cls(objs, attrs, row_masks, tuple(cols))

    # -- dimensions ---------------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def n_incidences(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    @property
    def all_objects(self) -> ObjSet:
        return (1 << len(self.objects)) - 1

    @property
    def all_attributes(self) -> AttrSet:
        return (1 << len(self.attributes)) - 1

    def density(self) -> Fraction:
        """|I| / (|G| * |M|) as an exact rational.

        Raises EmptyContext when either side is empty: the ratio is 0/0.
        """
        area = len(self.objects) * len(self.attributes)
        if area == 0:
            raise EmptyContext("density undefined on a 0-area context")
        return Fraction(self.n_incidences, area)

    # -- derivation ---------------------------------------------------------

    def _check_objs(self, objs: int) -> None:
        if objs < 0 or objs >> len(self.objects):
            raise ValueError("object mask has bits outside this context")

    def _check_attrs(self, attrs: int) -> None:
        if attrs < 0 or attrs >> len(self.attributes):
            raise ValueError("attribute mask has bits outside this context")

    def derive_intent(self, objs: ObjSet) -> AttrSet:
        """Attributes shared by every object in ``objs`` (all of M for ∅)."""
        self._check_objs(objs)
        acc = self.all_attributes
        rows = self.rows
        while objs and acc:
            low = objs & -objs
            objs ^= low
            acc &= rows[low.bit_length() - 1]
        return acc

    def derive_extent(self, attrs: AttrSet) -> ObjSet:
        """Objects having every attribute in ``attrs`` (all of G for ∅)."""
        self._check_attrs(attrs)
        acc = self.all_objects
        cols = self.cols
        while attrs and acc:
            low = attrs & -attrs
            attrs ^= low
            acc &= cols[low.bit_length() - 1]
        return acc

    def close_attrs(self, attrs: AttrSet) -> AttrSet:
        """Closure attrs'' = derive_intent(derive_extent(attrs))."""
        extent = self.derive_extent(attrs)
        acc = self.all_attributes
        rows = self.rows
        while extent:
            low = extent & -extent
            extent ^= low
            acc &= rows[low.bit_length() - 1]
            if acc == attrs:
                break  # every object in the extent keeps acc ⊇ attrs
        return acc

    def cell(self, g: int, m: int) -> bool:
        return bool(self.rows[g] >> m & 1)

    # -- name helpers -------------------------------------------------------

    def attr_mask(self, names: Iterable[str]) -> AttrSet:
        mask = 0
        for name in names:
            try:
                mask |= 1 << self.attributes.index(name)
            except ValueError:
                raise ValueError(f"unknown attribute {name!r}") from None
        return mask

    def obj_mask(self, names: Iterable[str]) -> ObjSet:
        mask = 0
        for name in names:
            try:
                mask |= 1 << self.objects.index(name)
            except ValueError:
                raise ValueError(f"unknown object {name!r}") from None
        return mask

    def attr_names(self, mask: AttrSet) -> list[str]:
        self._check_attrs(mask)
        return [self.attributes[j] for j in iter_bits(mask)]

    def obj_names(self, mask: ObjSet) -> list[str]:
        self._check_objs(mask)
        return [self.objects[g] for g in iter_bits(mask)]


# -- Burmeister .cxt --------------------------------------------------------

def parse_cxt(text: str) -> FormalContext:
    """Parse Burmeister format.

    Layout: a ``B`` line, a blank line, the object count, the attribute
    count, a blank line, one object name per line, one attribute name per
    line, then the cross table with ``X`` for incident and ``.`` for not.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != "B":
        raise MalformedHeader("first line must be 'B'")
    if len(lines) < 5:
        raise MalformedHeader("truncated header")
    if lines[1].strip():
        raise MalformedHeader("line 2 must be blank")
    try:
        n = int(lines[2])
        m = int(lines[3])
    except ValueError:
        raise MalformedHeader("object/attribute counts must be integers") from None
    if n < 0 or m < 0:
        raise MalformedHeader("object/attribute counts must be non-negative")
    if lines[4].strip():
        raise MalformedHeader("line 5 must be blank")
    body = lines[5:]
    needed = n + m + n
    if len(body) < needed:
        raise DimensionMismatch(
            f"expected {needed} body lines for {n} objects x {m} attributes, "
            f"got {len(body)}"
        )
    if any(extra.strip() for extra in body[needed:]):
        raise DimensionMismatch("trailing content after the cross table")
    objects = body[:n]
    attributes = body[n:n + m]
    rows = []
    for i, line in enumerate(body[n + m:needed]):
        if len(line) != m:
            raise DimensionMismatch(
                f"row {i} has {len(line)} cells, expected {m}"
            )
        mask = 0
        for j, ch in enumerate(line):
            if ch == "X":
                mask |= 1 << j
            elif ch != ".":
                raise IllegalCell(ch, i, j)
        rows.append(mask)
    return FormalContext.from_rows(objects, attributes, rows)


def serialize_cxt(ctx: FormalContext) -> str:
    """Render Burmeister format with '\\n' line endings."""
    out = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    m = ctx.n_attributes
    for row in ctx.rows:
        out.append("".join("X" if row >> j & 1 else "." for j in range(m)))
    return "\n".join(out) + "\n"


# -- CSV ---------------------------------------------------------------------

def parse_csv(text: str) -> FormalContext:
    """Parse a CSV cross table.

    The header row names the attributes (its first field labels the object
    column and is ignored).  Each data row starts with the object name,
    followed by cells in {'1', '0', ''}; empty means no incidence.
    """
    records = [r for r in _csv.reader(io.StringIO(text)) if r]
    if not records:
        raise MalformedHeader("missing CSV header row")
    header = records[0]
    attributes = header[1:]
    objects = []
    rows = []
    for i, record in enumerate(records[1:]):
        if len(record) != len(header):
            raise MalformedRow(
                f"row {i} has {len(record)} fields, expected {len(header)}"
            )
        if not record[0]:
            raise MalformedRow(f"row {i} has an empty object name")
        objects.append(record[0])
        mask = 0
        for j, cell in enumerate(record[1:]):
            if cell == "1":
                mask |= 1 << j
            elif cell not in ("", "0"):
                raise NonBinaryCell(
                    f"cell at row {i}, column {j} is {cell!r}, expected 0, 1, or empty"
                )
        rows.append(mask)
    return FormalContext.from_rows(objects, attributes, rows)


# -- FIMI transaction lists ---------------------------------------------------

def parse_fimi(text: str) -> FormalContext:
    """Parse FIMI transaction data: one whitespace-separated item list per line.

    Objects are named by 1-based line number; attributes by their integer
    item ids, in ascending numeric order.
    """
    transactions = []
    for i, line in enumerate(text.splitlines()):
        items = set()
        for token in line.split():
            if not token.isdigit():
                raise MalformedRow(f"line {i + 1}: non-integer item {token!r}")
            items.add(int(token))
        transactions.append(items)
    ids = sorted({item for t in transactions for item in t})
    index = {item: j for j, item in enumerate(ids)}
    rows = [
        sum(1 << index[item] for item in t)
        for t in transactions
    ]
    return FormalContext.from_rows(
        [str(i + 1) for i in range(len(transactions))],
        [str(item) for item in ids],
        rows,
    )
