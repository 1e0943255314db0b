"""Small utilities shared by the test modules."""
import random

from becr import FormalContext


def random_context(rng: random.Random, max_objects: int = 8,
                   max_attributes: int = 8) -> FormalContext:
    """Draw a context with uniform shape and a per-context density."""
    n = rng.randint(1, max_objects)
    m = rng.randint(1, max_attributes)
    p = rng.uniform(0.1, 0.9)
    rows = [
        sum(1 << j for j in range(m) if rng.random() < p)
        for _ in range(n)
    ]
    return FormalContext.from_rows(
        [f"g{i + 1}" for i in range(n)],
        [f"m{j + 1}" for j in range(m)],
        rows,
    )


def generator_key(mask: int):
    """(size, members ascending), the documented generator ordering."""
    bits = []
    while mask:
        low = mask & -mask
        mask ^= low
        bits.append(low)
    return (len(bits), bits)
