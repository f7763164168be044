"""
Seeded random arenas for solver property tests.
"""

import random

from .models import GameArena, Parity, Safety


def random_arena(
    rng: random.Random,
    size: int,
    max_priority: int = 3,
    safety: bool = False,
    max_out_degree: int = 3,
    dead_end_probability: float = 0.1,
) -> GameArena:
    """
    Random arena on ``size`` positions.

    Owners are uniform; each position gets 1..max_out_degree distinct
    successors, or none with ``dead_end_probability``. Safety arenas mark
    roughly a fifth of the positions bad.
    """
    owners = tuple(rng.randrange(2) for _ in range(size))
    successors = []
    for _ in range(size):
        if rng.random() < dead_end_probability:
            successors.append(())
            continue
        degree = rng.randint(1, min(max_out_degree, size))
        successors.append(tuple(sorted(rng.sample(range(size), degree))))
    if safety:
        bad = frozenset(v for v in range(size) if rng.random() < 0.2)
        condition = Safety(bad)
    else:
        condition = Parity(tuple(rng.randint(0, max_priority) for _ in range(size)), max_priority)
    return GameArena(owners, tuple(successors), 0, condition)
