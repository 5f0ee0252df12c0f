"""Generators for the small groups used throughout the examples.

Each builder returns a fully enumerated :class:`GroupData`. The Valentiner
group is realised as the stabiliser in SL(3, 4) of the hyperoval
{(0,0,1), (0,1,0), (1,0,0), (1,1,1), (1,t,t+1), (1,t+1,t)}; it has order 1080
and is the triple cover 3.A6.
"""

from __future__ import annotations

from functools import lru_cache

from .chartable import CharacterTable
from .dixon import character_table
from .finite_field import field
from .groups import GroupData, build_group, matrix_group, permutation_group


def symmetric4() -> GroupData:
    return permutation_group(["(1,2)", "(1,2,3,4)"], 4, name="S4")


def alternating4() -> GroupData:
    return permutation_group(["(1,2,3)", "(1,2)(3,4)"], 4, name="A4")


def psl27() -> GroupData:
    return permutation_group(["(1,2,3,4,5,6,7)", "(2,3)(4,7)"], 7, name="PSL(2,7)")


def sl29() -> GroupData:
    # F9 = F3[t]/(t^2+1); the element a + b t is coded as a + 3b.
    F = field(9)
    nu = 4  # 1 + t, a generator of F9^*
    minus_one = F.neg(1)
    gens = [
        [nu, 0, 0, F.inv(nu)],
        [1, 1, 0, 1],
        [0, 1, minus_one, 0],
    ]
    return matrix_group(gens, "gf 9", name="SL(2,9)")


def valentiner() -> GroupData:
    # F4 = F2[t]/(t^2+t+1), coded as a + 2b for a + b t.
    gens = [
        [0, 3, 0, 0, 3, 3, 3, 3, 0],
        [0, 1, 2, 0, 3, 0, 1, 2, 0],
    ]
    return matrix_group(gens, "gf 4", name="V1080")


def trivial_group() -> GroupData:
    return build_group([()], name="1")


GROUPS = {
    "trivial": trivial_group,
    "a4": alternating4,
    "s4": symmetric4,
    "psl27": psl27,
    "sl29": sl29,
    "v1080": valentiner,
}


def named_group(name: str) -> GroupData:
    try:
        return GROUPS[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(GROUPS)}") from None


@lru_cache(maxsize=None)
def named_table(name: str) -> CharacterTable:
    """Character table computed from generators (cached per process)."""
    G = named_group(name)
    return character_table(G, G.name)
