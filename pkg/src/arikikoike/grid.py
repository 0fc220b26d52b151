"""
Fixed specialization grids used by the acceptance suite and the CLI.

Each point is a specialization string.  The rational grid mixes generic
points, q = 1 (group algebra), q = -1 (e = 2) and collisions u_i = q^k u_j;
the prime-field grid adds small-characteristic points for the invertibility
criterion only.  Bump GRID_VERSION whenever a point changes.
"""

from __future__ import annotations

from .rings import Specialization, parse_specialization

__all__ = ["GRID_VERSION", "RATIONAL_GRID", "PRIME_GRID", "grid", "prime_grid"]

GRID_VERSION = 1

RATIONAL_GRID = {
    1: [
        "q=2,u=[3]", "q=1,u=[1]", "q=-1,u=[2]", "q=1/2,u=[5]", "q=3,u=[-1]",
        "q=2,u=[1]", "q=-1,u=[1]", "q=5,u=[7]", "q=-2,u=[3]", "q=1,u=[4]",
    ],
    2: [
        "q=2,u=[3,5]",      # generic
        "q=1,u=[1,3]",      # group algebra of the wreath product
        "q=-1,u=[1,3]",     # e = 2
        "q=2,u=[1,2]",      # u2 = q u1
        "q=2,u=[2,1]",      # u1 = q u2
        "q=2,u=[4,1]",      # u1 = q^2 u2
        "q=1,u=[1,1]",      # u1 = u2
        "q=3,u=[1,9]",      # u2 = q^2 u1
        "q=1/2,u=[3,5]",    # generic, q not an integer
        "q=-1,u=[1,-1]",    # u2 = q u1 and e = 2
        "q=3,u=[2,-5]",     # generic, mixed signs
        "q=-2,u=[1,4]",     # u2 = q^2 u1
    ],
    3: [
        "q=2,u=[3,5,7]",    # generic
        "q=1,u=[1,3,5]",    # group algebra
        "q=-1,u=[1,3,5]",   # e = 2
        "q=2,u=[1,2,5]",    # u2 = q u1
        "q=2,u=[1,3,4]",    # u3 = q^2 u1
        "q=2,u=[3,5,6]",    # u3 = q u1
        "q=1,u=[1,1,3]",    # u1 = u2
        "q=1/2,u=[3,5,7]",  # generic, q not an integer
        "q=3,u=[1,5,3]",    # u3 = q u1
        "q=-1,u=[1,2,-1]",  # u3 = q u1 and e = 2
        "q=3,u=[2,-5,7]",   # generic, mixed signs
        "q=2,u=[4,1,7]",    # u1 = q^2 u2
    ],
}

PRIME_GRID = {
    1: ["q=2,u=[3],field=Fp:7"],
    2: [
        "q=2,u=[1,3],field=Fp:7",   # e = 3
        "q=2,u=[1,2],field=Fp:7",   # u2 = q u1
        "q=4,u=[1,3],field=Fp:5",   # q = -1, e = 2
        "q=3,u=[1,2],field=Fp:11",  # generic in GF(11)
    ],
    3: [
        "q=2,u=[1,3,5],field=Fp:11",
        "q=2,u=[1,2,6],field=Fp:7",  # u2 = q u1
        "q=4,u=[1,2,3],field=Fp:5",  # e = 2
        "q=3,u=[1,5,9],field=Fp:13",  # u3 = q^2 u1
    ],
}


def grid(m: int) -> list[Specialization]:
    if m not in RATIONAL_GRID:
        raise ValueError(f"no fixed grid for m = {m}")
    return [parse_specialization(s) for s in RATIONAL_GRID[m]]


def prime_grid(m: int) -> list[Specialization]:
    return [parse_specialization(s) for s in PRIME_GRID.get(m, [])]
