"""
Combinatorics of cumulative compositions and the symmetric group.

Permutations of {1..r} are tuples in one-line notation ``((1)w, ..., (r)w)``
and act on the right, so ``x * y`` means "first x, then y":
``(i)(xy) = ((i)x)y``.  With this convention ``T_x T_y = T_{xy}`` whenever
``l(xy) = l(x) + l(y)``.

A cumulative composition ``[a_0, ..., a_m]`` with ``0 = a_0 <= ... <= a_m = r``
is the partial-sum encoding of a composition of r with m parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import comb, factorial

__all__ = [
    "Permutation", "CumComposition", "Companions",
    "perm_mul", "perm_inverse", "perm_length", "reduced_word", "identity",
    "s", "s_ij", "w_shift", "w_block", "embed",
    "enumerate_lambda", "poset_leq", "companions", "w_of",
    "young_subgroup", "is_distinguished", "coset_reps", "double_reps",
    "ones", "r_i", "all_perms", "word_to_perm", "lambda_size", "young_order",
]


# ---------------------------------------------------------------- raw tuple helpers

def identity(r: int) -> tuple:
    return tuple(range(1, r + 1))


def perm_mul(x: tuple, y: tuple) -> tuple:
    """First x, then y."""
    return tuple(y[i - 1] for i in x)


def perm_inverse(w: tuple) -> tuple:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def perm_length(w: tuple) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@lru_cache(maxsize=None)
def reduced_word(w: tuple) -> tuple:
    """Lexicographically least reduced word ``(i_1, .., i_l)`` with w = s_{i_1}...s_{i_l}.

    The first letter of any reduced word is a left descent, i.e. a position i
    with (i)w > (i+1)w; peeling the smallest one each time gives the least word.
    """
    word = []
    cur = list(w)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            return tuple(word)


@lru_cache(maxsize=None)
def all_perms(r: int) -> tuple:
    return tuple(permutations(range(1, r + 1)))


def s(i: int, r: int) -> tuple:
    """The basic transposition s_i = (i, i+1) in S_r."""
    if not 1 <= i < r:
        raise ValueError(f"s_{i} does not exist in S_{r}")
    w = list(range(1, r + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def word_to_perm(word, r: int) -> tuple:
    w = identity(r)
    for i in word:
        w = perm_mul(w, s(i, r))
    return w


def s_ij(i: int, j: int, r: int, k: int = 0) -> tuple:
    """s_{i,j}^{(k)} = s_{i+k-1} ... s_{j+k} (i > j) or s_{i+k} ... s_{j+k-1} (i < j)."""
    i, j = i + k, j + k
    if not (1 <= i <= r and 1 <= j <= r):
        raise ValueError(f"s_({i},{j}) out of range for S_{r}")
    if i > j:
        return word_to_perm(range(i - 1, j - 1, -1), r)
    return word_to_perm(range(i, j), r)


def w_shift(i: int, j: int, r: int, k: int = 0) -> tuple:
    """w_{i,j}^{(k)} = s^{(k)}_{i+1,1} s^{(k)}_{i+2,2} ... s^{(k)}_{i+j,j}."""
    if i < 0 or j < 0 or k < 0 or k + i + j > r:
        raise ValueError(f"w_({i},{j})^({k}) does not fit in S_{r}")
    w = identity(r)
    if i == 0 or j == 0:
        return w
    for t in range(1, j + 1):
        w = perm_mul(w, s_ij(i + t, t, r, k))
    return w


def w_block(i: int, j: int, r: int, k: int = 0) -> tuple:
    """The two-row description of w_{i,j}^{(k)}: blocks of sizes i and j swapped."""
    w = list(range(1, r + 1))
    for t in range(1, i + 1):
        w[k + t - 1] = k + j + t
    for t in range(1, j + 1):
        w[k + i + t - 1] = k + t
    return tuple(w)


def embed(w: tuple, r: int) -> tuple:
    """View w in S_n (n <= r) as an element of S_r fixing n+1..r."""
    if len(w) > r:
        raise ValueError("cannot embed a larger symmetric group")
    return tuple(w) + tuple(range(len(w) + 1, r + 1))


class Permutation(tuple):
    """A permutation of {1..r} in one-line notation, acting on the right."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(range(1, r + 1))

    @classmethod
    def from_word(cls, word, r: int) -> "Permutation":
        return cls(word_to_perm(word, r))

    @property
    def r(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other):
        if not isinstance(other, tuple) or len(other) != len(self):
            return NotImplemented
        return Permutation(perm_mul(self, other))

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> "Permutation":
        return Permutation(perm_inverse(self))

    def length(self) -> int:
        return perm_length(tuple(self))

    def reduced_word(self) -> tuple:
        return reduced_word(tuple(self))

    def services(self) -> dict:
        return {"length": self.length(), "reduced_word": list(self.reduced_word()),
                "inverse": list(self.inverse())}

    def __repr__(self):
        return f"Permutation({list(self)})"


# ---------------------------------------------------------------- compositions

class CumComposition(tuple):
    """An element ``[a_0, .., a_m]`` of Lambda[m, r]."""

    def __new__(cls, entries):
        entries = tuple(int(x) for x in entries)
        if len(entries) < 2 or entries[0] != 0:
            raise ValueError(f"{list(entries)} must start with 0 and have m >= 1 parts")
        if any(x > y for x, y in zip(entries, entries[1:])):
            raise ValueError(f"{list(entries)} is not non-decreasing")
        return super().__new__(cls, entries)

    @property
    def m(self) -> int:
        return len(self) - 1

    @property
    def r(self) -> int:
        return self[-1]

    def theta(self) -> tuple:
        """The composition (a_1 - a_0, ..., a_m - a_{m-1})."""
        return tuple(y - x for x, y in zip(self, self[1:]))

    @classmethod
    def from_composition(cls, lam) -> "CumComposition":
        out, t = [0], 0
        for part in lam:
            t += part
            out.append(t)
        return cls(out)

    def prime(self) -> "CumComposition":
        r, m = self.r, self.m
        return CumComposition([0] + [r - self[m - i] for i in range(1, m)] + [r])

    def left(self) -> "CumComposition":
        """Remove one box from the first nonzero part."""
        if self.r == 0:
            raise ValueError("r = 0 has no left companion")
        i = next(k for k in range(1, self.m + 1) if self[k] != 0)
        return CumComposition([0] * i + [x - 1 for x in self[i:]])

    def right(self) -> "CumComposition":
        """Remove one box from the last nonzero part."""
        if self.r == 0:
            raise ValueError("r = 0 has no right companion")
        r = self.r
        j = next(k for k in range(1, self.m + 1) if self[k] == r)
        return CumComposition(list(self[:j]) + [r - 1] * (self.m + 1 - j))

    def shifted(self) -> list:
        """[a_1, .., a_m] with a_i = right() + 1_i."""
        b = self.right()
        return [CumComposition(list(b[:i]) + [x + 1 for x in b[i:]]) for i in range(1, self.m + 1)]

    def __repr__(self):
        return f"CumComposition({list(self)})"


@dataclass(frozen=True)
class Companions:
    prime: CumComposition
    left: CumComposition
    right: CumComposition
    shifted: list


def companions(a: CumComposition) -> Companions:
    a = CumComposition(a)
    return Companions(a.prime(), a.left(), a.right(), a.shifted())


def ones(i: int, m: int) -> CumComposition:
    """1_i in Lambda[m, 1]."""
    return CumComposition([0] * i + [1] * (m - i + 1))


def r_i(i: int, m: int, r: int) -> CumComposition:
    """[0, 0 (i-1 times), r, .., r]."""
    if not 1 <= i <= m:
        raise ValueError(f"index {i} out of range 1..{m}")
    return CumComposition([0] * i + [r] * (m - i + 1))


@lru_cache(maxsize=None)
def _lambda(m: int, r: int) -> tuple:
    return tuple(CumComposition((0,) + mid + (r,))
                 for mid in combinations_with_replacement(range(r + 1), m - 1))


def enumerate_lambda(m: int, r: int) -> list:
    """All of Lambda[m, r], lexicographically sorted."""
    if m < 1 or r < 0:
        raise ValueError("need m >= 1 and r >= 0")
    out = list(_lambda(m, r))
    assert len(out) == comb(r + m - 1, m - 1)
    return out


def poset_leq(a, b) -> bool:
    if len(a) != len(b) or a[-1] != b[-1]:
        raise ValueError("compositions from different Lambda[m, r]")
    return all(x <= y for x, y in zip(a, b))


def w_of(a) -> tuple:
    """The permutation sending block i of a to the mirrored block: (a_{i-1}+l)w = r - a_i + l."""
    a = CumComposition(a)
    r = a.r
    w = [0] * r
    for i in range(1, a.m + 1):
        for l in range(1, a[i] - a[i - 1] + 1):
            w[a[i - 1] + l - 1] = r - a[i] + l
    return tuple(w)


# ---------------------------------------------------------------- Young subgroups and cosets

def _blocks(a) -> list:
    return [range(a[i - 1] + 1, a[i] + 1) for i in range(1, len(a)) if a[i] > a[i - 1]]


@lru_cache(maxsize=None)
def young_subgroup(a: tuple, r: int | None = None) -> tuple:
    """Elements of S_a (block-diagonal), sorted; optionally embedded in S_r."""
    a = tuple(a)
    n = a[-1]
    r = n if r is None else r
    pieces = [list(permutations(block)) for block in _blocks(a)]
    out = []
    for choice in product(*pieces):
        w = []
        for part in choice:
            w.extend(part)
        out.append(embed(tuple(w), r))
    return tuple(sorted(out))


def _cut_points(a) -> set:
    return set(a[1:])


def is_distinguished(w: tuple, a) -> bool:
    """w is the minimal element of its right coset S_a w."""
    cuts = _cut_points(a)
    return all(w[i - 1] < w[i] for i in range(1, len(w)) if i not in cuts)


def coset_reps(a) -> list:
    r = a[-1]
    return [w for w in all_perms(r) if is_distinguished(w, a)]


def double_reps(a, b) -> list:
    """D_{a,b} = D_a intersected with the inverses of D_b."""
    r = a[-1]
    if b[-1] != r:
        raise ValueError("compositions of different r")
    return [w for w in all_perms(r)
            if is_distinguished(w, a) and is_distinguished(perm_inverse(w), b)]


def lambda_size(m: int, r: int) -> int:
    return comb(r + m - 1, m - 1)


def young_order(a) -> int:
    out = 1
    for part in CumComposition(a).theta():
        out *= factorial(part)
    return out
