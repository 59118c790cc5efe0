"""
Type-A weight and root lattice.

Weights are stored in the fundamental basis {omega_i}, root-lattice elements in
the simple-root basis {alpha_i}; the rank is r = m + n - 1. The two meet only in
pairing() and in RootElt.to_weight(), which goes through the Cartan matrix.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DomainError
from .weyl import Permutation, reduced_word

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cartan_matrix(rank: int) -> np.ndarray:
    """Cartan matrix of A_rank (all d_i = 1, so it is symmetric)"""
    if rank < 1:
        raise DomainError(f"rank must be positive, got {rank}")
    cartan = 2 * np.eye(rank, dtype=np.int64)
    for i in range(rank - 1):
        cartan[i, i + 1] = cartan[i + 1, i] = -1
    cartan.setflags(write=False)
    return cartan


def _check_rank(a, b):
    if a.rank != b.rank:
        raise DomainError(f"rank mismatch: {a.rank} vs {b.rank}")


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates"""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class RootElt:
    """Element of the root lattice in simple-root coordinates"""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "RootElt":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def to_weight(self) -> Weight:
        return Weight(tuple(cartan_matrix(self.rank) @ np.array(self.coords, dtype=np.int64)))

    def __add__(self, other: "RootElt") -> "RootElt":
        _check_rank(self, other)
        return RootElt(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootElt") -> "RootElt":
        _check_rank(self, other)
        return RootElt(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootElt":
        return RootElt(tuple(-a for a in self.coords))

    def __mul__(self, factor: int) -> "RootElt":
        return RootElt(tuple(factor * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def omega(k: int, rank: int) -> Weight:
    if not 1 <= k <= rank:
        raise DomainError(f"omega_{k} does not exist in rank {rank}")
    coords = [0] * rank
    coords[k - 1] = 1
    return Weight(tuple(coords))


def alpha(i: int, rank: int) -> RootElt:
    if not 1 <= i <= rank:
        raise DomainError(f"alpha_{i} does not exist in rank {rank}")
    coords = [0] * rank
    coords[i - 1] = 1
    return RootElt(tuple(coords))


def root_interval(lo: int, hi: int, rank: int) -> RootElt:
    """alpha_lo + ... + alpha_hi (zero when lo > hi)"""
    coords = np.zeros(rank, dtype=np.int64)
    if lo <= hi:
        if lo < 1 or hi > rank:
            raise DomainError(f"alpha_{lo} + ... + alpha_{hi} leaves rank {rank}")
        coords[lo - 1 : hi] = 1
    return RootElt(tuple(coords))


def pairing(lam: Weight, gamma: RootElt) -> int:
    """<lam, gamma>; <omega_i, alpha_j> = delta_ij"""
    _check_rank(lam, gamma)
    return int(np.dot(np.array(lam.coords, dtype=np.int64), np.array(gamma.coords, dtype=np.int64)))


def simple_reflect(i: int, lam: Weight) -> Weight:
    """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i"""
    if not 1 <= i <= lam.rank:
        raise DomainError(f"s_{i} does not act in rank {lam.rank}")
    row = cartan_matrix(lam.rank)[i - 1]
    return Weight(tuple(np.array(lam.coords, dtype=np.int64) - lam.coords[i - 1] * row))


def simple_reflect_root(i: int, gamma: RootElt) -> RootElt:
    """s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i, in simple-root coordinates"""
    if not 1 <= i <= gamma.rank:
        raise DomainError(f"s_{i} does not act in rank {gamma.rank}")
    shift = int(cartan_matrix(gamma.rank)[i - 1] @ np.array(gamma.coords, dtype=np.int64))
    return gamma - alpha(i, gamma.rank) * shift


def weyl_action(w: Permutation, lam: Union[Weight, RootElt]) -> Union[Weight, RootElt]:
    """w(lam) along the reduced word of w, rightmost reflection first (weights or root-lattice elements)"""
    if w.size != lam.rank + 1:
        raise DomainError(f"S_{w.size} does not act on rank {lam.rank}")
    reflect = simple_reflect_root if isinstance(lam, RootElt) else simple_reflect
    for i in reversed(reduced_word(w)):
        lam = reflect(i, lam)
    return lam


def _check_index_set(J: Sequence[int], size: int) -> tuple[int, ...]:
    J = tuple(J)
    if not J:
        raise DomainError("index set must be nonempty")
    if list(J) != sorted(set(J)) or J[0] < 1 or J[-1] > size:
        raise DomainError(f"{J} is not a sorted subset of [1, {size}]")
    return J


def wt_eta(J: Iterable[int], m: int, n: int) -> Weight:
    """
    Weight of the dual Demazure vector eta_J:
    -omega_k + sum_{i=1..k} (alpha_i + ... + alpha_{j_i - 1}).
    """
    rank = m + n - 1
    J = _check_index_set(J, m + n)
    k = len(J)
    if k > rank:
        raise DomainError(f"|J| = {k} exceeds the rank {rank}")
    roots = RootElt.zero(rank)
    for i, j in enumerate(J, 1):
        roots = roots + root_interval(i, j - 1, rank)
    return roots.to_weight() - omega(k, rank)


def epsilon_weight(J: Iterable[int], rank: int) -> Weight:
    """The weight e_{j_1} + ... + e_{j_k}, taken modulo the trace"""
    J = _check_index_set(J, rank + 1)
    coords = [0] * rank
    for j in J:
        if j <= rank:
            coords[j - 1] += 1
        if j >= 2:
            coords[j - 2] -= 1
    return Weight(tuple(coords))


def deg_x(i: int, j: int, m: int, n: int) -> RootElt:
    """deg x_ij = -(alpha_{m-i+1} + ... + alpha_{m+j-1})"""
    if not (1 <= i <= m and 1 <= j <= n):
        raise DomainError(f"x_({i},{j}) is not a generator of the {m}x{n} algebra")
    return -root_interval(m - i + 1, m + j - 1, m + n - 1)


def pact_exponent(mu: Weight, gamma: RootElt) -> int:
    """mu acts on a degree-gamma element as q^<mu, gamma>"""
    return pairing(mu, gamma)


def newpact_exponent(k: int, i: int, j: int, m: int, n: int) -> int:
    """omega_k acts on x_ij by q^-1 when m-i+1 <= k <= m+j-1, and trivially otherwise"""
    if not 1 <= k <= m + n - 1:
        raise DomainError(f"omega_{k} does not exist in rank {m + n - 1}")
    deg_x(i, j, m, n)
    return -1 if m - i + 1 <= k <= m + j - 1 else 0
