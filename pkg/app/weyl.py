"""
Symmetric-group machinery: lengths, reduced words, Bruhat order, the element c^m,
and Bruhat interval enumeration.

Permutations are 1-indexed and written in one-line notation, so
Permutation((3, 4, 1, 2)) sends 1 -> 3, 2 -> 4, 3 -> 1, 4 -> 2.
Products compose as functions: (u * v)(i) = u(v(i)).
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .certificate import Certificate, certify
from .errors import DomainError, ResourceGuardExceeded
from config import Settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """Element of S_N in one-line notation"""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images} is not a permutation of [1, {len(images)}]")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse comma-separated one-line notation such as "3,4,1,2"."""
        try:
            return cls(tuple(int(part) for part in text.replace(" ", "").split(",") if part))
        except ValueError as exc:
            raise DomainError(f"cannot parse permutation {text!r}") from exc

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise DomainError("cannot compose permutations of different sizes")
        return Permutation(tuple(self(other(i)) for i in range(1, self.size + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, image in enumerate(self.images, 1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.images)


def length(w: Permutation) -> int:
    """Number of inversions"""
    images = w.images
    return sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )


def simple_reflection(i: int, size: int) -> Permutation:
    if not 1 <= i < size:
        raise DomainError(f"s_{i} does not exist in S_{size}")
    images = list(range(1, size + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def longest(size: int) -> Permutation:
    return Permutation(tuple(range(size, 0, -1)))


def from_word(word: Iterable[int], size: int) -> Permutation:
    """The product s_{i_1} s_{i_2} ... s_{i_l} of simple reflections"""
    w = Permutation.identity(size)
    for i in word:
        w = w * simple_reflection(i, size)
    return w


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """
    A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.

    Peels right descents: if w(i) > w(i+1) then w = (w s_i) s_i with
    l(w s_i) = l(w) - 1.
    """
    images = list(w.images)
    word = []
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def coxeter_cm(m: int, n: int) -> tuple[Permutation, tuple[int, ...]]:
    """
    The element c^m of S_{m+n}, c = (1 2 ... m+n), with its reduced word
    (s_m ... s_1)(s_{m+1} ... s_2) ... (s_{m+n-1} ... s_n).
    """
    if m < 1 or n < 1:
        raise DomainError(f"c^m needs m, n >= 1, got m={m}, n={n}")
    size = m + n
    images = tuple((k - 1 + m) % size + 1 for k in range(1, size + 1))
    word = tuple(
        letter
        for block in range(n)
        for letter in range(m + block, block, -1)
    )
    return Permutation(images), word


def parse_permutation(text: str, m: int, n: int) -> Permutation:
    """Parse one-line notation in S_{m+n}; the keyword "top" stands for c^m"""
    if text.strip().lower() == "top":
        return coxeter_cm(m, n)[0]
    if text.strip().lower() in ("e", "id", "identity"):
        return Permutation.identity(m + n)
    y = Permutation.parse(text)
    if y.size != m + n:
        raise DomainError(f"{text!r} is not an element of S_{m + n}")
    return y


def prefix_set(y: Permutation, k: int) -> tuple[int, ...]:
    """Sorted {y(1), ..., y(k)}"""
    if not 1 <= k <= y.size:
        raise DomainError(f"prefix size {k} out of range for S_{y.size}")
    return tuple(sorted(y.images[:k]))


def bruhat_leq(y: Permutation, w: Permutation) -> bool:
    """
    Ehresmann tableau criterion: y <= w iff for every k the sorted prefix
    y([1,k]) is entrywise <= the sorted prefix w([1,k]).
    """
    if y.size != w.size:
        raise DomainError(f"cannot compare S_{y.size} with S_{w.size}")
    for k in range(1, y.size):
        if any(a > b for a, b in zip(prefix_set(y, k), prefix_set(w, k))):
            return False
    return True


def _lower_covers(w: Permutation) -> list[Permutation]:
    """Elements w t (t a transposition) of length exactly l(w) - 1"""
    images = w.images
    out = []
    for a in range(len(images)):
        for b in range(a + 1, len(images)):
            if images[a] > images[b]:
                swapped = list(images)
                swapped[a], swapped[b] = swapped[b], swapped[a]
                candidate = Permutation(tuple(swapped))
                if candidate.length == w.length - 1:
                    out.append(candidate)
    return out


def bruhat_interval(w: Permutation, filter_limit: int | None = None) -> list[Permutation]:
    """
    All y <= w, ordered by (length, one-line notation).

    Filters S_N through bruhat_leq when N <= filter_limit; larger groups walk
    down from w along length-decreasing transpositions.
    """
    filter_limit = Settings.FILTER_LIMIT if filter_limit is None else filter_limit
    if w.size <= filter_limit:
        found = [
            Permutation(images)
            for images in itertools.permutations(range(1, w.size + 1))
            if bruhat_leq(Permutation(images), w)
        ]
    else:
        seen = {w}
        queue = deque([w])
        while queue:
            for lower in _lower_covers(queue.popleft()):
                if lower not in seen:
                    seen.add(lower)
                    queue.append(lower)
        found = list(seen)
    logger.debug("interval below %s has %d elements", w, len(found))
    return sorted(found, key=lambda y: (y.length, y.images))


def bruhat_covers(interval: Sequence[Permutation]) -> list[tuple[Permutation, Permutation]]:
    """
    Cover pairs (y, y') of the poset, taken from the definition: y < y' with
    nothing strictly between. Bitsets keep this quadratic in the interval size.
    """
    size = len(interval)
    up = [0] * size
    down = [0] * size
    for a, y in enumerate(interval):
        for b, z in enumerate(interval):
            if bruhat_leq(y, z):
                up[a] |= 1 << b
                down[b] |= 1 << a
    covers = []
    for a in range(size):
        for b in range(size):
            if a != b and up[a] >> b & 1:
                if up[a] & down[b] == (1 << a) | (1 << b):
                    covers.append((interval[a], interval[b]))
    return covers


def verify_graded_interval(w: Permutation, limit: int | None = None, timing: bool | None = None) -> Certificate:
    """Check that every maximal chain from e to y in [e, w] has length l(y)"""
    limit = Settings.GRADED_LIMIT if limit is None else limit
    with certify("graded_interval", y=w, timing=timing) as cert:
        interval = bruhat_interval(w)
        if len(interval) > limit:
            raise ResourceGuardExceeded(
                f"interval below {w} has {len(interval)} elements (limit {limit})",
                size=len(interval),
                limit=limit,
            )
        covers = bruhat_covers(interval)
        above: dict[Permutation, list[Permutation]] = {y: [] for y in interval}
        indegree = {y: 0 for y in interval}
        for low, high in covers:
            above[low].append(high)
            indegree[high] += 1
            if high.length != low.length + 1:
                cert.fail("cover_length_jump", lower=str(low), upper=str(high))

        # longest and shortest chains from the identity, in topological order
        identity = Permutation.identity(w.size)
        shortest = {identity: 0}
        longest_chain = {identity: 0}
        ready = deque(y for y in interval if indegree[y] == 0)
        while ready:
            y = ready.popleft()
            for z in above[y]:
                shortest[z] = min(shortest.get(z, shortest[y] + 1), shortest[y] + 1)
                longest_chain[z] = max(longest_chain.get(z, 0), longest_chain[y] + 1)
                indegree[z] -= 1
                if indegree[z] == 0:
                    ready.append(z)
        for y in interval:
            if not (shortest.get(y) == longest_chain.get(y) == y.length):
                cert.fail(
                    "ungraded_element",
                    element=str(y),
                    length=y.length,
                    shortest_chain=shortest.get(y),
                    longest_chain=longest_chain.get(y),
                )
        cert.add_witness(
            "interval",
            size=len(interval),
            covers=len(covers),
            max_chain_length=max(longest_chain.values()),
        )
    return cert
