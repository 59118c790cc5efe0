"""Run configuration and the verification session that orchestrates library calls"""

import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, List, Optional, Sequence

from config import Settings
from .certificate import Certificate
from .errors import DomainError
from .exterior import verify_exterior
from .polynormal import (
    check_below_top,
    generating_sequence,
    predicted_scalar,
    separation_pairs,
    upsilon,
    verify_height,
    verify_polynormal,
    verify_poset,
    verify_separation_pair,
)
from .qmatrix import get_algebra
from .weyl import Permutation, bruhat_covers, bruhat_interval, coxeter_cm, parse_permutation, verify_graded_interval

logger = logging.getLogger(__name__)

VERIFY_KINDS = ("polynormal", "poset", "heights", "separation", "exterior", "graded")


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one CLI run"""

    m: int
    n: int
    y: Optional[Permutation] = None
    degree_guard: Optional[int] = None
    output_format: str = field(default_factory=lambda: Settings.OUTPUT_FORMAT)
    dedup: bool = False
    jobs: int = field(default_factory=lambda: Settings.JOBS)
    pairs: str = "covers"
    timing: bool = field(default_factory=lambda: Settings.TIMING)
    max_cells: int = field(default_factory=lambda: Settings.MAX_CELLS)

    @classmethod
    def from_text(cls, m: int, n: int, y: Optional[str] = None, **options) -> "RunConfig":
        """Build from CLI strings; y may be one-line notation or "top"."""
        if m < 1 or n < 1:
            raise DomainError(f"m and n must be positive, got m={m}, n={n}")
        parsed = None if y is None else parse_permutation(y, m, n)
        options = {key: value for key, value in options.items() if value is not None}
        return cls(m, n, parsed, **options).validate()

    def validate(self) -> "RunConfig":
        if self.m < 1 or self.n < 1:
            raise DomainError(f"m and n must be positive, got m={self.m}, n={self.n}")
        if self.m * self.n > self.max_cells:
            raise DomainError(f"m*n = {self.m * self.n} exceeds the cap of {self.max_cells} cells")
        if self.degree_guard is not None and self.degree_guard < 1:
            raise DomainError(f"degree guard must be positive, got {self.degree_guard}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be positive, got {self.jobs}")
        if self.output_format not in Settings.OUTPUT_FORMATS:
            raise DomainError(f"unknown output format {self.output_format!r}")
        if self.pairs not in ("covers", "all"):
            raise DomainError(f"pairs must be 'covers' or 'all', got {self.pairs!r}")
        if self.y is not None:
            check_below_top(self.y, self.m, self.n)
        return self

    @property
    def top(self) -> Permutation:
        return coxeter_cm(self.m, self.n)[0]

    @property
    def guard(self) -> int:
        return self.degree_guard if self.degree_guard is not None else Settings.degree_guard_for(self.m, self.n)

    def targets(self) -> List[Permutation]:
        """The chosen y, or the whole interval below c^m"""
        return [self.y] if self.y is not None else bruhat_interval(self.top)


class VerificationSession:
    """
    Runs constructions and verifications for one configuration.

    Independent y values (or pairs) go through a worker pool when jobs > 1;
    results come back in input order.
    """

    def __init__(self, config: RunConfig):
        self.config = config.validate()
        self.algebra = get_algebra(config.m, config.n)

    def _map(self, fn: Callable[..., Certificate], argument_lists: Sequence[tuple]) -> List[Certificate]:
        if self.config.jobs > 1 and len(argument_lists) > 1:
            logger.debug("dispatching %d tasks to %d workers", len(argument_lists), self.config.jobs)
            with Pool(self.config.jobs) as pool:
                return pool.starmap(fn, argument_lists)
        return [fn(*arguments) for arguments in argument_lists]

    # constructions

    def list_primes(self) -> List[dict]:
        cfg = self.config
        rows = []
        for y in cfg.targets():
            sequence = generating_sequence(y, cfg.m, cfg.n, dedup=cfg.dedup)
            rows.append(
                {
                    "y": str(y),
                    "length": y.length,
                    "upsilon": len(upsilon(y, cfg.m, cfg.n)),
                    "minors": [str(minor) for _, minor in sequence],
                }
            )
        return rows

    def generators(self) -> List[dict]:
        cfg = self.config
        if cfg.y is None:
            raise DomainError("listing generators needs a permutation y")
        entries = []
        for position, (index, minor) in enumerate(generating_sequence(cfg.y, cfg.m, cfg.n, dedup=cfg.dedup), 1):
            entries.append(
                {
                    "position": position,
                    "J": list(index.J),
                    "rows": list(index.rows),
                    "cols": list(index.cols),
                    "minor": str(minor),
                    "scalars": {
                        self.algebra.var_name(self.algebra.index(a, b)): predicted_scalar(index, (a, b), cfg.m, cfg.n)
                        for a, b in self.algebra.generators()
                    },
                }
            )
        return entries

    def poset_graph(self) -> tuple[List[dict], List[tuple[str, str]]]:
        cfg = self.config
        interval = bruhat_interval(cfg.top)
        nodes = [
            {"y": str(y), "length": y.length, "upsilon": len(upsilon(y, cfg.m, cfg.n))}
            for y in interval
        ]
        edges = [(str(low), str(high)) for low, high in bruhat_covers(interval)]
        return nodes, edges

    # verifications

    def verify(self, kind: str) -> List[Certificate]:
        cfg = self.config
        if kind == "all":
            return [cert for each in VERIFY_KINDS for cert in self.verify(each)]
        if kind == "polynormal":
            return self._map(
                verify_polynormal, [(y, cfg.m, cfg.n, cfg.degree_guard, cfg.timing) for y in cfg.targets()]
            )
        if kind == "heights":
            return self._map(verify_height, [(y, cfg.m, cfg.n, cfg.degree_guard, cfg.timing) for y in cfg.targets()])
        if kind == "poset":
            return [verify_poset(cfg.m, cfg.n, cfg.degree_guard, cfg.timing)]
        if kind == "separation":
            pairs = separation_pairs(cfg.m, cfg.n, cfg.pairs)
            if cfg.y is not None:
                pairs = [(low, high) for low, high in pairs if high == cfg.y]
            return self._map(
                verify_separation_pair, [(low, high, cfg.m, cfg.n, cfg.degree_guard, cfg.timing) for low, high in pairs]
            )
        if kind == "exterior":
            return verify_exterior(cfg.m + cfg.n, cfg.m, cfg.n, timing=cfg.timing)
        if kind == "graded":
            return [verify_graded_interval(cfg.top, timing=cfg.timing)]
        raise DomainError(f"unknown verification kind {kind!r}")
