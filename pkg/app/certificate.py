"""Verification certificates: what was checked, with which witnesses"""

import json
import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional

from config import Settings

logger = logging.getLogger(__name__)


class Certificate:
    """
    Record of one verified claim.

    A certificate starts out passing; any call to fail() flips it and stores the
    counterexample as a witness, so a failing certificate always carries one.
    """

    def __init__(self, claim: str, m: int = None, n: int = None, y=None):
        self.claim = claim
        self.m = m
        self.n = n
        self.y = None if y is None else str(y)
        self.status = "pass"
        self.witnesses: List[Dict[str, Any]] = []
        self.scalars: List[Dict[str, Any]] = []
        self.elapsed_ms: Optional[float] = None

    def add_witness(self, kind: str, **data):
        """Attach supporting data (rendered elements, sizes, incidence rows)"""
        self.witnesses.append({"kind": kind, **data})

    def fail(self, kind: str, **data):
        """Mark the claim refuted by the given counterexample"""
        self.status = "fail"
        self.witnesses.append({"kind": kind, "counterexample": True, **data})
        logger.info("%s failed (m=%s, n=%s, y=%s): %s", self.claim, self.m, self.n, self.y, kind)

    def add_scalar(self, label: str, predicted: Optional[int], observed: Optional[int], **data):
        """Record a predicted q-exponent next to the observed one; a mismatch fails"""
        entry = {"label": label, "predicted": predicted, "observed": observed, **data}
        self.scalars.append(entry)
        if observed is None or predicted != observed:
            self.fail("scalar_mismatch", **entry)

    def merge(self, other: "Certificate", prefix: str = None):
        """Fold a sub-certificate's witnesses and scalars into this one"""
        tag = prefix or other.claim
        for witness in other.witnesses:
            self.witnesses.append({"from": tag, **witness})
        for entry in other.scalars:
            self.scalars.append({"from": tag, **entry})
        if not other.passed:
            self.status = "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def counterexamples(self) -> List[Dict[str, Any]]:
        return [w for w in self.witnesses if w.get("counterexample")]

    def summary(self) -> Dict[str, Any]:
        """Short structured summary for tables"""
        return {
            "claim": self.claim,
            "y": self.y,
            "status": self.status,
            "witnesses": len(self.witnesses),
            "scalars": len(self.scalars),
            "counterexamples": len(self.counterexamples),
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "m": self.m,
            "n": self.n,
            "y": self.y,
            "status": self.status,
            "witnesses": self.witnesses,
            "predicted_vs_observed_scalars": self.scalars,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        cert = cls(data["claim"], data.get("m"), data.get("n"), data.get("y"))
        cert.status = data["status"]
        cert.witnesses = list(data.get("witnesses", []))
        cert.scalars = list(data.get("predicted_vs_observed_scalars", []))
        cert.elapsed_ms = data.get("elapsed_ms")
        return cert

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str)

    def __repr__(self) -> str:
        return f"Certificate({self.claim!r}, y={self.y!r}, status={self.status!r})"


@contextmanager
def certify(claim: str, m: int = None, n: int = None, y=None, timing: bool = None) -> Iterator[Certificate]:
    """
    Open a certificate for a claim and time the block when timing is enabled.

    Exceptions propagate; guard exhaustion is not a verification outcome.
    """
    timing = Settings.TIMING if timing is None else timing
    cert = Certificate(claim, m, n, y)
    start = time.perf_counter()
    yield cert
    if timing:
        cert.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    logger.info("%s (m=%s, n=%s, y=%s): %s", claim, m, n, cert.y, cert.status)
