"""Rendering of primes, generators and certificates as text, JSON or DOT"""

import json
from typing import Iterable, List, Sequence

from .certificate import Certificate


def _table(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [max([len(h)] + [len(row[c]) for row in rows]) for c, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


class ReportFormatter:
    """Formats session results for one output format"""

    def __init__(self, output_format: str = "text"):
        self.output_format = output_format

    def format_primes(self, rows: List[dict]) -> str:
        if self.output_format == "json":
            return json.dumps(rows, indent=2)
        body = _table(
            ["y", "l(y)", "|Upsilon|", "generators"],
            [[row["y"], row["length"], row["upsilon"], "; ".join(row["minors"]) or "(zero ideal)"] for row in rows],
        )
        return f"{body}\n{len(rows)} torus-invariant primes"

    def format_generators(self, entries: List[dict]) -> str:
        if self.output_format == "json":
            return json.dumps(entries, indent=2)
        if not entries:
            return "empty sequence: zero ideal"
        lines = []
        for entry in entries:
            J = "{" + ",".join(str(j) for j in entry["J"]) + "}"
            scalars = " ".join(f"{name}:{exp}" for name, exp in entry["scalars"].items())
            lines.append(f"{entry['position']}. Delta{J} = {entry['minor']}")
            lines.append(f"   q-exponents: {scalars}")
        return "\n".join(lines)

    def format_certificates(self, certificates: List[Certificate]) -> str:
        """JSON lines, or one summary line per certificate plus counterexamples"""
        if self.output_format == "json":
            return "\n".join(cert.to_json() for cert in certificates)
        lines = []
        for cert in certificates:
            summary = cert.summary()
            where = f"m={cert.m} n={cert.n}" if cert.m is not None else ""
            timing = f" {cert.elapsed_ms}ms" if cert.elapsed_ms is not None else ""
            lines.append(
                f"{summary['status'].upper():4}  {cert.claim:24} {where:8} y={cert.y or '-':14} "
                f"witnesses={summary['witnesses']} scalars={summary['scalars']}{timing}".rstrip()
            )
            for witness in cert.counterexamples[:5]:
                detail = ", ".join(f"{key}={value}" for key, value in witness.items() if key != "counterexample")
                lines.append(f"      {detail}")
        passed = sum(cert.passed for cert in certificates)
        lines.append(f"{passed}/{len(certificates)} certificates pass")
        return "\n".join(lines)

    @staticmethod
    def format_dot(nodes: List[dict], edges: List[tuple[str, str]], m: int, n: int) -> str:
        """Bruhat covers of the torus-invariant primes, labeled y / l(y) / |Upsilon(y)|"""
        lines = [f'digraph "tprimes_{m}x{n}" {{', "  rankdir=BT;"]
        for node in nodes:
            label = f"{node['y']} / {node['length']} / {node['upsilon']}"
            lines.append(f'  "{node["y"]}" [label="{label}"];')
        for low, high in edges:
            lines.append(f'  "{low}" -> "{high}";')
        lines.append("}")
        return "\n".join(lines)
