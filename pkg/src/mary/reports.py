"""Residue reports shared by every verification routine."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Sample:
    n: int
    arg: int
    residue: int
    # set only when a sample is checked against its own modulus
    modulus: Optional[int] = None
    label: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        d = {"n": self.n, "arg": self.arg, "residue": self.residue}
        if self.modulus is not None:
            d["modulus"] = self.modulus
        if self.label is not None:
            d["label"] = self.label
        return d


@dataclass
class CongruenceReport:
    """Per-sample residues against a modulus plus the list of failing samples.

    ``violations`` holds the ``n`` of every sample whose residue differs from
    ``expected_residue``.  ``skipped`` lists samples that were not evaluated
    (e.g. a negative argument).
    """

    check: str
    modulus: int
    params: Dict[str, Any] = field(default_factory=dict)
    samples: List[Sample] = field(default_factory=list)
    violations: List[int] = field(default_factory=list)
    expected_residue: int = 0
    skipped: List[int] = field(default_factory=list)

    def add(self, n: int, arg: int, value: int, modulus: Optional[int] = None,
            label: Optional[str] = None, expected: Optional[int] = None, assert_it: bool = True) -> Sample:
        mod = self.modulus if modulus is None else modulus
        s = Sample(n, arg, value % mod, modulus, label)
        self.samples.append(s)
        want = self.expected_residue if expected is None else expected
        if assert_it and s.residue != want % mod:
            self.violations.append(n)
        return s

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "check": self.check,
            "params": self.params,
            "modulus": self.modulus,
            "expected_residue": self.expected_residue,
            "samples": [s.to_dict() for s in self.samples],
            "violations": list(self.violations),
            "verdict": self.verdict,
        }
        if self.skipped:
            d["skipped"] = list(self.skipped)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "arg", "residue", "modulus"])
        for s in self.samples:
            w.writerow([s.n, s.arg, s.residue, self.modulus if s.modulus is None else s.modulus])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.check}: {self.verdict} (modulus {self.modulus}, {len(self.samples)} samples)"]
        if self.violations:
            lines.append("violations at n = " + ", ".join(map(str, self.violations[:50])))
        if self.skipped:
            lines.append("skipped n = " + ", ".join(map(str, self.skipped[:50])))
        return "\n".join(lines)
