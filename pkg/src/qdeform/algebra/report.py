"""Check and validation reports shared by every engine module."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional


class QDeformError(Exception):
    """Base class for every error raised by the qdeform engine."""
    pass


@dataclass(frozen=True)
class CheckEntry:
    """One verified identity: axiom tag, subject, outcome and residue."""
    axiom: str
    subject: str
    ok: bool
    residue: str = ""
    info: bool = False

    @property
    def status(self) -> str:
        if self.info:
            return "INFO"
        return "PASS" if self.ok else "FAIL"

    def line(self) -> str:
        text = f"{self.axiom} {self.subject} {self.status}"
        if self.residue:
            text += f" [{self.residue}]"
        return text


@dataclass
class CheckReport:
    """Ordered list of check entries produced by a verifier."""
    title: str
    entries: List[CheckEntry] = field(default_factory=list)

    def add(self, axiom: str, subject: str, ok: bool, residue: str = "") -> CheckEntry:
        entry = CheckEntry(axiom, subject, ok, "" if ok else residue)
        self.entries.append(entry)
        return entry

    def note(self, axiom: str, subject: str, text: str) -> CheckEntry:
        entry = CheckEntry(axiom, subject, True, text, info=True)
        self.entries.append(entry)
        return entry

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self) -> bool:
        return all(entry.ok for entry in self.entries)

    def failures(self) -> List[CheckEntry]:
        return [entry for entry in self.entries if not entry.ok]

    def first_failure(self) -> Optional[CheckEntry]:
        for entry in self.entries:
            if not entry.ok:
                return entry
        return None

    def summary(self) -> Dict[str, Dict[str, int]]:
        """Per-axiom pass/fail counts, in first-seen axiom order."""
        counts: Dict[str, Dict[str, int]] = {}
        for entry in self.entries:
            if entry.info:
                continue
            bucket = counts.setdefault(entry.axiom, {"pass": 0, "fail": 0})
            bucket["pass" if entry.ok else "fail"] += 1
        return counts

    def lines(self, verbose: bool = False) -> List[str]:
        out = [f"# {self.title}"]
        if verbose:
            out.extend(entry.line() for entry in self.entries)
        else:
            out.extend(entry.line() for entry in self.entries if not entry.ok or entry.info)
            for axiom, bucket in self.summary().items():
                out.append(f"{axiom} pass={bucket['pass']} fail={bucket['fail']}")
        out.append("RESULT " + ("PASS" if self.passed else "FAIL"))
        return out


@dataclass
class ValidationReport:
    """Outcome of datum validation: a list of human-readable issues."""
    issues: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.issues

    def fail(self, kind: str, message: str) -> None:
        self.issues.append(f"fail({kind}): {message}")

    def kinds(self) -> List[str]:
        return [issue.split(")", 1)[0][len("fail("):] for issue in self.issues]

    def __str__(self):
        return "pass" if self.passed else "\n".join(self.issues)
