"""Per-relation pass/fail records for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckEntry:
    relation_label: str
    status: str  # "pass" | "fail"
    detail: str | None = None
    residual_sample: str | None = None

    def to_obj(self) -> dict:
        obj = {"relation_label": self.relation_label, "status": self.status}
        if self.detail is not None:
            obj["detail"] = self.detail
        if self.residual_sample is not None:
            obj["residual_sample"] = self.residual_sample
        return obj


@dataclass
class VerificationReport:
    suite: str
    entries: list[CheckEntry] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add_pass(self, label: str, detail: str | None = None):
        self.entries.append(CheckEntry(label, "pass", detail))

    def add_fail(self, label: str, detail: str, residual_sample: str | None = None):
        self.entries.append(CheckEntry(label, "fail", detail, residual_sample))

    @property
    def passed(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.status == "fail"]

    def check_matrix_identity(self, label: str, lhs, rhs):
        """Record exact equality of two polynomial matrices, locating the
        first bad entry on failure."""
        diff = lhs.first_difference(rhs)
        if diff is None:
            self.add_pass(label)
        else:
            i, j, a, b = diff
            self.add_fail(
                label,
                f"first mismatch at ({i},{j})",
                f"lhs={a} rhs={b}",
            )

    def check_series_zero(self, label: str, residual, min_order: int):
        """Record that a normal-ordered residual vanishes identically through
        at least ``min_order`` in the deformation parameter."""
        if residual.order < min_order:
            self.add_fail(
                label,
                f"residual known only to order {residual.order} < {min_order}",
            )
            return
        bad = residual.first_nonzero()
        if bad is None:
            self.add_pass(label, f"zero through order {residual.order}")
        else:
            word, order, coeff = bad
            self.add_fail(
                label,
                f"first nonzero at order {order}, monomial {word}",
                str(coeff),
            )

    def to_obj(self) -> dict:
        obj = {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "entries": [
                e.to_obj() for e in sorted(self.entries, key=lambda e: e.relation_label)
            ],
        }
        if self.meta:
            obj["meta"] = dict(sorted(self.meta.items()))
        return obj
