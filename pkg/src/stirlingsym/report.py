"""Verification reports: identity checks are data, not log output."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one named identity check.

    ``params`` records the sizes/orders actually checked.  A failing report
    always carries a ``discrepancy`` dict with keys ``location``, ``lhs`` and
    ``rhs`` pinpointing the first offending coefficient.  ``details`` holds
    optional human-readable notes (e.g. which sign rule matched).
    """

    identity: str
    params: dict
    passed: bool
    discrepancy: dict | None = None
    details: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.passed and not self.discrepancy:
            raise ValueError("a failing report must pinpoint a discrepancy")

    def to_json(self) -> dict:
        out = {"identity": self.identity}
        out.update(self.params)
        out["pass"] = self.passed
        out["discrepancy"] = self.discrepancy
        if self.details:
            out["details"] = list(self.details)
        return out

    def render(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{self.identity} [{params}]: {'pass' if self.passed else 'FAIL'}"
        lines = [head]
        if self.discrepancy:
            d = self.discrepancy
            lines.append(f"  first discrepancy at {d['location']}:")
            lines.append(f"    lhs = {d['lhs']}")
            lines.append(f"    rhs = {d['rhs']}")
        for note in self.details:
            lines.append(f"  {note}")
        return "\n".join(lines)


def series_report(identity: str, params: dict, lhs, rhs,
                  location=lambda n: f"y^{n}") -> VerificationReport:
    """Compare two truncated series coefficientwise into a report.

    On a mismatch the discrepancy drills into the coefficient: for
    symmetric-function coefficients it names the first differing monomial
    term and the two rational values, for t-polynomials the first differing
    power of t.
    """
    for n in range(lhs.order + 1):
        a, b = lhs.coeffs[n], rhs.coeffs[n]
        if not lhs.ring.eq(a, b):
            where, va, vb = _first_difference(a, b)
            spot = location(n) if where is None else f"{location(n)}, {where}"
            return VerificationReport(
                identity,
                params,
                False,
                {"location": spot, "lhs": va, "rhs": vb},
            )
    return VerificationReport(identity, params, True)


def _first_difference(a, b):
    """(location, lhs, rhs) of the first differing term of two coefficients."""
    from .symfunc import SymFunc, TPoly, convert, _term_order_key

    if isinstance(a, SymFunc) and isinstance(b, SymFunc):
        am, bm = convert(a, "m").terms, convert(b, "m").terms
        for lam in sorted(set(am) | set(bm), key=_term_order_key):
            if am.get(lam, 0) != bm.get(lam, 0):
                body = ",".join(str(p) for p in lam)
                from .partitions import rational_str

                return (
                    f"m({body})",
                    rational_str(am.get(lam, 0)),
                    rational_str(bm.get(lam, 0)),
                )
    if isinstance(a, TPoly) and isinstance(b, TPoly):
        from .partitions import rational_str

        for e in sorted(set(a.coeffs) | set(b.coeffs)):
            if a.coeffs.get(e, 0) != b.coeffs.get(e, 0):
                return (
                    f"t^{e}",
                    rational_str(a.coeffs.get(e, 0)),
                    rational_str(b.coeffs.get(e, 0)),
                )
    return None, str(a), str(b)
