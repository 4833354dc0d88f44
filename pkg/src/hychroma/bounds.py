"""Arithmetic bounds on hypercube distance chromatic numbers.

Two quantities are tracked: the minimum colors needed when all pairs
within distance d must differ (chi_prime) and when only pairs at distance
exactly d must differ (chi).  Every rule here is exact big-integer
arithmetic; ceil(log2 x) comes from bit length, never floating point.

Upper-bound rules for chi with even d:

* counting: 2^ceil(log2(1 + C(n-1, d-1))), the coset count the greedy
  parity-check construction is guaranteed to reach.
* direct-sum: 2^(n-d+1-k) where k is a known dimension of a length
  n-d+1 code with minimum distance d+1; stacking that code beside the
  full space of length d-1 gives a forbidden-distance code.
* doubling: (d+1) * ((d+2)/2)^((d(d+2)/8) * ceil(log2 n)), an older
  recursive-halving bound kept for comparison.

Known dimensions k(n, d) come from a small table: three builtin entries,
user CSV files, greedy witnesses, or the tiny-n oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .bitops import ceil_log2
from .errors import IntegrityError, ParseError, UsageError

KTABLE_SOURCES = ("builtin", "user-file", "greedy-witness", "exact-oracle")

# exact sizes of the largest distance-6 binary codes at the quaternary
# construction lengths; consumed as reference facts, not reproved here
MAX_CODE_SIZE_REFERENCE = {
    (16, 6): 1 << 8,
    (64, 6): 1 << 52,
    (256, 6): 1 << 240,
}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# Known-dimension table

class KTable:
    """Known dimensions k(n, d) of linear codes with minimum distance d."""

    def __init__(self, entries=None):
        self.entries: dict[tuple[int, int], tuple[int, str]] = {}
        for (n, d), (k, source) in (entries or {}).items():
            self.set(n, d, k, source)

    def set(self, n: int, d: int, k: int, source: str) -> None:
        if source not in KTABLE_SOURCES:
            raise UsageError(
                f"unknown source {source!r}; expected one of {KTABLE_SOURCES}")
        if not 0 <= k <= n:
            raise UsageError(f"dimension {k} outside 0..{n}")
        self.entries[(n, d)] = (k, source)

    def get(self, n: int, d: int) -> tuple[int, str] | None:
        return self.entries.get((n, d))

    def merge(self, other: "KTable") -> None:
        """Absorb the other table; its entries win on collision."""
        self.entries.update(other.entries)

    def __len__(self) -> int:
        return len(self.entries)


def builtin_k_table() -> KTable:
    """The three dimensions every comparison in this package relies on."""
    return KTable({
        (10, 5): (3, "builtin"),
        (11, 5): (4, "builtin"),
        (23, 7): (12, "builtin"),
    })


def format_k_table_csv(kt: KTable) -> str:
    lines = ["n,d,k,source"]
    for (n, d) in sorted(kt.entries):
        k, source = kt.entries[(n, d)]
        lines.append(f"{n},{d},{k},{source}")
    return "\n".join(lines) + "\n"


def parse_k_table_csv(text: str) -> KTable:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "n,d,k,source":
        raise ParseError("k-table CSV must start with the header n,d,k,source")
    kt = KTable()
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != 4:
            raise ParseError(f"bad k-table row: {line!r}")
        try:
            n, d, k = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"non-integer field in row: {line!r}") from None
        source = parts[3]
        if source not in KTABLE_SOURCES:
            raise ParseError(
                f"unknown source {source!r} in row: {line!r}")
        if (n, d) in kt.entries:
            raise ParseError(f"duplicate entry for n={n} d={d}")
        kt.set(n, d, k, source)
    return kt


# ---------------------------------------------------------------------------
# Individual bound rules

def chi_prime_lower_packing(n: int, d: int, a_value: int) -> int:
    """ceil(2^n / A) where A is the largest code with min distance d+1.

    Color classes of a coloring where all pairs within distance d differ
    are codes of minimum distance d+1, so none can exceed A.
    """
    if a_value <= 0:
        raise UsageError("the code-size input must be positive")
    return _ceil_div(1 << n, a_value)


def chi_lower_packing(n: int, d: int, q_value: int) -> int:
    """ceil(2^n / Q) where Q is the largest code avoiding distance d."""
    if q_value <= 0:
        raise UsageError("the code-size input must be positive")
    return _ceil_div(1 << n, q_value)


def chi_upper_counting(n: int, d: int) -> int:
    """2^ceil(log2(1 + C(n-1, d-1))): the guaranteed greedy coset count."""
    if d % 2:
        raise UsageError("the distance must be even")
    if not 2 <= d <= n:
        raise UsageError(f"need 2 <= d <= n, got d={d}, n={n}")
    return 1 << ceil_log2(1 + comb(n - 1, d - 1))


def chi_upper_direct_sum(n: int, d: int, kt: KTable) -> int:
    """2^(n-d+1-k) using a known dimension k(n-d+1, d+1) from the table."""
    if d % 2:
        raise UsageError("the distance must be even")
    if n < 2 * d:
        raise UsageError(f"need n >= 2d, got n={n}, d={d}")
    entry = kt.get(n - d + 1, d + 1)
    if entry is None:
        raise UsageError(
            f"no table entry for k({n - d + 1},{d + 1}); supply one via "
            f"a k-table file")
    k, _ = entry
    return 1 << (n - d + 1 - k)


def chi_upper_doubling(n: int, d: int) -> int:
    """(d+1) * ((d+2)/2)^((d(d+2)/8) * ceil(log2 n)), kept for comparison."""
    if d % 2:
        raise UsageError("the distance must be even")
    if n < 2:
        raise UsageError("need n >= 2")
    base = (d + 2) // 2
    exponent = (d * (d + 2) // 8) * ceil_log2(n)
    return (d + 1) * base ** exponent


def quaternary_exact_values(r: int) -> tuple[int, int]:
    """Exact chi_prime values certified by the quaternary constructions.

    For odd r >= 3: distance-4 colorings of the (2^(r+1)-1)-cube need
    exactly 2^(2r+1) colors, and distance-5 colorings of the
    2^(r+1)-cube need exactly 4^(r+1).
    """
    if r < 3 or r % 2 == 0:
        raise UsageError("need odd r >= 3")
    return 1 << (2 * r + 1), 1 << (2 * r + 2)


def product_upper(n1: int, n2: int, d: int,
                  chi_prime_left: int, chi_right: int) -> int:
    """chi_d(n1+n2) <= chi_prime_d(n1) * chi_d(n2) for even d."""
    if d % 2:
        raise UsageError("the distance must be even")
    if chi_prime_left < 1 or chi_right < 1:
        raise UsageError("color counts must be positive")
    return chi_prime_left * chi_right


def resolve_max_code_size(n: int, delta: int,
                          use_oracle: bool = False) -> tuple[int, str] | None:
    """Best known exact A(n, delta), or None.

    Tries the reference constants, then the identity A(n, delta) =
    A(n+1, delta+1) for odd delta, then (on request) the tiny-cube
    oracle.  Returns (value, description-of-source).
    """
    if delta == 1:
        return 1 << n, "full space"
    if delta > n:
        return 1, "single word"
    if delta % 2:
        hit = MAX_CODE_SIZE_REFERENCE.get((n + 1, delta + 1))
        if hit is not None:
            return hit, f"reference A({n + 1},{delta + 1})"
    else:
        hit = MAX_CODE_SIZE_REFERENCE.get((n, delta))
        if hit is not None:
            return hit, "reference"
    if use_oracle and (1 << n) <= 256:
        from .verify import exact_A_small

        return exact_A_small(n, delta), "oracle"
    if use_oracle and delta % 2 and (1 << (n + 1)) <= 256:
        from .verify import exact_A_small

        return exact_A_small(n + 1, delta + 1), f"oracle A({n + 1},{delta + 1})"
    return None


# ---------------------------------------------------------------------------
# Reports and the table builder

@dataclass(frozen=True)
class BoundValue:
    value: int
    rule: str
    inputs: str = ""
    witness: str | None = None


@dataclass
class BoundReport:
    quantity: str
    n: int
    d: int
    lower_bounds: tuple[BoundValue, ...] = ()
    upper_bounds: tuple[BoundValue, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def best_lower(self) -> int | None:
        return max((b.value for b in self.lower_bounds), default=None)

    @property
    def best_upper(self) -> int | None:
        return min((b.value for b in self.upper_bounds), default=None)


def _chi_report(n: int, d: int, kt: KTable, include_greedy: bool,
                include_oracle: bool) -> BoundReport:
    lower: list[BoundValue] = []
    upper: list[BoundValue] = []
    notes: list[str] = []
    if d > n:
        # no pair of vertices sits at distance d, one color suffices
        lower.append(BoundValue(1, "trivial"))
        upper.append(BoundValue(1, "trivial"))
        return BoundReport("chi", n, d, tuple(lower), tuple(upper), tuple(notes))
    lower.append(BoundValue(2, "trivial"))
    if d % 2:
        upper.append(BoundValue(2, "parity", witness=f"parity n={n} d={d}"))
    else:
        upper.append(BoundValue(1 << n, "trivial"))
        upper.append(BoundValue(chi_upper_counting(n, d), "counting",
                                f"m={ceil_log2(1 + comb(n - 1, d - 1))}"))
        if n >= 2 * d:
            entry = kt.get(n - d + 1, d + 1)
            if entry is None:
                notes.append(
                    f"direct-sum skipped: no k({n - d + 1},{d + 1}) entry")
            else:
                k, source = entry
                upper.append(BoundValue(
                    chi_upper_direct_sum(n, d, kt), "direct-sum",
                    f"k({n - d + 1},{d + 1})={k} [{source}]"))
        if n >= 2:
            upper.append(BoundValue(chi_upper_doubling(n, d), "doubling"))
        if include_greedy:
            from .errors import GuardError
            from .forbidden import code_from_parity, greedy_forbidden_matrix

            try:
                code = code_from_parity(greedy_forbidden_matrix(n, d), d)
            except GuardError as exc:
                notes.append(f"greedy skipped: {exc}")
            else:
                upper.append(BoundValue(
                    1 << (n - code.dimension), "greedy-witness",
                    f"k={code.dimension}",
                    witness=f"forbidden-greedy n={n} d={d}"))
        if include_oracle and (1 << n) <= 256:
            from .verify import exact_Q_small

            q_value = exact_Q_small(n, d)
            lower.append(BoundValue(
                chi_lower_packing(n, d, q_value), "packing",
                f"Q({n},{d})={q_value} [oracle]"))
    if include_oracle and (1 << n) <= 64:
        from .verify import exact_chi_small

        exact = exact_chi_small(n, d, "exact")
        lower.append(BoundValue(exact, "exact-oracle"))
        upper.append(BoundValue(exact, "exact-oracle"))
    return BoundReport("chi", n, d, tuple(lower), tuple(upper), tuple(notes))


def _chi_prime_report(n: int, d: int, kt: KTable,
                      include_oracle: bool) -> BoundReport:
    lower: list[BoundValue] = []
    upper: list[BoundValue] = []
    notes: list[str] = []
    if d >= n:
        # every pair is within distance d, so all colors must differ
        lower.append(BoundValue(1 << n, "trivial"))
        upper.append(BoundValue(1 << n, "trivial"))
        return BoundReport(
            "chi_prime", n, d, tuple(lower), tuple(upper), tuple(notes))
    lower.append(BoundValue(2, "trivial"))
    upper.append(BoundValue(1 << n, "trivial"))
    resolved = resolve_max_code_size(n, d + 1, use_oracle=include_oracle)
    if resolved is None:
        notes.append(f"packing skipped: A({n},{d + 1}) unknown")
    else:
        a_value, source = resolved
        lower.append(BoundValue(
            chi_prime_lower_packing(n, d, a_value), "packing",
            f"A({n},{d + 1})={a_value} [{source}]"))
    entry = kt.get(n, d + 1)
    if entry is not None:
        k, source = entry
        upper.append(BoundValue(
            1 << (n - k), "linear-coset", f"k({n},{d + 1})={k} [{source}]"))
    if d == 4 and (n + 1).bit_count() == 1:
        r = (n + 1).bit_length() - 2
        if r >= 3 and r % 2:
            value = quaternary_exact_values(r)[0]
            lower.append(BoundValue(value, "quaternary-exact", f"r={r}"))
            upper.append(BoundValue(
                value, "quaternary-exact", f"r={r}",
                witness=f"preparata-punctured r={r}"))
    if d == 5 and n.bit_count() == 1:
        r = n.bit_length() - 2
        if r >= 3 and r % 2:
            value = quaternary_exact_values(r)[1]
            lower.append(BoundValue(value, "quaternary-exact", f"r={r}"))
            upper.append(BoundValue(
                value, "quaternary-exact", f"r={r}",
                witness=f"preparata-coset r={r}"))
    if include_oracle and (1 << n) <= 64:
        from .verify import exact_chi_small

        exact = exact_chi_small(n, d, "atmost")
        lower.append(BoundValue(exact, "exact-oracle"))
        upper.append(BoundValue(exact, "exact-oracle"))
    return BoundReport(
        "chi_prime", n, d, tuple(lower), tuple(upper), tuple(notes))


def bound_table(quantity: str, d: int, ns, kt: KTable | None = None,
                include_greedy: bool = False,
                include_oracle: bool = False) -> list[BoundReport]:
    """One report per n, every applicable arithmetic rule evaluated.

    Greedy witnesses and tiny-cube oracles only run when asked: they cost
    real time, while the default rules are instant lookups.
    """
    if quantity not in ("chi", "chi_prime"):
        raise UsageError(
            f"quantity must be 'chi' or 'chi_prime', got {quantity!r}")
    if d < 1:
        raise UsageError("the distance must be positive")
    table = kt if kt is not None else builtin_k_table()
    reports = []
    for n in ns:
        if n < 1:
            raise UsageError(f"dimension {n} must be positive")
        if quantity == "chi":
            report = _chi_report(n, d, table, include_greedy, include_oracle)
        else:
            report = _chi_prime_report(n, d, table, include_oracle)
        low, high = report.best_lower, report.best_upper
        if low is not None and high is not None and low > high:
            raise IntegrityError(
                f"inconsistent bounds for {quantity} n={n} d={d}: "
                f"lower {low} exceeds upper {high}; check the k-table")
        reports.append(report)
    return reports


# ---------------------------------------------------------------------------
# Rendering

def _bound_line(kind: str, b: BoundValue) -> str:
    parts = [f"  {kind} {b.value} {b.rule}"]
    if b.inputs:
        parts.append(b.inputs)
    if b.witness:
        parts.append(f"witness={b.witness}")
    return " ".join(parts)


def render_bound_reports_text(reports) -> str:
    lines = []
    for r in reports:
        lines.append(f"{r.quantity} d={r.d} n={r.n}: "
                     f"lower {r.best_lower} upper {r.best_upper}")
        for b in r.lower_bounds:
            lines.append(_bound_line("lower", b))
        for b in r.upper_bounds:
            lines.append(_bound_line("upper", b))
        for note in r.notes:
            lines.append(f"  note {note}")
    return "\n".join(lines) + "\n"


def render_bound_reports_csv(reports) -> str:
    lines = ["quantity,n,d,kind,value,rule,inputs,witness,best"]

    def cell(text: str) -> str:
        return f'"{text}"' if "," in text else text

    for r in reports:
        for kind, bounds, best in (("lower", r.lower_bounds, r.best_lower),
                                   ("upper", r.upper_bounds, r.best_upper)):
            for b in bounds:
                lines.append(",".join([
                    r.quantity, str(r.n), str(r.d), kind, str(b.value),
                    b.rule, cell(b.inputs), cell(b.witness or ""),
                    "yes" if b.value == best else "no"]))
    return "\n".join(lines) + "\n"


__all__ = [
    "KTable", "KTABLE_SOURCES", "builtin_k_table",
    "format_k_table_csv", "parse_k_table_csv",
    "chi_prime_lower_packing", "chi_lower_packing",
    "chi_upper_counting", "chi_upper_direct_sum", "chi_upper_doubling",
    "quaternary_exact_values", "product_upper", "resolve_max_code_size",
    "MAX_CODE_SIZE_REFERENCE",
    "BoundValue", "BoundReport", "bound_table",
    "render_bound_reports_text", "render_bound_reports_csv",
]
