"""m-gonal forms and the exhaustive representation engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ._guard import check_order, check_target
from .polygonal import eval_polygonal, values_up_to

Witness = tuple[int, ...]


@dataclass(frozen=True)
class MGonalForm:
    """The form a_1 P_m(x_1) + ... + a_n P_m(x_n), coefficients kept ascending."""

    m: int
    coeffs: tuple[int, ...]

    def __init__(self, m: int, coeffs):
        check_order(m)
        coeffs = tuple(sorted(int(a) for a in coeffs))
        if not coeffs:
            raise ValueError("a form needs at least one coefficient")
        if coeffs[0] < 1:
            raise ValueError(f"coefficients must be positive, got {coeffs}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __call__(self, x) -> int:
        if len(x) != len(self.coeffs):
            raise ValueError("witness length differs from the form's rank")
        return sum(a * eval_polygonal(self.m, xi) for a, xi in zip(self.coeffs, x))

    def extended(self, a: int) -> MGonalForm:
        return MGonalForm(self.m, self.coeffs + (a,))

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.coeffs)) + f">_{self.m}"


@dataclass(frozen=True)
class CoverageReport:
    form: MGonalForm
    checked_up_to: int
    missing: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return not self.missing

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.form.m,
            "coeffs": list(self.form.coeffs),
            "checked_up_to": self.checked_up_to,
            "missing": list(self.missing),
        }


def represents(form: MGonalForm, n: int) -> Witness | None:
    """Search for x in Z^n with form(x) == n.

    Depth-first over variables from the largest coefficient down, indices in
    the order 0, 1, -1, 2, -2, ...; the first hit is returned, aligned with
    ``form.coeffs``. The last variable is solved by table lookup.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_target(n)
    m = form.m
    # coeffs are ascending, so this is descending-coefficient order
    order = list(reversed(range(form.rank)))
    tables = {}
    for a in set(form.coeffs):
        tables[a] = values_up_to(m, n, a)
    last = order[-1]
    last_lookup: dict[int, int] = {}
    for x, v in tables[form.coeffs[last]]:
        last_lookup.setdefault(v, x)

    x = [0] * form.rank

    def dfs(depth: int, remaining: int) -> bool:
        i = order[depth]
        if depth == len(order) - 1:
            hit = last_lookup.get(remaining)
            if hit is None:
                return False
            x[i] = hit
            return True
        for xi, v in tables[form.coeffs[i]]:
            if v > remaining:
                continue
            x[i] = xi
            if dfs(depth + 1, remaining - v):
                return True
        x[i] = 0
        return False

    return tuple(x) if dfs(0, n) else None


def attainable_bits(form: MGonalForm, t: int) -> int:
    """Bitset (as an int) of the values in [0, t] the form represents."""
    check_target(t)
    mask = (1 << (t + 1)) - 1
    reach = 1
    for a in form.coeffs:
        acc = 0
        for _, v in values_up_to(form.m, t, a):
            acc |= reach << v
        reach = acc & mask
    return reach


def _unset_bits(bits: int, t: int) -> tuple[int, ...]:
    s = format(bits, "b").zfill(t + 1)[::-1]
    return tuple(i for i in range(1, t + 1) if s[i] == "0")


def check_coverage(form: MGonalForm, t: int) -> CoverageReport:
    """Report exactly which integers in [1, t] the form misses."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return CoverageReport(form, t, _unset_bits(attainable_bits(form, t), t))


def first_gap(form: MGonalForm, n_max: int) -> int | None:
    """Smallest integer in [1, n_max] the form does not represent."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    bits = attainable_bits(form, n_max)
    full = (1 << (n_max + 1)) - 1
    if bits == full:
        return None
    holes = ~bits & full
    return (holes & -holes).bit_length() - 1
