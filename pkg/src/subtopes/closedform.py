"""Computation-free subtope coordinates of ``-A T(+)`` over the distinguished cycle.

For the distinguished cycle ``R`` and a nonempty negative part ``A`` split into
maximal runs ``[i_1, j_1], ..., [i_r, j_r]``, the coordinate vector
``xbar`` is a signed sum of rows of ``P(t)``. Which rows enter depends on
which of the endpoints ``1`` and ``t`` belong to ``A``:

=======  ==============  ==========================================
case     ``{1,t} & A``   rows
=======  ==============  ==========================================
i        ``{1}``         ``+P^(j_k+1)`` (all k), ``-P^(i_l)`` (l >= 2)
ii       ``{1, t}``      ``+P^(j_k+1)`` (k < r), ``-P^(i_l)`` (all l)
iii      ``{}``          ``+P^1``, ``+P^(j_k+1)`` (all k), ``-P^(i_l)`` (all l)
iv       ``{t}``         ``+P^(j_k+1)`` (k < r), ``-P^(i_l)`` (all l)
=======  ==============  ==========================================

Row indices are 1-based. The row sum is evaluated in ``O(t + r)`` through a
prefix sum, since ``P[i][j] = (-1)**(i+j)`` for ``i <= j`` and its negative
below the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cycles import p_row
from .errors import DomainError, SingularError


@dataclass(frozen=True)
class IntervalSet:
    """Separated 1-based intervals ``[i, j]`` of ``[1, t]`` with ``j_k + 2 <= i_(k+1)``."""

    intervals: tuple[tuple[int, int], ...]
    t: int

    def __post_init__(self):
        ivs = tuple((int(i), int(j)) for i, j in self.intervals)
        if not ivs:
            raise DomainError("the negative part must be nonempty")
        for i, j in ivs:
            if not 1 <= i <= j <= self.t:
                raise DomainError(f"interval [{i},{j}] is not inside [1,{self.t}]")
        for (_, j), (i2, _) in zip(ivs, ivs[1:]):
            if j + 2 > i2:
                raise DomainError(f"intervals ending at {j} and starting at {i2} are not separated")
        object.__setattr__(self, "intervals", ivs)

    @property
    def rho(self) -> int:
        return len(self.intervals)

    def elements(self) -> frozenset[int]:
        return frozenset(e for i, j in self.intervals for e in range(i, j + 1))

    def __str__(self) -> str:
        return ",".join(f"{i}" if i == j else f"{i}-{j}" for i, j in self.intervals)


def canonical_intervals(A: Iterable[int], t: int) -> IntervalSet:
    """Split ``A`` into maximal runs of consecutive elements."""
    elems = sorted(set(A))
    if not elems:
        raise DomainError("the negative part must be nonempty")
    runs = []
    start = prev = elems[0]
    for e in elems[1:]:
        if e != prev + 1:
            runs.append((start, prev))
            start = e
        prev = e
    runs.append((start, prev))
    return IntervalSet(tuple(runs), t)


def parse_intervals(text: str, t: int) -> IntervalSet:
    """Parse ``"2-3,5"``; the upper bound may be the letter ``t``, as in ``"1-t"``."""
    elems = set()
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            a = t if lo == "t" else int(lo)
            b = a if not sep else (t if hi == "t" else int(hi))
        except ValueError:
            raise DomainError(f"bad interval {part!r} in {text!r}") from None
        if not 1 <= a <= b <= t:
            raise DomainError(f"interval {part!r} is not inside [1,{t}]")
        elems.update(range(a, b + 1))
    return canonical_intervals(elems, t)


def case_label(A: IntervalSet) -> str:
    has1 = A.intervals[0][0] == 1
    hast = A.intervals[-1][1] == A.t
    return {(True, False): "i", (True, True): "ii", (False, False): "iii", (False, True): "iv"}[(has1, hast)]


def row_terms(A: IntervalSet) -> list[tuple[int, int]]:
    """Signed rows ``(sign, i)`` whose sum is ``xbar``; ``i`` is a 1-based row of ``P(t)``."""
    case = case_label(A)
    starts = [i for i, _ in A.intervals]
    ends = [j for _, j in A.intervals]
    terms = []
    if case == "iii":
        terms.append((1, 1))
    if case in ("i", "iii"):
        terms += [(1, j + 1) for j in ends]
    else:
        terms += [(1, j + 1) for j in ends[:-1]]
    if case == "i":
        terms += [(-1, i) for i in starts[1:]]
    else:
        terms += [(-1, i) for i in starts]
    return terms


def _check_even(t: int) -> None:
    if t % 2:
        raise SingularError(f"closed forms need even t, got t={t}")


def combine_rows(terms: Iterable[tuple[int, int]], t: int) -> tuple[int, ...]:
    """Sum of ``sign * P(t)^i`` without generating any row."""
    _check_even(t)
    a = [0] * (t + 1)
    for sign, i in terms:
        if not 1 <= i <= t:
            raise DomainError(f"row index {i} outside [1, {t}]")
        a[i] += sign if i % 2 == 0 else -sign
    total = sum(a)
    out = []
    prefix = 0
    for j in range(1, t + 1):
        prefix += a[j]
        v = 2 * prefix - total
        out.append(v if j % 2 == 0 else -v)
    return tuple(out)


def closed_form_xbar(A, t: int | None = None) -> tuple[int, ...]:
    """``xbar`` of the tope with negative part ``A`` over the distinguished cycle.

    ``A`` is an :class:`IntervalSet`, or a plain set of elements together with ``t``.
    """
    if not isinstance(A, IntervalSet):
        if t is None:
            raise DomainError("t is required when A is a plain set")
        A = canonical_intervals(A, t)
    _check_even(A.t)
    return combine_rows(row_terms(A), A.t)


def explicit_row_sum(terms: Iterable[tuple[int, int]], t: int) -> tuple[int, ...]:
    """Same sum as :func:`combine_rows`, adding generated rows one by one."""
    out = [0] * t
    for sign, i in terms:
        for j, v in enumerate(p_row(i, t)):
            out[j] += sign * v
    return tuple(out)


def singleton_xbar(s: int, t: int) -> tuple[int, ...]:
    _check_even(t)
    if not 1 <= s <= t:
        raise DomainError(f"element {s} outside [1, {t}]")
    if s == 1:
        terms = [(1, 2)]
    elif s == t:
        terms = [(-1, t)]
    else:
        terms = [(1, 1), (-1, s), (1, s + 1)]
    return combine_rows(terms, t)


def _end_term(e: int, j: int) -> int:
    return (-1) ** ((e + j + 1) % 2) if j < e else (-1) ** ((e + j) % 2)


def _start_term(e: int, i: int) -> int:
    return (-1) ** ((e + i) % 2) if i <= e else (-1) ** ((e + i + 1) % 2)


def componentwise_xbar(A: IntervalSet, e: int) -> int:
    """Component ``xbar_e`` (1-based ``e``) from the per-entry case sums."""
    _check_even(A.t)
    if not 1 <= e <= A.t:
        raise DomainError(f"component {e} outside [1, {A.t}]")
    case = case_label(A)
    starts = [i for i, _ in A.intervals]
    ends = [j for _, j in A.intervals]
    if case in ("ii", "iv"):
        ends = ends[:-1]
    if case == "i":
        starts = starts[1:]
    value = (-1) ** ((e + 1) % 2) if case == "iii" else 0
    value += sum(_end_term(e, j) for j in ends)
    value -= sum(_start_term(e, i) for i in starts)
    return value

