"""Independent checks: ternary enumeration, exact solving and the verification battery."""

from __future__ import annotations

import itertools
import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import closedform, decomp
from .cycles import (
    SymmetricCycle,
    distinguished_cycle,
    matrix_M,
    matrix_N,
    matrix_P,
    matrix_W,
)
from .errors import DomainError, OracleContradictionError, SubtopeError
from .linalg import identity, inverse, mat_mul, rank, solve_left, vec_mat
from .signs import Subtope, Tope, as_tope, tope_from_negative_part

DEFAULT_ENUM_CAP = 10
EXHAUSTIVE_MAX_T = 8
SCOPES = ("rank", "matrices", "topes", "subtopes", "closedform", "remark")
W_SCOPES = frozenset({"topes", "subtopes", "closedform", "remark"})


def enumeration_cap() -> int:
    """Largest ``t`` for 3^t enumeration; overridable through ``SUBTOPES_ENUM_CAP``."""
    return int(os.environ.get("SUBTOPES_ENUM_CAP", DEFAULT_ENUM_CAP))


def _check_cap(t: int, cap: int | None) -> None:
    cap = enumeration_cap() if cap is None else cap
    if t > cap:
        raise DomainError(f"t={t} exceeds the enumeration cap {cap}")


def odd_ternary_vectors(t: int):
    """All of ``{-1, 0, 1}^t`` with odd support size."""
    for x in itertools.product((-1, 0, 1), repeat=t):
        if sum(1 for v in x if v) % 2:
            yield x


def brute_force_tope_coords(T, D: SymmetricCycle, cap: int | None = None) -> tuple[int, ...]:
    """The unique odd-support ternary ``x`` with ``x @ M(D) == T``, found by enumeration."""
    T = as_tope(T)
    _check_cap(D.t, cap)
    M = matrix_M(D)
    hits = [x for x in odd_ternary_vectors(D.t) if vec_mat(x, M) == T.entries]
    if len(hits) != 1:
        raise OracleContradictionError(f"{len(hits)} odd-support ternary solutions for {T}")
    return hits[0]


def ternary_image_table(D: SymmetricCycle, cap: int | None = None):
    """Map every tope to the odd-support ternary vectors hitting it, in one pass.

    Returns ``(table, odd_count, even_count)``; the counts are tallied while
    enumerating, as a sanity check on the enumerator.
    """
    _check_cap(D.t, cap)
    M = matrix_M(D)
    table: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    odd = even = 0
    for x in itertools.product((-1, 0, 1), repeat=D.t):
        if sum(1 for v in x if v) % 2 == 0:
            even += 1
            continue
        odd += 1
        y = vec_mat(x, M)
        if all(v in (1, -1) for v in y):
            table.setdefault(y, []).append(x)
    return table, odd, even


def exact_solve(target: Sequence[int], basis) -> tuple[Fraction, ...]:
    """Exact rational ``y`` with ``y @ basis == target``; SingularError if not unique."""
    return solve_left(tuple(target), basis)


def all_topes(t: int) -> Iterable[Tope]:
    for signs in itertools.product((1, -1), repeat=t):
        yield Tope(signs)


def all_subtopes(t: int) -> Iterable[Subtope]:
    for z in range(t):
        for signs in itertools.product((1, -1), repeat=t - 1):
            yield Subtope(signs[:z] + (0,) + signs[z:])


@dataclass
class VerificationReport:
    t: int
    cycle: str
    seed: int | None = None
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    notices: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, scope: str, message: str, **payload) -> None:
        self.failures.append({"scope": scope, "message": message, **payload})

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "cycle": self.cycle,
            "seed": self.seed,
            "pass": self.passed,
            "counts": dict(self.counts),
            "failures": list(self.failures),
            "notices": list(self.notices),
            "elapsed_s": round(self.elapsed, 6),
        }

    def to_text(self) -> str:
        lines = [f"verify t={self.t} cycle={self.cycle}" + (f" seed={self.seed}" if self.seed is not None else "")]
        for k, v in self.counts.items():
            lines.append(f"  {k}: {v} checked")
        for n in self.notices:
            lines.append(f"  notice: {n}")
        for f in self.failures[:20]:
            lines.append(f"  FAIL [{f['scope']}] {f['message']}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more failures")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} ({len(self.failures)} failures, {self.elapsed:.3f}s)")
        return "\n".join(lines)


def _ints(v) -> list:
    return [int(x) if isinstance(x, int) or getattr(x, "denominator", 1) == 1 else str(x) for x in v]


def _check_rank(rep: VerificationReport, D: SymmetricCycle) -> None:
    t = D.t
    expected = t if t % 2 == 0 else t - 1
    r_n = rank(matrix_N(t))
    r_w = rank(matrix_W(D))
    r_m = rank(matrix_M(D))
    rep.counts["rank"] = 3
    if r_n != expected:
        rep.fail("rank", f"rank N({t}) = {r_n}, expected {expected}")
    if r_w != r_n:
        rep.fail("rank", f"rank W = {r_w} differs from rank N = {r_n}", cycle=D.to_json())
    if r_m != t:
        rep.fail("rank", f"M(D) is singular (rank {r_m})", cycle=D.to_json())
    rep.notices.append(f"rank N({t}) = {r_n}, rank W(D) = {r_w}")


def _check_matrices(rep: VerificationReport, D: SymmetricCycle) -> None:
    t = D.t
    M, W, N = matrix_M(D), matrix_W(D), matrix_N(t)
    rep.counts["matrices"] = 1
    if W.scaled(2) != N @ M:
        rep.fail("matrices", "2W != N M", cycle=D.to_json())
    if t % 2 == 0:
        P = matrix_P(t)
        rep.counts["matrices"] += 2
        if N @ P != identity(t).scaled(2):
            rep.fail("matrices", f"N({t}) P({t}) != 2I")
        if P @ W != M:
            rep.fail("matrices", "M != P W", cycle=D.to_json())


def _check_topes(rep: VerificationReport, D: SymmetricCycle, enum_cap: int | None) -> None:
    t = D.t
    W = matrix_W(D)
    seq = D.subtopes
    table = None
    cap = enumeration_cap() if enum_cap is None else enum_cap
    if t <= cap:
        table, odd, even = ternary_image_table(D, cap)
        rep.counts["ternary_enumerated"] = odd + even
        if odd + even != 3**t:
            rep.fail("topes", f"enumerator produced {odd + even} vectors, expected {3**t}")
    else:
        rep.notices.append(f"3^t oracle skipped: t={t} above enumeration cap {cap}")
    n = 0
    for T in all_topes(t):
        n += 1
        payload = {"cycle": D.to_json(), "target": str(T)}
        try:
            x = decomp.tope_coords(T, D)
            xbar = decomp.xbar_of_tope(T, D)
            dec = decomp.tope_decomposition(T, D)
            vdec = decomp.vertex_decomposition(T, D)
        except SubtopeError as exc:
            rep.fail("topes", f"{type(exc).__name__}: {exc}", **payload)
            continue
        if table is not None:
            hits = table.get(T.entries, [])
            if hits != [x]:
                rep.fail("topes", "oracle disagrees on ternary coordinates", expected=[list(h) for h in hits], got=list(x), **payload)
        if any(v % 2 == 0 for v in xbar) or not all(1 <= abs(v) <= t - 1 for v in xbar):
            rep.fail("topes", "xbar not odd within [1, t-1]", got=list(xbar), **payload)
        if len(dec.terms) != t:
            rep.fail("topes", f"{len(dec.terms)} terms, expected {t}", **payload)
        if decomp.reconstruct(dec, seq) != T.entries:
            rep.fail("topes", "reconstruction mismatch", got=dec.render(), **payload)
        solved = exact_solve(T.entries, W)
        if tuple(solved) != xbar:
            rep.fail("topes", "exact solve disagrees", expected=_ints(solved), got=list(xbar), **payload)
        if len(vdec.indices) % 2 == 0 or tuple(map(sum, zip(*(D[k] for k in vdec.indices)))) != T.entries:
            rep.fail("topes", "vertex decomposition invalid", got=list(vdec.indices), **payload)
        anti = decomp.tope_decomposition(-T, D)
        shifted = tuple(sorted(((k + t) % (2 * t), c) for k, c in dec.terms))
        if anti.terms != shifted:
            rep.fail("topes", "antipodal decomposition is not the shifted one", got=anti.render(), **payload)
    rep.counts["topes"] = n


def _check_subtopes(rep: VerificationReport, D: SymmetricCycle) -> None:
    t = D.t
    W = matrix_W(D)
    seq = D.subtopes
    n = 0
    for S in all_subtopes(t):
        n += 1
        payload = {"cycle": D.to_json(), "target": str(S)}
        try:
            xbar = decomp.xbar_of_subtope(S, D)
            dec = decomp.subtope_decomposition(S, D)
        except SubtopeError as exc:
            rep.fail("subtopes", f"{type(exc).__name__}: {exc}", **payload)
            continue
        if not all(1 <= c <= t - 1 for _, c in dec.terms):
            rep.fail("subtopes", "coefficient outside [1, t-1]", got=dec.render(), **payload)
        if decomp.reconstruct(dec, seq) != S.entries:
            rep.fail("subtopes", "reconstruction mismatch", got=dec.render(), **payload)
        solved = exact_solve(S.entries, W)
        if tuple(solved) != xbar:
            rep.fail("subtopes", "exact solve disagrees", expected=_ints(solved), got=list(xbar), **payload)
        if tuple(exact_solve(vec_mat(xbar, W), W)) != xbar:
            rep.fail("subtopes", "exact solve does not round-trip xbar", got=list(xbar), **payload)
    rep.counts["subtopes"] = n


def _check_closedform(rep: VerificationReport, t: int) -> None:
    R = distinguished_cycle(t)
    n = 0
    for r in range(1, t + 1):
        for A in itertools.combinations(range(1, t + 1), r):
            n += 1
            I = closedform.canonical_intervals(A, t)
            cf = closedform.closed_form_xbar(I)
            ref = decomp.xbar_of_tope(tope_from_negative_part(A, t), R)
            comp = tuple(closedform.componentwise_xbar(I, e) for e in range(1, t + 1))
            if cf != ref or comp != ref:
                rep.fail("closedform", f"A={I}", expected=list(ref), got=list(cf), componentwise=list(comp))
    rep.counts["closedform"] = n


def _check_remark(rep: VerificationReport, D: SymmetricCycle) -> None:
    M, W = matrix_M(D), matrix_W(D)
    P = matrix_P(D.t)
    lhs = mat_mul(M, inverse(W))
    X = decomp.matrix_X(D)
    rep.counts["remark"] = 2
    if lhs != P.rows:
        rep.fail("remark", "M W^-1 != P", cycle=D.to_json())
    if (X @ M).rows != lhs:
        rep.fail("remark", "M W^-1 != X M", cycle=D.to_json())
    for row in X:
        if sum(1 for v in row if v) % 2 == 0:
            rep.fail("remark", f"row {row} of X has even support", cycle=D.to_json())


def verify_suite(
    t: int,
    cycle: SymmetricCycle | str = "distinguished",
    scopes: Iterable[str] = SCOPES,
    seed: int | None = None,
    enum_cap: int | None = None,
    exhaustive_max_t: int = EXHAUSTIVE_MAX_T,
) -> VerificationReport:
    """Run the invariant battery; failures are collected in the report, never raised."""
    start = time.perf_counter()
    if isinstance(cycle, str):
        if cycle != "distinguished":
            raise DomainError(f"unknown cycle source {cycle!r}")
        D = distinguished_cycle(t)
    else:
        D = cycle
        if D.t != t:
            raise DomainError(f"cycle has t={D.t}, requested t={t}")
    scopes = list(scopes)
    unknown = set(scopes) - set(SCOPES)
    if unknown:
        raise DomainError(f"unknown scopes {sorted(unknown)}")
    rep = VerificationReport(t=t, cycle=D.describe(), seed=seed)
    for scope in scopes:
        if scope in W_SCOPES and t % 2:
            rep.notices.append(f"{scope} skipped: SingularError (W(D) has rank {t - 1} for odd t={t})")
            continue
        if scope in ("topes", "subtopes", "closedform") and t > exhaustive_max_t:
            rep.notices.append(f"{scope} skipped: exhaustive scope limited to t <= {exhaustive_max_t}")
            continue
        try:
            if scope == "rank":
                _check_rank(rep, D)
            elif scope == "matrices":
                _check_matrices(rep, D)
            elif scope == "topes":
                _check_topes(rep, D, enum_cap)
            elif scope == "subtopes":
                _check_subtopes(rep, D)
            elif scope == "closedform":
                _check_closedform(rep, t)
            elif scope == "remark":
                _check_remark(rep, D)
        except SubtopeError as exc:
            rep.fail(scope, f"{type(exc).__name__}: {exc}", cycle=D.to_json())
    rep.elapsed = time.perf_counter() - start
    return rep


def dump_report(rep: VerificationReport) -> str:
    return json.dumps(rep.to_json(), indent=2)
