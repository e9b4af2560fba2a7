"""Decompositions of topes and subtopes over the edge subtopes of a symmetric cycle.

For a symmetric cycle ``D`` with even ``t``:

* every tope ``T`` has unique ternary coordinates ``x`` with odd support and
  ``T = x @ M(D)``;
* ``xbar = x @ P(t)`` gives ``T = xbar @ W(D)``, with all entries odd;
* a subtope ``S`` between topes ``T'`` and ``T''`` has
  ``xbar(S) = (xbar(T') + xbar(T'')) / 2``.

Negative coefficients are folded onto antipodal subtopes (``-S[k] == S[k+t]``)
so every :class:`Decomposition` carries strictly positive coefficients.
Coordinate vectors are 0-based tuples; coordinate ``i`` belongs to
``S[i]`` / ``D[i]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Sequence

from .cycles import SubtopeSequence, SymmetricCycle, cycle_from_json, matrix_M, matrix_P
from .errors import DomainError, NotATopeError, SingularError
from .linalg import IntMatrix, solve_left, vec_mat
from .signs import SignVector, Subtope, Tope, as_sign_vector, as_subtope, as_tope

TernaryCoords = tuple[int, ...]
CoeffVector = tuple[int, ...]


def _require_even(t: int) -> None:
    if t % 2:
        raise SingularError(f"the subtope basis W(D) is singular for odd t={t}")


@dataclass(frozen=True)
class Decomposition:
    """``target == sum(coeff * S[index])`` with distinct, non-antipodal indices."""

    target: SignVector
    terms: tuple[tuple[int, int], ...]
    cycle: SymmetricCycle

    def __post_init__(self):
        n = len(self.cycle)
        t = n // 2
        seen = set()
        for k, c in self.terms:
            if not 0 <= k < n:
                raise DomainError(f"subtope index {k} outside [0, {n})")
            if c < 1:
                raise DomainError(f"coefficients must be positive, got {c} for S^{k}")
            if k in seen or (k + t) % n in seen:
                raise DomainError(f"index {k} repeats or meets its antipode")
            seen.add(k)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{'' if c == 1 else c}S^{k}" for k, c in self.terms)

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "terms": [{"index": k, "coeff": c} for k, c in self.terms],
            "cycle": self.cycle.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "Decomposition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            target=as_sign_vector(data["target"]),
            terms=tuple((int(d["index"]), int(d["coeff"])) for d in data["terms"]),
            cycle=cycle_from_json(data["cycle"]),
        )


@dataclass(frozen=True)
class VertexDecomposition:
    """Odd-size set of cycle vertices summing to ``target``."""

    target: Tope
    indices: tuple[int, ...]
    cycle: SymmetricCycle

    def render(self) -> str:
        return " + ".join(f"D^{k}" for k in self.indices)


def _fold(coeffs: Sequence[int], t: int) -> tuple[tuple[int, int], ...]:
    terms = []
    for i, c in enumerate(coeffs):
        if c > 0:
            terms.append((i, c))
        elif c < 0:
            terms.append((i + t, -c))
    return tuple(sorted(terms))


def tope_coords(T, D: SymmetricCycle) -> TernaryCoords:
    """Unique ``x`` in ``{-1, 0, 1}^t`` with odd support and ``T == x @ M(D)``.

    Works for any ``t``; ``M(D)`` is nonsingular for every symmetric cycle.
    """
    T = as_tope(T)
    if len(T) != D.t:
        raise DomainError(f"tope length {len(T)} does not match cycle t={D.t}")
    sol = solve_left(T.entries, matrix_M(D))
    if any(q.denominator != 1 for q in sol):
        raise NotATopeError(f"non-integral coordinates for {T}: {sol}")
    x = tuple(int(q) for q in sol)
    if any(v not in (-1, 0, 1) for v in x):
        raise NotATopeError(f"coordinates of {T} are not ternary: {x}")
    if sum(1 for v in x if v) % 2 == 0:
        raise NotATopeError(f"coordinates of {T} have even support: {x}")
    return x


def vertex_decomposition(T, D: SymmetricCycle) -> VertexDecomposition:
    T = as_tope(T)
    x = tope_coords(T, D)
    idx = sorted(i if v == 1 else i + D.t for i, v in enumerate(x) if v)
    return VertexDecomposition(T, tuple(idx), D)


def xbar_of_tope(T, D: SymmetricCycle) -> CoeffVector:
    """Coordinates of a tope in the subtope basis ``W(D)``; every entry is odd."""
    _require_even(D.t)
    return vec_mat(tope_coords(T, D), matrix_P(D.t))


def tope_decomposition(T, D: SymmetricCycle) -> Decomposition:
    T = as_tope(T)
    xbar = xbar_of_tope(T, D)
    return Decomposition(T, _fold(xbar, D.t), D)


def subtope_to_tope_pair(S) -> tuple[Tope, Tope]:
    """The two topes whose midpoint is ``S``: zero replaced by +1, then by -1."""
    try:
        S = as_subtope(S)
    except DomainError:
        raise DomainError(f"expected exactly one zero entry in {S}") from None
    z = S.zero_position
    plus = list(S.entries)
    minus = list(S.entries)
    plus[z], minus[z] = 1, -1
    return Tope(tuple(plus)), Tope(tuple(minus))


def xbar_of_subtope(S, D: SymmetricCycle) -> CoeffVector:
    _require_even(D.t)
    T1, T2 = subtope_to_tope_pair(S)
    a, b = xbar_of_tope(T1, D), xbar_of_tope(T2, D)
    # odd + odd is even, so halving is exact
    return tuple((u + v) // 2 for u, v in zip(a, b))


def subtope_decomposition(S, D: SymmetricCycle) -> Decomposition:
    S = as_subtope(S)
    return Decomposition(S, _fold(xbar_of_subtope(S, D), D.t), D)


def decompose(target, D: SymmetricCycle) -> Decomposition:
    """Dispatch on the zero count of ``target``."""
    v = as_sign_vector(target)
    if isinstance(v, Tope):
        return tope_decomposition(v, D)
    if isinstance(v, Subtope):
        return subtope_decomposition(v, D)
    raise DomainError(f"{v} is neither a tope nor a subtope")


def matrix_X(D: SymmetricCycle) -> IntMatrix:
    """Row ``i`` holds the ternary coordinates of ``P(t)^(i+1)`` over ``M(D)``."""
    _require_even(D.t)
    return IntMatrix(tuple(tope_coords(row, D) for row in matrix_P(D.t)), "X")


def reconstruct(dec: Decomposition, seq: SubtopeSequence | None = None) -> tuple[int, ...]:
    """Evaluate ``sum(coeff * S[index])`` exactly."""
    seq = dec.cycle.subtopes if seq is None else seq
    n = len(seq)
    out = [0] * seq.t
    for k, c in dec.terms:
        if not 0 <= k < n:
            raise DomainError(f"subtope index {k} outside [0, {n})")
        for j, s in enumerate(seq[k]):
            out[j] += c * s
    return tuple(out)


_TERM = re.compile(r"^(\d*)\s*S\^(\d+)$")


def parse_terms(text: str) -> tuple[tuple[int, int], ...]:
    """Inverse of :meth:`Decomposition.render`: ``"S^1 + 5S^4"`` -> ``((1, 1), (4, 5))``."""
    text = text.strip()
    if text == "0":
        return ()
    terms = []
    for part in text.split("+"):
        m = _TERM.match(part.strip())
        if not m:
            raise DomainError(f"cannot parse term {part.strip()!r}")
        terms.append((int(m.group(2)), int(m.group(1) or 1)))
    return tuple(terms)
