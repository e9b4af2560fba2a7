"""Symmetric cycles in the hypercube graph and their structure matrices.

A symmetric cycle has ``2t`` vertices ``D[0..2t-1]`` (0-based, cyclic),
consecutive vertices at Hamming distance 1, and ``D[k + t] == -D[k]``.
Edge ``k`` joins ``D[k]`` and ``D[k+1 mod 2t]`` and is labelled by the
subtope ``S[k]``.

Matrix rows and columns are 0-based tuples; ``p_row`` uses the 1-based row
index ``i`` of ``P(t)^i``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .errors import DomainError, NotACycleError, NotSymmetricError, SingularError
from .linalg import IntMatrix
from .signs import Subtope, Tope, as_tope, hamming_distance, meet_midpoint, tope_from_negative_part


@dataclass(frozen=True)
class SymmetricCycle:
    """Validated symmetric ``2t``-cycle; build through :func:`validate_cycle`."""

    vertices: tuple[Tope, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        _check_cycle(self.vertices)

    @property
    def t(self) -> int:
        return len(self.vertices[0])

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, k: int) -> Tope:
        return self.vertices[k % len(self.vertices)]

    @cached_property
    def subtopes(self) -> "SubtopeSequence":
        return subtope_sequence(self)

    def to_json(self) -> dict:
        return {"t": self.t, "vertices": [str(v) for v in self.vertices]}

    def describe(self) -> str:
        return self.label or f"cycle(t={self.t}, D0={self.vertices[0]})"


@dataclass(frozen=True)
class SubtopeSequence:
    """The ``2t`` edge subtopes ``S[k] = D[k] ^ D[k+1]`` of a symmetric cycle."""

    subtopes: tuple[Subtope, ...]

    @property
    def t(self) -> int:
        return len(self.subtopes[0])

    def __len__(self) -> int:
        return len(self.subtopes)

    def __getitem__(self, k: int) -> Subtope:
        return self.subtopes[k]

    def __iter__(self):
        return iter(self.subtopes)


def _check_cycle(vertices: Sequence[Tope]) -> None:
    n = len(vertices)
    if n < 4 or n % 2:
        raise NotACycleError(f"a symmetric cycle needs 2t >= 4 vertices, got {n}")
    t = n // 2
    if any(len(v) != t for v in vertices):
        raise NotACycleError(f"{n} vertices require vectors of length {t}")
    if len(set(vertices)) != n:
        raise NotACycleError("cycle repeats a vertex")
    for k in range(n):
        if hamming_distance(vertices[k], vertices[(k + 1) % n]) != 1:
            raise NotACycleError(
                f"vertices D^{k}={vertices[k]} and D^{(k + 1) % n}={vertices[(k + 1) % n]} are not adjacent"
            )
    for k in range(t):
        if vertices[k + t] != -vertices[k]:
            raise NotSymmetricError(f"D^{k + t} != -D^{k}")


def validate_cycle(vertices: Sequence, label: str = "") -> SymmetricCycle:
    """Validate ``t`` or ``2t`` vertices as a symmetric cycle.

    With ``t`` vertices the antipodal half is appended. Vertices may be
    topes, ``+-`` strings or integer sequences.
    """
    vs = [as_tope(v) for v in vertices]
    if not vs:
        raise NotACycleError("empty vertex list")
    t = len(vs[0])
    if any(len(v) != t for v in vs):
        raise NotACycleError("vertices have different lengths")
    if len(vs) == t:
        vs = vs + [-v for v in vs]
    elif len(vs) != 2 * t:
        raise NotACycleError(f"expected {t} or {2 * t} vertices for t={t}, got {len(vs)}")
    return SymmetricCycle(tuple(vs), label)


def distinguished_cycle(t: int) -> SymmetricCycle:
    """``R[0]`` is all-plus, ``R[s]`` negates the prefix ``[1, s]``, ``R[k+t] = -R[k]``."""
    if t < 2:
        raise DomainError(f"t must be at least 2, got {t}")
    half = [tope_from_negative_part(range(1, s + 1), t) for s in range(t)]
    return SymmetricCycle(tuple(half + [-v for v in half]), label="distinguished")


def random_cycle(t: int, rng: random.Random | int | None = None) -> SymmetricCycle:
    """Uniformly random symmetric cycle.

    A symmetric cycle walks from ``D[0]`` to ``-D[0]`` in ``t`` steps, so it
    flips every coordinate exactly once: it is a random start plus a random
    flip order.
    """
    if t < 2:
        raise DomainError(f"t must be at least 2, got {t}")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    cur = [rng.choice((1, -1)) for _ in range(t)]
    order = list(range(t))
    rng.shuffle(order)
    half = []
    for pos in order:
        half.append(Tope(tuple(cur)))
        cur[pos] = -cur[pos]
    return validate_cycle(half, label=f"random(t={t})")


def subtope_sequence(D: SymmetricCycle) -> SubtopeSequence:
    n = len(D)
    return SubtopeSequence(tuple(meet_midpoint(D[k], D[(k + 1) % n]) for k in range(n)))


def matrix_M(D: SymmetricCycle) -> IntMatrix:
    """Rows ``D[0] .. D[t-1]``."""
    return IntMatrix(tuple(v.entries for v in D.vertices[: D.t]), "M")


def matrix_W(D: SymmetricCycle) -> IntMatrix:
    """Rows ``S[0] .. S[t-1]``."""
    return IntMatrix(tuple(s.entries for s in D.subtopes.subtopes[: D.t]), "W")


def matrix_N(t: int) -> IntMatrix:
    """Banded matrix with ``2W = N(t) M``: ones on the diagonal and superdiagonal, -1 at the corner."""
    if t < 2:
        raise DomainError(f"t must be at least 2, got {t}")
    rows = []
    for i in range(t):
        r = [0] * t
        r[i] = 1
        if i < t - 1:
            r[i + 1] = 1
        else:
            r[0] = -1
        rows.append(tuple(r))
    return IntMatrix(tuple(rows), "N")


def p_entry(i: int, j: int) -> int:
    """Entry ``(i, j)`` of ``P(t)``, 1-based; independent of ``t``."""
    return (-1) ** ((i + j) % 2) if i <= j else -((-1) ** ((i + j) % 2))


def p_row(i: int, t: int) -> tuple[int, ...]:
    """Row ``P(t)^i`` (1-based ``i``), generated without building the matrix."""
    if t % 2:
        raise SingularError(f"P(t) = 2 N(t)^-1 exists only for even t, got t={t}")
    if not 1 <= i <= t:
        raise DomainError(f"row index {i} outside [1, {t}]")
    return tuple(p_entry(i, j) for j in range(1, t + 1))


def matrix_P(t: int) -> IntMatrix:
    """Toeplitz matrix ``2 N(t)^-1``; only defined for even ``t``."""
    if t < 2:
        raise DomainError(f"t must be at least 2, got {t}")
    return IntMatrix(tuple(p_row(i, t) for i in range(1, t + 1)), "P")


# -- file formats ------------------------------------------------------------


def parse_cycle_text(text: str, label: str = "") -> SymmetricCycle:
    """One sign-vector string per line; ``#`` starts a comment, blank lines are skipped."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return validate_cycle(lines, label)


def cycle_from_json(data, label: str = "") -> SymmetricCycle:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        vertices = data["vertices"]
    except (KeyError, TypeError):
        raise DomainError("cycle JSON needs a 'vertices' list") from None
    D = validate_cycle(vertices, label)
    if "t" in data and int(data["t"]) != D.t:
        raise DomainError(f"declared t={data['t']} but vertices have length {D.t}")
    return D


def load_cycle(path) -> SymmetricCycle:
    """Read a cycle file; JSON is detected by a leading ``{``."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return cycle_from_json(text, label=str(path))
    return parse_cycle_text(text, label=str(path))


def format_cycle_text(D: SymmetricCycle, half: bool = False) -> str:
    vs = D.vertices[: D.t] if half else D.vertices
    return "\n".join(str(v) for v in vs) + "\n"
