"""Sign vectors, topes and subtopes of the discrete hypercube ``{1, -1}^t``.

Ground-set elements are 1-based throughout (``support`` and
``tope_from_negative_part`` speak in ``1..t``); tuple positions are 0-based
as usual in Python.

Text encoding uses one character per entry: ``+`` for 1, ``-`` for -1 and
``0`` for 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, NotAdjacentError

_CHAR_TO_SIGN = {"+": 1, "-": -1, "0": 0}
_SIGN_TO_CHAR = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True, eq=False)
class SignVector:
    """Immutable vector over ``{1, -1, 0}``.

    Equality and hashing look only at the entries, so a :class:`Tope` equals a
    plain :class:`SignVector` holding the same signs.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise DomainError("sign vector must have at least one entry")
        bad = [e for e in entries if e not in (1, -1, 0)]
        if bad:
            raise DomainError(f"sign entries must be in {{1, -1, 0}}, got {bad[0]!r}")
        object.__setattr__(self, "entries", entries)
        self._check()

    def _check(self) -> None:
        pass

    @classmethod
    def parse(cls, text: str):
        """Build from the ``+-0`` string encoding; any other character is rejected."""
        text = text.strip()
        try:
            return cls(tuple(_CHAR_TO_SIGN[c] for c in text))
        except KeyError as exc:
            raise DomainError(f"invalid sign character {exc.args[0]!r} in {text!r}") from None

    @property
    def t(self) -> int:
        return len(self.entries)

    def zeros(self) -> list[int]:
        """0-based positions of the zero entries."""
        return [i for i, e in enumerate(self.entries) if e == 0]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __neg__(self):
        return type(self)(tuple(-e for e in self.entries))

    def __eq__(self, other):
        if isinstance(other, SignVector):
            return self.entries == other.entries
        if isinstance(other, tuple):
            return self.entries == other
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __str__(self) -> str:
        return "".join(_SIGN_TO_CHAR[e] for e in self.entries)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self}')"


class Tope(SignVector):
    """Sign vector without zero entries: a vertex of the hypercube graph."""

    def _check(self) -> None:
        if 0 in self.entries:
            raise DomainError(f"a tope has no zero entries: {self}")


class Subtope(SignVector):
    """Sign vector with exactly one zero entry: the label of a hypercube edge."""

    def _check(self) -> None:
        if self.entries.count(0) != 1:
            raise DomainError(f"a subtope has exactly one zero entry: {self}")

    @property
    def zero_position(self) -> int:
        """0-based position of the zero entry."""
        return self.entries.index(0)


def as_sign_vector(v) -> SignVector:
    """Coerce a string, sequence or sign vector to the most specific sign-vector type."""
    if isinstance(v, str):
        v = SignVector.parse(v)
    elif not isinstance(v, SignVector):
        v = SignVector(tuple(v))
    zeros = v.entries.count(0)
    if zeros == 0:
        return Tope(v.entries)
    if zeros == 1:
        return Subtope(v.entries)
    return SignVector(v.entries)


def as_tope(v) -> Tope:
    v = as_sign_vector(v)
    if not isinstance(v, Tope):
        raise DomainError(f"expected a tope, got {v}")
    return v


def as_subtope(v) -> Subtope:
    v = as_sign_vector(v)
    if not isinstance(v, Subtope):
        raise DomainError(f"expected a subtope, got {v}")
    return v


def tope_from_negative_part(A: Iterable[int], t: int) -> Tope:
    """Tope of length ``t`` equal to -1 exactly on the 1-based elements of ``A``."""
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    A = set(A)
    outside = sorted(e for e in A if not 1 <= e <= t)
    if outside:
        raise DomainError(f"elements {outside} lie outside [1, {t}]")
    return Tope(tuple(-1 if e in A else 1 for e in range(1, t + 1)))


def negative_part(T: SignVector) -> frozenset[int]:
    return frozenset(i + 1 for i, e in enumerate(T.entries) if e == -1)


def hamming_distance(v1: SignVector, v2: SignVector) -> int:
    if len(v1) != len(v2):
        raise DomainError(f"length mismatch: {len(v1)} vs {len(v2)}")
    return sum(a != b for a, b in zip(v1, v2))


def negate(v: SignVector) -> SignVector:
    return -v


def support(v) -> frozenset[int]:
    """1-based positions of nonzero entries; accepts sign vectors and integer sequences."""
    return frozenset(i + 1 for i, e in enumerate(v) if e != 0)


def meet_midpoint(T1: Tope, T2: Tope) -> Subtope:
    """Common subtope ``(T1 + T2) / 2`` of two adjacent topes."""
    T1, T2 = as_tope(T1), as_tope(T2)
    if hamming_distance(T1, T2) != 1:
        raise NotAdjacentError(f"{T1} and {T2} are not adjacent")
    # adjacent topes agree off one coordinate, so the sum is even everywhere
    return Subtope(tuple((a + b) // 2 for a, b in zip(T1, T2)))


@dataclass(frozen=True)
class HalfLabeling:
    """Vector over ``{0, 1, 1/2}`` stored as doubled integers in ``{0, 1, 2}``."""

    doubled: tuple[int, ...]
    scale: int = 2

    def __post_init__(self):
        if self.scale != 2:
            raise DomainError("HalfLabeling stores doubled values; scale must be 2")
        if any(d not in (0, 1, 2) for d in self.doubled):
            raise DomainError(f"doubled entries must be in {{0, 1, 2}}: {self.doubled}")

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, self.scale) for d in self.doubled)

    def __str__(self) -> str:
        return "(" + ",".join("1/2" if d == 1 else str(d // 2) for d in self.doubled) + ")"


def to_binary_labeling(v: SignVector) -> HalfLabeling:
    """Relabel into ``{0, 1, 1/2}`` coordinates via ``(1 - v) / 2``."""
    return HalfLabeling(tuple(1 - e for e in v))
