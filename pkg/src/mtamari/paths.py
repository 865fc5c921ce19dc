"""
Dyck paths, m-Dyck paths and m-ballot paths.

A Dyck path of size N is stored as a packed integer word: bit ``i`` is the
``i``-th step, 1 for an up step and 0 for a down step.  Paths print and parse
as strings over ``u``/``d``; ballot paths use ``N``/``E``.

All ranks and positions in the public API follow the conventions below:

- ranks of up steps are 1-based (``rank=1`` is the first up step);
- step indices returned by :func:`match_of_up` are 1-based, so the last step
  of a path of size N has index 2N;
- contacts and marked points are vertex abscissas, even integers in [0, 2N].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (BadCharacter, BelowAxis, EmptyPath, NotMDyck,
                     PathError, UnbalancedPath)

__all__ = [
    "StepPath", "BallotPath", "PointedPath",
    "parse_path", "is_m_dyck", "distance_vector", "match_of_up", "contacts",
    "contact_abscissas", "heights", "initial_rise", "ballot_to_dyck",
    "dyck_to_ballot", "parse_ballot", "m_reduction", "m_expansion",
    "prepend_distance", "dyck_paths", "m_dyck_paths", "ballot_paths",
]


@dataclass(frozen=True, slots=True)
class StepPath:
    """An immutable Dyck path, validated on construction."""

    word: int
    size: int

    def __post_init__(self):
        if self.size < 0 or self.word >> (2 * self.size):
            raise PathError("word does not fit in 2*size steps")
        h = 0
        for i in range(2 * self.size):
            h += 1 if (self.word >> i) & 1 else -1
            if h < 0:
                raise BelowAxis(f"path goes below the axis at step {i + 1}")
        if h != 0:
            raise UnbalancedPath("unequal numbers of up and down steps")

    @classmethod
    def from_steps(cls, steps: str) -> "StepPath":
        return parse_path(steps)

    @property
    def length(self) -> int:
        return 2 * self.size

    @property
    def steps(self) -> str:
        w = self.word
        return "".join("u" if (w >> i) & 1 else "d" for i in range(2 * self.size))

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"StepPath({self.steps!r})"

    def __len__(self) -> int:
        return 2 * self.size

    def __getitem__(self, i: int) -> bool:
        """True for an up step at 0-based position ``i``."""
        if not 0 <= i < 2 * self.size:
            raise IndexError(i)
        return bool((self.word >> i) & 1)

    def sort_key(self) -> str:
        # canonical order is lexicographic with Up < Down
        return self.steps.replace("u", "0").replace("d", "1")


def _word(steps: str) -> int:
    w = 0
    for i, c in enumerate(steps):
        if c == "u":
            w |= 1 << i
    return w


def parse_path(s: str) -> StepPath:
    """Parse a ``u``/``d`` string into a validated :class:`StepPath`."""
    bad = set(s) - {"u", "d"}
    if bad:
        raise BadCharacter(f"unexpected characters {sorted(bad)!r}")
    ups = s.count("u")
    if 2 * ups != len(s):
        raise UnbalancedPath(f"{ups} up steps vs {len(s) - ups} down steps")
    return StepPath(_word(s), ups)


def heights(p: StepPath) -> list[int]:
    """Ordinates of the 2N+1 vertices of ``p``."""
    h = [0]
    for i in range(p.length):
        h.append(h[-1] + (1 if p[i] else -1))
    return h


def _matches(p: StepPath) -> list[int]:
    # match[i] = 0-based position of the step matched with the step at i
    match = [0] * p.length
    stack = []
    for i in range(p.length):
        if p[i]:
            stack.append(i)
        else:
            j = stack.pop()
            match[i], match[j] = j, i
    return match


def _up_positions(p: StepPath) -> list[int]:
    return [i for i in range(p.length) if p[i]]


def is_m_dyck(p: StepPath, m: int) -> bool:
    """True when the up steps of ``p`` come in contiguous rank blocks of ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    if p.size % m:
        return False
    ups = _up_positions(p)
    for b in range(0, p.size, m):
        if ups[b + m - 1] - ups[b] != m - 1:
            return False
    return True


def distance_vector(p: StepPath) -> tuple[int, ...]:
    """Excursion sizes of the up steps of ``p``, listed by rank."""
    match = _matches(p)
    return tuple((match[i] - i + 1) // 2 for i in _up_positions(p))


def match_of_up(p: StepPath, rank: int) -> int:
    """1-based index of the down step closing the excursion of up step ``rank``."""
    if not 1 <= rank <= p.size:
        raise IndexError(f"rank {rank} out of range 1..{p.size}")
    i = _up_positions(p)[rank - 1]
    return _matches(p)[i] + 1


def contact_abscissas(p: StepPath) -> list[int]:
    return [x for x, h in enumerate(heights(p)) if h == 0]


def contacts(p: StepPath) -> int:
    """Number of vertices of ``p`` on the x-axis, both endpoints included."""
    return sum(1 for h in heights(p) if h == 0)


def initial_rise(p: StepPath, m: int) -> int:
    if not is_m_dyck(p, m):
        raise NotMDyck(f"{p} is not a {m}-Dyck path")
    run = 0
    while run < p.length and p[run]:
        run += 1
    return run // m


# -- ballot paths -----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class BallotPath:
    """An m-ballot path from (0,0) to (mn, n) over north/east steps.

    Validity means every vertex (x, y) satisfies ``x <= m*y``, which is the
    same as the 45 degree image being a Dyck path.
    """

    m: int
    steps: str

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        bad = set(self.steps) - {"N", "E"}
        if bad:
            raise BadCharacter(f"unexpected characters {sorted(bad)!r}")
        x = y = 0
        for c in self.steps:
            if c == "N":
                y += 1
            else:
                x += 1
            if x > self.m * y:
                raise BelowAxis(f"vertex ({x},{y}) lies below the line x = {self.m}y")
        if x != self.m * y:
            raise UnbalancedPath(f"path ends at ({x},{y}), not on x = {self.m}y")

    @property
    def size(self) -> int:
        return self.steps.count("N")

    def __str__(self) -> str:
        return self.steps


def parse_ballot(s: str, m: int) -> BallotPath:
    return BallotPath(m, s)


def ballot_to_dyck(b: BallotPath) -> StepPath:
    return parse_path(b.steps.replace("N", "u" * b.m).replace("E", "d"))


def dyck_to_ballot(p: StepPath, m: int) -> BallotPath:
    if not is_m_dyck(p, m):
        raise NotMDyck(f"{p} is not a {m}-Dyck path")
    return BallotPath(m, p.steps.replace("u" * m, "N").replace("d", "E"))


# -- pointed paths and m-reduction -----------------------------------------

@dataclass(frozen=True, slots=True)
class PointedPath:
    """A Dyck path with weakly increasing marked contacts (repeats allowed)."""

    path: StepPath
    points: tuple[int, ...]

    def __post_init__(self):
        cs = set(contact_abscissas(self.path))
        for a in self.points:
            if a not in cs:
                raise PathError(f"abscissa {a} is not a contact of {self.path}")
        if any(a > b for a, b in zip(self.points, self.points[1:])):
            raise PathError("marked points must be weakly increasing")


def m_reduction(p: StepPath, m: int) -> PointedPath:
    """Contract the first ``m`` up steps of ``p`` and their matching down steps.

    The points come back sorted left to right, so the last point is the one
    left by the down step matched with the very first up step.
    """
    if not is_m_dyck(p, m):
        raise NotMDyck(f"{p} is not a {m}-Dyck path")
    if p.size == 0:
        raise EmptyPath("the empty path has no m-reduction")
    match = _matches(p)
    downs = [match[i] for i in range(m)]
    removed = set(range(m)) | set(downs)
    kept = "".join(p.steps[i] for i in range(p.length) if i not in removed)
    points = sorted(sum(1 for k in range(j) if k not in removed) for j in downs)
    return PointedPath(parse_path(kept), tuple(points))


def m_expansion(pp: PointedPath, m: int) -> StepPath:
    """Inverse of :func:`m_reduction`."""
    if len(pp.points) != m:
        raise ValueError(f"expected {m} points, got {len(pp.points)}")
    s = pp.path.steps
    out = ["u" * m]
    for x in range(len(s) + 1):
        out.append("d" * pp.points.count(x))
        if x < len(s):
            out.append(s[x])
    return parse_path("".join(out))


def prepend_distance(dv: Sequence[int], points: Sequence[int]) -> tuple[int, ...]:
    """Distance vector of the m-expansion, from the reduced vector and points.

    ``points`` are abscissas ``2*x_1 <= ... <= 2*x_m``; the result starts with
    ``(x_m + m, x_{m-1} + m - 1, ..., x_1 + 1)``.
    """
    m = len(points)
    head = tuple(points[i] // 2 + i + 1 for i in reversed(range(m)))
    return head + tuple(dv)


# -- generation ---------------------------------------------------------------

def m_dyck_paths(m: int, n: int) -> Iterator[StepPath]:
    """All m-Dyck paths of size ``m*n``, lexicographic with Up < Down."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    total = m * n
    block = "u" * m
    buf: list[str] = []

    def rec(ups: int, h: int):
        if ups == total and h == 0:
            yield parse_path("".join(buf))
            return
        if ups < total:
            buf.append(block)
            yield from rec(ups + m, h + m)
            buf.pop()
        if h > 0:
            buf.append("d")
            yield from rec(ups, h - 1)
            buf.pop()

    yield from rec(0, 0)


def dyck_paths(n: int) -> Iterator[StepPath]:
    return m_dyck_paths(1, n)


def ballot_paths(m: int, n: int) -> Iterator[BallotPath]:
    """All m-ballot paths of size ``n``, generated directly on the grid."""
    buf: list[str] = []

    def rec(x: int, y: int):
        if y == n and x == m * n:
            yield BallotPath(m, "".join(buf))
            return
        if y < n:
            buf.append("N")
            yield from rec(x, y + 1)
            buf.pop()
        if x < m * y:
            buf.append("E")
            yield from rec(x + 1, y)
            buf.pop()

    yield from rec(0, 0)
