"""State space of the wall process.

Particles live on N x {1, 2, ...}; level k carries floor((k+1)/2) of them.
A level's positions are a partition (nonincreasing, nonnegative), and
adjacent levels interlace.  Positions are stored unshifted; the "simple"
coordinates (at most one particle per site) are obtained with
:func:`shift_to_simple`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidArguments

Partition = tuple[int, ...]


def num_particles(level: int) -> int:
    """Number of particles on a level: floor((level+1)/2)."""
    if level < 1:
        raise InvalidArguments(f"level must be >= 1, got {level}")
    return (level + 1) // 2


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize a nonincreasing nonnegative integer sequence."""
    t = tuple(int(p) for p in parts)
    if any(p < 0 for p in t):
        raise InvalidArguments(f"negative part in {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise InvalidArguments(f"parts not nonincreasing: {t}")
    return t


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def interlaces(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff mu interlaces below lam (mu on the lower level).

    For len(lam) = len(mu) + 1 this is lam[i+1] <= mu[i] <= lam[i]; for
    equal lengths the trailing constraint is dropped, i.e.
    lam[0] >= mu[0] >= lam[1] >= mu[1] >= ...
    """
    m, l = len(mu), len(lam)
    if l - m not in (0, 1):
        raise InvalidArguments(f"length mismatch: len(mu)={m}, len(lam)={l}")
    for i in range(m):
        if mu[i] > lam[i]:
            return False
        if i + 1 < l and lam[i + 1] > mu[i]:
            return False
    return True


@dataclass(frozen=True)
class ModelParams:
    """Jump parameter q (rational in [0,1)) and alpha = 2q/(1-q)."""

    q: Fraction

    def __post_init__(self):
        q = Fraction(self.q)
        if not (0 <= q < 1):
            raise InvalidArguments(f"q must lie in [0,1), got {q}")
        object.__setattr__(self, "q", q)

    @property
    def alpha(self) -> Fraction:
        return 2 * self.q / (1 - self.q)

    @classmethod
    def from_alpha(cls, alpha) -> "ModelParams":
        alpha = Fraction(alpha)
        if alpha < 0:
            raise InvalidArguments(f"alpha must be >= 0, got {alpha}")
        return cls(q=alpha / (2 + alpha))


@dataclass(frozen=True)
class InterlacedState:
    """Positions on levels 1..K plus the (half-integer) time.

    ``levels[k-1]`` is the partition on level k, unshifted.
    """

    levels: tuple[Partition, ...]
    time: float = 0.0

    def __post_init__(self):
        object.__setattr__(
            self, "levels", tuple(as_partition(lv) for lv in self.levels)
        )
        validate_interlacing(self.levels)

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    def level(self, k: int) -> Partition:
        return self.levels[k - 1]

    def to_json(self) -> str:
        return json.dumps(
            {"time": float(self.time), "levels": [list(lv) for lv in self.levels]}
        )

    @classmethod
    def from_json(cls, s: str) -> "InterlacedState":
        d = json.loads(s)
        return cls(levels=tuple(tuple(lv) for lv in d["levels"]), time=d["time"])


def validate_interlacing(levels: Sequence[Sequence[int]]) -> None:
    """Raise unless every level has the right size and interlaces its neighbor."""
    for k, lv in enumerate(levels, start=1):
        if len(lv) != num_particles(k):
            raise InvalidArguments(
                f"level {k} must hold {num_particles(k)} particles, got {len(lv)}"
            )
    for k in range(1, len(levels)):
        if not interlaces(levels[k - 1], levels[k]):
            raise InvalidArguments(
                f"levels {k} and {k + 1} do not interlace: "
                f"{levels[k - 1]} vs {levels[k]}"
            )


def densely_packed(num_levels: int, time: float = 0.0) -> InterlacedState:
    """All particles at the wall."""
    if num_levels < 1:
        raise InvalidArguments("need at least one level")
    return InterlacedState(
        levels=tuple((0,) * num_particles(k) for k in range(1, num_levels + 1)),
        time=time,
    )


def shift_to_simple(level_k: int, x: Sequence[int]) -> tuple[int, ...]:
    """Shift level-k positions so that no two particles share a site.

    Particle i (1-based) moves to x_i + floor((k+1)/2) - i; the result is
    strictly decreasing exactly when ``x`` is a valid partition.
    """
    r = num_particles(level_k)
    if len(x) != r:
        raise InvalidArguments(f"level {level_k} holds {r} particles, got {len(x)}")
    return tuple(x[i] + r - (i + 1) for i in range(r))


def height_function(state: InterlacedState, level: int, site: int) -> int:
    """Number of (shifted) particles strictly to the right of ``site``."""
    if not (1 <= level <= state.num_levels):
        raise InvalidArguments(f"level {level} not in state")
    if site < 0:
        raise InvalidArguments("site must be >= 0")
    shifted = shift_to_simple(level, state.level(level))
    return sum(1 for p in shifted if p > site)


@dataclass(frozen=True)
class LevelLabel:
    """A level together with its (r, a) kernel coordinates, a in {-1/2, +1/2}."""

    k: int
    r: int
    a: Fraction


# The paper-internal remark places (r, a) on level 2r + a + 1/2; the
# transition-matrix definition instead pairs level k with r = floor((k+1)/2),
# which solves 2r + a + 1/2 = k + 1.  Both are provided; the kernel module
# selects the one passing the level-1 oracle.
KERNEL_THM = "KernelThm"
T_MATRIX = "TMatrix"


def level_label(k: int, convention: str) -> LevelLabel:
    """Map a level to its (r, a) pair under the given convention."""
    if k < 1:
        raise InvalidArguments(f"level must be >= 1, got {k}")
    half = Fraction(1, 2)
    if convention == KERNEL_THM:
        # solve 2r + 1/2 + a = k with a = +-1/2
        if k % 2 == 0:
            return LevelLabel(k=k, r=k // 2, a=-half)
        return LevelLabel(k=k, r=(k - 1) // 2, a=half)
    if convention == T_MATRIX:
        r = (k + 1) // 2
        return LevelLabel(k=k, r=r, a=half if k % 2 == 0 else -half)
    raise InvalidArguments(f"unknown convention {convention!r}")
