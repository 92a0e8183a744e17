"""The two ternary Knoedel walks and their exact step distributions.

Both walks move on the state set {0, 1, 2, ...} together with one
exceptional state ``BETA``, read as "one box filled to 1/3".  The integer
state counts open boxes in an online packing process; each step draws a
biased coin that is red with probability p and black with probability q.

Double-large walk (default p = 1/3):
    red   at i       -> i + 2   (a double pack opens two boxes)
    black at i >= 1  -> i - 1   (a single item closes a box)
    black at 0       -> BETA    (a single item starts a lone box)
    from BETA        -> 1       (either colour; edges merge)

Double-small walk (default p = 2/3):
    red   at i >= 1  -> i + 1   (a large single opens a box)
    black at i >= 2  -> i - 2   (a small double pack closes two boxes)
    black at 1       -> BETA
    from BETA        -> 0       (either colour)
    from 0           -> 1       (either colour)

Each walk starts at 0.  Because every productive move changes the box
count by +2/-1 (or +1/-2), the support of the step-n distribution lives
in a single residue class mod 3; ``residue_class`` returns it.

Two independent evaluation routes are provided: a forward dynamic
program over exact rationals (``dp_table``) and a brute-force sum over
all coin sequences (``brute_force_distribution``), used as the oracle
the rest of the package is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union


class _BetaState:
    """Singleton marker for the exceptional one-third-box state."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "beta"


BETA = _BetaState()

State = Union[int, _BetaState]


def state_sort_key(state: State) -> tuple[int, int]:
    """Sort numbered states ascending, with BETA after all integers."""
    if isinstance(state, _BetaState):
        return (1, 0)
    return (0, state)


def parse_state(text: str) -> State:
    """Parse a state from its serialized form, an integer or ``beta``."""
    if text.strip().lower() == "beta":
        return BETA
    value = int(text)
    if value < 0:
        raise ValueError(f"invalid state {text!r}")
    return value


def format_state(state: State) -> str:
    return "beta" if isinstance(state, _BetaState) else str(state)


class ModelKind(Enum):
    DOUBLE_LARGE = "double-large"
    DOUBLE_SMALL = "double-small"


BALANCED_RED = {
    ModelKind.DOUBLE_LARGE: Fraction(1, 3),
    ModelKind.DOUBLE_SMALL: Fraction(2, 3),
}


@dataclass(frozen=True)
class WalkModel:
    """One of the two walks, with an arbitrary rational red probability."""

    kind: ModelKind
    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        if not 0 < self.p < 1:
            raise ValueError("red probability must satisfy 0 < p < 1")

    @classmethod
    def double_large(cls, p: Fraction | None = None) -> WalkModel:
        return cls(ModelKind.DOUBLE_LARGE, Fraction(1, 3) if p is None else p)

    @classmethod
    def double_small(cls, p: Fraction | None = None) -> WalkModel:
        return cls(ModelKind.DOUBLE_SMALL, Fraction(2, 3) if p is None else p)

    @property
    def q(self) -> Fraction:
        return 1 - self.p

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def is_balanced(self) -> bool:
        """Whether p has the default value the closed forms are derived for."""
        return self.p == BALANCED_RED[self.kind]

    def step(self, state: State, red: bool) -> State:
        """Single transition for one coin draw."""
        if self.kind is ModelKind.DOUBLE_LARGE:
            if isinstance(state, _BetaState):
                return 1
            if red:
                return state + 2
            return state - 1 if state >= 1 else BETA
        if isinstance(state, _BetaState):
            return 0
        if state == 0:
            return 1
        if red:
            return state + 1
        return BETA if state == 1 else state - 2

    def transitions(self, state: State) -> list[tuple[State, Fraction]]:
        """Outgoing edges as (target, weight) pairs, merged by target."""
        red = self.step(state, True)
        black = self.step(state, False)
        if red == black or (isinstance(red, _BetaState) and isinstance(black, _BetaState)):
            return [(red, Fraction(1))]
        return [(red, self.p), (black, self.q)]


@dataclass
class StepDistribution:
    """Exact distribution of the walk after a fixed number of steps."""

    step: int
    probabilities: dict[State, Fraction] = field(default_factory=dict)

    def prob(self, state: State) -> Fraction:
        return self.probabilities.get(state, Fraction(0))

    def support(self) -> list[State]:
        return sorted(
            (s for s, mass in self.probabilities.items() if mass != 0),
            key=state_sort_key,
        )

    def total(self) -> Fraction:
        return sum(self.probabilities.values(), Fraction(0))


def dp_table(model: WalkModel, max_steps: int) -> list[StepDistribution]:
    """Step distributions 0..max_steps by forward dynamic programming."""
    if max_steps < 0:
        raise ValueError("step count must be non-negative")
    rows = [StepDistribution(0, {0: Fraction(1)})]
    for n in range(1, max_steps + 1):
        acc: dict[State, Fraction] = {}
        for state, mass in rows[-1].probabilities.items():
            for target, weight in model.transitions(state):
                acc[target] = acc.get(target, Fraction(0)) + mass * weight
        rows.append(StepDistribution(n, acc))
    return rows


def dp_distribution(model: WalkModel, steps: int) -> StepDistribution:
    """Exact distribution after ``steps`` steps."""
    return dp_table(model, steps)[-1]


BRUTE_FORCE_LIMIT = 22


def brute_force_distribution(model: WalkModel, steps: int) -> StepDistribution:
    """Distribution by summing over all 2^steps coin sequences.

    Deliberately independent of ``dp_table``: paths are replayed one coin
    at a time through ``step`` and weighted by p^(reds) q^(blacks).
    """
    if steps < 0:
        raise ValueError("step count must be non-negative")
    if steps > BRUTE_FORCE_LIMIT:
        raise ValueError("oracle limit exceeded")
    weight_by_reds = [model.p**r * model.q ** (steps - r) for r in range(steps + 1)]
    acc: dict[State, Fraction] = {}
    for mask in range(1 << steps):
        state: State = 0
        for k in range(steps):
            state = model.step(state, bool(mask >> k & 1))
        w = weight_by_reds[mask.bit_count()]
        acc[state] = acc.get(state, Fraction(0)) + w
    return StepDistribution(steps, acc)


def residue_class(model: WalkModel, state: State) -> int:
    """Residue r such that the state can carry mass only when n = r (mod 3)."""
    if model.kind is ModelKind.DOUBLE_LARGE:
        if isinstance(state, _BetaState):
            return 1
        return (-state) % 3
    if isinstance(state, _BetaState):
        return 2
    return state % 3
