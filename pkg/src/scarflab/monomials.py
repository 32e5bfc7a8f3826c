"""Square-free monomials and square-free monomial ideals.

A square-free monomial over a fixed variable universe is identified with its
support, stored as a bit set (variable i <-> bit i).  Divisibility is subset
inclusion of supports and lcm is union, so everything here is integer bit
arithmetic.  Ideals are kept as their unique minimal generating set, which for
square-free monomials is just the divisibility antichain of the generators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_VARIABLES = 32


class MonomialError(ValueError):
    pass


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VariableUniverse:
    """An ordered tuple of distinct variable names shared by a family of monomials."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise MonomialError("variable names must be distinct")
        if len(self.names) > DEFAULT_MAX_VARIABLES:
            raise MonomialError(
                f"universe has {len(self.names)} variables, cap is {DEFAULT_MAX_VARIABLES}"
            )

    @classmethod
    def of_size(cls, count: int) -> "VariableUniverse":
        """Universe x1, ..., x<count>; the standard choice for graph vertex 0..count-1."""
        return cls(tuple(f"x{i + 1}" for i in range(count)))

    @property
    def size(self) -> int:
        return len(self.names)

    def extend(self, name: str) -> "VariableUniverse":
        return VariableUniverse(self.names + (name,))

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise MonomialError(f"unknown variable {name!r}") from None

    def monomial(self, indices: Iterable[int]) -> "SquarefreeMonomial":
        mask = 0
        for i in indices:
            if not 0 <= i < self.size:
                raise MonomialError(f"variable index {i} out of range 0..{self.size - 1}")
            mask |= 1 << i
        return SquarefreeMonomial(self, mask)

    def from_mask(self, mask: int) -> "SquarefreeMonomial":
        if mask < 0 or mask >> self.size:
            raise MonomialError(f"mask {mask:#x} does not fit a {self.size}-variable universe")
        return SquarefreeMonomial(self, mask)

    def one(self) -> "SquarefreeMonomial":
        return SquarefreeMonomial(self, 0)

    def parse(self, text: str) -> "SquarefreeMonomial":
        """Parse '1' or a *-separated variable product such as 'x1*x3*x4'."""
        text = text.strip()
        if text == "1":
            return self.one()
        return self.monomial(self.index_of(part.strip()) for part in text.split("*"))


@dataclass(frozen=True)
class SquarefreeMonomial:
    universe: VariableUniverse
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.universe.size:
            raise MonomialError("support does not fit the universe")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    @property
    def degree(self) -> int:
        return _popcount(self.mask)

    @property
    def is_one(self) -> bool:
        return self.mask == 0

    def divides(self, other: "SquarefreeMonomial") -> bool:
        _require_same_universe(self, other)
        return self.mask & ~other.mask == 0

    def lcm(self, other: "SquarefreeMonomial") -> "SquarefreeMonomial":
        _require_same_universe(self, other)
        return SquarefreeMonomial(self.universe, self.mask | other.mask)

    def render(self) -> str:
        if self.mask == 0:
            return "1"
        return "*".join(self.universe.names[i] for i in self.support)

    def __str__(self) -> str:
        return self.render()


def _require_same_universe(a: SquarefreeMonomial, b: SquarefreeMonomial) -> None:
    if a.universe is not b.universe and a.universe != b.universe:
        raise MonomialError("monomials live in different variable universes")


def divides(a: SquarefreeMonomial, b: SquarefreeMonomial) -> bool:
    return a.divides(b)


def lcm_of(
    monomials: Iterable[SquarefreeMonomial],
    universe: VariableUniverse | None = None,
) -> SquarefreeMonomial:
    """lcm of a collection; the empty collection needs an explicit universe and gives 1."""
    mask = 0
    seen: VariableUniverse | None = None
    for m in monomials:
        if seen is None:
            seen = m.universe
        else:
            _require_same_universe(m, SquarefreeMonomial(seen, 0))
        mask |= m.mask
    if seen is None:
        if universe is None:
            raise MonomialError("lcm of an empty collection needs a universe")
        seen = universe
    return SquarefreeMonomial(seen, mask)


@dataclass(frozen=True)
class MonomialIdeal:
    """A square-free monomial ideal held as its minimal generators.

    Generators are stored as an antichain sorted by ascending support bit
    pattern, so structurally equal ideals compare and hash equal.  The empty
    tuple is the zero ideal.
    """

    universe: VariableUniverse
    mingens: tuple[SquarefreeMonomial, ...]

    def __post_init__(self) -> None:
        masks = [g.mask for g in self.mingens]
        if sorted(masks) != masks or len(set(masks)) != len(masks):
            raise MonomialError("mingens must be strictly sorted by support bit pattern")
        for g in self.mingens:
            _require_same_universe(g, SquarefreeMonomial(self.universe, 0))
        for i, a in enumerate(masks):
            for b in masks[i + 1:]:
                if a & ~b == 0 or b & ~a == 0:
                    raise MonomialError("mingens must form a divisibility antichain")

    @classmethod
    def zero(cls, universe: VariableUniverse) -> "MonomialIdeal":
        return cls(universe, ())

    @property
    def is_zero(self) -> bool:
        return not self.mingens

    @property
    def num_generators(self) -> int:
        return len(self.mingens)

    @cached_property
    def generator_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.mingens)

    def restrict(self, m: SquarefreeMonomial) -> "MonomialIdeal":
        """Subideal generated by the minimal generators dividing m."""
        _require_same_universe(m, SquarefreeMonomial(self.universe, 0))
        return MonomialIdeal(
            self.universe, tuple(g for g in self.mingens if g.mask & ~m.mask == 0)
        )

    def contains(self, m: SquarefreeMonomial) -> bool:
        _require_same_universe(m, SquarefreeMonomial(self.universe, 0))
        return any(g.mask & ~m.mask == 0 for g in self.mingens)

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.universe.names),
            "mingens": [list(g.support) for g in self.mingens],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonomialIdeal":
        universe = VariableUniverse(tuple(data["variables"]))
        gens = [universe.monomial(ix) for ix in data["mingens"]]
        return minimalize(gens, universe)

    def render(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.render() for g in self.mingens) + ")"

    def __str__(self) -> str:
        return self.render()


def minimalize(
    generators: Sequence[SquarefreeMonomial],
    universe: VariableUniverse | None = None,
) -> MonomialIdeal:
    """Ideal generated by the given monomials, reduced to the minimal antichain.

    A generator survives unless a distinct generator (strictly smaller support,
    or equal support seen once already) divides it.
    """
    gens = list(generators)
    if not gens:
        if universe is None:
            raise MonomialError("minimalize of an empty list needs a universe")
        return MonomialIdeal.zero(universe)
    if universe is None:
        universe = gens[0].universe
    for g in gens:
        _require_same_universe(g, SquarefreeMonomial(universe, 0))
    masks = sorted({g.mask for g in gens}, key=lambda m: (_popcount(m), m))
    kept: list[int] = []
    for m in masks:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    kept.sort()
    return MonomialIdeal(universe, tuple(SquarefreeMonomial(universe, m) for m in kept))


def restrict(ideal: MonomialIdeal, m: SquarefreeMonomial) -> MonomialIdeal:
    return ideal.restrict(m)
