"""Finite abelian groups, their characters, subgroups and annihilators.

A group is a product of cyclic factors Z_n1 x ... x Z_nk; elements are
integer k-tuples reduced coordinatewise.  Characters are indexed by group
elements under the fixed labeling

    chi_x(y) = exp(2*pi*i * sum_j x_j*y_j / n_j),

which makes the index map a group isomorphism with chi_x(y) = chi_y(x) and
conj(chi_x(y)) = chi_{-x}(y).  Phases are kept exact as fractions of the
group exponent; complex values are derived from them.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapacityError,
    DomainError,
    InvalidElementError,
    InvalidSubgroupError,
)

Element = tuple[int, ...]

SUBGROUP_ORDER_BOUND = 4096


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group as an ordered product of cyclic factors."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise DomainError("group needs at least one cyclic factor")
        if any(f < 2 for f in self.factors):
            raise DomainError(f"cyclic factors must be >= 2, got {self.factors}")
        object.__setattr__(self, "factors", tuple(int(f) for f in self.factors))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    @property
    def name(self) -> str:
        return "x".join(f"Z{f}" for f in self.factors)

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic (mixed-radix) order."""
        return _elements(self)

    def index(self, x: Element) -> int:
        """Lexicographic rank of x in elements()."""
        self.validate(x)
        idx = 0
        for c, f in zip(x, self.factors):
            idx = idx * f + c
        return idx

    def element(self, idx: int) -> Element:
        coords = []
        for f in reversed(self.factors):
            idx, c = divmod(idx, f)
            coords.append(c)
        return tuple(reversed(coords))

    def validate(self, x: Element) -> None:
        if len(x) != len(self.factors) or any(
            not (0 <= c < f) for c, f in zip(x, self.factors)
        ):
            raise InvalidElementError(f"{x} is not an element of {self.name}")

    def reduce(self, x: Sequence[int]) -> Element:
        """Reduce arbitrary integer coordinates into the group."""
        if len(x) != len(self.factors):
            raise InvalidElementError(f"{tuple(x)} has wrong rank for {self.name}")
        return tuple(int(c) % f for c, f in zip(x, self.factors))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % f for a, f in zip(x, self.factors))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % f for a, b, f in zip(x, y, self.factors))

    def format_element(self, x: Element) -> str:
        if len(self.factors) == 1:
            return str(x[0])
        return "(" + ",".join(str(c) for c in x) + ")"


_GROUP_RE = re.compile(r"^Z(\d+)(?:xZ(\d+))*$", re.IGNORECASE)


def parse_group(text: str) -> GroupSpec:
    """Parse the Z<n1>[xZ<n2>...] grammar, e.g. 'Z8' or 'Z2xZ4'."""
    s = text.strip()
    if not _GROUP_RE.match(s):
        raise DomainError(f"cannot parse group {text!r}; expected e.g. Z8 or Z2xZ4")
    return GroupSpec(tuple(int(p[1:]) for p in s.split("x")))


def parse_element(g: GroupSpec, text: str) -> Element:
    """Parse a bare integer (rank 1) or parenthesized tuple like (1,3)."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        parts = [p for p in s[1:-1].split(",") if p.strip() != ""]
        coords = tuple(int(p) for p in parts)
    else:
        coords = (int(s),)
    if len(coords) != g.rank:
        raise InvalidElementError(f"{text!r} has wrong rank for {g.name}")
    x = g.reduce(coords)
    return x


def parse_subset(g: GroupSpec, text: str) -> tuple[Element, ...]:
    """Parse a subset as '0,1,3', '{0,1,3}' or '(0,0),(1,0),(0,1)'."""
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    tokens: list[str] = []
    depth = 0
    cur = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        tokens.append(cur)
    return tuple(parse_element(g, t) for t in tokens)


@lru_cache(maxsize=None)
def _elements(g: GroupSpec) -> tuple[Element, ...]:
    return tuple(itertools.product(*[range(f) for f in g.factors]))


@lru_cache(maxsize=None)
def _coord_matrix(g: GroupSpec) -> np.ndarray:
    """(n, k) int array of element coordinates in lexicographic order."""
    return np.array(_elements(g), dtype=np.int64)


@lru_cache(maxsize=None)
def _phase_weights(g: GroupSpec) -> np.ndarray:
    """Per-coordinate weights N/n_j turning coordinate products into N-th phases."""
    N = g.exponent
    return np.array([N // f for f in g.factors], dtype=np.int64)


@lru_cache(maxsize=None)
def _root_table(g: GroupSpec) -> np.ndarray:
    N = g.exponent
    return np.exp(2j * np.pi * np.arange(N) / N)


# ---------------------------------------------------------------------------
# Characters


@dataclass(frozen=True)
class CharacterValue:
    """A root of unity given by an exact phase q in [0,1); value = e^{2 pi i q}."""

    phase: Fraction

    @property
    def complex_value(self) -> complex:
        turns = 2.0 * np.pi * float(self.phase)
        return complex(np.cos(turns), np.sin(turns))

    @property
    def is_real(self) -> bool:
        return self.phase in (Fraction(0), Fraction(1, 2))


def character_phase(g: GroupSpec, x: Element, y: Element) -> Fraction:
    """Exact phase of chi_x(y) as a fraction in [0, 1)."""
    g.validate(x)
    g.validate(y)
    N = g.exponent
    k = sum(a * b * w for a, b, w in zip(x, y, _phase_weights(g))) % N
    return Fraction(int(k), N)


def character_eval(g: GroupSpec, x: Element, y: Element) -> CharacterValue:
    """Evaluate the character indexed by x at y."""
    return CharacterValue(character_phase(g, x, y))


def phase_column(g: GroupSpec, y: Element) -> np.ndarray:
    """Integer phase numerators (mod exponent) of chi_y at every element."""
    g.validate(y)
    N = g.exponent
    w = _phase_weights(g) * np.array(y, dtype=np.int64)
    return (_coord_matrix(g) @ w) % N


def character_column(g: GroupSpec, y: Element) -> np.ndarray:
    """Complex values chi_x(y) for every x, in element order."""
    return _root_table(g)[phase_column(g, y)]


def character_table_columns(g: GroupSpec, gens: Sequence[Element]) -> np.ndarray:
    """(n, m) array with column j = chi_{gens[j]} evaluated at every element."""
    return np.column_stack([character_column(g, y) for y in gens])


@lru_cache(maxsize=16)
def full_character_table(g: GroupSpec) -> np.ndarray:
    """(n, n) table chi_y(x), row x, column y; cached for search workloads."""
    if g.order > 1024:
        raise CapacityError(f"full character table capped at order 1024, got {g.order}")
    return character_table_columns(g, g.elements())


def character_sum_over(g: GroupSpec, z: Element, A: Iterable[Element]) -> complex:
    """Sum of chi_z over a set of elements.

    For a Subgroup argument the result is snapped to the exact value |A| or 0
    (annihilator membership is decided on exact phases) after checking that
    the floating sum agrees within 1e-9.
    """
    elems = tuple(A.elements) if isinstance(A, Subgroup) else tuple(A)
    total = complex(sum(character_eval(g, z, xi).complex_value for xi in elems))
    if isinstance(A, Subgroup):
        annihilates = all(character_phase(g, z, x) == 0 for x in elems)
        exact = complex(len(elems)) if annihilates else 0j
        if abs(total - exact) > 1e-9:
            raise RuntimeError(f"subgroup character sum drifted: {total} vs {exact}")
        return exact
    return total


def full_group_sum(g: GroupSpec, x: Element) -> complex:
    """Sum of chi_x over the whole group: n at the identity index, else 0."""
    g.validate(x)
    return complex(g.order) if x == g.zero else 0j


# ---------------------------------------------------------------------------
# Subgroups


@dataclass(frozen=True)
class Subgroup:
    """A verified subgroup, elements stored sorted for determinism."""

    parent: GroupSpec
    elements: tuple[Element, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in set(self.elements)

    def as_set(self) -> frozenset[Element]:
        return frozenset(self.elements)


def is_subgroup_set(g: GroupSpec, elems: Iterable[Element]) -> bool:
    s = frozenset(elems)
    if g.zero not in s:
        return False
    return all(g.add(a, b) in s for a in s for b in s)


def make_subgroup(g: GroupSpec, elems: Iterable[Element]) -> Subgroup:
    s = frozenset(elems)
    if not is_subgroup_set(g, s):
        raise InvalidSubgroupError(f"{sorted(s)} is not a subgroup of {g.name}")
    return Subgroup(g, tuple(sorted(s)))


def subgroup_generated(g: GroupSpec, gens: Iterable[Element]) -> Subgroup:
    """Smallest subgroup containing gens (closure under add and negate)."""
    closure = {g.zero}
    frontier = []
    for x in gens:
        g.validate(x)
        for y in (x, g.neg(x)):
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    while frontier:
        x = frontier.pop()
        for y in list(closure):
            z = g.add(x, y)
            if z not in closure:
                closure.add(z)
                frontier.append(z)
    return Subgroup(g, tuple(sorted(closure)))


@lru_cache(maxsize=8)
def _index_add_table(g: GroupSpec) -> np.ndarray:
    """(n, n) table of element-index sums for the lattice walk."""
    E = _coord_matrix(g)
    n, k = E.shape
    radix = np.ones(k, dtype=np.int64)
    for j in range(k - 2, -1, -1):
        radix[j] = radix[j + 1] * g.factors[j + 1]
    table = np.zeros((n, n), dtype=np.int64)
    for j, f in enumerate(g.factors):
        table += ((E[:, None, j] + E[None, :, j]) % f) * radix[j]
    return table


@lru_cache(maxsize=None)
def all_subgroups(g: GroupSpec, bound: int = SUBGROUP_ORDER_BOUND) -> tuple[Subgroup, ...]:
    """Every subgroup exactly once, sorted by (order, element list).

    Breadth-first walk of the generated lattice.  Growing a subgroup H by
    one generator x only needs the coset multiples H + k*x, so each step is
    |H| * ord(x) index-table lookups rather than a closure from scratch.
    """
    if g.order > bound:
        raise CapacityError(f"subgroup enumeration capped at order {bound}")
    table = _index_add_table(g)
    n = g.order
    zero_idx = g.index(g.zero)
    # multiples[x] = indices of 0, x, 2x, ... up to the order of x
    multiples: list[np.ndarray] = []
    for x in range(n):
        ms = [zero_idx]
        cur = x
        while cur != zero_idx:
            ms.append(cur)
            cur = int(table[cur, x])
        multiples.append(np.array(ms, dtype=np.int64))

    trivial = np.array([zero_idx], dtype=np.int64)
    seen: dict[bytes, np.ndarray] = {trivial.tobytes(): trivial}
    queue = [trivial]
    while queue:
        base = queue.pop()
        members = set(base.tolist())
        for x in range(n):
            if x in members:
                continue
            grown = np.unique(table[np.ix_(base, multiples[x])])
            key = grown.tobytes()
            if key not in seen:
                seen[key] = grown
                queue.append(grown)
    els = g.elements()
    subs = [
        Subgroup(g, tuple(els[i] for i in idx)) for idx in seen.values()
    ]
    subs.sort(key=lambda h: (h.order, h.elements))
    return tuple(subs)


def annihilator(g: GroupSpec, H: Subgroup) -> Subgroup:
    """Character indices z with chi_z trivial on H; a subgroup of size n/|H|."""
    if H.parent != g or not is_subgroup_set(g, H.elements):
        raise InvalidSubgroupError("annihilator requires a verified subgroup")
    phases = np.column_stack([phase_column(g, x) for x in H.elements])
    mask = np.all(phases == 0, axis=1)
    els = g.elements()
    ann = Subgroup(g, tuple(x for x, keep in zip(els, mask) if keep))
    if ann.order * H.order != g.order:
        raise RuntimeError("annihilator cardinality violated n = |Ann|*|H|")
    return ann
