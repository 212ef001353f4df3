"""Finite groups as Cayley tables, with subgroup and isomorphism search.

Elements are 0-based indices into a fixed enumeration; the table T satisfies
T[a][b] = a*b.  Groups compare equal when their tables coincide, so two
structurally identical groups loaded from different sources interoperate.
Names are display labels and take no part in equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import ISO_SEARCH_CAP, SUBGROUP_ENUM_CAP
from .errors import BudgetExceeded, GroupMismatch, InvalidInput

__all__ = [
    "Group",
    "GroupElem",
    "Subgroup",
    "build_abelian",
    "validate_table",
    "subgroup_closure",
    "left_coset",
    "all_subgroups",
    "find_isomorphisms",
]


class Group:
    """An abstract finite group given by its multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        tbl = tuple(tuple(row) for row in table)
        _check_table(tbl)
        self.table = tbl
        self.size = len(tbl)
        if names is None:
            names = [f"g{i}" for i in range(self.size)]
        if len(names) != self.size:
            raise InvalidInput(
                f"expected {self.size} element names, got {len(names)}", code="bad-names"
            )
        if len(set(names)) != self.size:
            raise InvalidInput("element names must be distinct", code="bad-names")
        self.names = tuple(str(n) for n in names)
        self._index_of_name = {n: i for i, n in enumerate(self.names)}
        self.identity = _find_identity(tbl)
        self._inv = _build_inverses(tbl, self.identity)

    # -- arithmetic on element indices -------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, a: int, g: int) -> int:
        """Return g^-1 * a * g."""
        gi = self._inv[g]
        return self.table[self.table[gi][a]][g]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self._inv[a], -k)
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def order_of(self, a: int) -> int:
        acc, n = a, 1
        while acc != self.identity:
            acc = self.table[acc][a]
            n += 1
        return n

    # -- element access -----------------------------------------------------

    def elem(self, i: int) -> GroupElem:
        if not 0 <= i < self.size:
            raise InvalidInput(f"element index {i} out of range", code="bad-element")
        return GroupElem(self, i)

    def elem_by_name(self, name: str) -> GroupElem:
        try:
            return GroupElem(self, self._index_of_name[name])
        except KeyError:
            raise InvalidInput(f"unknown element name {name!r}", code="bad-element") from None

    def name_of(self, i: int) -> str:
        return self.names[i]

    def elements(self) -> range:
        return range(self.size)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.size) for b in range(a))

    # -- identity & comparison ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Group(order={self.size})"


@dataclass(frozen=True)
class GroupElem:
    """An element of a concrete Group; operators check the groups match."""

    group: Group
    index: int

    def _check(self, other: GroupElem) -> None:
        if self.group != other.group:
            raise GroupMismatch("elements belong to different groups")

    def __mul__(self, other: GroupElem) -> GroupElem:
        self._check(other)
        return GroupElem(self.group, self.group.mul(self.index, other.index))

    def inv(self) -> GroupElem:
        return GroupElem(self.group, self.group.inv(self.index))

    def conj(self, g: GroupElem) -> GroupElem:
        self._check(g)
        return GroupElem(self.group, self.group.conj(self.index, g.index))

    def order(self) -> int:
        return self.group.order_of(self.index)

    @property
    def name(self) -> str:
        return self.group.names[self.index]

    def __repr__(self) -> str:
        return f"<{self.name}>"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``group``, stored as the sorted tuple of member indices."""

    group: Group
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", mem)
        g = self.group
        if not mem or any(not 0 <= a < g.size for a in mem):
            raise InvalidInput("subgroup members out of range", code="bad-subgroup")
        mset = set(mem)
        if g.identity not in mset:
            raise InvalidInput("subgroup must contain the identity", code="bad-subgroup")
        for a in mem:
            for b in mem:
                if g.mul(a, b) not in mset:
                    raise InvalidInput(
                        f"set not closed: {g.name_of(a)}*{g.name_of(b)} escapes",
                        code="bad-subgroup",
                    )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in set(self.members)

    def position_of(self, a: int) -> int:
        return self.members.index(a)

    def names(self) -> tuple[str, ...]:
        return tuple(self.group.name_of(a) for a in self.members)


# -- construction ------------------------------------------------------------


def build_abelian(factors: Sequence[int]) -> Group:
    """Direct product of cyclic groups Z_f1 x ... x Z_fk, row-major element order.

    Elements are named "(c1,...,ck)" by their coordinate vectors, with the last
    coordinate varying fastest.
    """
    factors = list(factors)
    if not factors or any(f < 2 for f in factors):
        raise InvalidInput(f"every factor must be at least 2, got {factors}", code="invalid-input")
    size = 1
    for f in factors:
        size *= f

    def decode(i: int) -> tuple[int, ...]:
        coords = []
        for f in reversed(factors):
            coords.append(i % f)
            i //= f
        return tuple(reversed(coords))

    def encode(coords: Sequence[int]) -> int:
        i = 0
        for c, f in zip(coords, factors):
            i = i * f + c
        return i

    table = [
        [encode([(x + y) % f for x, y, f in zip(decode(a), decode(b), factors)]) for b in range(size)]
        for a in range(size)
    ]
    names = ["(" + ",".join(str(c) for c in decode(i)) + ")" for i in range(size)]
    return Group(table, names)


def validate_table(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> Group:
    """Build a Group from a raw table, rejecting non-groups with a specific code."""
    return Group(table, names)


def _check_table(tbl: tuple[tuple[int, ...], ...]) -> None:
    n = len(tbl)
    if n == 0:
        raise InvalidInput("empty table", code="non-latin")
    for row in tbl:
        if len(row) != n:
            raise InvalidInput("table is not square", code="non-latin")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidInput(f"table entry {v!r} out of range", code="non-latin")
    full = set(range(n))
    for i, row in enumerate(tbl):
        if set(row) != full:
            raise InvalidInput(f"row {i} is not a permutation", code="non-latin")
    for j in range(n):
        if {tbl[i][j] for i in range(n)} != full:
            raise InvalidInput(f"column {j} is not a permutation", code="non-latin")
    e = None
    for i in range(n):
        if all(tbl[i][b] == b for b in range(n)) and all(tbl[a][i] == a for a in range(n)):
            e = i
            break
    if e is None:
        raise InvalidInput("no two-sided identity", code="no-identity")
    for a in range(n):
        for b in range(n):
            ab = tbl[a][b]
            for c in range(n):
                if tbl[ab][c] != tbl[a][tbl[b][c]]:
                    raise InvalidInput(
                        f"not associative at triple ({a},{b},{c})", code="non-associative"
                    )


def _find_identity(tbl: tuple[tuple[int, ...], ...]) -> int:
    for i in range(len(tbl)):
        if all(tbl[i][b] == b for b in range(len(tbl))):
            return i
    raise InvalidInput("no two-sided identity", code="no-identity")


def _build_inverses(tbl: tuple[tuple[int, ...], ...], e: int) -> tuple[int, ...]:
    inv = [0] * len(tbl)
    for a in range(len(tbl)):
        inv[a] = tbl[a].index(e)
    return tuple(inv)


# -- subgroups ----------------------------------------------------------------


def subgroup_closure(group: Group, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the seed elements."""
    members = {group.identity}
    frontier = list(members)
    for a in seed:
        if not 0 <= a < group.size:
            raise InvalidInput(f"element index {a} out of range", code="bad-element")
        if a not in members:
            members.add(a)
            frontier.append(a)
    # in a finite group, closure under products already yields a subgroup
    while frontier:
        a = frontier.pop()
        for b in list(members):
            for c in (group.mul(a, b), group.mul(b, a)):
                if c not in members:
                    members.add(c)
                    frontier.append(c)
    return Subgroup(group, tuple(members))


def left_coset(g: int, sub: Subgroup) -> tuple[int, ...]:
    """The left coset g*H as a sorted tuple; its first entry is the canonical rep."""
    grp = sub.group
    return tuple(sorted(grp.mul(g, h) for h in sub.members))


def all_subgroups(group: Group) -> list[Subgroup]:
    """Every subgroup, found by closing known subgroups under one extra generator."""
    if group.size > SUBGROUP_ENUM_CAP:
        raise BudgetExceeded(
            f"subgroup enumeration capped at order {SUBGROUP_ENUM_CAP}, group has {group.size}"
        )
    trivial = subgroup_closure(group, ())
    seen = {trivial.members: trivial}
    queue = [trivial]
    while queue:
        sub = queue.pop()
        inside = set(sub.members)
        for g in group.elements():
            if g in inside:
                continue
            bigger = subgroup_closure(group, sub.members + (g,))
            if bigger.members not in seen:
                seen[bigger.members] = bigger
                queue.append(bigger)
    return sorted(seen.values(), key=lambda s: (len(s.members), s.members))


# -- isomorphism search --------------------------------------------------------


def _as_carrier(x: Group | Subgroup) -> tuple[tuple[int, ...], Group]:
    if isinstance(x, Group):
        return tuple(x.elements()), x
    return x.members, x.group


def find_isomorphisms(
    h1: Group | Subgroup, h2: Group | Subgroup, limit: int | None = None
) -> list[dict[int, int]]:
    """All group isomorphisms h1 -> h2 as element-index maps, generator backtracking.

    Accepts plain groups or subgroups (maps are between parent-group indices in
    the latter case).  Returns [] when none exist; results are deterministic and
    capped at ``limit`` when given.
    """
    elems1, g1 = _as_carrier(h1)
    elems2, g2 = _as_carrier(h2)
    if len(elems1) > ISO_SEARCH_CAP or len(elems2) > ISO_SEARCH_CAP:
        raise BudgetExceeded(f"isomorphism search capped at order {ISO_SEARCH_CAP}")
    if len(elems1) != len(elems2):
        return []
    order1 = {a: g1.order_of(a) for a in elems1}
    order2 = {a: g2.order_of(a) for a in elems2}
    if sorted(order1.values()) != sorted(order2.values()):
        return []

    gens = _generators(elems1, g1)
    by_order: dict[int, list[int]] = {}
    for a in elems2:
        by_order.setdefault(order2[a], []).append(a)

    found: list[dict[int, int]] = []

    def extend(images: list[int]) -> None:
        if limit is not None and len(found) >= limit:
            return
        k = len(images)
        if k < len(gens):
            for cand in by_order.get(order1[gens[k]], []):
                extend(images + [cand])
                if limit is not None and len(found) >= limit:
                    return
            return
        f = _close_homomorphism(elems1, g1, g2, gens, images)
        if f is None:
            return
        if len(set(f.values())) != len(elems1) or set(f.values()) != set(elems2):
            return
        for a in elems1:  # full homomorphism check, the closure is only a candidate
            for b in elems1:
                if f[g1.mul(a, b)] != g2.mul(f[a], f[b]):
                    return
        found.append(f)

    extend([])
    return found


def _generators(elems: tuple[int, ...], g: Group) -> list[int]:
    gens: list[int] = []
    span = {g.identity}
    for a in sorted(elems, key=lambda x: -g.order_of(x)):
        if a not in span:
            gens.append(a)
            span = set(subgroup_closure(g, gens).members)
            if len(span) == len(elems):
                break
    return gens


def _close_homomorphism(
    elems1: tuple[int, ...],
    g1: Group,
    g2: Group,
    gens: list[int],
    images: list[int],
) -> dict[int, int] | None:
    """Extend generator images to the span by BFS; None on any inconsistency."""
    f = {g1.identity: g2.identity}
    frontier = [g1.identity]
    while frontier:
        x = frontier.pop()
        for gen, img in zip(gens, images):
            y = g1.mul(x, gen)
            fy = g2.mul(f[x], img)
            if y in f:
                if f[y] != fy:
                    return None
            else:
                f[y] = fy
                frontier.append(y)
    if len(f) != len(elems1):
        return None
    return f
