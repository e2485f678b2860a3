"""Finite groupoids, their Haar weight data and standard builders."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from groupoidlab.errors import ConfigError
from groupoidlab.types import CheckReport


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """A finite groupoid.

    Composition convention: (p, q) is composable iff src(p) = tgt(q), and then
    tgt(pq) = tgt(p), src(pq) = src(q).

    Attributes:
        arrows: Arrow identifiers in basis order
        units: Unit arrows (a subset of arrows)
        src, tgt: Arrow -> unit
        inv: Arrow -> inverse arrow
        compose: (p, q) -> pq on composable pairs
    """

    arrows: tuple[str, ...]
    units: tuple[str, ...]
    src: Mapping[str, str]
    tgt: Mapping[str, str]
    inv: Mapping[str, str]
    compose: Mapping[tuple[str, str], str]
    _index: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "units", tuple(self.units))
        self._index.update({p: i for i, p in enumerate(self.arrows)})

    def __len__(self) -> int:
        return len(self.arrows)

    def index(self, arrow: str) -> int:
        return self._index[arrow]

    def composable(self, p: str, q: str) -> bool:
        return self.src.get(p) == self.tgt.get(q)

    def is_unit(self, p: str) -> bool:
        return p in self.units

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [(p, q) for p in self.arrows for q in self.arrows if self.composable(p, q)]


@dataclass(frozen=True, eq=False)
class HaarWeights:
    """Left and right Haar weight densities on units.

    Attributes:
        m: Unit -> positive left weight
        n: Unit -> positive right weight
    """

    m: Mapping[str, float]
    n: Mapping[str, float]

    def __post_init__(self):
        for name, weights in (("left_weight", self.m), ("right_weight", self.n)):
            for unit, value in weights.items():
                if not value > 0:
                    raise ConfigError(f"{name}[{unit}] must be positive, got {value}")

    @classmethod
    def uniform(cls, g: FiniteGroupoid) -> "HaarWeights":
        return cls({u: 1.0 for u in g.units}, {u: 1.0 for u in g.units})

    def covers(self, g: FiniteGroupoid) -> list[str]:
        """Messages for units lacking a weight."""
        errors = []
        for name, weights in (("left_weight", self.m), ("right_weight", self.n)):
            errors.extend(f"{name}: missing unit {u!r}" for u in g.units if u not in weights)
        return errors


def groupoid_violations(g: FiniteGroupoid) -> dict[str, list[str]]:
    """Violated groupoid axioms with witnessing arrows, keyed by axiom name."""
    arrows = set(g.arrows)
    out: dict[str, list[str]] = {
        "units": [],
        "structure_maps": [],
        "compose_total": [],
        "compose_domain": [],
        "compose_range": [],
        "associativity": [],
        "unit_laws": [],
        "inverse_laws": [],
    }

    if len(arrows) != len(g.arrows):
        out["structure_maps"].append("duplicate arrow ids")
    for u in g.units:
        if u not in arrows:
            out["units"].append(f"unit {u!r} is not an arrow")
        elif g.src.get(u) != u or g.tgt.get(u) != u:
            out["units"].append(f"unit {u!r} must be its own source and target")
    for p in g.arrows:
        for name, table in (("src", g.src), ("tgt", g.tgt)):
            if table.get(p) not in g.units:
                out["structure_maps"].append(f"{name}({p!r}) is not a unit")
        if g.inv.get(p) not in arrows:
            out["structure_maps"].append(f"inverse missing for arrow {p!r}")

    for (p, q), r in g.compose.items():
        if p not in arrows or q not in arrows or r not in arrows:
            out["compose_domain"].append(f"unresolved arrow in compose entry {p},{q} -> {r}")
        elif not g.composable(p, q):
            out["compose_domain"].append(f"non-composable pair in compose table: {p},{q}")

    for p, q in g.composable_pairs():
        r = g.compose.get((p, q))
        if r is None:
            out["compose_total"].append(f"compose not total on composable pair {p},{q}")
        elif r in arrows and (g.tgt.get(r) != g.tgt.get(p) or g.src.get(r) != g.src.get(q)):
            out["compose_range"].append(f"{p},{q} -> {r} has wrong source or target")

    def mul(p: str, q: str) -> str | None:
        return g.compose.get((p, q))

    for p, q in g.composable_pairs():
        pq = mul(p, q)
        if pq is None:
            continue
        for r in g.arrows:
            if not g.composable(q, r):
                continue
            qr = mul(q, r)
            left = mul(pq, r)
            right = mul(p, qr) if qr is not None else None
            if left is None or right is None or left != right:
                out["associativity"].append(f"({p}{q}){r} != {p}({q}{r})")

    for p in g.arrows:
        t, s = g.tgt.get(p), g.src.get(p)
        if t in arrows and mul(t, p) != p:
            out["unit_laws"].append(f"tgt({p}) is not a left identity for {p}")
        if s in arrows and mul(p, s) != p:
            out["unit_laws"].append(f"src({p}) is not a right identity for {p}")
        ip = g.inv.get(p)
        if ip not in arrows:
            continue
        if mul(p, ip) != t:
            out["inverse_laws"].append(f"{p}·inv({p}) is not tgt({p})")
        if mul(ip, p) != s:
            out["inverse_laws"].append(f"inv({p})·{p} is not src({p})")
        if g.inv.get(ip) != p:
            out["inverse_laws"].append(f"inv is not involutive at {p}")
    return out


def validate_groupoid(g: FiniteGroupoid) -> CheckReport:
    """Exhaustively verify the groupoid axioms; each entry counts violations."""
    report = CheckReport(label="groupoid")
    for axiom, problems in groupoid_violations(g).items():
        detail = "; ".join(problems[:3]) if problems else None
        report.record(f"groupoid.{axiom}.1", f"groupoid axiom: {axiom.replace('_', ' ')}", float(len(problems)), 0.0, detail)
    return report


def groupoid_errors(g: FiniteGroupoid) -> list[str]:
    return [msg for problems in groupoid_violations(g).values() for msg in problems]


def pair_groupoid(n: int) -> FiniteGroupoid:
    """Pair groupoid on {1..n}: arrows (i,j) with tgt i, src j and (i,j)(j,k) = (i,k)."""
    if n < 1:
        raise ConfigError(f"pair groupoid needs n >= 1, got {n}")

    def name(i: int, j: int) -> str:
        return f"p{i}_{j}"

    idx = range(1, n + 1)
    arrows = [name(i, j) for i in idx for j in idx]
    units = [name(i, i) for i in idx]
    src = {name(i, j): name(j, j) for i in idx for j in idx}
    tgt = {name(i, j): name(i, i) for i in idx for j in idx}
    inv = {name(i, j): name(j, i) for i in idx for j in idx}
    compose = {(name(i, j), name(j, k)): name(i, k) for i in idx for j in idx for k in idx}
    return FiniteGroupoid(tuple(arrows), tuple(units), src, tgt, inv, compose)


def _check_group_table(table: Sequence[Sequence[int]]) -> int:
    order = len(table)
    if order == 0 or any(len(row) != order for row in table):
        raise ConfigError("group table must be a non-empty square table")
    if any(not 0 <= v < order for row in table for v in row):
        raise ConfigError("group table entries must index elements")
    for a, b, c in itertools.product(range(order), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ConfigError(f"group table is not associative at ({a},{b},{c})")
    identities = [e for e in range(order) if all(table[e][g] == g == table[g][e] for g in range(order))]
    if not identities:
        raise ConfigError("group table has no identity")
    e = identities[0]
    for g in range(order):
        if not any(table[g][h] == e == table[h][g] for h in range(order)):
            raise ConfigError(f"group table: element {g} has no inverse")
    return e


def group_groupoid(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroupoid:
    """One-unit groupoid of a group given by its multiplication table.

    Raises:
        ConfigError: If the table is not a group
    """
    e = _check_group_table(table)
    order = len(table)
    names = list(names) if names is not None else [f"g{i}" for i in range(order)]
    if len(set(names)) != order:
        raise ConfigError("group element names must be distinct")
    unit = names[e]
    inverse = {names[g]: names[h] for g in range(order) for h in range(order) if table[g][h] == e}
    return FiniteGroupoid(
        arrows=tuple(names),
        units=(unit,),
        src={p: unit for p in names},
        tgt={p: unit for p in names},
        inv=inverse,
        compose={(names[a], names[b]): names[table[a][b]] for a in range(order) for b in range(order)},
    )


def cyclic_table(n: int) -> list[list[int]]:
    if n < 1:
        raise ConfigError(f"cyclic group order must be >= 1, got {n}")
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_table(k: int) -> tuple[list[list[int]], list[str]]:
    """Multiplication table of S_k with (στ)(x) = σ(τ(x)); identity first."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[x]] for x in range(k))] for t in perms] for s in perms]
    names = ["s" + "".join(str(v) for v in p) for p in perms]
    return table, names


def named_group(name: str) -> FiniteGroupoid:
    """Group groupoid for a table name: 'z<n>' or 's<k>'."""
    key = name.strip().lower()
    if len(key) >= 2 and key[0] in "zs" and key[1:].isdigit():
        order = int(key[1:])
        if key[0] == "z":
            return group_groupoid(cyclic_table(order), [f"z{i}" for i in range(order)])
        if order > 4:
            raise ConfigError(f"symmetric group {key} is too large")
        table, names = symmetric_table(order)
        return group_groupoid(table, names)
    raise ConfigError(f"unknown group table {name!r}; expected z<n> or s<k>")


def disjoint_union(g1: FiniteGroupoid, g2: FiniteGroupoid, tags: tuple[str, str] = ("a", "b")) -> FiniteGroupoid:
    """Disjoint union with arrow ids prefixed by `<tag>.`."""
    parts = list(zip(tags, (g1, g2)))

    def rename(tag: str, p: str) -> str:
        return f"{tag}.{p}"

    arrows, units = [], []
    src, tgt, inv, compose = {}, {}, {}, {}
    for tag, g in parts:
        arrows.extend(rename(tag, p) for p in g.arrows)
        units.extend(rename(tag, u) for u in g.units)
        src.update({rename(tag, p): rename(tag, u) for p, u in g.src.items()})
        tgt.update({rename(tag, p): rename(tag, u) for p, u in g.tgt.items()})
        inv.update({rename(tag, p): rename(tag, q) for p, q in g.inv.items()})
        compose.update(
            {(rename(tag, p), rename(tag, q)): rename(tag, r) for (p, q), r in g.compose.items()}
        )
    return FiniteGroupoid(tuple(arrows), tuple(units), src, tgt, inv, compose)


def union_weights(w1: HaarWeights, w2: HaarWeights, tags: tuple[str, str] = ("a", "b")) -> HaarWeights:
    m, n = {}, {}
    for tag, w in zip(tags, (w1, w2)):
        m.update({f"{tag}.{u}": v for u, v in w.m.items()})
        n.update({f"{tag}.{u}": v for u, v in w.n.items()})
    return HaarWeights(m, n)
