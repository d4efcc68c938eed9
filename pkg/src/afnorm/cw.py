"""
Finite 2-complexes given combinatorially, and the norm of a relative
1-cohomology class computed as

    min over cocycles k representing s of  sum_e (n_e/2 - 1) |k(e)|,

where e runs over edges off the boundary and n_e counts the 2-cells at e
with multiplicity.  Cocycles representing one class differ by coboundaries
of vertex potentials vanishing on the boundary, so the minimum is an L1
problem over integer potentials.  Its constraint matrix (identity columns
beside a signed incidence matrix) is totally unimodular, so the exact
simplex optimum is attained at integer potentials.

JSON format::

    {"vertices": ["v"],
     "edges": [{"id": "x", "tail": "v", "head": "v"}, ...],
     "faces": [{"id": "r1", "walk": [["x", 1], ["y", -1], ...]}, ...],
     "boundary": {"vertices": [], "edges": []}}

Cocycles are ``{edge id: integer}`` maps.  Ids are compared as strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .lp import solve_lp
from .presentation import Presentation


class ComplexError(ValueError):
    pass


class OpenWalk(ComplexError):
    def __init__(self, face):
        self.face = face
        super().__init__(f"attaching walk of face {face!r} is not closed")


class UnderusedEdge(ComplexError):
    def __init__(self, edge, count):
        self.edge = edge
        self.count = count
        super().__init__(f"edge {edge!r} lies on {count} 2-cell(s) and is not declared boundary")


class BoundaryInconsistency(ComplexError):
    pass


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class Face:
    id: str
    walk: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class CW2Complex:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    boundary_vertices: frozenset = field(default_factory=frozenset)
    boundary_edges: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_dict(cls, data: dict) -> CW2Complex:
        try:
            vertices = tuple(str(v) for v in data["vertices"])
            edges = tuple(Edge(str(e["id"]), str(e["tail"]), str(e["head"])) for e in data["edges"])
            faces = tuple(
                Face(str(f["id"]), tuple((str(step[0]), int(step[1])) for step in f["walk"]))
                for f in data.get("faces", [])
            )
            boundary = data.get("boundary", {}) or {}
            bv = frozenset(str(v) for v in boundary.get("vertices", []))
            be = frozenset(str(e) for e in boundary.get("edges", []))
        except (KeyError, TypeError, IndexError) as exc:
            raise ComplexError(f"malformed complex document: {exc}") from exc
        return cls(vertices, edges, faces, bv, be)

    @classmethod
    def from_json(cls, text: str) -> CW2Complex:
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in self.edges],
            "faces": [{"id": f.id, "walk": [[e, s] for e, s in f.walk]} for f in self.faces],
            "boundary": {
                "vertices": sorted(self.boundary_vertices),
                "edges": sorted(self.boundary_edges),
            },
        }

    @property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def adjacency_counts(self) -> dict[str, int]:
        counts = {e.id: 0 for e in self.edges}
        for f in self.faces:
            for e, _ in f.walk:
                counts[e] += 1
        return counts

    def interior_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.id not in self.boundary_edges]

    def free_vertices(self) -> list[str]:
        return [v for v in self.vertices if v not in self.boundary_vertices]


@dataclass
class Diagnostics:
    adjacency: dict[str, int]
    weights: dict[str, Fraction]
    euler_1_skeleton: int
    euler: int


def validate_complex(c: CW2Complex) -> Diagnostics:
    """Check the combinatorial invariants; return adjacency counts and weights n_e/2 - 1."""
    vset = set(c.vertices)
    if len(vset) != len(c.vertices):
        raise ComplexError("duplicate vertex ids")
    emap = {}
    for e in c.edges:
        if e.id in emap:
            raise ComplexError(f"duplicate edge id {e.id!r}")
        if e.tail not in vset or e.head not in vset:
            raise ComplexError(f"edge {e.id!r} has an unknown endpoint")
        emap[e.id] = e
    for f in c.faces:
        steps = []
        for eid, sign in f.walk:
            if eid not in emap:
                raise ComplexError(f"face {f.id!r} uses unknown edge {eid!r}")
            if sign not in (1, -1):
                raise ComplexError(f"face {f.id!r}: orientation must be +1 or -1")
            e = emap[eid]
            steps.append((e.tail, e.head) if sign == 1 else (e.head, e.tail))
        for (_, end), (start, _) in zip(steps, steps[1:] + steps[:1]):
            if end != start:
                raise OpenWalk(f.id)
    if not c.boundary_vertices <= vset:
        raise BoundaryInconsistency("boundary lists an unknown vertex")
    if not c.boundary_edges <= set(emap):
        raise BoundaryInconsistency("boundary lists an unknown edge")
    for eid in c.boundary_edges:
        e = emap[eid]
        if e.tail not in c.boundary_vertices or e.head not in c.boundary_vertices:
            raise BoundaryInconsistency(f"boundary edge {eid!r} has an endpoint off the boundary")
    counts = c.adjacency_counts()
    for e in c.interior_edges():
        if counts[e.id] < 2:
            raise UnderusedEdge(e.id, counts[e.id])
    weights = {e.id: Fraction(counts[e.id], 2) - 1 for e in c.interior_edges()}
    chi1 = len(c.vertices) - len(c.edges)
    return Diagnostics(counts, weights, chi1, chi1 + len(c.faces))


def _cocycle_dict(c: CW2Complex, k) -> dict[str, int]:
    k = {str(e): int(v) for e, v in dict(k).items()}
    unknown = set(k) - {e.id for e in c.edges}
    if unknown:
        raise ComplexError(f"cocycle names unknown edges: {sorted(unknown)}")
    return {e.id: k.get(e.id, 0) for e in c.edges}


def is_cocycle(c: CW2Complex, k) -> bool:
    """Signed sums along every attaching walk vanish and boundary edges carry 0."""
    k = _cocycle_dict(c, k)
    if any(k[e] for e in c.boundary_edges):
        return False
    return all(sum(s * k[e] for e, s in f.walk) == 0 for f in c.faces)


def cocycle_norm(c: CW2Complex, k) -> Fraction:
    """|k| = sum over interior edges of (n_e/2 - 1)|k(e)|."""
    w = validate_complex(c).weights
    k = _cocycle_dict(c, k)
    return sum((w[e] * abs(k[e]) for e in w), Fraction(0))


def coboundary(c: CW2Complex, potential) -> dict[str, int]:
    return {e.id: potential.get(e.head, 0) - potential.get(e.tail, 0) for e in c.edges}


def minimize_norm(c: CW2Complex, k0) -> tuple[Fraction, dict[str, int]]:
    """
    Minimum of |k0 + delta(c)| over integer potentials c vanishing on the
    boundary.  Returns the value and an integral minimizing cocycle.

    Variables per interior edge: a_e, b_e >= 0 with a_e - b_e = k0(e) + c(head) - c(tail);
    per free vertex: p_v, q_v >= 0 with c(v) = p_v - q_v.  Weights are doubled
    so the objective has integer coefficients.
    """
    diag = validate_complex(c)
    k0 = _cocycle_dict(c, k0)
    if not is_cocycle(c, k0):
        raise ValueError("k0 is not a relative cocycle")
    edges = c.interior_edges()
    free = c.free_vertices()
    vpos = {v: i for i, v in enumerate(free)}
    ne, nv = len(edges), len(free)
    ncols = 2 * ne + 2 * nv
    cost = [0] * ncols
    A, b, basis = [], [], []
    for i, e in enumerate(edges):
        w2 = diag.adjacency[e.id] - 2
        cost[2 * i] = cost[2 * i + 1] = w2
        row = [0] * ncols
        row[2 * i], row[2 * i + 1] = 1, -1
        for v, sign in ((e.head, -1), (e.tail, 1)):
            if v in vpos:
                j = 2 * ne + 2 * vpos[v]
                row[j] += sign
                row[j + 1] -= sign
        A.append(row)
        b.append(k0[e.id])
        basis.append(2 * i if k0[e.id] >= 0 else 2 * i + 1)
    if not edges:
        return Fraction(0), dict(k0)
    res = solve_lp(cost, A, b, basis=basis)
    potential = {}
    for v, i in vpos.items():
        val = res.x[2 * ne + 2 * i] - res.x[2 * ne + 2 * i + 1]
        if val.denominator != 1:
            raise ArithmeticError("non-integral optimal vertex; incidence matrix should be unimodular")
        potential[v] = int(val)
    d = coboundary(c, potential)
    k = {eid: k0[eid] + d[eid] for eid in k0}
    return res.value / 2, k


def _components_without_boundary(c: CW2Complex) -> list[list[str]]:
    parent = {v: v for v in c.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in c.edges:
        parent[find(e.tail)] = find(e.head)
    groups: dict[str, list[str]] = {}
    for v in c.vertices:
        groups.setdefault(find(v), []).append(v)
    return [g for g in groups.values() if not any(v in c.boundary_vertices for v in g)]


def brute_force_min(c: CW2Complex, k0, box: int, max_points: int = 5_000_000) -> Fraction:
    """
    Exhaustive minimum of |k0 + delta(c)| over potentials with |c(v)| <= box.
    One vertex per boundary-free component is pinned to 0 (adding a constant
    on such a component changes nothing).  Test oracle only.
    """
    import numpy as np

    diag = validate_complex(c)
    k0 = _cocycle_dict(c, k0)
    pinned = {g[0] for g in _components_without_boundary(c)}
    free = [v for v in c.free_vertices() if v not in pinned]
    if len(free) > 10 or (2 * box + 1) ** len(free) > max_points:
        raise InstanceTooLarge(f"{len(free)} free vertices with box {box}")
    edges = c.interior_edges()
    if not edges:
        return Fraction(0)
    if not free:
        return sum((diag.weights[e.id] * abs(k0[e.id]) for e in edges), Fraction(0))
    grid = np.array(list(product(range(-box, box + 1), repeat=len(free))), dtype=np.int64)
    col = {v: i for i, v in enumerate(free)}
    total = np.zeros(len(grid), dtype=np.int64)
    for e in edges:
        val = np.full(len(grid), k0[e.id], dtype=np.int64)
        if e.head in col:
            val += grid[:, col[e.head]]
        if e.tail in col:
            val -= grid[:, col[e.tail]]
        total += (diag.adjacency[e.id] - 2) * np.abs(val)
    return Fraction(int(total.min()), 2)


def presentation_complex(p: Presentation) -> CW2Complex:
    """One vertex, a loop per generator, a 2-cell per relator."""
    names = p.names
    edges = tuple(Edge(n, "v", "v") for n in names)
    faces = []
    for i, r in enumerate(p.relators):
        walk = []
        for g, e in r.letters:
            walk.extend([(names[g], 1 if e > 0 else -1)] * abs(e))
        faces.append(Face(f"r{i + 1}", tuple(walk)))
    return CW2Complex(("v",), edges, tuple(faces))


def load_cocycle(text: str) -> dict[str, int]:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ComplexError("cocycle document must be an object mapping edge ids to integers")
    out = {}
    for k, v in data.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise ComplexError(f"cocycle value for {k!r} must be an integer")
        out[str(k)] = v
    return out
