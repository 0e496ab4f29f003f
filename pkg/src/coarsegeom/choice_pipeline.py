"""Recovering a choice of one element per member set from coarse data.

Given a quasi-isometry from a finite tree onto the doubled-edge graph of a
family, the pipeline prunes the tree, locates a root vertex mapping near
the base, reads off the frontier of vertices at tree distance exactly 2K
from the root, and decodes from each frontier image which element its arm
singles out.  With the constant at least 4 and the graph deep enough the
decoded elements form a transversal of the family: one element per set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .coarse_maps import QuasiMap, restrict_map, verify_quasi_isometry
from .errors import (
    ArmCollision,
    ConstantTooSmall,
    DepthError,
    GraphMismatch,
    LabelError,
    NotQuasiIsometry,
    UnknownElement,
)
from .gamma_spaces import (
    GammaZeroGraph,
    build_gamma1,
    classify_point,
    gamma1_vertex_id,
)
from .metric_graph import HALF, Interior, Vertex, point_to_vertex_distance
from .tree_ops import assert_tree, prune_k


def pruning_rounds(n: int) -> int:
    """How many leaf-pruning rounds the extraction uses: K = 7 n^2."""
    return 7 * n * n


def required_gamma0_depth(n: int) -> int:
    """Smallest truncation depth the extraction is guaranteed to work at."""
    k = pruning_rounds(n)
    return 2 * k * n + 2 * n * n + 4 * n


@dataclass(frozen=True)
class ChoiceCertificate:
    constant: int
    rounds: int
    root: int
    frontier: tuple  # vertex ids at tree distance exactly 2K from the root
    arm_assignment: tuple  # (set name, frontier vertex) pairs, family order
    h_values: tuple  # (frontier vertex, element) pairs, frontier order
    transversal: tuple  # one element name per set, family order
    verified: bool

    def choice(self):
        return {name: elem
                for (name, _), elem in zip(self.arm_assignment, self.transversal)}


def _half_vertex_candidates(tree, p):
    if isinstance(p, Vertex):
        return [p.id]
    e = tree.edge(p.edge)
    out = []
    if p.offset * e.length <= HALF:
        out.append(e.u)
    if (1 - p.offset) * e.length <= HALF:
        out.append(e.v)
    return out


def _element_of_image(g0, img):
    """The element a deep arm point singles out: a vertex names itself, an
    interior point names the endpoint its edge is labeled with."""
    if isinstance(img, Vertex):
        return g0.info(img.id)[0]
    e = g0.graph.edge(img.edge)
    if e.u == 0 or e.v == 0:
        raise LabelError("frontier image sits on a base edge")
    if e.label is None:
        raise LabelError(f"edge {e.id} carries no endpoint label")
    return g0.info(e.label)[0]


def extract_choice(m: QuasiMap, g0: GammaZeroGraph, n: int) -> ChoiceCertificate:
    """Run the full extraction and certify the resulting transversal.

    Preconditions are checked in a fixed order: the constant (>= 4), the
    domain being a tree, the target graph, the truncation depth, then a
    vertex-exhaustive check that m really is an n-quasi-isometry.
    """
    n = int(n)
    if n < 4:
        raise ConstantTooSmall(f"extraction needs a constant >= 4, got {n}")
    assert_tree(m.source)
    if not m.target.same_structure(g0.graph):
        raise GraphMismatch("map target is not the given doubled-edge graph")
    need = required_gamma0_depth(n)
    if g0.depth < need:
        raise DepthError(
            f"truncation depth {g0.depth} is below the required {need}"
        )
    cert = verify_quasi_isometry(m, n, mode="vertex-exhaustive")
    if not cert.accepted:
        raise NotQuasiIsometry(f"map fails the constant-{n} check: "
                               f"{cert.violations[0]}")
    k = pruning_rounds(n)
    pruned, _trace = prune_k(m.source, k)
    if pruned.n_vertices == 0:
        raise DepthError(f"{k} pruning rounds emptied the domain tree")
    r = restrict_map(m, pruned)
    brow = g0.base_row()

    near = set()
    for w, img in r.assignments:
        if point_to_vertex_distance(g0.graph, img, brow) <= n:
            near.update(_half_vertex_candidates(pruned, w))
    if not near:
        raise DepthError("no surviving domain point maps within the constant "
                         "of the base")
    root = min(near)
    if point_to_vertex_distance(g0.graph, r.image_of(Vertex(root)), brow) > 3 * n:
        raise NotQuasiIsometry(
            "root image strays beyond three constants from the base, which "
            f"an accepted constant-{n} certificate rules out"
        )

    row = pruned.vertex_row(root)
    reach = Fraction(2 * k)
    frontier = sorted(u for u in pruned.vertex_ids() if row[u] == reach)
    if not frontier:
        raise DepthError(f"no vertices at tree distance {2 * k} from the root")

    h_values = []
    owner = {}
    for u in frontier:
        img = r.image_of(Vertex(u))
        cls = classify_point(g0, img)
        if cls.is_base:
            raise LabelError(f"frontier vertex {u} maps into the base region")
        if cls.level < 10 * n:
            raise LabelError(
                f"frontier vertex {u} maps to level {cls.level}, "
                f"below the guaranteed {10 * n}"
            )
        elem = _element_of_image(g0, img)
        si = g0.family.set_index_of(elem)
        if g0.family.sets[si].name != cls.arm:
            raise LabelError(
                f"frontier vertex {u} decodes {elem!r} outside its arm"
            )
        if cls.arm in owner:
            raise ArmCollision(
                f"frontier vertices {owner[cls.arm]} and {u} both land on "
                f"arm {cls.arm!r}"
            )
        owner[cls.arm] = u
        h_values.append((u, elem))
    chosen = dict(h_values)
    assignment = []
    transversal = []
    for s in g0.family.sets:
        u = owner.get(s.name)
        if u is None:
            raise DepthError(f"no frontier vertex lands on arm {s.name!r}")
        assignment.append((s.name, u))
        transversal.append(chosen[u])
    verified = (
        cert.accepted
        and len(frontier) == len(g0.family.sets)
        and verify_transversal(transversal, g0.family)
    )
    return ChoiceCertificate(
        constant=n,
        rounds=k,
        root=root,
        frontier=tuple(frontier),
        arm_assignment=tuple(assignment),
        h_values=tuple(h_values),
        transversal=tuple(transversal),
        verified=verified,
    )


def section_map(g0: GammaZeroGraph, mode="first", seed=None, g1=None) -> QuasiMap:
    """A right inverse of the collapse: lift each quotient-tree point back
    into the doubled-edge graph by choosing one element per (set, level).

    Modes: "first" always lifts through a set's first element;
    "alternating" cycles through the elements as the level grows;
    "seeded" draws the element at every (set, level) from a seeded RNG.
    A prebuilt quotient tree may be passed as g1 so repeated sections
    share one graph object (and its distance caches).
    """
    if mode not in ("first", "alternating", "seeded"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "seeded" and seed is None:
        raise ValueError("seeded mode needs a seed")
    depth = g0.depth
    rng = random.Random(seed) if mode == "seeded" else None
    chosen = []
    for s in g0.family.sets:
        members = s.elements
        row = [None]  # level 0 is the base, no choice there
        for lev in range(1, depth + 1):
            if mode == "first":
                i = 0
            elif mode == "alternating":
                i = (lev - 1) % len(members)
            else:
                i = rng.randrange(len(members))
            row.append(members[i])
        chosen.append(row)

    if g1 is None:
        g1 = build_gamma1(g0.family, depth)
    elif not g1.same_structure(build_gamma1(g0.family, depth)):
        raise GraphMismatch("supplied quotient tree does not match the family")
    graph0 = g0.graph

    def edge_between(a, b):
        for nb, e in graph0.edges_at(a):
            if nb == b:
                return e.id
        raise LabelError(f"no edge joins {a} and {b}")

    assignments = [(Vertex(0), Vertex(0))]
    for si in range(len(g0.family.sets)):
        for lev in range(1, depth + 1):
            assignments.append((
                Vertex(gamma1_vertex_id(depth, si, lev)),
                Vertex(g0.vertex_of(chosen[si][lev], lev)),
            ))
    for e in g1.edges:
        lower, upper = min(e.u, e.v), max(e.u, e.v)  # lower level comes first
        si = (upper - 1) // depth
        lev = (upper - 1) % depth + 1
        a = 0 if lower == 0 else g0.vertex_of(chosen[si][lev - 1], lev - 1)
        b = g0.vertex_of(chosen[si][lev], lev)
        assignments.append((Interior(e.id, HALF), Interior(edge_between(a, b), HALF)))
    return QuasiMap(g1, graph0, assignments, asserted_constant=2)


def verify_transversal(a, family) -> bool:
    """True iff the given element names hit every member set exactly once."""
    names = set(a)
    universe = set(family.all_elements())
    for x in sorted(names):
        if x not in universe:
            raise UnknownElement(f"unknown element {x!r}")
    return all(sum(e in names for e in s.elements) == 1 for s in family.sets)
