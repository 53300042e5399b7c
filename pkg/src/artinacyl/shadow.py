"""Finite coset cube complexes over the Coxeter quotient.

Vertices are cosets g W_U where U ranges over the clique subsets of the
defining graph (optionally only those containing the clique factor V0),
with g recorded by the minimal-length coset representative.  Edges join
cosets whose subsets differ by a single letter and nest; cubes are
coset intervals.  Hyperplane classes are square-parallelism classes of
edges, each carrying the letter of its dual edges.

These complexes substitute Coxeter-quotient cosets for Artin-group
cosets, so every result here is a statement about the quotient shadow
only.  When the quotient is infinite, a finite ball is built and every
check reports "inconclusive" beyond the complete radius instead of
extrapolating.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import words as _words
from .errors import ResourceLimitError
from .graphs import DefiningGraph, INF
from .reflection import GroupTable, enumerate_elements

DELTA_CAP = 4096


@dataclass(frozen=True)
class DeltaSets:
    all_cliques: tuple   # sorted tuples, includes ()
    reduced: tuple       # members containing the clique factor


def delta_sets(g: DefiningGraph, clique_factor=()) -> DeltaSets:
    """All clique subsets of the graph, plus the reduced family."""
    verts = g.vertices
    cliques = [()]
    for v in verts:
        new = []
        for c in cliques:
            if all(g.label(u, v) != INF for u in c):
                new.append(c + (v,))
        cliques.extend(new)
        if len(cliques) > DELTA_CAP:
            raise ResourceLimitError(
                f"clique-subset count exceeds cap {DELTA_CAP}")
    cliques.sort(key=lambda c: (len(c), c))
    v0 = set(clique_factor)
    reduced = tuple(c for c in cliques if v0 <= set(c))
    return DeltaSets(tuple(cliques), reduced)


@dataclass(frozen=True)
class ShadowComplex:
    vertices: tuple            # (rep word tuple, U tuple), sorted
    edges: tuple               # (lower idx, upper idx, letter), sorted
    cubes: tuple               # (min-vertex idx, letters tuple, corner idxs)
    hyperplane_classes: tuple  # (type letter, frozenset of edge ids)
    ball_complete_radius: int | None   # None = whole complex built

    @property
    def complete(self) -> bool:
        return self.ball_complete_radius is None

    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def class_of_edge(self) -> dict:
        out = {}
        for ci, (_, eids) in enumerate(self.hyperplane_classes):
            for e in eids:
                out[e] = ci
        return out

    def to_json(self) -> dict:
        return {
            "vertices": [{"rep": list(w), "subset": list(u)}
                         for w, u in self.vertices],
            "cubes": [{"min": m, "letters": list(ls)}
                      for m, ls, _ in self.cubes],
            "edges": [{"lower": a, "upper": b, "letter": x}
                      for a, b, x in self.edges],
            "hyperplane_classes": [
                {"type": t, "edges": sorted(es)}
                for t, es in self.hyperplane_classes],
            "ball_complete_radius": self.ball_complete_radius,
        }

    def to_dot(self) -> str:
        palette = ["red", "blue", "green", "orange", "purple", "brown",
                   "cyan", "magenta", "gray", "olive"]
        cls = self.class_of_edge()
        lines = ["graph {"]
        for i, (w, u) in enumerate(self.vertices):
            label = "".join(w) or "1"
            lines.append(f'  v{i} [label="{label}|{"".join(u)}"];')
        for e, (a, b, x) in enumerate(self.edges):
            color = palette[cls[e] % len(palette)]
            lines.append(f'  v{a} -- v{b} [label="{x}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class _FullCosets:
    """Minimal coset representatives inside a fully enumerated group."""

    def __init__(self, table: GroupTable):
        self.t = table

    def elements(self):
        return range(self.t.order)

    def minrep(self, e, U):
        t = self.t
        while True:
            for u in U:
                f = t.right[e][u]
                if t.length(f) < t.length(e):
                    e = f
                    break
            else:
                return e

    def word(self, e):
        return self.t.words[e]


class _BallCosets:
    """Minimal coset representatives via greedy descent on reduced words."""

    def __init__(self, g: DefiningGraph, elements):
        self.g = g
        self._set = set(elements)
        self._elems = elements

    def elements(self):
        return self._elems

    def minrep(self, w, U):
        g = self.g
        cur = _words.reduce_word(g, w)
        while True:
            for u in U:
                cand = _words.reduce_word(g, cur + (u,))
                if len(cand) < len(cur):
                    cur = cand
                    break
            else:
                return cur

    def word(self, w):
        return w


def build_shadow(g: DefiningGraph, delta, reduced: bool = False,
                 cap: int | None = None,
                 radius: int | None = None) -> ShadowComplex:
    """Assemble the coset cube complex over the chosen clique family.

    `delta` is a DeltaSets value; `reduced` selects the family whose
    members contain the clique factor.  `cap` bounds the number of
    group elements enumerated; if the quotient does not saturate below
    the cap, a ball is built and its complete radius recorded.  An
    explicit `radius` truncates the ball further.
    """
    cap = _words.default_cap() if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    family = delta.reduced if reduced else delta.all_cliques
    try:
        table = GroupTable(g, cap)
        if radius is not None and max(map(len, table.words)) > radius:
            elems = [w for w in table.words if len(w) <= radius]
            cosets = _BallCosets(g, elems)
        else:
            cosets = _FullCosets(table)
            radius = None
    except ResourceLimitError:
        elems, _ = enumerate_elements(g, cap)
        complete = max(len(w) for w in elems) - 1
        radius = complete if radius is None else min(radius, complete)
        elems = [w for w in elems if len(w) <= radius]
        cosets = _BallCosets(g, elems)

    vert_index = {}
    vertices = []
    for U in family:
        seen = set()
        for e in cosets.elements():
            m = cosets.minrep(e, U)
            if m in seen:
                continue
            seen.add(m)
            key = (cosets.word(m), U)
            if key not in vert_index:
                vert_index[key] = len(vertices)
                vertices.append(key)
    order = sorted(range(len(vertices)),
                   key=lambda i: (vertices[i][1], vertices[i][0]))
    remap = {old: new for new, old in enumerate(order)}
    vertices = [vertices[i] for i in order]
    vert_index = {v: i for i, v in enumerate(vertices)}

    fam_set = set(family)
    verts_list = list(g.vertices)

    def upper_of(word, U, xs):
        """Vertex key of the coset of `word` for U extended by xs."""
        U2 = tuple(sorted(set(U) | set(xs)))
        if U2 not in fam_set:
            return None
        if radius is None:
            e = cosets.t.index_of_word(word)
            m = cosets.minrep(e, U2)
            return (cosets.word(m), U2)
        return (cosets.minrep(word, U2), U2)

    edges = set()
    for (word, U) in vertices:
        for x in verts_list:
            if x in U:
                continue
            up = upper_of(word, U, (x,))
            if up is None or up not in vert_index:
                continue
            edges.add((vert_index[(word, U)], vert_index[up], x))
    edges = tuple(sorted(edges))
    edge_index = {e: i for i, e in enumerate(edges)}

    # cubes: one per (min vertex, extension letter set) whose corner
    # cosets all exist; corners indexed by letter subset
    cubes = []
    for vi, (word, U) in enumerate(vertices):
        ext = [x for x in verts_list if x not in U
               and tuple(sorted(set(U) | {x})) in fam_set]
        for size in range(1, len(ext) + 1):
            for combo in _combinations(ext, size):
                corners = _cube_corners(word, U, combo, upper_of, vert_index)
                if corners is None:
                    continue
                if corners[0] != vi:
                    continue  # min corner must be this vertex
                cubes.append((vi, tuple(combo), tuple(corners)))
    cubes = tuple(sorted(cubes))

    # hyperplane classes: union-find over square-parallel edges
    parent = list(range(len(edges)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for vi, letters, corners in cubes:
        if len(letters) != 2:
            continue
        a, b = letters
        # corners indexed by letter bitmask: 0, a, b, ab; edge keys run
        # from the smaller subset to the larger one
        c0, ca, cb, cab = corners
        union(edge_index[(c0, ca, a)], edge_index[(cb, cab, a)])
        union(edge_index[(c0, cb, b)], edge_index[(ca, cab, b)])

    groups = {}
    for e in range(len(edges)):
        groups.setdefault(find(e), set()).add(e)
    classes = tuple(sorted((edges[min(es)][2], frozenset(es))
                           for es in groups.values()))
    return ShadowComplex(tuple(vertices), edges, cubes, classes, radius)


def _combinations(items, size):
    import itertools
    return itertools.combinations(items, size)


def _cube_corners(word, U, letters, upper_of, vert_index):
    corners = []
    for mask in range(1 << len(letters)):
        xs = tuple(x for b, x in enumerate(letters) if mask >> b & 1)
        key = upper_of(word, U, xs) if xs else (word, U)
        if key is None or key not in vert_index:
            return None
        corners.append(vert_index[key])
    return corners


def _eligible_vertices(c: ShadowComplex, g: DefiningGraph):
    """Vertices whose full link is guaranteed inside the built ball."""
    if c.complete:
        return list(range(len(c.vertices)))
    # conservative: a down-neighbour of (w, U) has a representative no
    # longer than len(w) plus the diameter of the finite group on U'
    from .kernel import count_ball
    diam = {}
    for _, U in c.vertices:
        for x in g.vertices:
            U2 = tuple(sorted(set(U) | {x}))
            if U2 in diam or x in U:
                continue
            size, sat = count_ball(g.induced(U2), 50_000)
            diam[U2] = size if sat else None  # crude length bound
    out = []
    for i, (w, U) in enumerate(c.vertices):
        bounds = [diam.get(tuple(sorted(set(U) | {x})))
                  for x in g.vertices if x not in U]
        bounds = [b for b in bounds if b is not None] or [None]
        if None in bounds:
            continue
        if len(w) + max(bounds) + 1 <= c.ball_complete_radius:
            out.append(i)
    return out


def _link(c: ShadowComplex, vi: int):
    """(incident edge ids, joined pairs, corner simplices) at a vertex."""
    inc = [e for e, (a, b, _) in enumerate(c.edges) if vi in (a, b)]
    pairs = set()
    simplices = set()
    edge_index = {e: i for i, e in enumerate(c.edges)}
    for mini, letters, corners in c.cubes:
        if vi not in corners:
            continue
        k = len(letters)
        for pos in (p for p in range(1 << k) if corners[p] == vi):
            # edges of the cube at this corner: flip each letter bit;
            # the corner with the bit cleared is the lower endpoint
            ids = []
            for b in range(k):
                lo = corners[pos & ~(1 << b)]
                hi = corners[pos | (1 << b)]
                ids.append(edge_index[(lo, hi, letters[b])])
            simplices.add(frozenset(ids))
            if k == 2:
                pairs.add(frozenset(ids))
    return inc, pairs, simplices


def _max_cliques(nodes, pairs):
    adj = {v: set() for v in nodes}
    for p in pairs:
        a, b = tuple(p)
        adj[a].add(b)
        adj[b].add(a)
    out = []

    def extend(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        for v in sorted(p):
            extend(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    extend(set(), set(nodes), set())
    return out


def links_full_check(c: ShadowComplex, sub: ShadowComplex,
                     g: DefiningGraph) -> dict:
    """Flagness of ambient links; fullness of the subcomplex links.

    The subcomplex's vertices must be a subset of the ambient ones.
    Returns a report dict; "inconclusive" when no vertex's link is
    known to be complete.
    """
    amb_index = c.vertex_index()
    sub_keys = set(sub.vertices)
    missing = sub_keys - set(c.vertices)
    if missing:
        raise ValueError("subcomplex has vertices outside the complex")
    eligible = _eligible_vertices(c, g)
    if not eligible:
        return {"scope": "shadow", "status": "inconclusive",
                "reason": "no vertex has a provably complete link",
                "checked_vertices": 0}

    sub_edge_keys = {(sub.vertices[a], sub.vertices[b], x)
                     for a, b, x in sub.edges}
    sub_pair_sets = {}
    for mini, letters, corners in sub.cubes:
        if len(letters) != 2:
            continue
        for pos in range(4):
            key = sub.vertices[corners[pos]]
            ids = []
            for b in range(2):
                lo = sub.vertices[corners[pos & ~(1 << b)]]
                hi = sub.vertices[corners[pos | (1 << b)]]
                ids.append((lo, hi, letters[b]))
            sub_pair_sets.setdefault(key, set()).add(frozenset(ids))

    flag_ok, full_ok = True, True
    flag_bad, full_bad = None, None
    for vi in eligible:
        inc, pairs, simplices = _link(c, vi)
        for clique in _max_cliques(inc, pairs):
            if len(clique) >= 2 and clique not in simplices:
                flag_ok, flag_bad = False, c.vertices[vi]
                break
        key = c.vertices[vi]
        if key in sub_keys:
            # fullness: ambient square at the corner whose two edges both
            # lie in the subcomplex must be a subcomplex square
            edge_of = {e: c.edges[e] for e in inc}
            for p in pairs:
                e1, e2 = tuple(p)
                ks = []
                for e in (e1, e2):
                    a, b, x = edge_of[e]
                    ks.append((c.vertices[min(a, b)] if False else
                               c.vertices[a], c.vertices[b], x))
                in_sub = all((ka, kb, x) in sub_edge_keys
                             for ka, kb, x in ks)
                if not in_sub:
                    continue
                want = frozenset(ks)
                if want not in sub_pair_sets.get(key, set()):
                    full_ok, full_bad = False, key
                    break
    return {
        "scope": "shadow",
        "status": "pass" if (flag_ok and full_ok) else "fail",
        "checked_vertices": len(eligible),
        "links_flag": flag_ok,
        "links_flag_failure_at": None if flag_ok else list(map(list, flag_bad)),
        "sub_links_full": full_ok,
        "sub_links_full_failure_at": (None if full_ok
                                      else list(map(list, full_bad))),
    }


def separation_check(c: ShadowComplex, class_id: int,
                     other_class_id: int | None = None) -> dict:
    """Two-sidedness of one class; crossing pattern against another.

    Component counting removes the class's dual edges from the
    1-skeleton; it is exact only on a complete complex and reported
    inconclusive otherwise.  Crossing = the two classes contribute the
    two parallel pairs of one square.
    """
    cls = c.class_of_edge()
    removed = {e for e, ci in cls.items() if ci == class_id}
    report = {"scope": "shadow", "class": class_id,
              "type": c.hyperplane_classes[class_id][0]}
    if c.complete:
        adj = {i: set() for i in range(len(c.vertices))}
        for e, (a, b, _) in enumerate(c.edges):
            if e in removed:
                continue
            adj[a].add(b)
            adj[b].add(a)
        comps = 0
        left = set(adj)
        while left:
            comps += 1
            start = min(left)
            queue = deque([start])
            left.discard(start)
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y in left:
                        left.discard(y)
                        queue.append(y)
        report["components"] = comps
    else:
        report["components"] = None
        report["components_status"] = "inconclusive: incomplete ball"

    if other_class_id is not None:
        report["other_class"] = other_class_id
        report["crosses"] = classes_cross(c, class_id, other_class_id)
    return report


def classes_cross(c: ShadowComplex, ci: int, cj: int) -> bool:
    """Do the two hyperplane classes share a square?"""
    cls = c.class_of_edge()
    edge_index = {e: i for i, e in enumerate(c.edges)}
    for mini, letters, corners in c.cubes:
        if len(letters) != 2:
            continue
        c0, ca, cb, cab = corners
        a, b = letters
        ea = edge_index[(c0, ca, a)]
        eb = edge_index[(c0, cb, b)]
        if {cls[ea], cls[eb]} == {ci, cj}:
            return True
    return False
