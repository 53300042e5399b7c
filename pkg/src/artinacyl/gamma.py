"""End-to-end synthesis of the candidate loxodromic element.

Pipeline over an irreducible non-clique defining graph with join
decomposition V0 | V1..Vk:

  1. factor-connection graph Q: nodes V1..Vk, edge (i,j) when the two
     factors are connected through V0 by pairs with label > 2;
  2. BFS spanning tree of Q rooted at the factor holding the smallest
     vertex, indices renumbered so parents precede children, plus a
     depth-first closed tour visiting every node;
  3. connecting paths between tree-adjacent factors (shortest, interior
     inside V0, every edge label > 2, shortlex tie-break);
  4. per-factor minimal closed walks on the factor complements covering
     every vertex, all stretched to the common length n = prod(n_i) and
     rotated so the walks align with the connecting-path endpoints;
  5. strata of V0 by distance to the factors, drop chains towards the
     factors, and a total order naming w_1 < ... < w_m;
  6. the letter blocks lambda_l and their twisted variants, assembled
     into gamma = gamma_flat * gamma_nat with the full prefix table.

All choices left open by the underlying construction are pinned to
deterministic rules (shortlex everywhere), so the same input always
yields a byte-identical plan.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import HypothesisError, ResourceLimitError
from .graphs import (DefiningGraph, INF, JoinDecomposition,
                     coxeter_components, derived_graphs, join_decompose)

WALK_STATE_CAP = 10**7


@dataclass(frozen=True)
class QGraph:
    nodes: tuple            # factor vertex sets, 1-based positions
    edges: frozenset        # of (i, j) with i < j, 1-based


def _check_hypotheses(g: DefiningGraph, d: JoinDecomposition):
    if not d.factors:
        raise HypothesisError("graph is a clique: no candidate element exists")
    if len(coxeter_components(g)) != 1:
        raise HypothesisError("graph is reducible")


def build_q(g: DefiningGraph, d: JoinDecomposition) -> QGraph:
    """Edge (i,j) iff some label>2 path joins V_i to V_j inside V0|Vi|Vj."""
    _check_hypotheses(g, d)
    k = len(d.factors)
    v0 = set(d.clique_factor)
    edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            allowed = v0 | set(d.factors[i]) | set(d.factors[j])
            # connectivity of the two factors through label>2 pairs
            # (infinite labels count: they only occur inside factors)
            start = set(d.factors[i])
            seen = set(start)
            queue = deque(start)
            hit = False
            while queue and not hit:
                x = queue.popleft()
                for y in allowed:
                    if y in seen:
                        continue
                    m = g.label(x, y)
                    if m == INF or m > 2:
                        seen.add(y)
                        queue.append(y)
                        if y in d.factors[j]:
                            hit = True
            if hit:
                edges.add((i + 1, j + 1))
    return QGraph(d.factors, frozenset(edges))


def spanning_tree_and_tour(q: QGraph):
    """BFS tree, monotone reindexing, and a depth-first closed tour.

    Returns (tree_edges, tour, reorder) where tree_edges use the new
    1-based indices with parent < child, tour = (i_1,...,i_{r+1}) with
    i_1 = i_{r+1} = 1, and reorder[new-1] = old position (1-based new).
    """
    k = len(q.nodes)
    adj = {i: set() for i in range(1, k + 1)}
    for i, j in q.edges:
        adj[i].add(j)
        adj[j].add(i)
    root = 1  # nodes are ordered by smallest member, so node 1 holds it
    order = [root]
    parent = {root: None}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                order.append(y)
                queue.append(y)
    if len(order) != k:
        raise HypothesisError("factor-connection graph is disconnected")
    new_of_old = {old: new + 1 for new, old in enumerate(order)}
    tree_edges = tuple(sorted(
        (new_of_old[parent[c]], new_of_old[c]) for c in order[1:]))
    children = {i: [] for i in range(1, k + 1)}
    for p, c in tree_edges:
        children[p].append(c)

    tour = []

    def visit(u):
        tour.append(u)
        for c in sorted(children[u]):
            visit(c)
            tour.append(u)

    visit(1)
    if k == 1:
        tour = [1, 1]  # degenerate single-factor tour
    return tree_edges, tuple(tour), tuple(order)


def connecting_paths(g: DefiningGraph, d: JoinDecomposition, factors,
                     tree_edges):
    """Shortest label>2 paths with interior in V0, plus their reversals.

    `factors` are the reindexed factor sets.  Returns dict
    (i,j) -> vertex tuple for both orientations of every tree edge.
    """
    v0 = sorted(d.clique_factor)
    paths = {}
    for i, j in tree_edges:
        vi, vj = factors[i - 1], factors[j - 1]
        # BFS for the shortest admissible length
        interior = set(v0)
        dist = {v: 0 for v in vi}
        queue = deque(sorted(vi))
        best = None
        while queue:
            x = queue.popleft()
            for y in sorted(interior | set(vj)):
                if y == x or y in dist:
                    continue
                m = g.label(x, y)
                if m == INF or m <= 2:
                    continue
                dist[y] = dist[x] + 1
                if y in vj:
                    best = dist[y]
                    queue.clear()
                    break
                queue.append(y)
        if best is None:
            raise AssertionError("tree edge without a connecting path")

        # shortlex-least among the shortest paths, by sorted DFS
        found = None

        def dfs(path):
            nonlocal found
            if found is not None:
                return
            x = path[-1]
            if len(path) == best + 1:
                if x in vj:
                    found = tuple(path)
                return
            pool = interior if len(path) <= best - 1 else set()
            for y in sorted(pool | set(vj)):
                if y in path:
                    continue
                m = g.label(x, y)
                if m == INF or m <= 2:
                    continue
                if y in vj and len(path) != best:
                    continue
                dfs(path + [y])
                if found is not None:
                    return

        for start in sorted(vi):
            dfs([start])
            if found is not None:
                break
        paths[(i, j)] = found
        paths[(j, i)] = tuple(reversed(found))
    return paths


def _minimal_cover_walk(g: DefiningGraph, factor):
    """Shortlex-least minimal closed walk on the factor complement
    passing through every vertex; returns (v_1,...,v_n,v_1)."""
    comp, _ = derived_graphs(g.induced(factor))
    adj = comp.adjacency()
    verts = sorted(factor)
    bit = {v: 1 << i for i, v in enumerate(verts)}
    full = (1 << len(verts)) - 1
    if len(verts) * (1 << len(verts)) * len(verts) > WALK_STATE_CAP:
        raise ResourceLimitError("covering-walk state space exceeds cap")
    best_len = None
    best_walk = None
    for start in verts:
        # f(cur, mask) = min steps from (cur, mask) to (start, full):
        # reverse BFS over states
        f = {(start, full): 0}
        queue = deque([(start, full)])
        while queue:
            cur, mask = queue.popleft()
            dd = f[(cur, mask)]
            for prev in adj[cur]:
                pmask_opts = (mask, mask & ~bit[cur])
                for pmask in pmask_opts:
                    if not pmask & bit[prev]:
                        continue
                    key = (prev, pmask)
                    if key not in f:
                        f[key] = dd + 1
                        queue.append(key)
        key0 = (start, bit[start])
        if key0 not in f:
            continue  # cannot cover and return from this start
        total = f[key0]
        if best_len is not None and total > best_len:
            continue
        # greedy shortlex-least walk of exactly `total` steps
        walk = [start]
        cur, mask, remaining = start, bit[start], total
        while remaining:
            for nb in sorted(adj[cur]):
                nmask = mask | bit[nb]
                if f.get((nb, nmask), -1) == remaining - 1:
                    walk.append(nb)
                    cur, mask, remaining = nb, nmask, remaining - 1
                    break
            else:
                raise AssertionError("walk reconstruction failed")
        assert walk[-1] == start and mask == full
        cand = tuple(walk)
        if best_len is None or total < best_len or cand < best_walk:
            best_len, best_walk = total, cand
    if best_walk is None:
        raise AssertionError("factor complement is not connected")
    return best_walk


def closed_cover_walks(g: DefiningGraph, d: JoinDecomposition, factors,
                       tree_edges, paths):
    """Common-length covering walks, rotated to meet the connecting paths.

    Returns (walks, n, align): walks[i] = (v_{i,1},...,v_{i,n+1}),
    align[(i,j)] = align[(j,i)] = l(i,j).
    """
    k = len(factors)
    base = [_minimal_cover_walk(g, f) for f in factors]
    lens = [len(w) - 1 for w in base]
    n = 1
    for ni in lens:
        n *= ni
    stretched = []
    for w, ni in zip(base, lens):
        cyc = w[:-1] * (n // ni)
        stretched.append(list(cyc))
    walks = {1: tuple(stretched[0]) + (stretched[0][0],)}
    align = {}
    parent_of = {c: p for p, c in tree_edges}
    for j in range(2, k + 1):
        i = parent_of[j]
        s_ij = paths[(i, j)][0]
        t_ij = paths[(i, j)][-1]
        wi = walks[i]
        l_ij = next(l for l in range(1, n + 1) if wi[l - 1] == s_ij)
        cyc = stretched[j - 1]
        for c in range(n):
            if cyc[(l_ij - 1 + c) % n] == t_ij:
                rotated = cyc[c:] + cyc[:c]
                break
        else:
            raise AssertionError("rotation target absent from walk")
        walks[j] = tuple(rotated) + (rotated[0],)
        align[(i, j)] = l_ij
        align[(j, i)] = l_ij
    return walks, n, align


def strata(g: DefiningGraph, d: JoinDecomposition, walks, n):
    """V0 strata by distance to the factors, drop chains, total order.

    Returns (strata_list, w0, il, chains, order, frak_d, m) where
    strata_list[h-1] = W(h) sorted per the final order, w0 = W(0),
    il[w] = (i(w), l(w)), chains[w] = (w, ..., w(0)), order = the first
    m named elements w_1 < ... < w_m.
    """
    _, cox = derived_graphs(g)
    adj = cox.adjacency()
    v0 = sorted(d.clique_factor)
    vstar = [v for f in walks.values() for v in f]
    k = len(walks)
    # BFS distances in the label>=3-or-infinity graph from each factor vertex
    dist_to_star = {}
    for w in v0:
        seen = {w: 0}
        queue = deque([w])
        found = None
        while queue:
            x = queue.popleft()
            if x not in v0 and found is None:
                found = seen[x]
            for y in adj[x]:
                if y not in seen:
                    seen[y] = seen[x] + 1
                    queue.append(y)
        dist_of = {v: seen[v] for v in vstar if v in seen}
        h = min(dist_of.values())
        dist_to_star[w] = (h, dist_of)
    frak_d = max((h for h, _ in dist_to_star.values()), default=0)
    strata_raw = [set() for _ in range(frak_d)]
    for w, (h, _) in dist_to_star.items():
        strata_raw[h - 1].add(w)
    il = {}
    for w in v0:
        h, dist_of = dist_to_star[w]
        il[w] = min((i, l) for i in range(1, k + 1)
                    for l in range(1, n + 1)
                    if dist_of.get(walks[i][l - 1]) == h)
    w0 = sorted({walks[il[w][0]][il[w][1] - 1] for w in strata_raw[0]}
                if strata_raw else set())
    for v in w0:
        il[v] = min((i, l) for i in range(1, k + 1)
                    for l in range(1, n + 1) if walks[i][l - 1] == v)
    # total order: W(0) by (i,l), then strata ascending, each sorted by
    # the position of the drop target (ties by name)
    order = sorted(w0, key=lambda v: il[v])
    chains = {v: (v,) for v in w0}
    strata_list = []
    for h in range(1, frak_d + 1):
        pos = {v: p for p, v in enumerate(order)}
        drops = {}
        for w in strata_raw[h - 1]:
            candidates = [v for v in order
                          if v in pos and g.label(w, v) != INF
                          and g.label(w, v) > 2 and _in_level(v, h - 1, w0,
                                                              strata_raw)]
            drops[w] = min((v for v in candidates), key=lambda v: pos[v])
        level = sorted(strata_raw[h - 1], key=lambda w: (pos[drops[w]], w))
        for w in level:
            chains[w] = (w,) + chains[drops[w]]
            if h >= 2:
                il[w] = il[chains[w][1]]
        order.extend(level)
        strata_list.append(tuple(level))
    m = len(order) - (len(strata_list[-1]) if strata_list else 0)
    return (tuple(strata_list), tuple(w0), il, chains,
            tuple(order[:m]), frak_d, m)


def _in_level(v, h, w0, strata_raw):
    if h == 0:
        return v in w0
    return v in strata_raw[h - 1]


@dataclass(frozen=True)
class GammaPlan:
    graph: DefiningGraph
    clique_factor: tuple
    factors: tuple                 # reindexed V_1..V_k
    q_edges: tuple                 # (i,j) pairs, i<j, reindexed
    tree_edges: tuple              # (parent, child) with parent < child
    tour: tuple                    # (i_1,...,i_{r+1})
    r: int
    paths: dict                    # (i,j) -> vertex tuple, both directions
    walks: dict                    # i -> (v_{i,1},...,v_{i,n+1})
    n: int
    align: dict                    # (i,j) -> l(i,j), both directions
    strata: tuple                  # (W(1),...,W(frak_d))
    w0_set: tuple                  # W(0)
    il: dict                       # w -> (i(w), l(w))
    chains: dict                   # w -> (w(h),...,w(0))
    order: tuple                   # (w_1,...,w_m)
    frak_d: int
    m: int
    lambdas: tuple                 # (lambda_1,...,lambda_n), 0-based tuple
    lambda_tour: dict              # (i,j) -> word at slot l(i,j)
    lambda_named: dict             # jj (1-based) -> word at slot l(w_jj)
    gamma_flat: tuple
    gamma_nat: tuple
    gamma: tuple
    prefixes: tuple                # gamma(0), ..., gamma((m+r)n)
    degenerate_single_factor: bool

    def tau(self, i, j):
        return self.paths[(i, j)]

    def u_set(self, l):
        """U_l = V0 together with the l-th walk letters."""
        return tuple(sorted(set(self.clique_factor)
                            | {self.walks[i][l - 1]
                               for i in range(1, len(self.factors) + 1)}))

    def block(self, step):
        """The letter block appended at prefix step `step` (1-based)."""
        a, l = divmod(step - 1, self.n)
        l += 1
        if a < self.m:
            jj = a + 1
            if l == self.il[self.order[jj - 1]][1]:
                return self.lambda_named[jj]
            return self.lambdas[l - 1]
        b = a - self.m  # tour leg index, 0-based
        i, j = self.tour[b], self.tour[b + 1]
        if not self.degenerate_single_factor and l == self.align[(i, j)]:
            return self.lambda_tour[(i, j)]
        return self.lambdas[l - 1]

    def to_json(self) -> dict:
        return {
            "clique_factor": list(self.clique_factor),
            "factors": [list(f) for f in self.factors],
            "q_edges": sorted(list(e) for e in self.q_edges),
            "tree_edges": [list(e) for e in self.tree_edges],
            "tour": list(self.tour),
            "r": self.r,
            "paths": {f"{i},{j}": list(p) for (i, j), p in
                      sorted(self.paths.items())},
            "walks": {str(i): list(w) for i, w in sorted(self.walks.items())},
            "n": self.n,
            "align": {f"{i},{j}": l for (i, j), l in sorted(self.align.items())},
            "strata": [list(s) for s in self.strata],
            "w0_set": list(self.w0_set),
            "il": {w: list(v) for w, v in sorted(self.il.items())},
            "chains": {w: list(c) for w, c in sorted(self.chains.items())},
            "order": list(self.order),
            "frak_d": self.frak_d,
            "m": self.m,
            "lambdas": [list(x) for x in self.lambdas],
            "lambda_tour": {f"{i},{j}": list(w) for (i, j), w in
                            sorted(self.lambda_tour.items())},
            "lambda_named": {str(j): list(w) for j, w in
                             sorted(self.lambda_named.items())},
            "gamma_flat": list(self.gamma_flat),
            "gamma_nat": list(self.gamma_nat),
            "gamma": list(self.gamma),
            "prefixes": [list(p) for p in self.prefixes],
            "degenerate_single_factor": self.degenerate_single_factor,
        }


def plan_from_json(g: DefiningGraph, data: dict) -> GammaPlan:
    """Rebuild a plan from its JSON form (used to re-check third-party
    or doctored plans)."""
    def pair_keys(d):
        return {tuple(int(x) for x in key.split(",")): v
                for key, v in d.items()}

    paths = {k: tuple(v) for k, v in pair_keys(data["paths"]).items()}
    return GammaPlan(
        graph=g,
        clique_factor=tuple(data["clique_factor"]),
        factors=tuple(tuple(f) for f in data["factors"]),
        q_edges=tuple(tuple(e) for e in data["q_edges"]),
        tree_edges=tuple(tuple(e) for e in data["tree_edges"]),
        tour=tuple(data["tour"]),
        r=data["r"],
        paths=paths,
        walks={int(i): tuple(w) for i, w in data["walks"].items()},
        n=data["n"],
        align=pair_keys(data["align"]),
        strata=tuple(tuple(s) for s in data["strata"]),
        w0_set=tuple(data["w0_set"]),
        il={w: tuple(v) for w, v in data["il"].items()},
        chains={w: tuple(c) for w, c in data["chains"].items()},
        order=tuple(data["order"]),
        frak_d=data["frak_d"],
        m=data["m"],
        lambdas=tuple(tuple(x) for x in data["lambdas"]),
        lambda_tour={k: tuple(w) for k, w in
                     pair_keys(data["lambda_tour"]).items()},
        lambda_named={int(j): tuple(w) for j, w in
                      data["lambda_named"].items()},
        gamma_flat=tuple(data["gamma_flat"]),
        gamma_nat=tuple(data["gamma_nat"]),
        gamma=tuple(data["gamma"]),
        prefixes=tuple(tuple(p) for p in data["prefixes"]),
        degenerate_single_factor=data["degenerate_single_factor"],
    )


def build_gamma(g: DefiningGraph) -> GammaPlan:
    """Run the full pipeline on an irreducible non-clique graph."""
    d = join_decompose(g)
    q = build_q(g, d)
    tree_edges, tour, reorder = spanning_tree_and_tour(q)
    factors = tuple(d.factors[old - 1] for old in reorder)
    old_of_new = {new + 1: old for new, old in enumerate(reorder)}
    new_of_old = {old: new for new, old in old_of_new.items()}
    q_edges = frozenset(tuple(sorted((new_of_old[i], new_of_old[j])))
                        for i, j in q.edges)
    paths = connecting_paths(g, d, factors, tree_edges)
    walks, n, align = closed_cover_walks(g, d, factors, tree_edges, paths)
    strata_list, w0, il, chains, order, frak_d, m = strata(g, d, walks, n)
    k = len(factors)
    r = len(tour) - 1

    lambdas = tuple(tuple(walks[i][l] for i in range(1, k + 1))
                    for l in range(n))

    degenerate = k == 1
    lambda_tour = {}
    if not degenerate:
        for (i, j) in set(paths) & set(align):
            l = align[(i, j)]
            tau = paths[(i, j)]
            rest = tuple(walks[ii][l - 1] for ii in range(1, k + 1)
                         if ii not in (i, j))
            lambda_tour[(i, j)] = tau + rest

    lambda_named = {}
    for jj, w in enumerate(order, start=1):
        i_w, l_w = il[w]
        rest = tuple(walks[ii][l_w - 1] for ii in range(1, k + 1)
                     if ii != i_w)
        lambda_named[jj] = rest + chains[w]

    def blocks_for_leg(i, j):
        out = []
        for l in range(1, n + 1):
            if not degenerate and l == align[(i, j)]:
                out.append(lambda_tour[(i, j)])
            else:
                out.append(lambdas[l - 1])
        return out

    gamma_flat = []
    prefixes = [()]
    for jj, w in enumerate(order, start=1):
        l_w = il[w][1]
        for l in range(1, n + 1):
            blk = lambda_named[jj] if l == l_w else lambdas[l - 1]
            gamma_flat.extend(blk)
            prefixes.append(tuple(gamma_flat))
    gamma_nat = []
    for b in range(r):
        for blk in blocks_for_leg(tour[b], tour[b + 1]):
            gamma_nat.extend(blk)
            prefixes.append(tuple(gamma_flat) + tuple(gamma_nat))
    gamma = tuple(gamma_flat) + tuple(gamma_nat)

    return GammaPlan(
        graph=g, clique_factor=tuple(sorted(d.clique_factor)),
        factors=factors, q_edges=tuple(sorted(q_edges)),
        tree_edges=tree_edges, tour=tour, r=r, paths=paths, walks=walks,
        n=n, align=align, strata=strata_list, w0_set=w0, il=il,
        chains=chains, order=order, frak_d=frak_d, m=m, lambdas=lambdas,
        lambda_tour=lambda_tour, lambda_named=lambda_named,
        gamma_flat=tuple(gamma_flat), gamma_nat=tuple(gamma_nat),
        gamma=gamma, prefixes=tuple(prefixes),
        degenerate_single_factor=degenerate,
    )
