"""Hierarchical density clustering over mutual-reachability distances.

The pipeline is the classic one: core distances -> mutual reachability ->
minimum spanning tree -> single-linkage dendrogram -> condensed tree ->
stability-based cluster extraction with a noise label for points that never
sit inside a selected cluster.

Everything is deterministic. Distance ties are broken by the lower index
pair throughout, so permuting input rows only permutes labels and rescaling
coordinates leaves the partition unchanged.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from ..errors import ValidationError
from .models import NOISE, ClusterAssignment, CondensedNode, CondensedTree, EmbeddingSet


def pairwise_distances(points: np.ndarray) -> np.ndarray:
    """Dense Euclidean distance matrix."""
    sq = np.sum(points * points, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (points @ points.T)
    np.maximum(d2, 0.0, out=d2)
    d = np.sqrt(d2)
    np.fill_diagonal(d, 0.0)
    return d


def core_distances(points: np.ndarray, min_samples: int) -> np.ndarray:
    """Distance from each point to its min_samples-th nearest neighbor,
    the point itself excluded. Duplicate points give zero core distances."""
    n = len(points)
    if min_samples < 1:
        raise ValidationError("min_samples must be >= 1")
    if n <= min_samples:
        raise ValidationError(f"need more than min_samples={min_samples} points, got {n}")
    dist = pairwise_distances(points)
    ordered = np.sort(dist, axis=1)
    # column 0 is the self distance (0), so the k-th neighbor sits at index k
    return ordered[:, min_samples]


def mutual_reachability(points: np.ndarray, min_samples: int) -> np.ndarray:
    """mreach(a, b) = max(core(a), core(b), d(a, b)); symmetric, zero diagonal."""
    points = np.asarray(points, dtype=np.float64)
    core = core_distances(points, min_samples)
    dist = pairwise_distances(points)
    mreach = np.maximum(dist, np.maximum(core[:, None], core[None, :]))
    np.fill_diagonal(mreach, 0.0)
    return mreach


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def minimum_spanning_tree(weights: np.ndarray) -> list[tuple[int, int, float]]:
    """Kruskal MST over a dense symmetric weight matrix.

    Edges are considered in (weight, i, j) order with i < j, which fixes the
    tie-break: among equal-weight candidates the lower index pair wins.
    """
    n = weights.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    order = np.lexsort((ju, iu, weights[iu, ju]))
    uf = _UnionFind(n)
    edges: list[tuple[int, int, float]] = []
    for k in order:
        a, b = int(iu[k]), int(ju[k])
        if uf.find(a) != uf.find(b):
            uf.union(a, b)
            edges.append((a, b, float(weights[a, b])))
            if len(edges) == n - 1:
                break
    return edges


def single_linkage(weights: np.ndarray) -> np.ndarray:
    """Single-linkage dendrogram from the MST of the weight matrix.

    Returns an (n-1, 4) array in the usual linkage layout: the two merged
    cluster ids, the merge distance, and the merged size. New clusters get
    ids n, n+1, ... in merge order; MST edges merge in (weight, i, j) order.
    """
    n = weights.shape[0]
    edges = sorted(minimum_spanning_tree(weights), key=lambda e: (e[2], e[0], e[1]))
    uf = _UnionFind(2 * n - 1)
    current = list(range(n))  # representative point -> current cluster id
    sizes = {i: 1 for i in range(n)}
    Z = np.zeros((n - 1, 4))
    for k, (a, b, w) in enumerate(edges):
        ca, cb = current[uf.find(a)], current[uf.find(b)]
        new_id = n + k
        Z[k] = (ca, cb, w, sizes[ca] + sizes[cb])
        sizes[new_id] = sizes[ca] + sizes[cb]
        uf.union(a, b)
        current[uf.find(a)] = new_id
    return Z


def _bfs_leaves(Z: np.ndarray, start: int, n: int) -> list[int]:
    """All point indices under a dendrogram node (points are ids < n)."""
    out: list[int] = []
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node < n:
            out.append(node)
        else:
            row = Z[node - n]
            queue.append(int(row[0]))
            queue.append(int(row[1]))
    return out


def condense_tree(Z: np.ndarray, min_cluster_size: int) -> CondensedTree:
    """Collapse a single-linkage dendrogram into the condensed hierarchy.

    Walking down from the root, a split only creates two child clusters when
    both sides hold at least min_cluster_size points; otherwise the small
    side's points fall out of the parent at that split's lambda = 1/distance.
    Zero merge distances map to an infinite lambda.
    """
    n = Z.shape[0] + 1
    if min_cluster_size < 1:
        raise ValidationError("min_cluster_size must be >= 1")
    root = 2 * n - 2
    relabel: dict[int, int] = {root: n}
    next_label = n + 1
    nodes: dict[int, CondensedNode] = {
        n: CondensedNode(n, None, 0.0, 0.0, n, 0.0)
    }
    point_parent = np.full(n, n, dtype=np.int64)
    point_lambda = np.zeros(n, dtype=np.float64)
    ignore = set()

    if n == 1:
        return CondensedTree(n, nodes, point_parent, point_lambda)

    for node in range(root, n - 1, -1):  # top-down: larger ids merged later
        if node in ignore or node not in relabel:
            # unlabeled internal nodes belong to dissolved subtrees
            continue
        row = Z[node - n]
        left, right = int(row[0]), int(row[1])
        dist = float(row[2])
        lam = np.inf if dist <= 0.0 else 1.0 / dist
        left_size = 1 if left < n else int(Z[left - n][3])
        right_size = 1 if right < n else int(Z[right - n][3])
        label = relabel[node]

        def fall_out(side: int) -> None:
            for p in _bfs_leaves(Z, side, n):
                point_parent[p] = label
                point_lambda[p] = lam
            if side >= n:
                ignore.update(
                    x for x in _descendant_internal(Z, side, n)
                )

        if left_size >= min_cluster_size and right_size >= min_cluster_size:
            for side, size in ((left, left_size), (right, right_size)):
                child_label = next_label
                next_label += 1
                nodes[child_label] = CondensedNode(
                    child_label, label, lam, lam, size, 0.0
                )
                if side < n:
                    # a min_cluster_size of 1 can promote single points
                    point_parent[side] = child_label
                    point_lambda[side] = lam
                else:
                    relabel[side] = child_label
            nodes[label].lambda_death = max(nodes[label].lambda_death, lam)
        elif left_size < min_cluster_size and right_size < min_cluster_size:
            fall_out(left)
            fall_out(right)
            nodes[label].lambda_death = max(nodes[label].lambda_death, lam)
        elif left_size < min_cluster_size:
            if right >= n:
                relabel[right] = label
            else:
                point_parent[right] = label
                point_lambda[right] = lam
            fall_out(left)
            nodes[label].lambda_death = max(nodes[label].lambda_death, lam)
        else:
            if left >= n:
                relabel[left] = label
            else:
                point_parent[left] = label
                point_lambda[left] = lam
            fall_out(right)
            nodes[label].lambda_death = max(nodes[label].lambda_death, lam)

    _finalize(nodes, point_parent, point_lambda)
    return CondensedTree(n, nodes, point_parent, point_lambda)


def _descendant_internal(Z: np.ndarray, start: int, n: int) -> list[int]:
    out = []
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node >= n:
            out.append(node)
            row = Z[node - n]
            queue.append(int(row[0]))
            queue.append(int(row[1]))
    return out


def _finalize(nodes, point_parent, point_lambda) -> None:
    """Fill sizes, death lambdas and stabilities from the point records."""
    children: dict[int, list[int]] = {}
    for node in nodes.values():
        if node.parent_id is not None:
            children.setdefault(node.parent_id, []).append(node.node_id)
    for nid in sorted(nodes, reverse=True):
        node = nodes[nid]
        own_points = point_parent == nid
        size = int(own_points.sum()) + sum(
            nodes[c].size for c in children.get(nid, [])
        )
        node.size = size
        lam_max = node.lambda_death
        if own_points.any():
            lam_max = max(lam_max, float(point_lambda[own_points].max()))
        node.lambda_death = max(lam_max, node.lambda_birth)
        # stability: every member leaves either directly or at a child split
        stab = 0.0
        for lam in point_lambda[own_points]:
            stab += _lam_diff(float(lam), node.lambda_birth)
        for c in children.get(nid, []):
            stab += nodes[c].size * _lam_diff(nodes[c].lambda_birth, node.lambda_birth)
        node.stability = stab


def _lam_diff(lam: float, birth: float) -> float:
    if np.isinf(lam) and np.isinf(birth):
        return 0.0
    return lam - birth


def hdbscan_fit(
    embeddings: EmbeddingSet | np.ndarray,
    min_cluster_size: int = 10,
    min_samples: int | None = None,
) -> CondensedTree:
    """Fit the condensed cluster hierarchy on embedding rows.

    min_samples defaults to min_cluster_size. Requires at least
    2 * min_cluster_size points so a split can ever produce two clusters.
    """
    points = embeddings.matrix if isinstance(embeddings, EmbeddingSet) else np.asarray(embeddings, dtype=np.float64)
    n = len(points)
    if min_samples is None:
        min_samples = min_cluster_size
    if n < 2 * min_cluster_size:
        raise ValidationError(
            f"need at least 2*min_cluster_size={2 * min_cluster_size} points, got {n}"
        )
    mreach = mutual_reachability(points, min_samples)
    Z = single_linkage(mreach)
    return condense_tree(Z, min_cluster_size)


def extract_clusters(
    tree: CondensedTree, article_ids: list[str] | None = None, params: dict | None = None
) -> ClusterAssignment:
    """Excess-of-mass cluster selection over the condensed tree.

    Walking leaves-up, a node is chosen iff its own stability exceeds the
    summed stability of the best selection among its descendants; the root is
    an eligible candidate like any other node. Points whose fall-out node is
    above every selected node are noise. Membership strength is the point's
    fall-out lambda over the cluster's maximum, clamped to [0, 1].
    """
    node_ids = sorted(tree.nodes)
    children: dict[int, list[int]] = {nid: tree.children(nid) for nid in node_ids}
    selected: dict[int, bool] = {}
    best_below: dict[int, float] = {}
    for nid in reversed(node_ids):
        child_sum = sum(best_below[c] for c in children[nid])
        node = tree.nodes[nid]
        if node.stability > child_sum:
            selected[nid] = True
            best_below[nid] = node.stability
        else:
            selected[nid] = False
            best_below[nid] = child_sum
    # a selected node deselects everything underneath it
    for nid in node_ids:
        if selected[nid]:
            stack = list(children[nid])
            while stack:
                c = stack.pop()
                selected[c] = False
                stack.extend(children[c])

    chosen = [nid for nid in node_ids if selected[nid]]
    label_of_node: dict[int, int] = {}
    for nid in node_ids:  # nearest selected ancestor-or-self, walking down
        node = tree.nodes[nid]
        if nid in chosen:
            label_of_node[nid] = chosen.index(nid)
        elif node.parent_id is not None and node.parent_id in label_of_node:
            label_of_node[nid] = label_of_node[node.parent_id]

    n = tree.n_points
    labels = np.full(n, NOISE, dtype=np.int64)
    strengths = np.zeros(n, dtype=np.float64)
    lam_max: dict[int, float] = {}
    for p in range(n):
        lab = label_of_node.get(int(tree.point_parent[p]))
        if lab is not None:
            labels[p] = lab
            lam_max[lab] = max(lam_max.get(lab, 0.0), float(tree.point_lambda[p]))
    for p in range(n):
        lab = int(labels[p])
        if lab == NOISE:
            continue
        top = lam_max[lab]
        lam = float(tree.point_lambda[p])
        if np.isinf(top):
            strengths[p] = 1.0 if np.isinf(lam) else 0.0
        elif top <= 0.0:
            strengths[p] = 1.0
        else:
            strengths[p] = min(lam / top, 1.0)
    ids = article_ids if article_ids is not None else [str(i) for i in range(n)]
    out_params = dict(params or {})
    out_params["chosen_nodes"] = chosen
    return ClusterAssignment(ids, labels, strengths, out_params)
