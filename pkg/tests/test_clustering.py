import collections

import numpy as np
import pytest
import scipy.sparse.csgraph as csgraph

from biaslens.clustering import (
    EmbeddingSet,
    extract_clusters,
    hdbscan_fit,
    mutual_reachability,
    quality_report,
    reduce_pca,
    single_linkage,
)
from biaslens.clustering.density import (
    condense_tree,
    core_distances,
    minimum_spanning_tree,
    pairwise_distances,
)
from biaslens.errors import ValidationError

from oracles import (
    all_spanning_tree_min_weight,
    exhaustive_best_antichain,
    labels_from_antichain,
    partitions_equal,
    prim_mst_weight,
    single_linkage_heights,
)


def random_points(rng, n, d=2):
    return rng.normal(0.0, 1.0, (n, d))


class TestReduce:
    def test_points_in_subspace_reconstruct_exactly(self):
        rng = np.random.default_rng(1)
        basis = rng.normal(size=(2, 5))
        coords = rng.normal(size=(12, 2))
        X = coords @ basis
        emb = EmbeddingSet([str(i) for i in range(12)], X)
        red = reduce_pca(emb, 2)
        # pairwise distances survive a lossless projection
        np.testing.assert_allclose(
            pairwise_distances(red.matrix), pairwise_distances(X), atol=1e-9
        )

    def test_diagonal_line_gives_symmetric_component(self):
        X = np.array([[i, i] for i in range(-3, 4)], dtype=float)
        emb = EmbeddingSet([str(i) for i in range(7)], X)
        red = reduce_pca(emb, 1)
        expected = np.array([i * np.sqrt(2) for i in range(-3, 4)])
        np.testing.assert_allclose(red.matrix[:, 0], expected, atol=1e-12)

    def test_full_rank_projection_preserves_distances(self):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(10, 5))
        emb = EmbeddingSet([str(i) for i in range(10)], X)
        red = reduce_pca(emb, 5)
        np.testing.assert_allclose(
            pairwise_distances(red.matrix), pairwise_distances(X), atol=1e-9
        )

    def test_target_dim_too_large_rejected(self):
        emb = EmbeddingSet(["a", "b"], np.eye(2))
        with pytest.raises(ValidationError):
            reduce_pca(emb, 3)

    def test_zero_variance_returns_centered(self):
        X = np.ones((4, 3))
        red = reduce_pca(EmbeddingSet(list("abcd"), X), 2)
        assert np.allclose(red.matrix, 0.0)

    def test_deterministic_sign(self):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(20, 6))
        emb = EmbeddingSet([str(i) for i in range(20)], X)
        a = reduce_pca(emb, 3).matrix
        b = reduce_pca(emb, 3).matrix
        np.testing.assert_array_equal(a, b)


class TestMutualReachability:
    def test_hand_computed_line(self):
        pts = np.array([[0.0], [1.0], [3.0]])
        assert core_distances(pts, 1).tolist() == [1.0, 1.0, 2.0]
        m = mutual_reachability(pts, 1)
        assert m[0, 1] == 1.0
        assert m[1, 2] == 2.0
        assert m[0, 2] == 3.0

    def test_identical_points_all_zero(self):
        m = mutual_reachability(np.zeros((5, 3)), 2)
        assert m.max() == 0.0

    def test_symmetry(self):
        rng = np.random.default_rng(5)
        pts = random_points(rng, 15, 3)
        m = mutual_reachability(pts, 3)
        np.testing.assert_array_equal(m, m.T)

    def test_lower_bounds_distance(self):
        rng = np.random.default_rng(6)
        pts = random_points(rng, 12)
        m = mutual_reachability(pts, 2)
        assert (m >= pairwise_distances(pts) - 1e-12).all()


class TestMstOracles:
    def test_mst_weight_matches_naive_prim_and_scipy(self):
        rng = np.random.default_rng(11)
        for trial in range(200):
            n = int(rng.integers(3, 13))
            pts = random_points(rng, n)
            m = mutual_reachability(pts, min(2, n - 1))
            edges = minimum_spanning_tree(m)
            weight = sum(w for _, _, w in edges)
            assert weight == pytest.approx(prim_mst_weight(m), abs=1e-9)
            sp = csgraph.minimum_spanning_tree(m).toarray().sum()
            assert weight == pytest.approx(sp, abs=1e-9)

    def test_mst_weight_is_global_minimum_small_n(self):
        rng = np.random.default_rng(12)
        for n in (3, 4, 5, 6, 7):
            pts = random_points(rng, n)
            m = mutual_reachability(pts, 1)
            weight = sum(w for _, _, w in minimum_spanning_tree(m))
            assert weight == pytest.approx(all_spanning_tree_min_weight(m), abs=1e-9)

    @pytest.mark.slow
    def test_mst_weight_is_global_minimum_n8_n9(self):
        rng = np.random.default_rng(13)
        for n in (8, 9):
            pts = random_points(rng, n)
            m = mutual_reachability(pts, 2)
            weight = sum(w for _, _, w in minimum_spanning_tree(m))
            assert weight == pytest.approx(all_spanning_tree_min_weight(m), abs=1e-9)


class TestSingleLinkage:
    def test_heights_match_naive_agglomeration(self):
        rng = np.random.default_rng(21)
        for trial in range(60):
            n = int(rng.integers(3, 13))
            pts = random_points(rng, n)
            m = mutual_reachability(pts, min(2, n - 1))
            Z = single_linkage(m)
            np.testing.assert_allclose(
                sorted(Z[:, 2].tolist()), single_linkage_heights(m), atol=1e-9
            )

    def test_twelve_point_fixture_against_oracle(self):
        rng = np.random.default_rng(22)
        pts = random_points(rng, 12)
        m = mutual_reachability(pts, 2)
        Z = single_linkage(m)
        np.testing.assert_allclose(
            sorted(Z[:, 2].tolist()), single_linkage_heights(m), atol=1e-9
        )

    def test_merge_sizes_account_for_all_points(self):
        rng = np.random.default_rng(23)
        pts = random_points(rng, 10)
        Z = single_linkage(mutual_reachability(pts, 2))
        assert Z[-1, 3] == 10


class TestCondensedTree:
    def test_two_blob_fixture_has_two_leaves(self):
        rng = np.random.default_rng(31)
        X = np.vstack(
            [rng.normal(0, 0.5, (10, 2)), rng.normal(0, 0.5, (10, 2)) + 100]
        )
        tree = hdbscan_fit(X, min_cluster_size=5)
        leaves = [
            nid for nid in tree.nodes if not tree.children(nid)
        ]
        assert len(leaves) == 2

    def test_single_blob_tree_is_root_only(self):
        rng = np.random.default_rng(32)
        tree = hdbscan_fit(rng.normal(0, 0.5, (10, 2)), min_cluster_size=5)
        assert len(tree.nodes) == 1
        assert tree.root_id == 10

    def test_every_point_falls_out_exactly_once(self):
        rng = np.random.default_rng(33)
        for trial in range(20):
            n = int(rng.integers(8, 25))
            tree = hdbscan_fit(random_points(rng, n), min_cluster_size=3)
            assert len(tree.point_parent) == n
            assert tree.nodes[tree.root_id].size == n

    def test_structural_invariants(self):
        rng = np.random.default_rng(34)
        for trial in range(20):
            n = int(rng.integers(10, 30))
            tree = hdbscan_fit(random_points(rng, n), min_cluster_size=3)
            for node in tree.nodes.values():
                assert node.lambda_death >= node.lambda_birth
                assert node.stability >= -1e-12
                if node.parent_id is not None:
                    assert node.size <= tree.nodes[node.parent_id].size
    def test_too_few_points_named_error(self):
        with pytest.raises(ValidationError, match="min_cluster_size"):
            hdbscan_fit(np.zeros((5, 2)), min_cluster_size=3)


class TestExtraction:
    def test_two_blobs_no_noise(self):
        rng = np.random.default_rng(41)
        X = np.vstack(
            [rng.normal(0, 0.5, (10, 2)), rng.normal(0, 0.5, (10, 2)) + 100]
        )
        asg = extract_clusters(hdbscan_fit(X, min_cluster_size=5))
        counts = collections.Counter(asg.labels.tolist())
        assert counts == {0: 10, 1: 10}

    def test_far_outlier_is_noise(self):
        rng = np.random.default_rng(42)
        X = np.vstack(
            [
                rng.normal(0, 0.5, (10, 2)),
                rng.normal(0, 0.5, (10, 2)) + 100,
                [[5000.0, 5000.0]],
            ]
        )
        asg = extract_clusters(hdbscan_fit(X, min_cluster_size=5))
        assert asg.labels[-1] == -1
        assert collections.Counter(asg.labels.tolist())[-1] == 1

    def test_partition_matches_exhaustive_antichain_search(self):
        rng = np.random.default_rng(43)
        for trial in range(120):
            n = int(rng.integers(6, 13))
            pts = random_points(rng, n)
            tree = hdbscan_fit(pts, min_cluster_size=2, min_samples=1)
            asg = extract_clusters(tree)
            best_total, best_chain = exhaustive_best_antichain(tree)
            got_total = sum(
                tree.nodes[nid].stability for nid in asg.params["chosen_nodes"]
            )
            assert got_total == pytest.approx(best_total, abs=1e-9)
            oracle_labels = labels_from_antichain(tree, best_chain)
            assert partitions_equal(asg.labels.tolist(), oracle_labels)

    def test_row_permutation_invariance(self):
        rng = np.random.default_rng(44)
        pts = np.vstack(
            [rng.normal(0, 1, (12, 2)), rng.normal(0, 1, (12, 2)) + 30]
        )
        asg1 = extract_clusters(hdbscan_fit(pts, min_cluster_size=4))
        perm = rng.permutation(len(pts))
        asg2 = extract_clusters(hdbscan_fit(pts[perm], min_cluster_size=4))
        relabeled = [asg2.labels.tolist()[list(perm).index(i)] for i in range(len(pts))]
        assert partitions_equal(asg1.labels.tolist(), relabeled)

    def test_scale_invariance(self):
        rng = np.random.default_rng(45)
        pts = np.vstack(
            [rng.normal(0, 1, (12, 2)), rng.normal(0, 1, (12, 2)) + 30]
        )
        asg1 = extract_clusters(hdbscan_fit(pts, min_cluster_size=4))
        asg2 = extract_clusters(hdbscan_fit(pts * 37.5, min_cluster_size=4))
        assert partitions_equal(asg1.labels.tolist(), asg2.labels.tolist())

    def test_strengths_in_unit_interval(self):
        rng = np.random.default_rng(46)
        asg = extract_clusters(hdbscan_fit(random_points(rng, 30), min_cluster_size=3))
        assert (asg.strengths >= 0).all() and (asg.strengths <= 1).all()


class TestEmbeddingIO:
    def test_binary_manifest_round_trip(self, tmp_path):
        rng = np.random.default_rng(50)
        matrix = rng.normal(size=(7, 3)).astype("<f4")
        ids = [f"a{i}" for i in range(7)]
        (tmp_path / "emb.f32").write_bytes(matrix.tobytes())
        (tmp_path / "ids.txt").write_text("\n".join(ids) + "\n")
        (tmp_path / "emb.json").write_text(
            '{"dim": 3, "count": 7, "id_file": "ids.txt", "vector_file": "emb.f32"}'
        )
        emb = EmbeddingSet.load(tmp_path / "emb.json")
        assert emb.article_ids == ids
        np.testing.assert_allclose(emb.matrix, matrix.astype(float), atol=1e-7)

    def test_binary_manifest_count_mismatch_rejected(self, tmp_path):
        (tmp_path / "emb.f32").write_bytes(b"\0" * 12)
        (tmp_path / "ids.txt").write_text("a0\n")
        (tmp_path / "emb.json").write_text(
            '{"dim": 3, "count": 2, "id_file": "ids.txt", "vector_file": "emb.f32"}'
        )
        with pytest.raises(ValidationError):
            EmbeddingSet.load(tmp_path / "emb.json")

    def test_jsonl_by_extension(self, tmp_path):
        path = tmp_path / "emb.jsonl"
        path.write_text('{"article_id": "a", "vector": [1.0, 2.0]}\n')
        emb = EmbeddingSet.load(path)
        assert emb.dim == 2


class TestQuality:
    def test_paper_noise_fraction_flags(self):
        labels = np.array([-1] * 339 + [0] * 331 + [1] * 330)
        asg = _assignment(labels)
        rep = quality_report(asg)
        assert rep.noise_fraction == pytest.approx(0.339)
        assert "high_noise" in rep.flags

    def test_balanced_clusters_clean(self):
        labels = np.array([0] * 25 + [1] * 25 + [2] * 25 + [3] * 25)
        rep = quality_report(_assignment(labels))
        assert rep.flags == []
        assert rep.cluster_count == 4

    def test_dominant_cluster_flagged(self):
        labels = np.array([0] * 90 + [1] * 10)
        rep = quality_report(_assignment(labels))
        assert "dominant_cluster" in rep.flags


def _assignment(labels):
    from biaslens.clustering import ClusterAssignment

    return ClusterAssignment(
        [str(i) for i in range(len(labels))],
        labels,
        np.ones(len(labels)),
    )
