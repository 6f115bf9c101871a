"""kNN prediction, LOOCV error, and the chance-error baseline."""

import numpy as np
import pytest

import oracles
from dpase import ErrorReport, chance_error, knn_predict, loocv_error

# Hand-enumerated 10-point fixture. With k=1 only point 9 is classified
# correctly (its nearest neighbor is point 1 at squared distance 1);
# every other point's nearest neighbor carries the other label, and
# point 8 sits at an exact squared distance 41 from both points 4 and 5,
# exercising the ascending-index tie rule.
FIXTURE_POINTS = np.array(
    [
        [0.0, 0.0],   # 0, label 1
        [0.0, 1.0],   # 1, label 1
        [1.0, 0.0],   # 2, label 1
        [5.0, 5.0],   # 3, label 2
        [5.0, 6.0],   # 4, label 2
        [6.0, 5.0],   # 5, label 2
        [0.4, 0.4],   # 6, label 2
        [5.4, 5.4],   # 7, label 1
        [10.0, 10.0], # 8, label 1
        [0.0, 2.0],   # 9, label 1
    ]
)
FIXTURE_LABELS = np.array([1, 1, 1, 2, 2, 2, 2, 1, 1, 1])


class TestKnnPredict:
    def test_unanimous_labels_win_for_any_k(self):
        points = np.array([[0.0, 0], [1, 0], [2, 0]])
        labels = [4, 4, 4]
        for k in (1, 2, 3):
            assert knn_predict(points, labels, np.array([0.5, 0.0]), k) == 4

    def test_nearest_point_wins_at_k1(self):
        points = np.array([[0.0, 0], [10, 10]])
        labels = [1, 2]
        assert knn_predict(points, labels, np.array([1.0, 1.0]), 1) == 1

    def test_agrees_with_exhaustive_oracle_on_random_queries(self):
        rng = np.random.default_rng(0)
        points = rng.normal(size=(20, 2))
        labels = rng.integers(1, 4, size=20)
        for _ in range(50):
            query = rng.normal(size=2)
            assert knn_predict(points, labels, query, 3) == oracles.brute_knn_predict(
                points, labels, query, 3
            )

    def test_distance_tie_breaks_by_index(self):
        # two training points equidistant from the query with different labels
        points = np.array([[1.0, 0.0], [-1.0, 0.0]])
        labels = [2, 1]
        assert knn_predict(points, labels, np.array([0.0, 0.0]), 1) == 2

    def test_vote_tie_breaks_by_nearest_member(self):
        points = np.array([[1.0, 0.0], [-2.0, 0.0], [3.0, 0.0], [-4.0, 0.0]])
        labels = [1, 2, 1, 2]
        # k=2 neighbors: labels 1 and 2 one vote each; label 1's member is nearer
        assert knn_predict(points, labels, np.array([0.0, 0.0]), 2) == 1

    def test_invariant_under_joint_orthogonal_transforms(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            points = rng.normal(size=(15, 3))
            labels = rng.integers(1, 3, size=15)
            query = rng.normal(size=3)
            Q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
            before = knn_predict(points, labels, query, 3)
            after = knn_predict(points @ Q, labels, query @ Q, 3)
            assert before == after

    def test_rejects_bad_k_and_empty_training(self):
        points = np.array([[0.0, 0], [1, 1]])
        with pytest.raises(ValueError):
            knn_predict(points, [1, 2], np.zeros(2), 0)
        with pytest.raises(ValueError):
            knn_predict(points, [1, 2], np.zeros(2), 3)
        with pytest.raises(ValueError):
            knn_predict(np.zeros((0, 2)), [], np.zeros(2), 1)


class TestLoocvError:
    def test_separated_clusters_have_zero_error(self):
        rng = np.random.default_rng(2)
        a = rng.normal(scale=0.1, size=(20, 2))
        b = rng.normal(scale=0.1, size=(20, 2)) + 100.0
        points = np.vstack([a, b])
        labels = np.array([1] * 20 + [2] * 20)
        report = loocv_error(points, labels, 3)
        assert report.error_rate == 0.0

    def test_zero_error_holds_up_to_cluster_size_minus_one(self):
        rng = np.random.default_rng(3)
        a = rng.normal(scale=0.1, size=(8, 2))
        b = rng.normal(scale=0.1, size=(12, 2)) + 50.0
        points = np.vstack([a, b])
        labels = np.array([1] * 8 + [2] * 12)
        assert loocv_error(points, labels, 7).error_rate == 0.0

    def test_random_labels_sit_near_half(self):
        rng = np.random.default_rng(4)
        points = rng.normal(size=(200, 2))
        labels = np.array([1, 2] * 100)
        report = loocv_error(points, labels, 3)
        assert abs(report.error_rate - 0.5) <= 0.1

    def test_hand_enumerated_fixture(self):
        report = loocv_error(FIXTURE_POINTS, FIXTURE_LABELS, 1)
        assert report.error_rate == 0.9
        assert report.n_evaluated == 10
        assert report.k == 1
        assert report.chance_error == pytest.approx(0.4)

    def test_matches_brute_force_oracle_exactly(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            n = int(rng.integers(5, 31))
            d = int(rng.integers(1, 4))
            k = int(rng.choice([1, 3]))
            points = rng.normal(size=(n, d))
            labels = rng.integers(1, 4, size=n)
            mine = loocv_error(points, labels, k).error_rate
            assert mine == oracles.brute_loocv_error(points, labels, k)

    def test_deterministic(self):
        rng = np.random.default_rng(6)
        points = rng.normal(size=(30, 2))
        labels = rng.integers(1, 3, size=30)
        assert loocv_error(points, labels, 3) == loocv_error(points, labels, 3)

    def test_error_rate_is_exact_fraction(self):
        report = loocv_error(FIXTURE_POINTS, FIXTURE_LABELS, 1)
        assert isinstance(report, ErrorReport)
        assert report.error_rate * report.n_evaluated == 9

    def test_rejects_k_too_large_for_leave_one_out(self):
        points = np.zeros((3, 2))
        with pytest.raises(ValueError):
            loocv_error(points, [1, 2, 1], 3)


class TestChanceError:
    def test_single_class(self):
        assert chance_error([1, 1, 1]) == 0.0

    def test_two_class_split(self):
        labels = np.array([1] * 508 + [2] * 492)
        assert chance_error(labels) == pytest.approx(0.492)

    def test_three_class_split(self):
        labels = np.array([1] * 413 + [2] * 393 + [3] * 194)
        assert chance_error(labels) == pytest.approx(0.587)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            chance_error([])
