import csv
import math

import pytest

from geometry import GeometryConfig, root_cell
from experiments import (
    ExperimentManager,
    Lemma2Experiment,
    Lemma2Row,
    ProfileExperiment,
    ProfileRow,
    ScalingExperiment,
    ScalingRow,
    consecutive_ratios,
    decile_means,
    derive_seeds,
    fit_profile_constant,
    flag_summary,
    is_decreasing_trend,
    lemma2_monte_carlo,
    n_log_n,
    per_iteration_profile,
    positive_or_default,
    profile_violations,
    random_lattice_points,
    run_checks,
    scaling_ratio_spread,
    work_scaling,
)
from quadtree import TileKey


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def test_derive_seeds_is_stable():
    assert derive_seeds(7, 5) == derive_seeds(7, 5)
    assert len(set(derive_seeds(7, 50))) == 50
    assert derive_seeds(7, 3) != derive_seeds(8, 3)


def test_explicit_zero_is_not_replaced_by_default():
    assert positive_or_default("trials", None, 10) == 10
    assert positive_or_default("trials", 2, 10) == 2
    cfg = GeometryConfig(d=2, L=8)
    with pytest.raises(ValueError, match="n must be >= 1"):
        ProfileExperiment(0, cfg, n=0, trials=2)
    with pytest.raises(ValueError, match="trials"):
        ScalingExperiment([8], 0, cfg, trials=0)
    with pytest.raises(ValueError, match="n_points"):
        Lemma2Experiment(0, cfg, trials=5, n_points=0)
    with pytest.raises(ValueError, match="profile_trials"):
        ExperimentManager([8], seed=0, geometry=cfg, profile_trials=0)
    with pytest.raises(ValueError, match="trials"):
        run_checks(random_lattice_points(3, cfg, seed=1), cfg, trials=0)


def test_random_lattice_points_are_distinct(plane6):
    points = random_lattice_points(200, plane6, seed=1)
    assert len({p.coords for p in points}) == 200
    assert [p.id for p in points] == list(range(200))


def test_lemma2_row_threshold():
    row = Lemma2Row(TileKey(root_cell(GeometryConfig())), i=2, present_count=400, created_count=400)
    assert row.bound == 2.0
    assert row.threshold() == 1.0

    row = Lemma2Row(TileKey(root_cell(GeometryConfig())), i=16, present_count=400, created_count=100)
    b = 0.25
    assert row.threshold() == pytest.approx(b + 3 * math.sqrt(b * (1 - b) / 400))
    assert row.freq == 0.25


def test_lemma2_monte_carlo_small(plane8):
    points = random_lattice_points(8, plane8, seed=4)
    rows = lemma2_monte_carlo(points, 300, seed=5, geometry=plane8)
    assert rows
    root = TileKey(root_cell(plane8))
    for row in rows:
        assert 0 <= row.created_count <= row.present_count <= 300
        if row.i <= 4:
            assert not row.flagged
    # the empty tree already owns the root square, so it is never created
    assert [(r.i, r.present_count, r.created_count) for r in rows if r.tile == root] == [(1, 300, 0)]
    # every trial has some tile at every step
    for i in range(1, 9):
        assert sum(r.present_count for r in rows if r.i == i) >= 300


def test_lemma2_csv_layout(tmp_path, plane8):
    experiment = Lemma2Experiment(seed=3, geometry=plane8, trials=50, n_points=5)
    rows = experiment.run()
    path = experiment.write_csv(rows, tmp_path)
    assert path.read_text().splitlines()[0] == "tile_id,i,present,created,freq,bound,flagged"
    assert len(read_csv(path)) == len(rows)
    assert "\r" not in path.read_text()


def test_flag_summary_counts_only_high_presence_rows():
    key = TileKey(root_cell(GeometryConfig()))
    rows = [
        Lemma2Row(key, 8, 500, 400, flagged=True),
        Lemma2Row(key, 9, 50, 50, flagged=False),
        Lemma2Row(key, 10, 150, 10, flagged=False),
    ]
    assert flag_summary(rows, 100) == (2, 1)


def test_scaling_small_sizes():
    rows = work_scaling([1, 2], trials=3, seed=0)
    assert [r.mean_total_work for r in rows] == [1.0, 3.0]
    assert rows[0].normalized == 1.0
    assert rows[1].normalized == pytest.approx(3.0 / (2 * math.log(2)))


def test_n_log_n_floor():
    assert n_log_n(1) == 1.0
    assert n_log_n(100) == pytest.approx(100 * math.log(100))


def test_scaling_requires_ascending_sizes(plane8):
    with pytest.raises(ValueError):
        ScalingExperiment([8, 4], seed=0, geometry=plane8)


def test_scaling_ratio_helpers():
    rows = [ScalingRow(10, 1, 2 * n_log_n(10)), ScalingRow(20, 1, 3 * n_log_n(20)), ScalingRow(40, 1, 2.4 * n_log_n(40))]
    assert consecutive_ratios(rows) == pytest.approx([1.5, 0.8])
    assert scaling_ratio_spread(rows) == pytest.approx(1.5)
    assert scaling_ratio_spread(rows[:1]) == 1.0


def test_per_iteration_profile_shape():
    profile = per_iteration_profile(64, trials=4, seed=2)
    assert [r.i for r in profile] == list(range(1, 65))
    assert profile[0].mean_k == 63
    assert profile[-1].mean_k >= 0
    assert profile[-1].reference == 4.0


def test_profile_decile_helpers():
    n = 100
    profile = [ProfileRow(i, 2.0 * n / i, n) for i in range(1, n + 1)]
    deciles = decile_means(profile)
    assert len(deciles) == 10
    assert (deciles[0].first_i, deciles[-1].last_i) == (1, 100)
    assert is_decreasing_trend(profile)

    c = fit_profile_constant(profile)
    assert 0 < c < 1
    assert profile_violations(profile, c) == []
    spiked = profile[:-10] + [ProfileRow(i, 50.0, n) for i in range(91, 101)]
    assert profile_violations(spiked, c)
    assert not is_decreasing_trend(spiked)


def test_run_checks_small_set(plane8):
    points = random_lattice_points(6, plane8, seed=12)
    report = run_checks(points, plane8, seed=1)
    assert report.passed
    names = [s.name for s in report.suites]
    assert names[:3] == ["Validate", "Oracle equivalence", "Node budget"]
    assert any(line.startswith("[PASS] Lemma 1: max defining-set size = ") and line.endswith("≤ 4")
               for line in report.lines())
    assert "Defining-set intersection" in names


def test_bench_writes_three_csvs(tmp_path):
    manager = ExperimentManager([16, 32], seed=0, trials=2, lemma2_trials=20, lemma2_points=5,
                                profile_n=32, profile_trials=2)
    result = manager.run(tmp_path)
    assert sorted(p.name for p in tmp_path.iterdir()) == ["lemma2.csv", "profile.csv", "scaling.csv"]
    assert read_csv(result.paths["scaling"])[0].keys() == {"n", "trials", "mean_total_work", "normalized"}
    assert len(read_csv(result.paths["profile"])) == 32
    assert len(result.verdicts) == 4
    assert list(manager.get_available_experiments()) == ["Scaling", "Profile", "Lemma2"]


def test_bench_is_reproducible(tmp_path):
    outputs = []
    for run in ("a", "b"):
        manager = ExperimentManager([8, 16], seed=42, trials=2, lemma2_trials=10, lemma2_points=4,
                                    profile_n=16, profile_trials=2)
        manager.run(tmp_path / run)
        outputs.append({name: (tmp_path / run / name).read_bytes()
                        for name in ("lemma2.csv", "profile.csv", "scaling.csv")})
    assert outputs[0] == outputs[1]


@pytest.mark.slow
def test_lemma2_acceptance():
    cfg = GeometryConfig()
    points = random_lattice_points(16, cfg, seed=derive_seeds(0, 1)[0])
    rows = lemma2_monte_carlo(points, 5000, seed=1, geometry=cfg)
    eligible, flagged = flag_summary(rows, 100)
    assert eligible > 0
    assert flagged <= 0.01 * eligible


@pytest.mark.slow
def test_scaling_acceptance():
    rows = work_scaling([2 ** 10, 2 ** 12, 2 ** 14, 2 ** 16], trials=10, seed=0)
    assert scaling_ratio_spread(rows) < 1.5


@pytest.mark.slow
def test_profile_acceptance():
    c = fit_profile_constant(per_iteration_profile(1024, trials=50, seed=1))
    profile = per_iteration_profile(4096, trials=50, seed=2)
    assert profile_violations(profile, c, slack=1.5) == []
    assert is_decreasing_trend(profile)
