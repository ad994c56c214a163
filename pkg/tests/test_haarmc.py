from fractions import Fraction

import numpy as np
import pytest

from weingarten.haarmc import (
    GridReport,
    MomentSpec,
    estimate_moment,
    grid_crosscheck,
    predict_moment,
    sample_haar,
)


def test_samples_are_unitary_to_tolerance():
    for seed in range(5):
        m = sample_haar("unitary", 4, seed)
        assert np.abs(m.conj().T @ m - np.eye(4)).max() < 1e-12


def test_samples_are_orthogonal_to_tolerance():
    for seed in range(5):
        m = sample_haar("orthogonal", 4, seed)
        assert np.abs(m.T @ m - np.eye(4)).max() < 1e-12
        assert np.abs(m.imag).max() == 0 if np.iscomplexobj(m) else True


def test_orthogonal_tau1_is_random_sign():
    values = [sample_haar("orthogonal", 1, seed)[0, 0] for seed in range(200)]
    assert all(abs(abs(v) - 1) < 1e-14 for v in values)
    positives = sum(v > 0 for v in values)
    # 200 fair coins: 4-sigma band around 100
    assert abs(positives - 100) <= 4 * np.sqrt(200 * 0.25)


def test_mean_square_entry_matches_wg_prediction():
    spec = MomentSpec("unitary", 3, (1,), (1,), (1,), (1,), samples=100_000, seed=5)
    report = estimate_moment(spec)
    assert report.exact == Fraction(1, 3)
    assert abs(report.z) <= 4


def test_left_invariance_statistical():
    # multiplying by a fixed unitary must not move the entry distribution
    rng = np.random.default_rng(99)
    fixed = sample_haar("unitary", 3, 1234)
    total = 0.0
    total_sq = 0.0
    count = 50_000
    batch = 4096
    remaining = count
    from weingarten.haarmc import _haar_batch

    while remaining:
        take = min(batch, remaining)
        q = fixed @ _haar_batch("unitary", 3, take, rng)
        x = (np.abs(q[:, 0, 0]) ** 2)
        total += float(x.sum())
        total_sq += float((x * x).sum())
        remaining -= take
    mean = total / count
    stderr = np.sqrt((total_sq / count - mean * mean) / (count - 1))
    assert abs(mean - 1 / 3) <= 4 * stderr


def test_predict_first_moments():
    assert predict_moment(MomentSpec("unitary", 3, (1,), (1,), (1,), (1,))) == Fraction(1, 3)
    assert predict_moment(MomentSpec("orthogonal", 4, (1, 1), (1, 1))) == Fraction(1, 4)


def test_predict_degree_two_two_patterns():
    # distinct rows and columns: only the identity pairing of factors matches
    diag = MomentSpec("unitary", 3, (1, 2), (1, 2), (1, 2), (1, 2))
    assert predict_moment(diag) == Fraction(1, 8)  # 1/(tau^2-1)
    # shared row: both permutations match on rows
    row = MomentSpec("unitary", 3, (1, 1), (1, 2), (1, 1), (1, 2))
    assert predict_moment(row) == Fraction(1, 12)  # 1/(tau(tau+1))
    # crossed conjugate rows: the transposition matches, giving Wg((2))
    cross = MomentSpec("unitary", 3, (1, 2), (1, 2), (2, 1), (1, 2))
    assert predict_moment(cross) == Fraction(-1, 24)
    # row multiset mismatch: no permutation matches, moment vanishes
    nomatch = MomentSpec("unitary", 3, (1, 1), (1, 2), (1, 2), (1, 2))
    assert predict_moment(nomatch) == 0


def test_predict_orthogonal_fourth_moment():
    spec = MomentSpec("orthogonal", 4, (1, 1, 1, 1), (1, 1, 1, 1))
    assert predict_moment(spec) == Fraction(1, 8)  # 3/(tau(tau+2))


def test_predict_unbalanced_and_odd_vanish():
    assert predict_moment(MomentSpec("unitary", 3, (1,), (1,))) == 0
    assert predict_moment(MomentSpec("unitary", 3, (1, 2), (1, 2), (1,), (1,))) == 0
    assert predict_moment(MomentSpec("orthogonal", 3, (1, 2, 1), (1, 2, 1))) == 0


def test_unbalanced_moment_estimates_near_zero():
    spec = MomentSpec("unitary", 3, (1,), (1,), (), (), samples=50_000, seed=3)
    report = estimate_moment(spec)
    assert report.exact == 0
    assert abs(report.z) <= 4


def test_odd_orthogonal_estimates_near_zero():
    spec = MomentSpec("orthogonal", 4, (1, 1, 2), (1, 1, 2), samples=50_000, seed=3)
    report = estimate_moment(spec)
    assert report.exact == 0
    assert abs(report.z) <= 4


def test_seeded_runs_bit_reproducible():
    spec = MomentSpec("unitary", 3, (1, 2), (1, 2), (1, 2), (1, 2), samples=20_000, seed=77)
    a = estimate_moment(spec)
    b = estimate_moment(spec)
    assert a.estimate == b.estimate
    assert a.stderr == b.stderr


def test_moment_spec_validation():
    with pytest.raises(ValueError):
        MomentSpec("special", 3, (1,), (1,))
    with pytest.raises(ValueError):
        MomentSpec("unitary", 3, (1, 2), (1,))
    with pytest.raises(ValueError):
        MomentSpec("unitary", 3, (4,), (1,), (1,), (1,))
    with pytest.raises(ValueError):
        MomentSpec("orthogonal", 3, (1,), (1,), (1,), (1,))
    with pytest.raises(ValueError):
        estimate_moment(MomentSpec("unitary", 2, (1,), (1,), (1,), (1,), samples=10))


def test_stderr_positive_for_generic_moment():
    spec = MomentSpec("orthogonal", 3, (1, 1), (1, 1), samples=1000, seed=0)
    report = estimate_moment(spec)
    assert report.stderr > 0


def test_grid_crosscheck_small_and_deterministic():
    a = grid_crosscheck("unitary", 1, 2, 20_000, seed=4)
    b = grid_crosscheck("unitary", 1, 2, 20_000, seed=4)
    assert a.max_abs_z == b.max_abs_z
    assert a.moment_count == 2**4
    assert a.ok
    o = grid_crosscheck("orthogonal", 1, 3, 20_000, seed=4)
    assert o.moment_count == 3**4
    assert o.ok


def test_grid_matches_single_moment_path():
    # the vectorized grid and the scalar path must agree on the same seed
    samples, seed = 30_000, 12
    grid = grid_crosscheck("unitary", 1, 2, samples, seed=seed)
    assert isinstance(grid, GridReport)
    single = estimate_moment(
        MomentSpec("unitary", 2, (1,), (1,), (1,), (1,), samples=samples, seed=seed)
    )
    assert abs(single.z) <= max(4.0, grid.max_abs_z + 0.5)


def test_report_json_fields():
    spec = MomentSpec("orthogonal", 4, (1, 1), (1, 1), samples=1000, seed=0)
    payload = estimate_moment(spec).to_json_dict()
    assert set(payload) == {"spec", "estimate", "stderr", "exact", "z", "samples", "seed"}
    assert payload["exact"] == "1/4"
    assert payload["samples"] == 1000
