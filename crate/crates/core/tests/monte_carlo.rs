//! Seeded Monte Carlo checks of the probabilistic steps, each against a
//! reference computed independently of the library.

mod common;

use common::*;
use orthogrid::experiments::{
    evaluate_optimal, run_dense_trials, run_optimal_campaign, trial_seed, DenseRow, ExperimentConfig, GridShape,
    RegimeConfig,
};
use orthogrid::*;
use statrs::distribution::{Binomial, DiscreteCDF};

/// Expected number of overflowing cells is `m² · P(Bin(n, 1/m²) > t²)`
/// exactly, by linearity; compare the campaign's mean against it.
#[test]
fn dense_overflow_count_matches_binomial_tail() {
    let dp = DenseParams::derive(10_000, 0.25).unwrap();
    let cells = (dp.m * dp.m) as f64;
    let tail = Binomial::new(1.0 / cells, dp.n as u64)
        .unwrap()
        .sf((dp.t * dp.t) as u64);
    let expected = cells * tail;
    let trials = run_dense_trials(&dp, 404, 300).unwrap();
    let row = DenseRow::from_trials(&dp, 404, &trials);
    // The count of overflowing cells has variance at most its mean here
    // (negatively correlated indicators), so 5 standard errors is generous.
    let tolerance = 5.0 * (expected / trials.len() as f64).sqrt();
    println!(
        "n = {}: mean overflowing cells {:.3}, binomial oracle {:.3} (± {:.3}); success rate {:.3}",
        dp.n, row.mean_overflow_cells, expected, tolerance, row.embed_success_rate
    );
    assert!((row.mean_overflow_cells - expected).abs() <= tolerance);
    // Success needs every cell below capacity; Markov's bound on the count
    // gives P(success) >= 1 - E[count] only, so check the crude upper side.
    assert!(row.embed_success_rate <= 1.0 - tail + 1e-12);
}

/// Occupancy of `m²` equal cells stays below `(1+δ)·n/m²` with
/// `δ = √(3 ln n / (n/m²))`.
#[test]
fn equal_size_occupancy_below_chernoff_level() {
    let (n, m) = (1_000_000usize, 100usize);
    let mu = n as f64 / (m * m) as f64;
    let delta = (3.0 * ln_n(n) / mu).sqrt();
    let level = (1.0 + delta) * mu;
    let mut within = 0;
    let mut worst = 0;
    for k in 0..100 {
        let ps = PointSet::sample(n, 0.001, trial_seed(17, n as u64, k)).unwrap();
        let max = equal_size_partition(&ps, m).unwrap().occupancy().into_iter().max().unwrap();
        worst = worst.max(max);
        if (max as f64) <= level {
            within += 1;
        }
    }
    println!("max occupancy {worst} against level {level:.1}; {within}/100 trials within");
    assert!(within >= 99);
}

#[test]
fn dense_embeddings_are_always_homomorphisms() {
    let dp = DenseParams::derive(1_000, 0.25).unwrap();
    let trials = run_dense_trials(&dp, 8, 100).unwrap();
    let row = DenseRow::from_trials(&dp, 8, &trials);
    println!("n = 1000: success rate {}", row.embed_success_rate);
    assert!(row.embed_success_rate > 0.0);
    assert_eq!(row.homomorphism_rate, Some(1.0));
    assert_eq!(row.verify_rate, Some(1.0));
    assert!(row.max_palette.unwrap() <= dp.palette_bound());
    assert!(row.min_palette.unwrap() >= ceil_sqrt(dp.n));
}

#[test]
fn strip_boundaries_at_four_hundred_points() {
    let op = OptimalParams::from_c(20, 1, 0.5).unwrap();
    let bound = 2.0 * ln_n(400) / 20.0;
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let ps = PointSet::sample(op.n, op.r, trial_seed(3, 400, k)).unwrap();
        let cp = equal_count_partition(&ps, 20, 1).unwrap();
        let report = check_deviation_bounds(&cp).unwrap();
        assert!((report.y_bound - bound).abs() < 1e-12);
        // Recompute the largest interior strip deviation from the sorted ys.
        let mut ys: Vec<f64> = ps.points().iter().map(|p| p.y).collect();
        ys.sort_by(f64::total_cmp);
        let direct = (1..20).map(|i| (ys[i * 20 - 1] - i as f64 / 20.0).abs()).fold(0.0, f64::max);
        assert!((report.max_y_dev - direct).abs() < 1e-15);
        worst = worst.max(direct);
    }
    println!("n = 400: max |y*_i - i/m| = {worst:.4} against {bound:.4}");
    assert!(worst <= bound);
}

/// Wherever the boundary bounds hold, the separation bound is below every
/// realised distance between the two cells.
#[test]
fn separation_bound_never_exceeds_realised_distance() {
    let (m, t) = (20, 5);
    let mut checked = 0;
    for k in 0..10 {
        let ps = PointSet::sample(m * m * t * t, 0.05, trial_seed(5, 10_000, k)).unwrap();
        let cp = equal_count_partition(&ps, m, t).unwrap();
        let members = cp.members();
        let pts = ps.points();
        for (a, b) in [((0, 0), (0, 19)), ((0, 0), (19, 19)), ((3, 4), (15, 4)), ((10, 0), (10, 19))] {
            let bound = min_cell_pair_distance(&cp, a, b).unwrap();
            let realised = members[a.0 * m + a.1]
                .iter()
                .flat_map(|&u| members[b.0 * m + b.1].iter().map(move |&v| pts[u].dist(&pts[v])))
                .fold(f64::INFINITY, f64::min);
            assert!(bound <= realised, "{a:?} {b:?}: {bound} > {realised}");
            checked += 1;
        }
    }
    assert_eq!(checked, 40);
}

fn lattice(side: usize, r: f64) -> PointSet {
    let s = side as f64;
    let points = (1..=side)
        .flat_map(|b| (1..=side).map(move |a| Point::new(a as f64 / s, b as f64 / s)))
        .collect();
    PointSet::new(points, r).unwrap()
}

#[test]
fn lattice_points_sit_on_the_ideal_boundaries() {
    let (m, t) = (6, 3);
    let ps = lattice(m * t, 0.05);
    let cp = equal_count_partition(&ps, m, t).unwrap();
    let report = check_deviation_bounds(&cp).unwrap();
    assert_eq!(report.max_y_dev, 0.0);
    assert_eq!(report.max_x_dev, 0.0);
    // Each point lands in the cell of its lattice position.
    for (v, &(i, j)) in cp.cell_of.iter().enumerate() {
        let (a, b) = (v % (m * t), v / (m * t));
        assert_eq!((i, j), (b / t, a / t));
    }
    let op = OptimalParams::from_c(m, t, 0.5).unwrap();
    let trial = evaluate_optimal(&ps, &op, 0).unwrap();
    assert!(trial.homomorphism_ok);
    assert_eq!((trial.max_x_dev, trial.max_y_dev), (0.0, 0.0));
}

/// A hand-picked instance inside Case 3: 81 lattice points, one per cell,
/// threshold reaching diagonal neighbours only.
#[test]
fn case_three_instance_gets_square_root_palette() {
    let ps = lattice(9, 0.16);
    let op = OptimalParams::with_d(9, 1, 1, 0.16).unwrap();
    assert!(op.in_case_three());
    let g = ps.graph();
    assert_eq!(edges_of(&g), all_pairs_edges(ps.points(), 0.16));
    let coloured = colour_rgg_optimal(&ps, &g, &op).unwrap();
    assert!(coloured.homomorphism_ok);
    assert!(verify(&g, &coloured.pair).unwrap().passed());
    assert_eq!(coloured.palette_size(), 9);
    assert_eq!(coloured.declared_palette, 9);
}

#[test]
fn optimal_regime_at_ten_thousand_points() {
    let cfg = ExperimentConfig {
        regime: RegimeConfig::Optimal {
            grid: vec![GridShape { m: 20, t: 5 }],
            c: 0.9,
            d: None,
        },
        trials: 100,
        base_seed: 21,
        thresholds: Default::default(),
        output: Default::default(),
    };
    let report = run_optimal_campaign(&cfg).unwrap();
    let row = &report.rows[0];
    println!("{row:?}");
    assert_eq!(row.d, 35);
    assert!(!row.case_three);
    assert_eq!(row.mean_palette, None);
    assert!(row.homomorphism_rate >= cfg.thresholds.min_homomorphism_rate);
}

#[test]
fn vacuous_x_bound_is_reported() {
    let cfg = ExperimentConfig {
        regime: RegimeConfig::Optimal {
            grid: vec![GridShape { m: 100, t: 1 }],
            c: 0.5,
            d: None,
        },
        trials: 2,
        base_seed: 1,
        thresholds: Default::default(),
        output: Default::default(),
    };
    let row = &run_optimal_campaign(&cfg).unwrap().rows[0];
    assert!((row.x_bound - 2.0 * ln_n(10_000) / 10.0).abs() < 1e-12);
    assert!(row.x_bound_vacuous);
    assert_eq!(row.x_pass_rate, 1.0);
}

#[test]
fn campaign_rows_respect_global_bounds() {
    let dp = DenseParams::derive(500, 0.2).unwrap();
    let trials = run_dense_trials(&dp, 2, 40).unwrap();
    let row = DenseRow::from_trials(&dp, 2, &trials);
    for rate in [Some(row.embed_success_rate), row.homomorphism_rate, row.verify_rate].into_iter().flatten() {
        assert!((0.0..=1.0).contains(&rate));
    }
    for t in trials.iter().filter(|t| t.embedded) {
        let p = t.palette.unwrap();
        assert!(p >= ceil_sqrt(500) && p <= dp.palette_bound());
    }
}
