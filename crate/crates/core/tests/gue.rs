use gauss_quad::GaussLegendre;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use sixvertex_core::gue::*;

fn legendre(a: f64, b: f64, n: usize) -> Vec<(f64, f64)> {
    GaussLegendre::new(n)
        .unwrap()
        .into_node_weight_pairs()
        .into_iter()
        .map(|(x, w)| (0.5 * (b - a) * x + 0.5 * (b + a), 0.5 * (b - a) * w))
        .collect()
}

/// Composite Gauss-Legendre on [a, b] split into `pieces` panels.
fn panels(a: f64, b: f64, pieces: usize, n: usize) -> Vec<(f64, f64)> {
    let h = (b - a) / pieces as f64;
    (0..pieces).flat_map(|i| legendre(a + i as f64 * h, a + (i + 1) as f64 * h, n)).collect()
}

#[test]
fn density_normalizes() {
    let one: f64 = panels(-12.0, 12.0, 24, 20).iter().map(|(x, w)| w * hermite_density(&[*x])).sum();
    assert!((one - 1.0).abs() < 1e-6, "k=1: {one}");
    let mut two = 0.0;
    for (x2, w2) in panels(-12.0, 12.0, 24, 20) {
        for (x1, w1) in panels(-12.0, x2, 24, 20) {
            two += w1 * w2 * hermite_density(&[x1, x2]);
        }
    }
    assert!((two - 1.0).abs() < 1e-6, "k=2: {two}");
}

#[test]
fn density_closed_form_and_indicator() {
    let x = 0.37;
    let expect = (-x * x / 2.0f64).exp() / (2.0 * std::f64::consts::PI).sqrt();
    assert!((hermite_density(&[x]) - expect).abs() < 1e-15);
    assert_eq!(hermite_density(&[1.0, 0.5]), 0.0);
    assert_eq!(hermite_density(&[0.5, 0.5]), 0.0);
}

#[test]
fn one_by_one_is_standard_normal() {
    let xs: Vec<f64> = sample_gue_corners_batch(1, 100_000, 11).iter().map(|c| c.rows[0][0]).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
    assert!((var - 1.0).abs() < 0.02, "variance {var}");
}

#[test]
fn corners_interlace() {
    let batch = sample_gue_corners_batch(4, 100_000, 5);
    assert_eq!(batch.iter().map(|c| c.interlacing_violations()).sum::<usize>(), 0);
    assert!(batch.iter().all(|c| c.depth() == 4 && c.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))));
}

#[test]
fn batch_is_thread_count_independent() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| sample_gue_corners_batch(3, 10_000, 99))
    };
    assert_eq!(run(1), run(3));
}

/// Largest eigenvalue of the 2x2 case: its CDF by quadrature of the joint density.
#[test]
fn top_eigenvalue_matches_density_marginal() {
    let grid: Vec<f64> = (0..=1600).map(|i| -8.0 + i as f64 * 0.01).collect();
    let cdf_at = |t: f64| -> f64 {
        let mut acc = 0.0;
        for (x2, w2) in panels(-10.0, t, 8, 16) {
            for (x1, w1) in panels(-10.0, x2, 8, 16) {
                acc += w1 * w2 * hermite_density(&[x1, x2]);
            }
        }
        acc
    };
    let table: Vec<f64> = grid.iter().map(|&t| cdf_at(t)).collect();
    let reference = |x: f64| {
        if x <= grid[0] {
            return 0.0;
        }
        if x >= *grid.last().unwrap() {
            return 1.0;
        }
        let i = ((x - grid[0]) / 0.01) as usize;
        let f = (x - grid[i]) / 0.01;
        table[i] * (1.0 - f) + table[i + 1] * f
    };
    let top: Vec<f64> = sample_gue_corners_batch(2, 100_000, 21).iter().map(|c| c.rows[1][1]).collect();
    let ks = ks_distance(&EmpiricalDistribution::from_samples(&top).unwrap(), reference);
    assert!(ks < 0.01, "ks {ks}");
}

#[test]
fn ks_self_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let n = 100_000;
    let bound = 3.0 * 1.36 / (n as f64).sqrt();
    let mut pass = 0;
    for _ in 0..100 {
        let xs: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
        if ks_distance(&EmpiricalDistribution::from_samples(&xs).unwrap(), standard_normal_cdf) < bound {
            pass += 1;
        }
    }
    assert!(pass >= 99, "{pass}/100");
    let ks: Vec<f64> = [1_000, 10_000, 100_000]
        .iter()
        .map(|&n| {
            let xs: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
            ks_distance(&EmpiricalDistribution::from_samples(&xs).unwrap(), standard_normal_cdf)
        })
        .collect();
    assert!(ks[0] > ks[1] && ks[1] > ks[2], "{ks:?}");
}

#[test]
fn ks_point_mass_and_errors() {
    let p = 0.3;
    let emp = EmpiricalDistribution::from_samples(&[p]).unwrap();
    let f = standard_normal_cdf(p);
    assert!((ks_distance(&emp, standard_normal_cdf) - f.max(1.0 - f)).abs() < 1e-15);
    assert!(EmpiricalDistribution::from_samples(&[]).is_err());
    let a = EmpiricalDistribution::from_samples(&[0.0, 1.0]).unwrap();
    let b = EmpiricalDistribution::from_samples(&[0.0, 1.0]).unwrap();
    assert_eq!(ks_two_sample(&a, &b), 0.0);
}

#[test]
fn gue_comparison_k1_small_grid() {
    let p = sixvertex_core::ModelParams::new(0.5, 2.0, 0.25).unwrap();
    let r = compare_theorem_main(1, &[25, 50, 100], &p, 0, 1, 1e-8).unwrap();
    let ks: Vec<f64> = r.rows.iter().map(|r| r.ks).collect();
    assert!(r.monotone, "{ks:?}");
    assert!(ks.windows(2).all(|w| w[1] < w[0]));
}
