//! Acceptance run: one PASS/FAIL line per criterion. Oracles are computed
//! here, independently of the library routes they check, wherever that is
//! practical. Runs without the libtest harness so every line is printed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ContinuousCDF, Normal};

use sixvertex_core::asymptotics::{
    a_m_scaled, b_m_contour, critical_point_report, descent_report, hermite_h, AsymptoticConstants, CompositeContour,
};
use sixvertex_core::boundary::{f_contour, f_direct, f_direct_table, CircleContour};
use sixvertex_core::gue::{compare_theorem_main, hermite_density, sample_gue_corners_batch};
use sixvertex_core::measure::{top_row_pmf, GibbsConditional};
use sixvertex_core::paths::{
    collection_weight, count_collections_formula, enumerate_f_collections, is_typical, meets_lower_bound,
    typical_lower_bound,
};
use sixvertex_core::signature::{signatures_bounded, strict_signatures};
use sixvertex_core::symfunc::{
    f_eval, f_geometric, f_symmetrization, f_table, gc_eval, gc_geometric, real_spectral, verify_cauchy,
};
use sixvertex_core::{ModelParams, Signature, SpinParams};

/// Criteria that fail at the running example and are analysed in the project
/// notes. The run still prints FAIL for them; any other failure is fatal.
const KNOWN_RED: &[usize] = &[12];

fn example() -> ModelParams {
    ModelParams::new(0.5, 2.0, 0.25).unwrap()
}

// ---------------------------------------------------------------------------
// Independent oracles

/// Higher-spin vertex weight typed out from its four-branch definition.
fn oracle_w(i1: i64, j1: i64, i2: i64, j2: i64, u: f64, q: f64, s: f64) -> f64 {
    let den = 1.0 - s * u;
    if i1 + j1 != i2 + j2 || !(0..=1).contains(&j1) || !(0..=1).contains(&j2) {
        return 0.0;
    }
    match (j1, j2) {
        (0, 0) => (1.0 - s * q.powi(i1 as i32) * u) / den,
        (1, 1) => (u - s * q.powi(i1 as i32)) / den,
        (0, 1) => (1.0 - s * s * q.powi(i2 as i32)) * u / den,
        _ => (1.0 - q.powi(i1 as i32 + 1)) / den,
    }
}

/// One F row from `below` (len n) to `above` (len n+1), with a path entering
/// on the left. None if no valid row configuration exists.
fn oracle_row(below: &[i64], above: &[i64], u: f64, q: f64, s: f64) -> Option<f64> {
    let top = above.iter().chain(below).copied().max().unwrap_or(0);
    let mut h = 1;
    let mut acc = 1.0;
    for x in 0..=top {
        let i1 = below.iter().filter(|&&b| b == x).count() as i64;
        let i2 = above.iter().filter(|&&a| a == x).count() as i64;
        let j2 = i1 + h - i2;
        if !(0..=1).contains(&j2) {
            return None;
        }
        acc *= oracle_w(i1, h, i2, j2, u, q, s);
        h = j2;
    }
    (h == 0).then_some(acc)
}

/// Weakly decreasing sequences of length n with parts in 0..=hi.
fn multisets(n: usize, hi: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=hi {
        for mut rest in multisets(n - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All chains () = κ^0, κ^1, ..., κ^k = λ with a valid F row between
/// consecutive members, with the product of row weights (row j uses u[j-1]).
fn oracle_chains(lambda: &[i64], u: &[f64], q: f64, s: f64) -> Vec<(Vec<Vec<i64>>, f64)> {
    let k = lambda.len();
    let hi = lambda.first().copied().unwrap_or(0);
    let mut out = Vec::new();
    fn rec(
        j: usize,
        prev: Vec<i64>,
        chain: &mut Vec<Vec<i64>>,
        w: f64,
        ctx: (&[i64], &[f64], f64, f64, i64),
        out: &mut Vec<(Vec<Vec<i64>>, f64)>,
    ) {
        let (lambda, u, q, s, hi) = ctx;
        let k = lambda.len();
        let candidates = if j == k { vec![lambda.to_vec()] } else { multisets(j, hi) };
        for next in candidates {
            if let Some(rw) = oracle_row(&prev, &next, u[j - 1], q, s) {
                chain.push(next.clone());
                if j == k {
                    out.push((chain.clone(), w * rw));
                } else {
                    rec(j + 1, next, chain, w * rw, ctx, out);
                }
                chain.pop();
            }
        }
    }
    if k == 0 {
        return vec![(vec![], 1.0)];
    }
    rec(1, vec![], &mut Vec::new(), 1.0, (lambda, u, q, s, hi), &mut out);
    out
}

fn oracle_f(lambda: &[i64], u: &[f64], q: f64, s: f64) -> f64 {
    oracle_chains(lambda, u, q, s).iter().map(|c| c.1).sum()
}

fn qpoch(a: f64, q: f64, n: usize) -> f64 {
    (0..n).map(|i| 1.0 - a * q.powi(i as i32)).product()
}

fn oracle_z(params: &ModelParams, k: usize, m: usize) -> f64 {
    let (q, s) = (params.q, params.s());
    let mut z = qpoch(q, q, k);
    for u in params.row_parameters(k).unwrap() {
        z *= (1.0 - u / s) / (1.0 - s * u);
        for v in params.column_parameters(m).unwrap() {
            z *= (1.0 - q * u * v) / (1.0 - u * v);
        }
    }
    z
}

fn oracle_typical_weight(lambda: &[i64], u: f64, q: f64, s: f64) -> f64 {
    let k = lambda.len() as i32;
    let size: i64 = lambda.iter().sum();
    let den = 1.0 - s * u;
    let c2 = |n: i32| n * (n - 1) / 2;
    ((1.0 - q) / den).powi(c2(k + 1)) * ((1.0 - 1.0 / q) * u / den).powi(c2(k)) * ((u - s) / den).powi(size as i32 - c2(k))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn crel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

// ---------------------------------------------------------------------------

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn c01_route_agreement() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for _ in 0..50 {
        let q: f64 = rng.gen_range(0.15..0.85);
        let s = q.powf(-0.5);
        let us: Vec<f64> = (0..3).map(|_| s * rng.gen_range(1.05..3.0)).collect();
        let spin = SpinParams::new(q, s).unwrap();
        let uc = real_spectral(&us);
        for k in 1..=3 {
            for lam in strict_signatures(k, 0, 6) {
                let oracle = oracle_f(lam.parts(), &us[..k], q, s);
                let dp = f_eval(&lam, &Signature::empty(), &uc[..k], &spin).unwrap();
                let sym = f_symmetrization(&lam, &uc[..k], &spin).unwrap();
                let en: Complex64 = enumerate_f_collections(&Signature::empty(), &lam, k)
                    .unwrap()
                    .iter()
                    .map(|pc| collection_weight(pc, &uc[..k], &spin))
                    .sum();
                let o = Complex64::from(oracle);
                worst = worst.max(crel(dp, o)).max(crel(sym, o)).max(crel(en, o));
                cases += 1;
            }
        }
    }
    verdict(worst < 1e-10, format!("{cases} cases over 50 draws, worst rel error {worst:.2e} (bound 1e-10)"))
}

fn c02_cauchy() -> Verdict {
    let p = example();
    let (q, s) = (p.q, p.s());
    let spin = p.spin();
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for (nu, nv) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let us = &[2.0, 2.2][..nu];
        let vs = &[0.25, 0.2][..nv];
        let r = verify_cauchy(&real_spectral(us), &real_spectral(vs), &spin, 1e-10).unwrap();
        let mut rhs = qpoch(q, q, nu);
        for &u in us {
            rhs /= 1.0 - s * u;
            for &v in vs {
                rhs *= (1.0 - q * u * v) / (1.0 - u * v);
            }
        }
        let e = rel(r.lhs[0], rhs);
        worst = worst.max(e);
        ok &= e < 1e-8 && r.tail_estimate < 1e-8 && r.lhs[1].abs() < 1e-12 * rhs.abs();
    }
    verdict(ok, format!("N,K <= 2: worst rel error vs product {worst:.2e}, tails certified (bound 1e-8)"))
}

fn c03_geometric() -> Verdict {
    let spin = SpinParams::new(0.5, 2f64.sqrt()).unwrap();
    let (q, s) = (spin.q, spin.s);
    let u = 2.3;
    let mut worst: f64 = 0.0;
    for big_n in 1..=3usize {
        let xs: Vec<f64> = (0..big_n).map(|i| u * q.powi(i as i32)).collect();
        for mu in signatures_bounded(big_n, 4) {
            let mut closed = qpoch(q, q, big_n);
            for (x, &m) in xs.iter().zip(mu.parts()) {
                closed *= ((x - s) / (1.0 - s * x)).powi(m as i32) / (1.0 - s * x);
            }
            let dp = f_eval(&mu, &Signature::empty(), &real_spectral(&xs), &spin).unwrap().re;
            let lib = f_geometric(&mu, Complex64::from(u), &spin).re;
            worst = worst.max(rel(dp, closed)).max(rel(lib, closed));
        }
        // the G^c closed form degenerates at s^2 = 1/q; use a generic spin
        let gspin = SpinParams::new(0.5, 1.7).unwrap();
        let v = 0.3;
        let vs: Vec<f64> = (0..big_n).map(|i| v * q.powi(i as i32)).collect();
        for n in 1..=3 {
            for nu in signatures_bounded(n, 4) {
                let dp = gc_eval(&nu, &Signature::zeros(n), &real_spectral(&vs), &gspin).unwrap();
                let cf = gc_geometric(&nu, Complex64::from(v), big_n, &gspin);
                worst = worst.max((dp - cf).norm() / dp.norm().max(cf.norm()).max(1e-12));
            }
        }
    }
    verdict(worst < 1e-10, format!("N <= 3: worst rel error {worst:.2e} (bound 1e-10)"))
}

fn c04_counting() -> Verdict {
    let p = example();
    let (q, s) = (p.q, p.s());
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 1..=4 {
        for lam in strict_signatures(k, 0, 8) {
            let formula = count_collections_formula(&lam).unwrap();
            let all = enumerate_f_collections(&Signature::empty(), &lam, k).unwrap();
            // structural count from the oracle row walk; u only enters the weights
            let brute = oracle_chains(lam.parts(), &vec![p.u; k], q, s).len();
            let typical = all.iter().filter(|pc| is_typical(pc)).count();
            let bound = typical_lower_bound(&lam).unwrap();
            if formula.to_string() != brute.to_string()
                || all.len() != brute
                || !meets_lower_bound(typical, &bound)
            {
                bad.push(format!("{lam}: formula {formula}, brute {brute}, library {}", all.len()));
            }
            checked += 1;
        }
    }
    verdict(bad.is_empty(), format!("{checked} strict λ with k <= 4, λ_1 <= 8; mismatches: {bad:?}"))
}

fn c05_typical_weight() -> Verdict {
    let p = example();
    let (q, s, u) = (p.q, p.s(), p.u);
    let spin = p.spin();
    let mut worst: f64 = 0.0;
    let mut n = 0;
    for k in 1..=3 {
        let uk = real_spectral(&vec![u; k]);
        for lam in strict_signatures(k, 0, 8) {
            let closed = oracle_typical_weight(lam.parts(), u, q, s);
            for pc in enumerate_f_collections(&Signature::empty(), &lam, k).unwrap() {
                if is_typical(&pc) {
                    worst = worst.max(rel(collection_weight(&pc, &uk, &spin).re, closed));
                    n += 1;
                }
            }
        }
    }
    verdict(n > 0 && worst < 1e-12, format!("{n} typical collections, worst rel error {worst:.2e} (bound 1e-12)"))
}

fn c06_boundary() -> Verdict {
    let p = example();
    let s = p.s();
    let mut worst_route: f64 = 0.0;
    let mut worst_radius: f64 = 0.0;
    let mut refused = 0;
    for m in [1usize, 2, 5, 10, 20] {
        let v = real_spectral(&p.column_parameters(m).unwrap());
        let hi = 1.0 / p.v;
        let mid = CircleContour::midpoint(s, &v).unwrap();
        let low = CircleContour::new(s + 0.2 * (hi - s), s, &v).unwrap();
        for k in 1..=2 {
            for lam in strict_signatures(k, 1, 7) {
                let d = f_direct(&lam, &v, &p);
                let a = f_contour(&lam, &v, &p, mid, 1e-12).unwrap().value;
                let b = f_contour(&lam, &v, &p, low, 1e-12).unwrap().value;
                worst_route = worst_route.max(crel(a, d)).max(crel(b, d));
                worst_radius = worst_radius.max(crel(a, b));
            }
        }
    }
    // close to the poles at 1/v the quadrature cancels away every digit; it must say so
    let v = real_spectral(&p.column_parameters(20).unwrap());
    let near = CircleContour::new(s + 0.9 * (1.0 / p.v - s), s, &v).unwrap();
    for lam in strict_signatures(2, 1, 7) {
        refused += usize::from(f_contour(&lam, &v, &p, near, 1e-12).is_err());
    }
    verdict(
        worst_route < 1e-7 && worst_radius < 1e-7 && refused == 21,
        format!(
            "k <= 2, M <= 20: contour vs direct {worst_route:.2e}, midpoint vs 0.2 radius {worst_radius:.2e} (bound 1e-7); ill-conditioned radius refused {refused}/21"
        ),
    )
}

fn c07_partition() -> Verdict {
    let p = example();
    let spin = p.spin();
    let mut worst_z: f64 = 0.0;
    for k in 1..=2 {
        let u = real_spectral(&p.row_parameters(k).unwrap());
        let ft = f_table(&Signature::empty(), &u, &spin, 70);
        for m in 0..=4 {
            let v = real_spectral(&p.column_parameters(m).unwrap());
            let bt = f_direct_table(k, &v, &p, 70);
            let sum: f64 = bt.iter().map(|(lam, f)| (f * ft.get(lam).copied().unwrap_or_default()).re).sum();
            worst_z = worst_z.max(rel(sum, oracle_z(&p, k, m)));
        }
    }
    let mut worst_mass: f64 = 0.0;
    for k in 1..=2 {
        for m in [0usize, 1, 5, 10, 20, 35, 50] {
            let pmf = top_row_pmf(k, m, &p, 1e-9).unwrap();
            worst_mass = worst_mass.max((pmf.mass - 1.0).abs());
        }
    }
    verdict(
        worst_z < 1e-8 && worst_mass < 1e-6,
        format!("Z: worst rel error {worst_z:.2e} (bound 1e-8, k <= 2, M <= 4); pmf |mass - 1| <= {worst_mass:.2e} (bound 1e-6, M <= 50)"),
    )
}

fn oracle_big_g(z: Complex64, p: &ModelParams, a: f64) -> Complex64 {
    let (q, s, u, v) = (p.q, p.s(), p.u, p.v);
    let r = (1.0 - s * z) / (z - s) * ((u - s) / (1.0 - s * u));
    let e = (1.0 - q * z * v) / (1.0 - z * v) * ((1.0 - u * v) / (1.0 - q * u * v));
    a * r.ln() + e.ln()
}

fn c08_constants() -> Verdict {
    let p = example();
    let c = AsymptoticConstants::new(&p).unwrap();
    let reference = [0.357, -0.934, 0.525, 1.097];
    let got = [c.a, c.b, c.c, c.d];
    let example_ok = got.iter().zip(reference).all(|(g, r)| (g - r).abs() < 5e-4);
    let mut grid = 0;
    let mut sign_bad = 0;
    for q in [0.2f64, 0.35, 0.5, 0.65, 0.8] {
        let s = q.powf(-0.5);
        for uf in [1.1, 1.3, 1.6, 2.0, 3.0] {
            for vf in [0.2, 0.7] {
                let u = s * uf;
                let k = AsymptoticConstants::new(&ModelParams::new(q, u, vf / u).unwrap()).unwrap();
                grid += 1;
                if !(k.a > 0.0 && k.b < 0.0 && k.c > 0.0 && k.d > 0.0) {
                    sign_bad += 1;
                }
            }
        }
    }
    let cp = critical_point_report(&p).unwrap();
    let lib_ok = cp.big_g_at_u < 1e-6
        && cp.g_at_u < 1e-6
        && cp.big_g_prime_fd.abs() < 1e-6
        && (cp.big_g_second_fd - cp.two_c).abs() < 1e-4 * cp.two_c.abs()
        && (cp.g_prime_fd - cp.b).abs() < 1e-6;
    // own central differences of the phase, typed out above
    let g = |x: f64| oracle_big_g(Complex64::from(x), &p, c.a).re;
    let h = 1e-4;
    let u = p.u;
    let g1 = (g(u + h) - g(u - h)) / (2.0 * h);
    let g2 = (g(u + 10.0 * h) - 2.0 * g(u) + g(u - 10.0 * h)) / (100.0 * h * h);
    let own_ok = g(u).abs() < 1e-6 && g1.abs() < 1e-6 && (g2 - 2.0 * c.c).abs() < 1e-4 * 2.0 * c.c;
    verdict(
        example_ok && sign_bad == 0 && grid == 50 && lib_ok && own_ok,
        format!(
            "a,b,c,d = {:.4}, {:.4}, {:.4}, {:.4}; signs ok on {}/{grid}; G'(u) = {g1:.1e}, G''(u)/2c - 1 = {:.1e}",
            c.a,
            c.b,
            c.c,
            c.d,
            grid - sign_bad,
            g2 / (2.0 * c.c) - 1.0
        ),
    )
}

fn c09_descent() -> Verdict {
    let p = example();
    let c = AsymptoticConstants::new(&p).unwrap();
    let r = descent_report(&p, 1000, 0.1).unwrap();
    let pts = CompositeContour::new(p.u).sample_points(1000);
    let mut max_re = f64::NEG_INFINITY;
    let mut argmax = Complex64::from(0.0);
    let mut delta = f64::NEG_INFINITY;
    for &z in &pts {
        let re = oracle_big_g(z, &p, c.a).re;
        if re > max_re {
            max_re = re;
            argmax = z;
        }
        if (z - p.u).norm() > 0.1 {
            delta = delta.max(re);
        }
    }
    let dist = (argmax - p.u).norm();
    verdict(
        pts.len() >= 1000 && max_re <= 1e-12 && dist < 1e-9 && delta < 0.0 && r.max_re_g <= 1e-12 && r.delta < 0.0,
        format!("{} points: max Re G = {max_re:.1e} at |z-u| = {dist:.1e}; δ outside the 0.1-disc = {delta:.4}", pts.len()),
    )
}

fn c10_bm() -> Verdict {
    let p = example();
    let c = AsymptoticConstants::new(&p).unwrap();
    let grid = [100usize, 400, 1600];
    let lim1 = (2.0 * PI).powf(-0.5);
    let e1: Vec<f64> = grid.iter().map(|&m| (b_m_contour(&[0.0], m, &p, 1e-10).unwrap().value - lim1).abs() / lim1).collect();
    let x = [-1.0, 1.0];
    let lim2 = (x[1] - x[0]) / c.d / (2.0 * PI) * (-(x[0] * x[0] + x[1] * x[1]) / 2.0f64).exp();
    let b2 = b_m_contour(&x, 1600, &p, 1e-10).unwrap().value;
    let e2 = (b2 - lim2).abs() / lim2;
    let dec = e1.windows(2).all(|w| w[1] < w[0]);
    verdict(
        dec && e1[2] < 0.05 && e2 < 0.10,
        format!(
            "k=1 rel errors {:.4}, {:.4}, {:.4} (final bound 5%); k=2 at M=1600 {e2:.4} (bound 10%)",
            e1[0], e1[1], e1[2]
        ),
    )
}

fn c11_am() -> Verdict {
    let p = example();
    let x = [-1.0, 1.0];
    let limit = 2.0; // (x_2 - x_1) / 1
    let vals: Vec<f64> = [100usize, 400, 1600].iter().map(|&m| a_m_scaled(&x, m, &p).unwrap().value).collect();
    let errs: Vec<f64> = vals.iter().map(|v| (v - limit).abs()).collect();
    let bound = vals.iter().fold(0.0f64, |b, v| b.max(v.abs()));
    verdict(
        errs.windows(2).all(|w| w[1] < w[0]) && bound < 10.0,
        format!("A_M = {:.4}, {:.4}, {:.4} -> {limit}; max |A_M| = {bound:.3}", vals[0], vals[1], vals[2]),
    )
}

fn c12_gue_limit() -> Verdict {
    let p = example();
    let c = AsymptoticConstants::new(&p).unwrap();
    let normal = Normal::new(0.0, 1.0).unwrap();
    let mut ks1 = Vec::new();
    for m in [50usize, 100, 200, 400] {
        let pmf = top_row_pmf(1, m, &p, 1e-10).unwrap();
        let scale = c.d * (m as f64).sqrt();
        let mut cum = 0.0;
        let mut ks: f64 = 0.0;
        for (mu, pr) in &pmf.entries {
            let y = (mu.first() as f64 - c.a * m as f64) / scale;
            let f = normal.cdf(y);
            ks = ks.max((cum - f).abs());
            cum += pr;
            ks = ks.max((cum - f).abs());
        }
        ks1.push(ks);
    }
    let lib1 = compare_theorem_main(1, &[50, 100, 200, 400], &p, 0, 1, 1e-10).unwrap();
    let lib_agrees = [50usize, 100, 200, 400].iter().zip(&ks1).all(|(&m, k)| (lib1.ks_at(m, "1.1").unwrap() - k).abs() < 1e-9);
    let k1_ok = ks1.windows(2).all(|w| w[1] < w[0]) && ks1[3] < 0.05 && lib_agrees;

    let r2 = compare_theorem_main(2, &[400], &p, 100_000, 7, 1e-9).unwrap();
    let ks21 = r2.ks_at(400, "2.1").unwrap();
    let ks22 = r2.ks_at(400, "2.2").unwrap();
    let k2_ok = ks21 < 0.08 && ks22 < 0.08 && r2.interlacing_violations == 0;
    verdict(
        k1_ok && k2_ok,
        format!(
            "k=1 KS {:.4}, {:.4}, {:.4}, {:.4} (decreasing, final bound 0.05); k=2, M=400, 1e5 samples: KS(Y^2_1) = {ks21:.4}, KS(Y^2_2) = {ks22:.4} (bound 0.08); interlacing violations {}",
            ks1[0], ks1[1], ks1[2], ks1[3], r2.interlacing_violations
        ),
    )
}

/// GT patterns enumerated here: strict rows of lengths 1..k, weak interlacing.
fn oracle_gt(lambda: &[i64]) -> Vec<Vec<Vec<i64>>> {
    fn below(row: &[i64]) -> Vec<Vec<i64>> {
        // κ with row_{i+1} <= κ_i <= row_i, strictly decreasing
        let n = row.len() - 1;
        let mut out = vec![vec![]];
        for i in 0..n {
            let mut next = Vec::new();
            for pre in &out {
                for x in row[i + 1]..=row[i] {
                    if pre.last().is_none_or(|&l| x < l) {
                        let mut v = pre.clone();
                        v.push(x);
                        next.push(v);
                    }
                }
            }
            out = next;
        }
        out
    }
    let mut pats = vec![vec![lambda.to_vec()]];
    for _ in 1..lambda.len() {
        let mut next = Vec::new();
        for pat in &pats {
            for r in below(pat.last().unwrap()) {
                let mut p2 = pat.clone();
                p2.push(r);
                next.push(p2);
            }
        }
        pats = next;
    }
    pats.into_iter().map(|mut p| {
        p.reverse();
        p
    }).collect()
}

fn c13_gibbs() -> Verdict {
    let p = example();
    let (q, s, u) = (p.q, p.s(), p.u);
    let n = 100_000;
    let mut outside = Vec::new();
    let mut total_cells = 0;
    for lam in [vec![4i64, 1], vec![6, 3], vec![5, 3, 1], vec![6, 4, 2]] {
        let pats = oracle_gt(&lam);
        let weights: Vec<f64> = pats
            .iter()
            .map(|pat| {
                let mut w = 1.0;
                let mut prev: Vec<i64> = vec![];
                for row in pat {
                    w *= oracle_row(&prev, row, u, q, s).unwrap_or(0.0);
                    prev = row.clone();
                }
                w
            })
            .collect();
        let z: f64 = weights.iter().sum();
        let oracle: BTreeMap<Vec<Vec<i64>>, f64> = pats.into_iter().zip(weights.iter().map(|w| w / z)).collect();

        let g = GibbsConditional::new(&Signature::new(lam.clone()).unwrap(), &p).unwrap();
        let lib_set: BTreeSet<Vec<Vec<i64>>> =
            g.patterns.iter().map(|pt| pt.rows().iter().map(|r| r.parts().to_vec()).collect()).collect();
        let oracle_set: BTreeSet<_> = oracle.iter().filter(|(_, &w)| w != 0.0).map(|(k, _)| k.clone()).collect();
        if lib_set != oracle_set {
            outside.push(format!("{lam:?}: pattern sets differ ({} vs {})", lib_set.len(), oracle_set.len()));
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut freq: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        for _ in 0..n {
            let pt = g.sample(&mut rng);
            *freq.entry(pt.rows().iter().map(|r| r.parts().to_vec()).collect()).or_default() += 1;
        }
        for (pat, &pr) in &oracle {
            let f = *freq.get(pat).unwrap_or(&0) as f64 / n as f64;
            let sigma = (pr * (1.0 - pr) / n as f64).sqrt();
            total_cells += 1;
            if (f - pr).abs() > 3.0 * sigma + 1e-12 {
                outside.push(format!("{pat:?}: {f} vs {pr}"));
            }
        }
    }
    verdict(outside.is_empty(), format!("{total_cells} pattern cells at 1e5 samples, outside 3σ: {outside:?}"))
}

fn c14_gue() -> Verdict {
    let batch = sample_gue_corners_batch(4, 100_000, 14);
    let violations: usize = batch.iter().map(|c| c.interlacing_violations()).sum();
    let ones = sample_gue_corners_batch(1, 100_000, 15);
    let xs: Vec<f64> = ones.iter().map(|c| c.rows[0][0]).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;

    // trapezoid over [-L, L]^k of the symmetrized density, divided by k!
    let (l, h) = (12.0, 0.02);
    let n = (2.0 * l / h) as usize;
    let grid: Vec<f64> = (0..=n).map(|i| -l + i as f64 * h).collect();
    let int1: f64 = grid.iter().map(|&x| hermite_density(&[x])).sum::<f64>() * h;
    let mut int2 = 0.0;
    for &x in &grid {
        for &y in &grid {
            if x != y {
                let pair = if x < y { [x, y] } else { [y, x] };
                int2 += hermite_density(&pair);
            }
        }
    }
    int2 *= h * h / 2.0;

    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut det_err: f64 = 0.0;
    for _ in 0..50 {
        let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let m: Vec<Vec<f64>> = x.iter().map(|&xi| (1..=3).map(|j| hermite_h(3 - j, xi)).collect()).collect();
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        let vdm = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
        det_err = det_err.max((det - vdm).abs() / vdm.abs().max(1.0));
    }
    verdict(
        violations == 0 && (var - 1.0).abs() < 0.02 && (int1 - 1.0).abs() < 1e-6 && (int2 - 1.0).abs() < 1e-6 && det_err < 1e-10,
        format!(
            "interlacing violations {violations} (k=4, 1e5); k=1 variance {var:.4}; density integrals {:.1e}, {:.1e} from 1; det vs Vandermonde {det_err:.1e}",
            (int1 - 1.0).abs(),
            (int2 - 1.0).abs()
        ),
    )
}

fn csv_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "csv"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap()))
        .collect();
    v.sort();
    v
}

fn c15_reproducibility() -> Verdict {
    let root = tempfile::tempdir().unwrap();
    let cfg = root.path().join("config.json");
    fs::write(&cfg, r#"{"k": 2, "m": 40, "m_grid": [30, 60], "n_samples": 5000, "seed": 2024}"#).unwrap();
    let mut notes = Vec::new();
    let mut ok = true;
    for cmd in ["identities", "sample", "bm-converge", "gue-compare"] {
        let mut runs = Vec::new();
        for (i, threads) in ["1", "3", "1"].iter().enumerate() {
            let dir = root.path().join(format!("{cmd}-{i}"));
            let status = Command::new(env!("CARGO_BIN_EXE_sixvertex"))
                .args([cmd, "--config", cfg.to_str().unwrap(), "--threads", threads, "--out", dir.to_str().unwrap()])
                .output()
                .unwrap()
                .status;
            ok &= status.code().is_some_and(|c| c <= 1);
            runs.push(csv_bytes(&dir));
        }
        let same = !runs[0].is_empty() && runs[0] == runs[1] && runs[1] == runs[2];
        ok &= same;
        notes.push(format!("{cmd}: {} files {}", runs[0].len(), if same { "identical" } else { "DIFFER" }));
    }
    verdict(ok, format!("threads 1/3/1 reruns: {}", notes.join("; ")))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Verdict); 15] = [
        (1, "route agreement", c01_route_agreement),
        (2, "Cauchy identity", c02_cauchy),
        (3, "geometric specialization", c03_geometric),
        (4, "collection counting", c04_counting),
        (5, "typical weight", c05_typical_weight),
        (6, "boundary function", c06_boundary),
        (7, "partition function and pmf mass", c07_partition),
        (8, "asymptotic constants and critical point", c08_constants),
        (9, "steepest descent", c09_descent),
        (10, "B_M convergence", c10_bm),
        (11, "A_M convergence", c11_am),
        (12, "GUE-corners limit at desk scale", c12_gue_limit),
        (13, "Gibbs conditional sampler", c13_gibbs),
        (14, "GUE reference", c14_gue),
        (15, "reproducibility", c15_reproducibility),
    ];
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        if filter.is_some_and(|f| f != id) {
            continue;
        }
        let t = Instant::now();
        let v = run();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id:>2} ({name}, {:.1}s): {}", t.elapsed().as_secs_f64(), v.detail);
        if !v.pass && !KNOWN_RED.contains(&id) {
            unexpected.push(id);
        }
        if v.pass && KNOWN_RED.contains(&id) {
            println!("       criterion {id} now passes; drop it from KNOWN_RED");
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
