//! The six runs behind the subcommands. Each returns tables, a summary and
//! the list of violated checks; nothing here touches the filesystem.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sixvertex_core::asymptotics::{a_m_scaled, b_m_contour, critical_point_report, descent_report, AsymptoticConstants};
use sixvertex_core::boundary::{f_contour, f_direct, CircleContour};
use sixvertex_core::gue::compare_theorem_main;
use sixvertex_core::measure::{sample_pattern, top_row_pmf, TopRowSampler};
use sixvertex_core::paths::{
    collection_weight, count_collections_formula, enumerate_f_collections, is_typical, meets_lower_bound,
    typical_lower_bound, typical_weight,
};
use sixvertex_core::qseries::conjugation_constant;
use sixvertex_core::signature::{signatures_bounded, strict_signatures};
use sixvertex_core::symfunc::{
    f_eval, f_geometric, f_symmetrization, g_eval, gc_eval, gc_geometric, real_spectral, verify_cauchy,
};
use sixvertex_core::{ModelParams, Result, Signature, SpinParams};

use crate::config::ExperimentConfig;
use crate::output::{join, num, Outcome, Table};

fn rel(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 { 0.0 } else { (a - b).norm() / scale }
}

/// Relative error with an absolute floor for values that vanish identically.
fn rel_floor(a: Complex64, b: Complex64, floor: f64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(floor)
}

struct IdentityRows {
    table: Table,
    worst: f64,
}

impl IdentityRows {
    fn add(&mut self, out: &mut Outcome, suite: &str, case: String, a: Complex64, b: Complex64, err: f64, tol: f64) {
        let ok = err < tol;
        self.worst = self.worst.max(err);
        self.table.push(vec![suite.into(), case.clone(), num(a.re), num(b.re), num(err), ok.to_string()]);
        out.check(ok, suite, || format!("{case}: {a} vs {b}, error {err:e}"));
    }
}

pub fn identities(cfg: &ExperimentConfig, params: &ModelParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let spin = params.spin();
    let tol = cfg.tol;
    let mut rows = IdentityRows {
        table: Table::new("identities", &["suite", "case", "lhs", "rhs", "rel_error", "pass"]),
        worst: 0.0,
    };
    let (u, v, q) = (params.u, params.v, params.q);

    // transfer DP vs symmetrization vs path enumeration, distinct row parameters
    let us = real_spectral(&[u, u * 1.07, u * 1.14]);
    for k in 1..=3 {
        for lam in strict_signatures(k, 0, cfg.lambda_max) {
            let dp = f_eval(&lam, &Signature::empty(), &us[..k], &spin)?;
            let sym = f_symmetrization(&lam, &us[..k], &spin)?;
            let en: Complex64 = enumerate_f_collections(&Signature::empty(), &lam, k)?
                .iter()
                .map(|pc| collection_weight(pc, &us[..k], &spin))
                .sum();
            let err = rel(dp, sym).max(rel(dp, en));
            rows.add(&mut out, "route_agreement", lam.to_string(), dp, sym, err, tol);
        }
    }

    for (nu, nv) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let uu = real_spectral(&[u, u * 1.1][..nu]);
        let vv = real_spectral(&[v, v * 0.8][..nv]);
        let r = verify_cauchy(&uu, &vv, &spin, tol)?;
        let (l, rr) = (Complex64::new(r.lhs[0], r.lhs[1]), Complex64::new(r.rhs[0], r.rhs[1]));
        rows.add(&mut out, "cauchy", format!("N={nu} K={nv} L={}", r.truncation), l, rr, r.rel_error, tol);
        out.check(r.tail_estimate < tol, "cauchy_tail", || format!("N={nu} K={nv}: tail {:e}", r.tail_estimate));
    }

    let uc = Complex64::from(u);
    let vc = Complex64::from(v);
    for big_n in 1..=3usize {
        let geo: Vec<Complex64> = (0..big_n).map(|i| uc * q.powi(i as i32)).collect();
        for mu in signatures_bounded(big_n, 4) {
            let dp = f_eval(&mu, &Signature::empty(), &geo, &spin)?;
            let cf = f_geometric(&mu, uc, &spin);
            rows.add(&mut out, "geometric_f", format!("N={big_n} {mu}"), dp, cf, rel(dp, cf), tol);
        }
        // at s^2 = 1/q the multiplicity factors vanish, so G^c is checked at a generic spin
        let gspin = SpinParams::new(q, 0.5 * (1.0 + params.s()))?;
        let geo: Vec<Complex64> = (0..big_n).map(|i| vc * q.powi(i as i32)).collect();
        for n in 1..=3 {
            for nu in signatures_bounded(n, 3) {
                let dp = gc_eval(&nu, &Signature::zeros(n), &geo, &gspin)?;
                let cf = gc_geometric(&nu, vc, big_n, &gspin);
                rows.add(&mut out, "geometric_gc", format!("N={big_n} {nu}"), dp, cf, rel_floor(dp, cf, 1e-12), tol);
            }
        }
    }

    let lam = Signature::new(vec![5, 3, 1, 0])?;
    let mu = Signature::new(vec![2])?;
    let whole = f_eval(&lam, &mu, &us, &spin)?;
    let mut split = Complex64::new(0.0, 0.0);
    for kappa in signatures_bounded(2, 5) {
        split += f_eval(&lam, &kappa, &us[1..], &spin)? * f_eval(&kappa, &mu, &us[..1], &spin)?;
    }
    rows.add(&mut out, "branching", format!("{lam}/{mu}"), whole, split, rel(whole, split), tol);

    let vs = real_spectral(&[v, v * 0.8]);
    for mu in signatures_bounded(2, 2) {
        for lam in signatures_bounded(2, 4) {
            let gc = gc_eval(&lam, &mu, &vs, &spin)?;
            let g = g_eval(&lam, &mu, &vs, &spin)?;
            let expect = g * conjugation_constant(&lam, q, params.s()) / conjugation_constant(&mu, q, params.s());
            rows.add(&mut out, "conjugation", format!("{lam}/{mu}"), gc, expect, rel_floor(gc, expect, 1e-14), tol);
        }
    }

    let mut counts = Table::new("counts", &["lambda", "formula", "enumerated", "typical", "typical_bound", "pass"]);
    for k in 1..=4 {
        for lam in strict_signatures(k, 0, cfg.lambda_max.min(8)) {
            let formula = count_collections_formula(&lam)?;
            let all = enumerate_f_collections(&Signature::empty(), &lam, k)?;
            let uk = real_spectral(&vec![u; k]);
            let tw = typical_weight(&lam, u, params);
            let mut typical = 0;
            let mut tw_err: f64 = 0.0;
            for pc in all.iter().filter(|pc| is_typical(pc)) {
                typical += 1;
                tw_err = tw_err.max((collection_weight(pc, &uk, &spin).re - tw).abs() / tw.abs());
            }
            out.check(tw_err < 1e-12, "typical_weight", || format!("{lam}: typical weights off by {tw_err:e}"));
            let bound = typical_lower_bound(&lam)?;
            let ok = formula.to_string() == all.len().to_string() && meets_lower_bound(typical, &bound);
            counts.push(vec![
                lam.to_string(),
                formula.to_string(),
                all.len().to_string(),
                typical.to_string(),
                format!("{}/{}", bound.0, bound.1),
                ok.to_string(),
            ]);
            out.check(ok, "collection_count", || format!("{lam}: formula {formula}, enumerated {}, typical {typical}", all.len()));
        }
    }

    out.note("worst_rel_error", rows.worst);
    out.note("cases", rows.table.rows.len());
    out.tables.push(rows.table);
    out.tables.push(counts);
    Ok(out)
}

pub fn boundary(cfg: &ExperimentConfig, params: &ModelParams) -> Result<Outcome> {
    const TOL: f64 = 1e-7;
    let mut out = Outcome::default();
    let s = params.s();
    let mut t = Table::new(
        "boundary",
        &["k", "M", "lambda", "f_direct", "f_contour", "rel_error", "f_contour_radius2", "radius_rel_diff", "pass"],
    );
    let mut worst: f64 = 0.0;
    let mut ms = vec![1usize, 5, cfg.m];
    ms.sort_unstable();
    ms.dedup();
    for &m in &ms {
        let v = real_spectral(&params.column_parameters(m)?);
        let vmax = v.iter().map(|x| x.re).fold(0.0, f64::max);
        let hi = if vmax > 0.0 { 1.0 / vmax } else { 4.0 * s };
        let c1 = CircleContour::new(s + 0.5 * (hi - s), s, &v)?;
        let c2 = CircleContour::new(s + 0.2 * (hi - s), s, &v)?;
        for k in 1..=cfg.k.clamp(1, 2) {
            for lam in strict_signatures(k, 1, cfg.lambda_max) {
                let d = f_direct(&lam, &v, params);
                let a = f_contour(&lam, &v, params, c1, 1e-12)?;
                let b = f_contour(&lam, &v, params, c2, 1e-12)?;
                let e1 = (d - a.value).norm() / d.norm();
                let e2 = (a.value - b.value).norm() / a.value.norm();
                worst = worst.max(e1).max(e2);
                let ok = e1 < TOL && e2 < TOL;
                t.push(vec![
                    k.to_string(),
                    m.to_string(),
                    lam.to_string(),
                    num(d.re),
                    num(a.value.re),
                    num(e1),
                    num(b.value.re),
                    num(e2),
                    ok.to_string(),
                ]);
                out.check(ok, "boundary_routes", || format!("M={m} {lam}: direct {d}, contour {} / {}", a.value, b.value));
            }
        }
    }
    out.note("worst_rel_error", worst);
    out.tables.push(t);
    Ok(out)
}

/// 50 admissible parameter points spread over the ferroelectric region.
pub fn constants_grid() -> Vec<(f64, f64, f64)> {
    let mut g = Vec::new();
    for q in [0.2f64, 0.35, 0.5, 0.65, 0.8] {
        let s = q.powf(-0.5);
        for uf in [1.1, 1.3, 1.6, 2.0, 3.0] {
            let u = s * uf;
            for vf in [0.2, 0.7] {
                g.push((q, u, vf / u));
            }
        }
    }
    g
}

pub fn constants(_cfg: &ExperimentConfig, params: &ModelParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let c = AsymptoticConstants::new(params)?;
    let mut t = Table::new("constants", &["q", "u", "v", "a", "b", "c", "d", "signs_ok"]);
    let signs = |c: &AsymptoticConstants| c.a > 0.0 && c.b < 0.0 && c.c > 0.0 && c.d > 0.0;
    let mut all = vec![(params.q, params.u, params.v)];
    all.extend(constants_grid());
    for (q, u, v) in all {
        let p = ModelParams::new(q, u, v)?;
        let k = AsymptoticConstants::new(&p)?;
        let ok = signs(&k);
        t.push(vec![num(q), num(u), num(v), num(k.a), num(k.b), num(k.c), num(k.d), ok.to_string()]);
        out.check(ok, "constant_signs", || format!("q={q} u={u} v={v}: {k:?}"));
    }
    out.tables.push(t);

    let cp = critical_point_report(params)?;
    let mut t = Table::new("critical_point", &["quantity", "value", "target", "abs_error", "bound", "pass"]);
    let mut row = |name: &str, value: f64, target: f64, bound: f64, out: &mut Outcome| {
        let e = (value - target).abs();
        t.push(vec![name.into(), num(value), num(target), num(e), num(bound), (e < bound).to_string()]);
        out.check(e < bound, "critical_point", || format!("{name} = {value}, expected {target}"));
    };
    row("G(u)", cp.big_g_at_u, 0.0, 1e-6, &mut out);
    row("g(u)", cp.g_at_u, 0.0, 1e-6, &mut out);
    row("G'(u)", cp.big_g_prime_fd, 0.0, 1e-6, &mut out);
    row("G''(u)", cp.big_g_second_fd, cp.two_c, 1e-4 * cp.two_c.abs(), &mut out);
    row("g'(u)", cp.g_prime_fd, cp.b, 1e-6, &mut out);
    out.tables.push(t);

    let d = descent_report(params, 1000, 0.1)?;
    out.check(d.max_re_g <= 1e-12, "descent_max", || format!("max Re G = {:e}", d.max_re_g));
    out.check(d.argmax_distance_to_u < 1e-9, "descent_argmax", || format!("argmax at distance {:e} from u", d.argmax_distance_to_u));
    out.check(d.delta < 0.0, "descent_gap", || format!("delta = {:e}", d.delta));
    let mut t = Table::new("descent", &["points", "max_re_g", "argmax_distance_to_u", "eps", "delta", "c1", "c", "expansion_feasible"]);
    t.push(vec![
        d.points.to_string(),
        num(d.max_re_g),
        num(d.argmax_distance_to_u),
        num(d.eps),
        num(d.delta),
        num(d.c1),
        num(d.c),
        d.expansion_feasible.to_string(),
    ]);
    out.tables.push(t);
    out.note("a", c.a);
    out.note("b", c.b);
    out.note("c", c.c);
    out.note("d", c.d);
    out.note("descent", &d);
    Ok(out)
}

pub fn bm_converge(cfg: &ExperimentConfig, params: &ModelParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let x = cfg.x_vector();
    let k = x.len();
    let mut t = Table::new("bm_converge", &["quantity", "M", "k", "x", "computed", "limit", "abs_error"]);
    let (mut eb, mut ea, mut amax) = (Vec::new(), Vec::new(), 0.0f64);
    let mut last_rel = f64::NAN;
    for &m in &cfg.m_grid {
        let b = b_m_contour(&x, m, params, cfg.tol.max(1e-10))?;
        let a = a_m_scaled(&x, m, params)?;
        for (name, v) in [("B", &b), ("A", &a)] {
            let e = (v.value - v.limit).abs();
            t.push(vec![name.into(), m.to_string(), k.to_string(), join(&x), num(v.value), num(v.limit), num(e)]);
        }
        eb.push((b.value - b.limit).abs());
        ea.push((a.value - a.limit).abs());
        amax = amax.max(a.value.abs());
        last_rel = (b.value - b.limit).abs() / b.limit.abs();
    }
    let bound = if k == 1 { 0.05 } else { 0.10 };
    out.check(eb.windows(2).all(|w| w[1] < w[0]), "bm_error_decreasing", || format!("{eb:?}"));
    out.check(ea.windows(2).all(|w| w[1] < w[0]), "am_error_decreasing", || format!("{ea:?}"));
    out.check(last_rel < bound, "bm_final_error", || format!("relative error {last_rel} at the last M, bound {bound}"));
    out.note("x", &x);
    out.note("b_abs_errors", &eb);
    out.note("a_abs_errors", &ea);
    out.note("a_max_abs", amax);
    out.note("b_final_rel_error", last_rel);
    out.tables.push(t);
    Ok(out)
}

pub fn sample(cfg: &ExperimentConfig, params: &ModelParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let pmf = top_row_pmf(cfg.k, cfg.m, params, cfg.tol)?;
    let header: Vec<String> = (1..=cfg.k).map(|i| format!("mu_{i}")).chain(["probability".to_string()]).collect();
    let mut pt = Table { name: "pmf".into(), header, rows: Vec::new() };
    for (mu, p) in &pmf.entries {
        pt.push(mu.parts().iter().map(|x| x.to_string()).chain([num(*p)]).collect());
    }
    out.check((pmf.mass - 1.0).abs() <= cfg.tol, "pmf_mass", || {
        format!("mass {} (truncation {}, tail {:e})", pmf.mass, pmf.truncation, pmf.tail_estimate)
    });
    let sampler = TopRowSampler::new(&pmf);
    let mut cache = std::collections::HashMap::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut st = Table::new("samples", &["sample_id", "row", "entries"]);
    let mut grids = Vec::new();
    let mut violations = 0;
    for id in 0..cfg.n_samples {
        let pat = sample_pattern(&sampler, &mut cache, params, &mut rng)?;
        if pat.violation().is_some() {
            violations += 1;
        }
        for (j, row) in pat.rows().iter().enumerate() {
            st.push(vec![id.to_string(), (j + 1).to_string(), join(row.parts())]);
        }
        if id < cfg.grids {
            grids.push(serde_json::to_value(pat.to_paths()?).expect("serializable"));
        }
    }
    out.check(violations == 0, "interlacing", || format!("{violations} sampled patterns break interlacing"));
    out.note("mass", pmf.mass);
    out.note("truncation", pmf.truncation);
    out.note("tail_estimate", pmf.tail_estimate);
    out.note("nodes_per_piece", pmf.nodes_per_piece);
    out.note("interlacing_violations", violations);
    out.documents.push(("grids.json".into(), serde_json::Value::Array(grids)));
    out.tables.push(pt);
    out.tables.push(st);
    Ok(out)
}

pub fn gue_compare(cfg: &ExperimentConfig, params: &ModelParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let r = compare_theorem_main(cfg.k, &cfg.m_grid, params, cfg.n_samples, cfg.seed, cfg.tol)?;
    let mut t = Table::new("gue_compare", &["M", "coordinate", "KS", "n_samples", "seed"]);
    for row in &r.rows {
        t.push(vec![row.m.to_string(), row.coordinate.clone(), num(row.ks), row.n_samples.to_string(), row.seed.to_string()]);
    }
    let threshold = cfg.ks_threshold.unwrap_or(if cfg.k == 1 { 0.05 } else { 0.08 });
    let last = *cfg.m_grid.last().unwrap_or(&0);
    for i in 1..=cfg.k {
        let coord = format!("{}.{i}", cfg.k);
        if let Some(ks) = r.ks_at(last, &coord) {
            out.check(ks < threshold, "final_ks", || format!("KS {ks} for Y^{coord} at M = {last}, threshold {threshold}"));
        }
    }
    out.check(r.monotone, "ks_monotone", || "KS rises along the M grid beyond the noise band".into());
    out.check(r.interlacing_violations == 0, "interlacing", || format!("{} violations", r.interlacing_violations));
    out.note("a", r.a);
    out.note("d", r.d);
    out.note("noise_band", r.noise_band);
    out.note("ks_threshold", threshold);
    out.note("threshold_note", "finite-M KS thresholds are artifact choices; no convergence rate is known");
    out.note("min_mass", r.min_mass);
    out.tables.push(t);
    Ok(out)
}
