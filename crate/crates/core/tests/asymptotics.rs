use num_complex::Complex64;
use sixvertex_core::asymptotics::*;
use sixvertex_core::ModelParams;

fn p0() -> ModelParams {
    ModelParams::new(0.5, 2.0, 0.25).unwrap()
}

#[test]
fn constants_by_independent_oracle() {
    // a from the root of G'(u) = 0 solved in a (G' is affine in a),
    // b and c from finite differences of the raw logarithms.
    let p = p0();
    let (q, s, u, v) = (p.q, p.s(), p.u, p.v);
    let l1 = |z: f64| ((1.0 - s * z) / (z - s)).abs().ln();
    let l2 = |z: f64| ((1.0 - q * z * v) / (1.0 - z * v)).ln();
    let h = 1e-4;
    let d1 = |f: &dyn Fn(f64) -> f64| (f(u + h) - f(u - h)) / (2.0 * h);
    let d2 = |f: &dyn Fn(f64) -> f64| (f(u + h) - 2.0 * f(u) + f(u - h)) / (h * h);
    let a = -d1(&l2) / d1(&l1);
    let b = d1(&l1);
    let c = 0.5 * (a * d2(&l1) + d2(&l2));
    let k = AsymptoticConstants::new(&p).unwrap();
    assert!((k.a - a).abs() < 1e-7, "{} vs {a}", k.a);
    assert!((k.b - b).abs() < 1e-7);
    assert!((k.c - c).abs() < 1e-5);
    assert!((k.d + (2.0 * c).sqrt() / b).abs() < 1e-5);
}

#[test]
fn signs_over_parameter_grid() {
    for q in [0.2, 0.5, 0.8] {
        let s = 1.0 / f64::sqrt(q);
        for uf in [1.05, 1.5, 2.5] {
            let u = s * uf;
            for vf in [0.1, 0.5, 0.9] {
                let v = vf / u;
                let p = ModelParams::new(q, u, v).unwrap();
                let k = AsymptoticConstants::new(&p).unwrap();
                assert!(k.a > 0.0 && k.b < 0.0 && k.c > 0.0 && k.d > 0.0, "{q} {u} {v}: {k:?}");
            }
        }
    }
}

#[test]
fn critical_point_identities() {
    let r = critical_point_report(&p0()).unwrap();
    assert!(r.big_g_at_u < 1e-14 && r.g_at_u < 1e-14);
    assert!(r.big_g_prime_fd.abs() < 1e-6, "{r:?}");
    assert!(r.big_g_prime_closed.abs() < 1e-12);
    assert!((r.big_g_second_fd - r.two_c).abs() < 1e-4 * r.two_c, "{r:?}");
    assert!((r.g_prime_fd - r.b).abs() < 1e-6 * r.b.abs());
}

#[test]
fn closed_form_derivative_matches_difference_off_axis() {
    let ph = Phase::new(&p0()).unwrap();
    let z = Complex64::new(1.7, 0.4);
    let h = 1e-6;
    let fd = (ph.big_g(z + h) - ph.big_g(z - h)) / (2.0 * h);
    assert!((fd - ph.big_g_prime(z)).norm() < 1e-8);
}

#[test]
fn descent_along_contour() {
    let r = descent_report(&p0(), 1000, 0.1).unwrap();
    assert!(r.max_re_g <= 1e-12, "{r:?}");
    assert!(r.argmax_distance_to_u < 1e-12, "{r:?}");
    assert!(r.delta < 0.0);
    println!("{r:?}");
}

#[test]
fn hermite_vandermonde() {
    let x = [-0.7, 0.3, 1.9];
    let k = 3;
    let mut m = [[0.0; 3]; 3];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = hermite_h(k - 1 - j, x[i]);
        }
    }
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let vdm = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
    assert!((det - vdm).abs() < 1e-12);
}

#[test]
fn psi_against_fourier_quadrature() {
    // (1/2π) ∫ z^n e^{-z²/2 - ixz} dz by the trapezoid rule on [-12, 12]
    for n in 0..6 {
        for &x in &[-1.3, 0.0, 0.8, 2.2] {
            let steps = 4000;
            let hh = 24.0 / steps as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=steps {
                let z = -12.0 + hh * i as f64;
                acc += Complex64::from_polar(z.powi(n as i32) * (-z * z / 2.0).exp(), -x * z);
            }
            acc *= hh / (2.0 * std::f64::consts::PI);
            assert!((acc - psi(n, x)).norm() < 1e-10, "n={n} x={x}");
        }
    }
}

#[test]
fn scaled_limits_at_reference_points() {
    assert!((a_m_limit(&[-1.0, 1.0]) - 2.0).abs() < 1e-15);
    let d = 1.097;
    let expect = 2.0 * (-1.0f64).exp() / (d * 2.0 * std::f64::consts::PI);
    assert!((b_m_limit(&[-1.0, 1.0], d) - expect).abs() < 1e-12);
}
