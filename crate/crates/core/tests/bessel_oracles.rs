//! Bessel functions against independent oracles that share no code with the
//! library: periodic-trapezoid integrals, a scaled Schlafli integral for Kn and
//! the large-x asymptotic series.

use angmom_core::special::*;

/// `Jn(x) = (1/2pi) int_0^{2pi} cos(n t - x sin t) dt`; the periodic trapezoid
/// rule converges geometrically once the point count exceeds x + n.
fn j_oracle(n: u32, x: f64) -> f64 {
    let m = 2 * (x.ceil() as usize + n as usize) + 256;
    let h = 2.0 * std::f64::consts::PI / m as f64;
    let mut s = 0.0;
    let mut c = 0.0; // Kahan compensation
    for i in 0..m {
        let t = i as f64 * h;
        let y = (f64::from(n) * t - x * t.sin()).cos() - c;
        let tt = s + y;
        c = (tt - s) - y;
        s = tt;
    }
    s / m as f64
}

/// `e^x Kn(x) = int_0^inf exp(-x (cosh t - 1)) cosh(n t) dt`, trapezoid with
/// step halving until the sum stops moving.
fn k_scaled_oracle(n: u32, x: f64) -> f64 {
    let f = |t: f64| (-x * (t.cosh() - 1.0)).exp() * (f64::from(n) * t).cosh();
    let mut upper = 1.0;
    while f(upper) > 1e-300 * f(0.0).max(1.0) && upper < 60.0 {
        upper += 0.5;
    }
    let mut h = 0.25;
    let mut prev = f64::NAN;
    loop {
        let m = (upper / h).ceil() as usize;
        let mut s = 0.5 * f(0.0);
        for i in 1..=m {
            s += f(i as f64 * h);
        }
        let val = s * h;
        if (val - prev).abs() <= 1e-15 * val.abs() || h < 1e-4 {
            return val;
        }
        prev = val;
        h *= 0.5;
    }
}

/// `sqrt(2x/pi) e^x Kn(x) ~ sum a_k / x^k`, truncated at the smallest term.
fn k_scaled_asymptotic(n: u32, x: f64) -> f64 {
    let mu = 4.0 * f64::from(n * n);
    let mut term = 1.0_f64;
    let mut s = 1.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (8.0 * k as f64 * x);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        s += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    s * (std::f64::consts::PI / (2.0 * x)).sqrt()
}

fn sample_points() -> Vec<f64> {
    let mut xs = Vec::new();
    // log-spaced over [0.1, 150] plus the branch boundaries
    for i in 0..=240 {
        xs.push(0.1 * (1500.0f64).powf(i as f64 / 240.0));
    }
    xs.extend([2.0, 8.0, 25.0, 150.0]);
    xs
}

#[test]
fn j_matches_quadrature_oracle() {
    let mut worst = 0.0f64;
    for x in sample_points() {
        for n in 0..=5 {
            let r = j_oracle(n, x);
            let got = bessel_j(n, x).unwrap();
            let err = (got - r).abs() / r.abs().max(1.0);
            worst = worst.max(err);
            assert!(err <= 1e-12, "J{n}({x}): {got} vs {r}");
        }
    }
    eprintln!("J worst relative error {worst:e}");
}

#[test]
fn j_prime_matches_quadrature_oracle() {
    for x in sample_points() {
        for n in 0..=5u32 {
            // derivative of the integrand under the integral sign
            let m = 2 * (x.ceil() as usize + n as usize) + 256;
            let h = 2.0 * std::f64::consts::PI / m as f64;
            let r: f64 = (0..m)
                .map(|i| {
                    let t = i as f64 * h;
                    t.sin() * (f64::from(n) * t - x * t.sin()).sin()
                })
                .sum::<f64>()
                / m as f64;
            let got = bessel_j_prime(n, x).unwrap();
            assert!((got - r).abs() <= 1e-12 * r.abs().max(1.0), "J'{n}({x})");
        }
    }
}

#[test]
fn k_matches_quadrature_oracle() {
    for x in sample_points() {
        for n in 0..=5 {
            let r = k_scaled_oracle(n, x);
            let got = bessel_k_scaled_orders(n, x).unwrap()[n as usize];
            let err = ((got - r) / r).abs();
            assert!(err <= 1e-12, "K{n}({x}): {got} vs {r}, rel {err:e}");
        }
    }
}

#[test]
fn k_unit_argument_integral() {
    // K0(1) = int_0^inf exp(-cosh t) dt
    let r = k_scaled_oracle(0, 1.0) * (-1.0f64).exp();
    let got = bessel_k(0, 1.0).unwrap();
    assert!(((got - r) / r).abs() < 1e-13);
}

#[test]
fn k_prime_matches_quadrature_oracle() {
    for x in sample_points() {
        for n in 0..=5u32 {
            // -(K(n-1) + K(n+1))/2 built from the oracle itself
            let r = if n == 0 {
                -k_scaled_oracle(1, x)
            } else {
                -0.5 * (k_scaled_oracle(n - 1, x) + k_scaled_oracle(n + 1, x))
            };
            let got = bessel_k_prime(n, x).unwrap() * x.exp();
            assert!(((got - r) / r).abs() <= 1e-12, "K'{n}({x})");
        }
    }
}

#[test]
fn k_matches_asymptotic_series_at_large_x() {
    let mut x = 40.0;
    while x <= 150.0 {
        for n in 0..=5 {
            let r = k_scaled_asymptotic(n, x);
            let got = bessel_k_scaled_orders(n, x).unwrap()[n as usize];
            assert!(((got - r) / r).abs() < 1e-12, "K{n}({x})");
        }
        x += 3.7;
    }
}

#[test]
fn scaled_k_is_bounded_and_smooth() {
    // sqrt(x) e^x Kn(x) tends to sqrt(pi/2) and has no jumps
    let mut prev: Option<f64> = None;
    let mut x: f64 = 10.0;
    while x <= 100.0 {
        let v = bessel_k_scaled_orders(2, x).unwrap()[2] * x.sqrt();
        assert!(v > 1.0 && v < 2.5);
        if let Some(p) = prev {
            assert!((v - p).abs() < 0.05 * p);
        }
        prev = Some(v);
        x += 0.5;
    }
}

#[test]
fn first_zero_of_j0() {
    // ascending series evaluated independently, bracketed by bisection
    let j0 = |x: f64| {
        let q = -0.25 * x * x;
        let mut t = 1.0;
        let mut s = 1.0;
        for k in 1..60 {
            t *= q / (k as f64 * k as f64);
            s += t;
        }
        s
    };
    let (mut a, mut b) = (2.0, 3.0);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if j0(a) * j0(m) <= 0.0 {
            b = m;
        } else {
            a = m;
        }
    }
    let oracle = 0.5 * (a + b);
    assert!((oracle - 2.404_825_557_695_773).abs() < 1e-12);
    // the library value changes sign at the same place
    let lo = bessel_j(0, oracle - 1e-12).unwrap();
    let hi = bessel_j(0, oracle + 1e-12).unwrap();
    assert!(lo > 0.0 && hi < 0.0);
}

#[test]
fn recurrence_identities() {
    let mut x: f64 = 0.5;
    while x <= 100.0 {
        for n in 1..=9u32 {
            let j = bessel_j_orders(n + 1, x).unwrap();
            let lhs = j[n as usize - 1] + j[n as usize + 1];
            let rhs = 2.0 * f64::from(n) / x * j[n as usize];
            let scale = lhs.abs().max(rhs.abs()).max(j[n as usize - 1].abs());
            assert!((lhs - rhs).abs() <= 1e-10 * scale, "J rec n={n} x={x}");
            let k = bessel_k_scaled_orders(n + 1, x).unwrap();
            let lhs = k[n as usize - 1] - k[n as usize + 1];
            let rhs = -2.0 * f64::from(n) / x * k[n as usize];
            assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs(), "K rec n={n} x={x}");
        }
        x *= 1.07;
    }
}

#[test]
fn branch_crossovers_agree() {
    // just either side of each switch point the values must be continuous
    for (x0, name) in [(8.0, "series/miller"), (25.0, "miller/hankel")] {
        for n in 0..=5u32 {
            let below = bessel_j(n, x0 * (1.0 - 1e-12)).unwrap();
            let above = bessel_j(n, x0 * (1.0 + 1e-12)).unwrap();
            let slope = bessel_j_prime(n, x0).unwrap() * x0 * 2e-12;
            assert!(
                (above - below - slope).abs() <= 1e-12 * below.abs().max(1.0),
                "{name} n={n}"
            );
        }
    }
    for n in 0..=5u32 {
        let below = bessel_k(n, 2.0 * (1.0 - 1e-12)).unwrap();
        let above = bessel_k(n, 2.0 * (1.0 + 1e-12)).unwrap();
        let slope = bessel_k_prime(n, 2.0).unwrap() * 4e-12;
        assert!((above - below - slope).abs() <= 1e-12 * below.abs(), "K n={n}");
    }
}
