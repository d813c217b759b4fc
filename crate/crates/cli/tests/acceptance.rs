//! Acceptance suite: one PASS/FAIL line per criterion, always printed. Runs
//! with its own harness so the lines show up without `--nocapture`; the
//! process fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use angmom_cli::bundled::{self, BUNDLED};
use angmom_cli::execute;
use angmom_core::constants::{C, MU0};
use angmom_core::diffops::{convergence_order, fd_gradient, FdOrder, GridSpec, ScalarGrid};
use angmom_core::dirac::{build_algebra, Mat4};
use angmom_core::dual;
use angmom_core::em::*;
use angmom_core::special::{bessel_j, bessel_j_prime, bessel_k, bessel_k_prime};
use angmom_core::tensor::{levi_civita, trace, Vec3};
use angmom_core::verify::*;
use num_complex::Complex64;
use rand::{rngs::StdRng, Rng, SeedableRng};

struct Outcome {
    pass: bool,
    summary: String,
    info: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Self {
            pass,
            summary: summary.into(),
            info: Vec::new(),
        }
    }

    fn note(mut self, line: impl Into<String>) -> Self {
        self.info.push(line.into());
        self
    }
}

fn omega(lambda: f64) -> f64 {
    2.0 * std::f64::consts::PI * C / lambda
}

fn cp(lambda: f64, amp: Complex64, hand: Handedness) -> PlaneWaveMode {
    PlaneWaveMode::circular(omega(lambda), amp, hand)
}

fn report_of(reports: &[ResidualReport], eq: Equation) -> &ResidualReport {
    reports.iter().find(|r| r.equation == eq).expect("report present")
}

// 1: closed form for two co-propagating circular waves at omega and 2 omega

fn beat_grid(lambda1: f64) -> GridSpec {
    // one spatial beat period along z, one temporal beat period in time
    GridSpec::new(Vec3::zero(), [1e-7, 1e-7, lambda1 / 32.0], [1, 1, 32])
        .unwrap()
        .with_times(0.0, lambda1 / C / 16.0, 16)
        .unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let l1 = 1e-6;
    let a = cp(l1, Complex64::new(1.0, 0.0), Handedness::Positive);
    let b = cp(0.5 * l1, Complex64::new(0.6, 0.8), Handedness::Positive);
    let modes = [a, b];
    let grid = beat_grid(l1);
    let literal = check_planewave_closedform(&modes, &grid, DerivativeMode::Analytic, ClosedForm::Paper, 1e-10).unwrap();
    let derived =
        check_planewave_closedform(&modes, &grid, DerivativeMode::Analytic, ClosedForm::Derived, 1e-10).unwrap();
    let neg = [
        cp(l1, Complex64::new(1.0, 0.0), Handedness::Negative),
        cp(0.5 * l1, Complex64::new(0.6, 0.8), Handedness::Negative),
    ];
    let literal_neg =
        check_planewave_closedform(&neg, &grid, DerivativeMode::Analytic, ClosedForm::Paper, 1e-10).unwrap();

    // finite differences: error against the analytic value at h, h/2, h/4
    let h0 = 0.5 * l1 / 32.0;
    let mut errors = [0.0; 3];
    for (k, e) in errors.iter_mut().enumerate() {
        let h = h0 / f64::from(1u32 << k);
        let g = GridSpec::cube(Vec3::new(0.1e-6, 0.05e-6, 0.3e-6), h, 5).unwrap();
        let r = check_planewave_closedform(&modes, &g, DerivativeMode::fd(FdOrder::Two), ClosedForm::Derived, 1.0)
            .unwrap();
        *e = r.max_abs;
    }
    let ratios = [errors[0] / errors[1], errors[1] / errors[2]];
    let fd_ok = ratios.iter().all(|r| (3.2..=4.8).contains(r));
    let secs = start.elapsed().as_secs_f64();
    let pass = literal.pass && fd_ok && secs < 10.0;
    Outcome::new(
        pass,
        format!(
            "plane-wave closed form, positive helicity: max_rel={:.3e} (tol 1e-10); fd error ratios {:.3}, {:.3}; {:.2}s",
            literal.max_rel, ratios[0], ratios[1], secs
        ),
    )
    .note(format!(
        "negative helicity against the same expression: max_rel={:.3e}",
        literal_neg.max_rel
    ))
    .note(format!(
        "positive helicity against the sign-corrected expression: max_rel={:.3e}",
        derived.max_rel
    ))
}

// 2: source-free spin balance on the dual-mode fiber

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let cfg = bundled::load("fig2_fiber").unwrap();
    assert_eq!(cfg.grid.dims, [64, 64, 1]);
    let run = execute(&cfg).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let r = report_of(&run.summary.reports, Equation::SourceFreeSpin);
    let all_terms_nonzero = run.maps.len() == 4
        && run.maps.iter().all(|m| m.values.iter().any(|v| v.max_abs() > 0.0));
    let comps_ok = r.component_max_rel.iter().all(|&c| c <= 1e-8);
    let pass = r.max_rel <= 1e-8 && comps_ok && all_terms_nonzero && secs < 60.0;
    Outcome::new(
        pass,
        format!(
            "fiber source-free spin balance, 64x64: rho/phi/z max_rel {:.2e}/{:.2e}/{:.2e} (tol 1e-8); {:.2}s",
            r.component_max_rel[0], r.component_max_rel[1], r.component_max_rel[2], secs
        ),
    )
}

// 3: line scans just outside the core

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cfg = bundled::load("fig3_linescan").unwrap();
    let run = execute(&cfg).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let a = 50e-6;
    let rho = cfg.grid.origin.x.hypot(cfg.grid.origin.y);
    let placed = ((rho - 1.05 * a) / a).abs() < 1e-12;
    // z component: tau equals the sum of the other three curves
    let [m0, m1, m2, tau] = [&run.maps[0], &run.maps[1], &run.maps[2], &run.maps[3]];
    let mut worst = 0.0_f64;
    let (mut zs, mut ts) = (std::collections::BTreeSet::new(), std::collections::BTreeSet::new());
    for k in 0..tau.values.len() {
        let sum = m0.values[k].z + m1.values[k].z + m2.values[k].z;
        let t = tau.values[k].z;
        let scale = m0.values[k].z.abs().max(m1.values[k].z.abs()).max(m2.values[k].z.abs()).max(t.abs());
        if scale > 0.0 {
            worst = worst.max((sum - t).abs() / scale);
        }
        zs.insert(tau.points[k][2].to_bits());
        ts.insert(tau.points[k][3].to_bits());
    }
    let pass = placed && worst <= 1e-8 && zs.len() > 1 && ts.len() > 1 && secs < 10.0;
    Outcome::new(
        pass,
        format!(
            "line scans at 1.05a, {} z samples x {} times: z-component max_rel={worst:.3e} (tol 1e-8); {secs:.2}s",
            zs.len(),
            ts.len()
        ),
    )
}

// 4: a single circular wave has no torque and no helicity-current divergence

fn criterion_4() -> Outcome {
    let mut worst = 0.0_f64;
    for hand in [Handedness::Positive, Handedness::Negative] {
        let m = cp(1e-6, Complex64::new(2.0, 0.5), hand);
        let k = m.wavenumber();
        let scn = Scenario::em_only("single", EmSource::PlaneWaves(vec![m]), Vec3::zero()).unwrap();
        for i in 0..50 {
            let f = i as f64;
            let x = Vec3::new(0.13e-6 * f.sin(), 0.07e-6 * f, 0.021e-6 * f * f);
            let p = scn.point(x, 1.1e-16 * f).unwrap();
            let scale = k * p.em.helicity.v.abs();
            let tau = dual::values(p.em.tau).max_abs();
            let div_h = dual::div(&p.em.helicity_current).max_abs();
            let dt_s = dual::dt_vec(p.em.spin_density).max_abs();
            worst = worst.max(tau.max(div_h).max(dt_s) / scale);
        }
    }
    Outcome::new(
        worst <= 1e-12,
        format!("single circular wave: max(|tau|, |div H|, |dt s|) / (k |h|) = {worst:.3e} (tol 1e-12)"),
    )
}

// 5: Dirac sector

fn anticommutator(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j] + b[i][k] * a[k][j]).sum())
    })
}

fn matmul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

fn criterion_5() -> Outcome {
    let cfg = bundled::load("dirac_free_pair").unwrap();
    let run = execute(&cfg).unwrap();
    let s = report_of(&run.summary.reports, Equation::DiracSpin);
    let o = report_of(&run.summary.reports, Equation::DiracOrbital);

    let scn = cfg.build().unwrap();
    let mut prob = 0.0_f64;
    for n in 0..cfg.grid.nt {
        for idx in 0..cfg.grid.len() {
            let d = scn.point(cfg.grid.point(idx), cfg.grid.time(n)).unwrap().dirac.unwrap();
            let j = d.prob_current;
            let parts = [d.prob_density.dt(), j.x.dx(0), j.y.dx(1), j.z.dx(2)];
            let scale = parts.iter().map(|v| v.abs()).fold(0.0, f64::max);
            prob = prob.max(parts.iter().sum::<f64>().abs() / scale);
        }
    }

    // gamma^k sigma^ij + sigma^ij gamma^k = 2 eps^kij gamma^0 gamma^5, with
    // sigma built here from the gamma matrices
    let g = build_algebra();
    let i_half = Complex64::new(0.0, 0.5);
    let g05 = matmul(&g.gamma[0], &g.gamma5);
    let mut worst_ulp = 0.0_f64;
    for k in 1..4 {
        for i in 1..4 {
            for j in 1..4 {
                let gij = matmul(&g.gamma[i], &g.gamma[j]);
                let gji = matmul(&g.gamma[j], &g.gamma[i]);
                let sigma: Mat4 = std::array::from_fn(|r| std::array::from_fn(|c| (gij[r][c] - gji[r][c]) * i_half));
                let lhs = anticommutator(&g.gamma[k], &sigma);
                let e = 2.0 * levi_civita(k - 1, i - 1, j - 1);
                for r in 0..4 {
                    for c in 0..4 {
                        let d = (lhs[r][c] - g05[r][c] * e).norm();
                        worst_ulp = worst_ulp.max(d / f64::EPSILON);
                    }
                }
            }
        }
    }
    let pass = s.max_rel <= 1e-10 && o.max_rel <= 1e-10 && prob <= 1e-12 && worst_ulp <= 4.0;
    Outcome::new(
        pass,
        format!(
            "free spinor pair: spin max_rel={:.3e}, orbital max_rel={:.3e} (tol 1e-10); probability {prob:.3e} (tol 1e-12); gamma identity {worst_ulp:.1} ulp over 27 triples (tol 4)",
            s.max_rel, o.max_rel
        ),
    )
}

// 6: split balances add up to the total on every bundled scenario

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for b in BUNDLED {
        let cfg = bundled::load(b.name).unwrap();
        let run = execute(&cfg).unwrap();
        match run.summary.reports.iter().find(|r| r.equation == Equation::SumConsistency) {
            Some(r) => {
                pass &= r.pass;
                parts.push(format!("{} {:.1e}", b.name, r.max_rel));
            }
            None => {
                pass = false;
                parts.push(format!("{} missing", b.name));
            }
        }
    }
    Outcome::new(
        pass,
        format!("sum of split residuals vs total, relative to {SUM_CONSISTENCY_ULPS} ulp: {}", parts.join(", ")),
    )
}

// 7: trace of the helicity current

fn em_scenarios() -> Vec<(Scenario, f64)> {
    // (scenario, length scale for random points)
    let mut out = Vec::new();
    for name in ["fig2_fiber", "eq14_planewaves"] {
        let cfg = bundled::load(name).unwrap();
        let scale = if name == "fig2_fiber" { 90e-6 } else { 2e-6 };
        out.push((cfg.build().unwrap(), scale));
    }
    let single = EmSource::PlaneWaves(vec![cp(0.8e-6, Complex64::new(1.0, -0.3), Handedness::Negative)]);
    out.push((Scenario::em_only("single", single, Vec3::zero()).unwrap(), 2e-6));
    out
}

fn random_point(rng: &mut StdRng, scale: f64) -> Vec3 {
    loop {
        let p = Vec3::new(
            rng.gen_range(-scale..scale),
            rng.gen_range(-scale..scale),
            rng.gen_range(-0.1 * scale..0.1 * scale),
        );
        if p.x.hypot(p.y) > 1e-3 * scale {
            return p;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let scns = em_scenarios();
    let mut worst = 0.0_f64;
    let n = 10_000;
    for k in 0..n {
        let (scn, len) = &scns[k % scns.len()];
        let x = random_point(&mut rng, *len);
        let t = rng.gen_range(0.0..1e-13);
        let s = scn.em.sample(x, t, &scn.gauge).unwrap();
        let p = scn.point(x, t).unwrap();
        let b = s.b();
        let scale: f64 = (0..3).map(|i| (s.a_perp[i].v * b[i].v).abs()).sum::<f64>() / MU0;
        if scale == 0.0 {
            continue;
        }
        let d = (trace(&p.em.helicity_current).v + p.em.helicity.v).abs();
        worst = worst.max(d / (scale * f64::EPSILON));
    }
    Outcome::new(
        worst <= 2.0,
        format!("trace(helicity current) + helicity at {n} random points: {worst:.2} ulp (tol 2)"),
    )
}

// 8: gauge invariance

fn ulp_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / (scale * f64::EPSILON)
    }
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(99);
    let gauge = Gauge::Sine { q: 3.0e6 };
    let mut worst = 0.0_f64;
    let mut identical = true;
    for (scn, len) in em_scenarios() {
        let shifted = scn.clone().with_gauge(gauge);
        for _ in 0..200 {
            let x = random_point(&mut rng, len);
            let t = rng.gen_range(0.0..1e-13);
            let a = scn.point(x, t).unwrap();
            let b = shifted.point(x, t).unwrap();
            identical &= a == b;
            let fields = |p: &PointFields| -> Vec<f64> {
                let mut v = Vec::new();
                let e = &p.em;
                for d in e.spin_density.to_array().iter().chain(&e.oam_density.to_array()).chain(&e.tau.to_array()) {
                    v.push(d.v);
                    v.extend(d.d);
                }
                for d in [e.helicity, e.n_em, p.total.chi, p.belinfante.u] {
                    v.push(d.v);
                    v.extend(d.d);
                }
                for t in [&e.helicity_current, &e.oam_current, &e.n_tensor, &p.total.t, &p.belinfante.j] {
                    for row in &t.m {
                        for d in row {
                            v.push(d.v);
                            v.extend(d.d);
                        }
                    }
                }
                v
            };
            for (u, w) in fields(&a).iter().zip(fields(&b)) {
                worst = worst.max(ulp_diff(*u, w));
            }
        }
    }
    // whole reports as well
    for name in ["fig3_linescan", "eq14_planewaves"] {
        let mut cfg = bundled::load(name).unwrap();
        let before = execute(&cfg).unwrap().summary;
        cfg.gauge = gauge;
        let after = execute(&cfg).unwrap().summary;
        identical &= before.reports == after.reports;
        for (r, s) in before.reports.iter().zip(&after.reports) {
            worst = worst.max(ulp_diff(r.max_abs, s.max_abs));
        }
    }
    Outcome::new(
        worst <= 2.0,
        format!(
            "gauge shift zeta = sin(qx)/q: largest difference {worst:.1} ulp (tol 2){}",
            if identical { ", bitwise identical" } else { "" }
        ),
    )
}

// 9: symmetrized law against the canonical one

fn criterion_9() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let pw = [
        cp(1e-6, Complex64::new(1.0, 0.0), Handedness::Positive),
        cp(0.7e-6, Complex64::new(0.2, 0.9), Handedness::Negative),
    ];
    let pw_scn = Scenario::em_only("plane-wave pair", EmSource::PlaneWaves(pw.to_vec()), Vec3::new(1e-7, 0.0, 0.0)).unwrap();
    let pw_grid = GridSpec::cube(Vec3::new(0.2e-6, -0.1e-6, 0.3e-6), 0.11e-6, 5).unwrap().with_times(0.0, 1e-16, 3).unwrap();
    let fiber_cfg = bundled::load("belinfante_crosscheck").unwrap();
    let fiber_scn = fiber_cfg.build().unwrap();
    for (scn, grid) in [(&pw_scn, &pw_grid), (&fiber_scn, &fiber_cfg.grid)] {
        let r = check_belinfante(scn, grid, DerivativeMode::Analytic, 1e-8).unwrap();
        pass &= r.report.pass && r.cross_check.agree && r.canonical.pass;
        parts.push(format!(
            "{}: max_rel={:.3e}, gap {:.2e} of combined tolerance",
            scn.name, r.report.max_rel, r.cross_check.max_gap_ratio
        ));
    }
    Outcome::new(pass, format!("symmetrized continuity (tol 1e-8): {}", parts.join("; ")))
}

// 10: special functions and interface continuity

/// `Jn(x) = (1/2pi) int cos(n t - x sin t) dt` by the periodic trapezoid rule.
fn j_quad(n: u32, x: f64) -> f64 {
    let m = 2 * (x.ceil() as usize + n as usize) + 200;
    let h = std::f64::consts::TAU / m as f64;
    let s: f64 = (0..m).map(|i| (f64::from(n) * i as f64 * h - x * (i as f64 * h).sin()).cos()).sum();
    s / m as f64
}

/// Ascending series, free of cancellation for small arguments.
fn j_series(n: u32, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut t = (0.5 * x).powi(n as i32) / (1..=n).map(f64::from).product::<f64>();
    let mut s = t;
    for k in 1..80 {
        t *= q / (f64::from(k) * f64::from(k + n));
        s += t;
    }
    s
}

fn j_oracle(n: u32, x: f64) -> f64 {
    if x < 8.0 {
        j_series(n, x)
    } else {
        j_quad(n, x)
    }
}

/// `e^x Kn(x) = int_0^inf exp(-x (cosh t - 1)) cosh(n t) dt`.
fn k_scaled_quad(n: u32, x: f64) -> f64 {
    let f = |t: f64| (-x * (t.cosh() - 1.0)).exp() * (f64::from(n) * t).cosh();
    let mut upper = 1.0;
    while f(upper) > 1e-300 && upper < 60.0 {
        upper += 0.25;
    }
    let h = 1.0 / 256.0;
    let m = (upper / h).ceil() as usize;
    h * (0.5 * f(0.0) + (1..=m).map(|i| f(i as f64 * h)).sum::<f64>())
}

fn criterion_10() -> Outcome {
    let mut worst_j = 0.0_f64;
    let mut worst_k = 0.0_f64;
    let xs: Vec<f64> = (0..=160).map(|i| 0.1 * 1500f64.powf(i as f64 / 160.0)).collect();
    for &x in &xs {
        let jq: Vec<f64> = (0..=6).map(|n| j_oracle(n, x)).collect();
        let kq: Vec<f64> = (0..=6).map(|n| k_scaled_quad(n, x)).collect();
        for n in 0..=5u32 {
            let nu = n as usize;
            // below the first zero the value itself is the scale, beyond it the envelope
            let env = if x < f64::from(n) + 1.0 { 0.0 } else { (2.0 / (std::f64::consts::PI * x)).sqrt() };
            let jp = if n == 0 { -jq[1] } else { 0.5 * (jq[nu - 1] - jq[nu + 1]) };
            let ej = (bessel_j(n, x).unwrap() - jq[nu]).abs() / jq[nu].abs().max(env);
            let ejp = (bessel_j_prime(n, x).unwrap() - jp).abs() / jp.abs().max(env);
            worst_j = worst_j.max(ej).max(ejp);
            let kp = if n == 0 { -kq[1] } else { -0.5 * (kq[nu - 1] + kq[nu + 1]) };
            let ek = (bessel_k(n, x).unwrap() * x.exp() / kq[nu] - 1.0).abs();
            let ekp = (bessel_k_prime(n, x).unwrap() * x.exp() / kp - 1.0).abs();
            worst_k = worst_k.max(ek).max(ekp);
        }
    }

    let cfg = bundled::load("fig2_fiber").unwrap();
    let EmSource::Fiber(modes) = cfg.build().unwrap().em else { unreachable!() };
    let a = modes[0].spec.radius;
    let mut jump = 0.0_f64;
    for m in &modes {
        for k in 0..16 {
            let phi = 0.2 + 0.39 * k as f64;
            let (s, c) = phi.sin_cos();
            let x = Vec3::new(a * c, a * s, 1e-6);
            let fi = fiber_fields_in_region(m, x, Region::Core).unwrap();
            let fo = fiber_fields_in_region(m, x, Region::Cladding).unwrap();
            let tangential = |f: &[angmom_core::jet::CJet; 3]| [-f[0].v * s + f[1].v * c, f[2].v];
            for (p, q) in [(&fi.e, &fo.e), (&fi.h, &fo.h)] {
                let scale = p.iter().chain(q).map(|j| j.v.norm()).fold(0.0, f64::max);
                let (tp, tq) = (tangential(p), tangential(q));
                for i in 0..2 {
                    jump = jump.max((tp[i] - tq[i]).norm() / scale);
                }
            }
        }
    }
    let pass = worst_j <= 1e-12 && worst_k <= 1e-12 && jump <= 1e-9;
    Outcome::new(
        pass,
        format!(
            "Bessel n<=5 on [0.1, 150]: J/J' {worst_j:.2e}, K/K' {worst_k:.2e} (tol 1e-12); tangential jump at rho=a {jump:.2e} (tol 1e-9)"
        ),
    )
}

// 11: finite-difference convergence on smooth fields

fn criterion_11() -> Outcome {
    let f = |p: Vec3| (1.3 * p.x).sin() * (0.7 * p.y).cos() * (0.4 * p.z).exp();
    let grad = |p: Vec3| {
        let (sx, cx) = (1.3 * p.x).sin_cos();
        let (sy, cy) = (0.7 * p.y).sin_cos();
        let ez = (0.4 * p.z).exp();
        Vec3::new(1.3 * cx * cy * ez, -0.7 * sx * sy * ez, 0.4 * sx * cy * ez)
    };
    let center = Vec3::new(0.3, -0.2, 0.1);
    let measure = |order: FdOrder, h0: f64| {
        let mut errors = [0.0; 3];
        for (k, e) in errors.iter_mut().enumerate() {
            let h = h0 / f64::from(1u32 << k);
            let spec = GridSpec::cube(center, h, 9).unwrap();
            let g = ScalarGrid::fill(spec, f);
            let d = fd_gradient(&g, order).unwrap();
            *e = d
                .data
                .iter()
                .enumerate()
                .map(|(i, v)| (*v - grad(d.spec.point(i))).max_abs())
                .fold(0.0, f64::max);
        }
        convergence_order(errors).unwrap().order
    };
    let o2 = measure(FdOrder::Two, 0.1);
    let o4 = measure(FdOrder::Four, 0.2);
    Outcome::new(
        (1.8..=2.2).contains(&o2) && (3.7..=4.3).contains(&o4),
        format!("measured order {o2:.3} for the 2nd-order stencil (1.8..2.2), {o4:.3} for the 4th-order (3.7..4.3)"),
    )
}

fn main() {
    // `cargo test -- --list` and friends: nothing to enumerate beyond this binary
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let criteria: [(u32, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let mut failed = Vec::new();
    for (id, run) in criteria {
        let out = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(false, format!("panicked: {msg}"))
        });
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status}  {}", out.summary);
        for line in &out.info {
            println!("             info  {line}");
        }
        if !out.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 11 criteria pass");
    } else {
        println!("acceptance: {} of 11 criteria fail: {failed:?}", failed.len());
        std::process::exit(1);
    }
}
