//! Jn and Kn for integer n >= 0 and real x.
//!
//! Branches:
//!
//! | function | range       | method                                   |
//! |----------|-------------|------------------------------------------|
//! | Jn       | x <= 8      | ascending series, per order              |
//! | Jn       | 8 < x < 25  | Miller backward recurrence, sum rule     |
//! | Jn       | x >= 25     | Hankel expansion for J0, J1 + upward rec.|
//! | K0, K1   | x <= 2      | ascending series                         |
//! | K0, K1   | x > 2       | Steed/Temme continued fraction           |
//! | Kn       | all         | upward recurrence from K0, K1            |
//!
//! Upward recurrence for Jn is only used for x >= 25 > MAX_ORDER + 3, where it
//! is stable. Kn recurrence is stable upward everywhere.

use super::SpecialError;

/// Largest order accepted by the public entry points.
pub const MAX_ORDER: u32 = 16;

const J_SERIES_MAX: f64 = 8.0;
const J_ASYMPTOTIC_MIN: f64 = 25.0;
const K_SERIES_MAX: f64 = 2.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn check_order(n: u32) -> Result<(), SpecialError> {
    if n > MAX_ORDER {
        Err(SpecialError::UnsupportedOrder { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

pub fn bessel_j(n: u32, x: f64) -> Result<f64, SpecialError> {
    check_order(n)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_j", x });
    }
    Ok(j_orders(n as usize, x)[n as usize])
}

/// `J'n = (J(n-1) - J(n+1)) / 2`, with `J'0 = -J1`.
pub fn bessel_j_prime(n: u32, x: f64) -> Result<f64, SpecialError> {
    check_order(n)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_j_prime", x });
    }
    let j = j_orders(n as usize + 1, x);
    Ok(if n == 0 {
        -j[1]
    } else {
        0.5 * (j[n as usize - 1] - j[n as usize + 1])
    })
}

pub fn bessel_k(n: u32, x: f64) -> Result<f64, SpecialError> {
    check_order(n)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_k", x });
    }
    let k = k_scaled_orders(n as usize, x);
    Ok(k[n as usize] * (-x).exp())
}

/// `K'n = -(K(n-1) + K(n+1)) / 2`, with `K'0 = -K1`.
pub fn bessel_k_prime(n: u32, x: f64) -> Result<f64, SpecialError> {
    check_order(n)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_k_prime", x });
    }
    let k = k_scaled_orders(n as usize + 1, x);
    let d = if n == 0 {
        -k[1]
    } else {
        -0.5 * (k[n as usize - 1] + k[n as usize + 1])
    };
    Ok(d * (-x).exp())
}

/// `[J0(x), ..., J_nmax(x)]`.
pub fn bessel_j_orders(nmax: u32, x: f64) -> Result<Vec<f64>, SpecialError> {
    check_order(nmax)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_j_orders", x });
    }
    Ok(j_orders(nmax as usize, x))
}

/// `[K0(x), ..., K_nmax(x)]`.
pub fn bessel_k_orders(nmax: u32, x: f64) -> Result<Vec<f64>, SpecialError> {
    let mut k = bessel_k_scaled_orders(nmax, x)?;
    let e = (-x).exp();
    k.iter_mut().for_each(|v| *v *= e);
    Ok(k)
}

/// `[e^x K0(x), ..., e^x K_nmax(x)]`, free of underflow for large x.
pub fn bessel_k_scaled_orders(nmax: u32, x: f64) -> Result<Vec<f64>, SpecialError> {
    check_order(nmax)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_k_scaled_orders", x });
    }
    Ok(k_scaled_orders(nmax as usize, x))
}

fn binomial(k: u32, j: u32) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * f64::from(k - i) / f64::from(i + 1))
}

/// k-th derivative of Jn at x, for any integer n (negative orders by reflection).
pub fn bessel_j_deriv(n: i32, k: u32, x: f64) -> Result<f64, SpecialError> {
    let lo = n - k as i32;
    let hi = n + k as i32;
    let top = lo.unsigned_abs().max(hi.unsigned_abs());
    check_order(top)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_j_deriv", x });
    }
    let j = j_orders(top as usize, x);
    let at = |m: i32| {
        let v = j[m.unsigned_abs() as usize];
        if m < 0 && m % 2 != 0 {
            -v
        } else {
            v
        }
    };
    let mut s = 0.0;
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * binomial(k, i) * at(lo + 2 * i as i32);
    }
    Ok(s / f64::powi(2.0, k as i32))
}

/// k-th derivative of `Kn` at x, multiplied by `e^x`.
pub fn bessel_k_scaled_deriv(n: i32, k: u32, x: f64) -> Result<f64, SpecialError> {
    let lo = n - k as i32;
    let hi = n + k as i32;
    let top = lo.unsigned_abs().max(hi.unsigned_abs());
    check_order(top)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecialError::Domain { func: "bessel_k_scaled_deriv", x });
    }
    let kk = k_scaled_orders(top as usize, x);
    let mut s = 0.0;
    for i in 0..=k {
        s += binomial(k, i) * kk[(lo + 2 * i as i32).unsigned_abs() as usize];
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * s / f64::powi(2.0, k as i32))
}

pub(crate) fn j_orders(nmax: usize, x: f64) -> Vec<f64> {
    if x == 0.0 {
        let mut out = vec![0.0; nmax + 1];
        out[0] = 1.0;
        return out;
    }
    if x <= J_SERIES_MAX {
        (0..=nmax).map(|n| j_series(n, x)).collect()
    } else if x < J_ASYMPTOTIC_MIN {
        j_miller(nmax, x)
    } else {
        let mut out = vec![0.0; nmax.max(1) + 1];
        out[0] = j_hankel(0, x);
        out[1] = j_hankel(1, x);
        for n in 1..nmax {
            out[n + 1] = (2.0 * n as f64 / x) * out[n] - out[n - 1];
        }
        out.truncate(nmax + 1);
        out
    }
}

fn j_series(n: usize, x: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = 1.0;
    for k in 1..=n {
        term *= h / k as f64;
    }
    let q = -h * h;
    let mut sum = term;
    for k in 1..200 {
        term *= q / (k as f64 * (k + n) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn j_miller(nmax: usize, x: f64) -> Vec<f64> {
    let top = nmax.max(x.ceil() as usize);
    let mut start = top + 20 + (40.0 * top as f64).sqrt() as usize;
    start += start % 2;
    let mut out = vec![0.0; nmax + 1];
    let (mut jp, mut j) = (0.0_f64, 1e-30_f64);
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        let jm = (2.0 * k as f64 / x) * j - jp;
        jp = j;
        j = jm;
        if k <= nmax + 1 {
            out[k - 1] = j;
        }
        if (k - 1) % 2 == 0 && k > 1 {
            norm += 2.0 * j;
        }
        if j.abs() > 1e250 {
            let s = 1e-250;
            j *= s;
            jp *= s;
            norm *= s;
            out.iter_mut().for_each(|v| *v *= s);
        }
    }
    norm += j;
    out.iter_mut().for_each(|v| *v /= norm);
    out
}

fn j_hankel(n: u32, x: f64) -> f64 {
    let mu = 4.0 * f64::from(n * n);
    let (mut p, mut q) = (1.0, 0.0);
    let mut term = 1.0_f64;
    let mut last = f64::INFINITY;
    for k in 1..100 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if term.abs() > last || term == 0.0 {
            break;
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let (s, c) = x.sin_cos();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    // cos/sin of x - (n/2 + 1/4) pi without subtracting pi from x
    let (cchi, schi) = if n == 0 {
        ((c + s) * r, (s - c) * r)
    } else {
        ((s - c) * r, -(s + c) * r)
    };
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * cchi - q * schi)
}

pub(crate) fn k_scaled_orders(nmax: usize, x: f64) -> Vec<f64> {
    let (k0, k1) = if x <= K_SERIES_MAX {
        let (k0, k1) = k01_series(x);
        let e = x.exp();
        (k0 * e, k1 * e)
    } else {
        k01_cf2_scaled(x)
    };
    let mut out = Vec::with_capacity(nmax.max(1) + 1);
    out.push(k0);
    out.push(k1);
    for n in 1..nmax {
        let next = out[n - 1] + (2.0 * n as f64 / x) * out[n];
        out.push(next);
    }
    out.truncate(nmax + 1);
    out
}

fn k01_series(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let l = (0.5 * x).ln();
    // I0, I1 and the two harmonic sums in one pass
    let (mut i0, mut i1) = (1.0, 0.5 * x);
    let mut k0_sum = 0.0;
    // psi(k+1) + psi(k+2) at k = 0
    let mut k1_sum = 1.0 - 2.0 * EULER_GAMMA;
    let mut t0 = 1.0; // q^k / (k!)^2
    let mut t1 = 1.0; // q^k / (k! (k+1)!)
    let mut h = 0.0; // H_k
    for k in 1..60 {
        let kf = k as f64;
        t0 *= q / (kf * kf);
        t1 *= q / (kf * (kf + 1.0));
        h += 1.0 / kf;
        i0 += t0;
        i1 += 0.5 * x * t1;
        k0_sum += t0 * h;
        let psi = 2.0 * (h - EULER_GAMMA) + 1.0 / (kf + 1.0);
        k1_sum += t1 * psi;
        if t0 < 1e-18 * i0 && t1 < 1e-18 {
            break;
        }
    }
    let k0 = -(l + EULER_GAMMA) * i0 + k0_sum;
    let k1 = 1.0 / x + l * i1 - 0.25 * x * k1_sum;
    (k0, k1)
}

/// Steed's second continued fraction at order 0, returning `e^x K0`, `e^x K1`.
fn k01_cf2_scaled(x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}
