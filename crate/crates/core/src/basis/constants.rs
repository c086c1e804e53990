//! Scalar constants of the bases as functions of ω.
//!
//! Each constant is a ratio whose numerator cancels to high order at ω = 0,
//! and whose hyperbolic functions overflow for large ω. Three regimes:
//! power series for ω < `SERIES_LIMIT`, the closed forms in sinh/cosh in
//! between, and forms in `E = e^{-ω}` for ω > `LARGE_LIMIT`.

use serde::Serialize;

use super::{Order, ShapeParam};

const SERIES_LIMIT: f64 = 1.0;
const LARGE_LIMIT: f64 = 20.0;

/// Constants of the m = 1 bases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BasisConstantsM1 {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// `c3/c1`, computed directly so it stays finite where `c1` underflows.
    pub c3_over_c1: f64,
}

/// Constants of the m = 2 bases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BasisConstantsM2 {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub q4: f64,
    pub g0: f64,
    pub g1: f64,
    pub g2: f64,
    /// `q4/q1`, computed directly so it stays finite where `q1` underflows.
    pub q4_over_q1: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BasisConstants {
    M1(BasisConstantsM1),
    M2(BasisConstantsM2),
}

pub fn constants(order: Order, omega: ShapeParam) -> BasisConstants {
    match order {
        Order::M1 => BasisConstants::M1(constants_m1(omega.get())),
        Order::M2 => BasisConstants::M2(constants_m2(omega.get())),
    }
}

/// `Σ_{k≥k0} coef(k) x^{2k+1}/(2k+1)!`, summed until the terms are negligible.
fn odd_series(x: f64, k0: u32, coef: impl Fn(u32) -> f64) -> f64 {
    let x2 = x * x;
    // x^{2k+1}/(2k+1)! at k = k0
    let mut p = x;
    for j in 1..=(2 * k0 + 1) {
        p *= if j == 1 { 1.0 } else { x / j as f64 };
    }
    let mut sum = 0.0;
    let mut k = k0;
    loop {
        let term = coef(k) * p;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() || k > k0 + 60 {
            break;
        }
        k += 1;
        p *= x2 / ((2 * k) as f64 * (2 * k + 1) as f64);
    }
    sum
}

/// `sinh(x) - x`
fn sinh_minus_id(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        odd_series(x, 1, |_| 1.0)
    } else {
        x.sinh() - x
    }
}

/// `x cosh x - sinh x`
fn xcosh_minus_sinh(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        odd_series(x, 1, |k| (2 * k) as f64)
    } else {
        x * x.cosh() - x.sinh()
    }
}

/// `g0(ω) = 3ω + sinh ω (cosh ω - 4)`
fn g0_value(w: f64) -> f64 {
    if w < SERIES_LIMIT {
        odd_series(w, 2, |k| 4f64.powi(k as i32) - 4.0)
    } else {
        3.0 * w + w.sinh() * (w.cosh() - 4.0)
    }
}

/// `5 sinh ω - 3ω + (sinh ω - 3ω) cosh ω`
fn q3_numerator(w: f64) -> f64 {
    if w < SERIES_LIMIT {
        odd_series(w, 2, |k| 4f64.powi(k as i32) - 6.0 * k as f64 + 2.0)
    } else {
        5.0 * w.sinh() - 3.0 * w + (w.sinh() - 3.0 * w) * w.cosh()
    }
}

/// `ω (2 + cosh ω) - 3 sinh ω`
fn q4_numerator(w: f64) -> f64 {
    if w < SERIES_LIMIT {
        odd_series(w, 2, |k| (2 * k) as f64 - 2.0)
    } else {
        w * (2.0 + w.cosh()) - 3.0 * w.sinh()
    }
}

/// `sinh(y) (cosh 2y + 5) - 6y cosh y`, the denominator of `g1` with y = ω/2.
fn g1_denominator(y: f64) -> f64 {
    if y < SERIES_LIMIT {
        odd_series(y, 2, |k| {
            let n = 2 * k + 1;
            (3f64.powi(n as i32) + 9.0) / 2.0 - 6.0 * n as f64
        })
    } else {
        y.sinh() * ((2.0 * y).cosh() + 5.0) - 6.0 * y * y.cosh()
    }
}

pub fn constants_m1(w: f64) -> BasisConstantsM1 {
    let e = (-0.5 * w).exp();
    let c1 = 2.0 * e / (1.0 + e * e);
    let x = 0.5 * w;
    let (c2, c3, c3_over_c1) = if w > LARGE_LIMIT {
        let big_e = e * e;
        let c2 = (1.0 - big_e * big_e - 2.0 * w * big_e) / (w * (1.0 - big_e).powi(2));
        let core = (x * (1.0 + big_e) - (1.0 - big_e)) / (x * (1.0 - big_e).powi(2));
        (c2, 2.0 * e * core, (1.0 + big_e) * core)
    } else {
        // ω(cosh ω - 1) = 2ω sinh²(ω/2); x sinh² x with x = ω/2
        let sh = x.sinh();
        let c2 = sinh_minus_id(w) / (2.0 * w * sh * sh);
        let c3 = xcosh_minus_sinh(x) / (x * sh * sh);
        (c2, c3, c3 * x.cosh())
    };
    BasisConstantsM1 {
        c1,
        c2,
        c3,
        c3_over_c1,
    }
}

pub fn constants_m2(w: f64) -> BasisConstantsM2 {
    let big_e = (-w).exp();
    let p = 1.0 + 4.0 * big_e + big_e * big_e;
    let q0 = (1.0 + big_e).powi(2) / p;
    let q1 = 2.0 * big_e / p;
    let y = 0.5 * w;
    if w > LARGE_LIMIT {
        let e = (-y).exp();
        let e2 = big_e * big_e;
        let e3 = e2 * big_e;
        let den = w * (1.0 - big_e).powi(4);
        let q2 = (12.0 * w * e2 + 1.0 - e2 * e2 - 8.0 * big_e + 8.0 * e3) / (2.0 * den);
        let q3 = (1.0 - e2 * e2 + 10.0 * big_e
            - 10.0 * e3
            - 12.0 * w * e2
            - 6.0 * w * big_e
            - 6.0 * w * e3)
            / den;
        let r = w * p - 3.0 * (1.0 - e2);
        let q4 = 2.0 * big_e * r / den;
        let q4_over_q1 = r * p / den;
        let g0 = 3.0 * w + w.sinh() * (w.cosh() - 4.0);
        let g1 = 16.0 * e * big_e
            / ((1.0 - big_e) * (1.0 + 10.0 * big_e + e2) - 12.0 * y * big_e * (1.0 + big_e));
        let g2 = -2.0 * (1.0 - big_e) * e / (3.0 * (2.0 * r));
        BasisConstantsM2 {
            q0,
            q1,
            q2,
            q3,
            q4,
            g0,
            g1,
            g2,
            q4_over_q1,
        }
    } else {
        // ω (cosh ω - 1)² = 4ω sinh⁴(ω/2)
        let sh = y.sinh();
        let den = 4.0 * w * sh.powi(4);
        let g0 = g0_value(w);
        let n4 = q4_numerator(w);
        let q4 = n4 / den;
        BasisConstantsM2 {
            q0,
            q1,
            q2: g0 / (2.0 * den),
            q3: q3_numerator(w) / den,
            q4,
            g0,
            g1: 4.0 / g1_denominator(y),
            g2: -sh / (3.0 * n4),
            q4_over_q1: q4 * (w.cosh() + 2.0),
        }
    }
}

/// `∫₀¹ φ_{i,m}`, i = 0..=2m: the weights of the derivative formula and of
/// the arc length recurrence.
pub fn varphi_integrals(order: Order, w: f64) -> Vec<f64> {
    match order {
        Order::M1 => {
            let c = constants_m1(w);
            vec![c.c2, c.c3_over_c1, c.c2]
        }
        Order::M2 => {
            let q = constants_m2(w);
            vec![q.q2, q.q3, q.q4_over_q1, q.q3, q.q2]
        }
    }
}
