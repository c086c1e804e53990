//! One `τ`-weighted corner-cutting step to control points of a degree 2m
//! Bernstein polygon with the same value at t̂, then the polynomial
//! sequential scheme with `h_k = (1 + kD/((2m+1-k) h_{k-1}))^{-1}`.

use super::Weights;
use crate::basis::{self, EvalMode, Order};

pub(super) fn weights(order: Order, w: f64, t: f64, mode: EvalMode) -> Weights {
    if t == 0.0 {
        Weights::Endpoint(0)
    } else if t == 1.0 {
        Weights::Endpoint(order.n_ctrl() - 1)
    } else {
        Weights::Corner {
            tau: basis::tau_unchecked(order, w, t, mode),
            t,
        }
    }
}

/// The intermediate Bernstein polygon `r¹_j = τ_j r_j + (1 - τ_j) r_{j+1}`.
pub(crate) fn first_step(tau: &[f64], points: &[[f64; 3]]) -> [[f64; 3]; 5] {
    let mut r1 = [[0.0; 3]; 5];
    for (j, &tj) in tau.iter().enumerate() {
        for c in 0..3 {
            r1[j][c] = tj * points[j][c] + (1.0 - tj) * points[j + 1][c];
        }
    }
    r1
}

pub(super) fn apply(tau: &[f64], t: f64, points: &[[f64; 3]]) -> [f64; 3] {
    let n = tau.len() - 1;
    let rev = t < 0.5;
    let d = if rev { t / (1.0 - t) } else { (1.0 - t) / t };
    let r1 = |k: usize| {
        let j = if rev { n - k } else { k };
        let (a, b, tj) = (points[j], points[j + 1], tau[j]);
        [
            tj * a[0] + (1.0 - tj) * b[0],
            tj * a[1] + (1.0 - tj) * b[1],
            tj * a[2] + (1.0 - tj) * b[2],
        ]
    };
    let mut q = r1(0);
    let mut h = 1.0;
    for k in 1..=n {
        let a = (n + 1 - k) as f64 * h;
        h = a / (a + k as f64 * d);
        let r = r1(k);
        for c in 0..3 {
            q[c] = (1.0 - h) * q[c] + h * r[c];
        }
    }
    q
}
