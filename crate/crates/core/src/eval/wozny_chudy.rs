//! Sequential convex combinations: after step k the running point is the
//! normalized partial sum `Σ_{i≤k} r_i Φ_i / Σ_{i≤k} Φ_i`, so the weight of
//! the new point is `h_k = Φ_k / Σ_{i≤k} Φ_i`. For t̂ ≥ ½ the points are
//! added from the far end, keeping the partial sums away from underflow.

use super::Weights;
use crate::basis::{self, BasisValues, EvalMode, Order};

pub(super) fn weights(order: Order, w: f64, t: f64, mode: EvalMode) -> Weights {
    let phi = basis::phi_unchecked(order, w, t, mode);
    let n = phi.len() - 1;
    let reverse = t >= 0.5;
    let mut h = BasisValues::zeros(n + 1);
    let hs = h.as_mut_slice();
    hs[0] = 1.0;
    let idx = |k: usize| if reverse { n - k } else { k };
    let mut s = phi[idx(0)];
    for k in 1..=n {
        let v = phi[idx(k)];
        s += v;
        hs[k] = if s > 0.0 { v / s } else { 1.0 };
    }
    Weights::Sequential { h, reverse }
}

pub(super) fn apply(h: &[f64], reverse: bool, points: &[[f64; 3]]) -> [f64; 3] {
    let n = h.len() - 1;
    let idx = |k: usize| if reverse { n - k } else { k };
    let mut q = points[idx(0)];
    for k in 1..=n {
        let (hk, r) = (h[k], points[idx(k)]);
        for c in 0..3 {
            q[c] = (1.0 - hk) * q[c] + hk * r[c];
        }
    }
    q
}
