//! Corner cutting through a chain of bases of decreasing dimension. Level k
//! rewrites `Σ r_i b_i(t̂)` over the next shorter basis of the chain; the
//! weights follow from matching the cumulative sums of consecutive levels
//! at t̂. Chains:
//!
//! * m = 1: `Φ_{·,1} → φ_{·,1} → β → 1`
//! * m = 2: `Φ_{·,2} → φ_{·,2} → Φ_{·,1} → φ_{·,1} → β → 1`
//!
//! with `β_1(t) = ½(1 + (e^{-ω(1-t)} - e^{-ωt})/(1 - e^{-ω}))`, `β_0 = 1 - β_1`.

use super::Weights;
use crate::basis::{self, BasisValues, EvalMode, Order};

fn beta(w: f64, t: f64) -> BasisValues {
    let d = (-(-w).exp_m1()).max(f64::MIN_POSITIVE);
    let b1 = 0.5 * (1.0 + ((-w * (1.0 - t)).exp_m1() - (-w * t).exp_m1()) / d);
    BasisValues::from_slice(&[1.0 - b1, b1])
}

/// Weights taking values `b` of one level to values `bp` of the next:
/// `λ_j b'_j = S'_j - S_j = T_{j+1} - T'_{j+1}` with S head and T tail sums.
/// Each λ uses whichever side carries less mass.
fn lambdas(b: &[f64], bp: &[f64], out: &mut [f64; 6]) {
    let n = bp.len();
    let (mut head, mut head_p) = ([0.0; 7], [0.0; 7]);
    let (mut tail, mut tail_p) = ([0.0; 7], [0.0; 7]);
    for j in 0..n {
        head[j + 1] = head[j] + b[j];
        head_p[j + 1] = head_p[j] + bp[j];
    }
    for j in (0..=n).rev() {
        tail[j] = tail[j + 1] + b[j];
        if j < n {
            tail_p[j] = tail_p[j + 1] + bp[j];
        }
    }
    for j in 0..n {
        if bp[j] <= 0.0 {
            out[j] = 0.0;
        } else if head_p[j + 1] <= tail_p[j + 1] {
            out[j] = (head_p[j + 1] - head[j + 1]) / bp[j];
        } else {
            out[j] = (tail[j + 1] - tail_p[j + 1]) / bp[j];
        }
    }
}

pub(super) fn weights(order: Order, w: f64, t: f64, mode: EvalMode) -> Weights {
    let one = BasisValues::from_slice(&[1.0]);
    let chain: Vec<BasisValues> = match order {
        Order::M1 => vec![
            basis::phi_unchecked(Order::M1, w, t, mode),
            basis::varphi_unchecked(Order::M1, w, t),
            beta(w, t),
            one,
        ],
        Order::M2 => vec![
            basis::phi_unchecked(Order::M2, w, t, mode),
            basis::varphi_unchecked(Order::M2, w, t),
            basis::phi_unchecked(Order::M1, w, t, mode),
            basis::varphi_unchecked(Order::M1, w, t),
            beta(w, t),
            one,
        ],
    };
    let n = chain.len() - 1;
    let mut levels = [[0.0; 6]; 5];
    for k in 0..n {
        lambdas(&chain[k], &chain[k + 1], &mut levels[k]);
    }
    Weights::Cascade { n, levels }
}

pub(super) fn apply(n: usize, levels: &[[f64; 6]; 5], points: &[[f64; 3]]) -> [f64; 3] {
    let mut p = [[0.0; 3]; 6];
    p[..=n].copy_from_slice(&points[..=n]);
    for (k, lam) in levels.iter().take(n).enumerate() {
        for i in 0..n - k {
            let (l, next) = (lam[i], p[i + 1]);
            for (a, b) in p[i].iter_mut().zip(next) {
                *a = (1.0 - l) * *a + l * b;
            }
        }
    }
    p[0]
}
