//! `τ_{j,m}` from `Φ_{·,m}` through the Bernstein basis of degree 2m+1:
//! the cumulative sums of `Φ` and `B` agree up to the factor `τ_j`.

use super::{BasisValues, Order};

/// Which cumulative sum the ratio is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauForm {
    /// `τ_j = (Σ_{i≤j} Φ_i - Σ_{i<j} B_i) / B_j`
    Left,
    /// `τ_j = 1 - (Σ_{i>j} Φ_i - Σ_{i>j} B_i) / B_j`
    Right,
    /// Left below the middle index, right above; the middle index switches
    /// at t = 1/2.
    Printed,
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Bernstein polynomials of degree `n` at `t`.
pub(crate) fn bernstein(n: usize, t: f64) -> BasisValues {
    let mut b = BasisValues::zeros(n + 1);
    let u = 1.0 - t;
    for (i, v) in b.as_mut_slice().iter_mut().enumerate() {
        *v = binom(n, i) * t.powi(i as i32) * u.powi((n - i) as i32);
    }
    b
}

/// `τ_{j,m}`, j = 0..=2m, for t in (0, 1).
pub fn tau_from_phi(order: Order, phi: &[f64], t: f64, form: TauForm) -> BasisValues {
    let m = order.m();
    let n = 2 * m;
    let b = bernstein(n, t);
    let mut out = BasisValues::zeros(n + 1);
    for j in 0..=n {
        let left = match form {
            TauForm::Left => true,
            TauForm::Right => false,
            TauForm::Printed => j < m || (j == m && t < 0.5),
        };
        out.as_mut_slice()[j] = if left {
            let sp: f64 = phi[..=j].iter().sum();
            let sb: f64 = b[..j].iter().sum();
            (sp - sb) / b[j]
        } else {
            let sp: f64 = phi[j + 1..].iter().sum();
            let sb: f64 = b[j + 1..].iter().sum();
            1.0 - (sp - sb) / b[j]
        };
    }
    out
}
