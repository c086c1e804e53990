//! Fifth order Taylor expansions of `Φ_{·,m}` at ω = 0. Polynomials in t
//! with coefficients in ω², evaluated by Horner's rule.

use super::{BasisValues, Order};

fn t31(w2: f64, t: f64) -> f64 {
    let t2 = t * t;
    let a = (10.0 * t2 - 21.0) * t2 + 11.0;
    let b = 420.0 * (t2 - 1.0);
    t * t2 * ((a * w2 + b) * w2 + 8400.0) / 8400.0
}

fn t21(w2: f64, t: f64) -> f64 {
    let a = (((30.0 * t - 40.0) * t + 23.0) * t - 12.0) * t - 3.0;
    let b = 420.0 * ((3.0 * t - 2.0) * t + 1.0);
    3.0 * t * t * (1.0 - t) * ((a * w2 + b) * w2 + 25200.0) / 25200.0
}

fn t52(w2: f64, t: f64) -> f64 {
    let t2 = t * t;
    let a = (49.0 * t2 - 100.0) * t2 + 51.0;
    let b = 840.0 * (t2 - 1.0);
    t2 * t2 * t * ((a * w2 + b) * w2 + 7056.0) / 7056.0
}

fn t42(w2: f64, t: f64) -> f64 {
    let a = (((245.0 * t - 196.0) * t - 96.0) * t + 44.0) * t - 1.0;
    let b = 840.0 * ((5.0 * t - 2.0) * t - 1.0);
    let t2 = t * t;
    5.0 * t2 * t2 * (1.0 - t) * ((a * w2 + b) * w2 + 35280.0) / 35280.0
}

fn t32(w2: f64, t: f64) -> f64 {
    let a = (((245.0 * t - 392.0) * t + 253.0) * t - 82.0) * t + 3.0;
    let b = 420.0 * ((10.0 * t - 8.0) * t + 3.0);
    let u = 1.0 - t;
    10.0 * t * t * t * u * u * ((a * w2 + b) * w2 + 35280.0) / 35280.0
}

pub(crate) fn phi(order: Order, w: f64, t: f64) -> BasisValues {
    let w2 = w * w;
    let u = 1.0 - t;
    match order {
        Order::M1 => BasisValues::from_slice(&[t31(w2, u), t21(w2, u), t21(w2, t), t31(w2, t)]),
        Order::M2 => BasisValues::from_slice(&[
            t52(w2, u),
            t42(w2, u),
            t32(w2, u),
            t32(w2, t),
            t42(w2, t),
            t52(w2, t),
        ]),
    }
}

/// `τ_{·,m}` of the expansions above, exactly: `τ_j = u + t u ω² (a_j + b_j ω²)`
/// with u = 1 - t.
pub(crate) fn tau(order: Order, w: f64, t: f64) -> BasisValues {
    let w2 = w * w;
    let (u, t2) = (1.0 - t, t * t);
    let f = |a: f64, b: f64| u + t * u * w2 * (a + b * w2);
    match order {
        Order::M1 => BasisValues::from_slice(&[
            f(
                (t - 2.0) / 20.0,
                (t - 2.0) * ((10.0 * t - 20.0) * t - 1.0) / 8400.0,
            ),
            f(
                (2.0 * t - 1.0) / 40.0,
                (2.0 * t - 1.0) * ((10.0 * t - 10.0) * t - 3.0) / 16800.0,
            ),
            f((t + 1.0) / 20.0, (t + 1.0) * (10.0 * t2 - 11.0) / 8400.0),
        ]),
        Order::M2 => BasisValues::from_slice(&[
            f(
                5.0 * (t - 2.0) / 42.0,
                (t - 2.0) * ((49.0 * t - 98.0) * t - 2.0) / 7056.0,
            ),
            f(
                5.0 * (4.0 * t - 5.0) / 168.0,
                (((196.0 * t - 539.0) * t + 396.0) * t - 54.0) / 28224.0,
            ),
            f(
                5.0 * (2.0 * t - 1.0) / 84.0,
                (2.0 * t - 1.0) * ((49.0 * t - 49.0) * t + 2.0) / 14112.0,
            ),
            f(
                5.0 * (4.0 * t + 1.0) / 168.0,
                (((196.0 * t - 49.0) * t - 94.0) * t + 1.0) / 28224.0,
            ),
            f(
                5.0 * (t + 1.0) / 42.0,
                (t + 1.0) * (49.0 * t2 - 51.0) / 7056.0,
            ),
        ]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::tau::{tau_from_phi, TauForm};

    #[test]
    fn tau_matches_cumulative_ratio() {
        for order in [Order::M1, Order::M2] {
            for &w in &[0.01, 0.1, 0.3] {
                for &t in &[0.2, 0.5, 0.7] {
                    let direct = tau(order, w, t);
                    let ratio = tau_from_phi(order, &phi(order, w, t), t, TauForm::Printed);
                    for (a, b) in direct.iter().zip(ratio.iter()) {
                        assert!((a - b).abs() < 1e-13, "{order:?} {w} {t}: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn bernstein_at_zero_omega() {
        let p = phi(Order::M1, 0.0, 0.3);
        let b = [0.343, 3.0 * 0.3 * 0.49, 3.0 * 0.09 * 0.7, 0.027];
        for (x, y) in p.iter().zip(b.iter()) {
            assert!((x - y).abs() < 1e-15);
        }
        let p = phi(Order::M2, 0.0, 0.5);
        for (x, n) in p.iter().zip([1.0, 5.0, 10.0, 10.0, 5.0, 1.0]) {
            assert!((x - n / 32.0).abs() < 1e-16);
        }
    }

    #[test]
    fn partition_of_unity() {
        for order in [Order::M1, Order::M2] {
            for &w in &[0.0, 0.1, 0.5, 1.5] {
                for k in 0..=10 {
                    let p = phi(order, w, k as f64 / 10.0);
                    assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-14);
                }
            }
        }
    }
}
