//! `ψ` and `φ` bases. Written with `exp_m1` and negative exponents only, so
//! the same expressions are accurate for every ω > 0.

use super::{BasisValues, Order};

/// `(ψ_{0,1}, ψ_{1,1})`, the ratios `sinh(ω(1-t)/2)/sinh(ω/2)` and mirror.
fn psi1(w: f64, t: f64) -> [f64; 2] {
    let d = (-w).exp_m1();
    let p0 = (-0.5 * w * t).exp() * (-w * (1.0 - t)).exp_m1() / d;
    let p1 = (-0.5 * w * (1.0 - t)).exp() * (-w * t).exp_m1() / d;
    [p0, p1]
}

/// `(φ_{0,1}, φ_{1,1}, φ_{2,1})`.
fn varphi1(w: f64, t: f64) -> [f64; 3] {
    let d = (-w).exp_m1();
    let a = (-w * t).exp_m1();
    let b = (-w * (1.0 - t)).exp_m1();
    let d2 = d * d;
    [
        (-w * t).exp() * b * b / d2,
        a * b * (1.0 + (-w).exp()) / d2,
        (-w * (1.0 - t)).exp() * a * a / d2,
    ]
}

pub(crate) fn psi(order: Order, w: f64, t: f64) -> BasisValues {
    match order {
        Order::M1 => BasisValues::from_slice(&psi1(w, t)),
        Order::M2 => BasisValues::from_slice(&varphi1(w, t)),
    }
}

pub(crate) fn varphi(order: Order, w: f64, t: f64) -> BasisValues {
    match order {
        Order::M1 => BasisValues::from_slice(&varphi1(w, t)),
        Order::M2 => {
            let [p0, p1, p2] = varphi1(w, t);
            BasisValues::from_slice(&[
                p0 * p0,
                2.0 * p0 * p1,
                p1 * p1 + 2.0 * p0 * p2,
                2.0 * p1 * p2,
                p2 * p2,
            ])
        }
    }
}
