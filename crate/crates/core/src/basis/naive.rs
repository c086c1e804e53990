//! `Φ_{·,m}` by the printed closed forms, without any rearrangement.
//! Serves as the "direct evaluation" benchmark; loses accuracy for small ω
//! and overflows for large ω.

use super::{BasisValues, Order};

/// Largest ω for which the intermediate hyperbolic values stay finite.
/// The m = 2 forms contain products growing like `e^{2ω}`.
pub(crate) fn overflow_limit(order: Order) -> f64 {
    match order {
        Order::M1 => 700.0,
        Order::M2 => 350.0,
    }
}

fn g0(w: f64) -> f64 {
    3.0 * w + w.sinh() * (w.cosh() - 4.0)
}

fn phi1(w: f64, t: f64) -> [f64; 4] {
    let s = w.sinh() - w;
    let (sh, ch) = (w.sinh(), w.cosh());
    let (wt, wu) = (w * t, w - w * t);
    let den = (w / (0.5 * w).tanh() - 2.0) * (w - sh);
    [
        (wu.sinh() - w * (1.0 - t)) / s,
        (-wt - w * (1.0 - t) * ch + w * wu.cosh() + sh - wt.sinh() - wu.sinh()) / den,
        (-w * (1.0 - t) - wt * ch + w * wt.cosh() + sh - wu.sinh() - wt.sinh()) / den,
        (wt.sinh() - wt) / s,
    ]
}

fn phi2(w: f64, t: f64) -> [f64; 6] {
    let h = 0.5 * w;
    let g0w = g0(w);
    let g1 = 4.0 / (h.sinh() * (w.cosh() - 3.0 * w / h.tanh() + 5.0));
    let g2 = h.sinh() / (3.0 * (3.0 * w.sinh() - w * (w.cosh() + 2.0)));
    let (wt, wu) = (w * t, w - w * t);
    let (st, su) = ((0.5 * wt).sinh(), (0.5 * wu).sinh());
    let sh4 = h.sinh().powi(4);
    let (g0t, g0u) = (g0(wt), g0(wu));
    [
        g0u / g0w,
        g1 * h.sinh() * (su.powi(4) - sh4 * g0u / g0w),
        g2 * (-16.0 * su.powi(3) * st + g1 * g0w * su.powi(4) - g1 * sh4 * g0u),
        g2 * (-16.0 * st.powi(3) * su + g1 * g0w * st.powi(4) - g1 * sh4 * g0t),
        g1 * h.sinh() * (st.powi(4) - sh4 * g0t / g0w),
        g0t / g0w,
    ]
}

pub(crate) fn phi(order: Order, w: f64, t: f64) -> BasisValues {
    match order {
        Order::M1 => BasisValues::from_slice(&phi1(w, t)),
        Order::M2 => BasisValues::from_slice(&phi2(w, t)),
    }
}
