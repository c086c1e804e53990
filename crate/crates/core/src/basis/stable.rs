//! Large-ω forms of `Φ_{·,m}` and `τ_{·,m}`: ratios of exponential
//! polynomials in which every exponential has a nonpositive argument, so
//! nothing overflows. Exponentials below the double range flush to 0.
//!
//! The expressions lose accuracy as ω → 0 (the 1/ω terms cancel); that
//! regime belongs to the Taylor forms.

use super::{BasisValues, Order};

#[inline]
fn ex(x: f64) -> f64 {
    x.exp()
}

// ---------------------------------------------------------------- m = 1

fn phi31(w: f64, t: f64) -> f64 {
    (ex(-2.0 * w * t) + 2.0 * w * t * ex(-w * t) - 1.0) / (ex(-2.0 * w) + 2.0 * w * ex(-w) - 1.0)
        * ex(w * (t - 1.0))
}

fn phi21(w: f64, t: f64) -> f64 {
    let iw = 1.0 / w;
    let n = (iw + t) * ex(-3.0 * w)
        - iw * ex(w * (t - 3.0))
        - (iw + 1.0) * ex(-w * (t + 2.0))
        - (iw + 3.0 * t - 2.0) * ex(-2.0 * w)
        + (2.0 * iw - 1.0) * ex(w * (t - 2.0))
        + (2.0 * iw + 1.0) * ex(-w * (t + 1.0))
        - (iw - 3.0 * t + 2.0) * ex(-w)
        - (iw - 1.0) * ex(w * (t - 1.0))
        - iw * ex(-t * w)
        + iw
        - t;
    let d = (2.0 * iw + 1.0) * ex(-3.0 * w)
        - (2.0 * iw - 5.0 - 2.0 * w) * ex(-2.0 * w)
        - (2.0 * iw + 5.0 - 2.0 * w) * ex(-w)
        + 2.0 * iw
        - 1.0;
    n / d
}

// ---------------------------------------------------------------- m = 2

fn phi52(w: f64, t: f64) -> f64 {
    let f =
        |x: f64| ex(-4.0 * x) - 8.0 * ex(-3.0 * x) - 12.0 * x * ex(-2.0 * x) + 8.0 * ex(-x) - 1.0;
    f(w * t) / f(w) * ex(2.0 * w * (t - 1.0))
}

fn phi42(w: f64, t: f64) -> f64 {
    let wt = w * t;
    let n = 2.0 * ex(-w * (2.0 * t + 5.0)) + 3.0 * (1.0 + 2.0 * wt) * ex(-w * (t + 5.0))
        - 6.0 * ex(-5.0 * w)
        + ex(w * (t - 5.0))
        - 2.0 * ex(-w * (3.0 * t + 4.0))
        - 2.0 * ex(-2.0 * w * (t + 2.0))
        - 3.0 * (9.0 + 10.0 * wt) * ex(-w * (t + 4.0))
        + 38.0 * ex(-4.0 * w)
        - 7.0 * ex(w * (t - 4.0))
        - (1.0 + 6.0 * w) * ex(-3.0 * w * (t + 1.0))
        + 24.0 * (1.0 + w) * ex(-w * (2.0 * t + 3.0))
        + 12.0 * (2.0 + w * (5.0 * t - 3.0)) * ex(-w * (t + 3.0))
        - 8.0 * (7.0 - 3.0 * w) * ex(-3.0 * w)
        + 3.0 * (3.0 - 2.0 * w) * ex(w * (t - 3.0))
        + 3.0 * (3.0 + 2.0 * w) * ex(-w * (3.0 * t + 2.0))
        - 8.0 * (7.0 + 3.0 * w) * ex(-2.0 * w * (t + 1.0))
        + 12.0 * (2.0 - w * (5.0 * t - 3.0)) * ex(-w * (t + 2.0))
        + 24.0 * (1.0 - w) * ex(-2.0 * w)
        - (1.0 - 6.0 * w) * ex(w * (t - 2.0))
        - 7.0 * ex(-w * (3.0 * t + 1.0))
        + 38.0 * ex(-w * (2.0 * t + 1.0))
        - 3.0 * (9.0 - 10.0 * wt) * ex(-w * (t + 1.0))
        - 2.0 * ex(-w)
        - 2.0 * ex(w * (t - 1.0))
        + ex(-3.0 * wt)
        - 6.0 * ex(-2.0 * wt)
        + 3.0 * (1.0 - 2.0 * wt) * ex(-wt)
        + 2.0;
    let w2 = w * w;
    let d = ex(-7.0 * w) + (1.0 + 6.0 * w) * ex(-6.0 * w) - 27.0 * (3.0 + 2.0 * w) * ex(-5.0 * w)
        + (79.0 - 156.0 * w - 72.0 * w2) * ex(-4.0 * w)
        + (79.0 + 156.0 * w - 72.0 * w2) * ex(-3.0 * w)
        - 27.0 * (3.0 - 2.0 * w) * ex(-2.0 * w)
        + (1.0 - 6.0 * w) * ex(-w)
        + 1.0;
    n / d * ex(w * (t - 1.0))
}

fn phi32(w: f64, t: f64) -> f64 {
    let iw = 1.0 / w;
    let n = (3.0 * iw + 2.0 * t) * ex(-5.0 * w) - 4.0 * iw * ex(w * (t - 5.0))
        + iw * ex(w * (2.0 * t - 5.0))
        - 4.0 * (2.0 * iw + 1.0) * ex(-w * (t + 4.0))
        + (9.0 * iw - 2.0 * (5.0 * t - 6.0)) * ex(-4.0 * w)
        - 4.0 * (iw + 3.0) * ex(w * (t - 4.0))
        + (3.0 * iw + 4.0) * ex(2.0 * w * (t - 2.0))
        + (5.0 * iw + 2.0) * ex(-w * (2.0 * t + 3.0))
        + 4.0 * (iw - 1.0) * ex(-w * (t + 3.0))
        - 4.0 * (3.0 * iw - 5.0 * t) * ex(-3.0 * w)
        + 4.0 * (3.0 * iw + 1.0) * ex(w * (t - 3.0))
        - (9.0 * iw + 2.0) * ex(w * (2.0 * t - 3.0))
        - (9.0 * iw - 2.0) * ex(-2.0 * w * (t + 1.0))
        + 4.0 * (3.0 * iw - 1.0) * ex(-w * (t + 2.0))
        - 4.0 * (3.0 * iw + 5.0 * t) * ex(-2.0 * w)
        + 4.0 * (iw + 1.0) * ex(w * (t - 2.0))
        + (5.0 * iw - 2.0) * ex(2.0 * w * (t - 1.0))
        + (3.0 * iw - 4.0) * ex(-w * (2.0 * t + 1.0))
        - 4.0 * (iw - 3.0) * ex(-w * (t + 1.0))
        + (9.0 * iw + 2.0 * (5.0 * t - 6.0)) * ex(-w)
        - 4.0 * (2.0 * iw - 1.0) * ex(w * (t - 1.0))
        + iw * ex(-2.0 * w * t)
        - 4.0 * iw * ex(-w * t)
        + 3.0 * iw
        - 2.0 * t;
    let d = 2.0
        * ((3.0 * iw + 1.0) * ex(-5.0 * w) + (27.0 * iw + 31.0 + 6.0 * w) * ex(-4.0 * w)
            - 2.0 * (15.0 * iw - 23.0 - 15.0 * w) * ex(-3.0 * w)
            - 2.0 * (15.0 * iw + 23.0 - 15.0 * w) * ex(-2.0 * w)
            + (27.0 * iw - 31.0 + 6.0 * w) * ex(-w)
            + 3.0 * iw
            - 1.0);
    n / d
}

pub(crate) fn phi(order: Order, w: f64, t: f64) -> BasisValues {
    let u = 1.0 - t;
    match order {
        Order::M1 => BasisValues::from_slice(&[phi31(w, u), phi21(w, u), phi21(w, t), phi31(w, t)]),
        Order::M2 => BasisValues::from_slice(&[
            phi52(w, u),
            phi42(w, u),
            phi32(w, u),
            phi32(w, t),
            phi42(w, t),
            phi52(w, t),
        ]),
    }
}

// ---------------------------------------------------------------- τ

fn tau1(w: f64, t: f64) -> [f64; 3] {
    let iw = 1.0 / w;
    let em = ex(-w);
    let em2 = ex(-2.0 * w);
    let base = em2 + 2.0 * w * em - 1.0;
    let tm1 = t - 1.0;
    let t0 = (ex(w * (t - 2.0)) - 2.0 * tm1 * w * em - ex(-t * w)) / (tm1 * tm1 * base);
    let n1 = ((2.0 * iw + 1.0) * t * t - (4.0 * iw + 1.0) * t + iw) * em2
        - iw * ex(w * tm1)
        - iw * ex(w * (t - 2.0))
        + 2.0 * t * tm1 * em
        + iw * ex(-t * w)
        + iw * ex(-w * (t + 1.0))
        - (2.0 * iw - 1.0) * t * t
        + (4.0 * iw - 1.0) * t
        - iw;
    let d1 = 2.0 * t * tm1 * (em + 1.0) * ((2.0 * iw + 1.0) * em - 2.0 * iw + 1.0);
    let t2 = (t * t * em2 - ex(-w * (t + 1.0)) + 2.0 * t * tm1 * w * em + ex(w * tm1) - t * t)
        / (t * t * base);
    [t0, n1 / d1, t2]
}

fn tau2(w: f64, t: f64) -> [f64; 5] {
    let iw = 1.0 / w;
    let em = ex(-w);
    let em2 = ex(-2.0 * w);
    let em3 = ex(-3.0 * w);
    let em4 = ex(-4.0 * w);
    let tm1 = t - 1.0;
    let t2 = t * t;
    let t3 = t2 * t;
    let t4 = t2 * t2;
    let tm1_2 = tm1 * tm1;
    let tm1_4 = tm1_2 * tm1_2;

    let base0 = -em4 + 8.0 * em3 + 12.0 * w * em2 - 8.0 * em + 1.0;
    let n0 = -ex(2.0 * w * (t - 2.0)) + 8.0 * ex(w * (t - 3.0))
        - 12.0 * tm1 * w * em2
        - 8.0 * ex(-w * (t + 1.0))
        + ex(-2.0 * t * w);
    let d0 = tm1_4 * base0;

    let base1 = em3 + 3.0 * (2.0 * w + 3.0) * em2 + 3.0 * (2.0 * w - 3.0) * em - 1.0;
    let p = 3.0 * t4 - 12.0 * t3 + 18.0 * t2 - 12.0 * t + 2.0;
    let q = 2.0 * t * w * (t3 - 4.0 * t2 + 6.0 * t - 3.0);
    let n1 = tm1_4 * em3 - 2.0 * ex(w * (t - 3.0)) + ex(w * (2.0 * t - 3.0)) + 3.0 * (p + q) * em2
        - 6.0 * ex(w * (t - 2.0))
        + 6.0 * ex(-w * (t + 1.0))
        - 3.0 * (p - q) * em
        - ex(-2.0 * t * w)
        + 2.0 * ex(-t * w)
        - tm1_4;
    let d1 = 4.0 * t * tm1_2 * tm1 * base1;

    let a = 3.0 * (6.0 * t4 - 16.0 * t3 + 12.0 * t2 - 1.0) * iw;
    let b = 2.0 * t * (3.0 * t3 - 8.0 * t2 + 6.0 * t - 1.0);
    // the e^{-2ω} bracket carries a + sign; see the crate notes on this form
    let n2 = (a + b) * em2 + 4.0 * iw * ex(w * (t - 2.0))
        - iw * ex(2.0 * w * tm1)
        - 4.0 * iw * ex(-w * (t + 1.0))
        + 4.0 * b * em
        + 4.0 * iw * ex(w * tm1)
        + iw * ex(-2.0 * t * w)
        - 4.0 * iw * ex(-t * w)
        - a
        + b;
    let d2 = 12.0 * t2 * tm1_2 * ((3.0 * iw + 1.0) * em2 + 4.0 * em - 3.0 * iw + 1.0);

    let n3 = t3 * (3.0 * t - 4.0) * em3
        + 2.0 * ex(-w * (t + 2.0))
        + 3.0 * (2.0 * t * w - 8.0 * t3 * w + 6.0 * t4 * w - 12.0 * t3 + 9.0 * t4 + 1.0) * em2
        - 6.0 * ex(w * (t - 2.0))
        + ex(2.0 * w * tm1)
        - ex(-w * (2.0 * t + 1.0))
        + 6.0 * ex(-w * (t + 1.0))
        + 3.0 * (2.0 * t * w - 8.0 * t3 * w + 6.0 * t4 * w + 12.0 * t3 - 9.0 * t4 - 1.0) * em
        - 2.0 * ex(w * tm1)
        - t3 * (3.0 * t - 4.0);
    let d3 = 4.0 * t3 * tm1 * base1;

    let n4 = -t4 * em4 + 8.0 * t4 * em3 + ex(-2.0 * w * (t + 1.0)) - 8.0 * ex(-w * (t + 2.0))
        + 12.0 * t * (t3 - 1.0) * w * em2
        + 8.0 * ex(w * (t - 2.0))
        - ex(2.0 * w * tm1)
        - 8.0 * t4 * em
        + t4;
    let d4 = t4 * base0;

    [n0 / d0, n1 / d1, n2 / d2, n3 / d3, n4 / d4]
}

pub(crate) fn tau(order: Order, w: f64, t: f64) -> BasisValues {
    match order {
        Order::M1 => BasisValues::from_slice(&tau1(w, t)),
        Order::M2 => BasisValues::from_slice(&tau2(w, t)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{naive, tau::tau_from_phi, tau::TauForm};
    use super::*;

    #[test]
    fn matches_naive_at_moderate_omega() {
        for order in [Order::M1, Order::M2] {
            for &w in &[0.7, 3.0, 11.0] {
                for k in 1..20 {
                    let t = k as f64 / 20.0;
                    let (a, b) = (phi(order, w, t), naive::phi(order, w, t));
                    for (x, y) in a.iter().zip(b.iter()) {
                        assert!((x - y).abs() < 1e-8, "{order:?} w={w} t={t}: {x} vs {y}");
                    }
                    // naive τ divides by small Bernstein values and drifts beyond ω ≈ 3
                    if w > 3.0 {
                        continue;
                    }
                    let ts = tau(order, w, t);
                    let tn = tau_from_phi(order, &b, t, TauForm::Printed);
                    for (x, y) in ts.iter().zip(tn.iter()) {
                        assert!(
                            (x - y).abs() < 1e-8 * (1.0 + y.abs()),
                            "{order:?} w={w} t={t}: {x} vs {y}"
                        );
                    }
                }
            }
        }
    }
}
