//! Dynamic evaluation of m = 1 curves at equispaced parameters: the curve is
//! lifted to R⁴, where stepping t by h is a fixed linear map. The map has
//! an entry growing like `e^{ωh}`, so the recursion loses all accuracy once
//! ω is of order ten.

use nalgebra::{Matrix3, Matrix4, Vector4};
use serde::Serialize;

use crate::basis::{constants_m1, EvalMode, Order};
use crate::curve::EphCurve;
use crate::error::{EphError, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DynamicEvalReport {
    pub k: usize,
    pub samples: Vec<[f64; 3]>,
    /// `max_i |y_i - r(ih)|_∞ / max_i |r(ih)|_∞` against direct evaluation.
    pub max_rel_error: f64,
}

/// `B` with `B Φ_{·,1}(t) = (1, t, e^{ωt}, e^{-ωt})`.
#[rustfmt::skip]
pub(crate) fn monomial_change(w: f64) -> Matrix4<f64> {
    let c2 = constants_m1(w).c2;
    let (ep, em) = (w.exp(), (-w).exp());
    Matrix4::new(
        1.0, 1.0, 1.0, 1.0,
        0.0, c2, 1.0 - c2, 1.0,
        1.0, 1.0 + w * c2, ep * (1.0 - w * c2), ep,
        1.0, 1.0 - w * c2, em * (1.0 + w * c2), em,
    )
}

/// `C` with `Φ_{·,1}(t + h) = C Φ_{·,1}(t)`.
#[rustfmt::skip]
pub(crate) fn shift_matrix(w: f64, h: f64) -> Result<Matrix4<f64>> {
    let b = monomial_change(w);
    let b_inv = b.try_inverse().ok_or(EphError::SingularControlBlock)?;
    let c_hat = Matrix4::new(
        1.0, 0.0, 0.0, 0.0,
        h, 1.0, 0.0, 0.0,
        0.0, 0.0, (w * h).exp(), 0.0,
        0.0, 0.0, 0.0, (-w * h).exp(),
    );
    Ok(b_inv * c_hat * b)
}

/// Samples `r(i/(k-1))`, i = 0..k, of a spatial m = 1 curve by the lifted
/// recursion `z_i = M z_{i-1}`.
pub fn dynamic_eval_m1(curve: &EphCurve, k: usize) -> Result<DynamicEvalReport> {
    if curve.order() != Order::M1 {
        return Err(EphError::invalid("m", "dynamic evaluation needs m = 1"));
    }
    if curve.dim() != 3 {
        return Err(EphError::invalid("dim", "dynamic evaluation needs dim = 3"));
    }
    if k < 2 {
        return Err(EphError::invalid(
            "k",
            format!("need at least 2 samples, got {k}"),
        ));
    }
    let p = curve.raw_points();
    let r2 = Matrix3::from_fn(|i, j| p[j + 1][i]);
    let scale = p.iter().flatten().fold(0.0f64, |a, v| a.max(v.abs()));
    if r2.determinant().abs() <= 1e-14 * scale.powi(3) {
        return Err(EphError::SingularControlBlock);
    }
    // columns: lifted control points (r_i, δ_{i0})
    let r = Matrix4::from_fn(|i, j| {
        if i < 3 {
            p[j][i]
        } else if j == 0 {
            1.0
        } else {
            0.0
        }
    });
    let r_inv = r.try_inverse().ok_or(EphError::SingularControlBlock)?;
    let w = curve.omega().get();
    let h = 1.0 / (k - 1) as f64;
    let m = r * shift_matrix(w, h)? * r_inv;

    let mut z: Vector4<f64> = r.column(0).into();
    let mut samples = Vec::with_capacity(k);
    let (mut err, mut norm) = (0.0f64, 0.0f64);
    for i in 0..k {
        if i > 0 {
            z = m * z;
        }
        let y = [z[0], z[1], z[2]];
        let t = (i as f64 * h).min(1.0);
        let exact = curve.eval_direct(t, EvalMode::AUTO)?;
        for c in 0..3 {
            err = err.max((y[c] - exact[c]).abs());
            norm = norm.max(exact[c].abs());
        }
        samples.push(y);
    }
    Ok(DynamicEvalReport {
        k,
        samples,
        max_rel_error: if norm > 0.0 { err / norm } else { err },
    })
}
