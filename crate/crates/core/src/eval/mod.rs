//! Point evaluation of curves in `EP_m`.
//!
//! Every method is split into a weight computation, which depends only on
//! (m, ω, t) and the basis mode, and a cheap combination of the control
//! points with those weights. Evaluating many curves at the same parameter
//! can share the weights.

mod decasteljau;
mod dynamic;
mod new;
mod wozny_chudy;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::{self, check_unit, BasisValues, EvalMode, Order};
use crate::curve::{combine, EphCurve};
use crate::error::{EphError, Result};

pub use dynamic::{dynamic_eval_m1, DynamicEvalReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalMethod {
    /// `Σ r_i Φ_i(t)`.
    Direct,
    /// Corner cutting through a chain of nested bases.
    DeCasteljau,
    /// Sequential convex combinations adding one control point at a time.
    WoznyChudy,
    /// One corner-cutting step to a Bernstein polygon of degree 2m, then the
    /// polynomial sequential scheme.
    NewProposal,
}

impl EvalMethod {
    pub const ALL: [EvalMethod; 4] = [
        EvalMethod::Direct,
        EvalMethod::DeCasteljau,
        EvalMethod::WoznyChudy,
        EvalMethod::NewProposal,
    ];
    pub const ALGORITHMS: [EvalMethod; 3] = [
        EvalMethod::DeCasteljau,
        EvalMethod::WoznyChudy,
        EvalMethod::NewProposal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalMethod::Direct => "direct",
            EvalMethod::DeCasteljau => "decasteljau",
            EvalMethod::WoznyChudy => "woznychudy",
            EvalMethod::NewProposal => "new",
        }
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EvalMethod {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "direct" => Ok(EvalMethod::Direct),
            "decasteljau" => Ok(EvalMethod::DeCasteljau),
            "woznychudy" | "wc" => Ok(EvalMethod::WoznyChudy),
            "new" | "newproposal" => Ok(EvalMethod::NewProposal),
            _ => Err(format!(
                "unknown method '{s}' (direct|decasteljau|woznychudy|new)"
            )),
        }
    }
}

/// Precomputed weights of one method at one parameter value.
#[derive(Debug, Clone, Copy)]
pub enum Weights {
    /// The result is control point `i`.
    Endpoint(usize),
    /// Linear combination with the basis values.
    Combination(BasisValues),
    /// `levels[k][i]`: weight of `r_{i+1}` at level k+1 of the corner cutting.
    Cascade { n: usize, levels: [[f64; 6]; 5] },
    /// `h[k]` for k = 1..n; from the far end when `reverse`.
    Sequential { h: BasisValues, reverse: bool },
    /// The `τ` weights of the first step and the parameter.
    Corner { tau: BasisValues, t: f64 },
}

/// Weights of `method` at `t ∈ [0, 1]`. No argument checks; in naive mode
/// above the overflow limit the weights are not finite.
pub fn weights(method: EvalMethod, order: Order, omega: f64, t: f64, mode: EvalMode) -> Weights {
    match method {
        EvalMethod::Direct => Weights::Combination(basis::phi_unchecked(order, omega, t, mode)),
        EvalMethod::DeCasteljau => decasteljau::weights(order, omega, t, mode),
        EvalMethod::WoznyChudy => wozny_chudy::weights(order, omega, t, mode),
        EvalMethod::NewProposal => new::weights(order, omega, t, mode),
    }
}

/// Combines `points` (2m + 2 of them) with precomputed weights.
pub fn apply(w: &Weights, points: &[[f64; 3]]) -> [f64; 3] {
    match w {
        Weights::Endpoint(i) => points[*i],
        Weights::Combination(phi) => combine(points, phi),
        Weights::Cascade { n, levels } => decasteljau::apply(*n, levels, points),
        Weights::Sequential { h, reverse } => wozny_chudy::apply(h, *reverse, points),
        Weights::Corner { tau, t } => new::apply(tau, *t, points),
    }
}

fn check(curve: &EphCurve, t: f64, mode: EvalMode) -> Result<()> {
    check_unit("t", t)?;
    let w = curve.omega().get();
    if mode == EvalMode::Naive && w > basis::naive_overflow_limit(curve.order()) {
        return Err(EphError::OverflowHazard(w));
    }
    Ok(())
}

/// `r(t)` by `method` with the basis functions evaluated in `mode`.
pub fn evaluate(curve: &EphCurve, t: f64, method: EvalMethod, mode: EvalMode) -> Result<Vec<f64>> {
    check(curve, t, mode)?;
    let w = weights(method, curve.order(), curve.omega().get(), t, mode);
    Ok(apply(&w, curve.raw_points())[..curve.dim()].to_vec())
}

/// `r(t_k)` at `t_k = k/(n-1)`, k = 0..n.
pub fn evaluate_grid(
    curve: &EphCurve,
    n: usize,
    method: EvalMethod,
    mode: EvalMode,
) -> Result<Vec<(f64, Vec<f64>)>> {
    if n < 2 {
        return Err(EphError::invalid(
            "grid",
            format!("need at least 2 points, got {n}"),
        ));
    }
    (0..n)
        .map(|k| {
            let t = k as f64 / (n - 1) as f64;
            evaluate(curve, t, method, mode).map(|p| (t, p))
        })
        .collect()
}

/// Control points of the degree 2m Bernstein polygon taking the value
/// `r(t)` at `t`, built by the first step of the new method.
pub fn bernstein_polygon(curve: &EphCurve, t: f64, mode: EvalMode) -> Result<Vec<Vec<f64>>> {
    check(curve, t, mode)?;
    if t == 0.0 || t == 1.0 {
        return Err(EphError::Domain {
            name: "t",
            value: t,
            expected: "(0, 1)",
        });
    }
    let tau = basis::tau_unchecked(curve.order(), curve.omega().get(), t, mode);
    let r1 = new::first_step(&tau, curve.raw_points());
    Ok(r1[..tau.len()]
        .iter()
        .map(|p| p[..curve.dim()].to_vec())
        .collect())
}

pub fn eval_direct(curve: &EphCurve, t: f64) -> Result<Vec<f64>> {
    evaluate(curve, t, EvalMethod::Direct, EvalMode::AUTO)
}

pub fn eval_decasteljau(curve: &EphCurve, t: f64) -> Result<Vec<f64>> {
    evaluate(curve, t, EvalMethod::DeCasteljau, EvalMode::AUTO)
}

pub fn eval_wozny_chudy(curve: &EphCurve, t: f64) -> Result<Vec<f64>> {
    evaluate(curve, t, EvalMethod::WoznyChudy, EvalMode::AUTO)
}

pub fn eval_new(curve: &EphCurve, t: f64) -> Result<Vec<f64>> {
    evaluate(curve, t, EvalMethod::NewProposal, EvalMode::AUTO)
}
