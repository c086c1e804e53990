//! Bases of the exponential spaces used by EPH curves, for `m ∈ {1, 2}`:
//!
//! * `psi`: B-basis of the preimage space `A_m` (m+1 functions),
//! * `varphi`: normalized B-basis of the hodograph space `DEP_m` (2m+1 functions),
//! * `phi`: normalized B-basis of the curve space `EP_m` (2m+2 functions),
//! * `tau`: corner-cutting weights reducing an `EP_m` control polygon to a
//!   Bernstein polygon of degree 2m at a fixed parameter.
//!
//! `phi` and `tau` come in several evaluation modes. The printed closed forms
//! overflow for large ω and cancel catastrophically for small ω; the stable
//! forms factor out the dominant exponential and the Taylor forms replace the
//! functions by their fifth order expansion at ω = 0.

mod constants;
mod dep;
mod naive;
mod stable;
mod tau;
mod taylor;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{EphError, Result};

pub use constants::{constants, constants_m1, constants_m2, varphi_integrals, BasisConstants};
pub use constants::{BasisConstantsM1, BasisConstantsM2};
pub use tau::{tau_from_phi, TauForm};

/// The order `m` of the space: curves in `EP_m` have `2m + 2` control points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Order {
    M1,
    M2,
}

impl Order {
    pub const fn m(self) -> usize {
        match self {
            Order::M1 => 1,
            Order::M2 => 2,
        }
    }

    /// Number of control points, `2m + 2`.
    pub const fn n_ctrl(self) -> usize {
        2 * self.m() + 2
    }

    pub const fn from_m(m: usize) -> Option<Order> {
        match m {
            1 => Some(Order::M1),
            2 => Some(Order::M2),
            _ => None,
        }
    }
}

impl TryFrom<u8> for Order {
    type Error = String;
    fn try_from(m: u8) -> std::result::Result<Order, String> {
        Order::from_m(m as usize).ok_or_else(|| format!("m must be 1 or 2, got {m}"))
    }
}

impl From<Order> for u8 {
    fn from(o: Order) -> u8 {
        o.m() as u8
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m())
    }
}

/// The exponential shape parameter ω, a finite positive real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ShapeParam(f64);

impl ShapeParam {
    pub fn new(omega: f64) -> Result<ShapeParam> {
        if omega.is_finite() && omega > 0.0 {
            Ok(ShapeParam(omega))
        } else {
            Err(EphError::Domain {
                name: "omega",
                value: omega,
                expected: "(0, inf)",
            })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ShapeParam {
    type Error = EphError;
    fn try_from(w: f64) -> Result<ShapeParam> {
        ShapeParam::new(w)
    }
}

impl From<ShapeParam> for f64 {
    fn from(w: ShapeParam) -> f64 {
        w.0
    }
}

/// Switching points of [`EvalMode::Auto`]: Taylor forms below `m1`/`m2`,
/// the closed forms up to `stable_from`, the large-ω forms above. The
/// closed forms lose accuracy as ω grows and the large-ω forms as ω
/// shrinks; both are near full precision at ω = 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AutoThresholds {
    pub m1: f64,
    pub m2: f64,
    pub stable_from: f64,
}

impl AutoThresholds {
    pub const DEFAULT: AutoThresholds = AutoThresholds {
        m1: 0.096,
        m2: 0.184,
        stable_from: 2.0,
    };

    /// Taylor forms below the breakpoints and the large-ω forms everywhere
    /// else, without the closed-form band.
    pub const TWO_REGIME: AutoThresholds = AutoThresholds {
        stable_from: 0.0,
        ..AutoThresholds::DEFAULT
    };

    pub fn for_order(&self, order: Order) -> f64 {
        match order {
            Order::M1 => self.m1,
            Order::M2 => self.m2,
        }
    }
}

impl Default for AutoThresholds {
    fn default() -> Self {
        AutoThresholds::DEFAULT
    }
}

/// How `phi` and `tau` are evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalMode {
    /// The printed closed forms in sinh/cosh. Overflow for large ω.
    Naive,
    /// Forms with the dominant exponential factored out; every exponential
    /// has a nonpositive argument.
    StableLargeOmega,
    /// Fifth order Taylor expansion at ω = 0.
    Taylor5,
    /// `Taylor5`, `Naive` or `StableLargeOmega` by ω.
    Auto(AutoThresholds),
}

impl EvalMode {
    pub const AUTO: EvalMode = EvalMode::Auto(AutoThresholds::DEFAULT);

    /// The concrete mode used for `order` at `omega`.
    pub fn resolve(self, order: Order, omega: f64) -> EvalMode {
        match self {
            EvalMode::Auto(th) => {
                if omega < th.for_order(order) {
                    EvalMode::Taylor5
                } else if omega < th.stable_from {
                    EvalMode::Naive
                } else {
                    EvalMode::StableLargeOmega
                }
            }
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EvalMode::Naive => "naive",
            EvalMode::StableLargeOmega => "stable",
            EvalMode::Taylor5 => "taylor",
            EvalMode::Auto(_) => "auto",
        }
    }
}

impl Default for EvalMode {
    fn default() -> Self {
        EvalMode::AUTO
    }
}

impl FromStr for EvalMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(EvalMode::Naive),
            "stable" | "stable-large-omega" => Ok(EvalMode::StableLargeOmega),
            "taylor" | "taylor5" => Ok(EvalMode::Taylor5),
            "auto" => Ok(EvalMode::AUTO),
            _ => Err(format!("unknown mode '{s}' (naive|stable|taylor|auto)")),
        }
    }
}

/// Up to six basis values stored inline.
#[derive(Clone, Copy, PartialEq)]
pub struct BasisValues {
    vals: [f64; 6],
    len: usize,
}

impl BasisValues {
    pub(crate) fn from_slice(v: &[f64]) -> Self {
        let mut vals = [0.0; 6];
        vals[..v.len()].copy_from_slice(v);
        BasisValues { vals, len: v.len() }
    }

    pub(crate) fn zeros(len: usize) -> Self {
        BasisValues {
            vals: [0.0; 6],
            len,
        }
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.vals[..self.len]
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.deref().to_vec()
    }
}

impl Deref for BasisValues {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.vals[..self.len]
    }
}

impl fmt::Debug for BasisValues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

pub(crate) fn check_unit(name: &'static str, t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(EphError::Domain {
            name,
            value: t,
            expected: "[0, 1]",
        })
    }
}

fn check_open_unit(t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(EphError::Domain {
            name: "t",
            value: t,
            expected: "(0, 1)",
        })
    }
}

/// The B-basis `ψ_{j,m}` of the preimage space, `j = 0..=m`.
pub fn psi(order: Order, omega: ShapeParam, t: f64) -> Result<BasisValues> {
    check_unit("t", t)?;
    Ok(dep::psi(order, omega.get(), t))
}

/// The normalized B-basis `φ_{j,m}` of the hodograph space, `j = 0..=2m`.
pub fn varphi(order: Order, omega: ShapeParam, t: f64) -> Result<BasisValues> {
    check_unit("t", t)?;
    Ok(dep::varphi(order, omega.get(), t))
}

/// The normalized B-basis `Φ_{i,m}` of `EP_m`, `i = 0..=2m+1`.
pub fn phi(order: Order, omega: ShapeParam, t: f64, mode: EvalMode) -> Result<BasisValues> {
    check_unit("t", t)?;
    let w = omega.get();
    if mode == EvalMode::Naive && w > naive::overflow_limit(order) {
        return Err(EphError::OverflowHazard(w));
    }
    Ok(phi_unchecked(order, w, t, mode))
}

/// Fifth order Taylor expansion of `Φ_{·,m}` at ω = 0. Accepts ω = 0.
pub fn taylor_phi(order: Order, omega: f64, t: f64) -> Result<BasisValues> {
    check_unit("t", t)?;
    if !(omega.is_finite() && omega >= 0.0) {
        return Err(EphError::Domain {
            name: "omega",
            value: omega,
            expected: "[0, inf)",
        });
    }
    Ok(taylor::phi(order, omega, t))
}

/// The corner-cutting weights `τ_{j,m}(t)`, `j = 0..=2m`, for `t ∈ (0, 1)`.
pub fn tau(order: Order, omega: ShapeParam, t: f64, mode: EvalMode) -> Result<BasisValues> {
    check_open_unit(t)?;
    let w = omega.get();
    if mode == EvalMode::Naive && w > naive::overflow_limit(order) {
        return Err(EphError::OverflowHazard(w));
    }
    Ok(tau_unchecked(order, w, t, mode))
}

/// `Φ_{·,m}` without argument checks. Naive mode above the overflow limit
/// yields non-finite values.
pub(crate) fn phi_unchecked(order: Order, w: f64, t: f64, mode: EvalMode) -> BasisValues {
    if t == 0.0 || t == 1.0 {
        let mut e = BasisValues::zeros(order.n_ctrl());
        e.as_mut_slice()[if t == 0.0 { 0 } else { order.n_ctrl() - 1 }] = 1.0;
        return e;
    }
    match mode.resolve(order, w) {
        EvalMode::Naive => naive::phi(order, w, t),
        EvalMode::Taylor5 => taylor::phi(order, w, t),
        _ => stable::phi(order, w, t),
    }
}

pub(crate) fn tau_unchecked(order: Order, w: f64, t: f64, mode: EvalMode) -> BasisValues {
    let concrete = mode.resolve(order, w);
    if concrete == EvalMode::StableLargeOmega {
        stable::tau(order, w, t)
    } else if concrete == EvalMode::Taylor5 {
        taylor::tau(order, w, t)
    } else {
        let p = phi_unchecked(order, w, t, concrete);
        tau::tau_from_phi(order, &p, t, TauForm::Printed)
    }
}

pub(crate) use dep::varphi as varphi_unchecked;
pub(crate) use naive::overflow_limit as naive_overflow_limit;
