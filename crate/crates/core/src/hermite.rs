//! C¹ Hermite interpolation by PH curves in `EP_2`.
//!
//! The end derivatives fix `A_0` and `A_2` up to an angle each; the end
//! points then reduce to a single equation `Â i Â* = c` for
//! `Â = I_1 A_0 + I_3 A_1 + I_1 A_2`, which fixes `A_1` up to a third angle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::{constants_m2, Order, ShapeParam};
use crate::curve::{EphCurve, Preimage};
use crate::error::{EphError, Result};
use crate::quat::{solve_sandwich, sym_sandwich_i, Vector3};

/// Relative size of `c` below which the middle coefficient is undetermined.
pub const DEGENERATE_C_TOL: f64 = 1e-14;

/// End points and end derivatives to match, and the shape parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteProblem {
    pub r0: Vector3,
    pub r_end: Vector3,
    pub di: Vector3,
    pub df: Vector3,
    pub omega: ShapeParam,
}

impl HermiteProblem {
    pub fn new(r0: Vector3, r_end: Vector3, di: Vector3, df: Vector3, omega: ShapeParam) -> Self {
        HermiteProblem {
            r0,
            r_end,
            di,
            df,
            omega,
        }
    }

    /// Planar data embedded in z = 0.
    pub fn planar(
        r0: [f64; 2],
        r_end: [f64; 2],
        di: [f64; 2],
        df: [f64; 2],
        omega: ShapeParam,
    ) -> Self {
        let v = |p: [f64; 2]| Vector3::new(p[0], p[1], 0.0);
        HermiteProblem::new(v(r0), v(r_end), v(di), v(df), omega)
    }

    fn is_planar(&self) -> bool {
        [self.r0, self.r_end, self.di, self.df]
            .iter()
            .all(|v| v.z == 0.0)
    }
}

/// The free angles of the solution family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AngleChoice {
    Explicit {
        eta0: f64,
        eta1: f64,
        eta2: f64,
    },
    /// `eta0 = eta_m - delta_eta/2`, `eta2 = eta_m + delta_eta/2`.
    MeanDiff {
        eta_m: f64,
        delta_eta: f64,
        eta1: f64,
    },
}

impl AngleChoice {
    /// `(eta0, eta1, eta2)`.
    pub fn etas(&self) -> [f64; 3] {
        match *self {
            AngleChoice::Explicit { eta0, eta1, eta2 } => [eta0, eta1, eta2],
            AngleChoice::MeanDiff {
                eta_m,
                delta_eta,
                eta1,
            } => [eta_m - 0.5 * delta_eta, eta1, eta_m + 0.5 * delta_eta],
        }
    }
}

/// Signs of `A_0` and `A_2` in a planar solution, `A_1` taken positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlanarTag {
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
}

impl PlanarTag {
    pub const ALL: [PlanarTag; 4] = [
        PlanarTag::PlusPlus,
        PlanarTag::PlusMinus,
        PlanarTag::MinusPlus,
        PlanarTag::MinusMinus,
    ];

    pub fn angles(self) -> AngleChoice {
        use std::f64::consts::PI;
        let (eta0, eta2) = match self {
            PlanarTag::PlusPlus => (0.0, 0.0),
            PlanarTag::PlusMinus => (0.0, PI),
            PlanarTag::MinusPlus => (PI, 0.0),
            PlanarTag::MinusMinus => (PI, PI),
        };
        AngleChoice::Explicit {
            eta0,
            eta1: 0.0,
            eta2,
        }
    }
}

impl fmt::Display for PlanarTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanarTag::PlusPlus => "++",
            PlanarTag::PlusMinus => "+-",
            PlanarTag::MinusPlus => "-+",
            PlanarTag::MinusMinus => "--",
        })
    }
}

impl FromStr for PlanarTag {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "++" | "pp" => Ok(PlanarTag::PlusPlus),
            "+-" | "pm" => Ok(PlanarTag::PlusMinus),
            "-+" | "mp" => Ok(PlanarTag::MinusPlus),
            "--" | "mm" => Ok(PlanarTag::MinusMinus),
            _ => Err(format!("unknown planar tag '{s}' (++, +-, -+, --)")),
        }
    }
}

impl Serialize for PlanarTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PlanarTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSolution {
    pub preimage: Preimage,
    pub curve: EphCurve,
}

/// `(I_0, I_1, I_2, I_3)`: the weights of `∫ A i A*` in the coefficient products.
pub fn hermite_integrals(omega: ShapeParam) -> [f64; 4] {
    let q = constants_m2(omega.get());
    [q.q2, 0.5 * q.q3, 0.5 * q.q4, q.q0 * q.q4_over_q1]
}

/// The interpolant with the given angles.
pub fn solve_spatial(problem: &HermiteProblem, angles: AngleChoice) -> Result<HermiteSolution> {
    let p = problem;
    for (name, v) in [("r0", p.r0), ("r_end", p.r_end), ("di", p.di), ("df", p.df)] {
        if !v.is_finite() {
            return Err(EphError::invalid(name, "not finite"));
        }
    }
    let [eta0, eta1, eta2] = angles.etas();
    let a0 = solve_sandwich(p.di, eta0, "di")?;
    let a2 = solve_sandwich(p.df, eta2, "df")?;
    let [i0, i1, i2, i3] = hermite_integrals(p.omega);
    let sym02 = sym_sandwich_i(a0, a2) * 2.0;
    let dr = p.r_end - p.r0;
    let k1 = i1 * i1 - i0 * i3;
    let k2 = i1 * i1 - i2 * i3;
    let c = dr * i3 + (p.di + p.df) * k1 + sym02 * k2;
    let scale = i3 * dr.norm() + k1.abs() * (p.di.norm() + p.df.norm()) + k2.abs() * sym02.norm();
    if c.norm() <= DEGENERATE_C_TOL * scale {
        return Err(EphError::DegenerateDirection("c"));
    }
    let root = solve_sandwich(c, eta1, "c")?;
    let a1 = (a0 + a2) * (-i1 / i3) + root * (1.0 / i3);
    let preimage = Preimage::new(Order::M2, p.omega, vec![a0, a1, a2])?;
    let curve = preimage.to_curve(p.r0);
    Ok(HermiteSolution { preimage, curve })
}

/// One of the four planar interpolants; the returned curve has dim 2.
pub fn solve_planar(problem: &HermiteProblem, tag: PlanarTag) -> Result<HermiteSolution> {
    if !problem.is_planar() {
        return Err(EphError::invalid(
            "z",
            "planar data must have zero z components",
        ));
    }
    let mut sol = solve_spatial(problem, tag.angles())?;
    sol.curve = sol.curve.to_planar();
    Ok(sol)
}

/// The `++` interpolant to the data of `y = cosh(2ωx)/(2ω)` on [0, 1], which
/// lies in the solution space and is reproduced exactly.
pub fn reproduce_hyperbolic(omega: ShapeParam) -> Result<HermiteSolution> {
    solve_planar(&cosh_problem(omega), PlanarTag::PlusPlus)
}

pub fn cosh_problem(omega: ShapeParam) -> HermiteProblem {
    let w2 = 2.0 * omega.get();
    HermiteProblem::planar(
        [0.0, 1.0 / w2],
        [1.0, w2.cosh() / w2],
        [1.0, 0.0],
        [1.0, w2.sinh()],
        omega,
    )
}

/// `(|r(0) - r0|, |r(1) - r_end|, |r'(0) - di|, |r'(1) - df|)` recomputed
/// from the control points.
pub fn residuals(problem: &HermiteProblem, curve: &EphCurve) -> Result<[f64; 4]> {
    let dist = |p: Vec<f64>, v: Vector3| {
        let v = v.to_array();
        p.iter()
            .zip(v)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt()
    };
    let mode = crate::basis::EvalMode::AUTO;
    Ok([
        dist(curve.eval_direct(0.0, mode)?, problem.r0),
        dist(curve.eval_direct(1.0, mode)?, problem.r_end),
        dist(curve.derivative(0.0)?, problem.di),
        dist(curve.derivative(1.0)?, problem.df),
    ])
}

/// Largest `|y - cosh(2ωx)/(2ω)|` over `samples` points of a planar curve.
pub fn hyperbolic_deviation(curve: &EphCurve, samples: usize) -> Result<f64> {
    let w2 = 2.0 * curve.omega().get();
    let mut dev = 0.0f64;
    for k in 0..samples.max(2) {
        let t = k as f64 / (samples.max(2) - 1) as f64;
        let p = curve.eval_direct(t, crate::basis::EvalMode::AUTO)?;
        dev = dev.max((p[1] - (w2 * p[0]).cosh() / w2).abs());
    }
    Ok(dev)
}
