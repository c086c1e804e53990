//! Bézier-like curves in `EP_m` and PH curves built from quaternion
//! preimages.

use serde::{Deserialize, Serialize};

use crate::basis::{self, check_unit, EvalMode, Order, ShapeParam};
use crate::error::{EphError, Result};
use crate::quat::{sandwich_i, sym_sandwich_i, Quaternion, Vector3};

/// Grid size of the regularity test in [`Preimage::is_regular`].
pub const REGULARITY_GRID: usize = 2001;
/// Relative threshold of the regularity test.
pub const REGULARITY_TOL: f64 = 1e-12;

/// A curve `r(t) = Σ r_i Φ_{i,m}(t)` with `2m + 2` control points in R² or R³.
///
/// Points are stored with three coordinates; planar curves keep z = 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CurveDoc", into = "CurveDoc")]
pub struct EphCurve {
    order: Order,
    omega: ShapeParam,
    dim: usize,
    points: Vec<[f64; 3]>,
}

/// JSON form of a curve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveDoc {
    pub m: Order,
    pub omega: ShapeParam,
    pub dim: usize,
    pub control_points: Vec<Vec<f64>>,
}

impl EphCurve {
    pub fn new(
        order: Order,
        omega: ShapeParam,
        dim: usize,
        control_points: &[Vec<f64>],
    ) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(EphError::invalid(
                "dim",
                format!("must be 2 or 3, got {dim}"),
            ));
        }
        if control_points.len() != order.n_ctrl() {
            return Err(EphError::invalid(
                "control_points",
                format!(
                    "m = {order} needs {} points, got {}",
                    order.n_ctrl(),
                    control_points.len()
                ),
            ));
        }
        let mut points = Vec::with_capacity(control_points.len());
        for (i, p) in control_points.iter().enumerate() {
            if p.len() != dim {
                return Err(EphError::invalid(
                    "control_points",
                    format!("point {i} has {} coordinates, expected {dim}", p.len()),
                ));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(EphError::invalid(
                    "control_points",
                    format!("point {i} is not finite"),
                ));
            }
            let mut q = [0.0; 3];
            q[..dim].copy_from_slice(p);
            points.push(q);
        }
        Ok(EphCurve {
            order,
            omega,
            dim,
            points,
        })
    }

    /// A spatial curve from fixed-size points.
    pub fn from_points3(order: Order, omega: ShapeParam, points: &[[f64; 3]]) -> Result<Self> {
        let v: Vec<Vec<f64>> = points.iter().map(|p| p.to_vec()).collect();
        EphCurve::new(order, omega, 3, &v)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn omega(&self) -> ShapeParam {
        self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn control_points(&self) -> Vec<Vec<f64>> {
        self.points.iter().map(|p| p[..self.dim].to_vec()).collect()
    }

    pub fn control_point(&self, i: usize) -> &[f64] {
        &self.points[i][..self.dim]
    }

    pub(crate) fn raw_points(&self) -> &[[f64; 3]] {
        &self.points
    }

    /// `Σ r_i Φ_i(t)` with the basis evaluated in `mode`.
    pub fn eval_direct(&self, t: f64, mode: EvalMode) -> Result<Vec<f64>> {
        let phi = basis::phi(self.order, self.omega, t, mode)?;
        Ok(self.truncate(combine(&self.points, &phi)))
    }

    /// `r'(t) = Σ Δr_i φ_i(t) / ∫φ_i`.
    pub fn derivative(&self, t: f64) -> Result<Vec<f64>> {
        check_unit("t", t)?;
        let w = self.omega.get();
        let vphi = basis::varphi_unchecked(self.order, w, t);
        let ints = basis::varphi_integrals(self.order, w);
        let mut out = [0.0; 3];
        for i in 0..vphi.len() {
            let s = vphi[i] / ints[i];
            for (k, o) in out.iter_mut().enumerate() {
                *o += (self.points[i + 1][k] - self.points[i][k]) * s;
            }
        }
        Ok(self.truncate(out))
    }

    /// The same curve with the control polygon reversed, traversed from t = 1.
    pub fn reversed(&self) -> EphCurve {
        let mut c = self.clone();
        c.points.reverse();
        c
    }

    /// Drops the z coordinate.
    pub fn to_planar(&self) -> EphCurve {
        let mut c = self.clone();
        for p in &mut c.points {
            p[2] = 0.0;
        }
        c.dim = 2;
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    fn truncate(&self, p: [f64; 3]) -> Vec<f64> {
        p[..self.dim].to_vec()
    }
}

pub(crate) fn combine(points: &[[f64; 3]], w: &[f64]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (p, &c) in points.iter().zip(w) {
        out[0] += p[0] * c;
        out[1] += p[1] * c;
        out[2] += p[2] * c;
    }
    out
}

impl TryFrom<CurveDoc> for EphCurve {
    type Error = EphError;
    fn try_from(d: CurveDoc) -> Result<Self> {
        EphCurve::new(d.m, d.omega, d.dim, &d.control_points)
    }
}

impl From<EphCurve> for CurveDoc {
    fn from(c: EphCurve) -> CurveDoc {
        CurveDoc {
            m: c.order,
            omega: c.omega,
            dim: c.dim,
            control_points: c.control_points(),
        }
    }
}

/// A quaternion preimage `A(t) = Σ A_j ψ_{j,m}(t)`; the curve with
/// hodograph `A(t) i A*(t)` is a PH curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PreimageDoc", into = "PreimageDoc")]
pub struct Preimage {
    order: Order,
    omega: ShapeParam,
    coeffs: Vec<Quaternion>,
}

/// JSON form of a preimage: coefficients as `[w, x, y, z]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreimageDoc {
    pub m: Order,
    pub omega: ShapeParam,
    pub coeffs: Vec<[f64; 4]>,
}

/// `σ(t) = Σ σ_i φ_{i,m}(t)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeedCoeffs {
    pub order: Order,
    pub omega: ShapeParam,
    pub sigma: Vec<f64>,
}

/// `s(t) = Σ s_i Φ_{i,m}(t)`, with `s_0 = 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcLengthCoeffs {
    pub order: Order,
    pub omega: ShapeParam,
    pub s: Vec<f64>,
}

impl SpeedCoeffs {
    pub fn eval(&self, t: f64) -> Result<f64> {
        let v = basis::varphi(self.order, self.omega, t)?;
        Ok(dot(&self.sigma, &v))
    }
}

impl ArcLengthCoeffs {
    pub fn eval(&self, t: f64, mode: EvalMode) -> Result<f64> {
        let p = basis::phi(self.order, self.omega, t, mode)?;
        Ok(dot(&self.s, &p))
    }

    pub fn total(&self) -> f64 {
        *self.s.last().expect("nonempty")
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Preimage {
    /// Zero coefficients are allowed; such preimages are reported as not regular.
    pub fn new(order: Order, omega: ShapeParam, coeffs: Vec<Quaternion>) -> Result<Self> {
        if coeffs.len() != order.m() + 1 {
            return Err(EphError::invalid(
                "coeffs",
                format!(
                    "m = {order} needs {} coefficients, got {}",
                    order.m() + 1,
                    coeffs.len()
                ),
            ));
        }
        if let Some(i) = coeffs.iter().position(|q| !q.is_finite()) {
            return Err(EphError::invalid(
                "coeffs",
                format!("coefficient {i} is not finite"),
            ));
        }
        Ok(Preimage {
            order,
            omega,
            coeffs,
        })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn omega(&self) -> ShapeParam {
        self.omega
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    /// `A(t)`.
    pub fn at(&self, t: f64) -> Result<Quaternion> {
        let psi = basis::psi(self.order, self.omega, t)?;
        Ok(self
            .coeffs
            .iter()
            .zip(psi.iter())
            .fold(Quaternion::ZERO, |acc, (&a, &p)| acc + a * p))
    }

    /// `r'(t) = A(t) i A*(t)`.
    pub fn hodograph(&self, t: f64) -> Result<Vector3> {
        Ok(sandwich_i(self.at(t)?))
    }

    /// `|A(t)|²`, the parametric speed.
    pub fn speed(&self, t: f64) -> Result<f64> {
        Ok(self.at(t)?.norm_sqr())
    }

    /// Control points of the PH curve with hodograph `A i A*` starting at `r0`.
    pub fn to_curve(&self, r0: Vector3) -> EphCurve {
        let a = &self.coeffs;
        let w = self.omega.get();
        let mut pts = vec![r0];
        let steps: Vec<Vector3> = match self.order {
            Order::M1 => {
                let c = basis::constants_m1(w);
                vec![
                    sandwich_i(a[0]) * c.c2,
                    sym_sandwich_i(a[0], a[1]) * c.c3,
                    sandwich_i(a[1]) * c.c2,
                ]
            }
            Order::M2 => {
                let q = basis::constants_m2(w);
                vec![
                    sandwich_i(a[0]) * q.q2,
                    sym_sandwich_i(a[0], a[1]) * q.q3,
                    sym_sandwich_i(a[0], a[2]) * q.q4 + sandwich_i(a[1]) * (q.q0 * q.q4_over_q1),
                    sym_sandwich_i(a[1], a[2]) * q.q3,
                    sandwich_i(a[2]) * q.q2,
                ]
            }
        };
        for s in steps {
            let last = *pts.last().expect("nonempty");
            pts.push(last + s);
        }
        let arr: Vec<[f64; 3]> = pts.iter().map(|p| p.to_array()).collect();
        EphCurve {
            order: self.order,
            omega: self.omega,
            dim: 3,
            points: arr,
        }
    }

    /// Coefficients of `σ(t)` in the hodograph basis `φ_{·,m}`.
    pub fn speed_coeffs(&self) -> SpeedCoeffs {
        let a = &self.coeffs;
        let w = self.omega.get();
        let sigma = match self.order {
            Order::M1 => {
                let c = basis::constants_m1(w);
                vec![a[0].norm_sqr(), c.c1 * a[0].sym_dot(a[1]), a[1].norm_sqr()]
            }
            Order::M2 => {
                let q = basis::constants_m2(w);
                vec![
                    a[0].norm_sqr(),
                    a[0].sym_dot(a[1]),
                    q.q0 * a[1].norm_sqr() + q.q1 * a[0].sym_dot(a[2]),
                    a[1].sym_dot(a[2]),
                    a[2].norm_sqr(),
                ]
            }
        };
        SpeedCoeffs {
            order: self.order,
            omega: self.omega,
            sigma,
        }
    }

    /// Coefficients of the arc length function in `Φ_{·,m}`.
    pub fn arc_length_coeffs(&self) -> ArcLengthCoeffs {
        let sigma = self.speed_coeffs().sigma;
        let w = self.omega.get();
        let weights: Vec<f64> = match self.order {
            Order::M1 => {
                let c = basis::constants_m1(w);
                vec![c.c2, c.c3_over_c1, c.c2]
            }
            Order::M2 => {
                let q = basis::constants_m2(w);
                vec![q.q2, q.q3, q.q4_over_q1, q.q3, q.q2]
            }
        };
        let mut s = vec![0.0];
        for (sg, wt) in sigma.iter().zip(&weights) {
            let last = *s.last().expect("nonempty");
            s.push(last + sg * wt);
        }
        ArcLengthCoeffs {
            order: self.order,
            omega: self.omega,
            s,
        }
    }

    pub fn total_arc_length(&self) -> f64 {
        self.arc_length_coeffs().total()
    }

    /// Grid test for `σ(t) > 0` on [0, 1]: the minimum of σ over
    /// [`REGULARITY_GRID`] points must exceed [`REGULARITY_TOL`] times its
    /// maximum. A root of σ strictly between grid points can go unnoticed.
    pub fn is_regular(&self) -> bool {
        let w = self.omega.get();
        let sc = self.speed_coeffs();
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for k in 0..REGULARITY_GRID {
            let t = k as f64 / (REGULARITY_GRID - 1) as f64;
            let v = dot(&sc.sigma, &basis::varphi_unchecked(self.order, w, t));
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi > 0.0 && lo > REGULARITY_TOL * hi
    }
}

impl TryFrom<PreimageDoc> for Preimage {
    type Error = EphError;
    fn try_from(d: PreimageDoc) -> Result<Self> {
        Preimage::new(
            d.m,
            d.omega,
            d.coeffs.into_iter().map(Quaternion::from_array).collect(),
        )
    }
}

impl From<Preimage> for PreimageDoc {
    fn from(p: Preimage) -> PreimageDoc {
        PreimageDoc {
            m: p.order,
            omega: p.omega,
            coeffs: p.coeffs.iter().map(|q| q.to_array()).collect(),
        }
    }
}

/// The PH curve of `preimage` starting at `r0`.
pub fn curve_from_preimage(preimage: &Preimage, r0: Vector3) -> EphCurve {
    preimage.to_curve(r0)
}

pub fn hodograph(preimage: &Preimage, t: f64) -> Result<Vector3> {
    preimage.hodograph(t)
}

pub fn parametric_speed_coeffs(preimage: &Preimage) -> SpeedCoeffs {
    preimage.speed_coeffs()
}

pub fn arc_length_coeffs(preimage: &Preimage) -> ArcLengthCoeffs {
    preimage.arc_length_coeffs()
}

pub fn is_regular(preimage: &Preimage) -> bool {
    preimage.is_regular()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(x: f64) -> ShapeParam {
        ShapeParam::new(x).unwrap()
    }

    #[test]
    fn rejects_bad_polygons() {
        let pts = vec![vec![0.0, 0.0]; 3];
        assert!(EphCurve::new(Order::M1, w(1.0), 2, &pts).is_err());
        let mut pts = vec![vec![0.0, 0.0]; 4];
        assert!(EphCurve::new(Order::M1, w(1.0), 2, &pts).is_ok());
        pts[2][1] = f64::NAN;
        assert!(EphCurve::new(Order::M1, w(1.0), 2, &pts).is_err());
        assert!(EphCurve::new(Order::M1, w(1.0), 4, &pts).is_err());
    }

    #[test]
    fn unit_preimage_control_points() {
        let p = Preimage::new(Order::M1, w(1.0), vec![Quaternion::I, Quaternion::I]).unwrap();
        let c = p.to_curve(Vector3::ZERO);
        let k = basis::constants_m1(1.0);
        let xs: Vec<f64> = c.control_points().iter().map(|q| q[0]).collect();
        let expect = [0.0, k.c2, k.c2 + k.c3, 2.0 * k.c2 + k.c3];
        for (a, b) in xs.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(c
            .control_points()
            .iter()
            .all(|q| q[1] == 0.0 && q[2] == 0.0));
        assert!(p.is_regular());
    }

    #[test]
    fn speed_of_scalar_preimage() {
        let p = Preimage::new(Order::M1, w(2.0), vec![Quaternion::ONE, Quaternion::ONE]).unwrap();
        let s = p.speed_coeffs();
        assert_eq!(s.sigma, vec![1.0, basis::constants_m1(2.0).c1, 1.0]);
        let zero = Preimage::new(Order::M2, w(2.0), vec![Quaternion::ZERO; 3]).unwrap();
        assert!(zero.arc_length_coeffs().s.iter().all(|v| *v == 0.0));
        assert!(!zero.is_regular());
    }

    #[test]
    fn json_round_trip() {
        let c = EphCurve::new(
            Order::M2,
            w(0.1 + 0.2),
            2,
            &[
                vec![0.1, 1.0 / 3.0],
                vec![2.0, -1e-300],
                vec![3.5, 4.0],
                vec![5.0, 6.0],
                vec![7.0, 8.0],
                vec![9.0, std::f64::consts::PI],
            ],
        )
        .unwrap();
        let back = EphCurve::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        let p = Preimage::new(
            Order::M1,
            w(3.0),
            vec![Quaternion::new(0.1, 0.2, 0.3, 0.7), Quaternion::J],
        )
        .unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Preimage>(&s).unwrap(), p);
        assert!(serde_json::from_str::<EphCurve>(
            r#"{"m":3,"omega":1,"dim":2,"control_points":[]}"#
        )
        .is_err());
    }
}
