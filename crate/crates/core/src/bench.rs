//! Accuracy and timing experiments for the evaluation methods.
//!
//! `ρ(ω)` is the largest relative deviation, over random control polygons
//! and a parameter grid, between a method and the curve built on the fifth
//! order Taylor basis. Far from 0 it measures the truncation error of the
//! Taylor basis, which shrinks with ω; close to 0 it measures the rounding
//! error of the method, which grows. The minimizer `ω̄` marks where a method
//! stops being reliable.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{self, AutoThresholds, EvalMode, Order};
use crate::error::{EphError, Result};
use crate::eval::{apply, weights, EvalMethod, Weights};

/// Configuration of a `ρ` sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoConfig {
    pub d: usize,
    pub m: Order,
    pub n_curves: usize,
    pub grid_points: usize,
    pub omega_grid: Vec<f64>,
    pub seed: u64,
}

impl RhoConfig {
    /// 100 curves, 501 parameters, 500 equispaced ω in (0, 2].
    pub fn standard(d: usize, m: Order, seed: u64) -> Self {
        RhoConfig {
            d,
            m,
            n_curves: 100,
            grid_points: 501,
            omega_grid: omega_grid(500, 2.0),
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d != 2 && self.d != 3 {
            return Err(EphError::invalid(
                "d",
                format!("must be 2 or 3, got {}", self.d),
            ));
        }
        if self.n_curves < 1 {
            return Err(EphError::invalid("n_curves", "must be at least 1"));
        }
        if self.grid_points < 2 {
            return Err(EphError::invalid("grid_points", "must be at least 2"));
        }
        if self.omega_grid.is_empty()
            || self.omega_grid.iter().any(|w| !(w.is_finite() && *w > 0.0))
        {
            return Err(EphError::invalid(
                "omega_grid",
                "values must be finite and positive",
            ));
        }
        Ok(())
    }
}

/// `n` equispaced values `k·max/n`, k = 1..=n.
pub fn omega_grid(n: usize, max: f64) -> Vec<f64> {
    (1..=n).map(|k| k as f64 * max / n as f64).collect()
}

/// `n` control polygons with coordinates uniform in (0, 1)^d (z = 0 when d = 2).
pub fn random_polygons(d: usize, m: Order, n: usize, seed: u64) -> Vec<Vec<[f64; 3]>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            (0..m.n_ctrl())
                .map(|_| {
                    let mut p = [0.0; 3];
                    for c in p.iter_mut().take(d) {
                        *c = rng.sample(Open01);
                    }
                    p
                })
                .collect()
        })
        .collect()
}

/// Basis mode used by `method` in the experiments: the printed closed forms
/// for direct evaluation, the large-ω forms for the three algorithms.
pub fn experiment_mode(method: EvalMethod) -> EvalMode {
    match method {
        EvalMethod::Direct => EvalMode::Naive,
        _ => EvalMode::StableLargeOmega,
    }
}

fn grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| k as f64 / (n - 1) as f64)
}

fn rho_at(cfg: &RhoConfig, polys: &[Vec<[f64; 3]>], method: EvalMethod, w: f64) -> f64 {
    let mode = experiment_mode(method);
    let ws: Vec<(Weights, Weights)> = grid(cfg.grid_points)
        .map(|t| {
            let reference =
                Weights::Combination(basis::phi_unchecked(cfg.m, w, t, EvalMode::Taylor5));
            (reference, weights(method, cfg.m, w, t, mode))
        })
        .collect();
    let mut rho = 0.0f64;
    for pts in polys {
        let (mut num, mut den) = (0.0f64, 0.0f64);
        for (rw, mw) in &ws {
            let a = apply(rw, pts);
            let b = apply(mw, pts);
            for c in 0..cfg.d {
                // a breakdown to inf/NaN counts as unbounded error
                let e = (a[c] - b[c]).abs();
                num = if e.is_nan() {
                    f64::INFINITY
                } else {
                    num.max(e)
                };
                den = den.max(a[c].abs());
            }
        }
        let r = num / den;
        rho = if r.is_nan() { f64::NAN } else { rho.max(r) };
        if rho.is_nan() {
            break;
        }
    }
    rho
}

/// `(ω, ρ(ω))` over the configured grid. Parallel over ω.
pub fn rho(cfg: &RhoConfig, method: EvalMethod) -> Result<Vec<(f64, f64)>> {
    cfg.validate()?;
    let polys = random_polygons(cfg.d, cfg.m, cfg.n_curves, cfg.seed);
    Ok(cfg
        .omega_grid
        .par_iter()
        .map(|&w| (w, rho_at(cfg, &polys, method, w)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BreakpointResult {
    pub method: EvalMethod,
    pub omega_bar: f64,
    pub rho_at_min: f64,
}

/// The grid point minimizing `ρ`; the first one on ties. NaN values are skipped.
pub fn argmin(series: &[(f64, f64)]) -> Option<(f64, f64)> {
    series
        .iter()
        .copied()
        .filter(|(_, r)| !r.is_nan())
        .fold(None, |best, (w, r)| match best {
            Some((_, br)) if br <= r => best,
            _ => Some((w, r)),
        })
}

pub fn find_omega_bar(cfg: &RhoConfig, method: EvalMethod) -> Result<BreakpointResult> {
    let series = rho(cfg, method)?;
    let (omega_bar, rho_at_min) = argmin(&series)
        .ok_or_else(|| EphError::invalid("omega_grid", "rho is undefined on the whole grid"))?;
    Ok(BreakpointResult {
        method,
        omega_bar,
        rho_at_min,
    })
}

fn config_header(out: &mut String, cfg: &RhoConfig, experiment: &str) {
    let (lo, hi) = cfg
        .omega_grid
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &w| {
            (a.min(w), b.max(w))
        });
    let _ = writeln!(out, "# experiment={experiment}");
    let _ = writeln!(
        out,
        "# d={} m={} n_curves={} grid_points={} omega_count={} omega_min={lo} omega_max={hi} seed={} rng=chacha8",
        cfg.d,
        cfg.m,
        cfg.n_curves,
        cfg.grid_points,
        cfg.omega_grid.len(),
        cfg.seed
    );
}

/// CSV of `ρ` for several methods: `omega,<method>...`.
pub fn rho_csv(cfg: &RhoConfig, methods: &[EvalMethod]) -> Result<String> {
    let series: Vec<Vec<(f64, f64)>> = methods
        .iter()
        .map(|&m| rho(cfg, m))
        .collect::<Result<_>>()?;
    let mut out = String::new();
    config_header(&mut out, cfg, "rho");
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let _ = writeln!(out, "omega,{}", names.join(","));
    for (i, &w) in cfg.omega_grid.iter().enumerate() {
        let _ = write!(out, "{w}");
        for s in &series {
            let _ = write!(out, ",{:e}", s[i].1);
        }
        out.push('\n');
    }
    Ok(out)
}

/// CSV of `ω̄` for several methods: `method,omega_bar,rho_at_min`.
pub fn breakpoints_csv(cfg: &RhoConfig, methods: &[EvalMethod]) -> Result<String> {
    let mut out = String::new();
    config_header(&mut out, cfg, "breakpoints");
    out.push_str("method,omega_bar,rho_at_min\n");
    for &m in methods {
        let b = find_omega_bar(cfg, m)?;
        let _ = writeln!(out, "{},{},{:e}", m, b.omega_bar, b.rho_at_min);
    }
    Ok(out)
}

/// Configuration of a timing run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingConfig {
    pub d: usize,
    pub m: Order,
    pub omegas: Vec<f64>,
    pub n_curves: usize,
    pub grid_points: usize,
    pub reps: usize,
    pub seed: u64,
}

impl TimingConfig {
    /// ω = 0.096 + 2^k, k = -10..=10.
    pub fn standard_omegas() -> Vec<f64> {
        (-10..=10).map(|k| 0.096 + 2f64.powi(k)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.d != 2 && self.d != 3 {
            return Err(EphError::invalid(
                "d",
                format!("must be 2 or 3, got {}", self.d),
            ));
        }
        if self.n_curves < 1 || self.grid_points < 2 {
            return Err(EphError::invalid(
                "n_curves",
                "need at least one curve and two grid points",
            ));
        }
        if self.reps < 1 {
            return Err(EphError::invalid("reps", "must be at least 1"));
        }
        if self.omegas.is_empty() || self.omegas.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(EphError::invalid(
                "omegas",
                "values must be finite and positive",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimingRow {
    pub method: EvalMethod,
    pub omega: f64,
    /// Median wall-clock seconds over the repetitions.
    pub median_secs: f64,
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Evaluates every curve on the grid, weights included, and returns the
/// elapsed seconds.
fn time_once(
    method: EvalMethod,
    m: Order,
    w: f64,
    polys: &[Vec<[f64; 3]>],
    grid_points: usize,
) -> f64 {
    let mode = EvalMode::Auto(AutoThresholds::TWO_REGIME);
    let start = Instant::now();
    let mut acc = 0.0;
    for pts in polys {
        for t in grid(grid_points) {
            let wt = weights(method, m, black_box(w), t, mode);
            let p = apply(&wt, pts);
            acc += p[0] + p[1] + p[2];
        }
    }
    black_box(acc);
    start.elapsed().as_secs_f64()
}

/// Median times of `methods` per ω, single threaded; repetitions of the
/// methods are interleaved.
pub fn time_methods(cfg: &TimingConfig, methods: &[EvalMethod]) -> Result<Vec<TimingRow>> {
    cfg.validate()?;
    let polys = random_polygons(cfg.d, cfg.m, cfg.n_curves, cfg.seed);
    let mut rows = Vec::new();
    for &w in &cfg.omegas {
        let mut samples = vec![Vec::with_capacity(cfg.reps); methods.len()];
        for _ in 0..cfg.reps {
            for (i, &method) in methods.iter().enumerate() {
                samples[i].push(time_once(method, cfg.m, w, &polys, cfg.grid_points));
            }
        }
        for (i, &method) in methods.iter().enumerate() {
            rows.push(TimingRow {
                method,
                omega: w,
                median_secs: median(&mut samples[i]),
            });
        }
    }
    Ok(rows)
}

pub fn timing_csv(cfg: &TimingConfig, rows: &[TimingRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# experiment=timing");
    let _ = writeln!(
        out,
        "# d={} m={} n_curves={} grid_points={} reps={} seed={} rng=chacha8 threads=1",
        cfg.d, cfg.m, cfg.n_curves, cfg.grid_points, cfg.reps, cfg.seed
    );
    out.push_str("method,omega,median_secs\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{:e}", r.method, r.omega, r.median_secs);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygons_are_seeded_and_open() {
        let a = random_polygons(2, Order::M2, 10, 7);
        assert_eq!(a, random_polygons(2, Order::M2, 10, 7));
        assert_ne!(a, random_polygons(2, Order::M2, 10, 8));
        for p in a.iter().flatten() {
            assert!(p[0] > 0.0 && p[0] < 1.0 && p[1] > 0.0 && p[2] == 0.0);
        }
    }

    #[test]
    fn argmin_skips_nan() {
        let s = [(0.1, f64::NAN), (0.2, 3.0), (0.3, 1.0), (0.4, 1.0)];
        assert_eq!(argmin(&s), Some((0.3, 1.0)));
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
