//! Independent oracles for the integration tests: double-double evaluation
//! of the closed-form bases and adaptive Gauss-Kronrod quadrature.

#![allow(dead_code)]

pub mod dd;

use dd::Dd;
use eph_core::Order;

/// `Φ_{·,m}(t)` by the sinh/cosh closed forms in double-double.
pub fn phi_dd(order: Order, w: f64, t: f64) -> Vec<f64> {
    let w = Dd::from(w);
    let t = Dd::from(t);
    let wt = w * t;
    let wu = w - wt;
    match order {
        Order::M1 => {
            let (sh, ch) = (w.sinh(), w.cosh());
            let s = sh - w;
            let den = (w * (w * 0.5).coth() - 2.0) * (w - sh);
            let u = Dd::ONE - t;
            vec![
                ((wu.sinh() - w * u) / s).hi,
                ((-wt - w * u * ch + w * wu.cosh() + sh - wt.sinh() - wu.sinh()) / den).hi,
                ((-w * u - wt * ch + w * wt.cosh() + sh - wu.sinh() - wt.sinh()) / den).hi,
                ((wt.sinh() - wt) / s).hi,
            ]
        }
        Order::M2 => {
            let g0 = |x: Dd| x * 3.0 + x.sinh() * (x.cosh() - 4.0);
            let h = w * 0.5;
            let sh_h = h.sinh();
            let g0w = g0(w);
            let g1 = Dd::from(4.0) / (sh_h * (w.cosh() - w * 3.0 * h.coth() + 5.0));
            let g2 = sh_h / ((w.sinh() * 3.0 - w * (w.cosh() + 2.0)) * 3.0);
            let (st, su) = ((wt * 0.5).sinh(), (wu * 0.5).sinh());
            let sh4 = sh_h.powi(4);
            let (g0t, g0u) = (g0(wt), g0(wu));
            vec![
                (g0u / g0w).hi,
                (g1 * sh_h * (su.powi(4) - sh4 * g0u / g0w)).hi,
                (g2 * (-(su.powi(3) * st * 16.0) + g1 * g0w * su.powi(4) - g1 * sh4 * g0u)).hi,
                (g2 * (-(st.powi(3) * su * 16.0) + g1 * g0w * st.powi(4) - g1 * sh4 * g0t)).hi,
                (g1 * sh_h * (st.powi(4) - sh4 * g0t / g0w)).hi,
                (g0t / g0w).hi,
            ]
        }
    }
}

/// `φ_{·,m}(t)` from the cosh forms in double-double.
pub fn varphi_dd(order: Order, w: f64, t: f64) -> Vec<f64> {
    let w = Dd::from(w);
    let t = Dd::from(t);
    let c = w.cosh() - 1.0;
    let e0 = ((w - w * t).cosh() - 1.0) / c;
    let e2 = ((w * t).cosh() - 1.0) / c;
    let e1 = Dd::ONE - e0 - e2;
    match order {
        Order::M1 => vec![e0.hi, e1.hi, e2.hi],
        Order::M2 => vec![
            (e0 * e0).hi,
            (e0 * e1 * 2.0).hi,
            (e1 * e1 + e0 * e2 * 2.0).hi,
            (e1 * e2 * 2.0).hi,
            (e2 * e2).hi,
        ],
    }
}

/// `Φ_{·,m}` on `ts` (ascending, starting at 0) from its defining relation
/// `Σ_{j≥i} Φ_j(t) = ∫_0^t φ_{i-1} / ∫_0^1 φ_{i-1}`, by quadrature of the
/// double-double `φ`. Usable for every ω, unlike the closed forms.
pub fn phi_quad(order: Order, w: f64, ts: &[f64]) -> Vec<Vec<f64>> {
    let n = 2 * order.m() + 1;
    let f = |j: usize| move |x: f64| varphi_dd(order, w, x)[j];
    let total: Vec<f64> = (0..n).map(|j| integrate(&f(j), 0.0, 1.0, 1e-17)).collect();
    let mut acc = vec![0.0; n];
    let mut prev = 0.0;
    let mut out = Vec::with_capacity(ts.len());
    for &t in ts {
        for (j, a) in acc.iter_mut().enumerate() {
            *a += integrate(&f(j), prev, t, 1e-17);
        }
        prev = t;
        // u[i] = Σ_{j≥i} Φ_j
        let u: Vec<f64> = (1..=n).map(|i| acc[i - 1] / total[i - 1]).collect();
        let mut phi = vec![1.0 - u[0]];
        for i in 0..n - 1 {
            phi.push(u[i] - u[i + 1]);
        }
        phi.push(u[n - 1]);
        out.push(phi);
    }
    out
}

/// `∫_a^b f` by adaptive 7-15 Gauss-Kronrod to absolute tolerance `tol`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    const XK: [f64; 8] = [
        0.991_455_371_120_812_6,
        0.949_107_912_342_758_5,
        0.864_864_423_359_769_1,
        0.741_531_185_599_394_4,
        0.586_087_235_467_691_1,
        0.405_845_151_377_397_2,
        0.207_784_955_007_898_5,
        0.0,
    ];
    const WK: [f64; 8] = [
        0.022_935_322_010_529_22,
        0.063_092_092_629_978_55,
        0.104_790_010_322_250_2,
        0.140_653_259_715_525_9,
        0.169_004_726_639_267_9,
        0.190_350_578_064_785_4,
        0.204_432_940_075_298_9,
        0.209_482_141_084_727_8,
    ];
    const WG: [f64; 4] = [
        0.129_484_966_168_869_7,
        0.279_705_391_489_276_7,
        0.381_830_050_505_118_9,
        0.417_959_183_673_469_4,
    ];
    fn rule(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
        let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
        let fc = f(c);
        let (mut k, mut g) = (WK[7] * fc, WG[3] * fc);
        for i in 0..7 {
            let (f1, f2) = (f(c - h * XK[i]), f(c + h * XK[i]));
            k += WK[i] * (f1 + f2);
            if i % 2 == 1 {
                g += WG[i / 2] * (f1 + f2);
            }
        }
        (k * h, ((k - g) * h).abs())
    }
    fn go(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (v, err) = rule(f, a, b);
        if err <= tol || depth == 0 {
            return v;
        }
        let m = 0.5 * (a + b);
        go(f, a, m, 0.5 * tol, depth - 1) + go(f, m, b, 0.5 * tol, depth - 1)
    }
    go(f, a, b, tol, 40)
}

/// `max |a - b| / max |b|` over paired samples.
pub fn rel_inf(a: &[f64], b: &[f64]) -> f64 {
    let num = a
        .iter()
        .zip(b)
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    let den = b.iter().fold(0.0f64, |m, y| m.max(y.abs()));
    num / den
}

pub fn unit_grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| k as f64 / (n - 1) as f64)
}
