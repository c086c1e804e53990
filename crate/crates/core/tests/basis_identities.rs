mod common;

use common::{integrate, unit_grid};
use eph_core::basis::{
    self, constants_m1, constants_m2, varphi_integrals, EvalMode, Order, ShapeParam,
};

const OMEGAS: [f64; 6] = [0.3, 0.5, 2.0, 10.0, 50.0, 200.0];

fn sp(w: f64) -> ShapeParam {
    ShapeParam::new(w).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s < 1e-300 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

#[test]
fn squares_of_the_preimage_basis() {
    let mut worst = 0.0f64;
    for w in OMEGAS {
        let c = constants_m1(w);
        let q = constants_m2(w);
        for t in unit_grid(101) {
            let p = basis::psi(Order::M1, sp(w), t).unwrap();
            let f = basis::varphi(Order::M1, sp(w), t).unwrap();
            worst = worst
                .max(rel(p[0] * p[0], f[0]))
                .max(rel(p[0] * p[1], 0.5 * c.c1 * f[1]))
                .max(rel(p[1] * p[1], f[2]));
            let p = basis::psi(Order::M2, sp(w), t).unwrap();
            let f = basis::varphi(Order::M2, sp(w), t).unwrap();
            worst = worst
                .max(rel(p[0] * p[0], f[0]))
                .max(rel(p[1] * p[1], q.q0 * f[2]))
                .max(rel(p[0] * p[2], 0.5 * q.q1 * f[2]))
                .max(rel(p[2] * p[2], f[4]));
        }
    }
    assert!(worst <= 1e-11, "{worst:e}");
}

#[test]
fn integrals_of_the_hodograph_basis() {
    for order in [Order::M1, Order::M2] {
        for w in OMEGAS {
            let ints = varphi_integrals(order, w);
            for (i, v) in ints.iter().enumerate() {
                let f = |t: f64| basis::varphi(order, sp(w), t).unwrap()[i];
                let quad = integrate(&f, 0.0, 1.0, 1e-14);
                assert!(
                    rel(quad, *v) <= 1e-8,
                    "{order:?} ω={w} i={i}: {quad} vs {v}"
                );
            }
        }
    }
}

#[test]
fn tails_of_phi_are_normalized_antiderivatives() {
    // Σ_{j>i} Φ_j(t) = ∫₀ᵗ φ_i / ∫₀¹ φ_i
    for order in [Order::M1, Order::M2] {
        for w in OMEGAS {
            let ints = varphi_integrals(order, w);
            for t in [0.1, 0.35, 0.5, 0.8, 0.97] {
                let p = basis::phi(order, sp(w), t, EvalMode::AUTO).unwrap();
                for (i, total) in ints.iter().enumerate() {
                    let f = |x: f64| basis::varphi(order, sp(w), x).unwrap()[i];
                    let partial = integrate(&f, 0.0, t, 1e-14) / total;
                    let tail: f64 = p[i + 1..].iter().sum();
                    assert!(
                        (tail - partial).abs() <= 1e-8,
                        "{order:?} ω={w} t={t} i={i}: {tail} vs {partial}"
                    );
                }
            }
        }
    }
}
