//! Double-double arithmetic: an unevaluated sum `hi + lo` carrying about 32
//! significant digits.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const LN2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }
}

impl Dd {
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn ldexp(self, k: i32) -> Dd {
        let s = 2f64.powi(k);
        Dd {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    /// `e^x - 1` for |x| ≤ ln 2 / 2.
    fn expm1_reduced(r: Dd) -> Dd {
        // e^r = (e^{r/2^10})^{2^10}, tracked as 1 + p
        let s = r.ldexp(-10);
        let mut p = Dd::from(0.0);
        let mut term = s;
        let mut k = 1.0;
        while term.hi.abs() > 1e-36 * (p.hi.abs() + 1e-300) || k < 3.0 {
            p = p + term;
            k += 1.0;
            term = term * s / k;
            if k > 30.0 {
                break;
            }
        }
        for _ in 0..10 {
            p = p * 2.0 + p * p;
        }
        p
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::from(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::from(0.0);
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * k;
        (Dd::expm1_reduced(r) + 1.0).ldexp(k as i32)
    }

    pub fn sinh(self) -> Dd {
        if self.hi.abs() < 0.5 {
            let x2 = self * self;
            let (mut sum, mut term, mut k) = (self, self, 1.0);
            while term.hi.abs() > 1e-36 * sum.hi.abs() {
                term = term * x2 / ((k + 1.0) * (k + 2.0));
                sum = sum + term;
                k += 2.0;
            }
            return sum;
        }
        let e = self.exp();
        (e - Dd::ONE / e) * 0.5
    }

    pub fn cosh(self) -> Dd {
        let e = self.exp();
        (e + Dd::ONE / e) * 0.5
    }

    pub fn coth(self) -> Dd {
        self.cosh() / self.sinh()
    }

    pub fn powi(self, n: u32) -> Dd {
        (0..n).fold(Dd::ONE, |acc, _| acc * self)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * q1;
        let q2 = r.hi / o.hi;
        let r = r - o * q2;
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<f64> for Dd {
            type Output = Dd;
            fn $f(self, o: f64) -> Dd {
                $tr::$f(self, Dd::from(o))
            }
        }
    )*};
}
scalar_ops!(Add add, Sub sub, Mul mul, Div div);
