//! Error-free-transformation accumulation.

use twofloat::TwoFloat;

/// Double-double quotient `a / b`.
///
/// `TwoFloat`'s own division forms `1 - b·(1/b)` without a fused
/// multiply-add and loses the low word, so quotients go through here.
pub fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    TwoFloat::from(q1) + q2 + q3
}

/// Running sum kept as an unevaluated pair of doubles.
#[derive(Debug, Clone, Copy)]
pub struct CompensatedSum {
    acc: TwoFloat,
    abs: f64,
}

impl Default for CompensatedSum {
    fn default() -> Self {
        Self { acc: TwoFloat::from(0.0), abs: 0.0 }
    }
}

impl CompensatedSum {
    pub fn add(&mut self, v: f64) {
        self.acc += v;
        self.abs += v.abs();
    }

    pub fn add_dd(&mut self, v: TwoFloat) {
        self.acc += v;
        self.abs += v.hi().abs();
    }

    pub fn value(&self) -> f64 {
        self.acc.hi() + self.acc.lo()
    }

    /// Sum of the absolute values of everything added, the natural scale for rounding errors.
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}
