//! q-analytic building blocks.
//!
//! The step weight `w_i = (X q^i + Y q^-i)/2` is the weight of a vertical
//! lozenge labelled `i`, equivalently of a Right step whose departure point
//! carries label `i`. Runs of consecutive weights and finite q-Pochhammer
//! products are the raw material of every generating function in this crate.

use std::fmt;

use crate::poly::{LaurentPoly, Monomial};
use crate::rational::Rational;

/// The step weight `w_i = (X q^i + Y q^-i) / 2`.
pub fn step_weight(i: i64) -> LaurentPoly {
    let half = Rational::ratio(1, 2);
    LaurentPoly::from_terms([
        (Monomial::new(1, 0, i), half.clone()),
        (Monomial::new(0, 1, -i), half),
    ])
}

/// The finite q-Pochhammer symbol `(base; ratio)_n = prod_{j=0}^{n-1} (1 - base * ratio^j)`.
///
/// The first argument is the shifted base `a`, the second the ratio, so
/// `q_pochhammer(q^2, q^2, n)` is `(q^2; q^2)_n`.
pub fn q_pochhammer(base: Monomial, ratio: Monomial, n: u32) -> LaurentPoly {
    let mut result = LaurentPoly::one();
    let mut power = Monomial::one();
    for _ in 0..n {
        let factor = LaurentPoly::from_terms([
            (Monomial::one(), Rational::one()),
            (base.mul(&power), Rational::from(-1i64)),
        ]);
        result = &result * &factor;
        power = power.mul(&ratio);
    }
    result
}

/// The product `w_lo * w_{lo+1} * ... * w_hi`; the empty product 1 when `hi < lo`.
pub fn weight_run(lo: i64, hi: i64) -> LaurentPoly {
    let mut result = LaurentPoly::one();
    let mut i = lo;
    while i <= hi {
        result = &result * &step_weight(i);
        i += 1;
    }
    result
}

/// A symbolic finite q-Pochhammer factor `(base; ratio)_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QPochhammer {
    pub base: Monomial,
    pub ratio: Monomial,
    pub count: u32,
}

impl QPochhammer {
    pub fn new(base: Monomial, ratio: Monomial, count: u32) -> Self {
        QPochhammer { base, ratio, count }
    }

    pub fn expand(&self) -> LaurentPoly {
        q_pochhammer(self.base, self.ratio, self.count)
    }
}

fn write_q_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    debug_assert!(m.x_exp() == 0 && m.y_exp() == 0);
    match m.q_exp() {
        0 => write!(f, "1"),
        1 => write!(f, "q"),
        e => write!(f, "q^{}", e),
    }
}

impl fmt::Display for QPochhammer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_q_monomial(f, &self.base)?;
        write!(f, "; ")?;
        write_q_monomial(f, &self.ratio)?;
        write!(f, ")_{}", self.count)
    }
}
